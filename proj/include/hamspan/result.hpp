#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace hamspan {

/// Why a search gave up: which stage failed and a human-readable detail.
struct Failure {
  std::string stage;
  std::string detail;
};

/// Either a value or a stage-tagged Failure.
template <class T>
class Result {
 public:
  Result(T value) : data_(std::move(value)) {}
  Result(Failure f) : data_(std::move(f)) {}

  bool ok() const { return std::holds_alternative<T>(data_); }
  explicit operator bool() const { return ok(); }

  const T& value() const& {
    if (!ok()) throw std::logic_error("Result holds failure at " + failure().stage + ": " + failure().detail);
    return std::get<T>(data_);
  }
  T&& value() && {
    if (!ok()) throw std::logic_error("Result holds failure at " + failure().stage + ": " + failure().detail);
    return std::get<T>(std::move(data_));
  }
  const T& operator*() const& { return value(); }
  const T* operator->() const { return &value(); }

  const Failure& failure() const { return std::get<Failure>(data_); }

 private:
  std::variant<T, Failure> data_;
};

}  // namespace hamspan
