#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hamspan {

/// Dense fixed-length bit vector indexed 0..size()-1.
///
/// The Tag parameter separates index universes at the type level: a set of
/// vertices and a set of edges never mix, even when both happen to have the
/// same length.
template <class Tag>
class IndexSet {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

  IndexSet() = default;
  explicit IndexSet(std::size_t size) : size_(size), words_((size + word_bits - 1) / word_bits, 0) {}

  static IndexSet full(std::size_t size) {
    IndexSet s(size);
    for (auto& w : s.words_) w = ~word_type{0};
    s.trim();
    return s;
  }

  template <class Range>
  static IndexSet of(std::size_t size, const Range& ids) {
    IndexSet s(size);
    for (auto i : ids) s.insert(static_cast<std::size_t>(i));
    return s;
  }

  std::size_t universe() const { return size_; }

  bool contains(std::size_t i) const {
    check_index(i);
    return (words_[i / word_bits] >> (i % word_bits)) & 1u;
  }
  void insert(std::size_t i) {
    check_index(i);
    words_[i / word_bits] |= word_type{1} << (i % word_bits);
  }
  void erase(std::size_t i) {
    check_index(i);
    words_[i / word_bits] &= ~(word_type{1} << (i % word_bits));
  }
  void flip(std::size_t i) {
    check_index(i);
    words_[i / word_bits] ^= word_type{1} << (i % word_bits);
  }
  void assign(std::size_t i, bool value) { value ? insert(i) : erase(i); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  /// Lowest member >= from, or universe() when there is none.
  std::size_t next(std::size_t from = 0) const {
    if (from >= size_) return size_;
    std::size_t wi = from / word_bits;
    word_type w = words_[wi] & (~word_type{0} << (from % word_bits));
    while (true) {
      if (w) return wi * word_bits + static_cast<std::size_t>(std::countr_zero(w));
      if (++wi == words_.size()) return size_;
      w = words_[wi];
    }
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::size_t i = next(0); i < size_; i = next(i + 1)) out.push_back(i);
    return out;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      word_type w = words_[wi];
      while (w) {
        f(wi * word_bits + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  IndexSet& operator^=(const IndexSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  IndexSet& operator&=(const IndexSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  IndexSet& operator|=(const IndexSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  /// Removes every member of o.
  IndexSet& operator-=(const IndexSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend IndexSet operator^(IndexSet a, const IndexSet& b) { return a ^= b; }
  friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }
  friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
  friend IndexSet operator-(IndexSet a, const IndexSet& b) { return a -= b; }

  IndexSet complement() const {
    IndexSet c(size_);
    for (std::size_t i = 0; i < words_.size(); ++i) c.words_[i] = ~words_[i];
    c.trim();
    return c;
  }

  /// popcount(a AND b) without materializing the intersection.
  std::size_t intersection_count(const IndexSet& o) const {
    check_same(o);
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    return c;
  }

  bool intersects(const IndexSet& o) const {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  bool subset_of(const IndexSet& o) const {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  const std::vector<word_type>& words() const { return words_; }
  std::vector<word_type>& words() { return words_; }

  friend bool operator==(const IndexSet& a, const IndexSet& b) {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }
  friend bool operator<(const IndexSet& a, const IndexSet& b) {
    if (a.size_ != b.size_) return a.size_ < b.size_;
    return a.words_ < b.words_;
  }

  void check_same(const IndexSet& o) const {
    if (o.size_ != size_)
      throw std::invalid_argument("dimension mismatch: " + std::to_string(size_) + " vs " +
                                  std::to_string(o.size_));
  }

 private:
  void check_index(std::size_t i) const {
    if (i >= size_)
      throw std::out_of_range("index " + std::to_string(i) + " outside universe of size " +
                              std::to_string(size_));
  }
  void trim() {
    if (size_ % word_bits && !words_.empty())
      words_.back() &= (word_type{1} << (size_ % word_bits)) - 1;
  }

  std::size_t size_ = 0;
  std::vector<word_type> words_;
};

}  // namespace hamspan
