#pragma once

#include "hamspan/bits.hpp"
#include "hamspan/certificate.hpp"
#include "hamspan/experiment.hpp"
#include "hamspan/gf2.hpp"
#include "hamspan/graph.hpp"
#include "hamspan/graph_io.hpp"
#include "hamspan/hamfinder.hpp"
#include "hamspan/linkage.hpp"
#include "hamspan/model.hpp"
#include "hamspan/properties.hpp"
#include "hamspan/refutation.hpp"
#include "hamspan/result.hpp"
#include "hamspan/rng.hpp"
#include "hamspan/spanning.hpp"
#include "hamspan/switcher.hpp"
