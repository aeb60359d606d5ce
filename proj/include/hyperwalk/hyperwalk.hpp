// hyperwalk.hpp
// Continuous-time quantum walk on subsets of {0,...,L} driven by the Laplacian
// sum_k (I - Xi_k). Umbrella header.

#pragma once

#include "hyperwalk/combinatorics.hpp"
#include "hyperwalk/evolution.hpp"
#include "hyperwalk/graph.hpp"
#include "hyperwalk/io.hpp"
#include "hyperwalk/measure.hpp"
#include "hyperwalk/operators.hpp"
#include "hyperwalk/spectral.hpp"
#include "hyperwalk/state.hpp"
#include "hyperwalk/subset.hpp"
