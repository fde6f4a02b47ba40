#pragma once

// Umbrella header.

#include "binomial.hpp"
#include "edge_list.hpp"
#include "extractor.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "greedy.hpp"
#include "oracle.hpp"
#include "parallel.hpp"
#include "rational.hpp"
#include "reducer.hpp"
#include "rng.hpp"
#include "stats.hpp"
