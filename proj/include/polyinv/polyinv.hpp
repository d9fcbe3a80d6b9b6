#pragma once

// Umbrella header for the whole library.

#include "polyinv/corpus.hpp"
#include "polyinv/inversion.hpp"
#include "polyinv/mapfile.hpp"
#include "polyinv/multi_index.hpp"
#include "polyinv/nilpotency.hpp"
#include "polyinv/poly.hpp"
#include "polyinv/poly_map.hpp"
#include "polyinv/rational.hpp"
#include "polyinv/suite.hpp"
#include "polyinv/trees.hpp"
