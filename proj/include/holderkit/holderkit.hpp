#pragma once

// Umbrella header: bounds from the Hoelder and Cauchy-Schwarz inequalities
// on finite discrete measure spaces, product-preserving transforms, the
// two-piece counterexample family, and the randomized violation search.

#include "holderkit/bounds.hpp"
#include "holderkit/errors.hpp"
#include "holderkit/family.hpp"
#include "holderkit/json_io.hpp"
#include "holderkit/measure.hpp"
#include "holderkit/rng.hpp"
#include "holderkit/search.hpp"
#include "holderkit/tolerances.hpp"
#include "holderkit/transforms.hpp"
