#pragma once

// Umbrella header: analytic lower bounds on the concurrence of tripartite
// states from trace norms of generalized partial transpositions.

#include "bounds.hpp"
#include "complex_matrix.hpp"
#include "concurrence.hpp"
#include "eigen.hpp"
#include "gpt.hpp"
#include "io.hpp"
#include "state.hpp"
#include "states.hpp"
#include "tolerances.hpp"
#include "verify.hpp"
