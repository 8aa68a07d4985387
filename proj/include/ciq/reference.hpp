#pragma once
// Serial reference enumerators, deliberately simple and slow. The
// OpenMP kernels in ciq/search.hpp are validated against these (and the
// benchmark tool compares their running times).

#include "ciq/search.hpp"

namespace ciq::reference {

// Ground truth at order <= 3: every table times every map, checked
// extensionally through check_left_ci. No pruning of any kind.
std::vector<CiStructure> enumerate_oracle(int n);

// Straightforward recursive version of the propagation search: guesses
// jr(0), row 0, jr(1), row 1, ... in order, recomputes the forcing
// closure from scratch after every guess, and keeps only complete
// assignments that pass check_left_ci.
std::vector<CiStructure> enumerate_propagate(int n, bool prune_rows = true);

}  // namespace ciq::reference
