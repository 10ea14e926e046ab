#pragma once

#include "pzf/graph.hpp"
#include "pzf/rational.hpp"

namespace pzf {

// Published expected-propagation-time and l-round formulas for paths and
// cycles, used as independent oracles against the exact engine.

// n/2 + 1/3 (n even), n/2 + 1/2 (n odd); n > 2.
Rat ept_cycle(int n);
// n/2 + 2/3 (n even), n/2 + 1/2 (n odd); n > 2. The optimum starts at the
// vertex ceil(n/2) in 1-based numbering.
Rat ept_path(int n);

// 0 below floor(n/2); then 1 - (1/4)^(l - n/2 + 1) for even n and
// 1 - (3/4)(1/4)^(l - (n-1)/2) for odd n.
Rat lround_cycle(int n, int rounds);
// 0 below floor(n/2); then 1 - (1/2)(1/4)^(l - n/2) for even n, odd as cycle.
Rat lround_path(int n, int rounds);

// Least l with the corresponding l-round probability >= alpha; derived by
// inverting the formulas above with exact comparisons.
int confidence_cycle(int n, const Rat& alpha);
int confidence_path(int n, const Rat& alpha);

// ceil(sqrt(2n) - 1/2) in exact integer arithmetic: the PSD throttling
// number of P_n (n >= 2) and C_n (n >= 4).
int psd_throttle_path_cycle(int n, Family kind);

}  // namespace pzf
