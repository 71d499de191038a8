#pragma once

// Branch configurations built to violate one hypothesis each.

#include "canonical24/branch.hpp"

#include <cstdint>

namespace canonical24::fixtures {

/// delta1, delta2, delta3 all vanish at u = (s : 1), v = (t : 1).
BranchConfig planted_common_point(std::uint64_t seed, const Rational& s = 2, const Rational& t = 3);

/// D1 and D2 meet at (s_a : 1, t : 1) and (s_b : 1, t : 1), two intersection
/// points over one v-coordinate.
BranchConfig planted_equal_v(std::uint64_t seed, const Rational& s_a = 1, const Rational& s_b = -2,
                             const Rational& t = 3);

/// delta3 = (u0 - c u1)(v0 alpha + v1 beta) with cubic alpha, beta, so the
/// projection of D3 to the u-line is not an isomorphism.
BranchConfig planted_d3_non_graph(std::uint64_t seed, const Rational& c = 2);

/// The first certified sample for a seed at coefficient bound 10.
BranchConfig certified(std::uint64_t seed);

}  // namespace canonical24::fixtures
