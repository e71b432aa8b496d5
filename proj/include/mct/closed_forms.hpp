#pragma once

#include <string>
#include <utility>

#include "mct/invariants.hpp"

namespace mct {

/// A closed-form value plus the identifier of the case that produced it.
struct CaseValue {
  int value = 0;
  std::string fired_case;
};

struct ClosedFormPair {
  ThresholdPair thresholds;
  std::string a1_case;
  std::string a1_prime_case;
};

// a_1 of the caterpillar T_{m,l}. l = 0 (a path) throws UnsupportedCase;
// use a1_by_alpha on make_caterpillar(m, 0) instead.
CaseValue caterpillar_a1(int m, int l);

// C_n x C_m, 3 <= n <= m.
ClosedFormPair torus_thresholds(int n, int m);

// C_n x P_m, n >= 3, m >= 2.
ClosedFormPair cylinder_thresholds(int n, int m);

// P_n x P_m, 2 <= n <= m.
ClosedFormPair grid_thresholds(int n, int m);

// (max, sum): the range a_1 of a disjoint union can take.
std::pair<int, int> union_bounds(int a1_g1, int a1_g2);

// a_1 of T_{k,k+i} + T_{l,k+i} for 1 <= l <= k, 0 <= i <= l.
int realization_value(int k, int l, int i);

// C_n x P_m with n >= 4, m >= 3: 3 when C_n x P_{m-2} has a dominating set
// of size at most 3, else 4. Also confirms a_1 > 2 by the deletion search.
CaseValue cylinder_a1_via_domination(int n, int m);

// P_n x P_m with 3 <= n <= m: 2 for (3,3) and (3,4); otherwise 3 when
// P_{n-2} x P_{m-2} has a dominating set of size at most 3, else 4.
CaseValue grid_a1_via_domination(int n, int m);

}  // namespace mct
