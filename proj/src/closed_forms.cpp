#include "mct/closed_forms.hpp"

#include <stdexcept>

#include "mct/errors.hpp"
#include "mct/graph.hpp"

namespace mct {

namespace {

[[noreturn]] void uncovered(const std::string& family, int a, int b) {
  throw std::logic_error(family + " closed form has no case for (" +
                         std::to_string(a) + "," + std::to_string(b) + ")");
}

bool in(int x, int lo, int hi) { return lo <= x && x <= hi; }

}  // namespace

CaseValue caterpillar_a1(int m, int l) {
  if (m < 1) throw std::invalid_argument("caterpillar needs m >= 1");
  if (l < 0) throw std::invalid_argument("caterpillar needs l >= 0");
  if (l == 0)
    throw UnsupportedCase(
        "T_{m,0} is a path; compute it with a1_by_alpha(make_caterpillar(m, 0))");
  const int half = m / 2;
  const int third = m / 3;
  if (m <= l) return {m, "m<=l"};
  if (half <= l && l < m) return {l, "floor(m/2)<=l<m"};
  if (third - 1 <= l && l <= half - 1) return {l + 1, "floor(m/3)-1<=l<=floor(m/2)-1"};
  if (l <= third - 2) return {l + 2, "l<=floor(m/3)-2"};
  uncovered("caterpillar", m, l);
}

ClosedFormPair torus_thresholds(int n, int m) {
  if (n < 3 || m < n)
    throw std::invalid_argument("torus closed form needs 3 <= n <= m");
  ClosedFormPair out;
  if (n == 3 && m == 3) {
    out.thresholds.a1 = 1;
    out.a1_case = "n=m=3";
  } else if (n == 3 && m == 4) {
    out.thresholds.a1 = 2;
    out.a1_case = "n=3,m=4";
  } else if (n == 3 && m >= 5) {
    out.thresholds.a1 = 3;
    out.a1_case = "n=3,m>=5";
  } else if (n >= 4) {
    out.thresholds.a1 = 4;
    out.a1_case = "m>=n>=4";
  } else {
    uncovered("torus a1", n, m);
  }
  if (n == 3 && m == 3) {
    out.thresholds.a1_prime = 1;
    out.a1_prime_case = "n=m=3";
  } else if (n == 3 && m >= 4) {
    out.thresholds.a1_prime = 3;
    out.a1_prime_case = "n=3,m>=4";
  } else if (n >= 4) {
    out.thresholds.a1_prime = 4;
    out.a1_prime_case = "m>=n>=4";
  } else {
    uncovered("torus a1'", n, m);
  }
  return out;
}

ClosedFormPair cylinder_thresholds(int n, int m) {
  if (n < 3 || m < 2)
    throw std::invalid_argument("cylinder closed form needs n >= 3, m >= 2");
  ClosedFormPair out;
  int& a1 = out.thresholds.a1;
  if ((n == 3 && in(m, 2, 5)) || (n == 4 && m == 2)) {
    a1 = 2;
    out.a1_case = n == 3 ? "n=3,2<=m<=5" : "n=4,m=2";
  } else if (n == 3 && m >= 6) {
    a1 = 3;
    out.a1_case = "n=3,m>=6";
  } else if (n == 4 && in(m, 3, 5)) {
    a1 = 3;
    out.a1_case = "n=4,3<=m<=5";
  } else if (n == 5 && in(m, 2, 4)) {
    a1 = 3;
    out.a1_case = "n=5,2<=m<=4";
  } else if (in(n, 6, 9) && in(m, 2, 3)) {
    a1 = 3;
    out.a1_case = "6<=n<=9,m=2,3";
  } else if (n >= 10 && m == 2) {
    a1 = 3;
    out.a1_case = "n>=10,m=2";
  } else if (n >= 4) {
    a1 = 4;
    out.a1_case = "otherwise";
  } else {
    uncovered("cylinder a1", n, m);
  }
  if (n == 3 && m == 2) {
    out.thresholds.a1_prime = 2;
    out.a1_prime_case = "n=3,m=2";
  } else if ((n == 3 && m >= 3) || (n >= 4 && m == 2)) {
    out.thresholds.a1_prime = 3;
    out.a1_prime_case = n == 3 ? "n=3,m>=3" : "n>=4,m=2";
  } else if (n >= 4 && m >= 3) {
    out.thresholds.a1_prime = 4;
    out.a1_prime_case = "n>=4,m>=3";
  } else {
    uncovered("cylinder a1'", n, m);
  }
  return out;
}

ClosedFormPair grid_thresholds(int n, int m) {
  if (n < 2 || m < n)
    throw std::invalid_argument("grid closed form needs 2 <= n <= m");
  ClosedFormPair out;
  int& a1 = out.thresholds.a1;
  if (n == 2 && in(m, 2, 5)) {
    a1 = 2;
    out.a1_case = "n=2,2<=m<=5";
  } else if (n == 3 && in(m, 3, 4)) {
    a1 = 2;
    out.a1_case = "n=3,m=3,4";
  } else if (n == 2 && m >= 6) {
    a1 = 3;
    out.a1_case = "n=2,m>=6";
  } else if (n == 3 && in(m, 5, 11)) {
    a1 = 3;
    out.a1_case = "n=3,5<=m<=11";
  } else if (n == 4 && in(m, 4, 7)) {
    a1 = 3;
    out.a1_case = "n=4,4<=m<=7";
  } else if (n == 5 && m == 5) {
    a1 = 3;
    out.a1_case = "n=m=5";
  } else if (n >= 3) {
    a1 = 4;
    out.a1_case = "otherwise";
  } else {
    uncovered("grid a1", n, m);
  }
  if (n == 2 && m == 2) {
    out.thresholds.a1_prime = 2;
    out.a1_prime_case = "n=m=2";
  } else if (n == 2 && m >= 3) {
    out.thresholds.a1_prime = 3;
    out.a1_prime_case = "n=2,m>=3";
  } else if (n >= 3) {
    out.thresholds.a1_prime = 4;
    out.a1_prime_case = "m>=n>=3";
  } else {
    uncovered("grid a1'", n, m);
  }
  return out;
}

std::pair<int, int> union_bounds(int a1_g1, int a1_g2) {
  if (a1_g1 < 1 || a1_g2 < 1)
    throw std::invalid_argument("thresholds are positive");
  return {std::max(a1_g1, a1_g2), a1_g1 + a1_g2};
}

int realization_value(int k, int l, int i) {
  if (l < 1 || l > k || i < 0 || i > l)
    throw std::invalid_argument("realization needs 1 <= l <= k, 0 <= i <= l");
  return k + i;
}

CaseValue cylinder_a1_via_domination(int n, int m) {
  if (n < 4 || m < 3)
    throw std::invalid_argument("domination pathway needs n >= 4, m >= 3");
  const Graph cylinder = cartesian_product(make_cycle(n), make_path(m));
  if (exists_deletion_set(cylinder, 2))
    throw std::logic_error("C_" + std::to_string(n) + " x P_" +
                           std::to_string(m) + " unexpectedly has a_1 <= 2");
  const Graph inner = cartesian_product(make_cycle(n), make_path(m - 2));
  if (has_dominating_set(inner, 3)) return {3, "gamma(C_n x P_{m-2})<=3"};
  return {4, "gamma(C_n x P_{m-2})>3"};
}

CaseValue grid_a1_via_domination(int n, int m) {
  if (n < 3 || m < n)
    throw std::invalid_argument("domination pathway needs 3 <= n <= m");
  const bool two = n == 3 && (m == 3 || m == 4);
  const Graph grid = cartesian_product(make_path(n), make_path(m));
  if (exists_deletion_set(grid, 2).has_value() != two)
    throw std::logic_error("P_" + std::to_string(n) + " x P_" +
                           std::to_string(m) +
                           " disagrees with the a_1 = 2 characterization");
  if (two) return {2, "n=3,m in {3,4}"};
  const Graph inner = cartesian_product(make_path(n - 2), make_path(m - 2));
  if (has_dominating_set(inner, 3)) return {3, "gamma(P_{n-2} x P_{m-2})<=3"};
  return {4, "gamma(P_{n-2} x P_{m-2})>3"};
}

}  // namespace mct
