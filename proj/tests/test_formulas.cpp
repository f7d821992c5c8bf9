#include "oracles.hpp"
#include "unicell/formulas.hpp"

#include <doctest.h>

using namespace unicell;

namespace {

CountTable to_table(const std::map<std::pair<int, int>, oracle::Int>& profile) {
  CountTable t;
  for (const auto& [key, value] : profile) t.set({key.first, key.second}, value);
  return t;
}

oracle::Int colored_from_profile(const std::map<std::pair<int, int>, oracle::Int>& profile, int n, int q) {
  oracle::Int sum = 0;
  for (const auto& [key, value] : profile)
    if (key.first == n) sum += value * oracle::surjections(key.second, q);
  return sum;
}

const std::map<std::pair<int, int>, oracle::Int>& orientable_profile() {
  static const auto p = oracle::vertex_profile(6, true);
  return p;
}

const std::map<std::pair<int, int>, oracle::Int>& general_profile() {
  static const auto p = oracle::vertex_profile(5, false);
  return p;
}

const PlanarCensus& census() {
  static const PlanarCensus c = planar_census(6);
  return c;
}

}  // namespace

TEST_CASE("t formula examples") {
  CHECK(t_formula(1, 1) == 1);
  CHECK(t_formula(1, 2) == 2);
  CHECK(t_formula(1, 3) == 0);
  CHECK(t_formula(2, 1) == 3);
  CHECK_THROWS_AS(t_formula(0, 1), std::invalid_argument);
}

TEST_CASE("t formula against colored profiles and tree-rooted maps") {
  for (int n = 1; n <= 6; ++n)
    for (int q = 1; q <= n + 1; ++q) CHECK(t_formula(n, q) == colored_from_profile(orientable_profile(), n, q));
  for (int n = 1; n <= 4; ++n)
    for (int q = 1; q <= n + 1; ++q) CHECK(t_formula(n, q) == oracle::tree_rooted_count(n, q));
}

TEST_CASE("one color gives every orientable gluing") {
  for (int n = 1; n <= 20; ++n) CHECK(t_formula(n, 1) == oracle::double_factorial(2 * n - 1));
}

TEST_CASE("jackson formula") {
  CHECK(jackson_formula(1, 1, 1) == 1);
  CHECK(jackson_formula(2, 1, 1) == 2);
  for (int n = 1; n <= 4; ++n)
    for (int p = 1; p <= n + 1; ++p)
      for (int q = 1; q <= n + 1; ++q) {
        CHECK(jackson_formula(n, p, q) == oracle::bipartite_colored(n, p, q));
        CHECK(bipartite_colored_count(n, p, q) == oracle::bipartite_colored(n, p, q));
      }
}

TEST_CASE("u formula") {
  CHECK(u_formula(1, 1, census()) == 2);
  CHECK(u_formula(2, 1, census()) == 12);
  for (int n = 1; n <= 5; ++n)
    for (int q = 1; q <= n + 2; ++q) CHECK(u_formula(n, q, census()) == colored_from_profile(general_profile(), n, q));
  CHECK_THROWS_AS(u_formula(5, 2, planar_census(2)), std::out_of_range);
}

TEST_CASE("u hat formula") {
  CHECK(u_hat_formula(1, 2) == 6);
  for (int n = 1; n <= 12; ++n)
    CHECK(u_hat_formula(n, 1) == oracle::double_factorial(2 * n - 1) * (oracle::Int(1) << n));
  for (int n = 1; n <= 4; ++n)
    for (int N = 1; N <= 5; ++N) {
      oracle::Int via_u = 0, direct = 0;
      for (int q = 1; q <= N; ++q) via_u += oracle::binomial(N, q) * u_formula(n, q, census());
      for (const auto& [key, value] : general_profile()) {
        oracle::Int pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), N, key.second);
        if (key.first == n) direct += value * pw;
      }
      CHECK(u_hat_formula(n, N) == via_u);
      CHECK(u_hat_formula(n, N) == direct);
    }
}

TEST_CASE("some colors and Harer-Zagier on brute profiles") {
  CountTable eps = to_table(orientable_profile());
  CHECK(some_colors_check(eps, 6, 6).pass);
  CHECK(hz_recurrence_check(eps, 6).pass);

  CountTable moved = eps;
  moved.set({5, 1}, eps.get({5, 1}) + 1);
  moved.set({5, 3}, eps.get({5, 3}) - 1);
  Verdict hz = hz_recurrence_check(moved, 6);
  CHECK_FALSE(hz.pass);
  CHECK(hz.counterexample.has_value());
  CHECK_FALSE(some_colors_check(moved, 6, 6).pass);
}

TEST_CASE("Ledoux recursion on brute profiles") {
  CountTable eta = to_table(general_profile());
  CHECK(ledoux_check(eta, 5).pass);
  for (int n = 2; n <= 5; ++n) CHECK(ledoux_holds_at(eta, n));
  CountTable moved = eta;
  moved.set({4, 1}, eta.get({4, 1}) + 1);
  moved.set({4, 2}, eta.get({4, 2}) - 1);
  CHECK_FALSE(ledoux_check(moved, 5).pass);
  CHECK_FALSE(ledoux_holds_at(moved, 4));
}

TEST_CASE("incomplete profiles are rejected") {
  CountTable eps = to_table(orientable_profile());
  CountTable partial = eps;
  partial.set({4, 1}, 0);
  CHECK_THROWS_AS(require_complete_profile(partial, 4, true), std::invalid_argument);
  CHECK_THROWS_AS(hz_recurrence_check(partial, 5), std::invalid_argument);
  CHECK_NOTHROW(require_complete_profile(eps, 6, true));
  CHECK_THROWS_AS(require_complete_profile(eps, 7, true), std::invalid_argument);
  CHECK_THROWS_AS(require_complete_profile(eps, 3, false), std::invalid_argument);
  CHECK_THROWS_AS(ledoux_check(eps, 3), std::invalid_argument);
}
