#include "oracles.hpp"
#include "unicell/formulas.hpp"
#include "unicell/series.hpp"

#include <doctest.h>

#include <random>

using namespace unicell;

namespace {

const PlanarCensus& census(int e) {
  static std::map<int, PlanarCensus> cache;
  auto it = cache.find(e);
  if (it == cache.end()) it = cache.emplace(e, planar_census(e)).first;
  return it->second;
}

Series t_poly(int cap, std::initializer_list<std::pair<int, long>> terms) {
  Series s(first_variable, cap);
  for (auto [i, c] : terms) s.set(i, 0, c);
  return s;
}

PlanarCensus random_census(int max_edges, std::mt19937& rng) {
  std::uniform_int_distribution<int> dist(-50, 50);
  PlanarCensus c;
  c.max_edges = max_edges;
  for (int q = 1; q <= max_edges + 1; ++q)
    for (int r = 1; q + r - 2 <= max_edges; ++r) c.table.set({q, r}, dist(rng));
  return c;
}

}  // namespace

TEST_CASE("series arithmetic") {
  Series one_plus = t_poly(4, {{0, 1}, {1, 1}});
  Series one_minus = t_poly(4, {{0, 1}, {1, -1}});
  CHECK(one_plus * one_minus == t_poly(4, {{0, 1}, {2, -1}}));
  CHECK((one_plus + one_minus).coeff(0, 0) == 2);
  CHECK((one_plus - one_minus).coeff(1, 0) == 2);

  Series half = Series::monomial(first_variable, 6, 1, 0, ExactRational(1, 2)).exp();
  for (int k = 0; k <= 6; ++k) CHECK(half.coeff(k, 0) == ExactRational(1) / (oracle::factorial(k) << k));

  Series e = Series::monomial(first_variable, 6, 1, 0).exp();
  Series de = e.derivative_x();
  CHECK(de.valid() == 5);
  CHECK(de == e.with_cap(6).derivative_x());
  for (int k = 0; k <= 5; ++k) CHECK(de.coeff(k, 0) == e.coeff(k, 0));

  CHECK_THROWS_AS(one_plus.exp(), std::invalid_argument);
  CHECK_THROWS_AS(one_plus + Series(total_degree, 4), std::invalid_argument);
  CHECK_THROWS_AS(one_plus + Series(first_variable, 3), std::invalid_argument);
}

TEST_CASE("valid degree through products") {
  Series a = Series::monomial(total_degree, 6, 1, 0) + Series::constant(total_degree, 6, 1);
  a.limit_valid(3);
  Series b = Series::monomial(total_degree, 6, 0, 2);
  CHECK((a * b).valid() == 5);
  CHECK((a * a).valid() == 3);
  CHECK((a + b).valid() == 3);
  CHECK(a.derivative_y().valid() == 2);
  CHECK(b.order() == 2);
  CHECK(Series(total_degree, 6).order() == 7);
  CHECK(b.first_nonzero(1) == std::nullopt);
  CHECK(b.first_nonzero(2) == std::optional<Series::Key>({0, 2}));
}

TEST_CASE("P coefficients match the map oracle") {
  Series P = p_series(census(4), 6);
  CHECK(P.coeff(1, 1) == 1);
  for (int e = 1; e <= 4; ++e)
    for (const auto& [vf, count] : oracle::rooted_maps_by_vertices_faces(e)) {
      auto [v, f] = vf;
      if (v + f == e + 2) CHECK(P.coeff(v, f) == count);
    }
  CHECK_THROWS_AS(p_series(census(3), 6), std::out_of_range);
}

TEST_CASE("quartic equation") {
  Series P5 = p_series(census(3), 5);
  CHECK(check_algebraic_P(P5, 5).pass);
  Series P = p_series(census(5), 7);
  CHECK(algebraic_P_residual(P).valid() == 7);
  CHECK(check_algebraic_P(P, 7).pass);
  Series bad = P;
  bad.add(2, 3, 1);
  Verdict v = check_algebraic_P(bad, 7);
  CHECK_FALSE(v.pass);
  CHECK(v.counterexample.has_value());
  Series shallow = P;
  shallow.limit_valid(4);
  CHECK_THROWS_AS(check_algebraic_P(shallow, 7), std::out_of_range);
}

TEST_CASE("Q and U coefficients") {
  Series Q = q_from_p(census(4), 4);
  CHECK(Q.coeff(0, 1) == 1);
  CHECK(Q.coeff(1, 1) == 1);
  CHECK(Q.coeff(1, 2) == 1);
  CHECK(Q.coeff(2, 2) == ExactRational(5, 6));
  CHECK_THROWS_AS(q_from_p(census(3), 4), std::out_of_range);

  Series U = u_from_q(Q, 4);
  auto eta = oracle::vertex_profile(4, false);
  for (int n = 0; n <= 4; ++n)
    for (int q = 1; q <= n + 1; ++q) {
      oracle::Int un = 0;
      for (const auto& [key, value] : eta)
        if (key.first == n) un += value * oracle::surjections(key.second, q);
      CHECK(U.coeff(n, q) == ExactRational(un) / ExactRational(oracle::factorial(2 * n)));
    }
  CHECK_THROWS_AS(u_from_q(p_series(census(2), 3), 3), std::invalid_argument);
}

TEST_CASE("delta operators commute") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dist(-9, 9);
  Series F(first_variable, 5);
  for (int i = 0; i <= 5; ++i)
    for (int j = 0; j <= 4; ++j) F.set(i, j, dist(rng));
  CHECK(delta_t(delta_w(F)) == delta_w(delta_t(F)));
  Series w = Series::monomial(first_variable, 5, 0, 2);
  CHECK(delta_w(w) == Series::monomial(first_variable, 5, 0, 2, 2) + Series::monomial(first_variable, 5, 0, 3, 3));
  CHECK(delta_t(Series::monomial(first_variable, 5, 3, 1)) == Series::monomial(first_variable, 5, 3, 1, 3));
}

TEST_CASE("partial differential equation for Q") {
  Series Q = q_from_p(census(6), 6);
  CHECK(q_pde_residual(Q).valid() == 4);
  CHECK(check_q_pde(Q, 4).pass);
  CHECK_THROWS_AS(check_q_pde(Q, 5), std::out_of_range);
  Series bad = Q;
  bad.add(3, 2, ExactRational(1, 7));
  CHECK_FALSE(check_q_pde(bad, 4).pass);
}

TEST_CASE("coefficient identity for hat P") {
  const PlanarCensus& c = census(7);
  CHECK(check_rec_hP(c, 4).pass);
  HatP hp = hat_p(c);
  CHECK(hp(3, 1) == ExactRational(1, 2));
  CHECK(hp(12, 1) == ExactRational(1) / ExactRational(oracle::factorial(11)));
  CHECK(hp(0, 3) == 0);
  CHECK(rec_hP_value(hp, -1, -2) == 0);
  CHECK(rec_hP_value(hp, 3, -2) == 0);
  for (int q = -3; q <= -2; ++q)
    for (int r = -4; r <= 3; ++r) CHECK(rec_hP_value(hp, q, r) == 0);
  CHECK_THROWS_AS(check_rec_hP(census(6), 4), std::out_of_range);

  PlanarCensus bad = c;
  bad.table.set({3, 3}, c.count(3, 3) + 1);
  CHECK_FALSE(check_rec_hP(bad, 4).pass);
}

TEST_CASE("A combination") {
  Series P = p_series(census(6), 8);
  Series A = a_combination(P);
  CHECK(A.valid() == 6);
  CHECK(check_A_combination(P, 6).pass);
  CHECK_THROWS_AS(check_A_combination(P, 7), std::out_of_range);
  Series bad = P;
  bad.add(3, 2, 1);
  CHECK_FALSE(check_A_combination(bad, 6).pass);
}

TEST_CASE("A coefficients are multiples of the hat P identity") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    PlanarCensus c = random_census(6, rng);
    Series A = a_combination(p_series(c, 8));
    HatP hp = hat_p(c);
    int checked = 0;
    for (int q = -1; q <= A.valid(); ++q)
      for (int r = -1; q + r + 3 <= A.valid(); ++r) {
        if (q + r < -1) continue;
        if (q + 2 + r + 3 > c.max_edges + 2) continue;
        CHECK(A.coeff(q + 2, r + 1) == a_to_rec_factor(q, r) * rec_hP_value(hp, q, r));
        ++checked;
      }
    CHECK(checked > 10);
  }
  CHECK_THROWS_AS(a_to_rec_factor(-2, 3), std::invalid_argument);
  CHECK(a_to_rec_factor(0, 0) == 4 * 6 / 2);
}

TEST_CASE("five-term identity agrees with Ledoux") {
  auto profile = oracle::vertex_profile(5, false);
  CountTable eta;
  for (const auto& [key, value] : profile) eta.set({key.first, key.second}, value);
  CHECK(check_qfd(eta, 5).pass);
  for (int n = 0; n <= 5; ++n) CHECK(qfd_holds_at(eta, n));
  for (int n = 2; n <= 5; ++n) CHECK(qfd_holds_at(eta, n) == ledoux_holds_at(eta, n));
  CountTable moved = eta;
  moved.set({4, 1}, eta.get({4, 1}) + 1);
  moved.set({4, 2}, eta.get({4, 2}) - 1);
  CHECK_FALSE(qfd_holds_at(moved, 4));
  CHECK_FALSE(ledoux_holds_at(moved, 4));
  CHECK(v_hat(eta, 1) == std::vector<ExactRational>{0, ExactRational(1, 2), ExactRational(1, 2)});
}

TEST_CASE("operator on U vanishes") {
  Series U = u_from_q(q_from_p(census(6), 6), 6);
  Series r = apply_recurrence_operator(qfd_operator(), U);
  CHECK(r.valid() == 6);
  CHECK(r.first_nonzero(r.valid()) == std::nullopt);
  Series bad = U;
  bad.add(4, 2, 1);
  CHECK(apply_recurrence_operator(qfd_operator(), bad).first_nonzero(6).has_value());
}

TEST_CASE("binomial basis and series form of the operator agree") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> dist(-20, 20);
  for (int trial = 0; trial < 5; ++trial) {
    std::map<std::pair<int, int>, ExactRational> R;
    Series F(first_variable, 6);
    for (int m = 0; m <= 6; ++m)
      for (int q = 0; q <= 4; ++q) {
        ExactRational v(dist(rng), 1 + (m + q) % 3);
        v.canonicalize();
        R[{m, q}] = v;
        F.set(m, q, v);
      }
    Series S = apply_recurrence_operator(qfd_operator(), F);
    for (int n = 0; n <= 6; ++n) {
      auto out = apply_recurrence_in_binomial_basis(qfd_operator(), R, n);
      for (int q = 0; q <= 10; ++q) {
        auto it = out.find(q);
        CHECK(S.coeff(n, q) == (it == out.end() ? ExactRational(0) : it->second));
      }
    }
  }
}
