#include "unicell/formulas.hpp"

#include <stdexcept>
#include <string>

namespace unicell {

namespace {

std::string at(int n, int v) { return "n=" + std::to_string(n) + ", v=" + std::to_string(v); }

ExactInteger entry(const CountTable& table, int n, int v) {
  if (n < 0) return 0;
  return table.get({n, v});
}

int max_vertices(const CountTable& table) {
  int best = 0;
  for (const auto& [key, value] : table.entries()) best = std::max(best, key[1]);
  return best;
}

}  // namespace

ExactInteger t_formula(int n, int q) {
  if (n < 1 || q < 1) throw std::invalid_argument("t_formula needs n, q >= 1");
  return power(2, q - 1) * binomial(n, q - 1) * double_factorial(2 * n - 1);
}

ExactInteger jackson_formula(int n, int p, int q) {
  if (n < 1 || p < 1 || q < 1) throw std::invalid_argument("jackson_formula needs n, p, q >= 1");
  if (p + q > n + 1) return 0;
  return factorial(n) * multinomial(n - 1, {p - 1, q - 1, n - p - q + 1});
}

ExactInteger u_formula(int n, int q, const PlanarCensus& census) {
  if (n < 1 || q < 1) throw std::invalid_argument("u_formula needs n, q >= 1");
  ExactRational sum = 0;
  for (int r = 1; r <= n - q + 2; ++r) {
    ExactRational term = factorial(q) * factorial(r) * census.count(q, r);
    term /= power(2, r - 1);
    term *= binomial(2 * n, 2 * q + 2 * r - 4) * double_factorial(2 * n - 2 * q - 2 * r + 3);
    sum += term;
  }
  if (!is_integer(sum)) throw std::logic_error("u_formula produced a non-integer");
  return sum.get_num();
}

ExactInteger u_hat_formula(int n, int N) {
  if (n < 1 || N < 1) throw std::invalid_argument("u_hat_formula needs n, N >= 1");
  ExactRational first = 0;
  const ExactRational top(2 * n - 1, 2);
  const ExactRational half_colors(N - 1, 2);
  for (int k = 0; k <= n; ++k) {
    ExactRational inner = 0;
    for (int r = 0; r <= n; ++r) {
      inner += generalized_binomial(top, n - r) * generalized_binomial(k + r - 1, k) *
               generalized_binomial(half_colors, r);
    }
    first += ExactRational(power(2, 2 * n - k)) * inner;
  }
  first *= factorial(n);
  ExactInteger second = 0;
  for (int q = 1; q <= N - 1; ++q) second += power(2, q - 1) * binomial(N - 1, q) * binomial(n, q - 1);
  ExactRational total = first + ExactRational(double_factorial(2 * n - 1) * second);
  if (!is_integer(total)) throw std::logic_error("u_hat_formula produced a non-integer");
  return total.get_num();
}

ExactInteger bipartite_colored_count(int n, int p, int q) {
  if (n < 1 || p < 1 || q < 1) throw std::invalid_argument("bipartite_colored_count needs n, p, q >= 1");
  ExactInteger total = 0;
  for_each_unicellular(n, true, [&](const PolygonGluing& g) {
    const GluedSkeleton s = glue_polygon(g);
    std::vector<int> parity(s.vertex_count, -1);
    for (int c = 0; c < 2 * n; ++c) {
      int& p0 = parity[s.vertex_of_corner[c]];
      if (p0 == -1) p0 = c % 2;
      else if (p0 != c % 2) return;
    }
    int black = 0;
    for (int v : parity) black += v == 0;
    total += surjection_count(black, p) * surjection_count(s.vertex_count - black, q);
  });
  return total;
}

void require_complete_profile(const CountTable& table, int n_max, bool orientable_only) {
  std::vector<ExactInteger> rows(std::max(n_max, 0) + 1);
  for (const auto& [key, value] : table.entries()) {
    if (key.size() != 2) throw std::invalid_argument("profile keys must be (n, v)");
    if (key[0] >= 0 && key[0] <= n_max) rows[key[0]] += value;
  }
  for (int n = 0; n <= n_max; ++n) {
    ExactInteger expected = double_factorial(2 * n - 1);
    if (!orientable_only) expected *= power(2, n);
    if (rows[n] != expected)
      throw std::invalid_argument("profile row n=" + std::to_string(n) + " is incomplete");
  }
}

Verdict some_colors_check(const CountTable& eps, int n_max, int N_max) {
  require_complete_profile(eps, n_max, true);
  const std::string range = "1<=n<=" + std::to_string(n_max) + ", 1<=N<=" + std::to_string(N_max);
  const int vmax = max_vertices(eps);
  for (int n = 1; n <= n_max; ++n) {
    for (int N = 1; N <= N_max; ++N) {
      ExactInteger lhs = 0;
      for (int v = 1; v <= vmax; ++v) lhs += entry(eps, n, v) * power(N, v);
      ExactInteger rhs = 0;
      for (int q = 1; q <= N; ++q) rhs += binomial(N, q) * t_formula(n, q);
      if (lhs != rhs)
        return Verdict::fail("some-colors", range,
                             "n=" + std::to_string(n) + ", N=" + std::to_string(N) + ": " + to_decimal(lhs) +
                                 " != " + to_decimal(rhs));
    }
  }
  return Verdict::ok("some-colors", range);
}

Verdict hz_recurrence_check(const CountTable& eps, int n_max) {
  require_complete_profile(eps, n_max, true);
  const std::string range = "2<=n<=" + std::to_string(n_max);
  for (int n = 2; n <= n_max; ++n) {
    for (int v = 0; v <= n + 2; ++v) {
      ExactInteger lhs = (n + 1) * entry(eps, n, v);
      ExactInteger rhs = (4 * n - 2) * entry(eps, n - 1, v - 1) +
                         ExactInteger((n - 1) * (2 * n - 1) * (2 * n - 3)) * entry(eps, n - 2, v);
      if (lhs != rhs)
        return Verdict::fail("harer-zagier", range, at(n, v) + ": " + to_decimal(lhs) + " != " + to_decimal(rhs));
    }
  }
  return Verdict::ok("harer-zagier", range);
}

namespace {

ExactInteger ledoux_residual(const CountTable& eta, int n, int v) {
  auto E = [&](int m, int u) { return entry(eta, m, u); };
  const ExactInteger a = 2 * n - 3;
  const ExactInteger falling3 = a * (2 * n - 4) * (2 * n - 5);
  const ExactInteger falling5 = falling3 * (2 * n - 6) * (2 * n - 7);
  ExactInteger rhs = (4 * n - 1) * (2 * E(n - 1, v - 1) - E(n - 1, v));
  rhs += a * ((10 * n * n - 9 * n) * E(n - 2, v) + 8 * E(n - 2, v - 1) - 8 * E(n - 2, v - 2));
  rhs += 5 * falling3 * (E(n - 3, v) - 2 * E(n - 3, v - 1));
  rhs -= 2 * falling5 * E(n - 4, v);
  return (n + 1) * E(n, v) - rhs;
}

}  // namespace

bool ledoux_holds_at(const CountTable& eta, int n) {
  for (int v = 0; v <= n + 2; ++v)
    if (ledoux_residual(eta, n, v) != 0) return false;
  return true;
}

Verdict ledoux_check(const CountTable& eta, int n_max) {
  require_complete_profile(eta, n_max, false);
  const std::string range = "2<=n<=" + std::to_string(n_max);
  for (int n = 2; n <= n_max; ++n) {
    for (int v = 0; v <= n + 2; ++v) {
      ExactInteger residual = ledoux_residual(eta, n, v);
      if (residual != 0) return Verdict::fail("ledoux", range, at(n, v) + ": residual " + to_decimal(residual));
    }
  }
  return Verdict::ok("ledoux", range);
}

}  // namespace unicell
