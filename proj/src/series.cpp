#include "unicell/series.hpp"

#include "unicell/formulas.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>

namespace unicell {

TruncatedBivariateSeries::TruncatedBivariateSeries(Grading grading, int cap)
    : grading_(grading), cap_(cap), valid_(cap) {
  if (grading.wx < 0 || grading.wy < 0 || grading.wx + grading.wy == 0)
    throw std::invalid_argument("grading weights must be nonnegative and not both zero");
  if (cap < 0) throw std::invalid_argument("series cap must be nonnegative");
}

Series Series::constant(Grading grading, int cap, const ExactRational& c) { return monomial(grading, cap, 0, 0, c); }

Series Series::monomial(Grading grading, int cap, int i, int j, const ExactRational& c) {
  Series s(grading, cap);
  s.set(i, j, c);
  return s;
}

void Series::limit_valid(int degree) { valid_ = std::min(valid_, degree); }

Series Series::with_cap(int cap) const {
  Series s(grading_, cap);
  for (const auto& [key, c] : coeffs_) s.set(key.first, key.second, c);
  s.valid_ = std::min(valid_, cap);
  return s;
}

ExactRational Series::coeff(int i, int j) const {
  auto it = coeffs_.find({i, j});
  return it == coeffs_.end() ? ExactRational(0) : it->second;
}

void Series::set(int i, int j, const ExactRational& c) {
  if (i < 0 || j < 0) throw std::invalid_argument("negative exponent");
  if (grading_.degree(i, j) > cap_) return;
  if (c == 0) coeffs_.erase({i, j});
  else coeffs_[{i, j}] = c;
}

void Series::add(int i, int j, const ExactRational& c) { set(i, j, coeff(i, j) + c); }

int Series::order() const {
  int best = cap_ + 1;
  for (const auto& [key, c] : coeffs_) best = std::min(best, grading_.degree(key.first, key.second));
  return best;
}

void Series::require_compatible(const Series& other) const {
  if (!(grading_ == other.grading_) || cap_ != other.cap_)
    throw std::invalid_argument("series have different gradings or caps");
}

Series Series::operator+(const Series& other) const {
  require_compatible(other);
  Series s = *this;
  for (const auto& [key, c] : other.coeffs_) s.add(key.first, key.second, c);
  s.valid_ = std::min(valid_, other.valid_);
  return s;
}

Series Series::operator-(const Series& other) const { return *this + other.scaled(-1); }

Series Series::operator*(const Series& other) const {
  require_compatible(other);
  Series s(grading_, cap_);
  for (const auto& [ka, ca] : coeffs_) {
    const int da = grading_.degree(ka.first, ka.second);
    for (const auto& [kb, cb] : other.coeffs_) {
      if (da + grading_.degree(kb.first, kb.second) > cap_) continue;
      s.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
    }
  }
  const int oa = std::min(order(), valid_ + 1);
  const int ob = std::min(other.order(), other.valid_ + 1);
  s.valid_ = std::min({cap_, valid_ + ob, other.valid_ + oa});
  return s;
}

Series Series::scaled(const ExactRational& c) const {
  Series s(grading_, cap_);
  for (const auto& [key, v] : coeffs_) s.set(key.first, key.second, v * c);
  s.valid_ = valid_;
  return s;
}

Series Series::derivative_x() const {
  Series s(grading_, cap_);
  for (const auto& [key, c] : coeffs_)
    if (key.first > 0) s.set(key.first - 1, key.second, c * key.first);
  s.valid_ = valid_ - grading_.wx;
  return s;
}

Series Series::derivative_y() const {
  Series s(grading_, cap_);
  for (const auto& [key, c] : coeffs_)
    if (key.second > 0) s.set(key.first, key.second - 1, c * key.second);
  s.valid_ = valid_ - grading_.wy;
  return s;
}

Series Series::rescaled(const ExactRational& cx, const ExactRational& cy) const {
  Series s(grading_, cap_);
  for (const auto& [key, c] : coeffs_) {
    ExactRational v = c;
    for (int k = 0; k < key.first; ++k) v *= cx;
    for (int k = 0; k < key.second; ++k) v *= cy;
    s.set(key.first, key.second, v);
  }
  s.valid_ = valid_;
  return s;
}

Series Series::exp() const {
  for (const auto& [key, c] : coeffs_)
    if (grading_.degree(key.first, key.second) <= 0)
      throw std::invalid_argument("exp needs a series without terms of degree 0");
  Series result = constant(grading_, cap_, 1);
  Series term = result;
  for (int k = 1; k <= cap_; ++k) {
    term = (term * *this).scaled(ExactRational(1, k));
    result = result + term;
  }
  return result;
}

std::optional<Series::Key> Series::first_nonzero(int through) const {
  std::optional<Key> best;
  int best_degree = 0;
  for (const auto& [key, c] : coeffs_) {
    const int d = grading_.degree(key.first, key.second);
    if (d > through) continue;
    if (!best || d < best_degree) {
      best = key;
      best_degree = d;
    }
  }
  return best;
}

namespace {

struct Term {
  int i;
  int j;
  long c;
};

Series poly(Grading g, int cap, std::initializer_list<Term> terms) {
  Series s(g, cap);
  for (const Term& t : terms) s.add(t.i, t.j, ExactRational(t.c));
  return s;
}

Verdict residual_verdict(const std::string& name, const std::string& unit, const Series& residual, int through) {
  const std::string range = unit + " <= " + std::to_string(through);
  if (auto key = residual.first_nonzero(through)) {
    return Verdict::fail(name, range,
                         "coefficient (" + std::to_string(key->first) + ", " + std::to_string(key->second) +
                             ") = " + to_decimal(residual.coeff(key->first, key->second)));
  }
  return Verdict::ok(name, range);
}

void require_trusted(const Series& residual, int D) {
  if (D > residual.valid()) throw std::out_of_range("requested degree exceeds trusted degree");
}

}  // namespace

Series p_series(const PlanarCensus& census, int D) {
  if (D < 0) throw std::invalid_argument("negative degree");
  if (D > census.max_edges + 2) throw std::out_of_range("planar census does not reach the requested degree");
  Series s(total_degree, D);
  for (int q = 1; q <= D; ++q)
    for (int r = 1; q + r <= D; ++r) s.set(q, r, census.count(q, r));
  return s;
}

Series algebraic_P_residual(const Series& P) {
  const Grading g = P.grading();
  const int D = P.cap();
  const Series P2 = P * P;
  const Series P3 = P2 * P;
  const Series P4 = P3 * P;
  Series r = P4.scaled(27);
  r = r - poly(g, D, {{1, 0, 36}, {0, 1, 36}, {0, 0, -1}}) * P3;
  r = r + poly(g, D,
               {{2, 1, 24}, {1, 2, 24}, {3, 0, -16}, {0, 3, -16}, {2, 0, 8}, {0, 2, 8}, {1, 1, 46}, {1, 0, -1},
                {0, 1, -1}}) *
              P2;
  r = r + poly(g, D, {{3, 1, 16}, {1, 3, 16}, {2, 2, -64}, {2, 1, -8}, {1, 2, -8}, {1, 1, 1}}) * P;
  r = r - poly(g, D, {{4, 2, 16}, {2, 4, 16}, {3, 3, -32}, {3, 2, -8}, {2, 3, -8}, {2, 2, 1}});
  return r;
}

Verdict check_algebraic_P(const Series& P, int D) {
  const Series r = algebraic_P_residual(P);
  require_trusted(r, D);
  return residual_verdict("algebraic-P", "total degree", r, D);
}

Series q_from_p(const PlanarCensus& census, int D) {
  if (D < 0) throw std::invalid_argument("negative degree");
  if (D > census.max_edges) throw std::out_of_range("planar census does not reach the requested degree");
  Series s(first_variable, D);
  for (int q = 1; q <= D + 1; ++q) {
    for (int r = 1; q + r - 2 <= D; ++r) {
      ExactRational c = factorial(q) * factorial(r) * census.count(q, r);
      c /= factorial(2 * q + 2 * r - 4);
      s.set(q + r - 2, q, c);
    }
  }
  return s;
}

Series u_from_q(const Series& Q, int D) {
  if (!(Q.grading() == first_variable)) throw std::invalid_argument("Q must be graded by the t-degree");
  const Series q = Q.with_cap(D).rescaled(ExactRational(1, 2), 2);
  const Series e = Series::monomial(first_variable, D, 1, 0, ExactRational(1, 2)).exp();
  return (e * q).scaled(ExactRational(1, 2));
}

Series delta_t(const Series& F) {
  return Series::monomial(F.grading(), F.cap(), 1, 0) * F.derivative_x();
}

Series delta_w(const Series& F) {
  const Series one_plus_w = poly(F.grading(), F.cap(), {{0, 0, 1}, {0, 1, 1}});
  return Series::monomial(F.grading(), F.cap(), 0, 1) * (one_plus_w * F).derivative_y();
}

Series q_pde_residual(const Series& Q) {
  const Grading g = Q.grading();
  const int D = Q.cap();
  const Series Qt = Q.derivative_x();
  const Series Qw = Q.derivative_y();
  const Series Qtt = Qt.derivative_x();
  const Series Qwt = Qt.derivative_y();
  const Series Qww = Qw.derivative_y();
  const Series Qttt = Qtt.derivative_x();
  const Series Qwtt = Qtt.derivative_y();
  const Series Qtttt = Qttt.derivative_x();
  // w(w+2) = w^2 + 2w
  Series r = poly(g, D, {{1, 1, 6}, {0, 2, 4}, {1, 0, -36}, {0, 1, -7}, {0, 0, -6}}) * Q;
  r = r - poly(g, D, {{2, 0, 12}, {1, 1, 8}, {0, 1, 7}, {0, 0, -25}}) * Qt;
  r = r + poly(g, D, {{0, 2, 1}, {0, 1, 2}}) * poly(g, D, {{0, 1, 8}, {1, 0, 6}, {0, 0, -7}}) * Qw;
  r = r + poly(g, D, {{2, 0, 2}, {1, 1, -4}, {1, 0, 37}, {0, 0, 9}}) * Qtt;
  r = r - poly(g, D, {{0, 2, 1}, {0, 1, 2}}) * poly(g, D, {{1, 0, 8}, {0, 0, 7}}) * Qwt;
  r = r + poly(g, D, {{0, 4, 2}, {0, 3, 8}, {0, 2, 8}}) * Qww;
  r = r + poly(g, D, {{2, 0, 8}, {1, 0, 11}}) * Qttt;
  r = r - poly(g, D, {{1, 2, 4}, {1, 1, 8}}) * Qwtt;
  r = r + poly(g, D, {{2, 0, 2}}) * Qtttt;
  return r;
}

Verdict check_q_pde(const Series& Q, int D) {
  const Series r = q_pde_residual(Q);
  require_trusted(r, D);
  return residual_verdict("q-pde", "t-degree", r, D);
}

HatP hat_p(const PlanarCensus& census) {
  return [census](int i, int j) -> ExactRational {
    if (i <= 0 || j <= 0) return 0;
    if (j == 1 && !census.covers(i, j)) return ExactRational(1) / ExactRational(factorial(i - 1));
    ExactRational v = factorial(i) * factorial(j) * census.count(i, j);
    v /= factorial(2 * i + 2 * j - 4);
    return v;
  };
}

ExactRational rec_hP_value(const HatP& hp, int q, int r) {
  const long Q = q;
  const long R = r;
  const long s = Q + R;
  ExactRational v = 0;
  v += ExactRational(2 * (Q + 1) * (Q + 2)) * hp(q, r + 3);
  v += ExactRational(6 * (Q + 2)) * hp(q + 1, r + 1);
  v -= ExactRational((Q + 2) * (7 + 8 * R)) * hp(q + 1, r + 2);
  v -= ExactRational((4 * s + 11) * (s + 2) * (Q + 2)) * hp(q + 1, r + 3);
  v -= ExactRational(12 * (R + 1)) * hp(q + 2, r);
  v -= ExactRational(2 * (3 * Q * Q + 6 * Q * R + 18 * Q + 15 * R + 25 - R * R)) * hp(q + 2, r + 1);
  v += ExactRational((s + 2) * (8 * Q * R + 8 * R * R + 7 * Q + 29 * R + 18)) * hp(q + 2, r + 2);
  v += ExactRational((s + 4) * (s + 3) * (s + 2) * (2 * s + 5)) * hp(q + 2, r + 3);
  return v;
}

Verdict check_rec_hP(const PlanarCensus& census, int max_total) {
  if (max_total + 3 > census.max_edges) throw std::out_of_range("planar census does not reach the requested range");
  const HatP hp = hat_p(census);
  const std::string range = "q>=-3, r>=-4, q+r<=" + std::to_string(max_total);
  for (int q = -3; q <= max_total + 4; ++q) {
    for (int r = -4; q + r <= max_total; ++r) {
      ExactRational v = rec_hP_value(hp, q, r);
      if (v != 0)
        return Verdict::fail("rec-hP", range,
                             "(q, r) = (" + std::to_string(q) + ", " + std::to_string(r) + "): " + to_decimal(v));
    }
  }
  return Verdict::ok("rec-hP", range);
}

Series a_combination(const Series& P) {
  const Grading g = P.grading();
  const int D = P.cap();
  const Series Px = P.derivative_x();
  const Series Py = P.derivative_y();
  const Series Pxx = Px.derivative_x();
  const Series Pxy = Px.derivative_y();
  const Series Pyy = Py.derivative_y();
  const Series Pxxx = Pxx.derivative_x();
  const Series Pxxy = Pxx.derivative_y();
  const Series Pxyy = Pxy.derivative_y();
  const Series Pyyy = Pyy.derivative_y();
  const Series L = poly(g, D, {{1, 0, 4}, {0, 1, -8}, {0, 0, -1}});
  Series inner = P.scaled(72) - poly(g, D, {{1, 0, 72}}) * Px - poly(g, D, {{0, 1, 72}, {0, 0, -2}}) * Py;
  Series a = poly(g, D, {{0, 1, 4}, {1, 0, -2}, {0, 0, -1}}) * inner;
  a = a - poly(g, D, {{2, 0, 72}}) * Pxx;
  a = a + poly(g, D, {{2, 0, 8}, {1, 0, -6}, {1, 1, -24}, {0, 2, -56}, {0, 1, 10}, {0, 0, 1}}) * Pyy;
  a = a + poly(g, D, {{2, 0, 8}, {1, 1, -160}, {1, 0, -2}}) * Pxy;
  Series third = poly(g, D, {{1, 1, 4}, {0, 3, 48}, {0, 2, -8}, {0, 1, -1}}) * Pyyy;
  third = third + poly(g, D, {{3, 0, 48}}) * Pxxx;
  third = third + poly(g, D, {{2, 1, 144}}) * Pxxy;
  third = third + poly(g, D, {{2, 0, 4}, {1, 1, -8}, {1, 0, -1}, {1, 2, 144}}) * Pxyy;
  return a + L * third;
}

Verdict check_A_combination(const Series& P, int D) {
  const Series r = a_combination(P);
  require_trusted(r, D);
  return residual_verdict("A-combination", "total degree", r, D);
}

ExactRational a_to_rec_factor(int q, int r) {
  if (q < -1 || r < -1 || q + r < -1) throw std::invalid_argument("factor defined for q, r >= -1, q + r >= -1");
  ExactRational f = 4 * factorial(2 * q + 2 * r + 3);
  f /= ExactRational(factorial(q + 2) * factorial(r + 1));
  return f;
}

std::vector<ExactRational> v_hat(const CountTable& eta, int n) {
  std::vector<ExactRational> v;
  if (n < 0) return v;
  const ExactInteger denom = factorial(2 * n);
  for (const auto& [key, c] : eta.entries()) {
    if (key[0] != n) continue;
    if (key[1] >= static_cast<int>(v.size())) v.resize(key[1] + 1);
    v[key[1]] = ExactRational(c) / ExactRational(denom);
  }
  return v;
}

std::vector<BivariatePolynomial> qfd_operator() {
  auto make = [](std::initializer_list<std::tuple<int, int, long>> terms) {
    BivariatePolynomial p;
    for (const auto& [a, b, c] : terms) p[{a, b}] += c;
    return p;
  };
  return {
      make({{4, 0, -8}, {3, 0, 4}, {2, 0, 8}, {1, 0, -4}}),
      make({{2, 1, 16}, {1, 1, -20}, {0, 1, 4}, {2, 0, -8}, {1, 0, 10}, {0, 0, -2}}),
      make({{2, 0, 10}, {1, 0, -9}, {0, 1, 8}, {0, 2, -8}}),
      make({{0, 0, 5}, {0, 1, -10}}),
      make({{0, 0, -2}}),
  };
}

namespace {

std::vector<ExactRational> qfd_residual(const CountTable& eta, int n) {
  const std::vector<BivariatePolynomial> c = qfd_operator();
  std::vector<ExactRational> out;
  for (int i = 0; i < static_cast<int>(c.size()); ++i) {
    const std::vector<ExactRational> v = v_hat(eta, n - i);
    for (const auto& [exps, coef] : c[i]) {
      ExactRational scalar = coef;
      for (int k = 0; k < exps.first; ++k) scalar *= n;
      for (std::size_t p = 0; p < v.size(); ++p) {
        const std::size_t at = p + exps.second;
        if (at >= out.size()) out.resize(at + 1);
        out[at] += scalar * v[p];
      }
    }
  }
  return out;
}

}  // namespace

bool qfd_holds_at(const CountTable& eta, int n) {
  for (const ExactRational& c : qfd_residual(eta, n))
    if (c != 0) return false;
  return true;
}

Verdict check_qfd(const CountTable& eta, int n_max) {
  require_complete_profile(eta, n_max, false);
  const std::string range = "0<=n<=" + std::to_string(n_max);
  for (int n = 0; n <= n_max; ++n) {
    const std::vector<ExactRational> res = qfd_residual(eta, n);
    for (std::size_t p = 0; p < res.size(); ++p) {
      if (res[p] != 0)
        return Verdict::fail("qfd", range,
                             "n=" + std::to_string(n) + ", x^" + std::to_string(p) + ": " + to_decimal(res[p]));
    }
  }
  return Verdict::ok("qfd", range);
}

std::map<int, ExactRational> apply_recurrence_in_binomial_basis(const std::vector<BivariatePolynomial>& c,
                                                                 const std::map<std::pair<int, int>, ExactRational>& R,
                                                                 int n) {
  std::map<int, ExactRational> out;
  for (int i = 0; i < static_cast<int>(c.size()); ++i) {
    std::map<int, ExactRational> row;
    for (const auto& [key, v] : R)
      if (key.first == n - i) row[key.second] += v;
    for (const auto& [exps, coef] : c[i]) {
      std::map<int, ExactRational> cur = row;
      for (int k = 0; k < exps.second; ++k) {
        std::map<int, ExactRational> next;
        for (const auto& [q, v] : cur) {
          next[q] += v * q;
          next[q + 1] += v * (q + 1);
        }
        cur = std::move(next);
      }
      ExactRational scalar = coef;
      for (int k = 0; k < exps.first; ++k) scalar *= n;
      for (const auto& [q, v] : cur) out[q] += scalar * v;
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second == 0) it = out.erase(it);
    else ++it;
  }
  return out;
}

Series apply_recurrence_operator(const std::vector<BivariatePolynomial>& c, const Series& F) {
  if (!(F.grading() == first_variable)) throw std::invalid_argument("operator needs a series graded by the t-degree");
  Series out(F.grading(), F.cap());
  for (int i = 0; i < static_cast<int>(c.size()); ++i) {
    const Series shifted = Series::monomial(F.grading(), F.cap(), i, 0) * F;
    for (const auto& [exps, coef] : c[i]) {
      Series term = shifted;
      for (int k = 0; k < exps.first; ++k) term = delta_t(term);
      for (int k = 0; k < exps.second; ++k) term = delta_w(term);
      out = out + term.scaled(coef);
    }
  }
  return out;
}

}  // namespace unicell
