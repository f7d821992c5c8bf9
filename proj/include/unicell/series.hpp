#pragma once

#include "unicell/enumerate.hpp"
#include "unicell/exact.hpp"
#include "unicell/verdict.hpp"

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace unicell {

// Weighted degree of x^i y^j is wx*i + wy*j.
struct Grading {
  int wx = 1;
  int wy = 1;

  int degree(int i, int j) const { return wx * i + wy * j; }
  bool operator==(const Grading&) const = default;
};

inline constexpr Grading total_degree{1, 1};
inline constexpr Grading first_variable{1, 0};

// A bivariate series truncated at weighted degree `cap`. Coefficients of
// degree <= valid() are exact; valid() <= cap() always.
class TruncatedBivariateSeries {
 public:
  using Key = std::pair<int, int>;

  TruncatedBivariateSeries(Grading grading, int cap);

  static TruncatedBivariateSeries constant(Grading grading, int cap, const ExactRational& c);
  static TruncatedBivariateSeries monomial(Grading grading, int cap, int i, int j, const ExactRational& c = 1);

  Grading grading() const { return grading_; }
  int cap() const { return cap_; }
  int valid() const { return valid_; }
  void limit_valid(int degree);
  TruncatedBivariateSeries with_cap(int cap) const;

  ExactRational coeff(int i, int j) const;
  void set(int i, int j, const ExactRational& c);
  void add(int i, int j, const ExactRational& c);
  const std::map<Key, ExactRational>& coefficients() const { return coeffs_; }

  // Smallest weighted degree of a nonzero coefficient, cap()+1 for zero.
  int order() const;

  TruncatedBivariateSeries operator+(const TruncatedBivariateSeries& other) const;
  TruncatedBivariateSeries operator-(const TruncatedBivariateSeries& other) const;
  TruncatedBivariateSeries operator*(const TruncatedBivariateSeries& other) const;
  TruncatedBivariateSeries scaled(const ExactRational& c) const;
  TruncatedBivariateSeries derivative_x() const;
  TruncatedBivariateSeries derivative_y() const;
  // x -> cx * x, y -> cy * y.
  TruncatedBivariateSeries rescaled(const ExactRational& cx, const ExactRational& cy) const;
  // Rejects a series with a term of weighted degree <= 0.
  TruncatedBivariateSeries exp() const;

  // First nonzero coefficient of degree <= through, if any.
  std::optional<Key> first_nonzero(int through) const;

  bool operator==(const TruncatedBivariateSeries&) const = default;

 private:
  void require_compatible(const TruncatedBivariateSeries& other) const;

  Grading grading_;
  int cap_;
  int valid_;
  std::map<Key, ExactRational> coeffs_;
};

using Series = TruncatedBivariateSeries;

// Sum P_{q,r} x^q y^r through total degree D. Throws std::out_of_range if the
// census does not reach degree D.
Series p_series(const PlanarCensus& census, int D);

// Each check_* asserts that a residual vanishes through degree D and throws
// std::out_of_range when D exceeds the degree the residual is trusted to.
Series algebraic_P_residual(const Series& P);
Verdict check_algebraic_P(const Series& P, int D);

// Q(t, w), graded by the degree in t, through t-degree D.
Series q_from_p(const PlanarCensus& census, int D);

// U(t, w) = exp(t/2) Q(t/2, 2w) / 2.
Series u_from_q(const Series& Q, int D);

// Delta_t F = t dF/dt, Delta_w F = w d/dw ((1+w) F).
Series delta_t(const Series& F);
Series delta_w(const Series& F);

Series q_pde_residual(const Series& Q);
Verdict check_q_pde(const Series& Q, int D);

// hat P_{i,j} from a census, and with the closed form 1/(i-1)! for j = 1.
using HatP = std::function<ExactRational(int, int)>;
HatP hat_p(const PlanarCensus& census);
ExactRational rec_hP_value(const HatP& hp, int q, int r);

// Rows r >= -1 with q + r <= max_total, the r = -2 row for q <= max_total + 2,
// and the trivially vanishing rows q = -2, -3 and r = -3, -4.
Verdict check_rec_hP(const PlanarCensus& census, int max_total);

Series a_combination(const Series& P);
Verdict check_A_combination(const Series& P, int D);

// Coefficient of x^{q+2} y^{r+1} in A(x, y) divided by rec_hP(q, r), for
// q, r >= -1 and q + r >= 0.
ExactRational a_to_rec_factor(int q, int r);

// hat V_n(x) = Sum_v eta_v(n) x^v / (2n)! as a coefficient vector.
std::vector<ExactRational> v_hat(const CountTable& eta, int n);
bool qfd_holds_at(const CountTable& eta, int n);
Verdict check_qfd(const CountTable& eta, int n_max);

// c(n, x) as coefficients of n^a x^b.
using BivariatePolynomial = std::map<std::pair<int, int>, ExactRational>;

// Sum_i c_i(n, x) R_{n-i}(x) for R_m(x) = Sum_q R[(m, q)] C(x, q), returned in
// the basis C(x, q).
std::map<int, ExactRational> apply_recurrence_in_binomial_basis(const std::vector<BivariatePolynomial>& c,
                                                                 const std::map<std::pair<int, int>, ExactRational>& R,
                                                                 int n);

// Sum_i c_i(Delta_t, Delta_w) (t^i F) for F graded by the t-degree.
Series apply_recurrence_operator(const std::vector<BivariatePolynomial>& c, const Series& F);

// The coefficients of the five-term identity on hat V_n.
std::vector<BivariatePolynomial> qfd_operator();

}  // namespace unicell
