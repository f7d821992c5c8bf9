#pragma once

#include "unicell/enumerate.hpp"
#include "unicell/exact.hpp"
#include "unicell/verdict.hpp"

namespace unicell {

// Orientable unicellular maps with n edges colored onto every color of [q].
ExactInteger t_formula(int n, int q);

// Orientable bipartite unicellular maps, black vertices onto [p] (root black)
// and white vertices onto [q].
ExactInteger jackson_formula(int n, int p, int q);

// Unicellular maps on all surfaces colored onto every color of [q], from the
// planar census. Throws std::out_of_range when the census is too short.
ExactInteger u_formula(int n, int q, const PlanarCensus& census);

// Unicellular maps on all surfaces colored with some of the colors of [N].
ExactInteger u_hat_formula(int n, int N);

// Brute count of orientable bipartite unicellular maps colored as in
// jackson_formula.
ExactInteger bipartite_colored_count(int n, int p, int q);

// Sum_v eps_v(n) N^v against Sum_q C(N,q) t_formula(n,q).
Verdict some_colors_check(const CountTable& eps, int n_max, int N_max);

// Throws std::invalid_argument if a row n <= n_max does not add up to the
// number of gluings.
void require_complete_profile(const CountTable& table, int n_max, bool orientable_only);

Verdict hz_recurrence_check(const CountTable& eps, int n_max);

// Ledoux recursion on the general-surface profile eta at a single n.

bool ledoux_holds_at(const CountTable& eta, int n);
Verdict ledoux_check(const CountTable& eta, int n_max);

}  // namespace unicell
