#pragma once

#include <vector>

#include "bhzeta/cyclotomic.hpp"
#include "bhzeta/invertible.hpp"
#include "bhzeta/numeric.hpp"

namespace bhzeta {

// A diagonal Z_k-action x_j -> exp(2 pi i m_j / k) x_j making
// Sigma^{-1} o Gamma_{1/k} a degree-k root of the monodromy; exists iff
// E * m = (1,...,1) mod k.
struct RootAction {
    Int k;
    std::vector<Int> m;  // residues in [0, k)
};

// Rotation numbers b_j = (w_j - m_j d) / (k d) mod 1 of the root map.
struct RootMap {
    std::vector<Rat> b;  // canonical representatives in [0, 1)
};

// The complete solution set of E * m = 1 (mod k), lexicographically ordered.
// Brute force over Z_k^n when k^n is small, integer elimination to diagonal
// form otherwise; the two engines agree wherever both run.
std::vector<RootAction> solve_congruence(const std::vector<std::vector<Int>>& E, const Int& k);

bool action_is_valid(const std::vector<std::vector<Int>>& E, const RootAction& a);

// For a single chain with exponents p and k | c: m_1 = m and
// m_j = (-1)^j <p_2,...,p_{j-1}> + (-1)^{j-1} m p_1...p_{j-1} (mod k).
// Ranging m over Z_k yields exactly the solve_congruence set.
RootAction chain_solution_closed_form(const std::vector<Int>& p, const Int& k, const Int& m);

RootMap root_map(const InvertiblePolynomial& f, const RootAction& a);

// lcm of the denominators of { b_j : j in J }: the pointwise order of the
// root map on the torus where exactly the J coordinates are nonzero.
Int stratum_order(const RootMap& b, const std::vector<std::size_t>& J);

// Unreduced zeta function of a geometric root of degree k, by the closed
// forms proved for: a single chain, a single loop, loop(2)+pure power,
// chain(2)+pure power, and pure-power sums with pairwise coprime exponents.
// k must be 1 (the monodromy itself, any shape) or the weight gcd c.
// Throws NoGeometricRoot when the congruence has no solution mod k and
// UnsupportedShape outside the proved cases. The result always satisfies
// power(k) == zeta(f), re-checked before returning.
CyclotomicFunction geometric_root_zeta(const InvertiblePolynomial& f, const Int& k);

}  // namespace bhzeta
