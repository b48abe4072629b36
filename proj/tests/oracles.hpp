// Independent reference implementations used only by the tests. Everything
// here recomputes library results through a different representation so that
// a shared bug cannot hide: dense power series instead of factor maps, root
// of unity products instead of the gcd rule, exhaustive search instead of
// per-target solving.

#pragma once

#include <cstdint>
#include <vector>

#include <bhzeta/cyclotomic.hpp>
#include <bhzeta/numeric.hpp>

namespace testoracle {

// Taylor coefficients of prod (1 - t^m)^{s_m} through degree `order`,
// computed by repeated dense multiplication and division, one factor at a
// time. Deliberately quadratic and slow.
std::vector<bhzeta::Int> series(const bhzeta::CyclotomicFunction& phi, std::size_t order);

// Verifies prod_{j=0}^{m-1} (1 - t x^{jk}) == (1 - t^{m/g})^g  in the ring
// Z[x]/Phi_m(x) where Phi_m is the m-th cyclotomic polynomial and
// g = gcd(m, k). With x a primitive m-th root of unity this is the
// eigenvalue route to the power rule: raising a cyclic orbit of length m to
// the k-th power splits it into g orbits of length m/g. The quotient by
// Phi_m matters; the identity is false over Z[x]/(x^m - 1).
bool power_rule_via_roots_of_unity(std::int64_t m, std::int64_t k);

// All psi with psi^k == phi whose factor periods P satisfy
// P / gcd(P, k) in supp(phi), with every exponent in [-bound, bound].
// Straight odometer over the whole candidate grid, no pruning.
std::vector<bhzeta::CyclotomicFunction> brute_roots(const bhzeta::CyclotomicFunction& phi,
                                                    const bhzeta::Int& k,
                                                    const bhzeta::Int& bound);

// Every m in [0, k)^n with E * m == (1, ..., 1) mod k, by depth first search
// over the coordinates, in lexicographic order.
std::vector<std::vector<bhzeta::Int>> brute_congruence(
    const std::vector<std::vector<bhzeta::Int>>& E, const bhzeta::Int& k);

}  // namespace testoracle
