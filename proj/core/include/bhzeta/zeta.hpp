#pragma once

#include <map>
#include <vector>

#include "bhzeta/cyclotomic.hpp"
#include "bhzeta/invertible.hpp"
#include "bhzeta/numeric.hpp"

namespace bhzeta {

// <q_1,...,q_k> = q_1...q_k - q_2...q_k + ... + (-1)^{k-1} q_k + (-1)^k,
// with <> = 1 and <q> = q - 1.
Int bracket(const std::vector<Int>& qs);

// Weights of x1^{p1}x2 + x2^{p2}x3 + ... + xn^{pn}:
// w_j = p_1...p_{j-1} * <p_{j+1},...,p_n>, d = p_1...p_n.
WeightSystem chain_weights(const std::vector<Int>& p);

// Weights of the cyclic x1^{p1}x2 + ... + xn^{pn}x1 (n >= 2):
// w_j = <p_{j+1},...,p_{j-1}> cyclically, d = p_1...p_n + (-1)^{n-1}.
WeightSystem loop_weights(const std::vector<Int>& p);

// Closed forms for the monodromy zeta function (unreduced; divide by (1-t)
// via reduce() for the reduced one).
CyclotomicFunction zeta_chain(const std::vector<Int>& p);
CyclotomicFunction zeta_loop(const std::vector<Int>& p);

// The three mixed three-variable shapes.
CyclotomicFunction zeta_bp3(const Int& p1, const Int& p2, const Int& p3);  // x1^p1+x2^p2+x3^p3
CyclotomicFunction zeta_b3(const Int& p1, const Int& p2, const Int& p3);   // x1^p1 x2+x2^p2 x1+x3^p3
CyclotomicFunction zeta_c3(const Int& p1, const Int& p2, const Int& p3);   // x1^p1 x2+x2^p2+x3^p3

// Formal sums of symbols L_u with exact rational multiplicities under the
// ring law L_a * L_b = gcd(a,b) L_{lcm(a,b)}, L_1 = 1. The classical
// weight-based route to the zeta function, used as the independent oracle
// against every closed form above.
class OrlikDivisor {
public:
    OrlikDivisor() = default;  // zero
    static OrlikDivisor unit();                         // L_1
    static OrlikDivisor symbol(const Int& u, const Rat& mult);

    OrlikDivisor add(const OrlikDivisor& o) const;
    OrlikDivisor mul(const OrlikDivisor& o) const;

    const std::map<Int, Rat>& terms() const { return terms_; }

    // Integer multiplicities or NonIntegralDivisor.
    std::map<Int, Int> integral_terms() const;

private:
    std::map<Int, Rat> terms_;
};

// Zeta from the weight system alone: write d/w_i = u_i/v_i in lowest terms,
// expand prod_i ((1/v_i) L_{u_i} - 1) and read the factor exponents off the
// divisor, orientation fixed so that x^p gives 1 - t^p.
CyclotomicFunction milnor_orlik_zeta(const WeightSystem& w, std::size_t n);

// Dispatch: single chain or loop and the three mixed 3-variable shapes use
// their closed forms, anything else falls back to milnor_orlik_zeta. The
// paths agree wherever more than one applies.
CyclotomicFunction zeta(const InvertiblePolynomial& f);

}  // namespace bhzeta
