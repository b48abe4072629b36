#pragma once

#include <initializer_list>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "bhzeta/numeric.hpp"

namespace bhzeta {

// A finite product prod_m (1 - t^m)^{s_m}, held as the map m -> s_m with all
// zero exponents dropped. This one type carries every zeta function, Poincare
// series and orbit function in the library; equality of values is equality of
// the maps.
class CyclotomicFunction {
public:
    CyclotomicFunction() = default;  // the constant 1
    CyclotomicFunction(std::initializer_list<std::pair<Int, Int>> factors);
    explicit CyclotomicFunction(const std::vector<std::pair<Int, Int>>& factors);

    static CyclotomicFunction one() { return {}; }
    static CyclotomicFunction factor(Int period, Int exponent);

    const std::map<Int, Int>& support() const { return support_; }
    bool is_one() const { return support_.empty(); }
    Int exponent_of(const Int& period) const;

    CyclotomicFunction mul(const CyclotomicFunction& other) const;
    CyclotomicFunction inverse() const;

    // phi*(t) with respect to d: every factor (1-t^m)^s becomes
    // (1-t^{d/m})^{-s}. Throws NonDivisorPeriod when some m does not divide d.
    CyclotomicFunction saito_dual(const Int& d) const;

    // Zeta function of the k-th iterate: (1-t^m)^s -> (1-t^{m/g})^{gs} with
    // g = gcd(m, k), collisions merged.
    CyclotomicFunction power(const Int& k) const;

    // Division by (1-t).
    CyclotomicFunction reduce() const;

    // Sum of m * s_m over the support.
    Int char_degree() const;

    // Exact Taylor coefficients at t = 0 through the given degree.
    std::vector<Int> series_expand(std::size_t order) const;

    // Factor-wise decision: does some psi with psi.power(k) == *this exist?
    bool root_exists(const Int& k) const;

    // Every root whose support lies on the candidate periods of this support
    // (period P contributes to the target P / gcd(P, k)) with all exponents
    // bounded by `bound` in absolute value. Empty when no such root exists.
    std::vector<CyclotomicFunction> enumerate_roots(const Int& k, const Int& bound) const;

    // Number of roots enumerate_roots would return, without materializing.
    Int count_roots(const Int& k, const Int& bound) const;

    // Deterministic choice among the roots of degree k: per target factor the
    // solution of least total exponent mass, ties broken by comparing the
    // serialized (period, exponent) list. Empty optional iff no root exists.
    std::optional<CyclotomicFunction> canonical_root(const Int& k) const;

    // max |s_m| + k, the search bound used when none is given.
    Int default_root_bound(const Int& k) const;

    bool operator==(const CyclotomicFunction& other) const { return support_ == other.support_; }
    bool operator!=(const CyclotomicFunction& other) const { return support_ != other.support_; }
    bool operator<(const CyclotomicFunction& other) const { return support_ < other.support_; }

private:
    std::map<Int, Int> support_;

    void insert_factor(const Int& period, const Int& exponent);
};

inline CyclotomicFunction operator*(const CyclotomicFunction& a, const CyclotomicFunction& b) {
    return a.mul(b);
}

// Divisors of k for the degree-k root machinery: the candidate multipliers
// G(m, k) = { g : g | k, gcd(m, k/g) = 1 }. A factor (1-t^m)^s has a degree-k
// root iff gcd of G(m, k) divides s.
std::vector<Int> root_multipliers(const Int& m, const Int& k);

}  // namespace bhzeta
