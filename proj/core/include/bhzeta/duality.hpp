#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>

#include "bhzeta/cyclotomic.hpp"
#include "bhzeta/invertible.hpp"
#include "bhzeta/numeric.hpp"

namespace bhzeta {

// P_w(t) = (1 - t^d) / prod_j (1 - t^{w_j}).
CyclotomicFunction poincare_series(const WeightSystem& w);

// The quotient (reduced zeta, Saito dualized at d) / P_w. Defined for
// reduced weight systems only; throws NonReducedWeights when c > 1.
CyclotomicFunction orbit_function(const InvertiblePolynomial& f);

// For a single chain or loop: the reduced zeta of a geometric root of f^T at
// degree c^T equals the (+/-)power of the Saito dual (at the common degree d)
// of the reduced root zeta of f, sign (-1)^{n-1} in the exponents.
struct Theorem1Result {
    bool holds = false;
    WeightSystem weights_f, weights_fT;
    Int common_degree = 0;
    CyclotomicFunction root_f, root_fT;  // reduced root zetas
    CyclotomicFunction lhs, rhs;         // f^T side and the dualized f side
};
Theorem1Result verify_theorem1(const InvertiblePolynomial& f);

// Structured outcome of the three-variable duality statements for one
// polynomial. The statementN_ok flags encode:
//  1) when both reduced zetas have roots (degrees c and c^T), some pair of
//     roots is Saito dual at the common degree d (witnessed);
//  2) in those cases, except the flagged loop2+fermat family, geometric
//     roots exist on both sides and their closed-form zetas are Saito dual;
//  3) a root of degree c on the f side forces one of degree c^T on the
//     transpose side, except for x1^2 x2 + x2^p + x3^p with p odd.
struct Theorem2Verdict {
    std::string case_label;  // BP | loop2+fermat | chain2+fermat | chain | loop | A-form-excluded
    bool excluded = false;   // A-form
    Int c = 0, cT = 0, d = 0;
    bool root_exists_f = false, root_exists_fT = false;
    bool geometric_root_f = false, geometric_root_fT = false;

    bool duality_holds = false;  // statement 1 witnessed
    std::optional<std::pair<CyclotomicFunction, CyclotomicFunction>> witness;  // reduced roots
    std::string witness_source;   // "geometric" | "self-dual" | "canonical" | "search"
    bool search_exhausted = false;  // the fallback search hit its node budget

    // For the loop2+fermat family without geometric roots: the unreduced
    // zeta has exactly one degree-c root within the default bound.
    std::optional<bool> unique_unreduced_root;

    // "A-form", "no-geometric-root-family" (loop2+fermat, p3 = p1p2-1 with
    // coprime p1-1, p2-1), "transpose-no-root-family" (chain2+fermat,
    // p1 = 2, p2 = p3 odd), "E6-tilde" (its p = 3 member).
    std::set<std::string> exceptional_flags;

    bool statement1_ok = true;
    bool statement2_ok = true;
    bool statement3_ok = true;

    bool all_ok() const { return statement1_ok && statement2_ok && statement3_ok; }
};

// Preconditions: n = 3, both f and f^T critical at the origin. The A-form
// x1^2+x2^2+x3^p yields the excluded verdict instead of statement checks.
Theorem2Verdict classify_theorem2(const InvertiblePolynomial& f);

// Two variables: a root of the reduced zeta of degree c exists iff the
// exponent congruence mod c has a solution, and then the root zetas satisfy
// the inverted duality  root(f^T) = (root(f) dualized at d)^{-1}.
struct Remark2Result {
    bool root_exists_f = false, geometric_root_f = false;
    bool root_exists_fT = false, geometric_root_fT = false;
    bool equivalence_ok = false;
    bool duality_ok = false;  // vacuously true when no roots exist
    CyclotomicFunction lhs, rhs;
    bool holds() const { return equivalence_ok && duality_ok; }
};
Remark2Result verify_remark2(const InvertiblePolynomial& f);

}  // namespace bhzeta
