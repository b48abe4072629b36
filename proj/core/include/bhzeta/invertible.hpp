#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bhzeta/numeric.hpp"

namespace bhzeta {

// Canonical quasihomogeneous weights (w_1..w_n; d) with c = gcd(w_i).
// Row i of the exponent matrix satisfies sum_j E[i][j] * w[j] = d.
struct WeightSystem {
    std::vector<Int> w;
    Int d = 0;
    Int c = 0;

    bool reduced() const { return c == 1; }
    bool operator==(const WeightSystem& o) const { return w == o.w && d == o.d; }
};

// A polynomial with as many monomials as variables, unit coefficients and a
// nonsingular exponent matrix. E[i][j] is the exponent of variable j in
// monomial i.
struct InvertiblePolynomial {
    std::size_t n = 0;
    std::vector<std::vector<Int>> E;
    std::vector<std::string> names;

    static InvertiblePolynomial from_matrix(std::vector<std::vector<Int>> matrix,
                                            std::vector<std::string> names = {});

    InvertiblePolynomial transpose() const;
    std::string text() const;  // "x1^3*x2 + ..." form; parse(text()) round-trips E
};

struct ParseResult {
    InvertiblePolynomial poly;
    std::vector<std::string> warnings;  // discarded coefficients, if allowed
};

// Grammar: poly := term ('+' term)*, term := factor ('*'? factor)*,
// factor := var ('^' integer)?, var := 'x' integer | identifier.
// Variables are ordered by index when all are of the x<k> form, otherwise by
// first appearance. Non-unit coefficients throw NonUnitCoefficient unless
// allow_coefficients is set, in which case they are dropped with a warning.
ParseResult parse_polynomial(const std::string& text, bool allow_coefficients = false);

// Cramer weights: w_i = det(E with column i replaced by ones), d = det E,
// with all signs flipped if d < 0. Throws NonPositiveWeight if some w_i <= 0.
WeightSystem canonical_weights(const InvertiblePolynomial& f);

// The same weights without the positivity check; used where zero or negative
// weights must be observed rather than rejected.
WeightSystem raw_weights(const InvertiblePolynomial& f);

struct Atom {
    enum class Kind { Chain, Loop };
    Kind kind;
    std::vector<Int> exponents;       // p_1..p_m along the chain / around the loop
    std::vector<std::size_t> vars;    // variable indices in the same order
};

// Partition of the variables into chain and loop atoms. Reassembling the
// block matrix reproduces E up to simultaneous permutation.
struct AtomicDecomposition {
    std::vector<Atom> atoms;

    bool single_chain() const { return atoms.size() == 1 && atoms[0].kind == Atom::Kind::Chain; }
    bool single_loop() const { return atoms.size() == 1 && atoms[0].kind == Atom::Kind::Loop; }
};

// Finds the bijection monomial -> own variable (exponent p_i, plus at most
// one extra exponent-1 variable) and reads off the chain/loop components.
// Throws NotKreuzerSkarke when the shape is absent, which is exactly the
// degenerate case.
AtomicDecomposition decompose(const InvertiblePolynomial& f);

// True iff no monomial is a bare variable (no row of E is a unit vector).
bool has_critical_point_at_origin(const InvertiblePolynomial& f);

// prod_i (d - w_i) / w_i, asserted integral (NonIntegralMilnor otherwise).
// Zero when some w_i = d, before any weight positivity complaint.
Int milnor_number(const InvertiblePolynomial& f);

// Three pure powers with exponent multiset {2, 2, p}.
bool is_A_form(const InvertiblePolynomial& f);

Int det(const std::vector<std::vector<Int>>& M);

}  // namespace bhzeta
