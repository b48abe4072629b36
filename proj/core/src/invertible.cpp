#include "bhzeta/invertible.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "bhzeta/errors.hpp"

namespace bhzeta {

Int det(const std::vector<std::vector<Int>>& M) {
    // Fraction-free Bareiss elimination, exact over the integers.
    std::size_t n = M.size();
    if (n == 0) return 1;
    std::vector<std::vector<Int>> a = M;
    Int sign = 1, prev = 1;
    for (std::size_t col = 0; col + 1 < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            sign = -sign;
        }
        for (std::size_t i = col + 1; i < n; ++i) {
            for (std::size_t j = col + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[col][col] - a[i][col] * a[col][j]) / prev;
            a[i][col] = 0;
        }
        prev = a[col][col];
    }
    return sign * a[n - 1][n - 1];
}

InvertiblePolynomial InvertiblePolynomial::from_matrix(std::vector<std::vector<Int>> matrix,
                                                       std::vector<std::string> names) {
    InvertiblePolynomial f;
    f.n = matrix.size();
    for (const auto& row : matrix) {
        if (row.size() != f.n) throw NotSquare(matrix.size(), row.size());
        for (const Int& e : row)
            if (e < 0) throw Error("negative exponent " + e.str() + " in matrix");
    }
    f.E = std::move(matrix);
    if (names.empty()) {
        for (std::size_t j = 0; j < f.n; ++j) names.push_back("x" + std::to_string(j + 1));
    } else if (names.size() != f.n) {
        throw Error("matrix has " + std::to_string(f.n) + " columns but " +
                    std::to_string(names.size()) + " names");
    }
    f.names = std::move(names);
    std::set<std::vector<Int>> rows(f.E.begin(), f.E.end());
    if (rows.size() != f.n) throw Error("duplicate monomials in exponent matrix");
    if (det(f.E) == 0) throw SingularMatrix();
    return f;
}

InvertiblePolynomial InvertiblePolynomial::transpose() const {
    InvertiblePolynomial t;
    t.n = n;
    t.names = names;
    t.E.assign(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t.E[j][i] = E[i][j];
    return t;
}

std::string InvertiblePolynomial::text() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < n; ++i) {
        if (i) out << " + ";
        bool first = true;
        for (std::size_t j = 0; j < n; ++j) {
            if (E[i][j] == 0) continue;
            if (!first) out << "*";
            out << names[j];
            if (E[i][j] != 1) out << "^" << E[i][j].str();
            first = false;
        }
        if (first) out << "1";  // all-zero row; rejected by from_matrix but printable
    }
    return out.str();
}

namespace {

struct Token {
    enum Kind { Ident, Number, Plus, Star, Caret, End } kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> lex(const std::string& input) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < input.size()) {
        char ch = input[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            continue;
        }
        if (ch == '+') {
            tokens.push_back({Token::Plus, "+", i++});
        } else if (ch == '*') {
            tokens.push_back({Token::Star, "*", i++});
        } else if (ch == '^') {
            tokens.push_back({Token::Caret, "^", i++});
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t start = i;
            while (i < input.size() && std::isdigit(static_cast<unsigned char>(input[i]))) ++i;
            tokens.push_back({Token::Number, input.substr(start, i - start), start});
        } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t start = i;
            while (i < input.size() && (std::isalnum(static_cast<unsigned char>(input[i])) ||
                                        input[i] == '_'))
                ++i;
            tokens.push_back({Token::Ident, input.substr(start, i - start), start});
        } else {
            throw SyntaxError(std::string("unexpected character '") + ch + "'", i);
        }
    }
    tokens.push_back({Token::End, "", input.size()});
    return tokens;
}

struct Monomial {
    std::vector<std::pair<std::string, Int>> factors;  // (variable, exponent)
    std::optional<Int> coefficient;
    std::size_t coefficient_pos = 0;
};

}  // namespace

ParseResult parse_polynomial(const std::string& input, bool allow_coefficients) {
    auto tokens = lex(input);
    std::size_t at = 0;
    auto peek = [&]() -> const Token& { return tokens[at]; };
    auto next = [&]() -> const Token& { return tokens[at++]; };

    std::vector<Monomial> monomials;
    while (true) {
        Monomial mono;
        bool saw_factor = false;
        while (true) {
            const Token& t = peek();
            if (t.kind == Token::Number) {
                // a bare number is only meaningful as a coefficient
                next();
                Int value(t.text);
                if (mono.coefficient || saw_factor)
                    throw SyntaxError("unexpected number '" + t.text + "'", t.pos);
                mono.coefficient = value;
                mono.coefficient_pos = t.pos;
            } else if (t.kind == Token::Ident) {
                next();
                Int exp = 1;
                if (peek().kind == Token::Caret) {
                    next();
                    const Token& e = peek();
                    if (e.kind != Token::Number)
                        throw SyntaxError("expected exponent after '^'", e.pos);
                    next();
                    exp = Int(e.text);
                }
                mono.factors.emplace_back(t.text, exp);
                saw_factor = true;
            } else {
                break;
            }
            if (peek().kind == Token::Star) next();  // '*' is optional between factors
        }
        if (!saw_factor) throw SyntaxError("expected a variable", peek().pos);
        monomials.push_back(std::move(mono));
        if (peek().kind == Token::Plus) {
            next();
            continue;
        }
        if (peek().kind == Token::End) break;
        throw SyntaxError("expected '+' or end of input", peek().pos);
    }

    ParseResult result;
    for (const auto& mono : monomials) {
        if (mono.coefficient && *mono.coefficient != 1) {
            if (!allow_coefficients) throw NonUnitCoefficient(mono.coefficient->str());
            result.warnings.push_back("discarded coefficient " + mono.coefficient->str() +
                                      " at offset " + std::to_string(mono.coefficient_pos));
        }
    }

    // Variable order: by index when every name is x<digits>, else by first
    // appearance in the text.
    std::vector<std::string> order;
    for (const auto& mono : monomials)
        for (const auto& [name, exp] : mono.factors)
            if (std::find(order.begin(), order.end(), name) == order.end()) order.push_back(name);
    auto x_index = [](const std::string& name) -> std::optional<Int> {
        if (name.size() < 2 || name[0] != 'x') return std::nullopt;
        for (std::size_t i = 1; i < name.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
        return Int(name.substr(1));
    };
    bool all_indexed = std::all_of(order.begin(), order.end(),
                                   [&](const std::string& v) { return x_index(v).has_value(); });
    if (all_indexed)
        std::sort(order.begin(), order.end(),
                  [&](const std::string& a, const std::string& b) { return *x_index(a) < *x_index(b); });

    if (monomials.size() != order.size()) throw NotSquare(monomials.size(), order.size());

    std::map<std::string, std::size_t> column;
    for (std::size_t j = 0; j < order.size(); ++j) column[order[j]] = j;

    InvertiblePolynomial f;
    f.n = order.size();
    f.names = order;
    f.E.assign(f.n, std::vector<Int>(f.n, 0));
    for (std::size_t i = 0; i < monomials.size(); ++i)
        for (const auto& [name, exp] : monomials[i].factors) f.E[i][column[name]] += exp;

    std::set<std::vector<Int>> rows(f.E.begin(), f.E.end());
    if (rows.size() != f.n) throw Error("duplicate monomials in polynomial");
    if (det(f.E) == 0) throw SingularMatrix();
    result.poly = std::move(f);
    return result;
}

WeightSystem raw_weights(const InvertiblePolynomial& f) {
    Int d = det(f.E);
    if (d == 0) throw SingularMatrix();
    WeightSystem ws;
    ws.d = d;
    for (std::size_t i = 0; i < f.n; ++i) {
        auto M = f.E;
        for (std::size_t r = 0; r < f.n; ++r) M[r][i] = 1;
        ws.w.push_back(det(M));
    }
    if (ws.d < 0) {
        ws.d = -ws.d;
        for (Int& w : ws.w) w = -w;
    }
    ws.c = gcd_all(ws.w);
    return ws;
}

WeightSystem canonical_weights(const InvertiblePolynomial& f) {
    WeightSystem ws = raw_weights(f);
    for (std::size_t i = 0; i < ws.w.size(); ++i)
        if (ws.w[i] <= 0) throw NonPositiveWeight(ws.w[i], i);
    return ws;
}

AtomicDecomposition decompose(const InvertiblePolynomial& f) {
    const std::size_t n = f.n;
    // Row shapes: either a single nonzero entry (pure power) or exactly two
    // nonzero entries with at least one equal to 1. own[i] lists the columns
    // that can serve as monomial i's own variable.
    std::vector<std::vector<std::size_t>> own(n);
    std::vector<std::map<std::size_t, std::size_t>> extra(n);  // own column -> tail column
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::pair<std::size_t, Int>> nz;
        for (std::size_t j = 0; j < n; ++j)
            if (f.E[i][j] != 0) nz.emplace_back(j, f.E[i][j]);
        if (nz.size() == 1) {
            own[i].push_back(nz[0].first);
        } else if (nz.size() == 2) {
            auto [j1, e1] = nz[0];
            auto [j2, e2] = nz[1];
            if (e2 == 1) {
                own[i].push_back(j1);
                extra[i][j1] = j2;
            }
            if (e1 == 1 && !(e2 == 1 && j1 == j2)) {
                own[i].push_back(j2);
                extra[i][j2] = j1;
            }
            if (own[i].empty())
                throw NotKreuzerSkarke(i, "two variables but neither has exponent 1");
        } else {
            throw NotKreuzerSkarke(i, nz.empty() ? "empty monomial"
                                                 : "more than two variables in one monomial");
        }
    }

    // Match each monomial with its own variable, then insist the tail edges
    // var -> extra(var) form disjoint simple paths and cycles (in-degree at
    // most one). Backtracking handles the x_a * x_b rows that could belong
    // to either variable.
    std::vector<std::optional<std::size_t>> row_of(n);  // variable -> its monomial
    std::vector<bool> used_row(n, false);
    std::function<bool(std::size_t)> assign = [&](std::size_t var) -> bool {
        if (var == n) {
            std::vector<int> indeg(n, 0);
            for (std::size_t v = 0; v < n; ++v) {
                std::size_t row = *row_of[v];
                auto it = extra[row].find(v);
                if (it != extra[row].end()) ++indeg[it->second];
            }
            return std::all_of(indeg.begin(), indeg.end(), [](int d) { return d <= 1; });
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (used_row[row]) continue;
            if (std::find(own[row].begin(), own[row].end(), var) == own[row].end()) continue;
            used_row[row] = true;
            row_of[var] = row;
            if (assign(var + 1)) return true;
            used_row[row] = false;
            row_of[var].reset();
        }
        return false;
    };
    if (!assign(0)) throw NotKreuzerSkarke(0, "no chain/loop assignment of monomials exists");

    auto tail_of = [&](std::size_t v) -> std::optional<std::size_t> {
        std::size_t row = *row_of[v];
        auto it = extra[row].find(v);
        if (it == extra[row].end()) return std::nullopt;
        return it->second;
    };

    std::vector<int> indeg(n, 0);
    for (std::size_t v = 0; v < n; ++v)
        if (auto t = tail_of(v)) ++indeg[*t];

    AtomicDecomposition dec;
    std::vector<bool> seen(n, false);
    // Chains first: walk from each in-degree-zero variable to its pure power.
    for (std::size_t start = 0; start < n; ++start) {
        if (seen[start] || indeg[start] != 0) continue;
        Atom atom{Atom::Kind::Chain, {}, {}};
        std::size_t v = start;
        while (true) {
            seen[v] = true;
            atom.vars.push_back(v);
            atom.exponents.push_back(f.E[*row_of[v]][v]);
            auto t = tail_of(v);
            if (!t) break;
            v = *t;
        }
        dec.atoms.push_back(std::move(atom));
    }
    // What remains are cycles; start each at its smallest variable index.
    for (std::size_t start = 0; start < n; ++start) {
        if (seen[start]) continue;
        Atom atom{Atom::Kind::Loop, {}, {}};
        std::size_t v = start;
        do {
            seen[v] = true;
            atom.vars.push_back(v);
            atom.exponents.push_back(f.E[*row_of[v]][v]);
            auto t = tail_of(v);
            if (!t) throw NotKreuzerSkarke(*row_of[v], "broken cycle in tail edges");
            v = *t;
        } while (v != start);
        dec.atoms.push_back(std::move(atom));
    }
    return dec;
}

bool has_critical_point_at_origin(const InvertiblePolynomial& f) {
    for (const auto& row : f.E) {
        Int nonzero = 0, maxexp = 0;
        for (const Int& e : row) {
            if (e != 0) ++nonzero;
            maxexp = std::max(maxexp, e);
        }
        if (nonzero == 1 && maxexp == 1) return false;  // bare variable
    }
    return true;
}

Int milnor_number(const InvertiblePolynomial& f) {
    WeightSystem ws = raw_weights(f);
    for (const Int& w : ws.w)
        if (w == ws.d) return 0;  // a bare-variable direction: smooth, mu = 0
    for (std::size_t i = 0; i < ws.w.size(); ++i)
        if (ws.w[i] <= 0) throw NonPositiveWeight(ws.w[i], i);
    Rat mu = 1;
    for (const Int& w : ws.w) mu *= Rat(ws.d - w, w);
    if (boost::multiprecision::denominator(mu) != 1) throw NonIntegralMilnor(mu);
    return boost::multiprecision::numerator(mu);
}

bool is_A_form(const InvertiblePolynomial& f) {
    if (f.n != 3) return false;
    AtomicDecomposition dec;
    try {
        dec = decompose(f);
    } catch (const NotKreuzerSkarke&) {
        return false;
    }
    std::vector<Int> exps;
    for (const auto& atom : dec.atoms) {
        if (atom.kind != Atom::Kind::Chain || atom.exponents.size() != 1) return false;
        exps.push_back(atom.exponents[0]);
    }
    std::sort(exps.begin(), exps.end());
    return exps.size() == 3 && exps[0] == 2 && exps[1] == 2;
}

}  // namespace bhzeta
