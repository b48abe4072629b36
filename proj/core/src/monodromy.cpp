#include "bhzeta/monodromy.hpp"

#include <algorithm>
#include <tuple>

#include "bhzeta/errors.hpp"
#include "bhzeta/zeta.hpp"

namespace bhzeta {

namespace {

// ax + by = g >= 0
std::tuple<Int, Int, Int> egcd(Int a, Int b) {
    Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_s -= q * s;
        std::swap(old_s, s);
        old_t -= q * t;
        std::swap(old_t, t);
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    return {old_r, old_s, old_t};
}

Int inv_mod(const Int& a, const Int& m) {
    if (m == 1) return 0;
    auto [g, x, y] = egcd(mod_floor(a, m), m);
    if (g != 1) throw Error("no inverse of " + a.str() + " mod " + m.str());
    return mod_floor(x, m);
}

std::vector<RootAction> brute_solve(const std::vector<std::vector<Int>>& E, const Int& k) {
    const std::size_t n = E.size();
    std::vector<RootAction> out;
    std::vector<Int> m(n, 0);
    const Int target = mod_floor(1, k);
    while (true) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            Int acc = 0;
            for (std::size_t j = 0; j < n; ++j) acc += E[i][j] * m[j];
            ok = mod_floor(acc, k) == target;
        }
        if (ok) out.push_back({k, m});
        // odometer, least significant coordinate last so output is lex sorted
        std::size_t j = n;
        while (j-- > 0) {
            if (++m[j] < k) break;
            m[j] = 0;
            if (j == 0) return out;
        }
    }
}

struct Diagonalized {
    std::vector<std::vector<Int>> U, V;  // unimodular, U * E * V diagonal
    std::vector<Int> diag;
};

Diagonalized diagonalize(const std::vector<std::vector<Int>>& E) {
    const std::size_t n = E.size();
    std::vector<std::vector<Int>> A = E;
    std::vector<std::vector<Int>> U(n, std::vector<Int>(n, 0)), V(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) U[i][i] = V[i][i] = 1;

    for (std::size_t t = 0; t < n; ++t) {
        while (true) {
            // smallest nonzero entry of the trailing block into the pivot
            std::size_t bi = n, bj = n;
            for (std::size_t i = t; i < n; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (A[i][j] != 0 &&
                        (bi == n || abs(A[i][j]) < abs(A[bi][bj]))) {
                        bi = i;
                        bj = j;
                    }
            if (bi == n) throw SingularMatrix();  // rank < n
            if (bi != t) {
                std::swap(A[bi], A[t]);
                std::swap(U[bi], U[t]);
            }
            if (bj != t)
                for (std::size_t i = 0; i < n; ++i) {
                    std::swap(A[i][bj], A[i][t]);
                    std::swap(V[i][bj], V[i][t]);
                }
            bool clean = true;
            for (std::size_t i = t + 1; i < n; ++i) {
                if (A[i][t] == 0) continue;
                Int q = A[i][t] / A[t][t];
                for (std::size_t j = 0; j < n; ++j) {
                    A[i][j] -= q * A[t][j];
                    U[i][j] -= q * U[t][j];
                }
                if (A[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (A[t][j] == 0) continue;
                Int q = A[t][j] / A[t][t];
                for (std::size_t i = 0; i < n; ++i) {
                    A[i][j] -= q * A[i][t];
                    V[i][j] -= q * V[i][t];
                }
                if (A[t][j] != 0) clean = false;
            }
            if (clean) break;  // remainders keep shrinking, so this terminates
        }
    }
    Diagonalized out;
    out.U = std::move(U);
    out.V = std::move(V);
    for (std::size_t i = 0; i < n; ++i) out.diag.push_back(A[i][i]);
    return out;
}

std::vector<RootAction> elimination_solve(const std::vector<std::vector<Int>>& E, const Int& k) {
    const std::size_t n = E.size();
    Diagonalized D = diagonalize(E);

    // E m = 1 (mod k) becomes diag_i * y_i = (U 1)_i (mod k) with m = V y.
    std::vector<std::vector<Int>> choices(n);
    for (std::size_t i = 0; i < n; ++i) {
        Int r = 0;
        for (std::size_t j = 0; j < n; ++j) r += D.U[i][j];
        Int d = mod_floor(D.diag[i], k);
        r = mod_floor(r, k);
        Int g = gcd(d, k);
        if (r % g != 0) return {};  // this coordinate kills every solution
        Int kk = k / g;
        Int y0 = mod_floor(inv_mod(d / g, kk) * (r / g), kk);
        for (Int t = 0; t < g; ++t) choices[i].push_back(y0 + kk * t);
    }

    std::vector<RootAction> out;
    std::vector<std::size_t> pick(n, 0);
    while (true) {
        std::vector<Int> m(n, 0);
        for (std::size_t j = 0; j < n; ++j) {
            Int acc = 0;
            for (std::size_t i = 0; i < n; ++i) acc += D.V[j][i] * choices[i][pick[i]];
            m[j] = mod_floor(acc, k);
        }
        out.push_back({k, std::move(m)});
        std::size_t i = n;
        bool done = true;
        while (i-- > 0) {
            if (++pick[i] < choices[i].size()) {
                done = false;
                break;
            }
            pick[i] = 0;
        }
        if (done) break;
    }
    std::sort(out.begin(), out.end(),
              [](const RootAction& a, const RootAction& b) { return a.m < b.m; });
    return out;
}

}  // namespace

bool action_is_valid(const std::vector<std::vector<Int>>& E, const RootAction& a) {
    const std::size_t n = E.size();
    if (a.m.size() != n || a.k < 1) return false;
    for (const Int& mj : a.m)
        if (mj < 0 || mj >= a.k) return false;
    const Int target = mod_floor(1, a.k);
    for (std::size_t i = 0; i < n; ++i) {
        Int acc = 0;
        for (std::size_t j = 0; j < n; ++j) acc += E[i][j] * a.m[j];
        if (mod_floor(acc, a.k) != target) return false;
    }
    return true;
}

std::vector<RootAction> solve_congruence(const std::vector<std::vector<Int>>& E, const Int& k) {
    if (k < 1) throw PreconditionFailed("degree must be positive, got " + k.str());
    const std::size_t n = E.size();
    std::vector<RootAction> solved = elimination_solve(E, k);

    // Keep the brute-force engine honest against the elimination one whenever
    // the search space is small enough to walk.
    Int space = 1;
    bool small = true;
    for (std::size_t i = 0; i < n && small; ++i) {
        space *= k;
        small = space <= 200000;
    }
    if (small) {
        std::vector<RootAction> brute = brute_solve(E, k);
        bool agree = brute.size() == solved.size();
        for (std::size_t i = 0; agree && i < brute.size(); ++i) agree = brute[i].m == solved[i].m;
        if (!agree)
            throw InvalidSolution("congruence engines disagree mod " + k.str());
    }
    return solved;
}

RootAction chain_solution_closed_form(const std::vector<Int>& p, const Int& k, const Int& m) {
    WeightSystem ws = chain_weights(p);
    if (ws.c % k != 0)
        throw PreconditionFailed("degree " + k.str() + " does not divide the weight gcd " +
                                 ws.c.str());
    RootAction a;
    a.k = k;
    a.m.push_back(mod_floor(m, k));
    Int prefix = p[0];  // p_1 ... p_{j-1}
    for (std::size_t j = 2; j <= p.size(); ++j) {
        std::vector<Int> mid(p.begin() + 1, p.begin() + (j - 1));
        Int sign = (j % 2 == 0) ? 1 : -1;
        Int mj = sign * bracket(mid) - sign * m * prefix;
        a.m.push_back(mod_floor(mj, k));
        prefix *= p[j - 1];
    }
    return a;
}

RootMap root_map(const InvertiblePolynomial& f, const RootAction& a) {
    if (!action_is_valid(f.E, a)) throw InvalidSolution("not a solution of the exponent congruence");
    WeightSystem ws = canonical_weights(f);
    RootMap out;
    for (std::size_t j = 0; j < f.n; ++j) {
        Rat b(ws.w[j] - a.m[j] * ws.d, a.k * ws.d);
        // canonical representative in [0, 1)
        Int num = boost::multiprecision::numerator(b);
        Int den = boost::multiprecision::denominator(b);
        out.b.emplace_back(mod_floor(num, den), den);
    }
    return out;
}

Int stratum_order(const RootMap& b, const std::vector<std::size_t>& J) {
    Int order = 1;
    for (std::size_t j : J) {
        if (j >= b.b.size()) throw PreconditionFailed("coordinate index out of range");
        order = lcm(order, boost::multiprecision::denominator(b.b[j]));
    }
    return order;
}

CyclotomicFunction geometric_root_zeta(const InvertiblePolynomial& f, const Int& k) {
    CyclotomicFunction zf = zeta(f);
    if (k == 1) return zf;  // the monodromy is its own first root, any shape
    WeightSystem ws = canonical_weights(f);
    if (k != ws.c)
        throw PreconditionFailed("degree " + k.str() + " is neither 1 nor the weight gcd " +
                                 ws.c.str());
    if (solve_congruence(f.E, k).empty()) throw NoGeometricRoot(k);

    AtomicDecomposition dec = decompose(f);
    CyclotomicFunction root;
    if (dec.single_chain()) {
        const auto& p = dec.atoms[0].exponents;
        const std::size_t n = p.size();
        Int tailprod = 1;
        for (std::size_t j = n; j-- > 0;) {
            tailprod *= p[j];
            Int sign = ((n - 1 - j) % 2 == 0) ? 1 : -1;
            root = root.mul(CyclotomicFunction::factor(tailprod, sign));
        }
    } else if (dec.single_loop()) {
        Int sign = (f.n % 2 == 1) ? 1 : -1;
        root = CyclotomicFunction::factor(ws.d, sign);
    } else if (f.n == 3 && dec.atoms.size() == 2) {
        const Atom& a0 = dec.atoms[0];
        const Atom& a1 = dec.atoms[1];
        const Atom& pair = a0.exponents.size() == 2 ? a0 : a1;
        const Atom& fermat = a0.exponents.size() == 1 ? a0 : a1;
        if (pair.exponents.size() != 2 || fermat.exponents.size() != 1)
            throw UnsupportedShape("no root formula for this decomposition");
        const Int& p3 = fermat.exponents[0];
        if (pair.kind == Atom::Kind::Loop) {
            Int P = pair.exponents[0] * pair.exponents[1] - 1;
            root = CyclotomicFunction::factor(p3, 1)
                       .mul(CyclotomicFunction::factor(ws.d, 1))
                       .mul(CyclotomicFunction::factor(P, -1));
        } else {
            const Int& p2 = pair.exponents[1];
            root = CyclotomicFunction::factor(p2, 1)
                       .mul(CyclotomicFunction::factor(p3, 1))
                       .mul(CyclotomicFunction::factor(ws.d, 1))
                       .mul(CyclotomicFunction::factor(pair.exponents[0] * p2, -1))
                       .mul(CyclotomicFunction::factor(p2 * p3, -1));
        }
    } else {
        throw UnsupportedShape("no root formula for this decomposition");
    }

    if (root.power(k) != zf)
        throw InvalidSolution("root formula does not recover the zeta function at degree " +
                              k.str());
    return root;
}

}  // namespace bhzeta
