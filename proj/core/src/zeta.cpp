#include "bhzeta/zeta.hpp"

#include <algorithm>

#include "bhzeta/errors.hpp"

namespace bhzeta {

Int bracket(const std::vector<Int>& qs) {
    // <q1..qk> = q1...qk - <q2..qk> with <> = 1, unrolled from the back
    Int value = 1, suffix = 1;
    for (std::size_t i = qs.size(); i-- > 0;) {
        suffix *= qs[i];
        value = suffix - value;
    }
    return value;
}

WeightSystem chain_weights(const std::vector<Int>& p) {
    const std::size_t n = p.size();
    if (n == 0) throw Error("empty chain");
    WeightSystem ws;
    Int prefix = 1;
    for (std::size_t j = 0; j < n; ++j) {
        ws.w.push_back(prefix * bracket(std::vector<Int>(p.begin() + j + 1, p.end())));
        prefix *= p[j];
    }
    ws.d = prefix;
    ws.c = gcd_all(ws.w);
    return ws;
}

WeightSystem loop_weights(const std::vector<Int>& p) {
    const std::size_t n = p.size();
    if (n < 2) throw Error("a loop needs at least two variables");
    WeightSystem ws;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Int> cyc(p.begin() + j + 1, p.end());
        cyc.insert(cyc.end(), p.begin(), p.begin() + j);
        ws.w.push_back(bracket(cyc));
    }
    Int d = 1;
    for (const Int& q : p) d *= q;
    ws.d = (n % 2 == 1) ? Int(d + 1) : Int(d - 1);
    ws.c = gcd_all(ws.w);
    return ws;
}

CyclotomicFunction zeta_chain(const std::vector<Int>& p) {
    const std::size_t n = p.size();
    if (n == 0) throw Error("empty chain");
    CyclotomicFunction z;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Int> tail(p.begin() + j, p.end());
        WeightSystem tw = chain_weights(tail);
        Int sign = ((n - 1 - j) % 2 == 0) ? 1 : -1;
        z = z.mul(CyclotomicFunction::factor(tw.d / tw.c, sign * tw.c));
    }
    return z;
}

CyclotomicFunction zeta_loop(const std::vector<Int>& p) {
    WeightSystem ws = loop_weights(p);
    Int sign = (p.size() % 2 == 1) ? 1 : -1;
    return CyclotomicFunction::factor(ws.d / ws.c, sign * ws.c);
}

CyclotomicFunction zeta_bp3(const Int& p1, const Int& p2, const Int& p3) {
    Int c = gcd(gcd(p2 * p3, p1 * p3), p1 * p2);
    CyclotomicFunction z = CyclotomicFunction::factor(p1, 1)
                               .mul(CyclotomicFunction::factor(p2, 1))
                               .mul(CyclotomicFunction::factor(p3, 1))
                               .mul(CyclotomicFunction::factor(p1 * p2 * p3 / c, c));
    const std::pair<Int, Int> pairs[] = {{p1, p2}, {p1, p3}, {p2, p3}};
    for (const auto& [a, b] : pairs) {
        Int cij = gcd(a, b);
        z = z.mul(CyclotomicFunction::factor(a * b / cij, -cij));
    }
    return z;
}

CyclotomicFunction zeta_b3(const Int& p1, const Int& p2, const Int& p3) {
    Int P = p1 * p2 - 1;
    Int c1 = gcd(p2 - 1, p1 - 1);
    Int c = gcd_all({p3 * (p2 - 1), p3 * (p1 - 1), P});
    Int d = p3 * P;
    return CyclotomicFunction::factor(p3, 1)
        .mul(CyclotomicFunction::factor(d / c, c))
        .mul(CyclotomicFunction::factor(P / c1, -c1));
}

CyclotomicFunction zeta_c3(const Int& p1, const Int& p2, const Int& p3) {
    Int c1 = gcd(p2 - 1, p1);
    Int c2 = gcd(p2, p3);
    Int c = gcd_all({p3 * (p2 - 1), p3 * p1, p1 * p2});
    Int d = p1 * p2 * p3;
    return CyclotomicFunction::factor(p2, 1)
        .mul(CyclotomicFunction::factor(p3, 1))
        .mul(CyclotomicFunction::factor(d / c, c))
        .mul(CyclotomicFunction::factor(p1 * p2 / c1, -c1))
        .mul(CyclotomicFunction::factor(p2 * p3 / c2, -c2));
}

OrlikDivisor OrlikDivisor::unit() {
    OrlikDivisor u;
    u.terms_[1] = 1;
    return u;
}

OrlikDivisor OrlikDivisor::symbol(const Int& u, const Rat& mult) {
    OrlikDivisor s;
    if (mult != 0) s.terms_[u] = mult;
    return s;
}

OrlikDivisor OrlikDivisor::add(const OrlikDivisor& o) const {
    OrlikDivisor out = *this;
    for (const auto& [u, m] : o.terms_) {
        Rat& slot = out.terms_[u];
        slot += m;
        if (slot == 0) out.terms_.erase(u);
    }
    return out;
}

OrlikDivisor OrlikDivisor::mul(const OrlikDivisor& o) const {
    OrlikDivisor out;
    for (const auto& [a, x] : terms_) {
        for (const auto& [b, y] : o.terms_) {
            Int key = lcm(a, b);
            Rat& slot = out.terms_[key];
            slot += x * y * Rat(gcd(a, b));
            if (slot == 0) out.terms_.erase(key);
        }
    }
    return out;
}

std::map<Int, Int> OrlikDivisor::integral_terms() const {
    std::map<Int, Int> out;
    for (const auto& [u, m] : terms_) {
        if (boost::multiprecision::denominator(m) != 1)
            throw NonIntegralDivisor("L_" + u.str() + " has multiplicity " + m.str());
        out[u] = boost::multiprecision::numerator(m);
    }
    return out;
}

CyclotomicFunction milnor_orlik_zeta(const WeightSystem& ws, std::size_t n) {
    for (std::size_t i = 0; i < ws.w.size(); ++i)
        if (ws.w[i] <= 0) throw NonPositiveWeight(ws.w[i], i);
    OrlikDivisor div = OrlikDivisor::unit();
    for (const Int& wi : ws.w) {
        Int g = gcd(ws.d, wi);
        Int u = ws.d / g;
        Int v = wi / g;
        OrlikDivisor factor = OrlikDivisor::symbol(u, Rat(1, v)).add(OrlikDivisor::symbol(1, -1));
        div = div.mul(factor);
    }
    Int sign = (n % 2 == 1) ? 1 : -1;
    CyclotomicFunction z;
    for (const auto& [u, mult] : div.integral_terms())
        z = z.mul(CyclotomicFunction::factor(u, sign * mult));
    return z.mul(CyclotomicFunction::factor(1, 1));
}

CyclotomicFunction zeta(const InvertiblePolynomial& f) {
    WeightSystem ws = canonical_weights(f);
    AtomicDecomposition dec;
    bool decomposed = true;
    try {
        dec = decompose(f);
    } catch (const NotKreuzerSkarke&) {
        decomposed = false;
    }
    if (decomposed) {
        if (dec.single_chain()) return zeta_chain(dec.atoms[0].exponents);
        if (dec.single_loop()) return zeta_loop(dec.atoms[0].exponents);
        if (f.n == 3) {
            // the three mixed shapes on three variables have closed forms too
            std::vector<const Atom*> chains, loops;
            for (const auto& atom : dec.atoms)
                (atom.kind == Atom::Kind::Chain ? chains : loops).push_back(&atom);
            if (loops.empty() && chains.size() == 3)
                return zeta_bp3(chains[0]->exponents[0], chains[1]->exponents[0],
                                chains[2]->exponents[0]);
            if (loops.size() == 1 && chains.size() == 1 && loops[0]->exponents.size() == 2)
                return zeta_b3(loops[0]->exponents[0], loops[0]->exponents[1],
                               chains[0]->exponents[0]);
            if (loops.empty() && chains.size() == 2) {
                const Atom* pair = chains[0]->exponents.size() == 2 ? chains[0] : chains[1];
                const Atom* fermat = pair == chains[0] ? chains[1] : chains[0];
                return zeta_c3(pair->exponents[0], pair->exponents[1], fermat->exponents[0]);
            }
        }
    }
    return milnor_orlik_zeta(ws, f.n);
}

}  // namespace bhzeta
