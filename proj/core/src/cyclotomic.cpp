#include "bhzeta/cyclotomic.hpp"

#include <algorithm>
#include <functional>

#include "bhzeta/errors.hpp"

namespace bhzeta {

bool fits_int64(const Int& x) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    return x >= lo && x <= hi;
}

std::int64_t to_int64(const Int& x) { return x.convert_to<std::int64_t>(); }

void CyclotomicFunction::insert_factor(const Int& period, const Int& exponent) {
    if (period < 1) throw Error("factor period must be positive, got " + period.str());
    if (exponent == 0) return;
    auto it = support_.find(period);
    if (it == support_.end()) {
        support_.emplace(period, exponent);
    } else {
        it->second += exponent;
        if (it->second == 0) support_.erase(it);
    }
}

CyclotomicFunction::CyclotomicFunction(std::initializer_list<std::pair<Int, Int>> factors) {
    for (const auto& [m, s] : factors) insert_factor(m, s);
}

CyclotomicFunction::CyclotomicFunction(const std::vector<std::pair<Int, Int>>& factors) {
    for (const auto& [m, s] : factors) insert_factor(m, s);
}

CyclotomicFunction CyclotomicFunction::factor(Int period, Int exponent) {
    CyclotomicFunction r;
    r.insert_factor(period, exponent);
    return r;
}

Int CyclotomicFunction::exponent_of(const Int& period) const {
    auto it = support_.find(period);
    return it == support_.end() ? Int(0) : it->second;
}

CyclotomicFunction CyclotomicFunction::mul(const CyclotomicFunction& other) const {
    CyclotomicFunction r = *this;
    for (const auto& [m, s] : other.support_) r.insert_factor(m, s);
    return r;
}

CyclotomicFunction CyclotomicFunction::inverse() const {
    CyclotomicFunction r;
    for (const auto& [m, s] : support_) r.support_.emplace(m, -s);
    return r;
}

CyclotomicFunction CyclotomicFunction::saito_dual(const Int& d) const {
    if (d < 1) throw Error("dualizing degree must be positive, got " + d.str());
    CyclotomicFunction r;
    for (const auto& [m, s] : support_) {
        if (d % m != 0) throw NonDivisorPeriod(m, d);
        r.insert_factor(d / m, -s);
    }
    return r;
}

CyclotomicFunction CyclotomicFunction::power(const Int& k) const {
    if (k < 1) throw Error("iterate count must be positive, got " + k.str());
    CyclotomicFunction r;
    for (const auto& [m, s] : support_) {
        Int g = gcd(m, k);
        r.insert_factor(m / g, g * s);
    }
    return r;
}

CyclotomicFunction CyclotomicFunction::reduce() const { return mul(factor(1, -1)); }

Int CyclotomicFunction::char_degree() const {
    Int sum = 0;
    for (const auto& [m, s] : support_) sum += m * s;
    return sum;
}

std::vector<Int> CyclotomicFunction::series_expand(std::size_t order) const {
    // Multiply the (1 - t^m)^s factors into the truncated series one at a
    // time; negative s uses the closed recurrence for dividing by (1 - t^m):
    // if b = a / (1 - t^m) then b[i] = a[i] + b[i - m].
    std::vector<Int> coeff(order + 1, 0);
    coeff[0] = 1;
    for (const auto& [m_big, s] : support_) {
        if (m_big > Int(order)) continue;  // factor is 1 + O(t^{order+1})
        std::size_t m = m_big.convert_to<std::size_t>();
        Int reps = abs(s);
        for (Int r = 0; r < reps; ++r) {
            if (s > 0) {
                for (std::size_t i = order + 1; i-- > m;) coeff[i] -= coeff[i - m];
            } else {
                for (std::size_t i = m; i <= order; ++i) coeff[i] += coeff[i - m];
            }
        }
    }
    return coeff;
}

std::vector<Int> root_multipliers(const Int& m, const Int& k) {
    std::vector<Int> gs;
    for (Int g = 1; g * g <= k; ++g) {
        if (k % g != 0) continue;
        if (gcd(m, k / g) == 1) gs.push_back(g);
        Int h = k / g;
        if (h != g && gcd(m, k / h) == 1) gs.push_back(h);
    }
    std::sort(gs.begin(), gs.end());
    return gs;
}

namespace {

// One candidate factor set for a single target (1-t^m)^s: the nonzero
// exponents r_g placed at periods m*g.
using TargetSolution = std::vector<std::pair<Int, Int>>;

// All integer vectors (r_g) with sum g*r_g = s and |r_g| <= bound, over the
// multiplier list of the target. Pruned depth-first walk; the last
// coordinate is solved exactly instead of searched.
void target_solutions(const Int& m, const Int& s, const std::vector<Int>& gs, const Int& bound,
                      bool first_only, std::vector<TargetSolution>& out) {
    const std::size_t n = gs.size();
    // tail_reach[i] = bound * sum of gs[i..]; tail_gcd[i] = gcd of gs[i..]
    std::vector<Int> tail_reach(n + 1, 0), tail_gcd(n + 1, 0);
    for (std::size_t i = n; i-- > 0;) {
        tail_reach[i] = tail_reach[i + 1] + gs[i] * bound;
        tail_gcd[i] = gcd(tail_gcd[i + 1], gs[i]);
    }
    TargetSolution current;
    std::function<void(std::size_t, const Int&)> walk = [&](std::size_t i, const Int& remaining) {
        if (first_only && !out.empty()) return;
        if (i + 1 == n) {
            if (remaining % gs[i] == 0) {
                Int r = remaining / gs[i];
                if (abs(r) <= bound) {
                    if (r != 0) current.emplace_back(m * gs[i], r);
                    out.push_back(current);
                    if (r != 0) current.pop_back();
                }
            }
            return;
        }
        for (Int r = -bound; r <= bound; ++r) {
            Int rest = remaining - gs[i] * r;
            if (abs(rest) > tail_reach[i + 1]) continue;
            if (rest % tail_gcd[i + 1] != 0) continue;
            if (r != 0) current.emplace_back(m * gs[i], r);
            walk(i + 1, rest);
            if (r != 0) current.pop_back();
            if (first_only && !out.empty()) return;
        }
    };
    if (n > 0) walk(0, s);
}

}  // namespace

bool CyclotomicFunction::root_exists(const Int& k) const {
    if (k < 1) throw Error("root degree must be positive, got " + k.str());
    for (const auto& [m, s] : support_) {
        Int g = gcd_all(root_multipliers(m, k));
        if (s % g != 0) return false;
    }
    return true;
}

Int CyclotomicFunction::default_root_bound(const Int& k) const {
    Int mx = 0;
    for (const auto& [m, s] : support_) mx = std::max(mx, abs(s));
    return mx + k;
}

std::vector<CyclotomicFunction> CyclotomicFunction::enumerate_roots(const Int& k,
                                                                    const Int& bound) const {
    std::vector<std::vector<TargetSolution>> per_target;
    for (const auto& [m, s] : support_) {
        std::vector<TargetSolution> sols;
        target_solutions(m, s, root_multipliers(m, k), bound, false, sols);
        if (sols.empty()) return {};
        per_target.push_back(std::move(sols));
    }
    std::vector<CyclotomicFunction> roots{CyclotomicFunction::one()};
    for (const auto& sols : per_target) {
        std::vector<CyclotomicFunction> next;
        next.reserve(roots.size() * sols.size());
        for (const auto& base : roots)
            for (const auto& sol : sols) next.push_back(base.mul(CyclotomicFunction(sol)));
        roots = std::move(next);
    }
    return roots;
}

Int CyclotomicFunction::count_roots(const Int& k, const Int& bound) const {
    Int count = 1;
    for (const auto& [m, s] : support_) {
        std::vector<TargetSolution> sols;
        target_solutions(m, s, root_multipliers(m, k), bound, false, sols);
        count *= Int(sols.size());
        if (count == 0) return 0;
    }
    return count;
}

namespace {

// Solutions of sum g*r_g = s with total |r| mass exactly M, in serialized
// order. Used by canonical_root's increasing-mass sweep.
void exact_mass_solutions(const Int& m, const Int& s, const std::vector<Int>& gs, const Int& M,
                          std::vector<TargetSolution>& out) {
    const std::size_t n = gs.size();
    std::vector<Int> tail_gcd(n + 1, 0), tail_gmax(n + 1, 0);
    for (std::size_t i = n; i-- > 0;) {
        tail_gcd[i] = gcd(tail_gcd[i + 1], gs[i]);
        tail_gmax[i] = std::max(tail_gmax[i + 1], gs[i]);
    }
    TargetSolution current;
    std::function<void(std::size_t, const Int&, const Int&)> walk =
        [&](std::size_t i, const Int& remaining, const Int& budget) {
            if (i == n) {
                if (remaining == 0 && budget == 0) out.push_back(current);
                return;
            }
            if (abs(remaining) > budget * tail_gmax[i]) return;
            if (remaining % tail_gcd[i] != 0) return;
            for (Int r = -budget; r <= budget; ++r) {
                if (r != 0) current.emplace_back(m * gs[i], r);
                walk(i + 1, remaining - gs[i] * r, budget - abs(r));
                if (r != 0) current.pop_back();
            }
        };
    walk(0, s, M);
}

}  // namespace

std::optional<CyclotomicFunction> CyclotomicFunction::canonical_root(const Int& k) const {
    if (!root_exists(k)) return std::nullopt;
    CyclotomicFunction root;
    for (const auto& [m, s] : support_) {
        auto gs = root_multipliers(m, k);
        // root_exists guarantees a solution of some finite mass, so sweeping
        // masses upward terminates; the first populated mass is minimal and
        // ties inside it go to the least serialized factor list.
        std::vector<TargetSolution> sols;
        for (Int M = 0; sols.empty(); ++M) exact_mass_solutions(m, s, gs, M, sols);
        const TargetSolution* best = &sols.front();
        for (const auto& sol : sols)
            if (sol < *best) best = &sol;
        root = root.mul(CyclotomicFunction(*best));
    }
    return root;
}

}  // namespace bhzeta
