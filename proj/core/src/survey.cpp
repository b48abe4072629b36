#include "bhzeta/survey.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <sstream>
#include <thread>
#include <tuple>

#include "bhzeta/errors.hpp"
#include "bhzeta/monodromy.hpp"
#include "bhzeta/zeta.hpp"

namespace bhzeta {

namespace {

struct ProtoAtom {
    bool loop = false;
    std::vector<Int> exps;

    // loops first, then larger atoms, then lexicographic exponents; the
    // multiset enumeration walks atoms in this order so every combination
    // appears exactly once
    std::tuple<int, std::size_t, const std::vector<Int>&> key() const {
        return {loop ? 0 : 1, exps.size(), exps};
    }
    bool operator<(const ProtoAtom& o) const {
        auto [l1, s1, e1] = key();
        auto [l2, s2, e2] = o.key();
        if (l1 != l2) return l1 < l2;
        if (s1 != s2) return s1 > s2;  // size descending
        return e1 < e2;
    }
};

std::vector<std::vector<Int>> tuples(std::size_t len, const Int& lo, const Int& hi) {
    std::vector<std::vector<Int>> out;
    std::vector<Int> cur(len, lo);
    if (lo > hi) return out;
    while (true) {
        out.push_back(cur);
        std::size_t j = len;
        while (j-- > 0) {
            if (++cur[j] <= hi) break;
            cur[j] = lo;
            if (j == 0) return out;
        }
        if (len == 0) return out;  // single empty tuple
    }
}

bool lex_min_rotation(const std::vector<Int>& v) {
    for (std::size_t r = 1; r < v.size(); ++r) {
        std::vector<Int> rot(v.begin() + r, v.end());
        rot.insert(rot.end(), v.begin(), v.begin() + r);
        if (rot < v) return false;
    }
    return true;
}

std::string atom_string(const ProtoAtom& a) {
    std::ostringstream out;
    out << (a.loop ? "loop(" : "chain(");
    for (std::size_t i = 0; i < a.exps.size(); ++i) {
        if (i) out << ",";
        out << a.exps[i].str();
    }
    out << ")";
    return out.str();
}

void emit(const std::vector<ProtoAtom>& atoms, std::size_t n,
          const std::set<std::string>& shapes, std::vector<EnumeratedShape>& out) {
    if (!shapes.empty()) {
        std::string kind = atoms.size() > 1          ? "mixed"
                           : atoms[0].loop           ? "loop"
                                                     : "chain";
        if (!shapes.count(kind)) return;
    }
    std::vector<std::vector<Int>> E(n, std::vector<Int>(n, 0));
    std::size_t base = 0;
    std::string shape;
    for (const ProtoAtom& a : atoms) {
        const std::size_t s = a.exps.size();
        for (std::size_t i = 0; i < s; ++i) {
            E[base + i][base + i] = a.exps[i];
            if (i + 1 < s)
                E[base + i][base + i + 1] += 1;
            else if (a.loop)
                E[base + i][base] += 1;
        }
        if (!shape.empty()) shape += "+";
        shape += atom_string(a);
        base += s;
    }
    try {
        out.push_back({InvertiblePolynomial::from_matrix(std::move(E)), shape});
    } catch (const SingularMatrix&) {
        // e.g. loop(1,1); not invertible at all, so not part of the family
    } catch (const Error&) {
    }
}

}  // namespace

std::vector<EnumeratedShape> enumerate_invertible(std::size_t n, const Int& min_exp,
                                                  const Int& max_exp,
                                                  const std::set<std::string>& shapes) {
    if (n == 0 || min_exp < 1 || max_exp < min_exp)
        throw PreconditionFailed("empty enumeration range");

    // every atom of every size, in canonical order
    std::vector<ProtoAtom> pool;
    for (std::size_t s = 1; s <= n; ++s) {
        for (auto& t : tuples(s, min_exp, max_exp)) pool.push_back({false, t});
        if (s >= 2)
            for (auto& t : tuples(s, min_exp, max_exp))
                if (lex_min_rotation(t)) pool.push_back({true, t});
    }
    std::sort(pool.begin(), pool.end());

    std::vector<EnumeratedShape> out;
    std::vector<ProtoAtom> picked;
    std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t from, std::size_t left) {
        if (left == 0) {
            emit(picked, n, shapes, out);
            return;
        }
        for (std::size_t i = from; i < pool.size(); ++i) {
            if (pool[i].exps.size() > left) continue;
            picked.push_back(pool[i]);
            walk(i, left - pool[i].exps.size());  // same atom may repeat
            picked.pop_back();
        }
    };
    walk(0, n);
    return out;
}

bool admissible(const InvertiblePolynomial& f) {
    InvertiblePolynomial ft = f.transpose();
    if (!has_critical_point_at_origin(f) || !has_critical_point_at_origin(ft)) return false;
    try {
        canonical_weights(f);
        canonical_weights(ft);
    } catch (const Error&) {
        return false;
    }
    return true;
}

namespace {

unsigned resolve_threads(unsigned configured) {
    if (configured) return configured;
    if (const char* env = std::getenv("BHZETA_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

std::string flags_text(const std::set<std::string>& flags) {
    std::string out;
    for (const std::string& fl : flags) {
        if (!out.empty()) out += ",";
        out += fl;
    }
    return out;
}

void run_check(const ScanConfig& config, const EnumeratedShape& inst, InstanceRecord& rec,
               bool& in_scope) {
    const InvertiblePolynomial& f = inst.poly;
    rec.shape = inst.shape;
    rec.polynomial = f.text();
    rec.weights = canonical_weights(f);
    rec.weights_T = canonical_weights(f.transpose());
    rec.zeta_reduced = zeta(f).reduce();

    std::ostringstream detail;
    if (config.check == "theorem2") {
        Theorem2Verdict v = classify_theorem2(f);
        rec.ok = v.all_ok();
        detail << "case=" << v.case_label;
        if (v.excluded) {
            detail << " excluded";
        } else {
            detail << " roots=" << (v.root_exists_f ? "f" : "-") << (v.root_exists_fT ? "T" : "-")
                   << " geom=" << (v.geometric_root_f ? "f" : "-")
                   << (v.geometric_root_fT ? "T" : "-");
            if (!v.witness_source.empty()) detail << " witness=" << v.witness_source;
            if (v.search_exhausted) detail << " search-exhausted";
            if (!v.exceptional_flags.empty()) detail << " flags=" << flags_text(v.exceptional_flags);
            detail << " s1=" << (v.statement1_ok ? "ok" : "FAIL")
                   << " s2=" << (v.statement2_ok ? "ok" : "FAIL")
                   << " s3=" << (v.statement3_ok ? "ok" : "FAIL");
        }
        rec.verdict = std::move(v);
    } else if (config.check == "theorem1") {
        AtomicDecomposition dec = decompose(f);
        if (!dec.single_chain() && !dec.single_loop()) {
            in_scope = false;
            return;
        }
        Theorem1Result r = verify_theorem1(f);
        rec.ok = r.holds;
        detail << "d=" << r.common_degree.str() << (r.holds ? " dual" : " MISMATCH");
    } else if (config.check == "remark2") {
        AtomicDecomposition dec = decompose(f);
        if (!dec.single_chain() && !dec.single_loop()) {
            in_scope = false;
            return;
        }
        Remark2Result r = verify_remark2(f);
        rec.ok = r.holds();
        detail << "roots=" << (r.root_exists_f ? "f" : "-") << (r.root_exists_fT ? "T" : "-")
               << " equivalence=" << (r.equivalence_ok ? "ok" : "FAIL")
               << " duality=" << (r.duality_ok ? "ok" : "FAIL");
    } else if (config.check == "zeta-oracle") {
        CyclotomicFunction closed = zeta(f);
        CyclotomicFunction oracle = milnor_orlik_zeta(rec.weights, f.n);
        rec.ok = closed == oracle;
        detail << (rec.ok ? "closed form matches weight oracle" : "ORACLE MISMATCH");
    } else if (config.check == "milnor") {
        Int mu = milnor_number(f);
        bool smooth_direction = false;
        for (const Int& w : rec.weights.w)
            if (w == rec.weights.d) smooth_direction = true;
        if (smooth_direction) {
            rec.ok = mu == 0;
            detail << "mu=0 (smooth direction)";
        } else {
            Int cd = rec.zeta_reduced.char_degree();
            Int signed_cd = (f.n % 2 == 1) ? cd : Int(-cd);
            rec.ok = mu == signed_cd;
            detail << "mu=" << mu.str() << (rec.ok ? "" : " DEGREE MISMATCH " + signed_cd.str());
        }
    } else {
        throw PreconditionFailed("unknown check '" + config.check + "'");
    }
    rec.detail = detail.str();
}

}  // namespace

ScanReport scan(const ScanConfig& config) {
    static const std::set<std::string> known{"theorem1", "theorem2", "remark2", "zeta-oracle",
                                             "milnor"};
    if (!known.count(config.check))
        throw PreconditionFailed("unknown check '" + config.check + "'");

    ScanReport report;
    report.config = config;

    std::vector<EnumeratedShape> all =
        enumerate_invertible(config.n, config.min_exp, config.max_exp, config.shapes);

    struct Slot {
        bool used = false;
        bool skipped = false;
        InstanceRecord rec;
    };
    std::vector<Slot> slots(all.size());

    std::atomic<std::size_t> next{0};
    unsigned threads = resolve_threads(config.threads);
    if (threads > slots.size() && !slots.empty()) threads = static_cast<unsigned>(slots.size());

    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= slots.size()) return;
            Slot& slot = slots[i];
            if (!admissible(all[i].poly)) {
                slot.skipped = true;
                continue;
            }
            bool in_scope = true;
            try {
                run_check(config, all[i], slot.rec, in_scope);
            } catch (const Error& e) {
                slot.rec.shape = all[i].shape;
                slot.rec.polynomial = all[i].poly.text();
                slot.rec.ok = false;
                slot.rec.detail = std::string("error: ") + e.what();
            }
            if (!in_scope)
                slot.skipped = true;
            else
                slot.used = true;
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool) t.join();

    for (Slot& slot : slots) {
        if (slot.skipped) {
            ++report.skipped;
        } else if (slot.used) {
            ++report.checked;
            if (!slot.rec.ok) ++report.failed;
            report.instances.push_back(std::move(slot.rec));
        }
    }
    return report;
}

}  // namespace bhzeta
