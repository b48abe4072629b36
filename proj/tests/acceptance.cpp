// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line and
// the binary exits nonzero if any of them fails. The checks pin the worked
// examples exactly and sweep the verification grids; nothing here depends on
// the unit tests.

#include <bhzeta/cyclotomic.hpp>
#include <bhzeta/duality.hpp>
#include <bhzeta/errors.hpp>
#include <bhzeta/invertible.hpp>
#include <bhzeta/monodromy.hpp>
#include <bhzeta/serialize.hpp>
#include <bhzeta/survey.hpp>
#include <bhzeta/zeta.hpp>

#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#ifdef BHZETA_CLI_PATH
#include <sys/wait.h>
#endif

using namespace bhzeta;

namespace {

using Problems = std::vector<std::string>;

void expect(Problems& p, bool ok, const std::string& what) {
    if (!ok) p.push_back(what);
}

std::string join_problems(const Problems& p) {
    std::ostringstream out;
    const std::size_t shown = std::min<std::size_t>(p.size(), 4);
    for (std::size_t i = 0; i < shown; ++i) {
        if (i) out << "; ";
        out << p[i];
    }
    if (p.size() > shown) out << "; and " << p.size() - shown << " more";
    return out.str();
}

std::string join_set(const std::set<std::string>& s) {
    std::string out;
    for (const auto& item : s) {
        if (!out.empty()) out += ", ";
        out += item;
    }
    return out;
}

InvertiblePolynomial poly(const std::string& text) { return parse_polynomial(text).poly; }

std::string summarize_scan_failures(const ScanReport& r) {
    Problems p;
    for (const auto& inst : r.instances)
        if (!inst.ok) p.push_back(inst.shape + ": " + inst.detail);
    return join_problems(p);
}

// ---------------------------------------------------------------------------

Problems criterion_1() {
    Problems p;
    WeightSystem w = canonical_weights(poly("x1^3*x2 + x2^4*x3 + x3^5"));
    expect(p, w.w == std::vector<Int>{16, 12, 12} && w.d == 60,
           "weights came out as " + weights_text(w));
    expect(p, w.c == 4, "weight gcd came out as " + w.c.str());
    return p;
}

Problems criterion_2() {
    Problems p;
    InvertiblePolynomial f = poly("x1^5*x2 + x2^2 + x3^3");
    WeightSystem w = canonical_weights(f);
    expect(p, w.w == std::vector<Int>{3, 15, 10} && w.d == 30 && w.c == 1,
           "weights of f came out as " + weights_text(w) + " with gcd " + w.c.str());
    InvertiblePolynomial ft = f.transpose();
    expect(p, ft.text() == "x1^5 + x1*x2^2 + x3^3", "transpose printed as " + ft.text());
    WeightSystem wt = canonical_weights(ft);
    expect(p, wt.w == std::vector<Int>{6, 12, 10} && wt.d == 30 && wt.c == 2,
           "weights of the transpose came out as " + weights_text(wt) + " with gcd " +
               wt.c.str());
    return p;
}

Problems criterion_3() {
    Problems p;
    InvertiblePolynomial f = poly("x1^3*x2 + x2^4*x3 + x3^5");
    InvertiblePolynomial ft = f.transpose();
    WeightSystem w = canonical_weights(f);
    WeightSystem wt = canonical_weights(ft);
    expect(p, w.d == 60 && w.c == 4 && wt.c == 10,
           "degrees came out as d=" + w.d.str() + " c=" + w.c.str() + " cT=" + wt.c.str());

    CyclotomicFunction zr = zeta(f).reduce();
    expect(p, zr == CyclotomicFunction({{15, 4}, {5, -3}, {1, -1}}),
           "reduced zeta is " + cyclotomic_text(zr));

    CyclotomicFunction root4 = geometric_root_zeta(f, 4).reduce();
    expect(p, root4 == CyclotomicFunction({{60, 1}, {20, -1}, {5, 1}, {1, -1}}),
           "fourth root zeta is " + cyclotomic_text(root4));

    CyclotomicFunction root10 = geometric_root_zeta(ft, 10).reduce();
    expect(p, root10 == CyclotomicFunction({{60, 1}, {12, -1}, {3, 1}, {1, -1}}),
           "tenth root zeta of the transpose is " + cyclotomic_text(root10));

    expect(p, root4.saito_dual(60) == root10,
           "duality at degree 60 fails: dual is " + cyclotomic_text(root4.saito_dual(60)));

    Theorem1Result t1 = verify_theorem1(f);
    expect(p, t1.holds && t1.common_degree == 60, "full duality check does not hold");

#ifdef BHZETA_CLI_PATH
    // the historical degree claim of 16 must be flagged, not accepted
    std::string cmd = std::string(BHZETA_CLI_PATH) +
                      " zeta \"x1^3*x2+x2^4*x3+x3^5\" --degree 16 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        p.push_back("could not launch the command line tool");
    } else {
        std::string output;
        char buf[4096];
        std::size_t got;
        while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, got);
        int status = pclose(pipe);
        expect(p, WIFEXITED(status) && WEXITSTATUS(status) == 0,
               "claimed-degree run exited nonzero");
        expect(p,
               output.find("claimed degree 16 is inconsistent with computed degree 60") !=
                   std::string::npos,
               "claimed degree 16 was not flagged against the computed 60");
    }
#else
    p.push_back("command line tool path was not provided at build time");
#endif
    return p;
}

Problems criterion_4() {
    Problems p;
    for (Int q = 2; q <= 12; ++q) {
        InvertiblePolynomial f =
            InvertiblePolynomial::from_matrix({{2, 0, 0}, {0, 2, 0}, {0, 0, q}});
        CyclotomicFunction zr = zeta(f).reduce();
        expect(p, zr == CyclotomicFunction({{q, 1}, {1, -1}}),
               "p=" + q.str() + ": reduced zeta is " + cyclotomic_text(zr));

        WeightSystem w = canonical_weights(f);
        Int expected_c = (q % 2 == 1) ? 2 : 4;
        expect(p, w.c == expected_c && w.d == 4 * q,
               "p=" + q.str() + ": weights are " + weights_text(w));

        // self dual at the one-variable degree, not at the canonical degree
        expect(p, zr.saito_dual(q) == zr, "p=" + q.str() + ": not self dual at " + q.str());
        expect(p, zr.saito_dual(4 * q) != zr,
               "p=" + q.str() + ": unexpectedly self dual at " + Int(4 * q).str());

        // no geometric root of degree c on the three-variable side
        expect(p, solve_congruence(f.E, w.c).empty(),
               "p=" + q.str() + ": exponent congruence mod " + w.c.str() + " is solvable");
        bool threw = false;
        try {
            geometric_root_zeta(f, w.c);
        } catch (const NoGeometricRoot&) {
            threw = true;
        }
        expect(p, threw, "p=" + q.str() + ": geometric root of degree " + w.c.str() +
                             " was produced for the three-variable polynomial");

        // the one-variable polynomial with the same reduced zeta has roots of
        // exactly the degrees coprime to the exponent, formally and geometrically
        InvertiblePolynomial xp = InvertiblePolynomial::from_matrix({{q}});
        CyclotomicFunction zxp = zeta(xp).reduce();
        expect(p, zxp == zr, "p=" + q.str() + ": one-variable reduced zeta differs");
        for (Int k = 1; k <= 2 * q; ++k) {
            bool coprime = gcd(q, k) == 1;
            bool geometric = !solve_congruence(xp.E, k).empty();
            bool formal = zxp.root_exists(k);
            expect(p, geometric == coprime, "p=" + q.str() + " k=" + k.str() +
                                                ": geometric root existence mismatch");
            expect(p, formal == coprime,
                   "p=" + q.str() + " k=" + k.str() + ": formal root existence mismatch");
        }
    }
    return p;
}

Problems criterion_5() {
    Problems p;
    std::size_t seen = 0;
    for (std::size_t n : {2u, 3u, 4u}) {
        for (const auto& shape : enumerate_invertible(n, 2, 6, {"chain", "loop"})) {
            ++seen;
            Theorem1Result r = verify_theorem1(shape.poly);
            expect(p, r.holds, shape.shape + ": duality equality fails");
            AtomicDecomposition dec = decompose(shape.poly);
            if (dec.single_chain()) {
                WeightSystem w = canonical_weights(shape.poly);
                Int count = Int(solve_congruence(shape.poly.E, w.c).size());
                expect(p, count == w.c, shape.shape + ": congruence mod " + w.c.str() +
                                            " has " + count.str() + " solutions");
            }
        }
    }
    expect(p, seen == 1000, "grid size came out as " + std::to_string(seen));
    return p;
}

Problems criterion_6() {
    Problems p;
    std::size_t seen = 0;

    for (std::size_t n : {2u, 3u, 4u}) {
        for (const auto& shape : enumerate_invertible(n, 2, 6, {"chain", "loop"})) {
            ++seen;
            AtomicDecomposition dec = decompose(shape.poly);
            CyclotomicFunction closed = dec.single_chain()
                                            ? zeta_chain(dec.atoms[0].exponents)
                                            : zeta_loop(dec.atoms[0].exponents);
            CyclotomicFunction oracle =
                milnor_orlik_zeta(canonical_weights(shape.poly), shape.poly.n);
            expect(p, closed == oracle, shape.shape + ": closed form " +
                                            cyclotomic_text(closed) + " vs oracle " +
                                            cyclotomic_text(oracle));
        }
    }

    for (Int a = 2; a <= 6; ++a)
        for (Int b = a; b <= 6; ++b)
            for (Int c = b; c <= 6; ++c) {
                ++seen;
                InvertiblePolynomial f =
                    InvertiblePolynomial::from_matrix({{a, 0, 0}, {0, b, 0}, {0, 0, c}});
                expect(p,
                       zeta_bp3(a, b, c) == milnor_orlik_zeta(canonical_weights(f), 3),
                       "pure powers (" + a.str() + "," + b.str() + "," + c.str() +
                           "): closed form vs oracle");
            }

    for (Int a = 2; a <= 6; ++a)
        for (Int b = a; b <= 6; ++b)
            for (Int c = 2; c <= 6; ++c) {
                ++seen;
                InvertiblePolynomial f =
                    InvertiblePolynomial::from_matrix({{a, 1, 0}, {1, b, 0}, {0, 0, c}});
                expect(p, zeta_b3(a, b, c) == milnor_orlik_zeta(canonical_weights(f), 3),
                       "two-loop plus power (" + a.str() + "," + b.str() + "," + c.str() +
                           "): closed form vs oracle");
            }

    for (Int a = 2; a <= 6; ++a)
        for (Int b = 2; b <= 6; ++b)
            for (Int c = 2; c <= 6; ++c) {
                ++seen;
                InvertiblePolynomial f =
                    InvertiblePolynomial::from_matrix({{a, 1, 0}, {0, b, 0}, {0, 0, c}});
                expect(p, zeta_c3(a, b, c) == milnor_orlik_zeta(canonical_weights(f), 3),
                       "two-chain plus power (" + a.str() + "," + b.str() + "," + c.str() +
                           "): closed form vs oracle");
            }

    // dispatch agreement over the full three-variable survey grid, exponent 1 included
    ScanConfig cfg;
    cfg.n = 3;
    cfg.min_exp = 1;
    cfg.max_exp = 5;
    cfg.check = "zeta-oracle";
    ScanReport r = scan(cfg);
    expect(p, r.failed == 0 && r.checked == 249,
           "survey oracle scan: " + std::to_string(r.checked) + " checked, " +
               std::to_string(r.failed) + " failed. " + summarize_scan_failures(r));

    expect(p, seen > 1200, "grid size came out as " + std::to_string(seen));
    return p;
}

Problems criterion_7() {
    Problems p;
    std::mt19937 rng(271828);
    std::uniform_int_distribution<int> factor_count(1, 4);
    std::uniform_int_distribution<int> period(1, 30);
    std::uniform_int_distribution<int> exponent(-5, 5);
    std::uniform_int_distribution<int> degree_k(2, 6);
    std::uniform_int_distribution<int> degree_l(1, 5);

    const std::vector<Int> duals = {12, 30, 60, 360};
    std::uniform_int_distribution<std::size_t> dual_pick(0, duals.size() - 1);

    auto random_function = [&] {
        CyclotomicFunction phi;
        int nf = factor_count(rng);
        for (int i = 0; i < nf; ++i)
            phi = phi.mul(CyclotomicFunction::factor(period(rng), exponent(rng)));
        return phi;
    };

    std::size_t root_failures = 0, law_failures = 0, dual_failures = 0;
    for (int iter = 0; iter < 1000; ++iter) {
        // a function with a guaranteed root of degree k
        CyclotomicFunction psi = random_function();
        Int k = degree_k(rng);
        CyclotomicFunction phi = psi.power(k);
        auto root = phi.canonical_root(k);
        if (!root || root->power(k) != phi) ++root_failures;

        // iterate composition law on an unrelated random function
        CyclotomicFunction chi = random_function();
        Int l = degree_l(rng);
        if (chi.power(k).power(l) != chi.power(k * l)) ++law_failures;

        // dual involution on a function supported on divisors
        Int d = duals[dual_pick(rng)];
        CyclotomicFunction div_supported;
        for (Int m = 1; m <= d; ++m)
            if (d % m == 0 && rng() % 3 == 0)
                div_supported =
                    div_supported.mul(CyclotomicFunction::factor(m, exponent(rng)));
        if (div_supported.saito_dual(d).saito_dual(d) != div_supported) ++dual_failures;
    }
    expect(p, root_failures == 0,
           std::to_string(root_failures) + " of 1000 canonical-root round trips failed");
    expect(p, law_failures == 0,
           std::to_string(law_failures) + " of 1000 iterate-law checks failed");
    expect(p, dual_failures == 0,
           std::to_string(dual_failures) + " of 1000 dual involutions failed");
    return p;
}

Problems criterion_8() {
    Problems p;
    ScanConfig cfg;
    cfg.n = 3;
    cfg.min_exp = 1;
    cfg.max_exp = 5;
    cfg.check = "theorem2";
    ScanReport r = scan(cfg);
    expect(p, r.failed == 0, std::to_string(r.failed) + " survey failures: " +
                                 summarize_scan_failures(r));
    expect(p, r.checked == 249 && r.skipped == 151,
           "survey covered " + std::to_string(r.checked) + " checked / " +
               std::to_string(r.skipped) + " skipped");

    // collect flags per shape from the survey
    std::map<std::string, std::set<std::string>> flagged;
    for (const auto& inst : r.instances)
        if (inst.verdict && !inst.verdict->exceptional_flags.empty())
            flagged[inst.shape] = inst.verdict->exceptional_flags;

    // re-derive the expected flags independently from the structure of each
    // enumerated polynomial
    std::map<std::string, std::set<std::string>> expected;
    std::size_t admissible_count = 0;
    for (const auto& shape : enumerate_invertible(3, 1, 5)) {
        if (!admissible(shape.poly)) continue;
        ++admissible_count;
        if (is_A_form(shape.poly)) {
            expected[shape.shape] = {"A-form"};
            continue;
        }
        AtomicDecomposition dec = decompose(shape.poly);
        const Atom* loop2 = nullptr;
        std::vector<const Atom*> chains;
        for (const auto& atom : dec.atoms) {
            if (atom.kind == Atom::Kind::Loop && atom.exponents.size() == 2) loop2 = &atom;
            if (atom.kind == Atom::Kind::Chain) chains.push_back(&atom);
        }
        std::set<std::string> flags;
        if (loop2 && chains.size() == 1 && chains[0]->exponents.size() == 1) {
            Int p1 = loop2->exponents[0], p2 = loop2->exponents[1];
            Int q = chains[0]->exponents[0];
            if (q == p1 * p2 - 1 && gcd(p1 - 1, p2 - 1) == 1)
                flags.insert("no-geometric-root-family");
        }
        if (chains.size() == 2 && dec.atoms.size() == 2) {
            const Atom* pair = chains[0]->exponents.size() == 2 ? chains[0] : chains[1];
            const Atom* fermat = pair == chains[0] ? chains[1] : chains[0];
            if (pair->exponents.size() == 2 && fermat->exponents.size() == 1) {
                Int a = pair->exponents[0], b = pair->exponents[1];
                Int q = fermat->exponents[0];
                bool direct = a == 2 && b == q && q % 2 == 1;
                bool transposed = b == 2 && a == q && q % 2 == 1;
                if (direct || transposed) {
                    flags.insert("transpose-no-root-family");
                    if (q == 3) flags.insert("E6-tilde");
                }
            }
        }
        if (!flags.empty()) expected[shape.shape] = flags;
    }
    expect(p, admissible_count == 249,
           "admissible count came out as " + std::to_string(admissible_count));
    if (flagged != expected) {
        for (const auto& [shape, flags] : flagged)
            if (!expected.count(shape))
                p.push_back("unexpected exceptional shape " + shape);
        for (const auto& [shape, flags] : expected)
            if (!flagged.count(shape) || flagged[shape] != flags)
                p.push_back("missing or wrong flags on " + shape);
    }

    // the flagged families, spelled out
    std::set<std::string> gap, one_sided;
    for (const auto& [shape, flags] : flagged) {
        if (flags.count("no-geometric-root-family")) gap.insert(shape);
        if (flags.count("transpose-no-root-family")) one_sided.insert(shape);
    }
    expect(p, gap == std::set<std::string>{"loop(2,2)+chain(3)", "loop(2,3)+chain(5)"},
           "no-geometric-root family landed on " + join_set(gap));
    expect(p,
           one_sided == std::set<std::string>{"chain(2,3)+chain(3)", "chain(2,5)+chain(5)",
                                              "chain(3,2)+chain(3)", "chain(5,2)+chain(5)"},
           "one-sided family landed on " + join_set(one_sided));

    // the one-sided family, explicitly for p in {3, 5, 7}
    for (Int q : {Int(3), Int(5), Int(7)}) {
        InvertiblePolynomial f = InvertiblePolynomial::from_matrix(
            {{2, 1, 0}, {0, q, 0}, {0, 0, q}});
        CyclotomicFunction zr = zeta(f).reduce();
        expect(p, zr == CyclotomicFunction({{q, q}, {1, -1}}),
               "p=" + q.str() + ": reduced zeta is " + cyclotomic_text(zr));
        expect(p, zr.root_exists(2 * q),
               "p=" + q.str() + ": expected a root of degree " + Int(2 * q).str());
        CyclotomicFunction zrT = zeta(f.transpose()).reduce();
        expect(p, zrT == CyclotomicFunction({{2, 1}, {q, 1}, {2 * q, q - 2}, {1, -1}}),
               "p=" + q.str() + ": transpose reduced zeta is " + cyclotomic_text(zrT));
        expect(p, !zrT.root_exists(q),
               "p=" + q.str() + ": transpose zeta unexpectedly has a degree-" + q.str() +
                   " root");
    }
    return p;
}

Problems criterion_9() {
    Problems p;

    InvertiblePolynomial worked = poly("x1^3*x2 + x2^4*x3 + x3^5");
    expect(p, milnor_number(worked) == 44,
           "chain (3,4,5) Milnor number is " + milnor_number(worked).str());
    expect(p, zeta(worked).reduce().char_degree() == 44,
           "chain (3,4,5) characteristic degree mismatch");

    struct Grid {
        std::size_t n;
        Int lo, hi;
        std::set<std::string> shapes;
        std::size_t expected_checked;
    };
    const std::vector<Grid> grids = {
        {2, 2, 8, {}, 105},
        {3, 1, 5, {}, 249},
        {3, 2, 6, {"chain", "loop"}, 170},
        {4, 2, 6, {"chain", "loop"}, 790},
    };
    for (const auto& g : grids) {
        ScanConfig cfg;
        cfg.n = g.n;
        cfg.min_exp = g.lo;
        cfg.max_exp = g.hi;
        cfg.shapes = g.shapes;
        cfg.check = "milnor";
        ScanReport r = scan(cfg);
        std::string label = "n=" + std::to_string(g.n) + " grid";
        expect(p, r.failed == 0,
               label + ": " + std::to_string(r.failed) + " failures. " +
                   summarize_scan_failures(r));
        expect(p, r.checked == g.expected_checked,
               label + ": checked " + std::to_string(r.checked) + ", expected " +
                   std::to_string(g.expected_checked));
    }
    return p;
}

Problems criterion_10() {
    Problems p;
    ScanConfig cfg;
    cfg.n = 2;
    cfg.min_exp = 2;
    cfg.max_exp = 8;
    cfg.check = "remark2";
    ScanReport r = scan(cfg);
    expect(p, r.failed == 0,
           std::to_string(r.failed) + " failures: " + summarize_scan_failures(r));
    expect(p, r.checked == 77,
           "checked " + std::to_string(r.checked) + " two-variable chains and loops");
    return p;
}

}  // namespace

int main() {
    struct Criterion {
        int number;
        std::string description;
        std::function<Problems()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "canonical weights of the worked chain are (16,12,12;60) with gcd 4",
         criterion_1},
        {2, "the two-example weight systems and the printed transpose match exactly",
         criterion_2},
        {3, "worked root zetas, duality at degree 60, and the claimed-degree flag",
         criterion_3},
        {4, "sum of two squares plus a power: zeta, missing geometric roots, gcd rule",
         criterion_4},
        {5, "duality grid over chains and loops, n in {2,3,4}, exponents in [2,6]",
         criterion_5},
        {6, "closed zeta forms agree with the weight-based oracle on every grid instance",
         criterion_6},
        {7, "canonical-root, iterate-law and dual-involution round trips, 1000 each",
         criterion_7},
        {8, "three-variable survey: statements hold, exceptional families land exactly",
         criterion_8},
        {9, "signed characteristic degree equals the Milnor number on every grid",
         criterion_9},
        {10, "two-variable grid: formal root iff geometric root, inverted duality holds",
         criterion_10},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        Problems problems;
        try {
            problems = c.run();
        } catch (const std::exception& e) {
            problems.push_back(std::string("unexpected exception: ") + e.what());
        }
        if (problems.empty()) {
            std::cout << "criterion " << c.number << ": PASS — " << c.description << "\n";
        } else {
            ++failures;
            std::cout << "criterion " << c.number << ": FAIL — " << c.description << ": "
                      << join_problems(problems) << "\n";
        }
    }
    if (failures) std::cout << failures << " of " << criteria.size() << " criteria failed\n";
    return failures == 0 ? 0 : 1;
}
