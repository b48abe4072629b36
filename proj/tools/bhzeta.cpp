// bhzeta command line front end. Verbs map onto the library one to one:
// analyze / transpose / zeta / root / dual work on a single polynomial,
// verify runs one of the duality checkers, scan sweeps an exponent grid.
// Exit codes: 0 success, 1 a check failed, 2 bad usage or bad input.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <bhzeta/cyclotomic.hpp>
#include <bhzeta/duality.hpp>
#include <bhzeta/errors.hpp>
#include <bhzeta/invertible.hpp>
#include <bhzeta/monodromy.hpp>
#include <bhzeta/numeric.hpp>
#include <bhzeta/serialize.hpp>
#include <bhzeta/survey.hpp>
#include <bhzeta/zeta.hpp>

using json = nlohmann::ordered_json;
using namespace bhzeta;

namespace {

struct UsageError {
    std::string message;
};

struct Options {
    std::string poly_text;
    std::string matrix_file;
    std::string format = "text";
    std::string out;
    std::string check;            // verify positional / scan --check
    std::string shapes;           // scan filter, comma separated
    bool allow_coefficients = false;
    std::int64_t claimed_degree = -1;  // --degree, < 0 means not given
    std::int64_t k = 0;                // root degree, 0 means "use c"
    std::int64_t bound = 0;            // enumeration bound, 0 skips the count
    std::int64_t n = 3;
    std::int64_t min_exp = 1;
    std::int64_t max_exp = 5;
};

json json_int(const Int& v) {
    if (fits_int64(v)) return json(to_int64(v));
    return json(v.str());
}

json json_of(const CyclotomicFunction& phi) { return json::parse(cyclotomic_json(phi)); }
json json_of(const WeightSystem& w) { return json::parse(weights_json(w)); }

Int int_from_json(const json& v) {
    if (v.is_string()) return Int(v.get<std::string>());
    if (v.is_number_integer()) return Int(v.get<std::int64_t>());
    throw UsageError{"matrix entries must be integers or decimal strings"};
}

InvertiblePolynomial load_polynomial(const Options& o, std::vector<std::string>& warnings) {
    if (!o.matrix_file.empty()) {
        if (!o.poly_text.empty())
            throw UsageError{"give either polynomial text or --matrix, not both"};
        std::ifstream in(o.matrix_file);
        if (!in) throw UsageError{"cannot open matrix file '" + o.matrix_file + "'"};
        json doc;
        try {
            in >> doc;
        } catch (const std::exception& e) {
            throw UsageError{"bad matrix file: " + std::string(e.what())};
        }
        if (!doc.is_object() || !doc.contains("matrix") || !doc["matrix"].is_array())
            throw UsageError{"matrix file must be an object with a \"matrix\" array"};
        std::vector<std::vector<Int>> E;
        for (const json& row : doc["matrix"]) {
            if (!row.is_array()) throw UsageError{"matrix rows must be arrays"};
            std::vector<Int> r;
            for (const json& v : row) r.push_back(int_from_json(v));
            E.push_back(std::move(r));
        }
        std::vector<std::string> names;
        if (doc.contains("names"))
            for (const json& v : doc["names"]) names.push_back(v.get<std::string>());
        return InvertiblePolynomial::from_matrix(std::move(E), std::move(names));
    }
    if (o.poly_text.empty())
        throw UsageError{"need a polynomial: text argument or --matrix FILE"};
    ParseResult pr = parse_polynomial(o.poly_text, o.allow_coefficients);
    warnings = pr.warnings;
    return pr.poly;
}

std::string shape_text(const InvertiblePolynomial& f) {
    AtomicDecomposition dec;
    try {
        dec = decompose(f);
    } catch (const NotKreuzerSkarke&) {
        return "degenerate (no chain/loop decomposition)";
    }
    std::string s;
    for (std::size_t i = 0; i < dec.atoms.size(); ++i) {
        const Atom& a = dec.atoms[i];
        if (i) s += "+";
        s += (a.kind == Atom::Kind::Chain) ? "chain(" : "loop(";
        for (std::size_t j = 0; j < a.exponents.size(); ++j) {
            if (j) s += ",";
            s += a.exponents[j].str();
        }
        s += ")";
    }
    return s;
}

// Every verb accumulates its report here, then emit() writes it once. Output
// for a fixed invocation is byte identical across runs by construction: all
// containers underneath are ordered.
int emit(const std::string& body, const Options& o) {
    if (o.out.empty()) {
        std::cout << body;
        return 0;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
        std::cerr << "bhzeta: cannot write '" << o.out << "'\n";
        return 2;
    }
    f << body;
    return 0;
}

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (o.format == a) return;
    throw UsageError{"--format " + o.format + " is not available for this verb"};
}

void degree_annotation_text(const Options& o, const WeightSystem& w, std::ostream& os) {
    if (o.claimed_degree < 0) return;
    if (Int(o.claimed_degree) == w.d)
        os << "claimed degree " << o.claimed_degree << " matches the computed degree\n";
    else
        os << "claimed degree " << o.claimed_degree
           << " is inconsistent with computed degree " << w.d.str() << "\n";
}

void degree_annotation_json(const Options& o, const WeightSystem& w, json& obj) {
    if (o.claimed_degree < 0) return;
    obj["claimed_degree"] = o.claimed_degree;
    obj["degree_consistent"] = (Int(o.claimed_degree) == w.d);
}

void warnings_text(const std::vector<std::string>& warnings, std::ostream& os) {
    for (const std::string& w : warnings) os << "warning: " << w << "\n";
}

int run_analyze(const Options& o) {
    require_format(o, {"text", "json", "latex"});
    std::vector<std::string> warnings;
    InvertiblePolynomial f = load_polynomial(o, warnings);
    InvertiblePolynomial ft = f.transpose();
    WeightSystem wf = canonical_weights(f);
    WeightSystem wt = canonical_weights(ft);
    CyclotomicFunction zf = zeta(f);
    CyclotomicFunction zr = zf.reduce();
    std::optional<Int> mu;
    try {
        mu = milnor_number(f);
    } catch (const Error&) {
        // leave it out for inputs without an isolated singularity count
    }

    if (o.format == "json") {
        json obj;
        obj["polynomial"] = f.text();
        obj["shape"] = shape_text(f);
        obj["weights"] = json_of(wf);
        obj["zeta"] = json_of(zf);
        obj["zeta_reduced"] = json_of(zr);
        if (mu) obj["milnor_number"] = json_int(*mu);
        obj["transpose"] = ft.text();
        obj["transpose_weights"] = json_of(wt);
        degree_annotation_json(o, wf, obj);
        if (!warnings.empty()) obj["warnings"] = warnings;
        return emit(obj.dump(2) + "\n", o);
    }

    std::ostringstream os;
    if (o.format == "latex") {
        os << "\\begin{tabular}{ll}\n";
        os << "polynomial & $" << f.text() << "$ \\\\\n";
        os << "weights & $" << weights_text(wf) << "$ \\\\\n";
        os << "reduced zeta & $" << cyclotomic_latex(zr) << "$ \\\\\n";
        os << "transpose & $" << ft.text() << "$ \\\\\n";
        os << "transpose weights & $" << weights_text(wt) << "$ \\\\\n";
        os << "\\end{tabular}\n";
        return emit(os.str(), o);
    }
    warnings_text(warnings, os);
    os << "polynomial: " << f.text() << "\n";
    os << "shape: " << shape_text(f) << "\n";
    os << "weights: " << weights_text(wf) << "\n";
    os << "c: " << wf.c.str() << "\n";
    degree_annotation_text(o, wf, os);
    if (mu) os << "milnor number: " << mu->str() << "\n";
    os << "zeta: " << cyclotomic_text(zf) << "\n";
    os << "zeta reduced: " << cyclotomic_text(zr) << "\n";
    os << "transpose: " << ft.text() << "\n";
    os << "transpose weights: " << weights_text(wt) << "\n";
    os << "transpose c: " << wt.c.str() << "\n";
    return emit(os.str(), o);
}

int run_transpose(const Options& o) {
    require_format(o, {"text", "json"});
    std::vector<std::string> warnings;
    InvertiblePolynomial f = load_polynomial(o, warnings);
    InvertiblePolynomial ft = f.transpose();
    if (o.format == "json") {
        json obj;
        obj["polynomial"] = f.text();
        obj["transpose"] = ft.text();
        json rows = json::array();
        for (const auto& row : ft.E) {
            json r = json::array();
            for (const Int& v : row) r.push_back(json_int(v));
            rows.push_back(std::move(r));
        }
        obj["matrix"] = std::move(rows);
        if (!warnings.empty()) obj["warnings"] = warnings;
        return emit(obj.dump(2) + "\n", o);
    }
    std::ostringstream os;
    warnings_text(warnings, os);
    os << ft.text() << "\n";
    return emit(os.str(), o);
}

int run_zeta(const Options& o) {
    require_format(o, {"text", "json", "latex"});
    std::vector<std::string> warnings;
    InvertiblePolynomial f = load_polynomial(o, warnings);
    WeightSystem w = canonical_weights(f);
    CyclotomicFunction zf = zeta(f);
    CyclotomicFunction zr = zf.reduce();
    if (o.format == "json") {
        json obj;
        obj["polynomial"] = f.text();
        obj["weights"] = json_of(w);
        obj["zeta"] = json_of(zf);
        obj["zeta_reduced"] = json_of(zr);
        degree_annotation_json(o, w, obj);
        if (!warnings.empty()) obj["warnings"] = warnings;
        return emit(obj.dump(2) + "\n", o);
    }
    std::ostringstream os;
    if (o.format == "latex") {
        os << cyclotomic_latex(zr) << "\n";
        return emit(os.str(), o);
    }
    warnings_text(warnings, os);
    degree_annotation_text(o, w, os);
    os << "zeta: " << cyclotomic_text(zf) << "\n";
    os << "zeta reduced: " << cyclotomic_text(zr) << "\n";
    return emit(os.str(), o);
}

int run_root(const Options& o) {
    require_format(o, {"text", "json"});
    std::vector<std::string> warnings;
    InvertiblePolynomial f = load_polynomial(o, warnings);
    WeightSystem w = canonical_weights(f);
    Int k = (o.k > 0) ? Int(o.k) : w.c;
    if (k <= 0) throw UsageError{"--k must be positive"};
    CyclotomicFunction zr = zeta(f).reduce();
    bool exists = zr.root_exists(k);
    std::optional<CyclotomicFunction> canon = zr.canonical_root(k);

    std::string geometric_status;
    std::optional<CyclotomicFunction> geometric;
    try {
        geometric = geometric_root_zeta(f, k);
        geometric_status = "exists";
    } catch (const NoGeometricRoot&) {
        geometric_status = "none (exponent congruence unsolvable)";
    } catch (const UnsupportedShape&) {
        geometric_status = "not computed (shape outside the closed forms)";
    } catch (const PreconditionFailed&) {
        geometric_status = "not defined (degree is neither 1 nor c)";
    }

    std::optional<Int> count;
    if (o.bound > 0) count = zr.count_roots(k, Int(o.bound));

    if (o.format == "json") {
        json obj;
        obj["polynomial"] = f.text();
        obj["weights"] = json_of(w);
        obj["k"] = json_int(k);
        obj["zeta_reduced"] = json_of(zr);
        obj["root_exists"] = exists;
        if (canon) obj["canonical_root"] = json_of(*canon);
        obj["geometric_root"] = geometric_status;
        if (geometric) {
            obj["geometric_root_zeta"] = json_of(*geometric);
            obj["geometric_root_zeta_reduced"] = json_of(geometric->reduce());
        }
        if (count) obj["root_count_within_bound"] = json_int(*count);
        if (!warnings.empty()) obj["warnings"] = warnings;
        return emit(obj.dump(2) + "\n", o);
    }
    std::ostringstream os;
    warnings_text(warnings, os);
    os << "zeta reduced: " << cyclotomic_text(zr) << "\n";
    os << "k: " << k.str() << "\n";
    os << "root exists: " << (exists ? "yes" : "no") << "\n";
    if (canon) os << "canonical root: " << cyclotomic_text(*canon) << "\n";
    os << "geometric root: " << geometric_status << "\n";
    if (geometric)
        os << "geometric root zeta reduced: " << cyclotomic_text(geometric->reduce()) << "\n";
    if (count) os << "roots within bound " << o.bound << ": " << count->str() << "\n";
    return emit(os.str(), o);
}

int run_dual(const Options& o) {
    require_format(o, {"text", "json", "latex"});
    std::vector<std::string> warnings;
    InvertiblePolynomial f = load_polynomial(o, warnings);
    WeightSystem w = canonical_weights(f);
    CyclotomicFunction zr = zeta(f).reduce();
    CyclotomicFunction dual = zr.saito_dual(w.d);
    if (o.format == "json") {
        json obj;
        obj["polynomial"] = f.text();
        obj["weights"] = json_of(w);
        obj["zeta_reduced"] = json_of(zr);
        obj["saito_dual"] = json_of(dual);
        degree_annotation_json(o, w, obj);
        if (!warnings.empty()) obj["warnings"] = warnings;
        return emit(obj.dump(2) + "\n", o);
    }
    std::ostringstream os;
    if (o.format == "latex") {
        os << cyclotomic_latex(dual) << "\n";
        return emit(os.str(), o);
    }
    warnings_text(warnings, os);
    degree_annotation_text(o, w, os);
    os << "zeta reduced: " << cyclotomic_text(zr) << "\n";
    os << "degree: " << w.d.str() << "\n";
    os << "saito dual: " << cyclotomic_text(dual) << "\n";
    return emit(os.str(), o);
}

int run_verify(const Options& o) {
    require_format(o, {"text", "json"});
    std::vector<std::string> warnings;
    InvertiblePolynomial f = load_polynomial(o, warnings);

    if (o.check == "theorem1") {
        Theorem1Result r = verify_theorem1(f);
        if (o.format == "json") {
            json obj;
            obj["check"] = "theorem1";
            obj["polynomial"] = f.text();
            obj["weights"] = json_of(r.weights_f);
            obj["transpose_weights"] = json_of(r.weights_fT);
            obj["common_degree"] = json_int(r.common_degree);
            degree_annotation_json(o, r.weights_f, obj);
            obj["root_zeta_f"] = json_of(r.root_f);
            obj["root_zeta_fT"] = json_of(r.root_fT);
            obj["lhs"] = json_of(r.lhs);
            obj["rhs"] = json_of(r.rhs);
            obj["holds"] = r.holds;
            int rc = emit(obj.dump(2) + "\n", o);
            return rc != 0 ? rc : (r.holds ? 0 : 1);
        }
        std::ostringstream os;
        warnings_text(warnings, os);
        os << "check: theorem1\n";
        os << "polynomial: " << f.text() << "\n";
        os << "weights: " << weights_text(r.weights_f) << "\n";
        os << "transpose weights: " << weights_text(r.weights_fT) << "\n";
        os << "common degree: " << r.common_degree.str() << "\n";
        degree_annotation_text(o, r.weights_f, os);
        os << "root zeta f: " << cyclotomic_text(r.root_f) << "\n";
        os << "root zeta fT: " << cyclotomic_text(r.root_fT) << "\n";
        os << "lhs (transpose side): " << cyclotomic_text(r.lhs) << "\n";
        os << "rhs (dualized f side): " << cyclotomic_text(r.rhs) << "\n";
        os << "holds: " << (r.holds ? "yes" : "NO") << "\n";
        int rc = emit(os.str(), o);
        return rc != 0 ? rc : (r.holds ? 0 : 1);
    }

    if (o.check == "theorem2") {
        Theorem2Verdict v = classify_theorem2(f);
        bool ok = v.all_ok();
        if (o.format == "json") {
            json obj;
            obj["check"] = "theorem2";
            obj["polynomial"] = f.text();
            obj["case"] = v.case_label;
            obj["excluded"] = v.excluded;
            if (!v.excluded) {
                obj["c"] = json_int(v.c);
                obj["cT"] = json_int(v.cT);
                obj["d"] = json_int(v.d);
                obj["root_exists_f"] = v.root_exists_f;
                obj["root_exists_fT"] = v.root_exists_fT;
                obj["geometric_root_f"] = v.geometric_root_f;
                obj["geometric_root_fT"] = v.geometric_root_fT;
                obj["witness_source"] = v.witness_source;
                if (v.witness) {
                    obj["witness_f"] = json_of(v.witness->first);
                    obj["witness_fT"] = json_of(v.witness->second);
                }
                obj["search_exhausted"] = v.search_exhausted;
                if (v.unique_unreduced_root)
                    obj["unique_unreduced_root"] = *v.unique_unreduced_root;
                obj["flags"] = json(v.exceptional_flags);
                obj["statement1_ok"] = v.statement1_ok;
                obj["statement2_ok"] = v.statement2_ok;
                obj["statement3_ok"] = v.statement3_ok;
            }
            obj["holds"] = ok;
            int rc = emit(obj.dump(2) + "\n", o);
            return rc != 0 ? rc : (ok ? 0 : 1);
        }
        std::ostringstream os;
        warnings_text(warnings, os);
        os << "check: theorem2\n";
        os << "polynomial: " << f.text() << "\n";
        os << "case: " << v.case_label << "\n";
        if (v.excluded) {
            os << "excluded: statements do not apply to this family\n";
        } else {
            os << "c: " << v.c.str() << "  cT: " << v.cT.str() << "  d: " << v.d.str() << "\n";
            os << "roots: f=" << (v.root_exists_f ? "yes" : "no")
               << " fT=" << (v.root_exists_fT ? "yes" : "no") << "\n";
            os << "geometric: f=" << (v.geometric_root_f ? "yes" : "no")
               << " fT=" << (v.geometric_root_fT ? "yes" : "no") << "\n";
            if (!v.witness_source.empty()) os << "witness: " << v.witness_source << "\n";
            if (v.witness) {
                os << "witness root f: " << cyclotomic_text(v.witness->first) << "\n";
                os << "witness root fT: " << cyclotomic_text(v.witness->second) << "\n";
            }
            if (!v.exceptional_flags.empty()) {
                os << "flags:";
                for (const std::string& fl : v.exceptional_flags) os << " " << fl;
                os << "\n";
            }
            os << "statement 1: " << (v.statement1_ok ? "ok" : "FAIL") << "\n";
            os << "statement 2: " << (v.statement2_ok ? "ok" : "FAIL") << "\n";
            os << "statement 3: " << (v.statement3_ok ? "ok" : "FAIL") << "\n";
        }
        os << "holds: " << (ok ? "yes" : "NO") << "\n";
        int rc = emit(os.str(), o);
        return rc != 0 ? rc : (ok ? 0 : 1);
    }

    if (o.check == "remark2") {
        Remark2Result r = verify_remark2(f);
        bool ok = r.holds();
        if (o.format == "json") {
            json obj;
            obj["check"] = "remark2";
            obj["polynomial"] = f.text();
            obj["root_exists_f"] = r.root_exists_f;
            obj["root_exists_fT"] = r.root_exists_fT;
            obj["geometric_root_f"] = r.geometric_root_f;
            obj["geometric_root_fT"] = r.geometric_root_fT;
            obj["equivalence_ok"] = r.equivalence_ok;
            obj["duality_ok"] = r.duality_ok;
            obj["lhs"] = json_of(r.lhs);
            obj["rhs"] = json_of(r.rhs);
            obj["holds"] = ok;
            int rc = emit(obj.dump(2) + "\n", o);
            return rc != 0 ? rc : (ok ? 0 : 1);
        }
        std::ostringstream os;
        warnings_text(warnings, os);
        os << "check: remark2\n";
        os << "polynomial: " << f.text() << "\n";
        os << "roots: f=" << (r.root_exists_f ? "yes" : "no")
           << " fT=" << (r.root_exists_fT ? "yes" : "no") << "\n";
        os << "geometric: f=" << (r.geometric_root_f ? "yes" : "no")
           << " fT=" << (r.geometric_root_fT ? "yes" : "no") << "\n";
        os << "equivalence: " << (r.equivalence_ok ? "ok" : "FAIL") << "\n";
        os << "duality: " << (r.duality_ok ? "ok" : "FAIL") << "\n";
        os << "lhs: " << cyclotomic_text(r.lhs) << "\n";
        os << "rhs: " << cyclotomic_text(r.rhs) << "\n";
        os << "holds: " << (ok ? "yes" : "NO") << "\n";
        int rc = emit(os.str(), o);
        return rc != 0 ? rc : (ok ? 0 : 1);
    }

    throw UsageError{"unknown verify check '" + o.check +
                     "' (expected theorem1, theorem2 or remark2)"};
}

int run_scan(const Options& o) {
    require_format(o, {"text", "json", "csv", "latex"});
    if (o.n < 1) throw UsageError{"--n must be at least 1"};
    if (o.min_exp < 1 || o.max_exp < o.min_exp)
        throw UsageError{"need 1 <= min-exp <= max-exp"};
    ScanConfig cfg;
    cfg.n = static_cast<std::size_t>(o.n);
    cfg.min_exp = Int(o.min_exp);
    cfg.max_exp = Int(o.max_exp);
    if (!o.check.empty()) cfg.check = o.check;
    if (!o.shapes.empty()) {
        std::stringstream ss(o.shapes);
        std::string part;
        while (std::getline(ss, part, ',')) {
            if (part != "chain" && part != "loop" && part != "mixed")
                throw UsageError{"--shapes entries must be chain, loop or mixed"};
            cfg.shapes.insert(part);
        }
    }
    ScanReport rep;
    try {
        rep = scan(cfg);
    } catch (const PreconditionFailed& e) {
        throw UsageError{e.what()};
    }

    std::string body;
    if (o.format == "json")
        body = report_json(rep);
    else if (o.format == "csv")
        body = report_csv(rep);
    else if (o.format == "latex")
        body = report_latex(rep);
    else {
        std::ostringstream os;
        os << "check: " << cfg.check << "  n: " << o.n << "  exponents: [" << o.min_exp
           << "," << o.max_exp << "]\n";
        for (const InstanceRecord& r : rep.instances)
            os << (r.ok ? "ok   " : "FAIL ") << r.shape << "  " << weights_text(r.weights)
               << "  " << r.detail << "\n";
        os << "checked " << rep.checked << "  failed " << rep.failed << "  skipped "
           << rep.skipped << "\n";
        body = os.str();
    }
    int rc = emit(body, o);
    return rc != 0 ? rc : (rep.failed == 0 ? 0 : 1);
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"invertible polynomials: weights, transposes, monodromy zeta functions"};
    app.require_subcommand(1);

    auto add_input = [&](CLI::App* sub, bool positional_poly = true) {
        if (positional_poly)
            sub->add_option("polynomial", opt.poly_text, "polynomial text, e.g. \"x1^3*x2+x2^4*x3+x3^5\"");
        sub->add_option("--matrix", opt.matrix_file,
                        "JSON file with {\"matrix\": [[...]], \"names\": [...]} instead of text");
        sub->add_flag("--allow-coefficients", opt.allow_coefficients,
                      "drop non-unit coefficients with a warning instead of failing");
    };
    auto add_output = [&](CLI::App* sub, const char* formats) {
        sub->add_option("--format", opt.format, std::string("output format: ") + formats)
            ->capture_default_str();
        sub->add_option("--out", opt.out, "write the report to a file instead of stdout");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "weights, shape, zeta and transpose summary");
    add_input(analyze);
    add_output(analyze, "text|json|latex");
    analyze->add_option("--degree", opt.claimed_degree,
                        "claimed degree to cross check against the computed one");

    CLI::App* transpose = app.add_subcommand("transpose", "print the transpose polynomial");
    add_input(transpose);
    add_output(transpose, "text|json");

    CLI::App* zeta_cmd = app.add_subcommand("zeta", "monodromy zeta function");
    add_input(zeta_cmd);
    add_output(zeta_cmd, "text|json|latex");
    zeta_cmd->add_option("--degree", opt.claimed_degree,
                         "claimed degree to cross check against the computed one");

    CLI::App* root = app.add_subcommand("root", "formal and geometric roots of the reduced zeta");
    add_input(root);
    add_output(root, "text|json");
    root->add_option("--k", opt.k, "root degree (default: the weight gcd c)");
    root->add_option("--bound", opt.bound, "also count roots with periods up to this bound");

    CLI::App* dual = app.add_subcommand("dual", "Saito dual of the reduced zeta at the degree");
    add_input(dual);
    add_output(dual, "text|json|latex");
    dual->add_option("--degree", opt.claimed_degree,
                     "claimed degree to cross check against the computed one");

    CLI::App* verify = app.add_subcommand("verify", "run one duality check on one polynomial");
    verify->add_option("checker", opt.check, "theorem1 | theorem2 | remark2")->required();
    add_input(verify);
    add_output(verify, "text|json");
    verify->add_option("--degree", opt.claimed_degree,
                       "claimed degree to cross check against the computed one");

    CLI::App* scan_cmd = app.add_subcommand("scan", "verify a check over an exponent grid");
    add_output(scan_cmd, "text|json|csv|latex");
    scan_cmd->add_option("--n", opt.n, "number of variables")->capture_default_str();
    scan_cmd->add_option("--min-exp", opt.min_exp, "smallest atom exponent")->capture_default_str();
    scan_cmd->add_option("--max-exp", opt.max_exp, "largest atom exponent")->capture_default_str();
    scan_cmd->add_option("--shapes", opt.shapes, "comma separated filter: chain,loop,mixed");
    scan_cmd->add_option("--check", opt.check,
                         "theorem1 | theorem2 | remark2 | zeta-oracle | milnor (default theorem2)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(analyze)) return run_analyze(opt);
        if (app.got_subcommand(transpose)) return run_transpose(opt);
        if (app.got_subcommand(zeta_cmd)) return run_zeta(opt);
        if (app.got_subcommand(root)) return run_root(opt);
        if (app.got_subcommand(dual)) return run_dual(opt);
        if (app.got_subcommand(verify)) return run_verify(opt);
        if (app.got_subcommand(scan_cmd)) return run_scan(opt);
    } catch (const UsageError& e) {
        std::cerr << "bhzeta: " << e.message << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "bhzeta: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
