#include "bhzeta/serialize.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace bhzeta {

namespace {

using json = nlohmann::ordered_json;

// integers stay JSON numbers while they are exact in 64 bits
json int_value(const Int& x) {
    if (fits_int64(x)) return json(to_int64(x));
    return json(x.str());
}

json cyclotomic_value(const CyclotomicFunction& phi) {
    json pairs = json::array();
    for (const auto& [m, s] : phi.support()) pairs.push_back(json::array({int_value(m), int_value(s)}));
    return pairs;
}

void append_factor(std::ostringstream& out, const Int& m, const Int& s, bool latex) {
    std::string base = latex ? "(1-t^{" + m.str() + "})" : "(1-t^" + m.str() + ")";
    if (m == 1) base = "(1-t)";
    out << base;
    Int e = abs(s);
    if (e != 1) {
        if (latex)
            out << "^{" << e.str() << "}";
        else
            out << "^" << e.str();
    }
}

std::string render(const CyclotomicFunction& phi, bool latex) {
    if (phi.is_one()) return "1";
    std::ostringstream num, den;
    bool has_num = false, has_den = false;
    for (const auto& [m, s] : phi.support()) {
        if (s > 0) {
            append_factor(num, m, s, latex);
            has_num = true;
        } else {
            append_factor(den, m, s, latex);
            has_den = true;
        }
    }
    if (!has_den) return num.str();
    std::string top = has_num ? num.str() : "1";
    if (latex) return "\\frac{" + top + "}{" + den.str() + "}";
    return top + "/" + den.str();
}

json weights_value(const WeightSystem& w) {
    json out;
    json ws = json::array();
    for (const Int& wi : w.w) ws.push_back(int_value(wi));
    out["w"] = ws;
    out["d"] = int_value(w.d);
    out["c"] = int_value(w.c);
    return out;
}

std::string csv_escape(const std::string& s) {
    bool needs = s.find_first_of(",\"\n") != std::string::npos;
    if (!needs) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

std::string latex_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '^' || ch == '_' || ch == '&' || ch == '%' || ch == '#') out += '\\';
        out += ch;
    }
    return out;
}

}  // namespace

std::string cyclotomic_json(const CyclotomicFunction& phi) { return cyclotomic_value(phi).dump(); }

std::string cyclotomic_text(const CyclotomicFunction& phi) { return render(phi, false); }

std::string cyclotomic_latex(const CyclotomicFunction& phi) { return render(phi, true); }

std::string weights_text(const WeightSystem& w) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < w.w.size(); ++i) {
        if (i) out << ",";
        out << w.w[i].str();
    }
    out << ";" << w.d.str() << ")";
    return out.str();
}

std::string weights_json(const WeightSystem& w) { return weights_value(w).dump(); }

std::string report_json(const ScanReport& r) {
    json out;
    json cfg;
    cfg["n"] = r.config.n;
    cfg["min_exp"] = int_value(r.config.min_exp);
    cfg["max_exp"] = int_value(r.config.max_exp);
    json shapes = json::array();
    for (const std::string& s : r.config.shapes) shapes.push_back(s);
    cfg["shapes"] = shapes;
    cfg["check"] = r.config.check;
    out["config"] = cfg;
    out["checked"] = r.checked;
    out["failed"] = r.failed;
    out["skipped"] = r.skipped;

    json instances = json::array();
    for (const InstanceRecord& rec : r.instances) {
        json item;
        item["shape"] = rec.shape;
        item["polynomial"] = rec.polynomial;
        item["weights"] = weights_value(rec.weights);
        item["weights_transpose"] = weights_value(rec.weights_T);
        item["zeta_reduced"] = cyclotomic_value(rec.zeta_reduced);
        item["ok"] = rec.ok;
        item["detail"] = rec.detail;
        if (rec.verdict) {
            const Theorem2Verdict& v = *rec.verdict;
            json verdict;
            verdict["case"] = v.case_label;
            verdict["excluded"] = v.excluded;
            verdict["c"] = int_value(v.c);
            verdict["c_transpose"] = int_value(v.cT);
            verdict["d"] = int_value(v.d);
            verdict["root_exists"] = json::array({v.root_exists_f, v.root_exists_fT});
            verdict["geometric_root"] = json::array({v.geometric_root_f, v.geometric_root_fT});
            verdict["duality_holds"] = v.duality_holds;
            if (v.witness) {
                verdict["witness"] = json::array(
                    {cyclotomic_value(v.witness->first), cyclotomic_value(v.witness->second)});
                verdict["witness_source"] = v.witness_source;
            }
            verdict["search_exhausted"] = v.search_exhausted;
            if (v.unique_unreduced_root)
                verdict["unique_unreduced_root"] = *v.unique_unreduced_root;
            json flags = json::array();
            for (const std::string& fl : v.exceptional_flags) flags.push_back(fl);
            verdict["exceptional_flags"] = flags;
            verdict["statements_ok"] =
                json::array({v.statement1_ok, v.statement2_ok, v.statement3_ok});
            item["verdict"] = verdict;
        }
        instances.push_back(item);
    }
    out["instances"] = instances;
    return out.dump(2) + "\n";
}

std::string report_csv(const ScanReport& r) {
    std::ostringstream out;
    out << "shape,polynomial,weights,weights_transpose,zeta_reduced,ok,detail\n";
    for (const InstanceRecord& rec : r.instances) {
        out << csv_escape(rec.shape) << "," << csv_escape(rec.polynomial) << ","
            << csv_escape(weights_text(rec.weights)) << ","
            << csv_escape(weights_text(rec.weights_T)) << ","
            << csv_escape(cyclotomic_text(rec.zeta_reduced)) << "," << (rec.ok ? "true" : "false")
            << "," << csv_escape(rec.detail) << "\n";
    }
    return out.str();
}

std::string report_latex(const ScanReport& r) {
    std::ostringstream out;
    out << "\\begin{tabular}{llllc}\n";
    out << "shape & weights & transpose weights & $\\tilde\\zeta$ & ok \\\\\n\\hline\n";
    for (const InstanceRecord& rec : r.instances) {
        out << latex_escape(rec.shape) << " & $" << weights_text(rec.weights) << "$ & $"
            << weights_text(rec.weights_T) << "$ & $" << cyclotomic_latex(rec.zeta_reduced)
            << "$ & " << (rec.ok ? "yes" : "no") << " \\\\\n";
    }
    out << "\\end{tabular}\n";
    return out.str();
}

}  // namespace bhzeta
