#pragma once

#include <string>

#include "bhzeta/cyclotomic.hpp"
#include "bhzeta/duality.hpp"
#include "bhzeta/invertible.hpp"
#include "bhzeta/survey.hpp"

namespace bhzeta {

// The interchange form of a cyclotomic function: a JSON array of [m, s_m]
// pairs ascending by m, numbers kept as JSON integers while they fit 64 bits
// and emitted as decimal strings beyond that.
std::string cyclotomic_json(const CyclotomicFunction& phi);

// "(1-t^5)(1-t^15)^4/(1-t)" style display form, factors ascending by
// period, negative exponents collected under the bar.
std::string cyclotomic_text(const CyclotomicFunction& phi);
std::string cyclotomic_latex(const CyclotomicFunction& phi);

std::string weights_text(const WeightSystem& w);
std::string weights_json(const WeightSystem& w);

// Scan reports in the three output formats. JSON follows
// docs/report-schema.json; CSV is one summary row per instance; the LaTeX
// emitter produces a tabular of shape / weights / zeta columns.
std::string report_json(const ScanReport& r);
std::string report_csv(const ScanReport& r);
std::string report_latex(const ScanReport& r);

}  // namespace bhzeta
