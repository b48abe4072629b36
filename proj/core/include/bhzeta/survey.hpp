#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bhzeta/duality.hpp"
#include "bhzeta/invertible.hpp"
#include "bhzeta/numeric.hpp"

namespace bhzeta {

// One enumerated polynomial in canonical form: atoms sorted, loops rotated
// to their lexicographically least exponent tuple, variables renumbered
// x1..xn block by block.
struct EnumeratedShape {
    InvertiblePolynomial poly;
    std::string shape;  // e.g. "chain(3,4,5)" or "loop(2,2)+chain(3)"
};

// All chain/loop sums in n variables with atom exponents in [min_exp,
// max_exp], up to simultaneous permutation of variables and monomials.
// shape filter entries: "chain" (single chain), "loop" (single loop),
// "mixed" (everything with two or more atoms); empty set = all.
std::vector<EnumeratedShape> enumerate_invertible(std::size_t n, const Int& min_exp,
                                                  const Int& max_exp,
                                                  const std::set<std::string>& shapes = {});

// Distinct monomials, nonzero determinant, positive canonical weights and a
// critical point at the origin for both f and its transpose.
bool admissible(const InvertiblePolynomial& f);

struct ScanConfig {
    std::size_t n = 3;
    Int min_exp = 1;
    Int max_exp = 5;
    std::set<std::string> shapes;  // as in enumerate_invertible
    std::string check = "theorem2";  // theorem1 | theorem2 | remark2 | zeta-oracle | milnor
    unsigned threads = 0;            // 0: BHZETA_THREADS env var, else hardware
};

struct InstanceRecord {
    std::string shape;
    std::string polynomial;
    WeightSystem weights, weights_T;
    CyclotomicFunction zeta_reduced;
    bool ok = false;
    std::string detail;  // one-line result summary, stable across runs
    std::optional<Theorem2Verdict> verdict;  // present for theorem2 scans
};

struct ScanReport {
    ScanConfig config;
    std::vector<InstanceRecord> instances;  // deterministic order
    std::size_t checked = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;  // enumerated but inadmissible / out of scope
};

// Evaluates the configured check on every admissible enumerated polynomial.
// Instances are processed in parallel but the report order never depends on
// scheduling.
ScanReport scan(const ScanConfig& config);

}  // namespace bhzeta
