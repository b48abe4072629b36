#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

namespace bhzeta {

// All arithmetic in the library is exact. Periods stay small at desk scale
// but nothing assumes they fit a machine word.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

inline Int gcd_all(const std::vector<Int>& xs) {
    Int g = 0;
    for (const Int& x : xs) g = gcd(g, x);
    return g;
}

inline Int abs(const Int& x) { return boost::multiprecision::abs(x); }

// Euclidean remainder in [0, m) for m > 0.
inline Int mod_floor(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

bool fits_int64(const Int& x);
std::int64_t to_int64(const Int& x);  // caller checks fits_int64 first

}  // namespace bhzeta
