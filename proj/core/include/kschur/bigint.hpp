#ifndef KSCHUR_BIGINT_HPP
#define KSCHUR_BIGINT_HPP

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace kschur {

// Arbitrary-precision signed integer (GMP-backed).  All coefficient
// arithmetic in the library is exact; no fixed-width integer ever holds a
// coefficient.
using bigint = boost::multiprecision::mpz_int;

inline bigint gcd(const bigint& a, const bigint& b) {
    return boost::multiprecision::gcd(a, b);
}

inline bigint abs(const bigint& a) {
    return boost::multiprecision::abs(a);
}

inline std::string to_string(const bigint& a) {
    return a.str();
}

inline bigint bigint_from_string(const std::string& s) {
    return bigint(s);
}

} // namespace kschur

#endif
