#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace roq {

using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Integer& v) { return v.str(); }

// Representative of v modulo m in [0, m). m must be positive.
inline Integer mod_floor(const Integer& v, const Integer& m) {
    Integer r = v % m;
    if (r < 0) r += m;
    return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
    return boost::multiprecision::gcd(a, b);
}

}  // namespace roq
