#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace singzeta {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int gcd(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(a, b);
}

inline Int lcm(const Int& a, const Int& b) {
    return boost::multiprecision::lcm(a, b);
}

}  // namespace singzeta
