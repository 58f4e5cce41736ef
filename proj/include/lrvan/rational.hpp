#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace lrvan {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct IntegerScaled {
    BigInt factor;               // least positive integer clearing all denominators
    std::vector<BigInt> values;  // factor * point, componentwise
};

inline IntegerScaled scale_to_integer(const std::vector<Rational>& point) {
    BigInt l = 1;
    for (const Rational& q : point) {
        BigInt d = boost::multiprecision::denominator(q);
        l = boost::multiprecision::lcm(l, d);
    }
    IntegerScaled out;
    out.factor = l;
    out.values.reserve(point.size());
    for (const Rational& q : point) {
        Rational scaled = q * l;
        out.values.push_back(boost::multiprecision::numerator(scaled));
    }
    return out;
}

}  // namespace lrvan
