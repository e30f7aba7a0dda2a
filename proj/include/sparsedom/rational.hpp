#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace sparsedom {

using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& q) {
    return static_cast<double>(q.numerator()) / static_cast<double>(q.denominator());
}

inline std::string to_string(const Rational& q) {
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

}  // namespace sparsedom
