#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace tambara {

using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Integer& value) { return value.str(); }

// m(m-1)/2, exact for every integer m.
inline Integer choose_two(const Integer& m) { return m * (m - 1) / 2; }

}  // namespace tambara
