#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace superz {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rat& r) { return r.str(); }

} // namespace superz
