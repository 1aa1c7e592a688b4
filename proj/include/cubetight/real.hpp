#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace cubetight {

/// 50 significant decimal digits; used wherever an irrational constant enters.
using Real = boost::multiprecision::cpp_bin_float_50;

}  // namespace cubetight
