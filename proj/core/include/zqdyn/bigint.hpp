#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace zqdyn {

// Arbitrary-precision integer used wherever counts can exceed word range
// (span sizes, kernel sizes, state-space sizes, 2^B vs q^n comparisons).
using BigInt = boost::multiprecision::cpp_int;

}  // namespace zqdyn
