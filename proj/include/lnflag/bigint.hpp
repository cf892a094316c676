#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace lnflag {

// Exact integer coefficients everywhere; multinomial coefficients overflow
// 64 bits well inside the ranges the verification sweeps cover.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace lnflag
