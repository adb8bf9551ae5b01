#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace flamingo {

// Arbitrary-precision signed integer. Small values live inline, which keeps the
// +-1 coefficients that dominate jellyfish expansions allocation-free.
using Integer = boost::multiprecision::cpp_int;

}  // namespace flamingo
