#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace torelli {

/// Exact integer used for every Magnus, Fox and Lie coefficient.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace torelli
