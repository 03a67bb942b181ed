#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace qmatrix {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision count. Intermediate alternating sums are carried as
/// signed BigInt; results are funneled through to_count, which rejects a
/// negative final value.
using BigCount = BigInt;

BigCount to_count(const BigInt& value);

}  // namespace qmatrix
