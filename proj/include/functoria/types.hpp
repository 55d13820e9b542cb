#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace functoria {

// Exact coefficients live in 256-bit signed integers.  The largest value the
// library ever stores is bounded by d(n) * n^7.5 (weight-16 coefficients at
// the maximum supported truncation length 2^20), which stays below 2^158 and
// leaves wide margin under the 2^255 limit.
using Int256 = boost::multiprecision::int256_t;

using cplx = std::complex<double>;

// raised when a requested truncation length exceeds what the exact-integer
// representation (and the CRT modulus behind it) can certify
struct capacity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// raised on malformed cache files / CSV inputs
struct format_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// raised when a multiplicative expansion needs a local factor (or local
// depth) that the caller did not supply
struct missing_local_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace functoria
