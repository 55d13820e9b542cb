#pragma once

#include <cstddef>
#include <vector>

#include "functoria/types.hpp"

namespace functoria {

// hard cap on truncation length; chosen so every exact coefficient the
// library produces stays far below the CRT modulus used internally
inline constexpr std::size_t kMaxSeriesLen = std::size_t(1) << 20;

// c[k] = sum_{i+j=k} a[i]*b[j] for k < out_len, computed exactly.
// The result always has out_len entries (zero padded past the support).
std::vector<Int256> series_multiply(const std::vector<Int256>& a,
                                    const std::vector<Int256>& b,
                                    std::size_t out_len);

// base(q)^exponent truncated to out_len entries, exponent >= 1, exact
std::vector<Int256> series_power(const std::vector<Int256>& base,
                                 unsigned exponent,
                                 std::size_t out_len);

}  // namespace functoria
