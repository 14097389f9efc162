#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace mutagoal {

/// FNV-1a over the raw bytes, 64-bit variant. Used to fingerprint frozen
/// fixture ground truths (kill matrices, result streams).
inline std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t hash = 1469598103934665603ull;
  for (unsigned char byte : bytes) {
    hash ^= byte;
    hash *= 1099511628211ull;
  }
  return hash;
}

/// 16 lowercase hex digits, zero-padded.
inline std::string hex64(std::uint64_t value) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[value & 0xf];
    value >>= 4;
  }
  return out;
}

}  // namespace mutagoal
