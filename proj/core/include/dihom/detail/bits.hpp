#pragma once

#include <cstdint>

namespace dihom::detail {

constexpr std::uint64_t full_mask(int n) {
  return n >= 64 ? ~0ull : ((1ull << n) - 1);
}

// Rotate left within the low n bits; shift must lie in [0, n).
constexpr std::uint64_t rotl(std::uint64_t bits, int shift, int n) {
  if (shift == 0) return bits;
  return ((bits << shift) | (bits >> (n - shift))) & full_mask(n);
}

constexpr std::uint64_t rotr(std::uint64_t bits, int shift, int n) {
  return rotl(bits, shift == 0 ? 0 : n - shift, n);
}

constexpr std::uint64_t bitrev64(std::uint64_t x) {
  x = ((x >> 1) & 0x5555555555555555ull) | ((x & 0x5555555555555555ull) << 1);
  x = ((x >> 2) & 0x3333333333333333ull) | ((x & 0x3333333333333333ull) << 2);
  x = ((x >> 4) & 0x0f0f0f0f0f0f0f0full) | ((x & 0x0f0f0f0f0f0f0f0full) << 4);
  x = ((x >> 8) & 0x00ff00ff00ff00ffull) | ((x & 0x00ff00ff00ff00ffull) << 8);
  x = ((x >> 16) & 0x0000ffff0000ffffull) | ((x & 0x0000ffff0000ffffull) << 16);
  return (x >> 32) | (x << 32);
}

// Residue negation as a mask operation: bit j of the result is bit (n-j) mod n
// of the input, i.e. the mask of {-a mod n : a in A}.
constexpr std::uint64_t reflect(std::uint64_t bits, int n) {
  return rotl(bitrev64(bits) >> (64 - n), 1, n);
}

constexpr int mod(int x, int n) {
  const int r = x % n;
  return r < 0 ? r + n : r;
}

constexpr int gcd_int(int a, int b) {
  while (b != 0) {
    const int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace dihom::detail
