#pragma once

#include <cstddef>
#include <cstdint>

namespace radring {

// Caps for enumerative work. Every operation that walks a whole ring, field
// or polynomial family checks the relevant field and throws RangeError when
// the walk would exceed it.
struct Limits {
  std::uint64_t enumeration = 1'000'000;  // elements of F_q or Z_n[x]/(x^m-r)
  std::uint64_t witness = 1'000'000;      // n^m bound for zero-divisor search
  std::uint64_t brute = 1'000'000;        // q^ceil(deg/2) for trial division
  std::size_t max_m = 12;                 // ring degree
};

}  // namespace radring
