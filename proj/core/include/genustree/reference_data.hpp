#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>

namespace genustree::reference {

/// Largest genus with tabulated values below.
inline constexpr int kMaxTabulatedGenus = 35;

/// n_g: the number of numerical semigroups of genus g (OEIS A007323),
/// g = 1..35; index 0 unused.
extern const std::array<std::uint64_t, 36> kSemigroupCounts;

/// a_g: the strong-marked lower bound, g = 1..35.
extern const std::array<std::uint64_t, 36> kLowerBoundA;

/// c_g: the healthy-marked upper bound, g = 1..35.
extern const std::array<std::uint64_t, 36> kUpperBoundC;

/// F_n with F_0 = 0, F_1 = 1.
mpz_class fibonacci(int n);

/// 2 F_g (defined for g >= 2).
mpz_class two_fibonacci(int g);

/// F_{g+2} - 1.
mpz_class fibonacci_simple(int g);

/// 1 + 3 * 2^(g-3) (defined for g >= 3).
mpz_class upper_simple(int g);

}  // namespace genustree::reference
