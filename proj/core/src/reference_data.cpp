#include "genustree/reference_data.hpp"

namespace genustree::reference {

const std::array<std::uint64_t, 36> kSemigroupCounts = {
    0,        1,        2,        4,        7,        12,       23,       39,
    67,       118,      204,      343,      592,      1001,     1693,     2857,
    4806,     8045,     13467,    22464,    37396,    62194,    103246,   170963,
    282828,   467224,   770832,   1270267,  2091030,  3437839,  5646773,  9266788,
    15195070, 24896206, 40761087, 66687201};

const std::array<std::uint64_t, 36> kLowerBoundA = {
    0,        1,        2,        4,        7,        12,       22,       37,
    62,       104,      175,      291,      482,      796,      1315,     2166,
    3559,     5838,     9569,     15665,    25612,    41831,    68270,    111337,
    181438,   295480,   480938,   782408,   1272250,  2067870,  3359757,  5456862,
    8860132,  14381714, 23338153, 37863301};

const std::array<std::uint64_t, 36> kUpperBoundC = {
    0,        1,         2,         4,         7,         13,        24,        44,
    81,       151,       280,       525,       984,       1859,      3511,      6682,
    12709,    24334,     46565,     89626,     172381,    333262,    643733,    1249147,
    2421592,  4713715,   9165792,   17888456,  34873456,  68212220,  133269997, 261167821,
    511211652, 1003436520, 1967293902, 3866902804};

mpz_class fibonacci(int n) {
  if (n < 0) throw std::invalid_argument("fibonacci: n >= 0");
  mpz_class out;
  mpz_fib_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

mpz_class two_fibonacci(int g) { return 2 * fibonacci(g); }

mpz_class fibonacci_simple(int g) { return fibonacci(g + 2) - 1; }

mpz_class upper_simple(int g) {
  if (g < 3) throw std::invalid_argument("upper_simple: g >= 3");
  mpz_class out = 3;
  out <<= g - 3;
  return out + 1;
}

}  // namespace genustree::reference
