#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace apsum {

// Arbitrary-precision integer used for every exact quantity that may leave
// the 128-bit fast path. Signed so that S-unit term values share the type;
// nonnegativity is checked at API boundaries.
using Natural = boost::multiprecision::cpp_int;

using u128 = unsigned __int128;
using i128 = __int128;

inline constexpr u128 kU128Max = ~u128{0};

// Raised when a caller violates a documented precondition.
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct U128Hash {
  std::size_t operator()(u128 v) const noexcept {
    auto lo = static_cast<std::uint64_t>(v);
    auto hi = static_cast<std::uint64_t>(v >> 64);
    return std::hash<std::uint64_t>{}(lo ^ (hi * 0x9e3779b97f4a7c15ULL));
  }
};

std::string to_string(u128 v);
std::string to_string(i128 v);

// Parses a decimal integer. Also accepts "1e12" and "10^12" shorthands,
// evaluated exactly. Throws ContractError on malformed input or overflow.
u128 parse_u128(std::string_view text);
Natural parse_natural(std::string_view text);

std::optional<u128> checked_mul(u128 x, u128 y);
std::optional<u128> checked_add(u128 x, u128 y);
std::optional<u128> checked_pow(u128 base, unsigned exponent);

Natural pow(const Natural& base, unsigned exponent);

inline Natural to_natural(u128 v) { return Natural(v); }
std::optional<u128> to_u128(const Natural& v);

/// Returns e with base^e == n, or nullopt if n is not a power of base.
/// Requires n >= 1 and base >= 2.
std::optional<unsigned> power_exponent(u128 n, u128 base);
std::optional<unsigned> power_exponent(const Natural& n, const Natural& base);

/// p-adic valuation of n >= 1.
unsigned ord_p(u128 n, u128 p);
unsigned ord_p(const Natural& n, const Natural& p);

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(std::uint64_t n);

u128 gcd(u128 x, u128 y);

/// floor(v^(1/m)) for m >= 1, exact.
u128 integer_root(u128 v, unsigned m);
/// r with r^m == v, if v is a perfect m-th power.
std::optional<u128> exact_root(u128 v, unsigned m);

class PrimeSet {
 public:
  /// Sorts and deduplicates; throws ContractError if any entry is not prime.
  explicit PrimeSet(std::vector<std::uint64_t> primes);

  const std::vector<std::uint64_t>& primes() const { return primes_; }
  std::size_t size() const { return primes_.size(); }

  bool is_smooth(u128 n) const;
  /// Bitmask of the primes (by index) dividing n.
  std::uint32_t support(u128 n) const;

 private:
  std::vector<std::uint64_t> primes_;
};

/// All integers in [1, limit] whose prime factors lie in `primes`, ascending.
std::vector<u128> smooth_enumerate(const PrimeSet& primes, u128 limit);

}  // namespace apsum
