#include "apsum/numutil.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace apsum {

std::string to_string(u128 v) {
  if (v == 0) return "0";
  std::string out;
  while (v != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::string to_string(i128 v) {
  if (v < 0) return "-" + to_string(static_cast<u128>(-(v + 1)) + 1);
  return to_string(static_cast<u128>(v));
}

namespace {

u128 parse_plain(std::string_view text, std::string_view whole) {
  if (text.empty()) throw ContractError("malformed integer: '" + std::string(whole) + "'");
  u128 v = 0;
  for (char c : text) {
    if (c < '0' || c > '9') throw ContractError("malformed integer: '" + std::string(whole) + "'");
    auto next = checked_mul(v, 10);
    if (next) next = checked_add(*next, static_cast<u128>(c - '0'));
    if (!next) throw ContractError("integer out of 128-bit range: '" + std::string(whole) + "'");
    v = *next;
  }
  return v;
}

}  // namespace

u128 parse_u128(std::string_view text) {
  if (auto pos = text.find('^'); pos != std::string_view::npos) {
    u128 base = parse_plain(text.substr(0, pos), text);
    u128 exponent = parse_plain(text.substr(pos + 1), text);
    if (exponent > 1000) throw ContractError("exponent too large: '" + std::string(text) + "'");
    auto v = checked_pow(base, static_cast<unsigned>(exponent));
    if (!v) throw ContractError("integer out of 128-bit range: '" + std::string(text) + "'");
    return *v;
  }
  if (auto pos = text.find_first_of("eE"); pos != std::string_view::npos) {
    u128 mantissa = parse_plain(text.substr(0, pos), text);
    u128 exponent = parse_plain(text.substr(pos + 1), text);
    if (exponent > 1000) throw ContractError("exponent too large: '" + std::string(text) + "'");
    auto scale = checked_pow(10, static_cast<unsigned>(exponent));
    std::optional<u128> v = scale ? checked_mul(mantissa, *scale) : std::nullopt;
    if (!v) throw ContractError("integer out of 128-bit range: '" + std::string(text) + "'");
    return *v;
  }
  return parse_plain(text, text);
}

Natural parse_natural(std::string_view text) {
  auto digits = [&](std::string_view part) {
    if (part.empty() || !std::all_of(part.begin(), part.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw ContractError("malformed integer: '" + std::string(text) + "'");
    return Natural(std::string(part));
  };
  auto exponent = [&](std::string_view part) {
    const Natural e = digits(part);
    if (e > 100000) throw ContractError("exponent too large: '" + std::string(text) + "'");
    return e.convert_to<unsigned>();
  };
  if (auto pos = text.find('^'); pos != std::string_view::npos)
    return pow(digits(text.substr(0, pos)), exponent(text.substr(pos + 1)));
  if (auto pos = text.find_first_of("eE"); pos != std::string_view::npos)
    return digits(text.substr(0, pos)) * pow(Natural(10), exponent(text.substr(pos + 1)));
  return digits(text);
}

std::optional<u128> checked_mul(u128 x, u128 y) {
  u128 r;
  if (__builtin_mul_overflow(x, y, &r)) return std::nullopt;
  return r;
}

std::optional<u128> checked_add(u128 x, u128 y) {
  u128 r;
  if (__builtin_add_overflow(x, y, &r)) return std::nullopt;
  return r;
}

std::optional<u128> checked_pow(u128 base, unsigned exponent) {
  u128 result = 1;
  for (unsigned i = 0; i < exponent; ++i) {
    auto next = checked_mul(result, base);
    if (!next) return std::nullopt;
    result = *next;
  }
  return result;
}

Natural pow(const Natural& base, unsigned exponent) { return boost::multiprecision::pow(base, exponent); }

std::optional<u128> to_u128(const Natural& v) {
  if (v < 0 || boost::multiprecision::msb(v | 1) >= 128) return std::nullopt;
  return static_cast<u128>(v);
}

std::optional<unsigned> power_exponent(u128 n, u128 base) {
  if (base < 2) throw ContractError("power_exponent: base must be >= 2");
  if (n < 1) throw ContractError("power_exponent: n must be >= 1");
  unsigned e = 0;
  while (n % base == 0) {
    n /= base;
    ++e;
  }
  if (n != 1) return std::nullopt;
  return e;
}

std::optional<unsigned> power_exponent(const Natural& n, const Natural& base) {
  if (base < 2) throw ContractError("power_exponent: base must be >= 2");
  if (n < 1) throw ContractError("power_exponent: n must be >= 1");
  if (auto small_n = to_u128(n)) {
    if (auto small_base = to_u128(base)) return power_exponent(*small_n, *small_base);
    if (*small_n == 1) return 0u;
    return std::nullopt;
  }
  // Power-of-two bases: a single set bit at a multiple of log2(base).
  if ((base & (base - 1)) == 0) {
    const auto shift = boost::multiprecision::msb(base);
    const auto top = boost::multiprecision::msb(n);
    if (top != boost::multiprecision::lsb(n) || top % shift != 0) return std::nullopt;
    return static_cast<unsigned>(top / shift);
  }
  Natural rest = n;
  Natural quotient, remainder;
  unsigned e = 0;
  while (rest != 1) {
    boost::multiprecision::divide_qr(rest, base, quotient, remainder);
    if (remainder != 0) return std::nullopt;
    rest.swap(quotient);
    ++e;
  }
  return e;
}

unsigned ord_p(u128 n, u128 p) {
  if (n == 0) throw ContractError("ord_p: n must be >= 1");
  if (p < 2) throw ContractError("ord_p: p must be >= 2");
  unsigned e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

unsigned ord_p(const Natural& n, const Natural& p) {
  if (n <= 0) throw ContractError("ord_p: n must be >= 1");
  if (p < 2) throw ContractError("ord_p: p must be >= 2");
  Natural rest = n;
  Natural quotient, remainder;
  unsigned e = 0;
  for (;;) {
    boost::multiprecision::divide_qr(rest, p, quotient, remainder);
    if (remainder != 0) return e;
    rest.swap(quotient);
    ++e;
  }
}

namespace {

std::uint64_t mul_mod(std::uint64_t x, std::uint64_t y, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(x) * y % m);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  b %= m;
  while (e != 0) {
    if (e & 1) r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t witness : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(witness, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u128 gcd(u128 x, u128 y) {
  while (y != 0) {
    u128 t = x % y;
    x = y;
    y = t;
  }
  return x;
}

u128 integer_root(u128 v, unsigned m) {
  if (m == 0) throw ContractError("integer_root: m must be >= 1");
  if (m == 1 || v < 2) return v;
  // Floating estimate, then exact correction in both directions.
  auto estimate = static_cast<u128>(std::pow(static_cast<long double>(v), 1.0L / m));
  auto fits = [&](u128 r) {
    auto p = checked_pow(r, m);
    return p && *p <= v;
  };
  u128 r = estimate;
  while (r > 0 && !fits(r)) --r;
  while (fits(r + 1)) ++r;
  return r;
}

std::optional<u128> exact_root(u128 v, unsigned m) {
  const u128 r = integer_root(v, m);
  auto p = checked_pow(r, m);
  if (p && *p == v) return r;
  return std::nullopt;
}

PrimeSet::PrimeSet(std::vector<std::uint64_t> primes) : primes_(std::move(primes)) {
  std::sort(primes_.begin(), primes_.end());
  primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
  for (auto p : primes_) {
    if (!is_prime(p)) throw ContractError("PrimeSet: " + std::to_string(p) + " is not prime");
  }
  if (primes_.size() > 32) throw ContractError("PrimeSet: at most 32 primes supported");
}

bool PrimeSet::is_smooth(u128 n) const {
  if (n == 0) return false;
  for (auto p : primes_) {
    while (n % p == 0) n /= p;
  }
  return n == 1;
}

std::uint32_t PrimeSet::support(u128 n) const {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (n % primes_[i] == 0) mask |= std::uint32_t{1} << i;
  }
  return mask;
}

namespace {

void smooth_dfs(const std::vector<std::uint64_t>& primes, std::size_t index, u128 value, u128 limit,
                std::vector<u128>& out) {
  if (index == primes.size()) {
    out.push_back(value);
    return;
  }
  for (;;) {
    smooth_dfs(primes, index + 1, value, limit, out);
    auto next = checked_mul(value, primes[index]);
    if (!next || *next > limit) return;
    value = *next;
  }
}

}  // namespace

std::vector<u128> smooth_enumerate(const PrimeSet& primes, u128 limit) {
  if (limit < 1) throw ContractError("smooth_enumerate: limit must be >= 1");
  std::vector<u128> out;
  smooth_dfs(primes.primes(), 0, 1, limit, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace apsum
