#ifndef CLEFT_FIELD_HPP
#define CLEFT_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cleft {

// Prime field GF(p). Elements are canonical representatives in [0, p).
// Primes are capped below 2^20 so that dot products of any realistic length
// accumulate in a 64-bit word with a single final reduction.
struct GF {
  using Elem = std::uint64_t;

  std::uint64_t p;

  explicit GF(std::uint64_t prime) : p(prime) {
    if (prime < 2 || prime >= (1ull << 20))
      throw std::invalid_argument("GF: prime must be in [2, 2^20)");
    for (std::uint64_t d = 2; d * d <= prime; ++d)
      if (prime % d == 0)
        throw std::invalid_argument("GF: modulus " + std::to_string(prime) + " is not prime");
  }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p; }
  bool is_zero(Elem a) const { return a == 0; }

  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p ? s - p : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p; }

  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("GF: inverse of zero");
    // extended Euclid on (a, p)
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t; new_t = tmp;
      tmp = r - q * new_r;
      r = new_r; new_r = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<Elem>(t);
  }

  Elem from_int(long long v) const {
    long long m = v % static_cast<long long>(p);
    if (m < 0) m += static_cast<long long>(p);
    return static_cast<Elem>(m);
  }
  Elem from_fraction(long long num, long long den) const {
    return mul(from_int(num), inv(from_int(den)));
  }

  std::string to_string(Elem a) const { return std::to_string(a); }
  std::string name() const { return "gf(" + std::to_string(p) + ")"; }

  bool operator==(const GF& o) const { return p == o.p; }
  bool operator!=(const GF& o) const { return p != o.p; }
};

// Exact rationals with arbitrary-precision integer parts.
struct QQ {
  using Elem = boost::multiprecision::cpp_rational;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  bool is_zero(const Elem& a) const { return a == 0; }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw std::domain_error("QQ: inverse of zero");
    return 1 / a;
  }

  Elem from_int(long long v) const { return Elem(v); }
  Elem from_fraction(long long num, long long den) const {
    if (den == 0) throw std::invalid_argument("QQ: zero denominator");
    return Elem(num) / Elem(den);
  }

  std::string to_string(const Elem& a) const { return a.str(); }
  std::string name() const { return "rational"; }

  bool operator==(const QQ&) const { return true; }
  bool operator!=(const QQ&) const { return false; }
};

} // namespace cleft

#endif
