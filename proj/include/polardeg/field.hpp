#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "polardeg/errors.hpp"

namespace polardeg {

using u64 = std::uint64_t;

inline constexpr u64 kDefaultPrime = 2147483647ULL;
inline constexpr u64 kMinPrime = u64{1} << 20;
inline constexpr u64 kMaxPrime = u64{1} << 62;

bool is_prime(u64 n);

/// Integers modulo a prime p with 2^20 < p < 2^62. Elements are kept
/// reduced in [0, p).
class PrimeField {
 public:
  using value_type = u64;
  static constexpr bool is_exact_rational = false;

  explicit PrimeField(u64 modulus = kDefaultPrime);

  u64 modulus() const { return p_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(value_type a) const { return a == 0; }
  bool is_one(value_type a) const { return a == 1; }

  value_type add(value_type a, value_type b) const {
    u64 s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  value_type inv(value_type a) const;
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }
  value_type pow(value_type a, u64 e) const;

  value_type from_int(long long v) const;
  value_type from_mpz(const mpz_class& v) const;
  /// Throws DomainError when the denominator vanishes mod p.
  value_type from_rational(const mpq_class& v) const;

  std::string to_string(value_type a) const { return std::to_string(a); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) {
    return a.p_ == b.p_;
  }

 private:
  u64 p_;
};

/// The rational numbers, backed by GMP.
class RationalField {
 public:
  using value_type = mpq_class;
  static constexpr bool is_exact_rational = true;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool is_one(const value_type& a) const { return a == 1; }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const {
    if (sgn(a) == 0) throw DomainError("division by zero in Q");
    return 1 / a;
  }
  value_type div(const value_type& a, const value_type& b) const {
    return mul(a, inv(b));
  }
  value_type pow(value_type a, u64 e) const {
    value_type r = 1;
    while (e) {
      if (e & 1) r *= a;
      a *= a;
      e >>= 1;
    }
    return r;
  }

  value_type from_int(long long v) const { return mpq_class(static_cast<long>(v)); }
  value_type from_mpz(const mpz_class& v) const { return mpq_class(v); }
  value_type from_rational(const mpq_class& v) const { return v; }

  std::string to_string(const value_type& a) const { return a.get_str(); }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

/// Runtime description of the ground field, as given on the command line
/// and written into reports.
struct FieldSpec {
  enum class Kind { rationals, prime_field };

  Kind kind = Kind::prime_field;
  u64 modulus = kDefaultPrime;

  static FieldSpec rationals() { return {Kind::rationals, 0}; }
  static FieldSpec prime(u64 p) {
    PrimeField check(p);  // validates
    return {Kind::prime_field, check.modulus()};
  }

  PrimeField prime_field() const;
  std::string kind_name() const {
    return kind == Kind::rationals ? "rationals" : "prime-field";
  }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Deterministic pseudo-random stream. Every "generic" choice in the
/// library draws from one of these; equal seeds give equal streams on
/// every platform (splitmix64 seeding, xoshiro256** core).
class SeedStream {
 public:
  explicit SeedStream(u64 seed);

  u64 seed() const { return seed_; }
  u64 next_u64();
  /// Uniform in [0, bound), bound > 0, rejection sampled.
  u64 uniform(u64 bound);

 private:
  u64 seed_;
  u64 state_[4];
};

/// splitmix64 finalizer; used to derive child seeds.
u64 mix_seed(u64 x);
u64 derive_seed(u64 base, u64 a, u64 b = 0, u64 c = 0);

/// Uniform element of F_p. Over Q there is no uniform distribution, so
/// the rational overload rejects the request.
inline u64 random_scalar(const PrimeField& field, SeedStream& stream) {
  return stream.uniform(field.modulus());
}
inline u64 random_nonzero_scalar(const PrimeField& field, SeedStream& stream) {
  return 1 + stream.uniform(field.modulus() - 1);
}
[[noreturn]] mpq_class random_scalar(const RationalField& field, SeedStream& stream);

}  // namespace polardeg
