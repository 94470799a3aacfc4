#include "polardeg/field.hpp"

#include <array>

namespace polardeg {

namespace {

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

u64 rotl(u64 x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

// Deterministic Miller-Rabin; these bases are exact for all 64-bit n.
bool is_prime(u64 n) {
  if (n < 2) return false;
  constexpr std::array<u64, 12> bases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 b : bases) {
    if (n % b == 0) return n == b;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : bases) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(u64 modulus) : p_(modulus) {
  if (modulus <= kMinPrime || modulus >= kMaxPrime) {
    throw DomainError("prime modulus " + std::to_string(modulus) +
                      " outside (2^20, 2^62)");
  }
  if (!is_prime(modulus)) {
    throw DomainError("modulus " + std::to_string(modulus) + " is not prime");
  }
}

u64 PrimeField::pow(u64 a, u64 e) const { return powmod(a, e, p_); }

u64 PrimeField::inv(u64 a) const {
  if (a == 0) throw DomainError("division by zero mod " + std::to_string(p_));
  // extended Euclid on signed 128-bit to avoid overflow near 2^62
  __int128 t = 0, new_t = 1;
  __int128 r = p_, new_r = a;
  while (new_r != 0) {
    __int128 q = r / new_r;
    __int128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<u64>(t);
}

u64 PrimeField::from_int(long long v) const {
  if (v >= 0) return static_cast<u64>(v) % p_;
  u64 m = static_cast<u64>(-(v + 1)) + 1;  // |v| without overflow
  return neg(m % p_);
}

u64 PrimeField::from_mpz(const mpz_class& v) const {
  mpz_class m = v % mpz_class(std::to_string(p_));
  if (m < 0) m += mpz_class(std::to_string(p_));
  return std::stoull(m.get_str());
}

u64 PrimeField::from_rational(const mpq_class& v) const {
  u64 den = from_mpz(v.get_den());
  if (den == 0) {
    throw DomainError("denominator " + v.get_den().get_str() +
                      " is divisible by the modulus " + std::to_string(p_));
  }
  return div(from_mpz(v.get_num()), den);
}

PrimeField FieldSpec::prime_field() const {
  if (kind != Kind::prime_field) {
    throw DomainError("field spec describes Q, not a prime field");
  }
  return PrimeField(modulus);
}

u64 mix_seed(u64 x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

u64 derive_seed(u64 base, u64 a, u64 b, u64 c) {
  u64 h = mix_seed(base);
  h = mix_seed(h ^ a);
  h = mix_seed(h ^ (b * 0x100000001b3ULL));
  h = mix_seed(h ^ (c * 0xc2b2ae3d27d4eb4fULL));
  return h;
}

// xoshiro256** seeded through splitmix64; fully specified, so streams are
// identical across standard libraries.
SeedStream::SeedStream(u64 seed) : seed_(seed) {
  u64 x = seed;
  for (auto& s : state_) {
    x += 0x9e3779b97f4a7c15ULL;
    u64 z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    s = z ^ (z >> 31);
  }
}

u64 SeedStream::next_u64() {
  const u64 result = rotl(state_[1] * 5, 7) * 9;
  const u64 t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

u64 SeedStream::uniform(u64 bound) {
  if (bound == 0) throw DomainError("uniform(0)");
  const u64 limit = ~u64{0} - (~u64{0} % bound);
  u64 r;
  do {
    r = next_u64();
  } while (r >= limit);
  return r % bound;
}

mpq_class random_scalar(const RationalField&, SeedStream&) {
  throw DomainError("random sampling is only defined over prime fields");
}

}  // namespace polardeg
