#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>

#include "polardeg/errors.hpp"

namespace polardeg {

/// Hard cap on the number of variables of any polynomial ring. Target
/// computations use at most 7 (six coordinates plus one auxiliary).
inline constexpr std::size_t kMaxVars = 12;

/// Dense exponent vector. Unused trailing slots are zero, so comparisons
/// can ignore the ambient variable count.
class Monomial {
 public:
  Monomial() = default;

  static Monomial from_exponents(std::span<const unsigned> exps) {
    if (exps.size() > kMaxVars) throw DomainError("too many variables");
    Monomial m;
    for (std::size_t i = 0; i < exps.size(); ++i) m.set(i, exps[i]);
    return m;
  }
  static Monomial variable(std::size_t i, unsigned power = 1) {
    Monomial m;
    m.set(i, power);
    return m;
  }

  unsigned operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, unsigned value) {
    if (value > 0xffffu) throw DomainError("exponent overflow");
    deg_ = static_cast<std::uint32_t>(deg_ - e_[i] + value);
    e_[i] = static_cast<std::uint16_t>(value);
  }
  unsigned degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }

  /// Bit i set iff variable i occurs; a quick necessary test for division.
  std::uint32_t support_mask() const {
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (e_[i]) m |= (1u << i);
    return m;
  }

  bool divides(const Monomial& other) const {
    if (deg_ > other.deg_) return false;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (e_[i] > other.e_[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      unsigned v = unsigned(a.e_[i]) + b.e_[i];
      if (v > 0xffffu) throw DomainError("exponent overflow");
      m.e_[i] = static_cast<std::uint16_t>(v);
    }
    m.deg_ = a.deg_ + b.deg_;
    return m;
  }

  /// a / b; requires b | a.
  friend Monomial quotient(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      m.e_[i] = static_cast<std::uint16_t>(a.e_[i] - b.e_[i]);
    m.deg_ = a.deg_ - b.deg_;
    return m;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      m.e_[i] = std::max(a.e_[i], b.e_[i]);
      m.deg_ += m.e_[i];
    }
    return m;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (a.e_[i] && b.e_[i]) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.deg_ == b.deg_ && a.e_ == b.e_;
  }

  std::size_t hash() const {
    std::size_t h = deg_;
    for (auto v : e_) h = h * 1000003u ^ v;
    return h;
  }

  /// Degree restricted to variables in [lo, hi).
  unsigned partial_degree(std::size_t lo, std::size_t hi) const {
    unsigned d = 0;
    for (std::size_t i = lo; i < hi; ++i) d += e_[i];
    return d;
  }

 private:
  std::array<std::uint16_t, kMaxVars> e_{};
  std::uint32_t deg_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Term orders: graded reverse lexicographic, lexicographic with
/// x0 > x1 > ..., and a block order that eliminates variables [0, split).
class MonomialOrder {
 public:
  enum class Kind { degrevlex, lex, block };

  static MonomialOrder degrevlex() { return MonomialOrder(Kind::degrevlex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
  static MonomialOrder block(std::size_t split) { return MonomialOrder(Kind::block, split); }

  Kind kind() const { return kind_; }
  std::size_t split() const { return split_; }

  /// Three-way comparison: >0 when a is the larger monomial.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case Kind::degrevlex:
        return revlex_range(a, b, 0, kMaxVars, a.degree(), b.degree());
      case Kind::lex:
        for (std::size_t i = 0; i < kMaxVars; ++i)
          if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        return 0;
      case Kind::block: {
        int c = revlex_range(a, b, 0, split_, a.partial_degree(0, split_),
                             b.partial_degree(0, split_));
        if (c) return c;
        return revlex_range(a, b, split_, kMaxVars, a.partial_degree(split_, kMaxVars),
                            b.partial_degree(split_, kMaxVars));
      }
    }
    return 0;
  }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind k, std::size_t split) : kind_(k), split_(split) {}

  static int revlex_range(const Monomial& a, const Monomial& b, std::size_t lo,
                          std::size_t hi, unsigned da, unsigned db) {
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = hi; i-- > lo;)
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
  }

  Kind kind_;
  std::size_t split_;
};

}  // namespace polardeg
