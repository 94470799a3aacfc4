#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polardeg/errors.hpp"
#include "polardeg/field.hpp"
#include "polardeg/monomial.hpp"

namespace polardeg {

/// Exact multivariate polynomial over the field K (PrimeField or
/// RationalField). Canonical form: nonzero coefficients only, terms sorted
/// descending in degrevlex. Values are immutable in practice; every
/// operation returns a fresh polynomial.
template <class K>
class MultiPoly {
 public:
  using Field = K;
  using Scalar = typename K::value_type;

  struct Term {
    Monomial mono;
    Scalar coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  MultiPoly() : MultiPoly(K{}, 0) {}
  MultiPoly(K field, std::size_t nvars) : field_(std::move(field)), nvars_(nvars) {
    if (nvars > kMaxVars) throw DomainError("at most " + std::to_string(kMaxVars) + " variables");
  }

  static MultiPoly from_terms(K field, std::size_t nvars, std::vector<Term> terms) {
    MultiPoly p(std::move(field), nvars);
    p.terms_ = std::move(terms);
    p.canonicalize();
    return p;
  }
  static MultiPoly constant(K field, std::size_t nvars, const Scalar& c) {
    MultiPoly p(field, nvars);
    if (!p.field_.is_zero(c)) p.terms_.push_back({Monomial{}, c});
    return p;
  }
  static MultiPoly variable(K field, std::size_t nvars, std::size_t index) {
    if (index >= nvars) throw DomainError("variable index out of range");
    MultiPoly p(field, nvars);
    p.terms_.push_back({Monomial::variable(index), p.field_.one()});
    return p;
  }
  static MultiPoly term(K field, std::size_t nvars, const Monomial& m, const Scalar& c) {
    MultiPoly p(field, nvars);
    if (!p.field_.is_zero(c)) p.terms_.push_back({m, c});
    return p;
  }

  const K& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : int(terms_.front().mono.degree()); }
  bool is_homogeneous() const {
    for (const auto& t : terms_)
      if (t.mono.degree() != terms_.front().mono.degree()) return false;
    return true;
  }
  unsigned degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono[var]);
    return d;
  }
  bool uses_variable(std::size_t var) const { return degree_in(var) > 0; }

  const Term& leading_term() const {
    if (terms_.empty()) throw DomainError("leading term of zero polynomial");
    return terms_.front();
  }
  Scalar constant_term() const {
    if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
    return field_.zero();
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.field_ == b.field_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    check_same_ring(a, b);
    return a.merge(b, false);
  }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    check_same_ring(a, b);
    return a.merge(b, true);
  }
  MultiPoly operator-() const {
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.coeff = field_.neg(t.coeff);
    return r;
  }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    check_same_ring(a, b);
    MultiPoly r(a.field_, a.nvars_);
    if (a.is_zero() || b.is_zero()) return r;
    r.terms_.reserve(a.size() * b.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_)
        r.terms_.push_back({s.mono * t.mono, a.field_.mul(s.coeff, t.coeff)});
    r.canonicalize();
    return r;
  }
  MultiPoly scaled(const Scalar& c) const {
    MultiPoly r(field_, nvars_);
    if (field_.is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, field_.mul(t.coeff, c)});
    return r;
  }
  MultiPoly times_monomial(const Monomial& m, const Scalar& c) const {
    MultiPoly r(field_, nvars_);
    if (field_.is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    // multiplication by a monomial preserves degrevlex order
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, field_.mul(t.coeff, c)});
    return r;
  }
  MultiPoly pow(unsigned e) const {
    MultiPoly r = constant(field_, nvars_, field_.one());
    MultiPoly base = *this;
    while (e) {
      if (e & 1) r = r * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return r;
  }

  MultiPoly& operator+=(const MultiPoly& b) { return *this = *this + b; }
  MultiPoly& operator-=(const MultiPoly& b) { return *this = *this - b; }
  MultiPoly& operator*=(const MultiPoly& b) { return *this = *this * b; }

  /// Divide by the leading coefficient (degrevlex); zero stays zero.
  MultiPoly monic() const {
    if (is_zero()) return *this;
    return scaled(field_.inv(terms_.front().coeff));
  }

  /// Same polynomial viewed in a ring with `nvars` variables, variable i
  /// moved to slot i + offset. Throws if a variable would fall off.
  MultiPoly embed(std::size_t nvars, std::size_t offset = 0) const {
    if (nvars_ + offset > nvars) {
      for (const auto& t : terms_)
        for (std::size_t i = 0; i < nvars_; ++i)
          if (t.mono[i] && i + offset >= nvars) throw DomainError("embed drops a variable");
    }
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m;
      for (std::size_t i = 0; i < nvars_; ++i)
        if (t.mono[i]) m.set(i + offset, t.mono[i]);
      out.push_back({m, t.coeff});
    }
    return from_terms(field_, nvars, std::move(out));
  }
  /// Inverse of embed(): drop the first `offset` slots, which must be unused.
  MultiPoly shift_down(std::size_t nvars, std::size_t offset) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m;
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (!t.mono[i]) continue;
        if (i < offset || i - offset >= nvars) throw DomainError("shift drops a variable");
        m.set(i - offset, t.mono[i]);
      }
      out.push_back({m, t.coeff});
    }
    return from_terms(field_, nvars, std::move(out));
  }

  Scalar evaluate(std::span<const Scalar> point) const {
    if (point.size() != nvars_) throw RingMismatch("evaluation point has wrong length");
    Scalar acc = field_.zero();
    for (const auto& t : terms_) {
      Scalar v = t.coeff;
      for (std::size_t i = 0; i < nvars_; ++i)
        if (t.mono[i]) v = field_.mul(v, field_.pow(point[i], t.mono[i]));
      acc = field_.add(acc, v);
    }
    return acc;
  }

  static void check_same_ring(const MultiPoly& a, const MultiPoly& b) {
    if (!(a.field_ == b.field_)) throw RingMismatch("polynomials over different fields");
    if (a.nvars_ != b.nvars_)
      throw RingMismatch("variable count mismatch: " + std::to_string(a.nvars_) + " vs " +
                         std::to_string(b.nvars_));
  }

 private:
  static bool term_greater(const Term& a, const Term& b) {
    return MonomialOrder::degrevlex().greater(a.mono, b.mono);
  }

  void canonicalize() {
    std::sort(terms_.begin(), terms_.end(), term_greater);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().mono == t.mono) {
        out.back().coeff = field_.add(out.back().coeff, t.coeff);
      } else {
        if (!out.empty() && field_.is_zero(out.back().coeff)) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && field_.is_zero(out.back().coeff)) out.pop_back();
    terms_ = std::move(out);
  }

  MultiPoly merge(const MultiPoly& b, bool subtract) const {
    MultiPoly r(field_, nvars_);
    r.terms_.reserve(terms_.size() + b.terms_.size());
    const auto order = MonomialOrder::degrevlex();
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < b.terms_.size()) {
      int c;
      if (i == terms_.size()) c = -1;
      else if (j == b.terms_.size()) c = 1;
      else c = order.compare(terms_[i].mono, b.terms_[j].mono);
      if (c > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (c < 0) {
        const auto& t = b.terms_[j++];
        r.terms_.push_back({t.mono, subtract ? field_.neg(t.coeff) : t.coeff});
      } else {
        Scalar s = subtract ? field_.sub(terms_[i].coeff, b.terms_[j].coeff)
                            : field_.add(terms_[i].coeff, b.terms_[j].coeff);
        if (!field_.is_zero(s)) r.terms_.push_back({terms_[i].mono, std::move(s)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  K field_;
  std::size_t nvars_;
  std::vector<Term> terms_;
};

using PolyQ = MultiPoly<RationalField>;
using PolyP = MultiPoly<PrimeField>;

/// A polynomial whose monomials all share one total degree. The zero
/// polynomial is allowed and reports degree -1.
template <class K>
class HomogeneousForm {
 public:
  HomogeneousForm() = default;
  explicit HomogeneousForm(MultiPoly<K> poly) : poly_(std::move(poly)) {
    if (!poly_.is_homogeneous()) throw DomainError("polynomial is not homogeneous");
  }

  const MultiPoly<K>& poly() const { return poly_; }
  int degree() const { return poly_.degree(); }
  bool is_zero() const { return poly_.is_zero(); }
  std::size_t nvars() const { return poly_.nvars(); }

  friend bool operator==(const HomogeneousForm&, const HomogeneousForm&) = default;

 private:
  MultiPoly<K> poly_;
};

// ---------------------------------------------------------------------------
// Calculus and substitution

template <class K>
MultiPoly<K> partial_derivative(const MultiPoly<K>& p, std::size_t var) {
  if (var >= p.nvars()) throw DomainError("derivative variable out of range");
  std::vector<typename MultiPoly<K>::Term> out;
  const K& f = p.field();
  for (const auto& t : p.terms()) {
    unsigned e = t.mono[var];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(var, e - 1);
    out.push_back({m, f.mul(t.coeff, f.from_int(e))});
  }
  return MultiPoly<K>::from_terms(f, p.nvars(), std::move(out));
}

template <class K>
std::vector<MultiPoly<K>> gradient(const MultiPoly<K>& p) {
  std::vector<MultiPoly<K>> g;
  g.reserve(p.nvars());
  for (std::size_t i = 0; i < p.nvars(); ++i) g.push_back(partial_derivative(p, i));
  return g;
}

/// Contraction of the 1-form sum a_i dx_i with the radial field:
/// sum x_i * a_i. Zero coefficients are allowed; nonzero ones must share
/// one degree.
template <class K>
MultiPoly<K> euler_contraction(std::span<const MultiPoly<K>> coeffs) {
  if (coeffs.empty()) throw DomainError("empty coefficient sequence");
  const std::size_t n = coeffs.front().nvars();
  if (coeffs.size() != n)
    throw RingMismatch("need one coefficient per variable (" + std::to_string(n) + "), got " +
                       std::to_string(coeffs.size()));
  int deg = -1;
  for (const auto& a : coeffs) {
    if (!a.is_homogeneous()) throw DomainError("coefficient is not homogeneous");
    if (a.is_zero()) continue;
    if (deg >= 0 && a.degree() != deg) throw DomainError("coefficients have different degrees");
    deg = a.degree();
  }
  MultiPoly<K> acc(coeffs.front().field(), n);
  for (std::size_t i = 0; i < n; ++i)
    acc += coeffs[i].times_monomial(Monomial::variable(i), coeffs[i].field().one());
  return acc;
}

/// p(images[0], ..., images[n-1]); all images share one ring.
template <class K>
MultiPoly<K> substitute(const MultiPoly<K>& p, std::span<const MultiPoly<K>> images) {
  if (images.size() != p.nvars()) throw RingMismatch("substitution needs one image per variable");
  if (images.empty()) return p;
  const K& f = p.field();
  const std::size_t m = images.front().nvars();
  // cache powers per variable
  std::vector<std::vector<MultiPoly<K>>> powers(p.nvars());
  for (std::size_t i = 0; i < p.nvars(); ++i) {
    MultiPoly<K>::check_same_ring(images[i], images.front());
    powers[i].push_back(MultiPoly<K>::constant(f, m, f.one()));
    powers[i].push_back(images[i]);
    unsigned need = p.degree_in(i);
    while (powers[i].size() <= need) powers[i].push_back(powers[i].back() * images[i]);
  }
  MultiPoly<K> acc(f, m);
  for (const auto& t : p.terms()) {
    MultiPoly<K> v = MultiPoly<K>::constant(f, m, t.coeff);
    for (std::size_t i = 0; i < p.nvars(); ++i)
      if (t.mono[i]) v = v * powers[i][t.mono[i]];
    acc += v;
  }
  return acc;
}

/// Row-major matrix of field scalars.
template <class K>
using ScalarMatrix = std::vector<std::vector<typename K::value_type>>;

/// p(M z): variable x_i becomes sum_j M[i][j] z_j.
template <class K>
MultiPoly<K> substitute_linear(const MultiPoly<K>& p, const ScalarMatrix<K>& M) {
  if (M.size() != p.nvars())
    throw RingMismatch("substitution matrix needs " + std::to_string(p.nvars()) + " rows");
  if (M.empty()) return p;
  const std::size_t m = M.front().size();
  std::vector<MultiPoly<K>> images;
  images.reserve(M.size());
  for (const auto& row : M) {
    if (row.size() != m) throw RingMismatch("ragged substitution matrix");
    std::vector<typename MultiPoly<K>::Term> terms;
    for (std::size_t j = 0; j < m; ++j) terms.push_back({Monomial::variable(j), row[j]});
    images.push_back(MultiPoly<K>::from_terms(p.field(), m, std::move(terms)));
  }
  return substitute<K>(p, images);
}

/// Random linear form sum c_i x_i with uniform coefficients, redrawn until
/// nonzero.
inline PolyP random_linear_form(const PrimeField& field, std::size_t nvars, SeedStream& stream) {
  for (;;) {
    std::vector<PolyP::Term> terms;
    for (std::size_t i = 0; i < nvars; ++i)
      terms.push_back({Monomial::variable(i), random_scalar(field, stream)});
    auto p = PolyP::from_terms(field, nvars, std::move(terms));
    if (!p.is_zero()) return p;
  }
}

/// Reduce a rational polynomial modulo p.
inline PolyP reduce_mod(const PolyQ& p, const PrimeField& field) {
  std::vector<PolyP::Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) terms.push_back({t.mono, field.from_rational(t.coeff)});
  return PolyP::from_terms(field, p.nvars(), std::move(terms));
}

template <class K>
MultiPoly<K> lift(const PolyQ& p, const K& field) {
  if constexpr (K::is_exact_rational) {
    return p;
  } else {
    return reduce_mod(p, field);
  }
}

}  // namespace polardeg
