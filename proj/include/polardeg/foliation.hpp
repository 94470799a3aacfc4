#pragma once

#include <type_traits>
#include <vector>

#include "polardeg/gcd.hpp"
#include "polardeg/groebner.hpp"
#include "polardeg/polar.hpp"

namespace polardeg {

/// How much of the foliation invariants foliation_from_form re-proves.
enum class FoliationCheck {
  basic,  // Euler contraction and gcd clearing
  full,   // plus codim >= 2 of the common zero set via a Groebner basis
};

/// Codimension-one foliation of P^n given by a homogeneous 1-form
/// sum a_i dx_i with sum x_i a_i = 0 and coprime coefficients. Its degree
/// is the common coefficient degree minus one.
template <class K>
class LogFoliation {
 public:
  const std::vector<MultiPoly<K>>& coefficients() const { return coeffs_; }
  int degree() const { return degree_; }
  std::size_t ambient_dimension() const { return coeffs_.size() - 1; }
  const K& field() const { return coeffs_.front().field(); }

  friend bool operator==(const LogFoliation&, const LogFoliation&) = default;

 private:
  template <class F>
  friend LogFoliation<F> foliation_from_form(std::vector<MultiPoly<F>>, FoliationCheck,
                                             const GroebnerLimits&);

  LogFoliation(std::vector<MultiPoly<K>> c, int d) : coeffs_(std::move(c)), degree_(d) {}

  std::vector<MultiPoly<K>> coeffs_;
  int degree_;
};

/// Coefficients of (prod F_i) * sum lambda_i dF_i/F_i, weights scaled to
/// integers. Their Euler contraction is deg * prod F_i.
std::vector<PolyQ> logarithmic_form(const WeightedFunction& w);

/// Coefficients of the 3-form omega ^ d(omega), one per i < j < k in
/// lexicographic order. All zero exactly when the form is integrable.
template <class K>
std::vector<MultiPoly<K>> integrability_defect(const std::vector<MultiPoly<K>>& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<MultiPoly<K>>> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = gradient(a[i]);  // d[i][j] = da_i/dx_j
  std::vector<MultiPoly<K>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        out.push_back(a[i] * (d[k][j] - d[j][k]) - a[j] * (d[k][i] - d[i][k]) + a[k] * (d[j][i] - d[i][j]));
  return out;
}

template <class K>
bool is_integrable(const std::vector<MultiPoly<K>>& a) {
  for (const auto& c : integrability_defect(a))
    if (!c.is_zero()) return false;
  return true;
}

/// Validate a twisted 1-form and divide out the gcd of its coefficients.
template <class K>
LogFoliation<K> foliation_from_form(std::vector<MultiPoly<K>> coeffs, FoliationCheck check = FoliationCheck::full,
                                    const GroebnerLimits& limits = {}) {
  if (coeffs.size() < 2) throw DomainError("a 1-form on P^n needs at least two coefficients");
  bool all_zero = true;
  for (const auto& c : coeffs) all_zero = all_zero && c.is_zero();
  if (all_zero) throw DomainError("the zero form defines no foliation");
  if (!euler_contraction<K>(coeffs).is_zero())
    throw DomainError("Euler contraction is nonzero: the form does not descend to projective space");
  const auto g = gcd_all<K>(coeffs);
  if (!g.is_constant())
    for (auto& c : coeffs) c = divide_or_throw(c, g);
  int deg = -1;
  for (const auto& c : coeffs)
    if (!c.is_zero()) deg = c.degree();
  if (check == FoliationCheck::full) {
    // codim of the common zero set >= 2, i.e. affine cone dimension <= n - 1
    const std::size_t n = coeffs.size() - 1;
    std::vector<PolyP> modp;
    const PrimeField fp(kDefaultPrime);
    for (const auto& c : coeffs) {
      if constexpr (K::is_exact_rational) {
        modp.push_back(reduce_mod(c, fp));
      } else {
        modp.push_back(c);
      }
    }
    const PrimeField& field = modp.front().field();
    const auto gb = groebner(Ideal<PrimeField>(field, n + 1, modp), MonomialOrder::degrevlex(), limits);
    if (ideal_dimension(gb) > int(n) - 1)
      throw DomainError("singular set has a component of codimension one");
  }
  return LogFoliation<K>(std::move(coeffs), deg - 1);
}

template <class K>
LogFoliation<PrimeField> lift_foliation(const LogFoliation<K>& fol, const PrimeField& field) {
  if constexpr (std::is_same_v<K, PrimeField>) {
    return fol;
  } else {
    std::vector<PolyP> c;
    for (const auto& a : fol.coefficients()) c.push_back(reduce_mod(a, field));
    return foliation_from_form(std::move(c), FoliationCheck::basic);
  }
}

/// The foliation of P^{n+1} induced by dF/F - deg(F) dx_{n+1}/x_{n+1}:
/// coefficients (x_{n+1} c_0, ..., x_{n+1} c_n, -deg * prod F_j) with
/// c the weighted gradient components. Requires deg != 0.
LogFoliation<RationalField> associated_foliation(const WeightedFunction& w);

/// Foliation of P^n from the logarithmic form itself; needs deg == 0 so
/// that the form descends.
LogFoliation<RationalField> logarithmic_foliation(const WeightedFunction& w);

template <class K>
RationalMapRep<K> gauss_map(const LogFoliation<K>& fol) {
  return RationalMapRep<K>(fol.coefficients());
}

/// Pull back along a random linear embedding P^k -> P^n and clear the
/// gcd. For k >= 2 the degree must be preserved; bad draws are redrawn
/// (5 attempts) before failing.
LogFoliation<PrimeField> restrict_to_generic_subspace(const LogFoliation<PrimeField>& fol, std::size_t k,
                                                      SeedStream& stream);

/// e_i^k: deg_i of the Gauss map of the restriction to a generic P^k.
DegreeReport e_degree(const LogFoliation<PrimeField>& fol, std::size_t k, int level, const DegreeOptions& opts);

template <class K>
DegreeReport e_degree(const LogFoliation<K>& fol, std::size_t k, int level, const DegreeOptions& opts) {
  return e_degree(lift_foliation(fol, opts.field), k, level, opts);
}

/// Degree of the singular scheme of a foliation of P^2, read off the
/// stabilized Hilbert function of the coefficient ideal.
template <class K>
long long singular_scheme_degree_p2(const LogFoliation<K>& fol, const GroebnerLimits& limits = {}) {
  if (fol.ambient_dimension() != 2) throw DomainError("singular scheme degree is implemented on P^2 only");
  const auto& c = fol.coefficients();
  const auto gb = groebner(Ideal<K>(fol.field(), 3, c), MonomialOrder::degrevlex(), limits);
  const int dim = ideal_dimension(gb);
  if (dim > 1) throw DomainError("singular set is positive-dimensional");
  if (dim <= 0) return 0;
  unsigned maxdeg = 0;
  for (const auto& m : gb.leading_monomials()) maxdeg = std::max(maxdeg, m.degree());
  std::size_t h2 = hilbert_function(gb, 0), h1 = hilbert_function(gb, 1);
  for (unsigned t = 2; t < 4 * maxdeg + 64; ++t) {
    const std::size_t h = hilbert_function(gb, t);
    if (t >= 2 * maxdeg && h == h1 && h1 == h2) return static_cast<long long>(h);
    h2 = h1;
    h1 = h;
  }
  throw Error("Hilbert function did not stabilize");
}

}  // namespace polardeg
