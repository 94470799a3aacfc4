#pragma once

#include <type_traits>
#include <vector>

#include "polardeg/gcd.hpp"
#include "polardeg/groebner.hpp"
#include "polardeg/poly.hpp"
#include "polardeg/report.hpp"

namespace polardeg {

/// Knobs shared by every randomized degree computation.
struct DegreeOptions {
  PrimeField field{kDefaultPrime};
  int trials = 5;
  int retries = 3;  // re-randomizations per trial after a failed draw
  u64 seed = 0;
  GroebnerLimits limits = GroebnerLimits::from_env();
};

/// A rational self-map of P^n given by n+1 homogeneous components of one
/// common degree, not all zero.
template <class K>
class RationalMapRep {
 public:
  explicit RationalMapRep(std::vector<MultiPoly<K>> components) : comps_(std::move(components)) {
    if (comps_.size() < 2) throw DomainError("a map of P^n needs at least two components");
    int deg = -1;
    for (const auto& c : comps_) {
      MultiPoly<K>::check_same_ring(c, comps_.front());
      if (!c.is_homogeneous()) throw DomainError("map component is not homogeneous");
      if (c.is_zero()) continue;
      if (deg >= 0 && c.degree() != deg) throw DomainError("map components have different degrees");
      deg = c.degree();
    }
    if (deg < 0) throw DomainError("every map component is zero");
    if (comps_.front().nvars() != comps_.size())
      throw DomainError("map needs as many components as variables");
    degree_ = deg;
  }

  const std::vector<MultiPoly<K>>& components() const { return comps_; }
  std::size_t source_dimension() const { return comps_.size() - 1; }
  std::size_t nvars() const { return comps_.size(); }
  int degree() const { return degree_; }
  /// Degree-zero components: the map collapses P^n to a point.
  bool is_constant() const { return degree_ == 0; }

  friend bool operator==(const RationalMapRep&, const RationalMapRep&) = default;

 private:
  std::vector<MultiPoly<K>> comps_;
  int degree_ = -1;
};

template <class K>
RationalMapRep<PrimeField> lift_map(const RationalMapRep<K>& m, const PrimeField& field) {
  if constexpr (std::is_same_v<K, PrimeField>) {
    return m;
  } else {
    std::vector<PolyP> comps;
    for (const auto& c : m.components()) comps.push_back(reduce_mod(c, field));
    return RationalMapRep<PrimeField>(std::move(comps));
  }
}

/// The multi-valued function prod F_i^{lambda_i}: reduced, pairwise
/// coprime homogeneous factors over Q with nonzero rational weights.
/// Irreducibility of the factors is not checked.
class WeightedFunction {
 public:
  /// Validates the invariants; squarefreeness is tested with directional
  /// derivatives along directions drawn from `check_seed`.
  WeightedFunction(std::vector<PolyQ> factors, std::vector<mpq_class> weights, u64 check_seed = 0);

  const std::vector<PolyQ>& factors() const { return factors_; }
  const std::vector<mpq_class>& weights() const { return weights_; }
  std::size_t nvars() const { return factors_.front().nvars(); }
  /// n for P^n.
  std::size_t dimension() const { return nvars() - 1; }

  /// sum lambda_i deg F_i.
  mpq_class total_degree() const;
  /// Weights times the least common denominator.
  std::vector<mpz_class> integer_weights() const;
  bool weights_same_sign() const;
  WeightedFunction with_weights(std::vector<mpq_class> weights) const;

 private:
  struct Unchecked {};
  WeightedFunction(Unchecked, std::vector<PolyQ> f, std::vector<mpq_class> w)
      : factors_(std::move(f)), weights_(std::move(w)) {}

  std::vector<PolyQ> factors_;
  std::vector<mpq_class> weights_;
};

/// Squarefree test: gcd(F, D_v F) is constant for at least one of three
/// random directions v.
bool is_squarefree(const PolyQ& f, u64 seed = 0);

/// Gradient map of F.
template <class K>
RationalMapRep<K> polar_map(const MultiPoly<K>& f) {
  if (!f.is_homogeneous() || f.degree() < 1) throw DomainError("polar map needs a homogeneous form of degree >= 1");
  return RationalMapRep<K>(gradient(f));
}

/// Components sum_j mu_j F^_j dF_j/dx_i (F^_j the product of the other
/// factors, mu the integer-scaled weights), before any gcd clearing.
std::vector<PolyQ> weighted_gradient_components(const WeightedFunction& w);

/// The polar map of prod F_i^{lambda_i}, common factor of the components
/// divided out.
RationalMapRep<RationalField> weighted_polar_map(const WeightedFunction& w);

/// One randomized fiber count at level i, as a single attempt.
TrialOutcome map_degree_trial(const RationalMapRep<PrimeField>& map, int level, u64 seed,
                              const GroebnerLimits& limits);

/// deg_i by majority over opts.trials trials, each retried up to
/// opts.retries times when the draw is not zero-dimensional and reduced.
DegreeReport map_degree(const RationalMapRep<PrimeField>& map, int level, const DegreeOptions& opts);

/// Shared trial driver: `attempt(seed)` performs one draw.
template <class Attempt>
DegreeReport run_trials(int level, const DegreeOptions& opts, u64 salt, Attempt&& attempt) {
  std::vector<TrialOutcome> outs;
  for (int t = 0; t < opts.trials; ++t) {
    TrialOutcome last;
    for (int a = 0; a <= opts.retries; ++a) {
      u64 s = derive_seed(opts.seed, salt * 1000 + u64(level), u64(t), u64(a));
      last = attempt(s);
      last.seed = s;
      if (last.zero_dim && last.reduced) break;
    }
    outs.push_back(last);
  }
  auto r = DegreeReport::from_trials(level, std::move(outs));
  if (r.value && *r.value == 0) r.note = "generic fiber empty: map not dominant at this level";
  return r;
}

/// (deg_0, ..., deg_{n-1}) of the weighted polar map.
std::vector<DegreeReport> polar_degrees_profile(const WeightedFunction& w, const DegreeOptions& opts);

/// deg_0 == 1, stably.
bool homaloidal_check(const WeightedFunction& w, const DegreeOptions& opts);

}  // namespace polardeg
