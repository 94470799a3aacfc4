#include "polardeg/polar.hpp"

namespace polardeg {

bool is_squarefree(const PolyQ& f, u64 seed) {
  if (f.is_zero()) return false;
  if (f.is_constant()) return true;
  SeedStream stream(derive_seed(seed, 0x5f));
  const auto grad = gradient(f);
  for (int attempt = 0; attempt < 3; ++attempt) {
    PolyQ directional(f.field(), f.nvars());
    for (const auto& g : grad) {
      const long v = 1 + long(stream.uniform(97));
      directional += g.scaled(mpq_class(v));
    }
    if (directional.is_zero()) continue;
    if (gcd_multivariate(f, directional).is_constant()) return true;
  }
  return false;
}

WeightedFunction::WeightedFunction(std::vector<PolyQ> factors, std::vector<mpq_class> weights,
                                   u64 check_seed)
    : factors_(std::move(factors)), weights_(std::move(weights)) {
  if (factors_.empty()) throw DomainError("weighted function needs at least one factor");
  if (factors_.size() != weights_.size())
    throw DomainError("got " + std::to_string(factors_.size()) + " factors but " +
                      std::to_string(weights_.size()) + " weights");
  for (const auto& w : weights_)
    if (w == 0) throw DomainError("weights must be nonzero");
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& f = factors_[i];
    PolyQ::check_same_ring(f, factors_.front());
    if (!f.is_homogeneous() || f.degree() < 1)
      throw DomainError("factor " + std::to_string(i + 1) + " is not a homogeneous form of degree >= 1");
    if (!is_squarefree(f, derive_seed(check_seed, i)))
      throw DomainError("factor " + std::to_string(i + 1) + " is not squarefree");
  }
  for (std::size_t i = 0; i < factors_.size(); ++i)
    for (std::size_t j = i + 1; j < factors_.size(); ++j)
      if (!gcd_multivariate(factors_[i], factors_[j]).is_constant())
        throw DomainError("factors " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                          " share a common factor");
}

mpq_class WeightedFunction::total_degree() const {
  mpq_class d = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) d += weights_[i] * factors_[i].degree();
  return d;
}

std::vector<mpz_class> WeightedFunction::integer_weights() const {
  mpz_class lcd = 1;
  for (const auto& w : weights_) mpz_lcm(lcd.get_mpz_t(), lcd.get_mpz_t(), w.get_den_mpz_t());
  std::vector<mpz_class> out;
  for (const auto& w : weights_) out.push_back(w.get_num() * (lcd / w.get_den()));
  return out;
}

bool WeightedFunction::weights_same_sign() const {
  const int s = sgn(weights_.front());
  for (const auto& w : weights_)
    if (sgn(w) != s) return false;
  return true;
}

WeightedFunction WeightedFunction::with_weights(std::vector<mpq_class> weights) const {
  if (weights.size() != factors_.size()) throw DomainError("weight count does not match factor count");
  for (const auto& w : weights)
    if (w == 0) throw DomainError("weights must be nonzero");
  return WeightedFunction(Unchecked{}, factors_, std::move(weights));
}

std::vector<PolyQ> weighted_gradient_components(const WeightedFunction& w) {
  const auto& fs = w.factors();
  const auto mu = w.integer_weights();
  const std::size_t n = w.nvars();
  const RationalField q;
  std::vector<PolyQ> comps(n, PolyQ(q, n));
  for (std::size_t j = 0; j < fs.size(); ++j) {
    PolyQ others = PolyQ::constant(q, n, mpq_class(mu[j]));
    for (std::size_t i = 0; i < fs.size(); ++i)
      if (i != j) others *= fs[i];
    for (std::size_t v = 0; v < n; ++v) comps[v] += others * partial_derivative(fs[j], v);
  }
  return comps;
}

RationalMapRep<RationalField> weighted_polar_map(const WeightedFunction& w) {
  auto comps = weighted_gradient_components(w);
  bool all_zero = true;
  for (const auto& c : comps) all_zero = all_zero && c.is_zero();
  if (all_zero) throw DomainError("the weights annihilate the differential: every component is zero");
  const auto g = gcd_all<RationalField>(comps);
  if (!g.is_constant())
    for (auto& c : comps) c = divide_or_throw(c, g);
  return RationalMapRep<RationalField>(std::move(comps));
}

TrialOutcome map_degree_trial(const RationalMapRep<PrimeField>& map, int level, u64 seed,
                              const GroebnerLimits& limits) {
  const PrimeField& f = map.components().front().field();
  const std::size_t n = map.source_dimension();
  if (level < 0 || std::size_t(level) >= n)
    throw DomainError("level " + std::to_string(level) + " outside [0, " + std::to_string(n - 1) + "]");
  const std::size_t free = n - std::size_t(level);  // affine coordinates on the source plane
  const std::size_t nv = free + 1;                  // plus the inverted-denominator variable u
  SeedStream stream(seed);

  // generic source (n-i)-plane in a generic affine chart: x = M (z, 1)
  std::vector<PolyP> images;
  for (std::size_t r = 0; r <= n; ++r) {
    PolyP x = PolyP::constant(f, nv, random_scalar(f, stream));
    for (std::size_t j = 0; j < free; ++j)
      x += PolyP::term(f, nv, Monomial::variable(j), random_scalar(f, stream));
    images.push_back(std::move(x));
  }
  std::vector<PolyP> pulled;
  for (const auto& c : map.components()) pulled.push_back(substitute<PrimeField>(c, images));

  auto combine = [&](SeedStream& s) {
    PolyP acc(f, nv);
    for (const auto& c : pulled) acc += c.scaled(random_scalar(f, s));
    return acc;
  };

  Ideal<PrimeField> ideal(f, nv);
  // generic target i-plane cut by n-i linear forms
  for (std::size_t j = 0; j < free; ++j) ideal.add(combine(stream));
  // u * l0(c) = 1 removes the base locus and fibers over l0 = 0
  const PolyP l0 = combine(stream);
  ideal.add(PolyP::variable(f, nv, free) * l0 - PolyP::constant(f, nv, f.one()));

  const auto gb = groebner(ideal, MonomialOrder::degrevlex(), limits);
  TrialOutcome out;
  out.seed = seed;
  out.zero_dim = is_zero_dimensional(gb);
  if (!out.zero_dim) return out;
  out.value = static_cast<long long>(quotient_dimension(gb));
  out.reduced = is_reduced_zero_dim(gb, stream);
  return out;
}

DegreeReport map_degree(const RationalMapRep<PrimeField>& map, int level, const DegreeOptions& opts) {
  return run_trials(level, opts, 0, [&](u64 s) { return map_degree_trial(map, level, s, opts.limits); });
}

std::vector<DegreeReport> polar_degrees_profile(const WeightedFunction& w, const DegreeOptions& opts) {
  if (w.total_degree() == 0) throw DomainError("deg of the weighted function is zero");
  const auto map = lift_map(weighted_polar_map(w), opts.field);
  std::vector<DegreeReport> out;
  for (std::size_t i = 0; i < w.dimension(); ++i) out.push_back(map_degree(map, int(i), opts));
  return out;
}

bool homaloidal_check(const WeightedFunction& w, const DegreeOptions& opts) {
  if (w.total_degree() == 0) throw DomainError("deg of the weighted function is zero");
  const auto map = lift_map(weighted_polar_map(w), opts.field);
  const auto r = map_degree(map, 0, opts);
  return r.stable && r.value == 1;
}

}  // namespace polardeg
