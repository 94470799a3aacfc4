#include "polardeg/foliation.hpp"

namespace polardeg {

std::vector<PolyQ> logarithmic_form(const WeightedFunction& w) {
  auto coeffs = weighted_gradient_components(w);
  bool all_zero = true;
  for (const auto& c : coeffs) all_zero = all_zero && c.is_zero();
  if (all_zero) throw DomainError("logarithmic form vanishes identically");
  return coeffs;
}

LogFoliation<RationalField> associated_foliation(const WeightedFunction& w) {
  if (w.total_degree() == 0) throw DomainError("associated foliation needs deg != 0");
  const std::size_t n = w.nvars();
  const RationalField q;
  const auto comps = weighted_gradient_components(w);
  const auto t = PolyQ::variable(q, n + 1, n);
  std::vector<PolyQ> coeffs;
  for (const auto& c : comps) coeffs.push_back(t * c.embed(n + 1));
  // integer-weight degree: sum mu_j d_j
  const auto mu = w.integer_weights();
  mpz_class deg = 0;
  PolyQ product = PolyQ::constant(q, n + 1, 1);
  for (std::size_t j = 0; j < mu.size(); ++j) {
    deg += mu[j] * w.factors()[j].degree();
    product *= w.factors()[j].embed(n + 1);
  }
  coeffs.push_back(product.scaled(mpq_class(-deg)));
  return foliation_from_form(std::move(coeffs));
}

LogFoliation<RationalField> logarithmic_foliation(const WeightedFunction& w) {
  if (w.total_degree() != 0) throw DomainError("the logarithmic form descends to P^n only when deg == 0");
  return foliation_from_form(logarithmic_form(w));
}

LogFoliation<PrimeField> restrict_to_generic_subspace(const LogFoliation<PrimeField>& fol, std::size_t k,
                                                      SeedStream& stream) {
  const std::size_t n = fol.ambient_dimension();
  if (k < 1 || k >= n)
    throw DomainError("restriction dimension " + std::to_string(k) + " outside [1, " + std::to_string(n - 1) + "]");
  const PrimeField& f = fol.field();
  const auto& a = fol.coefficients();
  for (int attempt = 0; attempt < 5; ++attempt) {
    ScalarMatrix<PrimeField> m(n + 1, std::vector<u64>(k + 1));
    for (auto& row : m)
      for (auto& v : row) v = random_scalar(f, stream);
    std::vector<PolyP> pulled;
    for (const auto& c : a) pulled.push_back(substitute_linear<PrimeField>(c, m));
    std::vector<PolyP> b;
    bool all_zero = true;
    for (std::size_t j = 0; j <= k; ++j) {
      PolyP acc(f, k + 1);
      for (std::size_t i = 0; i <= n; ++i) acc += pulled[i].scaled(m[i][j]);
      all_zero = all_zero && acc.is_zero();
      b.push_back(std::move(acc));
    }
    if (all_zero) continue;  // invariant subspace
    auto r = foliation_from_form(std::move(b), FoliationCheck::basic);
    if (k >= 2 && r.degree() != fol.degree()) continue;
    return r;
  }
  throw DomainError("no generic restriction to P^" + std::to_string(k) + " found in 5 draws");
}

DegreeReport e_degree(const LogFoliation<PrimeField>& fol, std::size_t k, int level, const DegreeOptions& opts) {
  const std::size_t n = fol.ambient_dimension();
  if (k < 1 || k > n) throw DomainError("k must lie in [1, n]");
  if (level < 0 || std::size_t(level) >= k) throw DomainError("level must lie in [0, k-1]");
  if (k == n) return map_degree(gauss_map(fol), level, opts);
  return run_trials(level, opts, 1 + k, [&](u64 s) {
    SeedStream stream(s);
    const auto restricted = restrict_to_generic_subspace(fol, k, stream);
    return map_degree_trial(gauss_map(restricted), level, derive_seed(s, 1), opts.limits);
  });
}

}  // namespace polardeg
