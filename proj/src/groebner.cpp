#include "polardeg/groebner.hpp"

#include <unordered_map>

namespace polardeg {

bool is_reduced_zero_dim(const GroebnerBasis<PrimeField>& g, SeedStream& stream) {
  const auto basis = standard_monomials(g);  // throws unless zero-dimensional
  const std::size_t n = basis.size();
  if (n == 0) return true;  // empty variety
  const PrimeField& f = g.field();
  const std::size_t nv = g.nvars();

  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  for (std::size_t k = 0; k < n; ++k) index.emplace(basis[k], k);

  // random linear form with a random constant term
  PolyP form = random_linear_form(f, nv, stream) +
               PolyP::constant(f, nv, random_scalar(f, stream));

  // Echelon rows of normal forms of form^j, each tagged with its
  // expression in the powers 1, form, form^2, ...
  struct Row {
    std::vector<u64> vec;
    std::vector<u64> combo;
    std::size_t pivot;
  };
  std::vector<Row> rows;
  PolyP power = PolyP::constant(f, nv, f.one());
  std::vector<u64> minpoly;
  for (std::size_t j = 0; j <= n; ++j) {
    std::vector<u64> vec(n, 0);
    for (const auto& t : power.terms()) vec[index.at(t.mono)] = t.coeff;
    std::vector<u64> combo(j + 1, 0);
    combo[j] = 1;
    for (const auto& r : rows) {
      u64 c = vec[r.pivot];
      if (c == 0) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (r.vec[k]) vec[k] = f.sub(vec[k], f.mul(c, r.vec[k]));
      for (std::size_t k = 0; k < r.combo.size(); ++k)
        if (r.combo[k]) combo[k] = f.sub(combo[k], f.mul(c, r.combo[k]));
    }
    std::size_t pivot = n;
    for (std::size_t k = 0; k < n; ++k)
      if (vec[k]) {
        pivot = k;
        break;
      }
    if (pivot == n) {
      minpoly = std::move(combo);
      break;
    }
    const u64 inv = f.inv(vec[pivot]);
    for (auto& v : vec) v = f.mul(v, inv);
    for (auto& v : combo) v = f.mul(v, inv);
    rows.push_back({std::move(vec), std::move(combo), pivot});
    power = g.normal_form(power * form);
  }
  if (minpoly.size() != n + 1) return false;  // degree < n: not separating or not radical

  std::vector<PolyP::Term> terms;
  for (std::size_t k = 0; k < minpoly.size(); ++k)
    terms.push_back({Monomial::variable(0, unsigned(k)), minpoly[k]});
  PolyP m = PolyP::from_terms(f, 1, std::move(terms));
  return gcd_multivariate(m, partial_derivative(m, 0)).is_constant();
}

template class GroebnerBasis<PrimeField>;
template class GroebnerBasis<RationalField>;

}  // namespace polardeg
