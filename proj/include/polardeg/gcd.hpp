#pragma once

#include <optional>
#include <vector>

#include "polardeg/poly.hpp"

namespace polardeg {

/// Coefficients of p as a polynomial in x_var: result[k] multiplies x_var^k.
/// Each coefficient lives in the same ring and is free of x_var.
template <class K>
std::vector<MultiPoly<K>> coefficients_in(const MultiPoly<K>& p, std::size_t var) {
  std::vector<std::vector<typename MultiPoly<K>::Term>> buckets(p.degree_in(var) + 1);
  for (const auto& t : p.terms()) {
    Monomial m = t.mono;
    unsigned e = m[var];
    m.set(var, 0);
    buckets[e].push_back({m, t.coeff});
  }
  std::vector<MultiPoly<K>> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(MultiPoly<K>::from_terms(p.field(), p.nvars(), std::move(b)));
  return out;
}

template <class K>
MultiPoly<K> from_coefficients(const std::vector<MultiPoly<K>>& coeffs, std::size_t var,
                               const K& field, std::size_t nvars) {
  MultiPoly<K> acc(field, nvars);
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    acc += coeffs[k].times_monomial(Monomial::variable(var, static_cast<unsigned>(k)), field.one());
  return acc;
}

/// Exact quotient p / q, or nullopt when q does not divide p.
template <class K>
std::optional<MultiPoly<K>> divide_exact(const MultiPoly<K>& p, const MultiPoly<K>& q) {
  MultiPoly<K>::check_same_ring(p, q);
  if (q.is_zero()) throw DomainError("division by zero polynomial");
  const K& f = p.field();
  const auto& lt = q.leading_term();
  const auto lc_inv = f.inv(lt.coeff);
  MultiPoly<K> rem = p;
  std::vector<typename MultiPoly<K>::Term> quot;
  while (!rem.is_zero()) {
    const auto& r = rem.leading_term();
    if (!lt.mono.divides(r.mono)) return std::nullopt;
    Monomial m = quotient(r.mono, lt.mono);
    auto c = f.mul(r.coeff, lc_inv);
    quot.push_back({m, c});
    rem = rem - q.times_monomial(m, c);
  }
  return MultiPoly<K>::from_terms(f, p.nvars(), std::move(quot));
}

template <class K>
MultiPoly<K> divide_or_throw(const MultiPoly<K>& p, const MultiPoly<K>& q) {
  auto r = divide_exact(p, q);
  if (!r) throw Error("internal: expected exact polynomial division");
  return *std::move(r);
}

/// Scale so the lex-leading coefficient is 1.
template <class K>
MultiPoly<K> normalize_lex(const MultiPoly<K>& p) {
  if (p.is_zero()) return p;
  const auto order = MonomialOrder::lex();
  const auto* best = &p.terms().front();
  for (const auto& t : p.terms())
    if (order.greater(t.mono, best->mono)) best = &t;
  return p.scaled(p.field().inv(best->coeff));
}

template <class K>
MultiPoly<K> gcd_multivariate(const MultiPoly<K>& p, const MultiPoly<K>& q);

namespace detail {

template <class K>
int main_variable(const MultiPoly<K>& p, const MultiPoly<K>& q) {
  for (std::size_t v = p.nvars(); v-- > 0;)
    if (p.uses_variable(v) || q.uses_variable(v)) return int(v);
  return -1;
}

template <class K>
MultiPoly<K> content_in(const MultiPoly<K>& p, std::size_t var) {
  MultiPoly<K> g(p.field(), p.nvars());
  for (const auto& c : coefficients_in(p, var)) {
    if (c.is_zero()) continue;
    g = gcd_multivariate(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

template <class K>
int degree_of(const std::vector<MultiPoly<K>>& c) {
  for (std::size_t k = c.size(); k-- > 0;)
    if (!c[k].is_zero()) return int(k);
  return -1;
}

/// Pseudo-remainder of a by b in the main variable (coefficient vectors).
template <class K>
std::vector<MultiPoly<K>> pseudo_remainder(std::vector<MultiPoly<K>> a,
                                           const std::vector<MultiPoly<K>>& b) {
  const int db = degree_of(b);
  int da = degree_of(a);
  const auto& lb = b[db];
  int e = da - db + 1;
  while (da >= db) {
    const MultiPoly<K> lr = a[da];
    const int shift = da - db;
    for (int k = 0; k <= da; ++k) a[k] = a[k] * lb;
    for (int k = 0; k <= db; ++k) a[k + shift] -= lr * b[k];
    --e;
    da = degree_of(a);
  }
  if (e > 0) {
    const auto s = lb.pow(unsigned(e));
    for (auto& c : a) c = c * s;
  }
  a.resize(std::max(degree_of(a) + 1, 0));
  return a;
}

/// gcd of two polynomials that are primitive in x_var, via the
/// subresultant remainder sequence.
template <class K>
MultiPoly<K> primitive_gcd(const MultiPoly<K>& p, const MultiPoly<K>& q, std::size_t var) {
  const K& f = p.field();
  const std::size_t n = p.nvars();
  auto A = coefficients_in(p, var);
  auto B = coefficients_in(q, var);
  if (degree_of(A) < degree_of(B)) std::swap(A, B);
  if (degree_of(B) == 0) return MultiPoly<K>::constant(f, n, f.one());
  MultiPoly<K> g = MultiPoly<K>::constant(f, n, f.one());
  MultiPoly<K> h = g;
  for (;;) {
    const int delta = degree_of(A) - degree_of(B);
    auto R = pseudo_remainder(A, B);
    if (R.empty()) {
      auto b = from_coefficients(B, var, f, n);
      return divide_or_throw(b, content_in(b, var));
    }
    if (degree_of(R) == 0) return MultiPoly<K>::constant(f, n, f.one());
    A = std::move(B);
    const auto divisor = g * h.pow(unsigned(delta));
    for (auto& c : R) c = divide_or_throw(c, divisor);
    B = std::move(R);
    g = A[degree_of(A)];
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = divide_or_throw(g.pow(unsigned(delta)), h.pow(unsigned(delta - 1)));
    }
  }
}

}  // namespace detail

/// Greatest common divisor, normalized so the lex-leading coefficient is 1.
/// gcd(p, 0) is normalized p; gcd(0, 0) is 0.
template <class K>
MultiPoly<K> gcd_multivariate(const MultiPoly<K>& p, const MultiPoly<K>& q) {
  MultiPoly<K>::check_same_ring(p, q);
  const K& f = p.field();
  if (p.is_zero()) return normalize_lex(q);
  if (q.is_zero()) return normalize_lex(p);
  if (p.is_constant() || q.is_constant()) return MultiPoly<K>::constant(f, p.nvars(), f.one());
  const int v = detail::main_variable(p, q);
  if (!p.uses_variable(std::size_t(v))) return gcd_multivariate(p, detail::content_in(q, v));
  if (!q.uses_variable(std::size_t(v))) return gcd_multivariate(detail::content_in(p, v), q);
  const auto cp = detail::content_in(p, v);
  const auto cq = detail::content_in(q, v);
  const auto c = gcd_multivariate(cp, cq);
  const auto g = detail::primitive_gcd(divide_or_throw(p, cp), divide_or_throw(q, cq), v);
  return normalize_lex(c * g);
}

template <class K>
MultiPoly<K> gcd_all(std::span<const MultiPoly<K>> polys) {
  if (polys.empty()) throw DomainError("gcd of an empty list");
  MultiPoly<K> g(polys.front().field(), polys.front().nvars());
  for (const auto& p : polys) {
    g = gcd_multivariate(g, p);
    if (!g.is_zero() && g.is_constant()) break;
  }
  return g;
}

}  // namespace polardeg
