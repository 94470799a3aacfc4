#pragma once

#include <cstddef>
#include <cstdlib>
#include <queue>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "polardeg/errors.hpp"
#include "polardeg/gcd.hpp"
#include "polardeg/poly.hpp"

namespace polardeg {

/// Caps that turn a runaway computation into a reported failure.
struct GroebnerLimits {
  std::size_t max_pairs = 200000;
  std::size_t max_basis = 20000;

  /// Defaults, with max_pairs overridden by POLARDEG_MAX_PAIRS when set.
  static GroebnerLimits from_env() {
    GroebnerLimits l;
    if (const char* s = std::getenv("POLARDEG_MAX_PAIRS")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(s, &end, 10);
      if (end != s && *end == '\0' && v > 0) l.max_pairs = static_cast<std::size_t>(v);
    }
    return l;
  }
};

template <class K>
class Ideal {
 public:
  Ideal(K field, std::size_t nvars, std::vector<MultiPoly<K>> generators = {})
      : field_(std::move(field)), nvars_(nvars) {
    for (auto& g : generators) add(std::move(g));
  }

  /// Zero generators are dropped.
  void add(MultiPoly<K> g) {
    if (!(g.field() == field_) || g.nvars() != nvars_)
      throw RingMismatch("ideal generator from a different ring");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }

  const K& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const std::vector<MultiPoly<K>>& generators() const { return gens_; }

 private:
  K field_;
  std::size_t nvars_;
  std::vector<MultiPoly<K>> gens_;
};

namespace detail {

/// Polynomial with terms sorted descending under an arbitrary order.
template <class K>
using TermList = std::vector<typename MultiPoly<K>::Term>;

template <class K>
TermList<K> sorted_terms(const MultiPoly<K>& p, const MonomialOrder& order) {
  TermList<K> t = p.terms();
  if (order.kind() != MonomialOrder::Kind::degrevlex) {
    std::sort(t.begin(), t.end(),
              [&](const auto& a, const auto& b) { return order.greater(a.mono, b.mono); });
  }
  return t;
}

/// Heap-and-hashmap accumulator used for reduction: supports adding
/// scaled shifted polynomials and extracting the leading term.
template <class K>
class Accumulator {
 public:
  using Scalar = typename K::value_type;

  Accumulator(const K& field, const MonomialOrder& order)
      : field_(field), heap_(HeapLess{order}) {}

  void add(const Monomial& m, const Scalar& c) {
    auto [it, inserted] = coeffs_.try_emplace(m, c);
    if (inserted) {
      heap_.push(m);
    } else {
      it->second = field_.add(it->second, c);
    }
  }

  /// Pop the largest monomial with a nonzero coefficient.
  bool pop(Monomial& m, Scalar& c) {
    while (!heap_.empty()) {
      m = heap_.top();
      heap_.pop();
      auto it = coeffs_.find(m);
      c = std::move(it->second);
      coeffs_.erase(it);
      if (!field_.is_zero(c)) return true;
    }
    return false;
  }

 private:
  struct HeapLess {
    MonomialOrder order;
    bool operator()(const Monomial& a, const Monomial& b) const { return order.compare(a, b) < 0; }
  };

  const K& field_;
  std::unordered_map<Monomial, Scalar, MonomialHash> coeffs_;
  std::priority_queue<Monomial, std::vector<Monomial>, HeapLess> heap_;
};

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

}  // namespace detail

/// Reduced Groebner basis: monic elements, no leading monomial divides
/// another, tails fully reduced.
template <class K>
class GroebnerBasis {
 public:
  using Scalar = typename K::value_type;

  GroebnerBasis(K field, std::size_t nvars, MonomialOrder order)
      : field_(std::move(field)), nvars_(nvars), order_(order) {}

  const K& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const MonomialOrder& order() const { return order_; }
  std::size_t size() const { return elems_.size(); }
  std::size_t pairs_processed() const { return pairs_processed_; }

  /// Elements in canonical (degrevlex-sorted) form.
  std::vector<MultiPoly<K>> basis() const {
    std::vector<MultiPoly<K>> out;
    out.reserve(elems_.size());
    for (const auto& e : elems_) out.push_back(MultiPoly<K>::from_terms(field_, nvars_, e));
    return out;
  }
  /// Leading monomials under order().
  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    for (const auto& e : elems_) out.push_back(e.front().mono);
    return out;
  }
  bool is_unit() const { return elems_.size() == 1 && elems_.front().front().mono.is_one(); }

  /// Remainder of p on division by the basis, in canonical form.
  MultiPoly<K> normal_form(const MultiPoly<K>& p) const {
    if (!(p.field() == field_) || p.nvars() != nvars_) throw RingMismatch("normal_form: ring mismatch");
    return MultiPoly<K>::from_terms(field_, nvars_, reduce(detail::sorted_terms(p, order_)));
  }

  // Implementation surface shared with the free functions below.
  detail::TermList<K> reduce(const detail::TermList<K>& f) const { return reduce_with(f, elems_); }

  detail::TermList<K> reduce_with(const detail::TermList<K>& f,
                                  const std::vector<detail::TermList<K>>& divisors,
                                  const std::vector<std::size_t>* active = nullptr) const {
    detail::Accumulator<K> acc(field_, order_);
    for (const auto& t : f) acc.add(t.mono, t.coeff);
    detail::TermList<K> out;
    Monomial m;
    Scalar c;
    const auto divisor_count = active ? active->size() : divisors.size();
    while (acc.pop(m, c)) {
      const detail::TermList<K>* g = nullptr;
      const auto mmask = m.support_mask();
      for (std::size_t k = 0; k < divisor_count; ++k) {
        const auto& cand = divisors[active ? (*active)[k] : k];
        const auto& lm = cand.front().mono;
        if ((lm.support_mask() & ~mmask) == 0 && lm.divides(m)) {
          g = &cand;
          break;
        }
      }
      if (!g) {
        out.push_back({m, c});
        continue;
      }
      const Monomial q = quotient(m, g->front().mono);
      const Scalar negc = field_.neg(c);
      for (std::size_t k = 1; k < g->size(); ++k)
        acc.add((*g)[k].mono * q, field_.mul(negc, (*g)[k].coeff));
    }
    return out;
  }

 private:
  template <class F>
  friend GroebnerBasis<F> groebner(const Ideal<F>&, const MonomialOrder&, const GroebnerLimits&);

  K field_;
  std::size_t nvars_;
  MonomialOrder order_;
  std::vector<detail::TermList<K>> elems_;
  std::size_t pairs_processed_ = 0;
};

namespace detail {

template <class K>
TermList<K> make_monic(const K& f, TermList<K> t) {
  if (t.empty() || f.is_one(t.front().coeff)) return t;
  auto inv = f.inv(t.front().coeff);
  for (auto& x : t) x.coeff = f.mul(x.coeff, inv);
  return t;
}

template <class K>
TermList<K> s_polynomial(const K& f, const MonomialOrder& order, const TermList<K>& a,
                         const TermList<K>& b, const Monomial& l) {
  // both monic
  const Monomial qa = quotient(l, a.front().mono);
  const Monomial qb = quotient(l, b.front().mono);
  TermList<K> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 1, j = 1;
  while (i < a.size() || j < b.size()) {
    int c;
    Monomial ma, mb;
    if (i < a.size()) ma = a[i].mono * qa;
    if (j < b.size()) mb = b[j].mono * qb;
    if (i == a.size()) c = -1;
    else if (j == b.size()) c = 1;
    else c = order.compare(ma, mb);
    if (c > 0) {
      out.push_back({ma, a[i++].coeff});
    } else if (c < 0) {
      out.push_back({mb, f.neg(b[j++].coeff)});
    } else {
      auto s = f.sub(a[i].coeff, b[j].coeff);
      if (!f.is_zero(s)) out.push_back({ma, s});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace detail

/// Buchberger's algorithm with normal pair selection (smallest lcm first)
/// and the Gebauer-Moeller installation of the product and chain criteria.
template <class K>
GroebnerBasis<K> groebner(const Ideal<K>& ideal, const MonomialOrder& order,
                          const GroebnerLimits& limits = {}) {
  using detail::Pair;
  using detail::TermList;
  const K& f = ideal.field();
  GroebnerBasis<K> gb(f, ideal.nvars(), order);

  std::vector<TermList<K>> polys;        // every polynomial ever added
  std::vector<std::size_t> basis;        // live indices into polys
  std::vector<Pair> pairs;
  bool unit = false;

  auto lm = [&](std::size_t k) -> const Monomial& { return polys[k].front().mono; };

  auto install = [&](TermList<K> h) {
    if (polys.size() >= limits.max_basis)
      throw ResourceLimit("Groebner basis size cap (" + std::to_string(limits.max_basis) + ") exceeded");
    polys.push_back(detail::make_monic(f, std::move(h)));
    const std::size_t hi = polys.size() - 1;
    if (lm(hi).is_one()) {
      unit = true;
      return;
    }
    const Monomial& mh = lm(hi);
    // Gebauer-Moeller update
    std::vector<Pair> c;
    for (std::size_t g : basis) c.push_back({hi, g, lcm(mh, lm(g))});
    std::vector<Pair> d;
    for (std::size_t a = 0; a < c.size(); ++a) {
      const Pair& p = c[a];
      bool keep = coprime(mh, lm(p.j));
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < c.size() && keep; ++b)
          if (c[b].lcm.divides(p.lcm)) keep = false;
        for (std::size_t b = 0; b < d.size() && keep; ++b)
          if (d[b].lcm.divides(p.lcm)) keep = false;
      }
      if (keep) d.push_back(p);
    }
    std::vector<Pair> next;
    next.reserve(pairs.size() + d.size());
    for (const Pair& p : pairs) {
      const bool chain = mh.divides(p.lcm) && !(lcm(lm(p.i), mh) == p.lcm) &&
                         !(lcm(mh, lm(p.j)) == p.lcm);
      if (!chain) next.push_back(p);
    }
    for (const Pair& p : d)
      if (!coprime(mh, lm(p.j))) next.push_back(p);
    pairs = std::move(next);
    std::vector<std::size_t> live;
    for (std::size_t g : basis)
      if (!mh.divides(lm(g))) live.push_back(g);
    live.push_back(hi);
    basis = std::move(live);
  };

  for (const auto& g : ideal.generators()) {
    auto t = gb.reduce_with(detail::sorted_terms(g, order), polys, &basis);
    if (t.empty()) continue;
    install(std::move(t));
    if (unit) break;
  }

  std::size_t processed = 0;
  while (!unit && !pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const auto& a = pairs[k].lcm;
      const auto& b = pairs[best].lcm;
      if (a.degree() < b.degree() || (a.degree() == b.degree() && order.compare(a, b) < 0)) best = k;
    }
    Pair p = pairs[best];
    pairs[best] = pairs.back();
    pairs.pop_back();
    if (++processed > limits.max_pairs)
      throw ResourceLimit("S-pair cap (" + std::to_string(limits.max_pairs) + ") exceeded");
    auto s = detail::s_polynomial(f, order, polys[p.i], polys[p.j], p.lcm);
    auto h = gb.reduce_with(s, polys, &basis);
    if (!h.empty()) install(std::move(h));
  }

  gb.pairs_processed_ = processed;
  if (unit) {
    gb.elems_.push_back({{Monomial{}, f.one()}});
    return gb;
  }
  if (basis.empty()) return gb;  // zero ideal

  // minimalize, then interreduce tails
  std::vector<TermList<K>> minimal;
  for (std::size_t a : basis) {
    bool redundant = false;
    for (std::size_t b : basis)
      if (a != b && lm(b).divides(lm(a)) && (!(lm(a) == lm(b)) || b < a)) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(polys[a]);
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const auto& x, const auto& y) { return order.greater(x.front().mono, y.front().mono); });
  std::vector<TermList<K>> reduced;
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<TermList<K>> others;
    for (std::size_t b = 0; b < minimal.size(); ++b)
      if (b != a) others.push_back(minimal[b]);
    TermList<K> tail(minimal[a].begin() + 1, minimal[a].end());
    TermList<K> r{minimal[a].front()};
    auto rt = gb.reduce_with(tail, others);
    r.insert(r.end(), rt.begin(), rt.end());
    reduced.push_back(std::move(r));
  }
  gb.elems_ = std::move(reduced);
  return gb;
}

template <class K>
MultiPoly<K> normal_form(const MultiPoly<K>& p, const GroebnerBasis<K>& g) {
  return g.normal_form(p);
}

/// True iff every variable has a pure power among the leading monomials
/// (the unit ideal counts as zero-dimensional with an empty quotient).
template <class K>
bool is_zero_dimensional(const GroebnerBasis<K>& g) {
  if (g.is_unit()) return true;
  std::vector<bool> pure(g.nvars(), false);
  for (const auto& m : g.leading_monomials()) {
    std::size_t nz = 0, idx = 0;
    for (std::size_t i = 0; i < g.nvars(); ++i)
      if (m[i]) {
        ++nz;
        idx = i;
      }
    if (nz == 1) pure[idx] = true;
  }
  for (bool b : pure)
    if (!b) return false;
  return true;
}

/// Monomials outside the leading-term ideal, in ascending degree.
template <class K>
std::vector<Monomial> standard_monomials(const GroebnerBasis<K>& g) {
  if (!is_zero_dimensional(g)) throw DomainError("quotient is infinite-dimensional");
  std::vector<Monomial> out;
  if (g.is_unit()) return out;
  const auto lms = g.leading_monomials();
  auto standard = [&](const Monomial& m) {
    for (const auto& l : lms)
      if (l.divides(m)) return false;
    return true;
  };
  std::unordered_set<Monomial, MonomialHash> seen;
  std::vector<Monomial> frontier{Monomial{}};
  seen.insert(Monomial{});
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& m : frontier) {
      out.push_back(m);
      for (std::size_t i = 0; i < g.nvars(); ++i) {
        Monomial n = m * Monomial::variable(i);
        if (standard(n) && seen.insert(n).second) next.push_back(n);
      }
    }
    frontier = std::move(next);
  }
  return out;
}

template <class K>
std::size_t quotient_dimension(const GroebnerBasis<K>& g) {
  return standard_monomials(g).size();
}

/// Krull dimension of the quotient: the largest set of variables none of
/// whose monomials lies in the leading-term ideal. Unit ideal gives -1.
template <class K>
int ideal_dimension(const GroebnerBasis<K>& g) {
  if (g.is_unit()) return -1;
  const std::size_t n = g.nvars();
  std::vector<std::uint32_t> masks;
  for (const auto& m : g.leading_monomials()) masks.push_back(m.support_mask());
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    int size = __builtin_popcount(s);
    if (size <= best) continue;
    bool independent = true;
    for (auto m : masks)
      if ((m & ~s) == 0) {
        independent = false;
        break;
      }
    if (independent) best = size;
  }
  return best;
}

/// Number of standard monomials of total degree t.
template <class K>
std::size_t hilbert_function(const GroebnerBasis<K>& g, unsigned t) {
  if (g.is_unit()) return 0;
  const auto lms = g.leading_monomials();
  std::size_t count = 0;
  const std::size_t n = g.nvars();
  if (n == 0) return t == 0 ? 1 : 0;
  std::vector<unsigned> e(n, 0);
  // enumerate compositions of t into n parts
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i + 1 == n) {
      e[i] = left;
      Monomial m = Monomial::from_exponents(e);
      for (const auto& l : lms)
        if (l.divides(m)) return;
      ++count;
      return;
    }
    for (unsigned v = 0; v <= left; ++v) {
      e[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, t);
  return count;
}

/// Generators of I intersected with the subring free of the first k
/// variables (same ambient ring; those variables simply do not occur).
template <class K>
Ideal<K> eliminate(const Ideal<K>& ideal, std::size_t k, const GroebnerLimits& limits = {}) {
  if (k >= ideal.nvars() && k != 0) throw DomainError("cannot eliminate every variable");
  if (k == 0) return ideal;
  auto g = groebner(ideal, MonomialOrder::block(k), limits);
  Ideal<K> out(ideal.field(), ideal.nvars());
  for (auto& p : g.basis()) {
    bool free = true;
    for (std::size_t v = 0; v < k && free; ++v)
      if (p.uses_variable(v)) free = false;
    if (free) out.add(std::move(p));
  }
  return out;
}

/// I : f^infinity via an auxiliary variable t: eliminate t from
/// I + (t f - 1).
template <class K>
Ideal<K> saturate(const Ideal<K>& ideal, const MultiPoly<K>& f, const GroebnerLimits& limits = {}) {
  if (f.is_zero()) throw DomainError("saturation by the zero polynomial");
  const std::size_t n = ideal.nvars();
  if (n + 1 > kMaxVars) throw DomainError("no room for the auxiliary variable");
  const K& field = ideal.field();
  Ideal<K> ext(field, n + 1);
  for (const auto& g : ideal.generators()) ext.add(g.embed(n + 1, 1));
  auto t = MultiPoly<K>::variable(field, n + 1, 0);
  ext.add(t * f.embed(n + 1, 1) - MultiPoly<K>::constant(field, n + 1, field.one()));
  auto elim = eliminate(ext, 1, limits);
  Ideal<K> out(field, n);
  for (const auto& g : elim.generators()) out.add(g.shift_down(n, 1));
  return out;
}

/// True iff every S-polynomial of basis pairs reduces to zero.
template <class K>
bool satisfies_buchberger_criterion(const GroebnerBasis<K>& g) {
  const auto b = g.basis();
  std::vector<detail::TermList<K>> sorted;
  for (const auto& p : b) sorted.push_back(detail::make_monic(g.field(), detail::sorted_terms(p, g.order())));
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      auto l = lcm(sorted[i].front().mono, sorted[j].front().mono);
      auto s = detail::s_polynomial(g.field(), g.order(), sorted[i], sorted[j], l);
      if (!g.reduce(s).empty()) return false;
    }
  return true;
}

/// Whether the zero-dimensional ideal is radical with points separated by a
/// random linear form: the minimal polynomial of that form on the
/// quotient must be squarefree of degree quotient_dimension. A false
/// negative from an unlucky form is possible; callers retry.
bool is_reduced_zero_dim(const GroebnerBasis<PrimeField>& g, SeedStream& stream);

}  // namespace polardeg
