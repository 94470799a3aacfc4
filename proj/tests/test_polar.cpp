#include <gtest/gtest.h>

#include <array>
#include <functional>

#include "helpers.hpp"
#include "polardeg/corpus.hpp"
#include "polardeg/polar.hpp"

using namespace polardeg;
using testing_helpers::Q;

namespace {

DegreeOptions defaults() { return DegreeOptions{}; }

std::vector<long long> values(const std::vector<DegreeReport>& rs) {
  std::vector<long long> out;
  for (const auto& r : rs) {
    EXPECT_TRUE(r.stable) << "level " << r.level;
    out.push_back(r.value.value_or(-1));
  }
  return out;
}

std::vector<long long> profile(const std::string& f, const DegreeOptions& o = defaults()) {
  return values(polar_degrees_profile(corpus::weighted({f}, "1"), o));
}

long long deg(const RationalMapRep<RationalField>& m, int i, const DegreeOptions& o = defaults()) {
  const auto r = map_degree(lift_map(m, o.field), i, o);
  EXPECT_TRUE(r.stable);
  return r.value.value_or(-1);
}

// a = c * b for some nonzero scalar c
bool proportional(const std::vector<PolyQ>& a, const std::vector<PolyQ>& b) {
  if (a.size() != b.size()) return false;
  std::optional<mpq_class> c;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero() != b[i].is_zero()) return false;
    if (a[i].is_zero()) continue;
    const mpq_class r = a[i].leading_term().coeff / b[i].leading_term().coeff;
    if (!c) c = r;
    if (a[i] != b[i].scaled(*c)) return false;
  }
  return true;
}

std::vector<PolyQ> comps(std::initializer_list<const char*> cs) {
  std::vector<PolyQ> out;
  for (auto c : cs) out.push_back(Q(c));
  return out;
}

// ---- brute-force fiber counting over a small prime, independent of the
// library's field and polynomial code ----

using Pt = std::array<long, 3>;
using Map = std::function<Pt(const Pt&)>;

long md(long a, long p) { return ((a % p) + p) % p; }

std::vector<Pt> projective_plane(long p) {
  std::vector<Pt> pts;
  for (long a = 0; a < p; ++a)
    for (long b = 0; b < p; ++b) pts.push_back({a, b, 1});
  for (long a = 0; a < p; ++a) pts.push_back({a, 1, 0});
  pts.push_back({1, 0, 0});
  return pts;
}

bool is_zero(const Pt& v, long p) { return md(v[0], p) == 0 && md(v[1], p) == 0 && md(v[2], p) == 0; }

bool parallel(const Pt& a, const Pt& b, long p) {
  return md(a[1] * b[2] - a[2] * b[1], p) == 0 && md(a[2] * b[0] - a[0] * b[2], p) == 0 &&
         md(a[0] * b[1] - a[1] * b[0], p) == 0;
}

long fiber_size(const Map& g, const Pt& target, long p) {
  long count = 0;
  for (const auto& x : projective_plane(p)) {
    const Pt y = g(x);
    if (!is_zero(y, p) && parallel(y, target, p)) ++count;
  }
  return count;
}

}  // namespace

// ---- construction ----

TEST(PolarMap, Examples) {
  EXPECT_EQ(polar_map(Q(corpus::kConic)).components(), comps({"2*x0", "2*x1", "2*x2"}));
  EXPECT_EQ(polar_map(Q("x0*x1*x2")).components(), comps({"x1*x2", "x0*x2", "x0*x1"}));
  EXPECT_EQ(polar_map(Q("x2*(x1^2 - x0*x2)")).components(), comps({"-x2^2", "2*x1*x2", "x1^2 - 2*x0*x2"}));
  EXPECT_THROW(polar_map(Q("x0^2 + x1")), DomainError);
  EXPECT_THROW(polar_map(Q("5")), DomainError);
}

TEST(WeightedPolarMap, Examples) {
  const auto line = weighted_polar_map(corpus::weighted({"x0"}, "1"));
  EXPECT_TRUE(line.is_constant());
  EXPECT_TRUE(proportional(line.components(), comps({"1", "0", "0"})));

  const auto tri = weighted_polar_map(corpus::weighted({"x0", "x1", "x2"}, "1,1,1"));
  EXPECT_TRUE(proportional(tri.components(), polar_map(Q("x0*x1*x2")).components()));

  const auto res = weighted_polar_map(corpus::weighted({"x0", "x1", "x2"}, "1,-1,1"));
  EXPECT_TRUE(proportional(res.components(), comps({"x1*x2", "-x0*x2", "x0*x1"})));
}

TEST(WeightedPolarMap, RawComponentsCarryTheWeights) {
  const auto c = weighted_gradient_components(corpus::weighted({"x0", "x1"}, "1/2,3/4", 2));
  // weights scaled by the common denominator 4: (2, 3)
  EXPECT_EQ(c, (std::vector<PolyQ>{Q("2*x1", 2), Q("3*x0", 2)}));
}

TEST(WeightedFunction, ValidatesItsInputs) {
  EXPECT_THROW(corpus::weighted({"x0^2*x1"}, "1"), DomainError);         // not reduced
  EXPECT_THROW(corpus::weighted({"x0*x1", "x1*x2"}, "1,1"), DomainError);  // common factor x1
  EXPECT_THROW(corpus::weighted({"x0", "x1"}, "1"), DomainError);          // count mismatch
  EXPECT_THROW(corpus::weighted({"x0 + x1^2"}, "1"), DomainError);         // not homogeneous
  EXPECT_THROW(WeightedFunction({Q("x0")}, {mpq_class(0)}), DomainError);   // zero weight
  EXPECT_NO_THROW(corpus::weighted({"x0", "x1", "x0 + x1", "x2"}, "1,1,-2,1"));
}

TEST(WeightedFunction, Degree) {
  EXPECT_EQ(corpus::weighted({"x0", "x1", "x2"}, "1,-1,1").total_degree(), 1);
  EXPECT_EQ(corpus::weighted({"x0", "x1", "x0 + x1"}, "1,1,-2").total_degree(), 0);
  EXPECT_THROW(polar_degrees_profile(corpus::weighted({"x0", "x1", "x0 + x1"}, "1,1,-2"), defaults()),
               DomainError);
}

TEST(Squarefree, Examples) {
  EXPECT_TRUE(is_squarefree(Q("x0*x1*x2")));
  EXPECT_TRUE(is_squarefree(Q(corpus::kConic)));
  EXPECT_FALSE(is_squarefree(Q("x0^2*x1")));
  EXPECT_FALSE(is_squarefree(Q("(x0 + x1 + x2)^2*(x1 - x2)")));
}

// ---- degrees ----

TEST(MapDegree, Examples) {
  EXPECT_EQ(deg(polar_map(Q(corpus::kConic)), 0), 1);
  EXPECT_EQ(deg(polar_map(Q(corpus::kConic)), 1), 1);
  const auto flat = map_degree(lift_map(polar_map(Q(corpus::kConcurrentLines)), PrimeField{}), 0, defaults());
  EXPECT_EQ(flat.value, 0);
  EXPECT_TRUE(flat.stable);
  EXPECT_FALSE(flat.note.empty());
  EXPECT_EQ(deg(polar_map(Q(corpus::fermat(4))), 0), 9);
}

TEST(MapDegree, RejectsBadLevels) {
  const auto m = lift_map(polar_map(Q(corpus::kConic)), PrimeField{});
  EXPECT_THROW(map_degree(m, 2, defaults()), DomainError);
  EXPECT_THROW(map_degree(m, -1, defaults()), DomainError);
}

TEST(BruteForce, FermatQuarticFiberHasNinePoints) {
  // [x0^3 : x1^3 : x2^3] over F_13, where 13 = 1 mod 3 splits every cube
  // root; the fiber over the image of (1, 2, 3) is {(w^a, 2 w^b, 3)}.
  const long p = 13;
  const Map g = [p](const Pt& x) {
    return Pt{md(x[0] * x[0] * x[0], p), md(x[1] * x[1] * x[1], p), md(x[2] * x[2] * x[2], p)};
  };
  EXPECT_EQ(fiber_size(g, g({1, 2, 3}), p), 9);
  EXPECT_EQ(deg(polar_map(Q(corpus::fermat(4))), 0), 9);
}

TEST(BruteForce, CremonaFiberIsOnePoint) {
  const long p = 101;
  const Map g = [p](const Pt& x) { return Pt{md(x[1] * x[2], p), md(x[0] * x[2], p), md(x[0] * x[1], p)}; };
  for (const Pt& x : {Pt{1, 2, 3}, Pt{5, 17, 42}, Pt{99, 3, 7}}) EXPECT_EQ(fiber_size(g, g(x), p), 1);
}

TEST(BruteForce, CremonaPullsBackLinesToConics) {
  // deg_1: for M the line through y1, y2 and L the line through their
  // images, count points of M (off the base locus) mapping into L.
  const long p = 101;
  const Map g = [p](const Pt& x) { return Pt{md(x[1] * x[2], p), md(x[0] * x[2], p), md(x[0] * x[1], p)}; };
  auto cross = [p](const Pt& a, const Pt& b) {
    return Pt{md(a[1] * b[2] - a[2] * b[1], p), md(a[2] * b[0] - a[0] * b[2], p), md(a[0] * b[1] - a[1] * b[0], p)};
  };
  for (const auto& [y1, y2] : {std::pair{Pt{1, 2, 3}, Pt{4, 9, 1}}, std::pair{Pt{7, 1, 50}, Pt{2, 33, 8}}}) {
    const Pt ell = cross(g(y1), g(y2));
    long count = 0;
    for (long s = 0; s <= p; ++s) {  // P^1 parameter, s = p is the point y1
      Pt x = s == p ? y1 : Pt{md(y2[0] + s * y1[0], p), md(y2[1] + s * y1[1], p), md(y2[2] + s * y1[2], p)};
      const Pt y = g(x);
      if (is_zero(y, p)) continue;
      if (md(ell[0] * y[0] + ell[1] * y[1] + ell[2] * y[2], p) == 0) ++count;
    }
    EXPECT_EQ(count, 2);
  }
  EXPECT_EQ(deg(polar_map(Q("x0*x1*x2")), 1), 2);
}

TEST(Profile, Examples) {
  EXPECT_EQ(profile(corpus::kConic), (std::vector<long long>{1, 1}));
  EXPECT_EQ(values(polar_degrees_profile(corpus::weighted({"x0", "x1", "x2"}, "1,1,1"), defaults())),
            (std::vector<long long>{1, 2}));
  EXPECT_EQ(profile(corpus::fermat(3)), (std::vector<long long>{4, 2}));
}

TEST(Profile, SmoothCurvesFollowTheClosedForm) {
  for (unsigned d = 2; d <= 4; ++d) {
    const long long e = d - 1;
    EXPECT_EQ(profile(corpus::fermat(d)), (std::vector<long long>{e * e, e})) << "d = " << d;
  }
}

TEST(Profile, SmoothSurfaceInP3) {
  // (d-1)^{n-i} for the Fermat cubic surface
  const auto w = corpus::weighted({corpus::fermat(3, 4)}, "1", 4);
  EXPECT_EQ(values(polar_degrees_profile(w, defaults())), (std::vector<long long>{8, 4, 2}));
}

TEST(Homaloidal, Examples) {
  EXPECT_TRUE(homaloidal_check(corpus::weighted({"x2", "x1^2 - x0*x2"}, "1,1"), defaults()));
  EXPECT_TRUE(homaloidal_check(corpus::weighted({corpus::kConic}, "1"), defaults()));
  EXPECT_FALSE(homaloidal_check(corpus::weighted({"x2", corpus::kConic}, "1,1"), defaults()));
  EXPECT_FALSE(homaloidal_check(corpus::weighted({corpus::fermat(4)}, "1"), defaults()));
  // pinned regression value for the conic with a transversal line
  EXPECT_EQ(deg(polar_map(Q(corpus::kConicTransversalLine)), 0), 2);
}

TEST(Properties, SameSeedSameReport) {
  const auto m = lift_map(polar_map(Q(corpus::fermat(3))), PrimeField{});
  DegreeOptions o;
  o.seed = 1234;
  EXPECT_EQ(map_degree(m, 0, o), map_degree(m, 0, o));
  DegreeOptions other = o;
  other.seed = 99;
  const auto a = map_degree(m, 0, o), b = map_degree(m, 0, other);
  EXPECT_NE(a.trials.front().seed, b.trials.front().seed);
  EXPECT_EQ(a.value, b.value);
}

TEST(Properties, WeightRescalingLeavesReportsUnchanged) {
  const auto w = corpus::weighted({"x2", corpus::kConic}, "2,3");
  const auto scaled = w.with_weights({mpq_class(2, 7), mpq_class(3, 7)});
  const auto negated = w.with_weights({mpq_class(-4), mpq_class(-6)});
  EXPECT_EQ(weighted_polar_map(w), weighted_polar_map(scaled));
  EXPECT_EQ(polar_degrees_profile(w, defaults()), polar_degrees_profile(scaled, defaults()));
  EXPECT_EQ(values(polar_degrees_profile(w, defaults())), values(polar_degrees_profile(negated, defaults())));
}

TEST(Properties, SecondPrimeAgrees) {
  DegreeOptions o;
  o.field = PrimeField(1000000007);
  for (const char* f : {corpus::kConic, corpus::kTriangle, corpus::kConicTangentLine, corpus::kConcurrentLines,
                        corpus::kConicTransversalLine})
    EXPECT_EQ(profile(f, o), profile(f)) << f;
}

TEST(RunTrials, RetriesBadDrawsAndVotes) {
  int calls = 0;
  DegreeOptions o;
  o.trials = 3;
  o.retries = 2;
  const auto r = run_trials(0, o, 7, [&](u64) {
    ++calls;
    TrialOutcome t;
    if (calls % 2 == 1) return t;  // every first attempt fails
    t.value = 5;
    t.zero_dim = t.reduced = true;
    return t;
  });
  EXPECT_EQ(calls, 6);
  EXPECT_EQ(r.value, 5);
  EXPECT_TRUE(r.stable);
}
