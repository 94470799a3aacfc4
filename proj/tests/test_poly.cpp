#include <gtest/gtest.h>

#include <set>

#include "helpers.hpp"
#include "polardeg/gcd.hpp"

using namespace polardeg;
using testing_helpers::P;
using testing_helpers::Q;
using testing_helpers::random_poly;

// ---- fields and randomness ----

TEST(PrimeField, RejectsSmallOrCompositeModulus) {
  EXPECT_THROW(PrimeField{7}, DomainError);
  EXPECT_THROW(PrimeField{1u << 20}, DomainError);
  EXPECT_THROW(PrimeField{2147483649ull}, DomainError);  // 3 * 715827883
  EXPECT_NO_THROW(PrimeField{1000000007});
  EXPECT_NO_THROW(PrimeField{kDefaultPrime});
}

TEST(PrimeField, InverseAndWrapAround) {
  const PrimeField f(1000000007);
  for (u64 a : {1ull, 2ull, 12345ull, 1000000006ull}) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
  EXPECT_EQ(f.from_int(-1), 1000000006u);
  EXPECT_EQ(f.from_rational(mpq_class(1, 2)), f.inv(2));
}

TEST(PrimeField, ModularReductionOfCoefficients) {
  // (p-3) x0 + 5 x0 = 2 x0: the same wrap-around as 5 + 4 = 2 over F_7,
  // at a modulus inside the supported range.
  const u64 p = 1000000007;
  const PrimeField f(p);
  const auto x0 = PolyP::variable(f, 3, 0);
  EXPECT_EQ(x0.scaled(p - 3) + x0.scaled(5), x0.scaled(2));
}

TEST(SeedStream, SameSeedSameStream) {
  SeedStream a(42), b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next_u64(), b.next_u64());
  const PrimeField f;
  SeedStream c(42), d(42);
  EXPECT_EQ(random_linear_form(f, 4, c), random_linear_form(f, 4, d));
}

TEST(SeedStream, DistinctSeedsDoNotCollide) {
  std::set<u64> seen;
  for (u64 s = 0; s < 100; ++s) {
    SeedStream st(s);
    for (int i = 0; i < 100; ++i) seen.insert(st.next_u64());
  }
  EXPECT_EQ(seen.size(), 10000u);
}

TEST(SeedStream, UniformStaysInRange) {
  SeedStream s(7);
  for (int i = 0; i < 1000; ++i) EXPECT_LT(s.uniform(13), 13u);
}

TEST(Randomness, RationalRequestIsRejected) {
  SeedStream s(1);
  EXPECT_THROW(random_scalar(RationalField{}, s), DomainError);
}

TEST(Randomness, LinearFormIsNonzeroAndLinear) {
  const PrimeField f;
  for (u64 seed = 0; seed < 50; ++seed) {
    SeedStream s(seed);
    const auto l = random_linear_form(f, 5, s);
    EXPECT_FALSE(l.is_zero());
    EXPECT_TRUE(l.is_homogeneous());
    EXPECT_EQ(l.degree(), 1);
  }
}

// ---- arithmetic ----

TEST(Arithmetic, AddExamples) {
  EXPECT_EQ(Q("x0 + x1") + Q("-x1"), Q("x0"));
  const auto p = Q("x0^2 - 3*x1*x2 + 1/2");
  EXPECT_EQ(p + PolyQ(RationalField{}, 3), p);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ((p - p).degree(), -1);
}

TEST(Arithmetic, MulExamples) {
  EXPECT_EQ(Q("x0") * Q("x1"), Q("x0*x1"));
  EXPECT_EQ(Q("x0 + x1") * Q("x0 - x1"), Q("x0^2 - x1^2"));
  const auto p = Q("x0^2 - 3*x1*x2 + 1/2");
  EXPECT_EQ(p * Q("1"), p);
  EXPECT_EQ(Q("x0 + x1").pow(3), Q("x0^3 + 3*x0^2*x1 + 3*x0*x1^2 + x1^3"));
}

TEST(Arithmetic, DifferentRingsDoNotMix) {
  EXPECT_THROW(Q("x0", 2) + Q("x0", 3), RingMismatch);
  EXPECT_THROW(P("x0", 3, 1000000007) * P("x0", 3, kDefaultPrime), RingMismatch);
}

TEST(Arithmetic, TermsStayCanonical) {
  const auto p = Q("x2 + x0^2 + x1*x0 + 3 - x2");
  for (std::size_t i = 0; i + 1 < p.terms().size(); ++i)
    EXPECT_GT(MonomialOrder::degrevlex().compare(p.terms()[i].mono, p.terms()[i + 1].mono), 0);
  for (const auto& t : p.terms()) EXPECT_NE(t.coeff, 0);
}

template <class K>
void check_ring_axioms(const K& field) {
  SeedStream s(2024);
  for (int round = 0; round < 30; ++round) {
    const auto a = random_poly(field, 3, 3, s);
    const auto b = random_poly(field, 3, 3, s);
    const auto c = random_poly(field, 3, 2, s);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) - b, a);
  }
}

TEST(Properties, RingAxiomsOverQ) { check_ring_axioms(RationalField{}); }
TEST(Properties, RingAxiomsOverFp) { check_ring_axioms(PrimeField{}); }

// ---- calculus ----

TEST(Derivatives, Examples) {
  EXPECT_EQ(partial_derivative(Q("x0^2*x1"), 0), Q("2*x0*x1"));
  EXPECT_TRUE(partial_derivative(Q("x1^3"), 0).is_zero());
  EXPECT_EQ(partial_derivative(Q("x0*x1*x2"), 2), Q("x0*x1"));
}

TEST(EulerContraction, Examples) {
  const std::vector<PolyQ> p1 = {Q("x1", 2), Q("-x0", 2)};
  EXPECT_TRUE(euler_contraction<RationalField>(p1).is_zero());
  const std::vector<PolyQ> radial = {Q("x0", 2), Q("x1", 2)};
  EXPECT_EQ(euler_contraction<RationalField>(radial), Q("x0^2 + x1^2", 2));
  EXPECT_EQ(euler_contraction<RationalField>(gradient(Q("x0*x1*x2"))), Q("3*x0*x1*x2"));
  const std::vector<PolyQ> short_form = {Q("x1")};
  EXPECT_THROW(euler_contraction<RationalField>(short_form), RingMismatch);
}

template <class K>
void check_euler_identity(const K& field) {
  SeedStream s(77);
  for (int round = 0; round < 30; ++round) {
    const unsigned d = 1 + unsigned(s.uniform(5));
    const auto f = random_poly(field, 4, d, s, true);
    if (f.is_zero()) continue;
    EXPECT_EQ(euler_contraction<K>(gradient(f)), f.scaled(field.from_int(d)));
  }
}

TEST(Properties, EulerIdentityOverQ) { check_euler_identity(RationalField{}); }
TEST(Properties, EulerIdentityOverFp) { check_euler_identity(PrimeField{}); }

TEST(Properties, PartialsCommute) {
  SeedStream s(5);
  for (int round = 0; round < 30; ++round) {
    const auto f = random_poly(RationalField{}, 4, 5, s);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        EXPECT_EQ(partial_derivative(partial_derivative(f, i), j), partial_derivative(partial_derivative(f, j), i));
  }
}

// ---- gcd ----

TEST(Gcd, Examples) {
  EXPECT_EQ(gcd_multivariate(Q("x0*x1"), Q("x0*x2")), Q("x0"));
  EXPECT_EQ(gcd_multivariate(Q("x0^2 - x1^2"), Q("x0 - x1")), Q("x0 - x1"));
  // coefficients of the logarithmic form of the coordinate triangle
  const std::vector<PolyQ> coeffs = {Q("x1*x2"), Q("x0*x2"), Q("x0*x1")};
  EXPECT_TRUE(gcd_all<RationalField>(coeffs).is_constant());
  EXPECT_EQ(gcd_multivariate(Q("0"), Q("2*x0 + 4*x1")), Q("x0 + 2*x1"));
}

TEST(Gcd, HiddenCommonFactor) {
  const auto g = Q("x0^2 + 3*x1*x2 - x2^2");
  const auto a = g * Q("x0*x1 - 2*x2^2 + x1");
  const auto b = g * Q("x1^3 + x0 - 7");
  EXPECT_EQ(gcd_multivariate(a, b), normalize_lex(g));
}

template <class K>
void check_gcd_properties(const K& field) {
  SeedStream s(99);
  for (int round = 0; round < 20; ++round) {
    const auto g = random_poly(field, 3, 2, s);
    const auto a = g * random_poly(field, 3, 2, s);
    const auto b = g * random_poly(field, 3, 2, s);
    if (a.is_zero() || b.is_zero()) continue;
    const auto d = gcd_multivariate(a, b);
    const auto ca = divide_exact(a, d);
    const auto cb = divide_exact(b, d);
    ASSERT_TRUE(ca.has_value());
    ASSERT_TRUE(cb.has_value());
    EXPECT_TRUE(gcd_multivariate(*ca, *cb).is_constant());
    EXPECT_TRUE(divide_exact(d, normalize_lex(g)).has_value());
  }
}

TEST(Properties, GcdDividesAndCofactorsCoprimeOverQ) { check_gcd_properties(RationalField{}); }
TEST(Properties, GcdDividesAndCofactorsCoprimeOverFp) { check_gcd_properties(PrimeField{}); }

// ---- substitution ----

TEST(Substitution, Examples) {
  ScalarMatrix<RationalField> id = {{1, 0}, {0, 1}};
  EXPECT_EQ(substitute_linear(Q("x0^2", 2), id), Q("x0^2", 2));
  ScalarMatrix<RationalField> m = {{1, 0}, {1, 1}};
  EXPECT_EQ(substitute_linear(Q("x0*x1", 2), m), Q("x0^2 + x0*x1", 2));
  ScalarMatrix<RationalField> embed = {{1, 0}, {0, 1}, {2, 3}};  // P^1 -> P^2
  EXPECT_EQ(substitute_linear(Q("x2 - 2*x0"), embed), Q("3*x1", 2));
  ScalarMatrix<RationalField> bad = {{1, 0}};
  EXPECT_THROW(substitute_linear(Q("x0"), bad), RingMismatch);
}

TEST(Properties, SubstitutionIsARingHomomorphism) {
  const PrimeField f;
  SeedStream s(11);
  for (int round = 0; round < 20; ++round) {
    ScalarMatrix<PrimeField> m(3, std::vector<u64>(2));
    for (auto& row : m)
      for (auto& v : row) v = random_scalar(f, s);
    const auto a = random_poly(f, 3, 3, s);
    const auto b = random_poly(f, 3, 3, s);
    EXPECT_EQ(substitute_linear(a + b, m), substitute_linear(a, m) + substitute_linear(b, m));
    EXPECT_EQ(substitute_linear(a * b, m), substitute_linear(a, m) * substitute_linear(b, m));
  }
}

TEST(Reduction, LiftCommutesWithArithmetic) {
  const PrimeField f(1000000007);
  const auto a = Q("1/3*x0^2 - 5*x1*x2"), b = Q("x0 + 2/7*x2");
  EXPECT_EQ(reduce_mod(a * b, f), reduce_mod(a, f) * reduce_mod(b, f));
  EXPECT_EQ(reduce_mod(partial_derivative(a, 0), f), partial_derivative(reduce_mod(a, f), 0));
}

TEST(HomogeneousForm, RejectsMixedDegrees) {
  EXPECT_THROW(HomogeneousForm<RationalField>(Q("x0 + x1^2")), DomainError);
  EXPECT_EQ(HomogeneousForm<RationalField>(Q("0")).degree(), -1);
  EXPECT_EQ(HomogeneousForm<RationalField>(Q("x0*x1 + x2^2")).degree(), 2);
}
