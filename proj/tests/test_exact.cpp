#include <gtest/gtest.h>

#include <functional>
#include <random>
#include <set>
#include <tuple>

#include "modlift/error.hpp"
#include "modlift/exact/example.hpp"
#include "modlift/exact/remark.hpp"

using namespace modlift;
using namespace modlift::exact;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorKind::SchemaError;
}

// Exponent of prime in a nonzero long.
long int_valuation(long v, long prime) {
  long e = 0;
  while (v % prime == 0) {
    v /= prime;
    ++e;
  }
  return e;
}

BigRational rat(long n, long d) {
  BigRational r(n, d);
  r.canonicalize();
  return r;
}

BigRational random_rational(std::mt19937& gen) {
  std::uniform_int_distribution<long> num(-200, 200), den(1, 200);
  long n = 0;
  while (n == 0) n = num(gen);
  return rat(n, den(gen));
}

UElement u(long p, long q, BigRational a, BigRational b) {
  return {LocalizedRational(a, p), PrueferElement::from_rational(b, q)};
}

}  // namespace

TEST(Rational, Parse) {
  EXPECT_EQ(parse_rational("4/3"), rat(4, 3));
  EXPECT_EQ(parse_rational("-10/9"), rat(-10, 9));
  EXPECT_EQ(parse_rational("8/4"), rat(2, 1));
  EXPECT_EQ(parse_rational("7"), rat(7, 1));
  for (const char* bad : {"", "4/0", "x", "1/-2", "1/", "/2", "1.5"})
    EXPECT_EQ(kind_of([&] { parse_rational(bad); }), ErrorKind::SchemaError) << bad;
}

TEST(Valuation, Examples) {
  EXPECT_EQ(valuation(rat(4, 3), 2), 2);
  EXPECT_EQ(valuation(rat(4, 3), 3), -1);
  EXPECT_EQ(valuation(rat(1, 1), 5), 0);
  EXPECT_EQ(kind_of([] { valuation(0, 2); }), ErrorKind::ZeroInput);
}

TEST(Valuation, LawsAgainstIntegerOracle) {
  std::mt19937 gen(7);
  for (int i = 0; i < 500; ++i) {
    BigRational x = random_rational(gen), y = random_rational(gen);
    for (long prime : {2L, 3L, 5L}) {
      long vx = valuation(x, prime), vy = valuation(y, prime);
      EXPECT_EQ(vx, int_valuation(x.get_num().get_si(), prime) - int_valuation(x.get_den().get_si(), prime));
      EXPECT_EQ(valuation(x * y, prime), vx + vy);
      if (x + y != 0) {
        long vs = valuation(x + y, prime);
        EXPECT_GE(vs, std::min(vx, vy));
        if (vx != vy) EXPECT_EQ(vs, std::min(vx, vy));
      }
    }
  }
}

TEST(Localized, MembershipAndUnits) {
  EXPECT_NO_THROW(LocalizedRational(rat(4, 3), 2));
  EXPECT_EQ(kind_of([] { LocalizedRational(rat(1, 2), 2); }), ErrorKind::NotWellDefined);
  EXPECT_TRUE(LocalizedRational(rat(3, 5), 2).is_unit());
  EXPECT_FALSE(LocalizedRational(rat(6, 5), 2).is_unit());
  EXPECT_FALSE(LocalizedRational::zero(2).is_unit());
}

TEST(Pruefer, CanonicalForm) {
  auto b = PrueferElement::from_rational(rat(4, 3), 3);
  EXPECT_EQ(b.representative(), rat(1, 3));
  EXPECT_TRUE(PrueferElement::from_rational(rat(5, 7), 3).is_zero());
  auto c = PrueferElement::from_rational(rat(-1, 9), 3);
  EXPECT_EQ(c.numerator(), 8);
  EXPECT_EQ(c.exponent(), 2u);
  // 3/9 reduces to 1/3.
  EXPECT_EQ(PrueferElement::from_rational(rat(3, 9), 3).exponent(), 1u);
}

TEST(Pruefer, MatchesRationalArithmeticModuloLocalization) {
  std::mt19937 gen(11);
  for (long q : {2L, 3L, 5L}) {
    for (int i = 0; i < 300; ++i) {
      BigRational x = random_rational(gen), y = random_rational(gen);
      auto bx = PrueferElement::from_rational(x, q), by = PrueferElement::from_rational(y, q);
      // Representative differs from x by an element of Z_(q), sits in [0, 1), has q-power denominator.
      BigRational diff = x - bx.representative();
      EXPECT_NE(mpz_divisible_ui_p(diff.get_den().get_mpz_t(), q), 1) << x;
      EXPECT_GE(bx.representative(), 0);
      EXPECT_LT(bx.representative(), 1);
      mpz_class den = bx.representative().get_den();
      while (mpz_divisible_ui_p(den.get_mpz_t(), q)) den /= q;
      EXPECT_EQ(den, 1);
      EXPECT_EQ(bx + by, PrueferElement::from_rational(x + y, q));
      EXPECT_EQ(bx - by, PrueferElement::from_rational(x - y, q));
      EXPECT_EQ(-bx, PrueferElement::from_rational(-x, q));
      BigRational c = x;
      if (mpz_divisible_ui_p(c.get_den().get_mpz_t(), q)) c = c * c.get_den();
      EXPECT_EQ(LocalizedRational(c, q) * bx, PrueferElement::from_rational(c * x, q));
    }
  }
}

TEST(UAction, Examples) {
  const long p = 2, q = 3;
  UElement e = UElement::generator(p, q);
  EXPECT_EQ(u_action(e, RElement::one(p, q)), e);
  RElement b13{LocalizedRational::zero(p), rat(1, 3), LocalizedRational::zero(q)};
  EXPECT_EQ(u_action(e, b13), u(p, q, 0, rat(1, 3)));
  RElement b1{LocalizedRational::zero(p), 1, LocalizedRational::zero(q)};
  EXPECT_TRUE(u_action(e, b1).is_zero());
}

TEST(UAction, AssociativeAndUnital) {
  for (auto [p, q] : {std::pair{2L, 3L}, std::pair{3L, 5L}}) {
    auto us = sample_elements(p, q);
    auto rs = sample_ring_elements(p, q);
    for (std::size_t i = 0; i < us.size(); ++i) {
      const RElement& r = rs[i];
      const RElement& s = rs[(i + 7) % rs.size()];
      EXPECT_EQ(u_action(u_action(us[i], r), s), u_action(us[i], r * s));
      EXPECT_EQ(u_action(us[i], RElement::one(p, q)), us[i]);
      EXPECT_EQ(u_action(us[i], r + s), u_action(us[i], r) + u_action(us[i], s));
    }
  }
}

TEST(Sampling, DeterministicAndSpread) {
  auto a = sample_elements(2, 3), b = sample_elements(2, 3);
  EXPECT_EQ(a.size(), 32u);
  EXPECT_TRUE(a == b);
  std::set<long> vals;
  for (const UElement& x : a)
    if (!x.a.is_zero()) vals.insert(valuation(x.a.value(), 2));
  EXPECT_GE(vals.size(), 4u);
  SampleOptions other{32, 2};
  EXPECT_FALSE(sample_elements(2, 3, other) == a);
}

TEST(Decompose, Examples) {
  auto d = decompose_x(rat(4, 3), 2, 3);
  EXPECT_EQ(std::tie(d.m, d.n), std::make_tuple(2L, 1L));
  EXPECT_EQ(d.t, 1);
  EXPECT_EQ(d.s, 1);
  d = decompose_x(rat(10, 9), 2, 3);
  EXPECT_EQ(std::tie(d.m, d.n), std::make_tuple(1L, 2L));
  EXPECT_EQ(d.t, 5);
  EXPECT_EQ(d.s, 1);
  EXPECT_EQ(kind_of([] { decompose_x(rat(5, 7), 2, 3); }), ErrorKind::WrongBranch);
}

TEST(Decompose, ReconstructsExactly) {
  std::mt19937 gen(3);
  int tested = 0;
  for (int i = 0; i < 2000 && tested < 300; ++i) {
    BigRational x = random_rational(gen);
    if (valuation(x, 2) < 0 || valuation(x, 3) >= 0) continue;
    ++tested;
    auto d = decompose_x(x, 2, 3);
    BigRational back = BigRational(power(2, d.m)) / BigRational(power(3, d.n)) * BigRational(d.t) / BigRational(d.s);
    EXPECT_EQ(back, x);
    for (long prime : {2L, 3L}) {
      EXPECT_FALSE(mpz_divisible_ui_p(d.t.get_mpz_t(), prime));
      EXPECT_FALSE(mpz_divisible_ui_p(d.s.get_mpz_t(), prime));
    }
  }
  EXPECT_GT(tested, 50);
}

TEST(MultEndo, Examples) {
  UElement e = UElement::generator(2, 3);
  auto id = mult_endo(1, 2, 3);
  for (const UElement& x : sample_elements(2, 3)) EXPECT_EQ(id(x), x);
  auto h = mult_endo(rat(3, 5), 2, 3);
  EXPECT_EQ(h.linearity_checks, 32u);
  EXPECT_EQ(h(e), u(2, 3, rat(3, 5), 0));
  EXPECT_EQ(kind_of([] { mult_endo(rat(4, 3), 2, 3); }), ErrorKind::NotWellDefined);
}

TEST(MultEndo, CompositionAndUnits) {
  std::vector<BigRational> xs{1, -1, 2, 3, 6, rat(3, 5), rat(5, 7), rat(-12, 35), rat(9, 11)};
  auto us = sample_elements(2, 3);
  for (const BigRational& x : xs)
    for (const BigRational& y : xs) {
      auto hx = mult_endo(x, 2, 3), hy = mult_endo(y, 2, 3), hxy = mult_endo(x * y, 2, 3);
      for (const UElement& v : us) EXPECT_EQ(hx(hy(v)), hxy(v));
    }
  for (const BigRational& x : xs) {
    UnitReport r = endo_is_unit(mult_endo(x, 2, 3));
    EXPECT_EQ(r.unit, valuation(x, 2) == 0 && valuation(x, 3) == 0) << x;
    for (const Certificate& c : r.certificates) EXPECT_TRUE(c.holds) << c.name;
  }
}

TEST(MultEndo, UnitCertificates) {
  UnitReport r = endo_is_unit(mult_endo(-2, 2, 3));
  EXPECT_FALSE(r.unit);
  ASSERT_TRUE(r.no_preimage.has_value());
  EXPECT_EQ(*r.no_preimage, UElement::generator(2, 3));
  EXPECT_FALSE(r.kernel_element.has_value());
  r = endo_is_unit(mult_endo(3, 2, 3));
  EXPECT_FALSE(r.unit);
  ASSERT_TRUE(r.kernel_element.has_value());
  EXPECT_EQ(*r.kernel_element, u(2, 3, 0, rat(1, 3)));
  EXPECT_TRUE(endo_is_unit(mult_endo(1, 2, 3)).unit);
}

TEST(Nonlocal, Examples) {
  auto w = nonlocal_witness(2, 3);
  EXPECT_EQ(w.x, -2);
  EXPECT_EQ(w.y, 3);
  EXPECT_TRUE(w.sum_is_identity);
  EXPECT_EQ(w.sum_checks, 10u);
  w = nonlocal_witness(3, 5);
  EXPECT_EQ(w.x, 6);
  EXPECT_EQ(w.y, -5);
}

TEST(Nonlocal, AlwaysTwoNonUnitsSummingToOne) {
  std::vector<long> primes{2, 3, 5, 7, 11, 13, 17, 19, 23};
  for (long p : primes)
    for (long q : primes) {
      if (p == q) continue;
      auto w = nonlocal_witness(p, q);
      EXPECT_EQ(w.x + w.y, 1);
      EXPECT_TRUE(mpz_divisible_ui_p(w.x.get_num().get_mpz_t(), p));
      EXPECT_TRUE(mpz_divisible_ui_p(w.y.get_num().get_mpz_t(), q));
      EXPECT_FALSE(w.x_report.unit);
      EXPECT_FALSE(w.y_report.unit);
      for (const auto* r : {&w.x_report, &w.y_report})
        for (const Certificate& c : r->certificates) EXPECT_TRUE(c.holds);
      EXPECT_TRUE(w.sum_is_identity);
    }
}

TEST(Membership, GeneratedSubmodules) {
  const long p = 2, q = 3;
  UElement e = UElement::generator(p, q);
  GeneratedSubmodule pe({u(p, q, 2, 0)}, p, q);
  EXPECT_EQ(pe.contains(e).status, Membership::Status::NotMember);
  EXPECT_EQ(pe.contains(u(p, q, rat(4, 5), rat(1, 27))).status, Membership::Status::Member);
  GeneratedSubmodule w1({u(p, q, 0, rat(1, 3))}, p, q);
  EXPECT_EQ(w1.contains(u(p, q, 0, rat(2, 3))).status, Membership::Status::Member);
  EXPECT_EQ(w1.contains(u(p, q, 0, rat(1, 9))).status, Membership::Status::NotMember);
  EXPECT_EQ(w1.contains(e).status, Membership::Status::NotMember);
  GeneratedSubmodule zero({}, p, q);
  EXPECT_EQ(zero.contains(UElement::zero(p, q)).status, Membership::Status::Member);
  EXPECT_EQ(zero.contains(e).status, Membership::Status::NotMember);
}

TEST(Membership, ProductsAreMembersWithWitness) {
  auto us = sample_elements(2, 3);
  auto rs = sample_ring_elements(2, 3);
  for (std::size_t i = 0; i < us.size(); ++i) {
    GeneratedSubmodule s({us[i], us[(i + 3) % us.size()]}, 2, 3);
    for (std::size_t j = 0; j < 8; ++j) {
      UElement v = u_action(us[i], rs[(i + j) % rs.size()]);
      Membership m = s.contains(v);
      ASSERT_EQ(m.status, Membership::Status::Member) << to_string(v);
      EXPECT_EQ(u_action(s.generators()[m.generator], *m.witness), v);
    }
  }
}

TEST(Membership, AnnihilatorGeneratorsKill) {
  for (const UElement& g : sample_elements(2, 3))
    for (const RElement& r : annihilator_generators(g)) EXPECT_TRUE(u_action(g, r).is_zero()) << to_string(g);
}

TEST(CaseI, DesignatedInputsPass) {
  for (BigRational x : {BigRational(1), rat(3, 5), rat(7, 5)}) {
    ExactReport r = verify_example_case_i(x, 2, 3);
    EXPECT_TRUE(r.passed) << x;
    EXPECT_TRUE(r.unresolved.empty());
    EXPECT_EQ(r.samples, 32u);
  }
  ExactReport zero_x = verify_example_case_i(1, 2, 3, std::vector<UElement>{});
  EXPECT_TRUE(zero_x.passed);
  EXPECT_TRUE(verify_example_case_i(rat(3, 5), 2, 3, std::vector<UElement>{}).passed);
  EXPECT_EQ(kind_of([] { verify_example_case_i(rat(4, 3), 2, 3); }), ErrorKind::WrongBranch);
}

TEST(CaseII, DesignatedInputsPass) {
  for (BigRational x : {rat(4, 3), rat(10, 9), rat(8, 3)}) {
    ExactReport r = verify_example_case_ii(x, 2, 3);
    EXPECT_TRUE(r.passed) << x;
    EXPECT_TRUE(r.unresolved.empty());
    for (const Certificate& c : r.certificates) EXPECT_TRUE(c.holds) << c.name << ": " << c.detail;
  }
  EXPECT_EQ(kind_of([] { verify_example_case_ii(rat(3, 5), 2, 3); }), ErrorKind::WrongBranch);
  // With X = 0 the map f(ē) = xē is not well defined.
  EXPECT_EQ(kind_of([] { verify_example_case_ii(rat(4, 3), 2, 3, std::vector<UElement>{}); }),
            ErrorKind::NotWellDefined);
}

TEST(CaseII, OtherPrimes) {
  EXPECT_TRUE(verify_example_case_ii(rat(9, 5), 3, 5).passed);
  EXPECT_TRUE(verify_example_case_i(rat(2, 7), 3, 5).passed);
}

TEST(GraphLemma, ExactInstance) {
  ExactReport r = graph_lemma_exact(rat(4, 3), 2, 3);
  EXPECT_TRUE(r.passed);
  EXPECT_TRUE(r.unresolved.empty());
  for (const Certificate& c : r.certificates) EXPECT_TRUE(c.holds) << c.name << ": " << c.detail;
  EXPECT_EQ(r.samples, 33u);
  EXPECT_TRUE(graph_lemma_exact(rat(10, 9), 2, 3).passed);
  EXPECT_EQ(kind_of([] { graph_lemma_exact(rat(1, 3), 2, 3); }), ErrorKind::WrongBranch);
}

TEST(FiepExact, Verdicts) {
  for (auto [p, q] : {std::pair{2L, 3L}, std::pair{3L, 5L}}) {
    FiepVerdict v = fiep_verdict_exact(p, q);
    EXPECT_TRUE(v.premise_verified);
    EXPECT_EQ(v.label, "CITED-IMPLICATION");
    EXPECT_FALSE(v.citation.empty());
    EXPECT_EQ(v.verdict, "U^2 does not satisfy the FIEP");
  }
}

TEST(Remark, Examples) {
  RemarkResult r = remark_z_checker(2, 3);
  EXPECT_FALSE(r.i_holds);
  EXPECT_FALSE(r.ii_holds);
  EXPECT_FALSE(r.i_certificate.empty());
  EXPECT_FALSE(r.ii_certificate.empty());
  r = remark_z_checker(2, 4);
  EXPECT_TRUE(r.i_holds);
  EXPECT_EQ(r.i_witness, 2);
  r = remark_z_checker(6, 3);
  EXPECT_TRUE(r.ii_holds);
  EXPECT_EQ(r.ii_witness, 2);
  EXPECT_EQ(kind_of([] { remark_z_checker(0, 3); }), ErrorKind::ZeroInput);
}

TEST(Remark, AgreesWithBruteForce) {
  for (long a = -20; a <= 20; ++a)
    for (long b = -20; b <= 20; ++b) {
      if (a == 0 || b == 0) continue;
      RemarkResult c = remark_z_checker(a, b), s = remark_z_bruteforce(a, b);
      EXPECT_EQ(c.i_holds, s.i_holds) << a << " " << b;
      EXPECT_EQ(c.ii_holds, s.ii_holds) << a << " " << b;
      EXPECT_EQ(c.i_witness, s.i_witness);
      EXPECT_EQ(c.ii_witness, s.ii_witness);
    }
}
