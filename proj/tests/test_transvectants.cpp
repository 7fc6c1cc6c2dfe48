#include <gtest/gtest.h>

#include "kdef/errors.hpp"
#include "kdef/transvectants.hpp"

using namespace kdef;

namespace {

ContextPtr ctx() {
  static ContextPtr c = make_context({"t", "l"});
  return c;
}
Scalar tau() { return Scalar::generator(ctx(), "t"); }
Scalar lam() { return Scalar::generator(ctx(), "l"); }
SuperPoly mono(int d, int s) { return SuperPoly::monomial(d, s); }

// Index of the first half-integer >= 0 at which the chain of the recurrence
// breaks, used as an independent count of the singular solution space.
int expected_singular_dim(int k, const Rational& tau, const Rational& lambda) {
  auto resonant = [&](const Rational& w, int& v) {
    Rational m = -2 * w;
    if (m.get_den() != 1 || m < 0 || m > k - 1) return false;
    v = static_cast<int>(m.get_num().get_si());
    return true;
  };
  int t = 0, s = 0;
  bool rt = resonant(tau, t), rs = resonant(lambda, s);
  return rt && rs && t > k - s - 2 ? 2 : 1;
}

}  // namespace

TEST(Gamma, Examples) {
  EXPECT_EQ(gamma_coeff(0, 0, rat(3), tau(), lam()), Scalar(1));
  EXPECT_EQ(gamma_coeff(1, 1, rat(1), tau(), lam()), -(2 * tau() + 1) * (2 * lam() + 1));
  EXPECT_EQ(gamma_coeff(2, 0, rat(1), tau(), lam()), binomial_general(2 * lam() + 1, 2));
  EXPECT_EQ(gamma_coeff(2, 0, rat(1), tau(), lam()), (2 * lam() + 1) * (2 * lam()) / 2);
  EXPECT_EQ(integer_part(rat(5, 2)), 2);
  EXPECT_EQ(integer_part(rat(-1)), -1);
}

TEST(Transvectant, LowOrders) {
  ClassicalBilin j0 = transvectant(0, tau(), lam());
  ASSERT_EQ(j0.c.size(), 1u);
  EXPECT_EQ(j0.c[0], Scalar(1));
  ClassicalBilin j1 = transvectant(1, tau(), lam());
  EXPECT_EQ(j1.coeff(1), 2 * lam());
  EXPECT_EQ(j1.coeff(0), -2 * tau());
  EXPECT_EQ(j1.dst, tau() + lam() + 1);
}

TEST(Transvectant, RecurrenceAndInvariance) {
  for (int k = 0; k <= 6; ++k) {
    ClassicalBilin j = transvectant(k, tau(), lam());
    EXPECT_TRUE(satisfies_recurrence(j)) << "k = " << k;
    EXPECT_TRUE(check_sl2_invariance(j, k + 3)) << "k = " << k;
  }
  ClassicalBilin bad = transvectant(2, tau(), lam());
  bad.c[0] += Scalar(1);
  EXPECT_FALSE(satisfies_recurrence(bad));
  EXPECT_FALSE(check_sl2_invariance(bad, 5));
}

TEST(Transvectant, SingularExamples) {
  auto two = transvectant_singular(2, rat(-1, 2), rat(-1, 2));
  EXPECT_EQ(two.size(), 2u);
  // phi psi'' lies in the span: it must not raise the rank.
  std::vector<Vector> rows;
  for (const auto& b : two) rows.push_back(b.c);
  std::size_t r = rank(Matrix::from_rows(rows));
  rows.push_back({Scalar(1), Scalar(), Scalar()});
  EXPECT_EQ(rank(Matrix::from_rows(rows)), r);

  auto i3 = transvectant_singular(3, rat(-1), rat(0));
  rows.clear();
  for (const auto& b : i3) rows.push_back(b.c);
  r = rank(Matrix::from_rows(rows));
  rows.push_back({Scalar(1), Scalar(3), Scalar(3), Scalar()});
  EXPECT_EQ(rank(Matrix::from_rows(rows)), r);

  EXPECT_EQ(transvectant_singular(4, rat(-1), rat(1, 3)).size(), 1u);
}

TEST(Transvectant, SingularDimensionSweep) {
  int samples = 0, two_dim = 0;
  for (int k = 2; k <= 6 && samples < 20; ++k)
    for (int t = 0; t <= k - 1 && samples < 20; t += 1)
      for (int s = 0; s <= k - 1 && samples < 20; s += 2) {
        Rational tw = rat(-t, 2), lw = rat(-s, 2);
        auto space = transvectant_singular(k, tw, lw);
        int expected = expected_singular_dim(k, tw, lw);
        EXPECT_EQ(static_cast<int>(space.size()), expected) << "k=" << k << " t=" << t << " s=" << s;
        for (const auto& b : space) {
          EXPECT_TRUE(satisfies_recurrence(b));
          EXPECT_TRUE(check_sl2_invariance(b, k + 2));
        }
        two_dim += expected == 2;
        ++samples;
      }
  EXPECT_EQ(samples, 20);
  EXPECT_GT(two_dim, 3);
  EXPECT_LT(two_dim, 20);
}

TEST(Transvectant, VanishingFilter) {
  auto space = transvectant_singular(3, rat(-1), rat(0));
  auto affine = vanishing_subspace(space, 1);
  for (const auto& b : affine) {
    EXPECT_TRUE(b.coeff(0).is_zero());
    EXPECT_TRUE(b.coeff(1).is_zero());
  }
}

TEST(Supertransvectant, HalfAndOne) {
  BilinOp j12 = supertransvectant(rat(1, 2), tau(), lam());
  BilinOp j1 = supertransvectant(rat(1), tau(), lam());
  EXPECT_EQ(j12.parity(), 1);
  EXPECT_EQ(j1.parity(), 0);
  for (int d1 = 0; d1 <= 3; ++d1)
    for (int s1 = 0; s1 < 2; ++s1)
      for (int d2 = 0; d2 <= 3; ++d2)
        for (int s2 = 0; s2 < 2; ++s2) {
          SuperPoly f = mono(d1, s1), g = mono(d2, s2);
          SuperPoly e12 = (f * eta_bar(g)).scaled(2 * tau() * Scalar(sign(s1))) - (eta_bar(f) * g).scaled(2 * lam());
          EXPECT_EQ(j12.apply(f, g), e12);
          SuperPoly e1 = (eta_bar(f) * eta_bar(g)).scaled(Scalar(sign(s1))) -
                         (f.derivative() * g).scaled(2 * lam()) + (f * g.derivative()).scaled(2 * tau());
          EXPECT_EQ(j1.apply(f, g), e1);
        }
}

TEST(Supertransvectant, ZeroIsProduct) {
  BilinOp j0 = supertransvectant(rat(0), tau(), lam());
  EXPECT_EQ(j0.apply(mono(2, 1), mono(1, 0)), mono(2, 1) * mono(1, 0));
  EXPECT_TRUE(check_invariance(j0));
}

TEST(Supertransvectant, InvarianceUpTo13Halves) {
  for (int twice = 0; twice <= 13; ++twice) {
    std::string witness;
    EXPECT_TRUE(check_invariance(supertransvectant(rat(twice, 2), tau(), lam()), &witness))
        << "k = " << twice << "/2: " << witness;
  }
}

TEST(Supertransvectant, NonInvariantOperator) {
  BilinOp b(tau(), lam(), tau() + lam() + half(1), 1);
  b.add(Scalar(1), Scalar(), 1, 0);
  std::string witness;
  EXPECT_FALSE(check_invariance(b, &witness));
  EXPECT_FALSE(witness.empty());
}

TEST(Supertransvectant, RestrictsToClassicalA) {
  Scalar l = lam();
  BilinOp j = supertransvectant(rat(5, 2), Scalar(-1), l);
  ClassicalBilin a = classical_cocycle("A[l,l+2]", l);
  // Only the i = 2, j = 0 summand survives on even arguments.
  Scalar c = 2 * l * (l + 1) * (2 * l + 1);
  for (int dg = 0; dg <= 5; ++dg)
    for (int df = 0; df <= 4; ++df) {
      SuperPoly r = j.apply(mono(dg, 0), mono(df, 0));
      EXPECT_TRUE(r.ev().is_zero());
      XPoly expect = a.apply(XPoly::monomial(dg), XPoly::monomial(df));
      EXPECT_EQ(r.od(), expect.scaled(c)) << "G = x^" << dg << ", F = x^" << df;
    }
}

TEST(Supertransvectant, RestrictionConstants) {
  for (int twice = 0; twice <= 9; ++twice) {
    Rational k = rat(twice, 2);
    RestrictionComponents rc = restriction_components(supertransvectant(k, tau(), lam()));
    const Scalar* c = rc.constants;
    if (twice % 2 == 0) {
      EXPECT_TRUE(rc.integer);
      EXPECT_FALSE(c[0].is_zero());
      EXPECT_EQ(c[2], c[0]) << "k = " << k;
      EXPECT_EQ(c[3], c[0]) << "k = " << k;
      if (twice > 0) EXPECT_EQ(c[1], c[0]) << "k = " << k;
    } else {
      EXPECT_FALSE(rc.integer);
      // The relations hold with the order read as [k] + 1.
      Scalar ks(static_cast<long>(integer_part(k) + 1)), d = 2 * tau() + ks - 1;
      EXPECT_FALSE(c[0].is_zero());
      EXPECT_EQ(c[1], -(2 * lam() + ks - 1) / d * c[0]) << "k = " << k;
      EXPECT_EQ(c[2], ks / d * c[0]) << "k = " << k;
      EXPECT_EQ(c[3], -(1 + 2 * lam() / d) * c[0]) << "k = " << k;
    }
  }
}

TEST(Supertransvectant, UniquenessUpToFour) {
  for (int twice = 0; twice <= 8; ++twice) {
    Rational k = rat(twice, 2);
    auto space = invariant_space(k, tau(), lam());
    ASSERT_EQ(space.size(), 1u) << "k = " << k;
    EXPECT_TRUE(proportionality(space[0], supertransvectant(k, tau(), lam())).has_value()) << "k = " << k;
  }
}

TEST(ClassicalCatalog, Bodies) {
  ClassicalBilin c = classical_cocycle("C[l,l+2]", lam());
  EXPECT_EQ(c.apply(XPoly::monomial(3), XPoly::monomial(1)), XPoly::monomial(1, Scalar(18)));
  ClassicalBilin a = classical_cocycle("A[l,l+2]", lam());
  EXPECT_TRUE(classical_vanishes_on_sl2(a));
  EXPECT_FALSE(classical_vanishes_on_sl2(c));
  EXPECT_THROW(classical_cocycle("C[l,l+9]", lam()), UnknownName);
  EXPECT_THROW(classical_cocycle("C[a,a+6]", lam()), UnknownName);
}

TEST(ClassicalCatalog, GenericCocycles) {
  for (const auto& name : classical_cocycle_names()) {
    if (name.find("[a,") != std::string::npos) continue;
    ClassicalBilin c = classical_cocycle(name, lam());
    std::string witness;
    EXPECT_TRUE(classical_is_cocycle(c, c.order + 3, &witness)) << name << ": " << witness;
    if (name[0] == 'A') EXPECT_TRUE(classical_vanishes_on_sl2(c)) << name;
  }
}

TEST(ClassicalCatalog, AlgebraicCocycles) {
  ContextPtr k = make_algebraic_context("a", "2*a^2 + 10*a + 3");
  Scalar a = Scalar::generator(k, "a");
  ClassicalBilin c = classical_cocycle("C[a,a+6]", a);
  std::string witness;
  EXPECT_TRUE(classical_is_cocycle(c, 10, &witness)) << witness;
  EXPECT_TRUE(classical_vanishes_on_sl2(classical_cocycle("A[a,a+6]", a)));
}

TEST(ClassicalCatalog, PrintedSixthOrderSl2CocycleFails) {
  ContextPtr k = make_algebraic_context("a", "2*a^2 + 10*a + 3");
  Scalar a = Scalar::generator(k, "a");
  EXPECT_FALSE(classical_is_cocycle(classical_cocycle("A[a,a+6]", a), 10));
  auto space = classical_cocycle_space(a, a + 6, 7, true, 9);
  ASSERT_EQ(space.size(), 1u);
  ClassicalBilin s = space[0].scaled(Scalar(210) / space[0].coeff(3));
  const Scalar expected[] = {Scalar(210), -420 * a - 630, -630 * a, -630 * a - 210, -210 * a - Scalar(rat(135, 2))};
  for (int i = 3; i <= 7; ++i) EXPECT_EQ(s.coeff(i), expected[i - 3]) << "i = " << i;
  EXPECT_TRUE(classical_is_cocycle(s, 11));
}

TEST(ClassicalCatalog, CocycleSpaces) {
  // Homogeneous sl2-relative cocycles of shift 2 at generic weight: one class.
  EXPECT_EQ(classical_cocycle_space(lam(), lam() + 2, 3, true, 6).size(), 1u);
  EXPECT_EQ(classical_cocycle_space(lam(), lam() + 5, 6, true, 8).size(), 0u);
  EXPECT_EQ(classical_cocycle_space(Scalar(0), Scalar(5), 6, true, 8).size(), 1u);
}

TEST(ClassicalCatalog, NonCocycleDetected) {
  ClassicalBilin c = classical_cocycle("C[l,l+2]", lam());
  c.dst = lam() + 1;
  EXPECT_FALSE(classical_is_cocycle(c, 6));
}

TEST(SuperCatalog, Examples) {
  NamedCocycle u = super_cocycle("U[l,l+3/2]", lam());
  EXPECT_EQ(u.parity, 1);
  EXPECT_EQ(u.body.apply(mono(3, 0), mono(0, 0)), mono(0, 1).scaled(Scalar(-6)));
  for (const auto& x : osp_generators()) {
    for (int d = 0; d <= 3; ++d)
      for (int s = 0; s < 2; ++s) EXPECT_TRUE(u.body.apply(x.f(), mono(d, s)).is_zero());
  }
  NamedCocycle v = super_cocycle("U[l,l+2]", lam());
  for (int dg = 0; dg <= 4; ++dg)
    for (int sg = 0; sg < 2; ++sg)
      for (int df = 0; df <= 3; ++df)
        for (int sf = 0; sf < 2; ++sf) {
          SuperPoly g = mono(dg, sg), f = mono(df, sf);
          SuperPoly expect = (g.derivative(3) * f).scaled(Scalar(rat(2, 3)) * lam()) -
                             (eta_bar(g.derivative(2)) * eta_bar(f)).scaled(Scalar(sign(sg)));
          EXPECT_EQ(v.body.apply(g, f), expect);
        }
  EXPECT_EQ(super_cocycle(lam(), lam() + 2).name, "U[l,l+2]");
  EXPECT_EQ(super_cocycle(Scalar(0), half(1)).name, "U[0,1/2]");
  EXPECT_THROW(super_cocycle("U[l,l+3/2]", half(-1)), UnknownName);
  EXPECT_THROW(super_cocycle("U[l,l+3]", lam()), UnknownName);
  EXPECT_THROW(super_cocycle(lam(), lam() + 7), UnknownName);
}

TEST(SuperCatalog, ParityMatchesShift) {
  for (const auto& name : super_cocycle_names()) {
    Scalar l = lam();
    if (name == "U[l,l+3]") l = Scalar(0);
    if (name == "U[l,l+4]") continue;
    NamedCocycle c = super_cocycle(name, l);
    Rational shift = (c.dst - c.src).to_rational() * 2;
    EXPECT_EQ(c.parity, static_cast<int>(mpz_class(shift.get_num() % 2).get_si() != 0)) << name;
  }
}

TEST(SuperCatalog, ProportionalToSupertransvectants) {
  const std::pair<const char*, Rational> cases[] = {
      {"U[l,l+3/2]", rat(5, 2)}, {"U[l,l+2]", rat(3)}, {"U[l,l+5/2]", rat(7, 2)}};
  for (const auto& [name, k] : cases) {
    NamedCocycle u = super_cocycle(name, lam());
    auto c = proportionality(supertransvectant(k, Scalar(-1), lam()), u.body);
    ASSERT_TRUE(c.has_value()) << name;
    EXPECT_FALSE(c->is_zero()) << name;
  }
}

TEST(H1Table, Examples) {
  EXPECT_EQ(h1_dim_table(lam(), lam() + 2, H1Variant::KOsp), 1);
  EXPECT_EQ(h1_dim_table(Scalar(0), half(1), H1Variant::KPlain), 2);
  EXPECT_EQ(h1_dim_table(Scalar(rat(1, 3)), Scalar(rat(22, 3)), H1Variant::KPlain), 0);
  EXPECT_EQ(h1_dim_table(Scalar(0), Scalar(1), H1Variant::VectPlain), 2);
  EXPECT_EQ(h1_dim_table(Scalar(-4), Scalar(1), H1Variant::VectSl2), 1);
  EXPECT_EQ(h1_dim_table(half(-1), half(3), H1Variant::VectSl2), 0);
  EXPECT_EQ(h1_dim_table(half(-1), Scalar(1), H1Variant::KOsp), 0);
  EXPECT_EQ(h1_dim_table(Scalar(rat(-5, 2)), half(1), H1Variant::KOsp), 1);
}
