#include <gtest/gtest.h>

#include <algorithm>

#include "kdef/deformation.hpp"
#include "kdef/errors.hpp"
#include "kdef/reference.hpp"

using namespace kdef;

namespace {

ParamName P(const std::string& s) { return ParamName::parse(s); }
SuperParamPoly V(const std::string& s) { return SuperParamPoly::variable(P(s)); }

MaurerCartan& engine(int n2) {
  static std::map<int, std::unique_ptr<MaurerCartan>> cache;
  auto& e = cache[n2];
  if (!e) e = std::make_unique<MaurerCartan>(SymbolSpace::generic(n2));
  return *e;
}

ConditionIdeal ideal_of(const std::vector<Condition>& conds) {
  ConditionIdeal id;
  for (const auto& c : conds) id.add(c.poly);
  return id;
}

std::vector<Condition> engine_conditions(MaurerCartan& e, int order) {
  e.solve_to(order);
  std::vector<Condition> out;
  for (const auto& c : e.conditions())
    if (c.order == order) out.push_back(c);
  return out;
}

std::map<ParamName, Scalar> kill(const std::vector<ParamName>& ps) {
  std::map<ParamName, Scalar> a;
  for (const auto& p : ps) a[p] = Scalar(0);
  return a;
}

}  // namespace

TEST(ParamName, RoundTrip) {
  for (const auto& p : parameters(SymbolSpace::generic(12))) EXPECT_EQ(ParamName::parse(p.str()), p);
  EXPECT_EQ(P("t[l+1/2,l+3]").src2, 1);
  EXPECT_EQ(P("t[l+1/2,l+3]").dst2, 6);
  EXPECT_EQ(P("t[l,l+3/2]").parity(), 1);
  EXPECT_EQ(P("t[l,l+2]").parity(), 0);
  EXPECT_THROW(P("t[l,l+3/2"), ParseError);
  EXPECT_THROW(P("s[l,l+2]"), ParseError);
  EXPECT_THROW(P("t[l+2,l]"), ParseError);
}

TEST(SuperParamPoly, SupercommutativityExhaustive) {
  for (int n2 : {5, 8, 10, 11}) {
    auto ps = parameters(SymbolSpace::generic(n2));
    for (const auto& p : ps)
      for (const auto& q : ps) {
        SuperParamPoly a = SuperParamPoly::variable(p), b = SuperParamPoly::variable(q);
        int s = (p.parity() && q.parity()) ? -1 : 1;
        EXPECT_EQ(a * b, (b * a).scaled(Scalar(s))) << p.str() << " " << q.str();
      }
    for (const auto& p : ps)
      if (p.parity()) EXPECT_TRUE((SuperParamPoly::variable(p) * SuperParamPoly::variable(p)).is_zero());
  }
}

TEST(SuperParamPoly, OddSubstitutionOnlyToZero) {
  SuperParamPoly f = V("t[l,l+3/2]") * V("t[l+3/2,l+7/2]") + V("t[l,l+2]");
  EXPECT_EQ(f.substituted({{P("t[l,l+3/2]"), Scalar(0)}}), V("t[l,l+2]"));
  EXPECT_THROW(f.substituted({{P("t[l,l+3/2]"), Scalar(1)}}), std::invalid_argument);
  EXPECT_THROW((V("t[l,l+2]") + V("t[l,l+3/2]")).parity(), NonHomogeneous);
}

TEST(ConditionIdeal, Membership) {
  SuperParamPoly a = V("t[l,l+2]"), b = V("t[l+2,l+4]"), c = V("t[l+4,l+6]");
  ConditionIdeal id({a * b, a * c - b * c});
  EXPECT_TRUE(id.contains(a * b * c));
  EXPECT_TRUE(id.contains((a * c - b * c) * a));
  EXPECT_TRUE(id.contains(b * c * c + a * b - a * c * c));
  EXPECT_FALSE(id.contains(a * c));
  EXPECT_FALSE(id.contains(b));
  EXPECT_TRUE(id.annihilated_by({{P("t[l+4,l+6]"), Scalar(0)}, {P("t[l,l+2]"), Scalar(0)}}));
  EXPECT_FALSE(id.annihilated_by({{P("t[l+4,l+6]"), Scalar(0)}}));
}

TEST(Parameters, CountIsThreeTimesTwiceNMinusNine) {
  for (int n2 = 4; n2 <= 16; ++n2) {
    auto ps = parameters(SymbolSpace::generic(n2));
    EXPECT_EQ(static_cast<int>(ps.size()), 3 * n2 - 9) << n2;
    for (const auto& p : ps) {
      EXPECT_GE(p.shift2(), 3);
      EXPECT_LE(p.shift2(), 5);
      EXPECT_LE(p.dst2, n2);
    }
  }
  EXPECT_EQ(parameters(SymbolSpace::generic(3)).size(), 1u);
  EXPECT_TRUE(parameters(SymbolSpace::generic(2)).empty());
}

TEST(Engine, InfinitesimalTermNamesOperators) {
  DefTerm t = build_infinitesimal(SymbolSpace::generic(5));
  ASSERT_EQ(t.entries.size(), 6u);
  EXPECT_EQ(t.entries.front().op, "U[l,l+3/2]");
  EXPECT_EQ(pair_op_name(1, 9), "J[11/2;-1,l+1/2]");
}

TEST(Engine, OrderTwoRightHandSide) {
  MaurerCartan e(SymbolSpace::generic(10));
  e.solve_to(1);
  std::vector<RhsEntry> at10;
  for (const auto& r : e.rhs(2))
    if (r.src2 == 0 && r.dst2 == 10) at10.push_back(r);
  ASSERT_EQ(at10.size(), 1u);
  EXPECT_EQ(at10[0].mid2, 5);
  EXPECT_EQ(at10[0].coeff, V("t[l+5/2,l+5]") * V("t[l,l+5/2]"));
}

TEST(Engine, OrderTwoConditionsMatchReference) {
  for (int n2 : {10, 11, 12}) {
    auto got = engine_conditions(engine(n2), 2);
    auto ref = reference_conditions(2, n2);
    ASSERT_EQ(got.size(), ref.size()) << n2;
    ConditionIdeal gi = ideal_of(got), ri = ideal_of(ref);
    for (const auto& c : ref) EXPECT_TRUE(gi.contains(c.poly)) << c.poly.str();
    for (const auto& c : got) EXPECT_TRUE(ri.contains(c.poly)) << c.poly.str();
  }
}

TEST(Engine, NoConditionsBelowFive) {
  for (int n2 = 2; n2 <= 9; ++n2) EXPECT_TRUE(integrability_ideal(SymbolSpace::generic(n2)).empty()) << n2;
}

TEST(Engine, OrderTwoSolutionCoefficient) {
  MaurerCartan& e = engine(10);
  e.solve_to(2);
  // J_4 on F_l -> F_{l+3} is paired with t[l,l+3/2] t[l+3/2,l+3] over zeta.
  Scalar l = e.space().lowest;
  EXPECT_EQ(e.coeff(2, 0, 6), (V("t[l,l+3/2]") * V("t[l+3/2,l+3]")).scaled(zeta_const(l).inverse()));
}

TEST(Engine, OrderThreeAtFive) {
  auto got = engine_conditions(engine(10), 3);
  ASSERT_EQ(got.size(), 1u);
  EXPECT_EQ(got[0].src2, 0);
  EXPECT_EQ(got[0].dst2, 10);
  EXPECT_EQ(got[0].poly.coeff({P("t[l,l+2]"), P("t[l+2,l+7/2]"), P("t[l+7/2,l+5]")}), Scalar(1));
  EXPECT_EQ(got[0].poly.degree(), 3);
  EXPECT_EQ(got[0].poly.terms().size(), 3u);
}

TEST(Engine, OrderThreeIdealIsInsidePrintedIdeal) {
  for (int n2 : {10, 11, 12}) {
    MaurerCartan& e = engine(n2);
    e.solve_to(3);
    ConditionIdeal ri;
    for (int m = 2; m <= 3; ++m)
      for (const auto& c : reference_conditions(m, n2)) ri.add(c.poly);
    for (const auto& c : e.conditions()) EXPECT_TRUE(ri.contains(c.poly)) << n2 << " " << c.poly.str();
  }
}

TEST(Engine, PrintedOrderThreeListIsLargerThanEngineIdeal) {
  MaurerCartan& e = engine(10);
  e.solve_to(3);
  auto ref = reference_conditions(3, 10);
  ASSERT_EQ(ref.size(), 3u);
  int contained = 0;
  for (const auto& c : ref) contained += e.ideal().contains(c.poly);
  EXPECT_EQ(contained, 0);
  // The two printed t[l,l+3/2] conditions differ by sign only.
  EXPECT_TRUE((ref[0].poly + ref[1].poly).is_zero());
}

TEST(Reference, EpsilonRelation) {
  Scalar l = SymbolSpace::generic(0).lowest;
  EXPECT_EQ(eps_const(1, l) - eps_const(2, l), Scalar(1));
  EXPECT_EQ(reference_block(3, 12), "3c");
  EXPECT_EQ(reference_block(5, 21), "5c");
  EXPECT_THROW(eps_const(18, l), std::invalid_argument);
}

TEST(Reference, ListSizesAtTwentyOneHalves) {
  std::vector<std::size_t> sizes;
  for (int m = 2; m <= 5; ++m) sizes.push_back(reference_conditions(m, 21).size());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{12, 3 * 12 + 5 * 11 + 5 * 10 + 3 * 9 + 2 * 8,
                                             1 * 10 + 3 * 9 + 6 * 8 + 6 * 7 + 4 * 6 + 4 * 5 + 1 * 4,
                                             1 * 3 + 2 * 2 + 3 * 1}));
}

TEST(Enumerate, SmallSpacesAreFree) {
  SymbolSpace s = SymbolSpace::generic(4);
  auto fams = enumerate_maximal(integrability_ideal(s), parameters(s));
  ASSERT_EQ(fams.size(), 1u);
  EXPECT_TRUE(fams[0].killed.empty());
  EXPECT_EQ(fams[0].free_parameters, 3);
}

TEST(Enumerate, FiveAndElevenHalves) {
  struct Case {
    int n2;
    std::size_t families;
    int free;
  };
  for (Case c : {Case{10, 10, 18}, Case{11, 4, 19}}) {
    MaurerCartan& e = engine(c.n2);
    e.solve_to(5);
    auto fams = enumerate_maximal(e.ideal(), e.params());
    EXPECT_EQ(fams.size(), c.families) << c.n2;
    for (const auto& f : fams) EXPECT_EQ(f.free_parameters, c.free) << c.n2;
    ConditionIdeal ri;
    for (int m = 2; m <= 5; ++m)
      for (const auto& r : reference_conditions(m, c.n2)) ri.add(r.poly);
    auto rf = enumerate_maximal(ri, e.params());
    EXPECT_EQ(rf.size(), c.families) << c.n2;
  }
}

TEST(Enumerate, FamiliesAnnihilateIdeal) {
  MaurerCartan& e = engine(11);
  e.solve_to(5);
  for (const auto& f : enumerate_maximal(e.ideal(), e.params())) EXPECT_TRUE(e.ideal().annihilated_by(kill(f.killed)));
}

TEST(Homomorphism, ZeroAssignment) {
  MaurerCartan& e = engine(10);
  EXPECT_TRUE(verify_formal_deformation(e, kill(e.params()), 8).holds);
}

TEST(Homomorphism, MaximalFamilyToDegreeEight) {
  MaurerCartan& e = engine(10);
  e.solve_to(5);
  auto fams = enumerate_maximal(e.ideal(), e.params());
  ASSERT_FALSE(fams.empty());
  HomomorphismCheck r = verify_formal_deformation(e, kill(fams.back().killed), 8);
  EXPECT_TRUE(r.holds) << r.witness;
  EXPECT_GT(r.points, 1000u);
}

TEST(Homomorphism, OrderTwoViolationHasWitness) {
  MaurerCartan& e = engine(10);
  auto a = kill({P("t[l,l+3/2]"), P("t[l+7/2,l+5]")});
  EXPECT_THROW(verify_formal_deformation(e, a, 8), IdealViolation);
  HomomorphismCheck r = verify_formal_deformation(e, a, 2, false);
  EXPECT_FALSE(r.holds);
  EXPECT_NE(r.witness.find("t[l,l+5/2]*t[l+5/2,l+5]"), std::string::npos) << r.witness;
}

TEST(Homomorphism, OrderThreeViolationHasWitness) {
  MaurerCartan& e = engine(10);
  auto a = kill({P("t[l+5/2,l+5]")});
  HomomorphismCheck r = verify_formal_deformation(e, a, 3, false);
  EXPECT_FALSE(r.holds);
  EXPECT_TRUE(verify_formal_deformation(e, a, 2, false).holds);
}

TEST(Stability, BumpedGridKeepsConditions) {
  for (int n2 : {10, 11}) {
    MaurerCartan bumped(SymbolSpace::generic(n2), EngineOptions{2});
    bumped.solve_to(4);
    MaurerCartan& e = engine(n2);
    e.solve_to(4);
    ASSERT_EQ(bumped.conditions().size(), e.conditions().size());
    for (std::size_t i = 0; i < e.conditions().size(); ++i)
      EXPECT_EQ(bumped.conditions()[i].poly, e.conditions()[i].poly);
  }
}
