#include <gtest/gtest.h>

#include "kdef/errors.hpp"
#include "kdef/linalg.hpp"
#include "kdef/superpoly.hpp"

using namespace kdef;

namespace {

SuperPoly sp(const std::string& s) {
  static ContextPtr ctx = make_context({"l"});
  return SuperPoly::parse(s, ctx);
}

ContactGen gen(const std::string& s) { return ContactGen(sp(s)); }

}  // namespace

TEST(SuperPoly, EtaBar) {
  EXPECT_EQ(eta_bar(sp("th")), sp("1"));
  EXPECT_EQ(eta_bar(sp("x")), sp("-th"));
  EXPECT_EQ(eta_bar(eta_bar(sp("x^2"))), sp("-2*x"));
}

TEST(SuperPoly, EtaBarSquaredIsMinusDx) {
  for (int d = 0; d <= 8; ++d)
    for (int s = 0; s < 2; ++s) {
      SuperPoly m = SuperPoly::monomial(d, s);
      EXPECT_EQ(eta_bar(eta_bar(m)), -m.derivative());
      for (int k = 0; k <= 5; ++k) {
        SuperPoly direct = m;
        for (int i = 0; i < k; ++i) direct = eta_bar(direct);
        EXPECT_EQ(eta_bar_pow(m, k), direct);
      }
    }
}

TEST(SuperPoly, ParseAndPrint) {
  SuperPoly p = sp("3/2*x^2 + (l+1)*x*th");
  EXPECT_EQ(p.str(), "3/2*x^2 + (l + 1)*x*th");
  EXPECT_EQ(sp(p.str()), p);
  EXPECT_TRUE(sp("th*th").is_zero());
  EXPECT_EQ(sp("-x*th + 1").str(), "1 - x*th");
  EXPECT_THROW(sp("x/x"), ParseError);
}

TEST(ContactBracket, Examples) {
  EXPECT_EQ(contact_bracket(gen("1"), gen("x")).f(), sp("1"));
  EXPECT_EQ(contact_bracket(gen("th"), gen("th")).f(), sp("1/2"));
  EXPECT_EQ(contact_bracket(gen("x"), gen("th")).f(), sp("-th/2"));
  EXPECT_EQ(contact_bracket(gen("x^2"), gen("x")).f(), sp("-x^2"));
  EXPECT_THROW(gen("x + th"), NonHomogeneous);
}

TEST(ContactBracket, JacobiExamples) {
  EXPECT_TRUE(jacobi_check(gen("1"), gen("x"), gen("x^2")));
  EXPECT_TRUE(jacobi_check(gen("th"), gen("th"), gen("x")));
  EXPECT_TRUE(jacobi_check(gen("x^3"), gen("x^2*th"), gen("x*th")));
}

TEST(ContactBracket, JacobiExhaustive) {
  auto gens = monomial_generators(6);
  for (const auto& f : gens)
    for (const auto& g : gens)
      for (const auto& h : gens) ASSERT_TRUE(jacobi_check(f, g, h)) << f.str() << ", " << g.str() << ", " << h.str();
}

TEST(ContactBracket, ParityAdditive) {
  auto gens = monomial_generators(5);
  for (const auto& f : gens)
    for (const auto& g : gens) {
      ContactGen b = contact_bracket(f, g);
      if (!b.f().is_zero()) EXPECT_EQ(b.f().parity(), (f.parity() + g.parity()) % 2);
    }
}

TEST(Osp, EvenPartAndClosure) {
  auto osp = osp_generators();
  ASSERT_EQ(osp.size(), 5u);
  std::vector<std::string> even;
  for (const auto& g : osp)
    if (g.parity() == 0) even.push_back(g.str());
  EXPECT_EQ(even, (std::vector<std::string>{"1", "x", "x^2"}));
  // Coordinates in the basis {1, th, x, x th, x^2} of the span.
  auto coords = [](const SuperPoly& p) {
    return Vector{p.ev().coeff(0), p.od().coeff(0), p.ev().coeff(1), p.od().coeff(1), p.ev().coeff(2)};
  };
  for (const auto& a : osp)
    for (const auto& b : osp) {
      SuperPoly c = contact_bracket(a, b).f();
      EXPECT_LE(c.degree(), 2);
      EXPECT_TRUE(c.od().degree() <= 1);
      std::vector<Vector> rows;
      for (const auto& g : osp) rows.push_back(coords(g.f()));
      Matrix m = Matrix::from_rows(rows).transposed();
      EXPECT_TRUE(solve_linear(m, coords(c)).consistent);
    }
  EXPECT_EQ(contact_bracket(gen("th"), gen("th")).f(), sp("1/2"));
  SuperPoly xt = contact_bracket(gen("x^2"), gen("th")).f();
  EXPECT_TRUE(xt.is_odd());
  EXPECT_EQ(xt.od().degree(), 1);
}
