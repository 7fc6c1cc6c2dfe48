#include <gtest/gtest.h>

#include <random>

#include "kdef/errors.hpp"
#include "kdef/scalar.hpp"

using namespace kdef;

namespace {

ContextPtr lambda_ctx() { return make_context({"l"}); }

Scalar random_scalar(std::mt19937& rng, const ContextPtr& ctx) {
  std::uniform_int_distribution<int> coef(-4, 4), deg(0, 2);
  Scalar l = Scalar::generator(ctx, ctx->generators()[0]);
  Scalar t = ctx->generators().size() > 1 ? Scalar::generator(ctx, ctx->generators()[1]) : Scalar(1);
  auto poly = [&] {
    Scalar p;
    for (int i = 0, n = deg(rng) + 1; i < n; ++i)
      p += Scalar(static_cast<long>(coef(rng))) * l.pow(deg(rng)) * t.pow(deg(rng) % 2);
    return p;
  };
  Scalar den = poly();
  while (den.is_zero()) den = poly();
  return poly() / den;
}

}  // namespace

TEST(Scalar, RingLaw) {
  auto ctx = lambda_ctx();
  Scalar l = Scalar::generator(ctx, "l");
  EXPECT_EQ((l + 1) * (l - 1), l * l - 1);
  EXPECT_EQ(((l + 1) * (l - 1)).str(), "l^2 - 1");
}

TEST(Scalar, GcdCancellation) {
  auto ctx = lambda_ctx();
  Scalar l = Scalar::generator(ctx, "l");
  Scalar q = (l * l - 1) / (l - 1);
  EXPECT_TRUE(q.is_polynomial());
  EXPECT_EQ(q, l + 1);
}

TEST(Scalar, AlgebraicExtension) {
  auto ctx = make_algebraic_context("w", "w^2 - 19");
  Scalar w = Scalar::generator(ctx, "w");
  EXPECT_EQ((5 + w) * (5 - w), Scalar(6));
  Scalar inv = (w + 1).inverse();
  EXPECT_EQ(inv * (w + 1), Scalar(1));
  auto ctx2 = make_algebraic_context("a", "2*a^2 + 10*a + 3");
  Scalar a = Scalar::generator(ctx2, "a");
  EXPECT_TRUE((2 * a * a + 10 * a + 3).is_zero());
}

TEST(Scalar, DivisionByZero) {
  auto ctx = lambda_ctx();
  Scalar l = Scalar::generator(ctx, "l");
  EXPECT_THROW(l / Scalar(0), DivisionByZero);
  EXPECT_THROW(Scalar().inverse(), DivisionByZero);
}

TEST(Scalar, ContextMismatch) {
  Scalar a = Scalar::generator(make_context({"l"}), "l");
  Scalar b = Scalar::generator(make_context({"t"}), "t");
  EXPECT_THROW(a + b, ContextMismatch);
  Scalar c = Scalar::generator(make_context({"l"}), "l");
  EXPECT_EQ(a, c);
}

TEST(Scalar, Binomial) {
  auto ctx = lambda_ctx();
  Scalar l = Scalar::generator(ctx, "l");
  EXPECT_EQ(binomial_general(l, 0), Scalar(1));
  EXPECT_EQ(binomial_general(Scalar(3), 2), Scalar(3));
  EXPECT_EQ(binomial_general(2 * l + 3, 2), (2 * l + 3) * (l + 1));
}

TEST(Scalar, EvaluateAt) {
  auto ctx = lambda_ctx();
  Scalar l = Scalar::generator(ctx, "l");
  EXPECT_TRUE(evaluate_at(l * (l + 1), {{"l", rat(-1)}}).is_zero());
  EXPECT_THROW(evaluate_at(1 / (2 * l + 1), {{"l", rat(-1, 2)}}), PoleAtPoint);
  Scalar zeta = Scalar::parse("l*(l+1)*(2*l+3)*(2*l+5)/4", ctx);
  EXPECT_EQ(evaluate_at(zeta, {{"l", rat(1)}}), Scalar(rat(35, 2)));
}

TEST(Scalar, ParseAndPrintRoundTrip) {
  auto ctx = make_context({"t", "l"});
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    Scalar s = random_scalar(rng, ctx);
    EXPECT_EQ(Scalar::parse(s.str(), ctx), s) << s.str();
  }
  EXPECT_THROW(Scalar::parse("l +* 2", ctx), ParseError);
  EXPECT_THROW(Scalar::parse("q", ctx), UnknownName);
}

TEST(Scalar, FieldAxiomsRandomized) {
  auto ctx = make_context({"l", "t"});
  std::mt19937 rng(2024);
  for (int i = 0; i < 1000; ++i) {
    Scalar a = random_scalar(rng, ctx), b = random_scalar(rng, ctx), c = random_scalar(rng, ctx);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a - a, Scalar());
    if (!a.is_zero()) ASSERT_EQ(a * a.inverse(), Scalar(1));
  }
}

TEST(Scalar, EvaluationIsHomomorphism) {
  auto ctx = make_context({"l", "t"});
  std::mt19937 rng(99);
  std::map<std::string, Rational> at{{"l", rat(3, 7)}};
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    Scalar a = random_scalar(rng, ctx), b = random_scalar(rng, ctx);
    try {
      Scalar ea = evaluate_at(a, at), eb = evaluate_at(b, at);
      EXPECT_EQ(evaluate_at(a * b, at), ea * eb);
      EXPECT_EQ(evaluate_at(a + b, at), ea + eb);
      ++checked;
    } catch (const PoleAtPoint&) {
    }
  }
  EXPECT_GT(checked, 250);
}

TEST(Scalar, SubstituteGenerator) {
  auto ctx = lambda_ctx();
  Scalar l = Scalar::generator(ctx, "l");
  Scalar e = (l * l + 1) / (l - 2);
  EXPECT_EQ(substitute(e, "l", l + half(5)), ((l + half(5)).pow(2) + 1) / (l + half(1)));
}

TEST(Scalar, ModImage) {
  auto ctx = lambda_ctx();
  Scalar l = Scalar::generator(ctx, "l");
  const std::uint64_t p = (1ull << 61) - 1;
  auto img = ((l + 1) / 2).mod_image(p, {4, 0, 0, 0});
  ASSERT_TRUE(img.has_value());
  EXPECT_EQ(2 * *img % p, 5u);
  EXPECT_FALSE((1 / (l - 4)).mod_image(p, {4, 0, 0, 0}).has_value());
}
