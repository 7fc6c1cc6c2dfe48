#include "kdef/scalar.hpp"

#include <ostream>
#include <stdexcept>

#include "kdef/errors.hpp"
#include "kdef/expr_parser.hpp"

namespace kdef {

// Minimal polynomials may carry rational coefficients, written as a division
// by an integer literal.
static MultiPoly operator/(const MultiPoly& a, const MultiPoly& b) {
  if (!b.is_constant() || b.is_zero())
    throw ParseError("polynomial literal divided by a non-constant");
  return a.scaled(1 / b.constant_value());
}

Context::Context(std::vector<std::string> generators)
    : generators_(std::move(generators)) {
  if (generators_.size() > static_cast<std::size_t>(kMaxGenerators))
    throw std::invalid_argument("too many generators");
}

Context::Context(std::string generator, MultiPoly minimal_polynomial)
    : generators_{std::move(generator)}, minpoly_(std::move(minimal_polynomial)) {
  if (minpoly_.variable_mask() != 1u || minpoly_.degree_in(0) < 2)
    throw std::invalid_argument("minimal polynomial must be univariate of degree >= 2");
}

int Context::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i] == name) return static_cast<int>(i);
  return -1;
}

bool Context::same_as(const Context& o) const {
  return generators_ == o.generators_ && minpoly_ == o.minpoly_;
}

ContextPtr make_context(std::vector<std::string> generators) {
  return std::make_shared<const Context>(std::move(generators));
}

ContextPtr make_algebraic_context(const std::string& generator,
                                  const std::string& minimal_polynomial) {
  MultiPoly w = MultiPoly::variable(0);
  ExprParser<MultiPoly> parser(minimal_polynomial, [&](const std::string& name) {
    if (name != generator) throw ParseError("unknown generator '" + name + "'");
    return w;
  });
  return std::make_shared<const Context>(generator, parser.parse());
}

ContextPtr Scalar::merge(const ContextPtr& a, const ContextPtr& b) {
  if (!a) return b;
  if (!b || a == b) return a;
  if (!a->same_as(*b)) throw ContextMismatch("scalars from different contexts");
  return a;
}

Scalar Scalar::generator(const ContextPtr& ctx, const std::string& name) {
  int g = ctx ? ctx->index_of(name) : -1;
  if (g < 0) throw UnknownName("unknown generator '" + name + "'");
  Scalar s;
  s.ctx_ = ctx;
  s.num_ = MultiPoly::variable(g);
  s.den_ = MultiPoly(Rational(1));
  s.normalize();
  return s;
}

Scalar Scalar::fraction(MultiPoly num, MultiPoly den, ContextPtr ctx) {
  Scalar s;
  s.num_ = std::move(num);
  s.den_ = std::move(den);
  s.ctx_ = std::move(ctx);
  s.normalize();
  return s;
}

Scalar Scalar::parse(const std::string& text, const ContextPtr& ctx) {
  ExprParser<Scalar> parser(text, [&](const std::string& name) {
    return Scalar::generator(ctx, name);
  });
  return parser.parse();
}

void Scalar::normalize() {
  if (den_.is_zero()) throw DivisionByZero();
  if (num_.is_zero()) {
    den_ = MultiPoly(Rational(1));
    return;
  }
  if (ctx_ && ctx_->algebraic()) {
    const MultiPoly& m = ctx_->minimal_polynomial();
    num_ = divide(num_, m).second;
    if (!den_.is_constant()) {
      den_ = divide(den_, m).second;
      if (den_.is_zero()) throw DivisionByZero();
      if (!den_.is_constant()) {
        num_ = divide(num_ * inverse_mod(den_, m, 0), m).second;
        den_ = MultiPoly(Rational(1));
      }
    }
  }
  if (den_.is_constant()) {
    Rational c = den_.constant_value();
    if (c != 1) num_ = num_.scaled(1 / c);
    den_ = MultiPoly(Rational(1));
    return;
  }
  MultiPoly g = gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = exact_divide(num_, g);
    den_ = exact_divide(den_, g);
  }
  Rational lc = den_.leading().coef;
  if (lc != 1) {
    Rational inv = 1 / lc;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
  if (den_.is_constant()) den_ = MultiPoly(Rational(1));
}

bool Scalar::is_one() const {
  return den_.is_constant() && num_.is_constant() && num_.constant_value() == 1;
}

Rational Scalar::to_rational() const {
  if (!is_rational()) throw std::domain_error("scalar is not a rational constant: " + str());
  return num_.constant_value() / den_.constant_value();
}

int Scalar::size_measure() const { return num_.total_degree() + den_.total_degree(); }

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  ctx_ = merge(ctx_, o.ctx_);
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ += o.num_;
    if (num_.is_zero()) den_ = MultiPoly(Rational(1));
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = Scalar();
  ctx_ = merge(ctx_, o.ctx_);
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ *= o.num_;
    if (ctx_ && ctx_->algebraic()) normalize();
    return *this;
  }
  MultiPoly g1 = gcd(num_, o.den_);
  MultiPoly g2 = gcd(o.num_, den_);
  MultiPoly a = g1.is_constant() ? num_ : exact_divide(num_, g1);
  MultiPoly d = g1.is_constant() ? o.den_ : exact_divide(o.den_, g1);
  MultiPoly c = g2.is_constant() ? o.num_ : exact_divide(o.num_, g2);
  MultiPoly b = g2.is_constant() ? den_ : exact_divide(den_, g2);
  num_ = a * c;
  den_ = b * d;
  normalize();
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  Scalar r;
  r.ctx_ = ctx_;
  r.num_ = den_;
  r.den_ = num_;
  r.normalize();
  return r;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
  return num_ == o.num_ && den_ == o.den_;
}

Scalar Scalar::pow(unsigned e) const {
  Scalar result(1), base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::string Scalar::str() const {
  static const std::vector<std::string> kNone;
  const auto& names = ctx_ ? ctx_->generators() : kNone;
  std::string n = num_.to_string(names);
  if (den_.is_constant()) return n;
  if (num_.terms().size() > 1) n = "(" + n + ")";
  return n + "/(" + den_.to_string(names) + ")";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::optional<std::uint64_t> rational_mod(const Rational& q, std::uint64_t p) {
  std::uint64_t d = mpz_fdiv_ui(q.get_den_mpz_t(), p);
  if (d == 0) return std::nullopt;
  std::uint64_t n = mpz_fdiv_ui(q.get_num_mpz_t(), p);
  return mulmod(n, powmod(d, p - 2, p), p);
}

std::optional<std::uint64_t> poly_mod(const MultiPoly& f, std::uint64_t p,
                                      const std::vector<std::uint64_t>& point) {
  std::uint64_t sum = 0;
  for (const auto& t : f.terms()) {
    auto c = rational_mod(t.coef, p);
    if (!c) return std::nullopt;
    std::uint64_t v = *c;
    for (int g = 0; g < kMaxGenerators; ++g) {
      int e = mono_exp(t.mono, g);
      if (e) v = mulmod(v, powmod(point.at(g), e, p), p);
    }
    sum = (sum + v) % p;
  }
  return sum;
}

}  // namespace

std::optional<std::uint64_t> Scalar::mod_image(std::uint64_t p,
                                               const std::vector<std::uint64_t>& point) const {
  if (ctx_ && ctx_->algebraic()) return std::nullopt;
  auto n = poly_mod(num_, p, point);
  auto d = poly_mod(den_, p, point);
  if (!n || !d || *d == 0) return std::nullopt;
  return mulmod(*n, powmod(*d, p - 2, p), p);
}

Scalar binomial_general(const Scalar& x, unsigned i) {
  Scalar r(1);
  for (unsigned j = 0; j < i; ++j) r *= (x - Scalar(static_cast<long>(j)));
  Rational fact(1);
  for (unsigned j = 2; j <= i; ++j) fact *= j;
  return r / Scalar(fact);
}

Scalar evaluate_at(const Scalar& e, const std::map<std::string, Rational>& bindings) {
  const ContextPtr& ctx = e.context();
  if (!ctx) return e;
  MultiPoly num = e.num(), den = e.den();
  for (const auto& [name, value] : bindings) {
    int g = ctx->index_of(name);
    if (g < 0) throw UnknownName("generator '" + name + "' not in context");
    if (ctx->algebraic())
      throw std::invalid_argument("cannot bind the algebraic generator '" + name + "'");
    num = num.substitute(g, MultiPoly(value));
    den = den.substitute(g, MultiPoly(value));
  }
  if (den.is_zero()) throw PoleAtPoint("denominator of " + e.str() + " vanishes at the binding");
  return Scalar::fraction(num, den, ctx);
}

namespace {

Scalar substitute_poly(const MultiPoly& f, int g, const Scalar& value, const ContextPtr& ctx) {
  std::map<int, std::vector<Term>> groups;
  for (const auto& t : f.terms()) {
    int e = mono_exp(t.mono, g);
    groups[e].push_back({t.mono - mono_var(g, e), t.coef});
  }
  Scalar result;
  for (auto& [e, terms] : groups) {
    Scalar coeff = Scalar::fraction(MultiPoly::from_terms(std::move(terms)),
                                    MultiPoly(Rational(1)), ctx);
    result += coeff * value.pow(static_cast<unsigned>(e));
  }
  return result;
}

}  // namespace

Scalar substitute(const Scalar& e, const std::string& generator, const Scalar& value) {
  const ContextPtr& ctx = e.context();
  int g = ctx ? ctx->index_of(generator) : -1;
  if (g < 0) return e;
  return substitute_poly(e.num(), g, value, ctx) / substitute_poly(e.den(), g, value, ctx);
}

}  // namespace kdef
