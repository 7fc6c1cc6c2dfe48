#ifndef KDEF_SCALAR_HPP
#define KDEF_SCALAR_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kdef/multipoly.hpp"

namespace kdef {

// Declared generators of a function field Q(g0, ..., gk), optionally with a
// single algebraic generator bound by a minimal polynomial.
class Context {
 public:
  explicit Context(std::vector<std::string> generators);
  Context(std::string generator, MultiPoly minimal_polynomial);

  const std::vector<std::string>& generators() const { return generators_; }
  int index_of(const std::string& name) const;
  bool algebraic() const { return !minpoly_.is_zero(); }
  const MultiPoly& minimal_polynomial() const { return minpoly_; }
  bool same_as(const Context& o) const;

 private:
  std::vector<std::string> generators_;
  MultiPoly minpoly_;
};

using ContextPtr = std::shared_ptr<const Context>;

ContextPtr make_context(std::vector<std::string> generators);
// Minimal polynomial given as text in the generator, e.g. "2*w^2+10*w+3".
ContextPtr make_algebraic_context(const std::string& generator,
                                  const std::string& minimal_polynomial);

// Element of the fraction field of a context, kept in canonical form:
// gcd(num, den) = 1 and den monic in lexicographic generator order. In an
// algebraic context den is 1 and num is reduced modulo the minimal polynomial.
// Constants carry no context and mix freely with any context.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : num_(Rational(v)), den_(Rational(1)) {}  // NOLINT
  Scalar(const Rational& v) : num_(v), den_(Rational(1)) {}  // NOLINT
  static Scalar generator(const ContextPtr& ctx, const std::string& name);
  static Scalar fraction(MultiPoly num, MultiPoly den, ContextPtr ctx);
  static Scalar parse(const std::string& text, const ContextPtr& ctx);

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }
  Rational to_rational() const;
  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  const ContextPtr& context() const { return ctx_; }
  // Total degree of numerator plus denominator; pivot-size heuristic.
  int size_measure() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  Scalar inverse() const;
  Scalar pow(unsigned e) const;

  std::string str() const;

  // Image under Q -> F_p with generators sent to the given residues; empty
  // when a denominator vanishes mod p. Not available in algebraic contexts.
  std::optional<std::uint64_t> mod_image(std::uint64_t p,
                                         const std::vector<std::uint64_t>& point) const;

 private:
  void normalize();
  static ContextPtr merge(const ContextPtr& a, const ContextPtr& b);

  MultiPoly num_;
  MultiPoly den_{Rational(1)};
  ContextPtr ctx_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// x(x-1)...(x-i+1)/i!, with i = 0 giving 1.
Scalar binomial_general(const Scalar& x, unsigned i);

// Substitutes rational values for some generators; throws PoleAtPoint when
// the denominator vanishes.
Scalar evaluate_at(const Scalar& e, const std::map<std::string, Rational>& bindings);

// Replaces a generator by another Scalar of the same context.
Scalar substitute(const Scalar& e, const std::string& generator, const Scalar& value);

// Half-integer literal n/2 as a Scalar.
inline Scalar half(long n) { return Scalar(rat(n, 2)); }

}  // namespace kdef

#endif  // KDEF_SCALAR_HPP
