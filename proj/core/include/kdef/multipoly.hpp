#ifndef KDEF_MULTIPOLY_HPP
#define KDEF_MULTIPOLY_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace kdef {

using Rational = mpq_class;

inline Rational rat(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

// Exponent vectors are packed into a single 64-bit word with 16 bits per
// generator; generator 0 occupies the most significant field, so comparing
// packed words compares exponent vectors lexicographically.
constexpr int kMaxGenerators = 4;
using Monomial = std::uint64_t;

inline int mono_exp(Monomial m, int g) {
  return static_cast<int>((m >> (16 * (kMaxGenerators - 1 - g))) & 0xffffu);
}
inline Monomial mono_var(int g, int e = 1) {
  return static_cast<Monomial>(e) << (16 * (kMaxGenerators - 1 - g));
}
int mono_total_degree(Monomial m);
bool mono_divides(Monomial a, Monomial b);
std::uint32_t mono_mask(Monomial m);

struct Term {
  Monomial mono;
  Rational coef;
};

// Sparse polynomial over Q in at most kMaxGenerators anonymous generators.
// Terms are kept sorted by strictly decreasing monomial with no zero
// coefficients, so structural equality is polynomial equality.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(const Rational& c);
  explicit MultiPoly(long c) : MultiPoly(Rational(c)) {}
  static MultiPoly variable(int g);
  static MultiPoly monomial(Monomial m, const Rational& c);
  static MultiPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }
  int total_degree() const;
  int degree_in(int g) const;
  std::uint32_t variable_mask() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly scaled(const Rational& c) const;
  MultiPoly times_monomial(Monomial m, const Rational& c) const;

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  // Evaluates at the given rational point (one value per generator slot).
  Rational evaluate(const std::vector<Rational>& point) const;
  // Replaces generator g by the polynomial v.
  MultiPoly substitute(int g, const MultiPoly& v) const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::vector<Term> terms_;
};

// Quotient and remainder of lexicographic division by a single divisor.
std::pair<MultiPoly, MultiPoly> divide(const MultiPoly& a, const MultiPoly& b);
// Exact quotient; throws std::domain_error when b does not divide a.
MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b);
// Scales so that the lexicographically leading coefficient is 1.
MultiPoly make_monic(const MultiPoly& p);
// Monic greatest common divisor; gcd(0, 0) = 0.
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);
// Inverse of a modulo the univariate polynomial m in generator g.
MultiPoly inverse_mod(const MultiPoly& a, const MultiPoly& m, int g);

}  // namespace kdef

#endif  // KDEF_MULTIPOLY_HPP
