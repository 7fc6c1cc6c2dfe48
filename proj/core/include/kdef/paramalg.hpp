#ifndef KDEF_PARAMALG_HPP
#define KDEF_PARAMALG_HPP

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kdef/scalar.hpp"

namespace kdef {

// Deformation parameter t[l + src2/2, l + dst2/2], attached to the component
// pair F_{l+src2/2} -> F_{l+dst2/2} of the symbol space. Odd iff the shift is
// a half-integer.
struct ParamName {
  int src2 = 0, dst2 = 0;

  int shift2() const { return dst2 - src2; }
  int parity() const { return shift2() & 1; }
  std::string str() const;
  // Accepts "t[l,l+3/2]", "t[l+1/2,l+2]", ...
  static ParamName parse(const std::string& text);
  auto operator<=>(const ParamName&) const = default;
};

// "l", "l+1/2", "l+1", ... for a doubled offset.
std::string offset_weight_str(int offset2);

// Parameters in nondecreasing order; an odd parameter appears at most once.
using ParamMonomial = std::vector<ParamName>;

// Sorts m in place and returns the sign of the odd-variable permutation, or 0
// when an odd variable repeats.
int canonicalize(ParamMonomial& m);
int monomial_parity(const ParamMonomial& m);
// Multiset inclusion a | b.
bool divides(const ParamMonomial& a, const ParamMonomial& b);

// Element of the supercommutative polynomial algebra in the parameters with
// Scalar coefficients.
class SuperParamPoly {
 public:
  SuperParamPoly() = default;
  explicit SuperParamPoly(const Scalar& c);
  static SuperParamPoly variable(const ParamName& p);
  // c times the product of the factors in the given order.
  static SuperParamPoly monomial(ParamMonomial factors, const Scalar& c = Scalar(1));
  // Product of variables in the given order.
  static SuperParamPoly product(const std::vector<ParamName>& factors) { return monomial(factors); }

  const std::map<ParamMonomial, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // -1 for zero.
  int degree() const;
  bool is_homogeneous() const;
  // Parity of a parity-homogeneous element; zero counts as even.
  int parity() const;
  std::set<ParamName> variables() const;
  Scalar coeff(const ParamMonomial& m) const;

  SuperParamPoly operator-() const;
  SuperParamPoly& operator+=(const SuperParamPoly& o);
  SuperParamPoly& operator-=(const SuperParamPoly& o);
  friend SuperParamPoly operator+(SuperParamPoly a, const SuperParamPoly& b) { return a += b; }
  friend SuperParamPoly operator-(SuperParamPoly a, const SuperParamPoly& b) { return a -= b; }
  friend SuperParamPoly operator*(const SuperParamPoly& a, const SuperParamPoly& b);
  SuperParamPoly scaled(const Scalar& s) const;
  bool operator==(const SuperParamPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const SuperParamPoly& o) const { return !(*this == o); }

  // Drops the terms of degree above max_degree.
  SuperParamPoly truncated(int max_degree) const;
  // Replaces the assigned parameters by their values; odd parameters may only
  // be assigned zero.
  SuperParamPoly substituted(const std::map<ParamName, Scalar>& values) const;
  // Applies f to every coefficient.
  template <class F>
  SuperParamPoly map_coeffs(F f) const {
    SuperParamPoly r;
    for (const auto& [m, c] : terms_) {
      Scalar v = f(c);
      if (!v.is_zero()) r.terms_.emplace(m, std::move(v));
    }
    return r;
  }
  // Scaled so that the leading term (highest in monomial order) has coefficient 1.
  SuperParamPoly monic() const;

  std::string str() const;

 private:
  void add_term(const ParamMonomial& m, const Scalar& c);
  std::map<ParamMonomial, Scalar> terms_;
};

std::string monomial_str(const ParamMonomial& m);

// Ideal of the parameter algebra generated by homogeneous elements.
class ConditionIdeal {
 public:
  ConditionIdeal() = default;
  explicit ConditionIdeal(std::vector<SuperParamPoly> generators);

  void add(const SuperParamPoly& g);
  const std::vector<SuperParamPoly>& generators() const { return gens_; }
  bool empty() const { return gens_.empty(); }

  // Removes every monomial divisible by a monomial generator.
  SuperParamPoly reduce_monomials(const SuperParamPoly& f) const;
  // Membership for a t-homogeneous element, decided by linear algebra on the
  // multiples u*g that can reach the monomials of f.
  bool contains(const SuperParamPoly& f) const;
  // True when every generator vanishes after the substitution.
  bool annihilated_by(const std::map<ParamName, Scalar>& values) const;

 private:
  std::vector<SuperParamPoly> gens_;
  std::vector<ParamMonomial> monomial_gens_;
};

}  // namespace kdef

#endif  // KDEF_PARAMALG_HPP
