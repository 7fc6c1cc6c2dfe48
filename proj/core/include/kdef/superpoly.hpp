#ifndef KDEF_SUPERPOLY_HPP
#define KDEF_SUPERPOLY_HPP

#include <string>
#include <vector>

#include "kdef/scalar.hpp"

namespace kdef {

// Parities are 0 (even) or 1 (odd); (-1)^p is written sign(p).
inline int sign(int p) { return (p & 1) ? -1 : 1; }

// Univariate polynomial in x with Scalar coefficients, dense and trimmed.
class XPoly {
 public:
  XPoly() = default;
  explicit XPoly(Scalar c);
  static XPoly monomial(int d, Scalar c = Scalar(1));

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Scalar& coeff(int d) const;
  const std::vector<Scalar>& coeffs() const { return c_; }

  XPoly operator-() const;
  XPoly& operator+=(const XPoly& o);
  XPoly& operator-=(const XPoly& o);
  friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
  friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
  friend XPoly operator*(const XPoly& a, const XPoly& b);
  XPoly scaled(const Scalar& s) const;
  bool operator==(const XPoly& o) const { return c_ == o.c_; }
  bool operator!=(const XPoly& o) const { return !(*this == o); }

  XPoly derivative(int times = 1) const;
  Scalar evaluate(const Scalar& x) const;

 private:
  void trim();
  std::vector<Scalar> c_;
};

// Element ev(x) + od(x)*th of K[x, th] with th^2 = 0.
class SuperPoly {
 public:
  SuperPoly() = default;
  SuperPoly(XPoly ev, XPoly od) : ev_(std::move(ev)), od_(std::move(od)) {}
  explicit SuperPoly(Scalar c) : ev_(std::move(c)) {}
  // c * x^d * th^s
  static SuperPoly monomial(int d, int s, Scalar c = Scalar(1));
  static SuperPoly theta() { return monomial(0, 1); }
  static SuperPoly x() { return monomial(1, 0); }
  // Literal syntax in "x", "th" and the generators of ctx.
  static SuperPoly parse(const std::string& text, const ContextPtr& ctx);

  const XPoly& ev() const { return ev_; }
  const XPoly& od() const { return od_; }
  bool is_zero() const { return ev_.is_zero() && od_.is_zero(); }
  bool is_even() const { return od_.is_zero(); }
  bool is_odd() const { return ev_.is_zero(); }
  bool is_homogeneous() const { return is_even() || is_odd(); }
  // 0 or 1; throws NonHomogeneous for mixed elements. Zero counts as even.
  int parity() const;
  int degree() const;

  SuperPoly operator-() const { return {-ev_, -od_}; }
  SuperPoly& operator+=(const SuperPoly& o);
  SuperPoly& operator-=(const SuperPoly& o);
  friend SuperPoly operator+(SuperPoly a, const SuperPoly& b) { return a += b; }
  friend SuperPoly operator-(SuperPoly a, const SuperPoly& b) { return a -= b; }
  friend SuperPoly operator*(const SuperPoly& a, const SuperPoly& b);
  SuperPoly scaled(const Scalar& s) const { return {ev_.scaled(s), od_.scaled(s)}; }
  bool operator==(const SuperPoly& o) const { return ev_ == o.ev_ && od_ == o.od_; }
  bool operator!=(const SuperPoly& o) const { return !(*this == o); }

  // d/dx
  SuperPoly derivative(int times = 1) const;
  SuperPoly d_theta() const { return {od_, XPoly()}; }
  // th * self
  SuperPoly times_theta() const { return {XPoly(), ev_}; }
  // Parity automorphism: ev - od*th.
  SuperPoly sigma() const { return {ev_, -od_}; }

  std::string str() const;

 private:
  XPoly ev_, od_;
};

// eta_bar = d/dth - th d/dx, so (ev + od th) -> od - ev' th and eta_bar^2 = -d/dx.
SuperPoly eta_bar(const SuperPoly& f);
SuperPoly eta_bar_pow(const SuperPoly& f, int k);

// Generator F of the contact field X_F; F must be parity-homogeneous.
class ContactGen {
 public:
  explicit ContactGen(SuperPoly f);
  // Homogeneous generator with a fixed parity; zero is allowed.
  ContactGen(SuperPoly f, int parity);
  const SuperPoly& f() const { return f_; }
  int parity() const { return parity_; }
  std::string str() const { return f_.str(); }

 private:
  SuperPoly f_;
  int parity_ = 0;
};

// {F,G} = F G' - F' G - 1/2 (-1)^{p(F)} eta_bar(F) eta_bar(G)
ContactGen contact_bracket(const ContactGen& f, const ContactGen& g);

// Generators of osp(1|2): 1, th, x, x th, x^2.
std::vector<ContactGen> osp_generators();

bool jacobi_check(const ContactGen& f, const ContactGen& g, const ContactGen& h);

// Parity-homogeneous monomials x^d th^s with d <= max_degree.
std::vector<ContactGen> monomial_generators(int max_degree);

}  // namespace kdef

#endif  // KDEF_SUPERPOLY_HPP
