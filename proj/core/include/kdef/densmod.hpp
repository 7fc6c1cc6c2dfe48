#ifndef KDEF_DENSMOD_HPP
#define KDEF_DENSMOD_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kdef/superpoly.hpp"

namespace kdef {

// Weights are affine Scalars such as l + 5/2.
using Weight = Scalar;

struct Density {
  SuperPoly f;
  Weight w;
  bool operator==(const Density& o) const { return f == o.f && w == o.w; }
};

// Component form of the action on F_l:
// L(g0 + g1 th) = a g0' + l a' g0 + b g1 / 2
//               + (a g1' + (l + 1/2) a' g1 + l b' g0 + b g0' / 2) th,  F = a + b th.
Density lie_density(const ContactGen& f, const Density& d);

// Differential operator sum_m c_m * eta_bar^m from F_src to F_dst.
class LinOp {
 public:
  LinOp() = default;
  LinOp(Weight src, Weight dst) : src_(std::move(src)), dst_(std::move(dst)) {}
  LinOp(Weight src, Weight dst, std::vector<SuperPoly> coeffs);
  static LinOp identity(const Weight& w) { return multiplication(w, w, SuperPoly(Scalar(1))); }
  static LinOp multiplication(const Weight& src, const Weight& dst, const SuperPoly& c);
  static LinOp eta_bar_power(const Weight& src, const Weight& dst, int m, Scalar c = Scalar(1));

  const Weight& src() const { return src_; }
  const Weight& dst() const { return dst_; }
  const std::vector<SuperPoly>& coeffs() const { return c_; }
  const SuperPoly& coeff(int m) const;
  int order() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  // Parity of a homogeneous operator; zero counts as even.
  int parity() const;
  // True when every coefficient is a constant or a constant multiple of th.
  bool translation_invariant() const;

  LinOp& operator+=(const LinOp& o);
  LinOp& operator-=(const LinOp& o);
  friend LinOp operator+(LinOp a, const LinOp& b) { return a += b; }
  friend LinOp operator-(LinOp a, const LinOp& b) { return a -= b; }
  LinOp scaled(const Scalar& s) const;
  LinOp left_multiplied(const SuperPoly& c) const;
  bool operator==(const LinOp& o) const { return c_ == o.c_ && src_ == o.src_ && dst_ == o.dst_; }

  SuperPoly apply(const SuperPoly& f) const;
  std::string str() const;

 private:
  void trim();
  Weight src_, dst_;
  std::vector<SuperPoly> c_;
};

Density apply_linop(const LinOp& a, const Density& d);
LinOp compose_ops(const LinOp& a, const LinOp& b);
// L^l_{X_F} = l F' - 1/2 (-1)^{p(F)} eta_bar(F) eta_bar - F eta_bar^2 on F_l.
LinOp lie_linop(const ContactGen& f, const Weight& w);
// L^{l,m}_{X_F}(A) = L^m_F o A - (-1)^{p(A)p(F)} A o L^l_F.
LinOp lie_operator(const ContactGen& f, const LinOp& a);

// Classical operator sum_j c_j(x) d^j/dx^j from F_src to F_dst on the line.
class ClassicalOp {
 public:
  ClassicalOp() = default;
  ClassicalOp(Weight src, Weight dst, std::vector<XPoly> coeffs = {});
  const Weight& src() const { return src_; }
  const Weight& dst() const { return dst_; }
  const std::vector<XPoly>& coeffs() const { return c_; }
  const XPoly& coeff(int j) const;
  bool is_zero() const { return c_.empty(); }
  void add_term(int j, const XPoly& c);
  XPoly apply(const XPoly& f) const;
  ClassicalOp scaled(const Scalar& s) const;
  bool operator==(const ClassicalOp& o) const { return c_ == o.c_; }
  std::string str() const;

 private:
  void trim();
  Weight src_, dst_;
  std::vector<XPoly> c_;
};

ClassicalOp compose_classical(const ClassicalOp& a, const ClassicalOp& b);
ClassicalOp classical_difference(const ClassicalOp& a, const ClassicalOp& b);
// L^{l,m}_{X d/dx}(A) = L^m_X o A - A o L^l_X with L^l_X(f) = X f' + l X' f.
ClassicalOp classical_lie_operator(const XPoly& x, const ClassicalOp& a);

// Blocks of an operator on F_l -> F_m under f0 + f1 th -> (f0, f1):
// D_{l,m}, D_{l+1/2,m+1/2}, D_{l+1/2,m} (f1 -> f0), D_{l,m+1/2} (f0 -> f1).
struct Restriction {
  ClassicalOp even0, even1, odd_from1, odd_from0;
};
Restriction restrict_vect1(const LinOp& a);

// Translation-invariant bilinear operator
// (F, G) -> sum (a + b th) eta_bar^k(F) eta_bar^m(G) with an explicit parity.
class BilinOp {
 public:
  struct Coeff {
    Scalar a, b;
  };
  using Key = std::pair<int, int>;

  BilinOp() = default;
  BilinOp(Weight w1, Weight w2, Weight dst, int parity)
      : w1_(std::move(w1)), w2_(std::move(w2)), dst_(std::move(dst)), parity_(parity & 1) {}

  const Weight& w1() const { return w1_; }
  const Weight& w2() const { return w2_; }
  const Weight& dst() const { return dst_; }
  int parity() const { return parity_; }
  const std::map<Key, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int max_k() const;
  int max_m() const;

  // (a + b th) eta_bar^k(F) eta_bar^m(G)
  void add(const Scalar& a, const Scalar& b, int k, int m);
  // c th^s (-1)^{sf p(F)} (-1)^{sg p(G)} eta_bar^k(F) eta_bar^m(G), rewritten
  // into normal form with (-1)^{p(F)} H = (-1)^k (H - 2 th eta_bar(H)) for
  // H = eta_bar^k(F).
  void add_signed(const Scalar& c, int s, bool sf, bool sg, int k, int m);

  BilinOp& operator+=(const BilinOp& o);
  BilinOp& operator-=(const BilinOp& o);
  friend BilinOp operator+(BilinOp a, const BilinOp& b) { return a += b; }
  friend BilinOp operator-(BilinOp a, const BilinOp& b) { return a -= b; }
  BilinOp scaled(const Scalar& s) const;
  bool operator==(const BilinOp& o) const;

  SuperPoly apply(const SuperPoly& f, const SuperPoly& g) const;
  std::string str() const;

 private:
  void add_coeff(const Key& key, const Scalar& a, const Scalar& b);
  Weight w1_, w2_, dst_;
  int parity_ = 0;
  std::map<Key, Coeff> terms_;
};

}  // namespace kdef

#endif  // KDEF_DENSMOD_HPP
