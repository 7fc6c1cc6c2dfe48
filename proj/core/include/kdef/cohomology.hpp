#ifndef KDEF_COHOMOLOGY_HPP
#define KDEF_COHOMOLOGY_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kdef/densmod.hpp"
#include "kdef/linalg.hpp"
#include "kdef/transvectants.hpp"

namespace kdef {

// Monomial x^d th^s indexed by its unit 2d + s (the scaling degree under X_x,
// doubled).
SuperPoly unit_monomial(int unit);
ContactGen unit_generator(int unit);

// 1-cochain X_G -> (F -> value) from K(1) to D_{src,dst}.
class Cochain1 {
 public:
  using Eval = std::function<SuperPoly(const ContactGen& g, const SuperPoly& f)>;

  Cochain1() = default;
  Cochain1(Weight src, Weight dst, int parity, Eval eval)
      : src_(std::move(src)), dst_(std::move(dst)), parity_(parity & 1), eval_(std::move(eval)) {}
  // Translation-invariant body with slot 1 the generator (weight -1).
  static Cochain1 from_bilin(const BilinOp& body);

  const Weight& src() const { return src_; }
  const Weight& dst() const { return dst_; }
  int parity() const { return parity_; }
  const std::optional<BilinOp>& body() const { return body_; }
  bool is_null() const { return !eval_; }

  SuperPoly operator()(const ContactGen& g, const SuperPoly& f) const;
  Cochain1 scaled(const Scalar& s) const;

 private:
  Weight src_, dst_;
  int parity_ = 0;
  Eval eval_;
  std::optional<BilinOp> body_;
};

// 2-cochain (X_G, X_H) -> (F -> value) from K(1) x K(1) to D_{src,dst}.
class Cochain2 {
 public:
  using Eval = std::function<SuperPoly(const ContactGen& g, const ContactGen& h, const SuperPoly& f)>;

  Cochain2() = default;
  Cochain2(Weight src, Weight dst, int parity, Eval eval)
      : src_(std::move(src)), dst_(std::move(dst)), parity_(parity & 1), eval_(std::move(eval)) {}
  static Cochain2 zero(const Weight& src, const Weight& dst, int parity);

  const Weight& src() const { return src_; }
  const Weight& dst() const { return dst_; }
  int parity() const { return parity_; }

  SuperPoly operator()(const ContactGen& g, const ContactGen& h, const SuperPoly& f) const;
  Cochain2 scaled(const Scalar& s) const;

 private:
  Weight src_, dst_;
  int parity_ = 0;
  Eval eval_;
};

// sum c_i * omega_i over cochains with common weights and parity.
Cochain2 linear_combination(const std::vector<std::pair<Scalar, Cochain2>>& terms);

// (g . A)(F) = L_g(A F) - (-1)^{p(g) p(A)} A(L_g F) for an operator value A.
SuperPoly act_on_value(const ContactGen& g, const Weight& src, const Weight& dst, int parity_a,
                       const std::function<SuperPoly(const SuperPoly&)>& a, const SuperPoly& f);

// delta A (X_G) = (-1)^{p(G) p(A)} L_{X_G}(A); requires constant coefficients.
Cochain1 delta0(const LinOp& a);
Cochain2 delta1(const Cochain1& c);
// [[g1, g2]] restricted to the component src(g2) -> dst(g1).
Cochain2 cup(const Cochain1& g1, const Cochain1& g2);

// Evaluation grids. A band grid assumes the cochain is translation invariant
// and homogeneous under X_x, so the total input unit is pinned near its
// order; a box grid takes every monomial up to a unit bound.
struct Grid1 {
  std::vector<std::pair<int, int>> points;  // (generator unit, density unit)
  int out_len = 0;
};
struct Grid2 {
  std::vector<std::tuple<int, int, int>> points;  // (u_g, u_h, u_f), u_g <= u_h
  int out_len = 0;
};
// Band grid for a shift w = dst - src: total unit in [2(w+1), 2(w+1) + 1 + bump].
Grid1 band_grid1(const Rational& shift, int bump = 0);
Grid1 box_grid1(int max_g_unit, int max_f_unit);
// Band grid for a 2-cochain: total unit in [2(w+2), 2(w+2) + 1 + bump]. With
// relative set, generator units <= 4 (the osp(1|2) generators) are skipped.
Grid2 band_grid2(const Rational& shift, bool relative, int bump = 0);
Grid2 box_grid2(int max_unit);

struct Fingerprint {
  Vector values;
  int bump = 0;
};
Fingerprint fingerprint(const Cochain1& c, const Grid1& grid);
Fingerprint fingerprint(const Cochain2& c, const Grid2& grid);
// Band fingerprint at the cochain's own shift.
Fingerprint fingerprint(const Cochain2& c, bool relative, int bump = 0);

// Exact weight shift dst - src of a cochain; throws when it is not rational.
Rational weight_shift(const Weight& src, const Weight& dst);

// delta1(c) vanishes on every triple of monomials of x-degree <= max_degree.
bool is_cocycle(const Cochain1& c, int max_degree, std::string* witness = nullptr);
// Same test for a 2-cochain against the degree-2 coboundary formula.
bool is_cocycle(const Cochain2& c, int max_degree, std::string* witness = nullptr);
bool vanishes_on_osp(const Cochain1& c, int max_f_degree);

struct CoboundarySolution {
  bool solvable = false;
  BilinOp primitive;       // b with delta b = omega (slot 1: generator)
  Vector certificate;      // left-kernel vector when not solvable
  Matrix system;           // columns: fingerprints of delta b_i
  Vector rhs;              // fingerprint of omega
  std::vector<BilinOp> ansatz;
  std::size_t nullity = 0;  // dimension of osp-relative cocycles in the ansatz
};
// Looks for b vanishing on osp(1|2), translation invariant and homogeneous,
// with density-slot order <= order_bound, such that delta b = omega.
CoboundarySolution solve_coboundary(const Cochain2& omega, int order_bound, int bump = 0);
// Re-derives the verdict of a non-solvable result from its certificate.
bool check_certificate(const CoboundarySolution& s);

struct TrivialitySolution {
  bool trivial = false;
  LinOp primitive;
  int order_bound = 0;
};
// Looks for a constant-coefficient operator A of order <= order_bound with delta A = c.
TrivialitySolution is_trivial_cocycle(const Cochain1& c, int order_bound);

// Rank of the band fingerprints of 2-cochains with common weights.
std::size_t independence_rank(const std::vector<Cochain2>& cochains, int bump = 0, bool relative = true);

// Catalog of cup-product 2-cocycles: B[l,l+3], B[l,l+7/2], B~[l,l+7/2],
// B[l,l+4], B~[l,l+4], B-[l,l+4], B[l,l+9/2], B~[l,l+9/2], B[l,l+5].
Cochain2 two_cocycle(const std::string& name, const Weight& lambda);
std::vector<std::string> two_cocycle_names();

}  // namespace kdef

#endif  // KDEF_COHOMOLOGY_HPP
