#ifndef KDEF_TRANSVECTANTS_HPP
#define KDEF_TRANSVECTANTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "kdef/densmod.hpp"
#include "kdef/linalg.hpp"

namespace kdef {

// Floor of a half-integer.
int integer_part(const Rational& k);

// Gamma_{i,j,k} = (-1)^j binom(2 tau + [k], j) binom(2 lambda + [k], i)
Scalar gamma_coeff(int i, int j, const Rational& k, const Weight& tau, const Weight& lambda);

// Classical bilinear operator sum_{i+j=order} c_i phi^(i) psi^(j) from F_tau x F_lambda.
struct ClassicalBilin {
  Weight tau, lambda, dst;
  int order = 0;
  std::vector<Scalar> c;  // c[i] multiplies phi^(i) psi^(order - i)

  const Scalar& coeff(int i) const;
  bool is_zero() const;
  XPoly apply(const XPoly& phi, const XPoly& psi) const;
  ClassicalBilin scaled(const Scalar& s) const;
  bool operator==(const ClassicalBilin& o) const { return order == o.order && c == o.c; }
  std::string str() const;
};

// J_k^{tau,lambda} with c_{i,j} = Gamma_{i,j,k-1}.
ClassicalBilin transvectant(int k, const Weight& tau, const Weight& lambda);
// (i+1)(i+2tau) c_{i+1,j} + (j+1)(j+2lambda) c_{i,j+1} = 0 for all i+j = order-1.
bool satisfies_recurrence(const ClassicalBilin& b);
// Invariance under d/dx, x d/dx and x^2 d/dx on monomials of degree <= max_degree.
bool check_sl2_invariance(const ClassicalBilin& b, int max_degree);
// All solutions of the recurrence for rational weights.
std::vector<ClassicalBilin> transvectant_singular(int k, const Rational& tau, const Rational& lambda);
// Subspace of span(space) whose coefficients c_{i,j} vanish for all i <= max_i
// (max_i = 1: vanishing on affine phi; max_i = 2: vanishing on sl(2)).
std::vector<ClassicalBilin> vanishing_subspace(const std::vector<ClassicalBilin>& space, int max_i);

// Supertransvectant J_k^{tau,lambda} for half-integer k >= 0, odd for semi-integer k.
BilinOp supertransvectant(const Rational& k, const Weight& tau, const Weight& lambda);

// Per-slot monomial degree bound used to test a bilinear operator.
int slot_degree_bound(int eta_order, int bump = 0);

// Coefficients of the osp(1|2) invariance defect on the monomial grid; zero
// exactly when the operator is invariant.
Vector invariance_fingerprint(const BilinOp& b, int bump = 0);
// Same on an explicit grid: slot-1 monomials of degree <= df, slot-2 of degree <= dg.
Vector invariance_fingerprint_grid(const BilinOp& b, int df, int dg);
bool check_invariance(const BilinOp& b, std::string* witness = nullptr, int bump = 0);
// Basis of the invariant operators F_tau x F_lambda -> F_{tau+lambda+k} of
// x-homogeneous shape: a-terms with k1+k2 = 2k and b-terms with k1+k2 = 2k+1.
std::vector<BilinOp> invariant_space(const Rational& k, const Weight& tau, const Weight& lambda, int bump = 0);

// Blocks of a supertransvectant on components F = f0 + f1 th, G = g0 + g1 th,
// each compared with the matching classical transvectant.
struct RestrictionComponents {
  bool integer = true;
  // Integer k: (f0,g0), (f1,g1), th(f0,g1), th(f1,g0).
  // Semi-integer k: (f0,g1), (f1,g0), th(f0,g0), th(f1,g1).
  ClassicalBilin blocks[4];
  Scalar constants[4];
};
RestrictionComponents restriction_components(const BilinOp& j);

// c with a = c * b, when one exists.
std::optional<Scalar> proportionality(const BilinOp& a, const BilinOp& b);

// Classical 1-cochain X d/dx -> (f -> sum c_i X^(i) f^(j)) with the vector
// field in the first slot (tau = -1).
bool classical_is_cocycle(const ClassicalBilin& c, int max_degree, std::string* witness = nullptr);
bool classical_vanishes_on_sl2(const ClassicalBilin& c);
// Basis of the homogeneous cocycles of the given order F_lambda -> F_dst
// (restricted to c_0 = c_1 = c_2 = 0 when sl2_relative is set).
std::vector<ClassicalBilin> classical_cocycle_space(const Weight& lambda, const Weight& dst, int order,
                                                    bool sl2_relative, int max_degree);

// Catalog names: C[l,l], C[0,1], C~[0,1], C[l,l+2], C[l,l+3], C[l,l+4],
// C[0,5], C[-4,1], C[a,a+6], A[l,l+2], A[l,l+3], A[l,l+4], A[0,5], A[-4,1],
// A[a,a+6]. Generic names use lambda; the a-names need lambda to be a root
// of 2a^2 + 10a + 3 in an algebraic context.
ClassicalBilin classical_cocycle(const std::string& name, const Weight& lambda);
std::vector<std::string> classical_cocycle_names();

struct NamedCocycle {
  std::string name;
  BilinOp body;  // slot 1: vector field generator, slot 2: density
  Weight src, dst;
  int parity = 0;
  bool osp_relative = false;
};

// Super catalog: U[l,l], U[l,l+3/2], U[l,l+2], U[l,l+5/2], U[l,l+3],
// U[l,l+4], U[0,1/2], U~[0,1/2], U[-1/2,1], U[-1,3/2].
NamedCocycle super_cocycle(const std::string& name, const Weight& lambda);
// Lookup by weights; (0, 1/2) returns U[0,1/2].
NamedCocycle super_cocycle(const Weight& src, const Weight& dst);
std::vector<std::string> super_cocycle_names();

enum class H1Variant { VectPlain, VectSl2, KPlain, KOsp };
int h1_dim_table(const Scalar& lambda, const Scalar& mu, H1Variant variant);

}  // namespace kdef

#endif  // KDEF_TRANSVECTANTS_HPP
