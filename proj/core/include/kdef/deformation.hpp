#ifndef KDEF_DEFORMATION_HPP
#define KDEF_DEFORMATION_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kdef/cohomology.hpp"
#include "kdef/paramalg.hpp"

namespace kdef {

// Symbol superspace: the components F_{l + i/2}, i = 0..2n, with l = beta - n
// the lowest weight. Offsets are stored doubled.
struct SymbolSpace {
  int n2 = 0;
  Weight lowest;

  // Lowest weight is the generator l of Q(l).
  static SymbolSpace generic(int n2);
  int size() const { return n2 + 1; }
  Weight weight(int offset2) const { return lowest + half(offset2); }
  Weight beta() const { return weight(n2); }
};

// "5", "11/2", ... for a doubled value.
std::string half_str(int v2);
// Parses "5", "11/2", "5.5" into a doubled value.
int parse_half(const std::string& text);

// Operator attached to a component pair of doubled shift s: the cocycle
// U[.,.+s/2] for s in {3,4,5} and the supertransvectant J_{s/2+1}^{-1,lambda}
// for s >= 6.
Cochain1 pair_op(const Weight& lambda, int shift2);
std::string pair_op_name(int src2, int shift2);

// Infinitesimal parameters: one per pair with shift 3/2, 2 or 5/2.
std::vector<ParamName> parameters(const SymbolSpace& s);

struct DefEntry {
  int src2 = 0, dst2 = 0;
  SuperParamPoly coeff;
  std::string op;
};
struct DefTerm {
  int order = 0;
  std::vector<DefEntry> entries;
};

DefTerm build_infinitesimal(const SymbolSpace& s);

// Quadratic part of the order-m equation at a pair: coeff times the cup
// [[C(mid -> dst), C(src -> mid)]], summed over the splittings of m.
struct RhsEntry {
  int src2 = 0, mid2 = 0, dst2 = 0;
  SuperParamPoly coeff;
};

struct Condition {
  int order = 0;
  int src2 = 0, dst2 = 0;
  SuperParamPoly poly;
};

struct EngineOptions {
  int bump = 0;
};

// Order-by-order solver of delta L(m) + 1/2 sum [[L(i), L(j)]] = 0 over the
// parameter algebra, modulo the ideal of the conditions found so far.
class MaurerCartan {
 public:
  explicit MaurerCartan(SymbolSpace s, EngineOptions opts = {});

  const SymbolSpace& space() const { return space_; }
  const std::vector<ParamName>& params() const { return params_; }
  int solved_order() const { return static_cast<int>(coeffs_.size()) - 1; }
  void solve_to(int order);
  DefTerm term(int order) const;
  // Coefficient of the operator at a pair in the order-m term.
  SuperParamPoly coeff(int order, int src2, int dst2) const;

  // Quadratic part of the order-m equation from the solved lower orders,
  // with monomials of the current ideal removed.
  std::vector<RhsEntry> rhs(int order) const;
  // Order-m obstruction coefficients that are not coboundaries, without
  // recording them; empty when the order-m equation is solvable modulo the
  // current ideal.
  std::vector<Condition> obstructions(int order);

  const std::vector<Condition>& conditions() const { return conditions_; }
  const ConditionIdeal& ideal() const { return ideal_; }

 private:
  struct Decomposition {
    std::vector<int> pivots;  // inner shifts of the pivot cups
    // per inner shift: coefficients on delta J and on each pivot cup
    std::map<int, std::pair<Scalar, std::vector<Scalar>>> nonpivot;
  };
  struct Step {
    std::map<std::pair<int, int>, SuperParamPoly> coeffs;
    std::vector<Condition> conditions;
  };

  const Decomposition& decomposition(int shift2, const std::vector<int>& inner, int window);
  Step step(int order);
  std::map<int, SuperParamPoly> quadratic(int order, int src2, int shift2) const;

  SymbolSpace space_;
  EngineOptions opts_;
  std::vector<ParamName> params_;
  std::vector<std::map<std::pair<int, int>, SuperParamPoly>> coeffs_;
  std::vector<Condition> conditions_;
  ConditionIdeal ideal_;
  std::map<std::pair<int, std::vector<int>>, Decomposition> generic_;
  std::map<std::tuple<int, std::vector<int>, int>, Decomposition> windows_;
};

// Union of the conditions of orders 2..max_order.
ConditionIdeal integrability_ideal(const SymbolSpace& s, int max_order = 5);

struct Family {
  std::vector<ParamName> killed;
  int free_parameters = 0;
};
// Kill sets of minimum size after which every generator vanishes identically
// with the remaining parameters kept formal.
std::vector<Family> enumerate_maximal(const ConditionIdeal& ideal, const std::vector<ParamName>& params);

struct HomomorphismCheck {
  bool holds = false;
  std::string witness;
  std::size_t points = 0;
};
// Checks [L_g, L_h] = L_{g,h} for L = L0 + sum_m L(m) with the assignment
// substituted, modulo parameter degree above t_degree_bound. Unassigned
// parameters stay formal; odd ones may only be assigned 0. Throws
// IdealViolation when the assignment leaves an ideal generator nonzero and
// enforce_ideal is set.
HomomorphismCheck verify_formal_deformation(MaurerCartan& engine, const std::map<ParamName, Scalar>& assignment,
                                            int t_degree_bound, bool enforce_ideal = true, int bump = 0);

}  // namespace kdef

#endif  // KDEF_DEFORMATION_HPP
