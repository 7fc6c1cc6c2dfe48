#ifndef KDEF_LEMMAS_HPP
#define KDEF_LEMMAS_HPP

#include <optional>
#include <string>
#include <vector>

#include "kdef/cohomology.hpp"

namespace kdef {

// Operator at doubled source offset src2 from l with doubled shift shift2,
// as attached by pair_op.
struct OpRef {
  int src2 = 0;
  int shift2 = 0;
};

// coeff * [[a, b]] when b is set, coeff * delta(a) otherwise.
struct LemmaTerm {
  Scalar coeff;
  OpRef a;
  std::optional<OpRef> b;

  Cochain2 build(const Weight& l) const;  // without the coefficient
  std::string str() const;
};

// A linear combination of terms, used as one member of an independence
// system.
using LemmaCombo = std::vector<LemmaTerm>;

struct LemmaIdentity {
  std::string name;
  std::vector<LemmaTerm> lhs;
  std::vector<LemmaTerm> rhs;
};

struct LemmaSystem {
  std::string name;
  std::vector<LemmaCombo> members;
};

struct IdentityReport {
  std::string name;
  bool holds = false;      // lhs - rhs has zero fingerprint
  bool solvable = false;   // lhs lies in the span of the rhs cochains
  bool unique = false;     // and the coefficients are determined
  std::vector<Scalar> printed;
  std::vector<Scalar> solved;  // particular solution when solvable
};

struct SystemReport {
  std::string name;
  std::size_t size = 0;
  std::size_t rank = 0;
  bool independent() const { return rank == size; }
  // Nullspace vectors over the members when dependent.
  std::vector<Vector> relations;
};

IdentityReport check_identity(const LemmaIdentity& id, const Weight& l, int bump = 0, bool relative = false);
SystemReport check_system(const LemmaSystem& sys, const Weight& l, int bump = 0, bool relative = true);

// Cataloged identities and independence systems, keyed by lemma name:
// "th2" (four product coboundaries), "benfraj1" (five identities),
// "benfraj3" (one identity) and "benfraj2", "benfraj4", "benfraj5" (systems).
std::vector<LemmaIdentity> lemma_identities(const std::string& lemma, const Weight& l);
std::vector<LemmaSystem> lemma_systems(const std::string& lemma, const Weight& l);
std::vector<std::string> lemma_names();

}  // namespace kdef

#endif  // KDEF_LEMMAS_HPP
