#ifndef KDEF_REFERENCE_HPP
#define KDEF_REFERENCE_HPP

#include <string>
#include <vector>

#include "kdef/deformation.hpp"

namespace kdef {

// Closed forms of the structure constants that relate cup products of the
// infinitesimal cocycles to coboundaries of supertransvectants.
Scalar zeta_const(const Weight& l);   // zeta B[l,l+3] = delta J_4
Scalar alpha_const(const Weight& l);  // alpha B[l,l+7/2] = delta J_{9/2}
Scalar beta_const(const Weight& l);   // beta B[l,l+4] = delta J_5
Scalar gamma_const(const Weight& l);  // gamma B[l,l+9/2] = delta J_{11/2}
Scalar xi_const(const Weight& l);
// eps_i for i = 1..17.
Scalar eps_const(int i, const Weight& l);

// Reference integrability conditions of order 2..5 for a symbol space with
// 2n = n2, one entry per window; windows run over every source offset whose
// pair fits in the space.
std::vector<Condition> reference_conditions(int order, int n2);
// Label of a reference condition family, e.g. "3b" for the second block of
// the order-3 list.
std::string reference_block(int order, int shift2);

}  // namespace kdef

#endif  // KDEF_REFERENCE_HPP
