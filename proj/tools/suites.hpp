#ifndef KDEF_TOOLS_SUITES_HPP
#define KDEF_TOOLS_SUITES_HPP

#include <map>
#include <stdexcept>
#include <string>

#include "kdef/deformation.hpp"
#include "report.hpp"

namespace kdef::cli {

// Bad names or values on the command line; maps to exit code 2.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Report verify_algebra(int jacobi_degree, int representation_degree);
Report verify_transvectants(int kmax2, int bump = 0);
Report verify_cocycles(const std::string& which);
Report verify_lemmas(const std::string& which, int bump);
Report cohomology_solve(const std::string& omega, int order_bound, const std::string& lambda, int bump);
Report deform_conditions(int n2, int max_order);
Report deform_enumerate(int n2, int max_order);
Report deform_check(int n2, const std::string& assignment_file, int t_degree, int bump);

// Dimension of the invariant space of order k at weights (tau, lambda): 2 when
// both weights are resonant and the bound t > k - s - 2 holds, otherwise 1.
int predicted_singular_dim(int k, const Rational& tau, const Rational& lambda);

std::map<ParamName, Scalar> read_assignment(const std::string& path);

}  // namespace kdef::cli

#endif  // KDEF_TOOLS_SUITES_HPP
