#include "kdef/lemmas.hpp"

#include <stdexcept>

#include "kdef/deformation.hpp"
#include "kdef/reference.hpp"

namespace kdef {

Cochain2 LemmaTerm::build(const Weight& l) const {
  Cochain1 first = pair_op(l + half(a.src2), a.shift2);
  if (!b) return delta1(first);
  return cup(first, pair_op(l + half(b->src2), b->shift2));
}

std::string LemmaTerm::str() const {
  std::string s = pair_op_name(a.src2, a.shift2);
  if (!b) return "d(" + s + ")";
  return "[[" + s + ", " + pair_op_name(b->src2, b->shift2) + "]]";
}

namespace {

Vector combo_fingerprint(const std::vector<LemmaTerm>& terms, const Weight& l, const Grid2& grid) {
  Vector out;
  for (const auto& t : terms) {
    Vector v = fingerprint(t.build(l), grid).values;
    if (out.empty()) out.assign(v.size(), Scalar(0));
    for (std::size_t i = 0; i < v.size(); ++i) out[i] += t.coeff * v[i];
  }
  return out;
}

int combo_shift2(const std::vector<LemmaTerm>& terms) {
  if (terms.empty()) throw std::invalid_argument("empty lemma combination");
  const LemmaTerm& t = terms.front();
  return t.a.src2 + t.a.shift2 - (t.b ? t.b->src2 : t.a.src2);
}

}  // namespace

IdentityReport check_identity(const LemmaIdentity& id, const Weight& l, int bump, bool relative) {
  IdentityReport r;
  r.name = id.name;
  Grid2 grid = band_grid2(rat(combo_shift2(id.lhs), 2), relative, bump);
  Vector lhs = combo_fingerprint(id.lhs, l, grid);
  std::vector<Vector> cols;
  for (const auto& t : id.rhs) {
    r.printed.push_back(t.coeff);
    LemmaTerm bare = t;
    bare.coeff = Scalar(1);
    cols.push_back(combo_fingerprint({bare}, l, grid));
  }
  Vector residual = lhs;
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < residual.size(); ++i) residual[i] -= r.printed[j] * cols[j][i];
  r.holds = is_zero_vector(residual);

  Matrix a(lhs.size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < lhs.size(); ++i) a(i, j) = cols[j][i];
  LinearSolution sol = solve_linear(a, lhs);
  r.solvable = sol.consistent;
  if (sol.consistent) {
    r.unique = sol.nullspace.empty();
    r.solved = sol.particular;
  }
  return r;
}

SystemReport check_system(const LemmaSystem& sys, const Weight& l, int bump, bool relative) {
  SystemReport r;
  r.name = sys.name;
  r.size = sys.members.size();
  Grid2 grid = band_grid2(rat(combo_shift2(sys.members.front()), 2), relative, bump);
  std::vector<Vector> cols;
  for (const auto& m : sys.members) cols.push_back(combo_fingerprint(m, l, grid));
  Matrix a(cols.front().size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < cols[j].size(); ++i) a(i, j) = cols[j][i];
  r.rank = rank(a);
  if (r.rank < r.size) r.relations = nullspace(a);
  return r;
}

namespace {

OpRef U(int src2, int shift2) { return {src2, shift2}; }
// J_{k2/2}^{-1, l + src2/2}
OpRef J(int k2, int src2) { return {src2, k2 - 2}; }

LemmaTerm cup_t(const Scalar& c, OpRef a, OpRef b) { return {c, a, b}; }
LemmaTerm delta_t(const Scalar& c, OpRef a) { return {c, a, std::nullopt}; }

}  // namespace

std::vector<std::string> lemma_names() { return {"th2", "benfraj1", "benfraj2", "benfraj3", "benfraj4", "benfraj5"}; }

std::vector<LemmaIdentity> lemma_identities(const std::string& lemma, const Weight& l) {
  auto at = [&](int x2) { return l + half(x2); };
  auto zeta = [&](int x2) { return zeta_const(at(x2)); };
  auto alpha = [&](int x2) { return alpha_const(at(x2)); };
  auto beta = [&](int x2) { return beta_const(at(x2)); };
  auto gamma = [&](int x2) { return gamma_const(at(x2)); };
  auto eps = [&](int i, int x2 = 0) { return eps_const(i, at(x2)); };
  const Scalar one(1);

  if (lemma == "th2") {
    return {
        {"th2.3", {cup_t(zeta(0), U(3, 3), U(0, 3))}, {delta_t(one, J(8, 0))}},
        {"th2.7/2", {cup_t(alpha(0), U(3, 4), U(0, 3))}, {delta_t(one, J(9, 0))}},
        {"th2.4", {cup_t(beta(0), U(3, 5), U(0, 3))}, {delta_t(one, J(10, 0))}},
        {"th2.9/2", {cup_t(gamma(0), U(5, 4), U(0, 5))}, {delta_t(one, J(11, 0))}},
    };
  }
  if (lemma == "benfraj1") {
    return {
        {"benfraj1.1",
         {delta_t(xi_const(l).inverse(), J(11, 0))},
         {cup_t(zeta(0).inverse(), U(6, 3), J(8, 0)), cup_t(zeta(3).inverse(), J(8, 3), U(0, 3))}},
        {"benfraj1.2",
         {cup_t(alpha(3).inverse(), J(9, 3), U(0, 3))},
         {cup_t(eps(1) * alpha(0).inverse(), U(7, 3), J(9, 0)), cup_t(eps(2) * zeta(0).inverse(), U(6, 4), J(8, 0)),
          delta_t(eps(3), J(12, 0))}},
        {"benfraj1.3",
         {cup_t(beta(3).inverse(), J(10, 3), U(0, 3))},
         {cup_t(eps(4) * beta(0).inverse(), U(8, 3), J(10, 0)), cup_t(eps(5) * alpha(0).inverse(), U(7, 4), J(9, 0)),
          cup_t(eps(6) * alpha(4).inverse(), J(9, 4), U(0, 4))}},
        {"benfraj1.4",
         {cup_t(alpha(0).inverse(), U(7, 5), J(9, 0))},
         {cup_t(eps(7) * beta(4).inverse(), J(10, 4), U(0, 4)), cup_t(eps(8) * alpha(5).inverse(), J(9, 5), U(0, 5)),
          delta_t(eps(9), J(14, 0))}},
        {"benfraj1.5",
         {cup_t(gamma(4).inverse(), J(11, 4), U(0, 4))},
         {cup_t(eps(10) * beta(0).inverse(), U(8, 5), J(10, 0)), cup_t(eps(11) * beta(5).inverse(), J(10, 5), U(0, 5)),
          cup_t(eps(12) * gamma(0).inverse(), U(9, 4), J(11, 0))}},
    };
  }
  if (lemma == "benfraj3") {
    return {{"benfraj3",
             {cup_t(eps(9), U(12, 4), J(14, 0))},
             {cup_t(eps(13) * (beta(8) * beta(0)).inverse(), J(10, 8), J(10, 0)),
              cup_t(eps(14) * (alpha(9) * gamma(0)).inverse(), J(9, 9), J(11, 0)),
              cup_t(eps(15) * (alpha(0) * gamma(7)).inverse(), J(11, 7), J(9, 0)),
              cup_t(eps(16) * eps(9, 4), J(14, 4), U(0, 4)), delta_t(eps(17), J(18, 0))}}};
  }
  if (lemma == "benfraj2" || lemma == "benfraj4" || lemma == "benfraj5") return {};
  throw std::invalid_argument("unknown lemma: " + lemma);
}

std::vector<LemmaSystem> lemma_systems(const std::string& lemma, const Weight& l) {
  auto at = [&](int x2) { return l + half(x2); };
  auto eps = [&](int i, int x2 = 0) { return eps_const(i, at(x2)); };
  const Scalar one(1);
  auto c = [&](OpRef a, OpRef b) { return LemmaCombo{cup_t(one, a, b)}; };
  auto d = [&](OpRef a) { return LemmaCombo{delta_t(one, a)}; };

  if (lemma == "benfraj2") {
    return {
        {"benfraj2.1", {c(U(7, 3), J(9, 0)), c(U(6, 4), J(8, 0)), c(J(8, 4), U(0, 4)), d(J(12, 0))}},
        {"benfraj2.2",
         {c(U(8, 3), J(10, 0)), c(U(7, 4), J(9, 0)), c(J(9, 4), U(0, 4)), c(U(6, 5), J(8, 0)), c(J(8, 5), U(0, 5)),
          d(J(13, 0))}},
        {"benfraj2.3",
         {c(U(9, 3), J(11, 0)), c(J(11, 3), U(0, 3)), c(U(8, 4), J(10, 0)), c(J(10, 4), U(0, 4)),
          c(J(9, 5), U(0, 5)), d(J(14, 0))}},
        {"benfraj2.4", {c(U(8, 5), J(10, 0)), c(J(10, 5), U(0, 5)), c(U(9, 4), J(11, 0)), d(J(15, 0))}},
        {"benfraj2.5", {c(U(9, 5), J(11, 0)), c(J(11, 5), U(0, 5)), d(J(16, 0))}},
    };
  }
  if (lemma == "benfraj4") {
    return {
        {"benfraj4.1",
         {d(J(14, 0)),
          {cup_t((zeta_const(at(6)) * zeta_const(l)).inverse(), J(8, 6), J(8, 0)),
           cup_t(xi_const(l).inverse(), U(9, 3), J(11, 0)), cup_t(xi_const(at(3)).inverse(), J(11, 3), U(0, 3))}}},
        {"benfraj4.2",
         {d(J(15, 0)), c(J(8, 7), J(9, 0)), c(U(10, 3), J(12, 0)), c(U(9, 4), J(11, 0)),
          {cup_t((zeta_const(l) * alpha_const(at(6))).inverse(), J(9, 6), J(8, 0)),
           cup_t(eps(3, 3), J(12, 3), U(0, 3))}}},
        {"benfraj4.3",
         {d(J(16, 0)), c(J(9, 7), J(9, 0)), c(J(8, 8), J(10, 0)), c(J(10, 6), J(8, 0)), c(J(12, 4), U(0, 4)),
          c(U(9, 5), J(11, 0)), c(U(10, 4), J(12, 0))}},
        {"benfraj4.4",
         {d(J(17, 0)), c(J(10, 7), J(9, 0)), c(J(9, 8), J(10, 0)), c(J(11, 6), J(8, 0)), c(U(12, 3), J(14, 0)),
          c(J(12, 5), U(0, 5)), {cup_t(eps(3), U(10, 5), J(12, 0)), cup_t(eps(9, 3), J(14, 3), U(0, 3))}}},
        {"benfraj4.5",
         {d(J(18, 0)), c(J(10, 8), J(10, 0)), c(J(9, 9), J(11, 0)), c(J(11, 7), J(9, 0)), c(J(14, 4), U(0, 4))}},
        {"benfraj4.6",
         {d(J(19, 0)), c(J(10, 9), J(11, 0)), c(J(11, 8), J(10, 0)), c(J(14, 5), U(0, 5)), c(U(12, 5), J(14, 0))}},
        {"benfraj4.7", {d(J(20, 0)), c(J(11, 9), J(11, 0))}},
    };
  }
  if (lemma == "benfraj5") {
    return {
        {"benfraj5.1",
         {d(J(21, 0)),
          {cup_t(alpha_const(at(12)).inverse() * eps(9), J(9, 12), J(14, 0)), cup_t(-eps(17), U(16, 3), J(18, 0))}}},
        {"benfraj5.2",
         {d(J(22, 0)), c(J(18, 4), U(0, 4)),
          {cup_t(eps(17), U(16, 4), J(18, 0)),
           cup_t(Scalar(rat(1, 3)) * beta_const(at(12)).inverse() * eps(9), J(10, 12), J(14, 0))}}},
        {"benfraj5.3",
         {d(J(23, 0)), c(J(14, 9), J(11, 0)), c(J(18, 5), U(0, 5)),
          {cup_t(eps(9) * gamma_const(at(12)).inverse(), J(11, 12), J(14, 0)), cup_t(-eps(17), U(16, 5), J(18, 0))}}},
    };
  }
  if (lemma == "th2" || lemma == "benfraj1" || lemma == "benfraj3") return {};
  throw std::invalid_argument("unknown lemma: " + lemma);
}

}  // namespace kdef
