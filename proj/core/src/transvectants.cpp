#include "kdef/transvectants.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "kdef/errors.hpp"

namespace kdef {

int integer_part(const Rational& k) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), k.get_num_mpz_t(), k.get_den_mpz_t());
  return static_cast<int>(f.get_si());
}

Scalar gamma_coeff(int i, int j, const Rational& k, const Weight& tau, const Weight& lambda) {
  int n = integer_part(k);
  Scalar g = binomial_general(2 * tau + Scalar(static_cast<long>(n)), static_cast<unsigned>(j)) *
             binomial_general(2 * lambda + Scalar(static_cast<long>(n)), static_cast<unsigned>(i));
  return j % 2 ? -g : g;
}

const Scalar& ClassicalBilin::coeff(int i) const {
  static const Scalar kZero;
  return i >= 0 && i < static_cast<int>(c.size()) ? c[i] : kZero;
}

bool ClassicalBilin::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](const Scalar& s) { return s.is_zero(); });
}

XPoly ClassicalBilin::apply(const XPoly& phi, const XPoly& psi) const {
  XPoly r;
  for (int i = 0; i < static_cast<int>(c.size()); ++i)
    if (!c[i].is_zero()) r += (phi.derivative(i) * psi.derivative(order - i)).scaled(c[i]);
  return r;
}

ClassicalBilin ClassicalBilin::scaled(const Scalar& s) const {
  ClassicalBilin r = *this;
  for (auto& x : r.c) x *= s;
  return r;
}

std::string ClassicalBilin::str() const {
  std::string s;
  for (int i = order; i >= 0; --i) {
    if (coeff(i).is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + coeff(i).str() + ")*phi^(" + std::to_string(i) + ")*psi^(" + std::to_string(order - i) + ")";
  }
  return s.empty() ? "0" : s;
}

ClassicalBilin transvectant(int k, const Weight& tau, const Weight& lambda) {
  ClassicalBilin b{tau, lambda, tau + lambda + Scalar(static_cast<long>(k)), k, {}};
  for (int i = 0; i <= k; ++i) b.c.push_back(gamma_coeff(i, k - i, Rational(k - 1), tau, lambda));
  return b;
}

bool satisfies_recurrence(const ClassicalBilin& b) {
  for (int i = 0; i < b.order; ++i) {
    int j = b.order - 1 - i;
    Scalar lhs = Scalar(static_cast<long>(i + 1)) * (Scalar(static_cast<long>(i)) + 2 * b.tau) * b.coeff(i + 1) +
                 Scalar(static_cast<long>(j + 1)) * (Scalar(static_cast<long>(j)) + 2 * b.lambda) * b.coeff(i);
    if (!lhs.is_zero()) return false;
  }
  return true;
}

namespace {

XPoly classical_lie(const XPoly& x, const Weight& w, const XPoly& f) {
  return x * f.derivative() + (x.derivative() * f).scaled(w);
}

XPoly cocycle_defect(const ClassicalBilin& c, const XPoly& x, const XPoly& y, const XPoly& f) {
  XPoly xy = x * y.derivative() - x.derivative() * y;
  return classical_lie(x, c.dst, c.apply(y, f)) - c.apply(y, classical_lie(x, c.lambda, f)) -
         classical_lie(y, c.dst, c.apply(x, f)) + c.apply(x, classical_lie(y, c.lambda, f)) - c.apply(xy, f);
}

}  // namespace

bool check_sl2_invariance(const ClassicalBilin& b, int max_degree) {
  for (int e = 0; e <= 2; ++e) {
    XPoly x = XPoly::monomial(e);
    for (int d1 = 0; d1 <= max_degree; ++d1)
      for (int d2 = 0; d2 <= max_degree; ++d2) {
        XPoly phi = XPoly::monomial(d1), psi = XPoly::monomial(d2);
        XPoly lhs = classical_lie(x, b.dst, b.apply(phi, psi));
        XPoly rhs = b.apply(classical_lie(x, b.tau, phi), psi) + b.apply(phi, classical_lie(x, b.lambda, psi));
        if (lhs != rhs) return false;
      }
  }
  return true;
}

std::vector<ClassicalBilin> transvectant_singular(int k, const Rational& tau, const Rational& lambda) {
  Matrix a(static_cast<std::size_t>(std::max(k, 1)), static_cast<std::size_t>(k) + 1);
  for (int i = 0; i < k; ++i) {
    int j = k - 1 - i;
    a(i, i + 1) = Scalar(Rational((i + 1) * (i + 2 * tau)));
    a(i, i) = Scalar(Rational((j + 1) * (j + 2 * lambda)));
  }
  std::vector<ClassicalBilin> out;
  Scalar t(tau), l(lambda);
  for (auto& v : nullspace(a)) out.push_back(ClassicalBilin{t, l, t + l + Scalar(static_cast<long>(k)), k, v});
  return out;
}

std::vector<ClassicalBilin> vanishing_subspace(const std::vector<ClassicalBilin>& space, int max_i) {
  if (space.empty()) return {};
  const int order = space.front().order;
  int rows = std::min(max_i, order) + 1;
  Matrix a(static_cast<std::size_t>(rows), space.size());
  for (int i = 0; i < rows; ++i)
    for (std::size_t s = 0; s < space.size(); ++s) a(i, s) = space[s].coeff(i);
  std::vector<ClassicalBilin> out;
  for (const auto& v : nullspace(a)) {
    ClassicalBilin b = space.front();
    for (auto& x : b.c) x = Scalar();
    for (std::size_t s = 0; s < space.size(); ++s)
      for (int i = 0; i <= order; ++i) b.c[i] += v[s] * space[s].coeff(i);
    out.push_back(std::move(b));
  }
  return out;
}

BilinOp supertransvectant(const Rational& k, const Weight& tau, const Weight& lambda) {
  const Rational twice = 2 * k;
  if (k < 0 || twice.get_den() != 1) throw std::invalid_argument("supertransvectant order must be a nonnegative half-integer");
  const int n = integer_part(k);
  const bool semi = mpz_odd_p(twice.get_num_mpz_t());
  BilinOp b(tau, lambda, tau + lambda + Scalar(k), semi ? 1 : 0);
  if (k == 0) {
    b.add(Scalar(1), Scalar(), 0, 0);
    return b;
  }
  if (semi) {
    for (int i = 0; i <= n; ++i) {
      int j = n - i;
      Scalar g = gamma_coeff(i, j, k, tau, lambda) * Scalar(sign(i + j));
      b.add_signed(g * (2 * tau + Scalar(static_cast<long>(n - j))), 0, true, false, 2 * i, 2 * j + 1);
      b.add_signed(-g * (2 * lambda + Scalar(static_cast<long>(n - i))), 0, false, false, 2 * i + 1, 2 * j);
    }
  } else {
    Rational km1 = k - 1;
    for (int i = 0; i <= n - 1; ++i) {
      int j = n - 1 - i;
      b.add_signed(gamma_coeff(i, j, km1, tau, lambda) * Scalar(sign(i + j)), 0, true, false, 2 * i + 1, 2 * j + 1);
    }
    for (int i = 0; i <= n; ++i) {
      int j = n - i;
      b.add_signed(-gamma_coeff(i, j, km1, tau, lambda) * Scalar(sign(i + j)), 0, false, false, 2 * i, 2 * j);
    }
  }
  return b;
}

int slot_degree_bound(int eta_order, int bump) { return std::max(eta_order, 0) / 2 + 1 + 2 + bump; }

namespace {

void append_coeffs(const SuperPoly& p, int len, Vector& out) {
  for (int d = 0; d < len; ++d) out.push_back(p.ev().coeff(d));
  for (int d = 0; d < len; ++d) out.push_back(p.od().coeff(d));
  if (p.degree() >= len) throw std::logic_error("fingerprint length too small");
}

SuperPoly invariance_defect(const BilinOp& b, const ContactGen& x, const SuperPoly& f, int pf,
                            const SuperPoly& g) {
  SuperPoly lhs = lie_density(x, {b.apply(f, g), b.dst()}).f;
  SuperPoly r1 = b.apply(lie_density(x, {f, b.w1()}).f, g);
  SuperPoly r2 = b.apply(f, lie_density(x, {g, b.w2()}).f);
  SuperPoly rhs = r1 + r2.scaled(Scalar(sign(x.parity() * pf)));
  return lhs - rhs.scaled(Scalar(sign(x.parity() * b.parity())));
}

}  // namespace

Vector invariance_fingerprint(const BilinOp& b, int bump) {
  return invariance_fingerprint_grid(b, slot_degree_bound(b.max_k(), bump), slot_degree_bound(b.max_m(), bump));
}

Vector invariance_fingerprint_grid(const BilinOp& b, int df, int dg) {
  const int len = df + dg + 3;
  Vector out;
  for (const auto& x : osp_generators())
    for (int d1 = 0; d1 <= df; ++d1)
      for (int s1 = 0; s1 < 2; ++s1)
        for (int d2 = 0; d2 <= dg; ++d2)
          for (int s2 = 0; s2 < 2; ++s2)
            append_coeffs(invariance_defect(b, x, SuperPoly::monomial(d1, s1), s1, SuperPoly::monomial(d2, s2)), len,
                          out);
  return out;
}

bool check_invariance(const BilinOp& b, std::string* witness, int bump) {
  const int df = slot_degree_bound(b.max_k(), bump), dg = slot_degree_bound(b.max_m(), bump);
  for (const auto& x : osp_generators())
    for (int d1 = 0; d1 <= df; ++d1)
      for (int s1 = 0; s1 < 2; ++s1)
        for (int d2 = 0; d2 <= dg; ++d2)
          for (int s2 = 0; s2 < 2; ++s2) {
            SuperPoly f = SuperPoly::monomial(d1, s1), g = SuperPoly::monomial(d2, s2);
            SuperPoly d = invariance_defect(b, x, f, s1, g);
            if (!d.is_zero()) {
              if (witness) *witness = "X_{" + x.str() + "} on (" + f.str() + ", " + g.str() + "): " + d.str();
              return false;
            }
          }
  return true;
}

std::vector<BilinOp> invariant_space(const Rational& k, const Weight& tau, const Weight& lambda, int bump) {
  const Rational twice = 2 * k;
  if (k < 0 || twice.get_den() != 1) throw std::invalid_argument("order must be a nonnegative half-integer");
  const int n = static_cast<int>(twice.get_num().get_si());
  const int parity = n % 2;
  const Weight dst = tau + lambda + Scalar(k);
  std::vector<BilinOp> basis;
  for (int s = 0; s < 2; ++s)
    for (int k1 = 0; k1 <= n + s; ++k1) {
      BilinOp b(tau, lambda, dst, parity);
      b.add(s ? Scalar() : Scalar(1), s ? Scalar(1) : Scalar(), k1, n + s - k1);
      basis.push_back(std::move(b));
    }
  BilinOp span(tau, lambda, dst, parity);
  for (const auto& b : basis) span += b;
  const int df = slot_degree_bound(span.max_k(), bump), dg = slot_degree_bound(span.max_m(), bump);
  std::vector<Vector> columns;
  for (const auto& b : basis) {
    columns.push_back(invariance_fingerprint_grid(b, df, dg));
  }
  Matrix a(columns.front().size(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (std::size_t i = 0; i < columns[j].size(); ++i) a(i, j) = columns[j][i];
  std::vector<BilinOp> out;
  for (const auto& v : nullspace(a)) {
    BilinOp b(tau, lambda, dst, parity);
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (!v[j].is_zero()) b += basis[j].scaled(v[j]);
    out.push_back(std::move(b));
  }
  return out;
}

namespace {

XPoly scaled_monomial(int d) {
  Rational f(1);
  for (int i = 2; i <= d; ++i) f *= i;
  return XPoly::monomial(d, Scalar(Rational(1) / f));
}

// Block (component a of F, component b of G) -> output component c, read off as
// a classical bilinear operator of the given order.
ClassicalBilin extract_block(const BilinOp& j, int a, int b, int c, const Weight& tau, const Weight& lambda,
                             const Weight& dst, int order) {
  ClassicalBilin out{tau, lambda, dst, std::max(order, 0), {}};
  for (int total = 0; total <= std::max(order, 0) + 2; ++total)
    for (int i = 0; i <= total; ++i) {
      XPoly phi = scaled_monomial(i), psi = scaled_monomial(total - i);
      SuperPoly f = a ? SuperPoly(XPoly(), phi) : SuperPoly(phi, XPoly());
      SuperPoly g = b ? SuperPoly(XPoly(), psi) : SuperPoly(psi, XPoly());
      SuperPoly r = j.apply(f, g);
      Scalar v = (c ? r.od() : r.ev()).coeff(0);
      if (total == order) {
        out.c.push_back(v);
      } else if (!v.is_zero()) {
        throw NotProportional("block is not homogeneous of order " + std::to_string(order));
      }
    }
  return out;
}

Scalar block_constant(const ClassicalBilin& block, const ClassicalBilin& expected) {
  Scalar c;
  bool found = false;
  for (int i = 0; i <= expected.order; ++i) {
    if (expected.coeff(i).is_zero()) continue;
    c = block.coeff(i) / expected.coeff(i);
    found = true;
    break;
  }
  if (!found) {
    if (!block.is_zero()) throw NotProportional("nonzero block where the transvectant vanishes");
    return Scalar();
  }
  if (!(expected.scaled(c) == block)) throw NotProportional("block is not proportional to " + expected.str());
  return c;
}

}  // namespace

RestrictionComponents restriction_components(const BilinOp& j) {
  Scalar ks = j.dst() - j.w1() - j.w2();
  if (!ks.is_rational()) throw std::invalid_argument("weights do not determine a rational order");
  Rational k = ks.to_rational();
  const Weight& t = j.w1();
  const Weight& l = j.w2();
  Weight th = t + half(1), lh = l + half(1);
  const Weight& mu = j.dst();
  Weight muh = mu + half(1);
  RestrictionComponents rc;
  rc.integer = k.get_den() == 1;
  int n = integer_part(k);
  struct Spec {
    int a, b, c, order;
    Weight tau, lambda, dst;
  };
  std::vector<Spec> specs;
  if (rc.integer) {
    specs = {{0, 0, 0, n, t, l, mu}, {1, 1, 0, n - 1, th, lh, mu}, {0, 1, 1, n, t, lh, muh}, {1, 0, 1, n, th, l, muh}};
  } else {
    specs = {{0, 1, 0, n, t, lh, mu}, {1, 0, 0, n, th, l, mu}, {0, 0, 1, n + 1, t, l, muh}, {1, 1, 1, n, th, lh, muh}};
  }
  for (int i = 0; i < 4; ++i) {
    const Spec& s = specs[i];
    rc.blocks[i] = extract_block(j, s.a, s.b, s.c, s.tau, s.lambda, s.dst, s.order);
    if (s.order < 0) {
      if (!rc.blocks[i].is_zero()) throw NotProportional("nonzero block of negative order");
      rc.constants[i] = Scalar();
      continue;
    }
    rc.constants[i] = block_constant(rc.blocks[i], transvectant(s.order, s.tau, s.lambda));
  }
  return rc;
}

std::optional<Scalar> proportionality(const BilinOp& a, const BilinOp& b) {
  if (b.is_zero()) return a.is_zero() ? std::optional<Scalar>(Scalar()) : std::nullopt;
  const auto& [key, coef] = *b.terms().begin();
  auto it = a.terms().find(key);
  if (it == a.terms().end()) return a.is_zero() ? std::optional<Scalar>(Scalar()) : std::nullopt;
  Scalar c = coef.a.is_zero() ? it->second.b / coef.b : it->second.a / coef.a;
  if (a == b.scaled(c)) return c;
  return std::nullopt;
}

bool classical_is_cocycle(const ClassicalBilin& c, int max_degree, std::string* witness) {
  // c(X)(f) = sum c_i X^(i) f^(order-i); slots (vector field, density).
  for (int a = 0; a <= max_degree; ++a)
    for (int b = a + 1; b <= max_degree; ++b)
      for (int d = 0; d <= max_degree; ++d) {
        if (!cocycle_defect(c, XPoly::monomial(a), XPoly::monomial(b), XPoly::monomial(d)).is_zero()) {
          if (witness)
            *witness = "X = x^" + std::to_string(a) + ", Y = x^" + std::to_string(b) + ", f = x^" + std::to_string(d);
          return false;
        }
      }
  return true;
}

std::vector<ClassicalBilin> classical_cocycle_space(const Weight& lambda, const Weight& dst, int order,
                                                    bool sl2_relative, int max_degree) {
  const int first = sl2_relative ? 3 : 0;
  if (order < first) return {};
  std::vector<Vector> columns;
  for (int u = first; u <= order; ++u) {
    ClassicalBilin c{Scalar(-1), lambda, dst, order, std::vector<Scalar>(static_cast<std::size_t>(order) + 1)};
    c.c[u] = Scalar(1);
    Vector col;
    for (int a = 0; a <= max_degree; ++a)
      for (int b = a + 1; b <= max_degree; ++b)
        for (int d = 0; d <= max_degree; ++d) {
          XPoly r = cocycle_defect(c, XPoly::monomial(a), XPoly::monomial(b), XPoly::monomial(d));
          for (int e = 0; e <= 2 * max_degree; ++e) col.push_back(r.coeff(e));
        }
    columns.push_back(std::move(col));
  }
  Matrix m(columns.front().size(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (std::size_t i = 0; i < columns[j].size(); ++i) m(i, j) = columns[j][i];
  std::vector<ClassicalBilin> out;
  for (const auto& v : nullspace(m)) {
    ClassicalBilin c{Scalar(-1), lambda, dst, order, std::vector<Scalar>(static_cast<std::size_t>(order) + 1)};
    for (std::size_t j = 0; j < v.size(); ++j) c.c[first + j] = v[j];
    out.push_back(std::move(c));
  }
  return out;
}

bool classical_vanishes_on_sl2(const ClassicalBilin& c) {
  for (int e = 0; e <= 2; ++e)
    for (int d = 0; d <= c.order + 1; ++d)
      if (!c.apply(XPoly::monomial(e), XPoly::monomial(d)).is_zero()) return false;
  return true;
}

namespace {

Scalar sqrt19_from_root(const Weight& a) {
  const ContextPtr& ctx = a.context();
  if (!ctx || !ctx->algebraic() || !(2 * a * a + 10 * a + 3).is_zero())
    throw UnknownName("weight must be a root of 2a^2 + 10a + 3 in an algebraic context");
  return -(2 * a + 5);
}

ClassicalBilin classical(const Weight& lambda, const Weight& dst, int order,
                         const std::vector<std::pair<int, Scalar>>& terms) {
  ClassicalBilin b{Scalar(-1), lambda, dst, order, std::vector<Scalar>(static_cast<std::size_t>(order) + 1)};
  for (const auto& [i, c] : terms) b.c[i] += c;
  return b;
}

}  // namespace

std::vector<std::string> classical_cocycle_names() {
  return {"C[l,l]", "C[0,1]",   "C~[0,1]",  "C[l,l+2]", "C[l,l+3]", "C[l,l+4]", "C[0,5]",  "C[-4,1]",
          "C[a,a+6]", "A[l,l+2]", "A[l,l+3]", "A[l,l+4]", "A[0,5]",   "A[-4,1]",  "A[a,a+6]"};
}

ClassicalBilin classical_cocycle(const std::string& name, const Weight& l) {
  using T = std::vector<std::pair<int, Scalar>>;
  auto S = [](long n, long d = 1) { return Scalar(rat(n, d)); };
  if (name == "C[l,l]") return classical(l, l, 1, T{{1, S(1)}});
  if (name == "C[0,1]") return classical(S(0), S(1), 2, T{{2, S(1)}});
  if (name == "C~[0,1]") return classical(S(0), S(1), 2, T{{2, S(1)}, {1, S(1)}});
  if (name == "C[l,l+2]") return classical(l, l + 2, 3, T{{3, S(1)}, {2, S(2)}});
  if (name == "C[l,l+3]") return classical(l, l + 3, 4, T{{3, S(1)}, {2, S(1)}});
  if (name == "C[l,l+4]") return classical(l, l + 4, 5, T{{5, -l}, {4, S(1)}, {3, S(-6)}, {2, S(-4)}});
  if (name == "C[0,5]") return classical(S(0), S(5), 6, T{{5, S(2)}, {4, S(-5)}, {3, S(10)}, {2, S(5)}});
  if (name == "C[-4,1]")
    return classical(S(-4), S(1), 7 - 1, T{{6, S(12)}, {5, S(22)}, {4, S(5)}, {3, S(-10)}, {2, S(-5)}});
  if (name == "A[l,l+2]") return classical(l, l + 2, 3, T{{3, S(1)}});
  if (name == "A[l,l+3]") return classical(l, l + 3, 4, T{{3, S(1)}, {4, -l / 2}});
  if (name == "A[l,l+4]")
    return classical(l, l + 4, 5, T{{3, S(1)}, {4, -(2 * l + 1) / 2}, {5, l * (2 * l + 1) / 10}});
  if (name == "A[0,5]") return classical(S(0), S(5), 6, T{{5, S(-3)}, {4, S(15)}, {3, S(-10)}});
  if (name == "A[-4,1]") return classical(S(-4), S(1), 6, T{{6, S(28)}, {5, S(63)}, {4, S(45)}, {3, S(10)}});
  if (name == "C[a,a+6]" || name == "A[a,a+6]") {
    Scalar r = sqrt19_from_root(l);
    Scalar alpha = -(22 + 5 * r) / 4, beta = (31 + 7 * r) / 2, gamma = (25 + 7 * r) / 2, tau = -2 + r;
    if (name[0] == 'C')
      return classical(l, l + 6, 7,
                       T{{7, alpha}, {6, -beta}, {5, -gamma}, {4, S(-5)}, {3, S(5)}, {2, S(2)}});
    return classical(l, l + 6, 7, T{{7, alpha}, {6, -14 * beta}, {5, -126 * gamma}, {4, -210 * tau}, {3, S(210)}});
  }
  throw UnknownName("unknown classical cocycle '" + name + "'");
}

namespace {

// c (-1)^{sg p(G)} D_G D_F where D_G is G^(ng) or eta_bar(G^(ng)) (eg = 1), likewise for F.
void term(BilinOp& b, const Scalar& c, bool sg, int ng, int eg, int nf, int ef) {
  b.add_signed(c * Scalar(sign(ng + nf)), 0, sg, false, 2 * ng + eg, 2 * nf + ef);
}

Rational require_rational(const Weight& w, const std::string& name) {
  if (!w.is_rational()) throw UnknownName(name + " requires a rational weight");
  return w.to_rational();
}

}  // namespace

std::vector<std::string> super_cocycle_names() {
  return {"U[l,l]",    "U[l,l+3/2]", "U[l,l+2]",   "U[l,l+5/2]", "U[l,l+3]",
          "U[l,l+4]",  "U[0,1/2]",   "U~[0,1/2]",  "U[-1/2,1]",  "U[-1,3/2]"};
}

NamedCocycle super_cocycle(const std::string& name, const Weight& lambda) {
  Scalar l = lambda;
  auto make = [&](const Weight& src, const Weight& dst, int parity, bool osp) {
    return NamedCocycle{name, BilinOp(Scalar(-1), src, dst, parity), src, dst, parity, osp};
  };
  auto excluded = [&](const Rational& bad) {
    if (l.is_rational() && l.to_rational() == bad)
      throw UnknownName(name + " is not a nontrivial cocycle at l = " + l.str());
  };
  const Scalar one(1);
  if (name == "U[l,l]") {
    NamedCocycle c = make(l, l, 0, false);
    term(c.body, one, false, 1, 0, 0, 0);
    return c;
  }
  if (name == "U[l,l+3/2]") {
    excluded(rat(-1, 2));
    NamedCocycle c = make(l, l + half(3), 1, true);
    term(c.body, one, false, 2, 1, 0, 0);
    return c;
  }
  if (name == "U[l,l+2]") {
    NamedCocycle c = make(l, l + 2, 0, true);
    term(c.body, Scalar(rat(2, 3)) * l, false, 3, 0, 0, 0);
    term(c.body, -one, true, 2, 1, 0, 1);
    return c;
  }
  if (name == "U[l,l+5/2]") {
    excluded(rat(-1));
    NamedCocycle c = make(l, l + half(5), 1, true);
    term(c.body, 2 * l, false, 3, 1, 0, 0);
    term(c.body, Scalar(-3), false, 2, 1, 1, 0);
    term(c.body, -one, true, 3, 0, 0, 1);
    return c;
  }
  if (name == "U[l,l+3]") {
    Rational v = require_rational(l, name);
    if (v != 0 && v != rat(-5, 2)) throw UnknownName(name + " is only a cocycle for l in {0, -5/2}");
    NamedCocycle c = make(l, l + 3, 0, true);
    Scalar a = (2 * l + 1) / 3;
    term(c.body, one, true, 2, 1, 1, 1);
    term(c.body, -a, true, 3, 1, 0, 1);
    term(c.body, -a, false, 3, 0, 1, 0);
    term(c.body, l * (2 * l + 1) / 6, false, 4, 0, 0, 0);
    return c;
  }
  if (name == "U[l,l+4]") {
    if (!(2 * l * l + 7 * l + 2).is_zero())
      throw UnknownName(name + " is only a cocycle for roots of 2l^2 + 7l + 2");
    NamedCocycle c = make(l, l + 4, 0, true);
    Scalar a = 2 * (l + 1) / 3, b = (l + 1) * (2 * l + 1) / 6, d = l * (l + 1) * (2 * l + 1) / 15;
    term(c.body, one, true, 2, 1, 2, 1);
    term(c.body, -2 * a, true, 3, 1, 1, 1);
    term(c.body, -a, false, 3, 0, 2, 0);
    term(c.body, b, true, 4, 1, 0, 1);
    term(c.body, 2 * b, false, 4, 0, 1, 0);
    term(c.body, -d, false, 5, 0, 0, 0);
    return c;
  }
  if (name == "U[0,1/2]" || name == "U~[0,1/2]") {
    NamedCocycle c = make(Scalar(0), half(1), 1, false);
    term(c.body, one, false, 1, 1, 0, 0);
    if (name[1] == '~') term(c.body, one, true, 1, 0, 0, 1);
    return c;
  }
  if (name == "U[-1/2,1]") {
    NamedCocycle c = make(half(-1), Scalar(1), 1, false);
    term(c.body, one, false, 2, 1, 0, 0);
    term(c.body, one, false, 1, 1, 1, 0);
    term(c.body, one, true, 2, 0, 0, 1);
    return c;
  }
  if (name == "U[-1,3/2]") {
    NamedCocycle c = make(Scalar(-1), half(3), 1, false);
    term(c.body, one, true, 3, 0, 0, 1);
    term(c.body, Scalar(2), true, 2, 0, 1, 1);
    term(c.body, Scalar(2), false, 2, 1, 1, 0);
    term(c.body, one, false, 1, 1, 2, 0);
    return c;
  }
  throw UnknownName("unknown super cocycle '" + name + "'");
}

NamedCocycle super_cocycle(const Weight& src, const Weight& dst) {
  Scalar shift = dst - src;
  if (!shift.is_rational()) throw UnknownName("weight difference is not rational");
  Rational s = shift.to_rational();
  if (src.is_rational()) {
    Rational l = src.to_rational();
    if (l == 0 && s == rat(1, 2)) return super_cocycle("U[0,1/2]", src);
    if (l == rat(-1, 2) && s == rat(3, 2)) return super_cocycle("U[-1/2,1]", src);
    if (l == -1 && s == rat(5, 2)) return super_cocycle("U[-1,3/2]", src);
  }
  if (s == 0) return super_cocycle("U[l,l]", src);
  if (s == rat(3, 2)) return super_cocycle("U[l,l+3/2]", src);
  if (s == 2) return super_cocycle("U[l,l+2]", src);
  if (s == rat(5, 2)) return super_cocycle("U[l,l+5/2]", src);
  if (s == 3) return super_cocycle("U[l,l+3]", src);
  if (s == 4) return super_cocycle("U[l,l+4]", src);
  throw UnknownName("no cataloged cocycle from " + src.str() + " to " + dst.str());
}

namespace {

bool is_value(const Scalar& l, const Rational& v) { return l.is_rational() && l.to_rational() == v; }

}  // namespace

int h1_dim_table(const Scalar& lambda, const Scalar& mu, H1Variant variant) {
  Scalar shift = mu - lambda;
  if (!shift.is_rational()) return 0;
  Rational s = shift.to_rational();
  const Scalar& l = lambda;
  bool root19 = (2 * l * l + 10 * l + 3).is_zero();
  bool root33 = (2 * l * l + 7 * l + 2).is_zero();
  switch (variant) {
    case H1Variant::VectPlain:
      if (is_value(l, 0) && s == 1) return 2;
      if (s == 0 || s == 2 || s == 3 || s == 4) return 1;
      if (s == 5 && (is_value(l, 0) || is_value(l, -4))) return 1;
      if (s == 6 && root19) return 1;
      return 0;
    case H1Variant::VectSl2:
      if (s == 2 && !is_value(l, rat(-1, 2))) return 1;
      if (s == 3 && !is_value(l, -1)) return 1;
      if (s == 4 && !is_value(l, rat(-3, 2))) return 1;
      if (s == 5 && (is_value(l, 0) || is_value(l, -4))) return 1;
      if (s == 6 && root19) return 1;
      return 0;
    case H1Variant::KPlain:
      if (is_value(l, 0) && s == rat(1, 2)) return 2;
      if (s == 0 || s == rat(3, 2) || s == 2 || s == rat(5, 2)) return 1;
      if (s == 3 && (is_value(l, 0) || is_value(l, rat(-5, 2)))) return 1;
      if (s == 4 && root33) return 1;
      return 0;
    case H1Variant::KOsp:
      if (s == rat(3, 2) && !is_value(l, rat(-1, 2))) return 1;
      if (s == 2) return 1;
      if (s == rat(5, 2) && !is_value(l, -1)) return 1;
      if (s == 3 && (is_value(l, 0) || is_value(l, rat(-5, 2)))) return 1;
      if (s == 4 && root33) return 1;
      return 0;
  }
  return 0;
}

}  // namespace kdef
