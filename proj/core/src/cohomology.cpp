#include "kdef/cohomology.hpp"

#include <algorithm>
#include <stdexcept>

#include "kdef/errors.hpp"

namespace kdef {

SuperPoly unit_monomial(int unit) { return SuperPoly::monomial(unit / 2, unit % 2); }

ContactGen unit_generator(int unit) { return ContactGen(unit_monomial(unit), unit % 2); }

Cochain1 Cochain1::from_bilin(const BilinOp& body) {
  Cochain1 c(body.w2(), body.dst(), body.parity(),
             [body](const ContactGen& g, const SuperPoly& f) { return body.apply(g.f(), f); });
  c.body_ = body;
  return c;
}

SuperPoly Cochain1::operator()(const ContactGen& g, const SuperPoly& f) const {
  return eval_ ? eval_(g, f) : SuperPoly();
}

Cochain1 Cochain1::scaled(const Scalar& s) const {
  Cochain1 c = *this;
  Eval e = eval_;
  c.eval_ = [e, s](const ContactGen& g, const SuperPoly& f) { return e ? e(g, f).scaled(s) : SuperPoly(); };
  if (body_) c.body_ = body_->scaled(s);
  return c;
}

Cochain2 Cochain2::zero(const Weight& src, const Weight& dst, int parity) {
  return Cochain2(src, dst, parity, [](const ContactGen&, const ContactGen&, const SuperPoly&) { return SuperPoly(); });
}

SuperPoly Cochain2::operator()(const ContactGen& g, const ContactGen& h, const SuperPoly& f) const {
  return eval_ ? eval_(g, h, f) : SuperPoly();
}

Cochain2 Cochain2::scaled(const Scalar& s) const {
  Eval e = eval_;
  return Cochain2(src_, dst_, parity_, [e, s](const ContactGen& g, const ContactGen& h, const SuperPoly& f) {
    return e ? e(g, h, f).scaled(s) : SuperPoly();
  });
}

Cochain2 linear_combination(const std::vector<std::pair<Scalar, Cochain2>>& terms) {
  if (terms.empty()) throw std::invalid_argument("empty linear combination");
  const Cochain2& first = terms.front().second;
  for (const auto& [c, w] : terms)
    if (!(w.src() == first.src()) || !(w.dst() == first.dst()))
      throw WeightMismatch("linear combination of cochains with different weights");
  return Cochain2(first.src(), first.dst(), first.parity(),
                  [terms](const ContactGen& g, const ContactGen& h, const SuperPoly& f) {
                    SuperPoly r;
                    for (const auto& [c, w] : terms)
                      if (!c.is_zero()) r += w(g, h, f).scaled(c);
                    return r;
                  });
}

SuperPoly act_on_value(const ContactGen& g, const Weight& src, const Weight& dst, int parity_a,
                       const std::function<SuperPoly(const SuperPoly&)>& a, const SuperPoly& f) {
  SuperPoly first = lie_density(g, {a(f), dst}).f;
  SuperPoly second = a(lie_density(g, {f, src}).f);
  return first - second.scaled(Scalar(sign(g.parity() * parity_a)));
}

Cochain1 delta0(const LinOp& a) {
  if (!a.translation_invariant()) throw NotTranslationInvariant("delta0 needs constant coefficients");
  const int pa = a.parity();
  return Cochain1(a.src(), a.dst(), pa, [a, pa](const ContactGen& g, const SuperPoly& f) {
    SuperPoly v = act_on_value(g, a.src(), a.dst(), pa, [&a](const SuperPoly& x) { return a.apply(x); }, f);
    return v.scaled(Scalar(sign(g.parity() * pa)));
  });
}

Cochain2 delta1(const Cochain1& c) {
  const int p = c.parity();
  return Cochain2(c.src(), c.dst(), p, [c, p](const ContactGen& g, const ContactGen& h, const SuperPoly& f) {
    const int pg = g.parity(), ph = h.parity();
    SuperPoly t1 = act_on_value(g, c.src(), c.dst(), p + ph, [&](const SuperPoly& x) { return c(h, x); }, f);
    SuperPoly t2 = act_on_value(h, c.src(), c.dst(), p + pg, [&](const SuperPoly& x) { return c(g, x); }, f);
    SuperPoly t3 = c(contact_bracket(g, h), f);
    return t1.scaled(Scalar(sign(pg * p))) - t2.scaled(Scalar(sign(ph * (pg + p)))) - t3;
  });
}

Cochain2 cup(const Cochain1& g1, const Cochain1& g2) {
  if (!(g2.dst() == g1.src())) throw WeightMismatch("cup: target of the second cochain must be the source of the first");
  const int p1 = g1.parity(), p2 = g2.parity();
  return Cochain2(g2.src(), g1.dst(), p1 + p2, [g1, g2, p1, p2](const ContactGen& x, const ContactGen& y, const SuperPoly& f) {
    const int px = x.parity(), py = y.parity();
    SuperPoly a = g1(x, g2(y, f));
    SuperPoly b = g1(y, g2(x, f));
    return a.scaled(Scalar(sign(p2 * (p1 + px)))) - b.scaled(Scalar(sign(p1 * px + (p2 + px) * (p1 + py))));
  });
}

Rational weight_shift(const Weight& src, const Weight& dst) {
  Scalar s = dst - src;
  if (!s.is_rational()) throw std::invalid_argument("weight shift " + s.str() + " is not rational");
  return s.to_rational();
}

namespace {

int doubled(const Rational& r) {
  Rational t = 2 * r;
  if (t.get_den() != 1) throw std::invalid_argument("weight shift must be a half-integer");
  return static_cast<int>(t.get_num().get_si());
}

}  // namespace

Grid1 band_grid1(const Rational& shift, int bump) {
  Grid1 grid;
  const int t = doubled(shift) + 2;
  for (int u = std::max(t, 0); u <= t + 1 + bump; ++u)
    for (int ug = 0; ug <= u; ++ug) grid.points.emplace_back(ug, u - ug);
  grid.out_len = std::max(t + 1 + bump, 0) / 2 + 2;
  return grid;
}

Grid1 box_grid1(int max_g_unit, int max_f_unit) {
  Grid1 grid;
  for (int ug = 0; ug <= max_g_unit; ++ug)
    for (int uf = 0; uf <= max_f_unit; ++uf) grid.points.emplace_back(ug, uf);
  grid.out_len = (max_g_unit + max_f_unit) / 2 + 2;
  return grid;
}

Grid2 band_grid2(const Rational& shift, bool relative, int bump) {
  Grid2 grid;
  const int t = doubled(shift) + 4;
  const int low = relative ? 5 : 0;
  for (int u = std::max(t, 0); u <= t + 1 + bump; ++u)
    for (int ug = low; ug <= u; ++ug)
      for (int uh = ug; ug + uh <= u; ++uh) grid.points.emplace_back(ug, uh, u - ug - uh);
  grid.out_len = std::max(t + 1 + bump, 0) / 2 + 2;
  return grid;
}

Grid2 box_grid2(int max_unit) {
  Grid2 grid;
  for (int ug = 0; ug <= max_unit; ++ug)
    for (int uh = ug; uh <= max_unit; ++uh)
      for (int uf = 0; uf <= max_unit; ++uf) grid.points.emplace_back(ug, uh, uf);
  grid.out_len = (3 * max_unit) / 2 + 3;
  return grid;
}

namespace {

void append(const SuperPoly& p, int len, Vector& out) {
  if (p.degree() >= len) throw std::logic_error("fingerprint output length too small");
  for (int d = 0; d < len; ++d) out.push_back(p.ev().coeff(d));
  for (int d = 0; d < len; ++d) out.push_back(p.od().coeff(d));
}

}  // namespace

Fingerprint fingerprint(const Cochain1& c, const Grid1& grid) {
  Fingerprint fp;
  for (const auto& [ug, uf] : grid.points) append(c(unit_generator(ug), unit_monomial(uf)), grid.out_len, fp.values);
  return fp;
}

Fingerprint fingerprint(const Cochain2& c, const Grid2& grid) {
  Fingerprint fp;
  for (const auto& [ug, uh, uf] : grid.points)
    append(c(unit_generator(ug), unit_generator(uh), unit_monomial(uf)), grid.out_len, fp.values);
  return fp;
}

Fingerprint fingerprint(const Cochain2& c, bool relative, int bump) {
  Fingerprint fp = fingerprint(c, band_grid2(weight_shift(c.src(), c.dst()), relative, bump));
  fp.bump = bump;
  return fp;
}

bool is_cocycle(const Cochain1& c, int max_degree, std::string* witness) {
  Cochain2 d = delta1(c);
  const int max_unit = 2 * max_degree + 1;
  for (int ug = 0; ug <= max_unit; ++ug)
    for (int uh = ug; uh <= max_unit; ++uh)
      for (int uf = 0; uf <= max_unit; ++uf) {
        SuperPoly v = d(unit_generator(ug), unit_generator(uh), unit_monomial(uf));
        if (!v.is_zero()) {
          if (witness)
            *witness = "(" + unit_monomial(ug).str() + ", " + unit_monomial(uh).str() + "; " + unit_monomial(uf).str() +
                       ") -> " + v.str();
          return false;
        }
      }
  return true;
}

namespace {

SuperPoly value_action(const Cochain2& c, const ContactGen& x, const ContactGen& y, const ContactGen& z,
                       const SuperPoly& f) {
  const int p = c.parity() + y.parity() + z.parity();
  return act_on_value(x, c.src(), c.dst(), p, [&](const SuperPoly& s) { return c(y, z, s); }, f);
}

}  // namespace

bool is_cocycle(const Cochain2& c, int max_degree, std::string* witness) {
  const int pc = c.parity();
  const int max_unit = 2 * max_degree + 1;
  for (int u1 = 0; u1 <= max_unit; ++u1)
    for (int u2 = u1; u2 <= max_unit; ++u2)
      for (int u3 = u2; u3 <= max_unit; ++u3)
        for (int uf = 0; uf <= max_unit; ++uf) {
          ContactGen x1 = unit_generator(u1), x2 = unit_generator(u2), x3 = unit_generator(u3);
          const int p1 = x1.parity(), p2 = x2.parity(), p3 = x3.parity();
          SuperPoly f = unit_monomial(uf);
          SuperPoly v = value_action(c, x1, x2, x3, f).scaled(Scalar(sign(p1 * pc))) -
                        value_action(c, x2, x1, x3, f).scaled(Scalar(sign(p2 * (pc + p1)))) +
                        value_action(c, x3, x1, x2, f).scaled(Scalar(sign(p3 * (pc + p1 + p2)))) -
                        c(contact_bracket(x1, x2), x3, f) +
                        c(contact_bracket(x1, x3), x2, f).scaled(Scalar(sign(p2 * p3))) -
                        c(contact_bracket(x2, x3), x1, f).scaled(Scalar(sign(p1 * (p2 + p3))));
          if (!v.is_zero()) {
            if (witness)
              *witness = "(" + x1.str() + ", " + x2.str() + ", " + x3.str() + "; " + f.str() + ") -> " + v.str();
            return false;
          }
        }
  return true;
}

bool vanishes_on_osp(const Cochain1& c, int max_f_degree) {
  for (const auto& g : osp_generators())
    for (int uf = 0; uf <= 2 * max_f_degree + 1; ++uf)
      if (!c(g, unit_monomial(uf)).is_zero()) return false;
  return true;
}

namespace {

Matrix columns_to_matrix(const std::vector<Vector>& columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  return m;
}

}  // namespace

CoboundarySolution solve_coboundary(const Cochain2& omega, int order_bound, int bump) {
  CoboundarySolution s;
  const Rational w = weight_shift(omega.src(), omega.dst());
  const int t = doubled(w) + 2;
  const Weight& src = omega.src();
  const Weight& dst = omega.dst();
  for (int extra = 0; extra < 2; ++extra)
    for (int k = 5; k <= t + extra; ++k) {
      int m = t + extra - k;
      if (m > order_bound) continue;
      BilinOp b(Scalar(-1), src, dst, omega.parity());
      b.add(extra ? Scalar() : Scalar(1), extra ? Scalar(1) : Scalar(), k, m);
      s.ansatz.push_back(std::move(b));
    }
  Grid2 grid = band_grid2(w, false, bump);
  s.rhs = fingerprint(omega, grid).values;
  std::vector<Vector> cols;
  for (const auto& b : s.ansatz) cols.push_back(fingerprint(delta1(Cochain1::from_bilin(b)), grid).values);
  s.system = columns_to_matrix(cols, s.rhs.size());
  s.primitive = BilinOp(Scalar(-1), src, dst, omega.parity());
  if (cols.empty()) {
    s.solvable = is_zero_vector(s.rhs);
    if (!s.solvable) {
      s.certificate = Vector(s.rhs.size());
      for (std::size_t i = 0; i < s.rhs.size(); ++i)
        if (!s.rhs[i].is_zero()) {
          s.certificate[i] = Scalar(1);
          break;
        }
    }
    return s;
  }
  LinearSolution sol = solve_linear(s.system, s.rhs);
  s.solvable = sol.consistent;
  s.nullity = sol.nullspace.size();
  if (sol.consistent) {
    for (std::size_t i = 0; i < s.ansatz.size(); ++i)
      if (!sol.particular[i].is_zero()) s.primitive += s.ansatz[i].scaled(sol.particular[i]);
  } else {
    s.certificate = sol.certificate;
  }
  return s;
}

bool check_certificate(const CoboundarySolution& s) {
  if (s.solvable || s.certificate.size() != s.rhs.size()) return false;
  for (std::size_t j = 0; j < s.system.cols(); ++j)
    if (!dot(s.certificate, s.system.column(j)).is_zero()) return false;
  return !dot(s.certificate, s.rhs).is_zero();
}

TrivialitySolution is_trivial_cocycle(const Cochain1& c, int order_bound) {
  TrivialitySolution t;
  t.order_bound = order_bound;
  std::vector<LinOp> ansatz;
  for (int m = 0; m <= order_bound; ++m)
    for (int s = 0; s < 2; ++s) {
      if ((m + s) % 2 != c.parity()) continue;
      std::vector<SuperPoly> coeffs(static_cast<std::size_t>(m) + 1);
      coeffs[m] = SuperPoly::monomial(0, s);
      ansatz.emplace_back(c.src(), c.dst(), coeffs);
    }
  int reach = order_bound + 4;
  if (c.body()) reach = std::max({reach, c.body()->max_k() + 2, c.body()->max_m() + 2});
  Grid1 grid = box_grid1(reach, reach);
  Vector rhs = fingerprint(c, grid).values;
  std::vector<Vector> cols;
  for (const auto& a : ansatz) cols.push_back(fingerprint(delta0(a), grid).values);
  t.primitive = LinOp(c.src(), c.dst());
  if (cols.empty()) {
    t.trivial = is_zero_vector(rhs);
    return t;
  }
  LinearSolution sol = solve_linear(columns_to_matrix(cols, rhs.size()), rhs);
  t.trivial = sol.consistent;
  if (sol.consistent)
    for (std::size_t i = 0; i < ansatz.size(); ++i)
      if (!sol.particular[i].is_zero()) t.primitive += ansatz[i].scaled(sol.particular[i]);
  return t;
}

std::size_t independence_rank(const std::vector<Cochain2>& cochains, int bump, bool relative) {
  if (cochains.empty()) return 0;
  Grid2 grid = band_grid2(weight_shift(cochains.front().src(), cochains.front().dst()), relative, bump);
  std::vector<Vector> rows;
  for (const auto& c : cochains) {
    if (!(c.src() == cochains.front().src()) || !(c.dst() == cochains.front().dst()))
      throw WeightMismatch("independence_rank needs common weights");
    rows.push_back(fingerprint(c, grid).values);
  }
  return rank(Matrix::from_rows(rows));
}

std::vector<std::string> two_cocycle_names() {
  return {"B[l,l+3]", "B[l,l+7/2]", "B~[l,l+7/2]", "B[l,l+4]", "B~[l,l+4]",
          "B-[l,l+4]", "B[l,l+9/2]", "B~[l,l+9/2]", "B[l,l+5]"};
}

Cochain2 two_cocycle(const std::string& name, const Weight& l) {
  auto u = [](const char* n, const Weight& w) { return Cochain1::from_bilin(super_cocycle(n, w).body); };
  const char* k32 = "U[l,l+3/2]";
  const char* k2 = "U[l,l+2]";
  const char* k52 = "U[l,l+5/2]";
  if (name == "B[l,l+3]") return cup(u(k32, l + half(3)), u(k32, l));
  if (name == "B[l,l+7/2]") return cup(u(k2, l + half(3)), u(k32, l));
  if (name == "B~[l,l+7/2]") return cup(u(k32, l + 2), u(k2, l));
  if (name == "B[l,l+4]") return cup(u(k52, l + half(3)), u(k32, l));
  if (name == "B~[l,l+4]") return cup(u(k32, l + half(5)), u(k52, l));
  if (name == "B-[l,l+4]") return cup(u(k2, l + 2), u(k2, l));
  if (name == "B[l,l+9/2]") return cup(u(k2, l + half(5)), u(k52, l));
  if (name == "B~[l,l+9/2]") return cup(u(k52, l + 2), u(k2, l));
  if (name == "B[l,l+5]") return cup(u(k52, l + half(5)), u(k52, l));
  throw UnknownName("unknown 2-cocycle '" + name + "'");
}

}  // namespace kdef
