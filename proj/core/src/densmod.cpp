#include "kdef/densmod.hpp"

#include <algorithm>
#include <stdexcept>

#include "kdef/errors.hpp"

namespace kdef {

Density lie_density(const ContactGen& f, const Density& d) {
  const XPoly& a = f.f().ev();
  const XPoly& b = f.f().od();
  const XPoly& g0 = d.f.ev();
  const XPoly& g1 = d.f.od();
  const Scalar& l = d.w;
  XPoly da = a.derivative(), db = b.derivative(), dg0 = g0.derivative();
  XPoly ev = a * dg0 + (da * g0).scaled(l) + (b * g1).scaled(half(1));
  XPoly od = a * g1.derivative() + (da * g1).scaled(l + half(1)) + (db * g0).scaled(l) +
             (b * dg0).scaled(half(1));
  return {SuperPoly(std::move(ev), std::move(od)), l};
}

LinOp::LinOp(Weight src, Weight dst, std::vector<SuperPoly> coeffs)
    : src_(std::move(src)), dst_(std::move(dst)), c_(std::move(coeffs)) {
  trim();
}

LinOp LinOp::multiplication(const Weight& src, const Weight& dst, const SuperPoly& c) {
  return LinOp(src, dst, {c});
}

LinOp LinOp::eta_bar_power(const Weight& src, const Weight& dst, int m, Scalar c) {
  std::vector<SuperPoly> v(static_cast<std::size_t>(m) + 1);
  v[m] = SuperPoly(std::move(c));
  return LinOp(src, dst, std::move(v));
}

void LinOp::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const SuperPoly& LinOp::coeff(int m) const {
  static const SuperPoly kZero;
  return m >= 0 && m < static_cast<int>(c_.size()) ? c_[m] : kZero;
}

int LinOp::parity() const {
  int p = -1;
  for (std::size_t m = 0; m < c_.size(); ++m) {
    if (c_[m].is_zero()) continue;
    int q = (c_[m].parity() + static_cast<int>(m)) % 2;
    if (p >= 0 && p != q) throw NonHomogeneous("operator " + str() + " is not homogeneous");
    p = q;
  }
  return p < 0 ? 0 : p;
}

bool LinOp::translation_invariant() const {
  for (const auto& c : c_)
    if (c.ev().degree() > 0 || c.od().degree() > 0) return false;
  return true;
}

LinOp& LinOp::operator+=(const LinOp& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t m = 0; m < o.c_.size(); ++m) c_[m] += o.c_[m];
  trim();
  return *this;
}

LinOp& LinOp::operator-=(const LinOp& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t m = 0; m < o.c_.size(); ++m) c_[m] -= o.c_[m];
  trim();
  return *this;
}

LinOp LinOp::scaled(const Scalar& s) const {
  LinOp r = *this;
  for (auto& c : r.c_) c = c.scaled(s);
  r.trim();
  return r;
}

LinOp LinOp::left_multiplied(const SuperPoly& p) const {
  LinOp r = *this;
  for (auto& c : r.c_) c = p * c;
  r.trim();
  return r;
}

SuperPoly LinOp::apply(const SuperPoly& f) const {
  SuperPoly r;
  SuperPoly power = f;
  for (std::size_t m = 0; m < c_.size(); ++m) {
    if (m > 0) power = eta_bar(power);
    if (!c_[m].is_zero()) r += c_[m] * power;
  }
  return r;
}

std::string LinOp::str() const {
  std::string s;
  for (std::size_t m = 0; m < c_.size(); ++m) {
    if (c_[m].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + c_[m].str() + ")*EtaBar^" + std::to_string(m);
  }
  return s.empty() ? "0" : s;
}

Density apply_linop(const LinOp& a, const Density& d) {
  if (a.src() != d.w)
    throw WeightMismatch("operator source " + a.src().str() + " differs from density weight " + d.w.str());
  return {a.apply(d.f), a.dst()};
}

namespace {

// eta_bar o (sum c_k eta_bar^k) = sum eta_bar(c_k) eta_bar^k + sigma(c_k) eta_bar^{k+1}
std::vector<SuperPoly> left_eta_bar(const std::vector<SuperPoly>& c) {
  std::vector<SuperPoly> r(c.size() + 1);
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k].is_zero()) continue;
    r[k] += eta_bar(c[k]);
    r[k + 1] += c[k].sigma();
  }
  return r;
}

}  // namespace

LinOp compose_ops(const LinOp& a, const LinOp& b) {
  if (b.dst() != a.src())
    throw WeightMismatch("cannot compose: " + b.dst().str() + " vs " + a.src().str());
  std::vector<SuperPoly> result;
  std::vector<SuperPoly> power = b.coeffs();
  for (int m = 0; m <= a.order(); ++m) {
    if (m > 0) power = left_eta_bar(power);
    const SuperPoly& am = a.coeff(m);
    if (am.is_zero()) continue;
    if (result.size() < power.size()) result.resize(power.size());
    for (std::size_t k = 0; k < power.size(); ++k)
      if (!power[k].is_zero()) result[k] += am * power[k];
  }
  return LinOp(b.src(), a.dst(), std::move(result));
}

LinOp lie_linop(const ContactGen& f, const Weight& w) {
  const SuperPoly& F = f.f();
  return LinOp(w, w,
               {F.derivative().scaled(w), eta_bar(F).scaled(Scalar(rat(-sign(f.parity()), 2))),
                -F});
}

LinOp lie_operator(const ContactGen& f, const LinOp& a) {
  LinOp left = compose_ops(lie_linop(f, a.dst()), a);
  LinOp right = compose_ops(a, lie_linop(f, a.src()));
  return left - right.scaled(Scalar(sign(a.parity() * f.parity())));
}

ClassicalOp::ClassicalOp(Weight src, Weight dst, std::vector<XPoly> coeffs)
    : src_(std::move(src)), dst_(std::move(dst)), c_(std::move(coeffs)) {
  trim();
}

void ClassicalOp::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const XPoly& ClassicalOp::coeff(int j) const {
  static const XPoly kZero;
  return j >= 0 && j < static_cast<int>(c_.size()) ? c_[j] : kZero;
}

void ClassicalOp::add_term(int j, const XPoly& c) {
  if (static_cast<int>(c_.size()) <= j) c_.resize(static_cast<std::size_t>(j) + 1);
  c_[j] += c;
  trim();
}

XPoly ClassicalOp::apply(const XPoly& f) const {
  XPoly r;
  for (std::size_t j = 0; j < c_.size(); ++j)
    if (!c_[j].is_zero()) r += c_[j] * f.derivative(static_cast<int>(j));
  return r;
}

ClassicalOp ClassicalOp::scaled(const Scalar& s) const {
  ClassicalOp r = *this;
  for (auto& c : r.c_) c = c.scaled(s);
  r.trim();
  return r;
}

std::string ClassicalOp::str() const {
  std::string s;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + SuperPoly(c_[j], XPoly()).str() + ")*D^" + std::to_string(j);
  }
  return s.empty() ? "0" : s;
}

ClassicalOp compose_classical(const ClassicalOp& a, const ClassicalOp& b) {
  ClassicalOp r(b.src(), a.dst());
  for (std::size_t j = 0; j < a.coeffs().size(); ++j) {
    const XPoly& aj = a.coeffs()[j];
    if (aj.is_zero()) continue;
    long binom = 1;
    for (std::size_t i = 0; i <= j; ++i) {
      for (std::size_t k = 0; k < b.coeffs().size(); ++k) {
        XPoly d = b.coeffs()[k].derivative(static_cast<int>(i));
        if (!d.is_zero()) r.add_term(static_cast<int>(j - i + k), (aj * d).scaled(Scalar(binom)));
      }
      binom = binom * static_cast<long>(j - i) / static_cast<long>(i + 1);
    }
  }
  return r;
}

ClassicalOp classical_difference(const ClassicalOp& a, const ClassicalOp& b) {
  ClassicalOp r = a;
  for (std::size_t j = 0; j < b.coeffs().size(); ++j) r.add_term(static_cast<int>(j), -b.coeffs()[j]);
  return r;
}

ClassicalOp classical_lie_operator(const XPoly& x, const ClassicalOp& a) {
  auto lie = [&](const Weight& w) { return ClassicalOp(w, w, {x.derivative().scaled(w), x}); };
  return classical_difference(compose_classical(lie(a.dst()), a), compose_classical(a, lie(a.src())));
}

Restriction restrict_vect1(const LinOp& a) {
  const Weight& l = a.src();
  const Weight& m = a.dst();
  Restriction r{ClassicalOp(l, m), ClassicalOp(l + half(1), m + half(1)), ClassicalOp(l + half(1), m),
                ClassicalOp(l, m + half(1))};
  for (int k = 0; k <= a.order(); ++k) {
    const XPoly& c0 = a.coeff(k).ev();
    const XPoly& c1 = a.coeff(k).od();
    int h = k / 2;
    Scalar s(sign(h));
    if (k % 2 == 0) {
      r.even0.add_term(h, c0.scaled(s));
      r.odd_from0.add_term(h, c1.scaled(s));
      r.even1.add_term(h, c0.scaled(s));
    } else {
      r.odd_from0.add_term(h + 1, c0.scaled(-s));
      r.odd_from1.add_term(h, c0.scaled(s));
      r.even1.add_term(h, c1.scaled(s));
    }
  }
  return r;
}

int BilinOp::max_k() const {
  int r = -1;
  for (const auto& [key, c] : terms_) r = std::max(r, key.first);
  return r;
}

int BilinOp::max_m() const {
  int r = -1;
  for (const auto& [key, c] : terms_) r = std::max(r, key.second);
  return r;
}

void BilinOp::add_coeff(const Key& key, const Scalar& a, const Scalar& b) {
  if (a.is_zero() && b.is_zero()) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, Coeff{a, b});
    return;
  }
  it->second.a += a;
  it->second.b += b;
  if (it->second.a.is_zero() && it->second.b.is_zero()) terms_.erase(it);
}

void BilinOp::add(const Scalar& a, const Scalar& b, int k, int m) { add_coeff({k, m}, a, b); }

void BilinOp::add_signed(const Scalar& c, int s, bool sf, bool sg, int k, int m) {
  if (c.is_zero()) return;
  int e = (sf ? k : 0) + (sg ? m : 0);
  Scalar cs = c * Scalar(sign(e));
  if (s) {
    add_coeff({k, m}, Scalar(), cs);
    return;
  }
  add_coeff({k, m}, cs, Scalar());
  if (sf) add_coeff({k + 1, m}, Scalar(), cs * Scalar(-2));
  if (sg) add_coeff({k, m + 1}, Scalar(), cs * Scalar(-2));
}

BilinOp& BilinOp::operator+=(const BilinOp& o) {
  for (const auto& [key, c] : o.terms_) add_coeff(key, c.a, c.b);
  return *this;
}

BilinOp& BilinOp::operator-=(const BilinOp& o) {
  for (const auto& [key, c] : o.terms_) add_coeff(key, -c.a, -c.b);
  return *this;
}

BilinOp BilinOp::scaled(const Scalar& s) const {
  BilinOp r(w1_, w2_, dst_, parity_);
  if (s.is_zero()) return r;
  for (const auto& [key, c] : terms_) r.terms_.emplace(key, Coeff{c.a * s, c.b * s});
  return r;
}

bool BilinOp::operator==(const BilinOp& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (auto i = terms_.begin(), j = o.terms_.begin(); i != terms_.end(); ++i, ++j)
    if (i->first != j->first || i->second.a != j->second.a || i->second.b != j->second.b) return false;
  return true;
}

SuperPoly BilinOp::apply(const SuperPoly& f, const SuperPoly& g) const {
  SuperPoly r;
  if (terms_.empty()) return r;
  std::vector<SuperPoly> fk(static_cast<std::size_t>(max_k()) + 1), gm(static_cast<std::size_t>(max_m()) + 1);
  fk[0] = f;
  for (std::size_t k = 1; k < fk.size(); ++k) fk[k] = eta_bar(fk[k - 1]);
  gm[0] = g;
  for (std::size_t m = 1; m < gm.size(); ++m) gm[m] = eta_bar(gm[m - 1]);
  for (const auto& [key, c] : terms_) {
    SuperPoly prod = fk[key.first] * gm[key.second];
    if (prod.is_zero()) continue;
    if (!c.a.is_zero()) r += prod.scaled(c.a);
    if (!c.b.is_zero()) r += prod.times_theta().scaled(c.b);
  }
  return r;
}

std::string BilinOp::str() const {
  std::string s;
  for (const auto& [key, c] : terms_) {
    if (!s.empty()) s += " + ";
    std::string coef = c.b.is_zero() ? c.a.str()
                       : c.a.is_zero() ? "(" + c.b.str() + ")*th"
                                       : c.a.str() + " + (" + c.b.str() + ")*th";
    s += "(" + coef + ")*EtaBar^" + std::to_string(key.first) + "(F)*EtaBar^" +
         std::to_string(key.second) + "(G)";
  }
  return s.empty() ? "0" : s;
}

}  // namespace kdef
