#include "kdef/superpoly.hpp"

#include <stdexcept>

#include "kdef/errors.hpp"
#include "kdef/expr_parser.hpp"

namespace kdef {

XPoly::XPoly(Scalar c) {
  if (!c.is_zero()) c_.push_back(std::move(c));
}

XPoly XPoly::monomial(int d, Scalar c) {
  XPoly p;
  if (c.is_zero()) return p;
  p.c_.assign(static_cast<std::size_t>(d) + 1, Scalar());
  p.c_[d] = std::move(c);
  return p;
}

const Scalar& XPoly::coeff(int d) const {
  static const Scalar kZero;
  return d >= 0 && d < static_cast<int>(c_.size()) ? c_[d] : kZero;
}

void XPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

XPoly XPoly::operator-() const {
  XPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

XPoly& XPoly::operator+=(const XPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i)
    if (!o.c_[i].is_zero()) c_[i] += o.c_[i];
  trim();
  return *this;
}

XPoly& XPoly::operator-=(const XPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i)
    if (!o.c_[i].is_zero()) c_[i] -= o.c_[i];
  trim();
  return *this;
}

XPoly operator*(const XPoly& a, const XPoly& b) {
  XPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Scalar());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      if (!b.c_[j].is_zero()) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.trim();
  return r;
}

XPoly XPoly::scaled(const Scalar& s) const {
  if (s.is_zero()) return XPoly();
  XPoly r = *this;
  for (auto& c : r.c_)
    if (!c.is_zero()) c *= s;
  return r;
}

XPoly XPoly::derivative(int times) const {
  XPoly r;
  if (degree() < times) return r;
  r.c_.resize(c_.size() - static_cast<std::size_t>(times));
  for (std::size_t i = static_cast<std::size_t>(times); i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    long f = 1;
    for (int t = 0; t < times; ++t) f *= static_cast<long>(i) - t;
    r.c_[i - static_cast<std::size_t>(times)] = c_[i] * Scalar(f);
  }
  r.trim();
  return r;
}

Scalar XPoly::evaluate(const Scalar& x) const {
  Scalar r;
  for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

SuperPoly SuperPoly::monomial(int d, int s, Scalar c) {
  XPoly m = XPoly::monomial(d, std::move(c));
  return s ? SuperPoly(XPoly(), std::move(m)) : SuperPoly(std::move(m), XPoly());
}

int SuperPoly::parity() const {
  if (!is_homogeneous()) throw NonHomogeneous("superpolynomial " + str() + " is not homogeneous");
  return is_even() ? 0 : 1;
}

int SuperPoly::degree() const { return std::max(ev_.degree(), od_.degree()); }

SuperPoly& SuperPoly::operator+=(const SuperPoly& o) {
  ev_ += o.ev_;
  od_ += o.od_;
  return *this;
}

SuperPoly& SuperPoly::operator-=(const SuperPoly& o) {
  ev_ -= o.ev_;
  od_ -= o.od_;
  return *this;
}

SuperPoly operator*(const SuperPoly& a, const SuperPoly& b) {
  return {a.ev_ * b.ev_, a.ev_ * b.od_ + a.od_ * b.ev_};
}

SuperPoly SuperPoly::derivative(int times) const {
  return {ev_.derivative(times), od_.derivative(times)};
}

namespace {

std::string coefficient_text(const Scalar& c, bool has_monomial) {
  if (has_monomial && c.is_one()) return "";
  if (has_monomial && (-c).is_one()) return "-";
  std::string s = c.str();
  bool simple = c.is_polynomial() && c.num().terms().size() == 1;
  if (!simple && has_monomial) s = "(" + s + ")";
  return has_monomial ? s + "*" : s;
}

void append_terms(const XPoly& p, bool theta, std::vector<std::string>& out) {
  for (int d = p.degree(); d >= 0; --d) {
    const Scalar& c = p.coeff(d);
    if (c.is_zero()) continue;
    std::string mono;
    if (d == 1) mono = "x";
    if (d > 1) mono = "x^" + std::to_string(d);
    if (theta) mono += mono.empty() ? "th" : "*th";
    out.push_back(coefficient_text(c, !mono.empty()) + mono);
  }
}

SuperPoly operator/(const SuperPoly& a, const SuperPoly& b) {
  if (!b.is_even() || b.ev().degree() != 0)
    throw ParseError("superpolynomial literal divided by a non-constant");
  return a.scaled(b.ev().coeff(0).inverse());
}

}  // namespace

std::string SuperPoly::str() const {
  std::vector<std::string> parts;
  append_terms(ev_, false, parts);
  append_terms(od_, true, parts);
  if (parts.empty()) return "0";
  std::string s = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (parts[i][0] == '-')
      s += " - " + parts[i].substr(1);
    else
      s += " + " + parts[i];
  }
  return s;
}

SuperPoly SuperPoly::parse(const std::string& text, const ContextPtr& ctx) {
  ExprParser<SuperPoly> parser(text, [&](const std::string& name) {
    if (name == "x") return SuperPoly::x();
    if (name == "th") return SuperPoly::theta();
    return SuperPoly(Scalar::generator(ctx, name));
  });
  return parser.parse();
}

SuperPoly eta_bar(const SuperPoly& f) { return {f.od(), -f.ev().derivative()}; }

SuperPoly eta_bar_pow(const SuperPoly& f, int k) {
  SuperPoly r = f;
  if (k >= 2) {
    int h = k / 2;
    r = r.derivative(h);
    if (h % 2) r = -r;
  }
  if (k % 2) r = eta_bar(r);
  return r;
}

ContactGen::ContactGen(SuperPoly f) : f_(std::move(f)), parity_(f_.parity()) {}

ContactGen::ContactGen(SuperPoly f, int parity) : f_(std::move(f)), parity_(parity & 1) {
  if (!f_.is_zero() && f_.parity() != parity_)
    throw NonHomogeneous("generator " + f_.str() + " does not have the requested parity");
}

ContactGen contact_bracket(const ContactGen& f, const ContactGen& g) {
  const SuperPoly& F = f.f();
  const SuperPoly& G = g.f();
  SuperPoly r = F * G.derivative() - F.derivative() * G;
  SuperPoly e = eta_bar(F) * eta_bar(G);
  r -= e.scaled(Scalar(rat(sign(f.parity()), 2)));
  return ContactGen(std::move(r), f.parity() + g.parity());
}

std::vector<ContactGen> osp_generators() {
  return {ContactGen(SuperPoly::monomial(0, 0)), ContactGen(SuperPoly::monomial(0, 1)),
          ContactGen(SuperPoly::monomial(1, 0)), ContactGen(SuperPoly::monomial(1, 1)),
          ContactGen(SuperPoly::monomial(2, 0))};
}

bool jacobi_check(const ContactGen& f, const ContactGen& g, const ContactGen& h) {
  int pf = f.parity(), pg = g.parity(), ph = h.parity();
  SuperPoly s = contact_bracket(f, contact_bracket(g, h)).f().scaled(Scalar(sign(pf * ph))) +
                contact_bracket(g, contact_bracket(h, f)).f().scaled(Scalar(sign(pg * pf))) +
                contact_bracket(h, contact_bracket(f, g)).f().scaled(Scalar(sign(ph * pg)));
  return s.is_zero();
}

std::vector<ContactGen> monomial_generators(int max_degree) {
  std::vector<ContactGen> out;
  for (int d = 0; d <= max_degree; ++d)
    for (int s = 0; s < 2; ++s) out.emplace_back(SuperPoly::monomial(d, s));
  return out;
}

}  // namespace kdef
