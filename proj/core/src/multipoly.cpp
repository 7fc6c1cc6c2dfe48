#include "kdef/multipoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace kdef {

int mono_total_degree(Monomial m) {
  int d = 0;
  for (int g = 0; g < kMaxGenerators; ++g) d += mono_exp(m, g);
  return d;
}

bool mono_divides(Monomial a, Monomial b) {
  for (int g = 0; g < kMaxGenerators; ++g)
    if (mono_exp(a, g) > mono_exp(b, g)) return false;
  return true;
}

std::uint32_t mono_mask(Monomial m) {
  std::uint32_t mask = 0;
  for (int g = 0; g < kMaxGenerators; ++g)
    if (mono_exp(m, g) != 0) mask |= 1u << g;
  return mask;
}

MultiPoly::MultiPoly(const Rational& c) {
  if (sgn(c) != 0) terms_.push_back({0, c});
}

MultiPoly MultiPoly::variable(int g) {
  if (g < 0 || g >= kMaxGenerators)
    throw std::out_of_range("generator index out of range");
  return monomial(mono_var(g), Rational(1));
}

MultiPoly MultiPoly::monomial(Monomial m, const Rational& c) {
  MultiPoly p;
  if (sgn(c) != 0) p.terms_.push_back({m, c});
  return p;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.mono > b.mono; });
  MultiPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coef += t.coef;
      if (sgn(p.terms_.back().coef) == 0) p.terms_.pop_back();
    } else if (sgn(t.coef) != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono == 0);
}

Rational MultiPoly::constant_value() const {
  if (terms_.empty() || terms_.back().mono != 0) return Rational(0);
  return terms_.back().coef;
}

int MultiPoly::total_degree() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, mono_total_degree(t.mono));
  return d;
}

int MultiPoly::degree_in(int g) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, mono_exp(t.mono, g));
  return d;
}

std::uint32_t MultiPoly::variable_mask() const {
  std::uint32_t mask = 0;
  for (const auto& t : terms_) mask |= mono_mask(t.mono);
  return mask;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

namespace {

std::vector<Term> merge_terms(const std::vector<Term>& a,
                              const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].mono > b[j].mono)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].mono > a[i].mono) {
      out.push_back({b[j].mono, subtract ? Rational(-b[j].coef) : b[j].coef});
      ++j;
    } else {
      Rational c = subtract ? Rational(a[i].coef - b[j].coef)
                            : Rational(a[i].coef + b[j].coef);
      if (sgn(c) != 0) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  if (a.terms_.empty() || b.terms_.empty()) return r;
  if (b.terms_.size() == 1) return a.times_monomial(b.terms_[0].mono, b.terms_[0].coef);
  if (a.terms_.size() == 1) return b.times_monomial(a.terms_[0].mono, a.terms_[0].coef);
  struct Slot {
    Monomial mono;
    std::uint32_t i, j;
  };
  std::vector<Slot> slots;
  slots.reserve(a.terms_.size() * b.terms_.size());
  for (std::uint32_t i = 0; i < a.terms_.size(); ++i)
    for (std::uint32_t j = 0; j < b.terms_.size(); ++j)
      slots.push_back({a.terms_[i].mono + b.terms_[j].mono, i, j});
  std::sort(slots.begin(), slots.end(),
            [](const Slot& x, const Slot& y) { return x.mono > y.mono; });
  Rational acc, tmp;
  std::size_t k = 0;
  while (k < slots.size()) {
    Monomial m = slots[k].mono;
    acc = a.terms_[slots[k].i].coef * b.terms_[slots[k].j].coef;
    ++k;
    while (k < slots.size() && slots[k].mono == m) {
      mpq_mul(tmp.get_mpq_t(), a.terms_[slots[k].i].coef.get_mpq_t(),
              b.terms_[slots[k].j].coef.get_mpq_t());
      acc += tmp;
      ++k;
    }
    if (sgn(acc) != 0) r.terms_.push_back({m, acc});
  }
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly MultiPoly::scaled(const Rational& c) const {
  if (sgn(c) == 0) return MultiPoly();
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coef *= c;
  return r;
}

MultiPoly MultiPoly::times_monomial(Monomial m, const Rational& c) const {
  if (sgn(c) == 0) return MultiPoly();
  MultiPoly r = *this;
  for (auto& t : r.terms_) {
    t.mono += m;
    t.coef *= c;
  }
  return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono || terms_[i].coef != o.terms_[i].coef)
      return false;
  return true;
}

Rational MultiPoly::evaluate(const std::vector<Rational>& point) const {
  Rational sum(0);
  for (const auto& t : terms_) {
    Rational v = t.coef;
    for (int g = 0; g < kMaxGenerators; ++g) {
      int e = mono_exp(t.mono, g);
      if (e == 0) continue;
      if (static_cast<std::size_t>(g) >= point.size())
        throw std::out_of_range("evaluation point too short");
      Rational p;
      mpz_pow_ui(p.get_num_mpz_t(), point[g].get_num_mpz_t(), e);
      mpz_pow_ui(p.get_den_mpz_t(), point[g].get_den_mpz_t(), e);
      v *= p;
    }
    sum += v;
  }
  return sum;
}

MultiPoly MultiPoly::substitute(int g, const MultiPoly& v) const {
  // Horner-free: group terms by the exponent of g.
  std::map<int, MultiPoly, std::greater<int>> groups;
  for (const auto& t : terms_) {
    int e = mono_exp(t.mono, g);
    groups[e] += MultiPoly::monomial(t.mono - mono_var(g, e), t.coef);
  }
  MultiPoly result;
  MultiPoly power(Rational(1));
  int current = 0;
  std::vector<std::pair<int, const MultiPoly*>> order;
  for (const auto& kv : groups) order.push_back({kv.first, &kv.second});
  std::reverse(order.begin(), order.end());
  for (const auto& [e, coeff] : order) {
    while (current < e) {
      power *= v;
      ++current;
    }
    result += *coeff * power;
  }
  return result;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coef;
    bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool unit = (c == 1);
    if (!unit || t.mono == 0) {
      os << c.get_str();
      if (t.mono != 0) os << "*";
    }
    bool firstvar = true;
    for (int g = 0; g < kMaxGenerators; ++g) {
      int e = mono_exp(t.mono, g);
      if (e == 0) continue;
      if (!firstvar) os << "*";
      firstvar = false;
      os << (static_cast<std::size_t>(g) < names.size() ? names[g]
                                                        : "g" + std::to_string(g));
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

std::pair<MultiPoly, MultiPoly> divide(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  MultiPoly q, r, p = a;
  const Term& lb = b.leading();
  Rational inv = 1 / lb.coef;
  while (!p.is_zero()) {
    const Term& lp = p.leading();
    if (mono_divides(lb.mono, lp.mono)) {
      Monomial m = lp.mono - lb.mono;
      Rational c = lp.coef * inv;
      q += MultiPoly::monomial(m, c);
      p -= b.times_monomial(m, c);
    } else {
      r += MultiPoly::monomial(lp.mono, lp.coef);
      p -= MultiPoly::monomial(lp.mono, lp.coef);
    }
  }
  return {q, r};
}

MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (b.is_constant()) return a.scaled(1 / b.constant_value());
  MultiPoly q, p = a;
  const Term& lb = b.leading();
  Rational inv = 1 / lb.coef;
  while (!p.is_zero()) {
    const Term& lp = p.leading();
    if (!mono_divides(lb.mono, lp.mono))
      throw std::domain_error("inexact polynomial division");
    Monomial m = lp.mono - lb.mono;
    Rational c = lp.coef * inv;
    q += MultiPoly::monomial(m, c);
    p -= b.times_monomial(m, c);
  }
  return q;
}

MultiPoly make_monic(const MultiPoly& p) {
  if (p.is_zero()) return p;
  return p.scaled(1 / p.leading().coef);
}

namespace {

using Dense = std::vector<Rational>;

Dense to_dense(const MultiPoly& p, int g) {
  Dense d(p.degree_in(g) + 1);
  for (const auto& t : p.terms()) d[mono_exp(t.mono, g)] = t.coef;
  return d;
}

MultiPoly from_dense(const Dense& d, int g) {
  std::vector<Term> terms;
  for (int e = static_cast<int>(d.size()) - 1; e >= 0; --e)
    if (sgn(d[e]) != 0) terms.push_back({mono_var(g, e), d[e]});
  MultiPoly p;
  return MultiPoly::from_terms(std::move(terms));
}

void trim(Dense& d) {
  while (!d.empty() && sgn(d.back()) == 0) d.pop_back();
}

// a <- a mod b, with b nonzero and trimmed.
void dense_mod(Dense& a, const Dense& b) {
  const Rational& lb = b.back();
  Rational q, tmp;
  while (a.size() >= b.size() && !a.empty()) {
    q = a.back() / lb;
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      mpq_mul(tmp.get_mpq_t(), q.get_mpq_t(), b[i].get_mpq_t());
      a[i + shift] -= tmp;
    }
    a.pop_back();
    trim(a);
  }
}

MultiPoly univariate_gcd(const MultiPoly& a, const MultiPoly& b, int g) {
  Dense x = to_dense(a, g), y = to_dense(b, g);
  trim(x);
  trim(y);
  while (!y.empty()) {
    dense_mod(x, y);
    std::swap(x, y);
  }
  if (x.empty()) return MultiPoly();
  Rational lc = x.back();
  for (auto& c : x) c /= lc;
  return from_dense(x, g);
}

// View of p as a polynomial in generator g with coefficients free of g.
std::map<int, MultiPoly> coefficients_in(const MultiPoly& p, int g) {
  std::map<int, MultiPoly> out;
  std::map<int, std::vector<Term>> raw;
  for (const auto& t : p.terms()) {
    int e = mono_exp(t.mono, g);
    raw[e].push_back({t.mono - mono_var(g, e), t.coef});
  }
  for (auto& kv : raw) out[kv.first] = MultiPoly::from_terms(std::move(kv.second));
  return out;
}

MultiPoly content_in(const MultiPoly& p, int g) {
  MultiPoly c;
  for (const auto& kv : coefficients_in(p, g)) {
    c = gcd(c, kv.second);
    if (c.is_constant() && !c.is_zero()) return MultiPoly(Rational(1));
  }
  return c;
}

MultiPoly primitive_part(const MultiPoly& p, int g) {
  if (p.is_zero()) return p;
  MultiPoly c = content_in(p, g);
  return make_monic(exact_divide(p, c));
}

// Pseudo-remainder of a by b with respect to generator g.
MultiPoly pseudo_remainder(MultiPoly a, const MultiPoly& b, int g) {
  int db = b.degree_in(g);
  MultiPoly lcb = coefficients_in(b, g).rbegin()->second;
  while (!a.is_zero() && a.degree_in(g) >= db) {
    int da = a.degree_in(g);
    MultiPoly lca = coefficients_in(a, g).rbegin()->second;
    a = a * lcb - lca.times_monomial(mono_var(g, da - db), Rational(1)) * b;
  }
  return a;
}

}  // namespace

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  if (a.is_constant() || b.is_constant()) return MultiPoly(Rational(1));
  std::uint32_t ma = a.variable_mask(), mb = b.variable_mask();
  std::uint32_t mask = ma | mb;
  int g = 0;
  while (!(mask & (1u << g))) ++g;
  if (mask == (1u << g)) return univariate_gcd(a, b, g);
  if (!(ma & (1u << g))) return gcd(a, content_in(b, g));
  if (!(mb & (1u << g))) return gcd(content_in(a, g), b);
  MultiPoly ca = content_in(a, g), cb = content_in(b, g);
  MultiPoly c = gcd(ca, cb);
  MultiPoly r0 = make_monic(exact_divide(a, ca));
  MultiPoly r1 = make_monic(exact_divide(b, cb));
  if (r0.degree_in(g) < r1.degree_in(g)) std::swap(r0, r1);
  while (true) {
    MultiPoly r = pseudo_remainder(r0, r1, g);
    if (r.is_zero()) break;
    if (r.degree_in(g) == 0) {
      r1 = MultiPoly(Rational(1));
      break;
    }
    r0 = std::move(r1);
    r1 = primitive_part(r, g);
  }
  return make_monic(c * primitive_part(r1, g));
}

MultiPoly inverse_mod(const MultiPoly& a, const MultiPoly& m, int g) {
  // Extended Euclid on dense univariate polynomials.
  Dense r0 = to_dense(m, g), r1 = to_dense(a, g);
  trim(r0);
  trim(r1);
  dense_mod(r1, r0);
  Dense s0, s1{Rational(1)};
  while (!r1.empty()) {
    // q = r0 / r1
    Dense q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0);
    Dense rem = r0;
    Rational tmp;
    while (rem.size() >= r1.size() && !rem.empty()) {
      Rational c = rem.back() / r1.back();
      std::size_t shift = rem.size() - r1.size();
      q[shift] = c;
      for (std::size_t i = 0; i < r1.size(); ++i) {
        tmp = c * r1[i];
        rem[i + shift] -= tmp;
      }
      rem.pop_back();
      trim(rem);
    }
    // s2 = s0 - q s1
    Dense s2(std::max(s0.size(), q.size() + s1.size()));
    for (std::size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
    trim(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) throw std::domain_error("element not invertible modulo minimal polynomial");
  Rational inv = 1 / r0[0];
  for (auto& c : s0) c *= inv;
  return from_dense(s0, g);
}

}  // namespace kdef
