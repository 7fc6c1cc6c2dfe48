#include "kdef/reference.hpp"

#include <initializer_list>
#include <stdexcept>

namespace kdef {

namespace {

// c0 x^d + c1 x^(d-1) + ... + cd
Scalar poly(const Weight& x, std::initializer_list<long> c) {
  Scalar r(0);
  for (long v : c) r = r * x + Scalar(v);
  return r;
}

Scalar lin(long a, const Weight& x, long b) { return Scalar(a) * x + Scalar(b); }

}  // namespace

Scalar zeta_const(const Weight& l) {
  return l * lin(2, l, 5) / Scalar(4) * binomial_general(lin(2, l, 3), 2);
}

Scalar alpha_const(const Weight& l) {
  return lin(6, l, 9) / Scalar(4) * binomial_general(lin(2, l, 4), 3);
}

Scalar beta_const(const Weight& l) {
  return poly(l, {2, 7, 2}) / Scalar(6) * binomial_general(lin(2, l, 4), 2);
}

Scalar gamma_const(const Weight& l) {
  return lin(3, l, 6) / Scalar(2) * binomial_general(lin(2, l, 5), 3);
}

Scalar xi_const(const Weight& l) {
  return Scalar(rat(3, 16)) * l * lin(1, l, 4) * lin(2, l, 3) * lin(2, l, 5) * binomial_general(lin(2, l, 5), 3);
}

Scalar eps_const(int i, const Weight& l) {
  const Scalar q17 = poly(l, {2, 3, -17});
  const Scalar q13 = poly(l, {2, 13, 17});
  const Scalar r13 = poly(l, {2, 13, 13});
  const Scalar p6 = poly(l, {32, 784, 7156, 29576, 53961, 40281, 11760});
  switch (i) {
    case 1:
      return lin(2, l, 11) * lin(2, l, 9) * lin(1, l, 2) / (Scalar(2) * lin(1, l, 3) * q17);
    case 2:
      return Scalar(15) * lin(2, l, 5) * lin(1, l, 4) / (Scalar(2) * lin(1, l, 3) * q17);
    case 3:
      return Scalar(48) / (l * lin(1, l, 3) * lin(2, l, 3) * lin(2, l, 5) * q17);
    case 4:
      return -(lin(2, l, 9) * lin(2, l, 3) * poly(l, {2, 7, 2})) / (lin(2, l, 7) * lin(2, l, 1) * q13);
    case 5:
      return -(Scalar(3) * lin(2, l, 9) * lin(2, l, 3).pow(2)) / (Scalar(2) * lin(2, l, 7) * lin(2, l, 1) * q13);
    case 6:
      return -(Scalar(3) * lin(2, l, 7)) / (Scalar(2) * q13);
    case 7:
      return -(Scalar(5) * poly(l, {6, 33, 17}) * poly(l, {2, 15, 24})) /
             (Scalar(2) * lin(1, l, 5) * lin(1, l, 2) * lin(2, l, -3) * r13);
    case 8:
      return lin(2, l, 9) * lin(2, l, 5) * lin(1, l, 7) * poly(l, {2, 11, 4}) /
             (Scalar(2) * lin(1, l, 5) * lin(2, l, -3) * lin(1, l, 2) * r13);
    case 9:
      return Scalar(60) / (lin(2, l, 3) * lin(2, l, -3) * lin(1, l, 3) * lin(1, l, 4) * r13);
    case 10:
      return -(lin(1, l, 5) * lin(1, l, 2) * poly(l, {2, 7, 2})) / (Scalar(9) * lin(1, l, 4).pow(2) * lin(1, l, 1));
    case 11:
      return -poly(l, {2, 17, 32}) / (Scalar(9) * lin(1, l, 4));
    case 12:
      return -(lin(1, l, 2).pow(2) * lin(1, l, 5)) / (lin(1, l, 4).pow(2) * lin(1, l, 1));
    case 13:
      return eps_const(9, l) * lin(2, l, 3) * lin(2, l, 5) * lin(2, l, 9) * lin(1, l, 2) * lin(1, l, 3) *
             lin(1, l, 5) * poly(l, {2, 7, 2}) * poly(l, {2, 23, 62}) * poly(l, {16, 240, 1034, 1005, 300}) /
             (Scalar(36) * lin(1, l, 4) * lin(2, l, 7) * p6);
    case 14:
      return eps_const(9, l) * lin(2, l, 3) * lin(2, l, 5) * lin(2, l, -5) * lin(2, l, 9) * lin(1, l, -4) *
             lin(1, l, 2) * lin(1, l, 7) * lin(1, l, 9) / (lin(1, l, 4) * p6);
    case 15:
      return -(eps_const(9, l) * lin(2, l, -3) * lin(2, l, 1) * lin(2, l, 3) * lin(2, l, 6) * lin(2, l, 23) *
               lin(1, l, 2) * lin(1, l, 5) * lin(1, l, 10)) /
             (lin(2, l, 7) * p6);
    case 16:
      return -(eps_const(9, l) * lin(2, l, 3) * lin(1, l, 2) *
               poly(l, {32, 656, 4756, 14104, 14901, 7059, 240})) /
             (eps_const(9, l + 2) * lin(2, l, 11) * lin(1, l, 6) * p6);
    case 17:
      return -(eps_const(9, l) * lin(2, l, 5) * lin(2, l, 9) * lin(2, l, 6) * lin(1, l, 5) *
               poly(l, {16, 240, 1034, 1005, 420})) /
             (lin(2, l, 11) * lin(2, l, 7) * lin(1, l, 4) * lin(1, l, 6) * p6);
    default:
      throw std::invalid_argument("eps index out of range");
  }
}

std::string reference_block(int order, int shift2) {
  static const int kBase[] = {0, 0, 10, 10, 12, 19};
  if (order < 2 || order > 5) throw std::invalid_argument("reference orders are 2..5");
  std::string s = std::to_string(order);
  if (order == 2) return s;
  return s + static_cast<char>('a' + (shift2 - kBase[order]));
}

namespace {

class Window {
 public:
  Window(int a, const Weight& lowest) : a_(a), l_(lowest + half(a)) {}
  const Weight& lambda() const { return l_; }
  SuperParamPoly t(int x, int y) const { return SuperParamPoly::variable({a_ + x, a_ + y}); }
  SuperParamPoly c(const Scalar& s) const { return SuperParamPoly(s); }
  Scalar e(int i) const { return eps_const(i, l_); }

 private:
  int a_;
  Weight l_;
};

std::vector<SuperParamPoly> block(int order, int shift2, const Window& w) {
  auto t = [&](int x, int y) { return w.t(x, y); };
  auto c = [&](const Scalar& s) { return w.c(s); };
  auto e = [&](int i) { return w.e(i); };
  const SuperParamPoly third = c(Scalar(rat(1, 3)));
  // Recurring binomials.
  const SuperParamPoly q7 = t(3, 7) * t(0, 3) - t(4, 7) * t(0, 4);
  const SuperParamPoly q9 = t(5, 9) * t(0, 5) - t(4, 9) * t(0, 4);

  if (order == 2 && shift2 == 10) return {t(0, 5) * t(5, 10)};
  if (order == 3) {
    switch (shift2) {
      case 10:
        return {t(0, 3) * (c(e(1)) * t(6, 10) * t(3, 6) + c(Scalar(1) - e(1)) * t(7, 10) * t(3, 7)),
                t(0, 3) * (c(e(2)) * t(7, 10) * t(3, 7) - c(Scalar(1) + e(2)) * t(6, 10) * t(3, 6)),
                t(7, 10) * t(4, 7) * t(0, 4)};
      case 11:
        return {t(8, 11) * t(5, 8) * t(0, 5), t(0, 3) * t(6, 11) * t(3, 6),
                t(8, 11) * (c(Scalar(3) * (Scalar(1) + e(4))) * t(3, 8) * t(0, 3) + t(4, 8) * t(0, 4)) +
                    c(e(4)) * t(0, 3) * t(7, 11) * t(3, 7),
                t(7, 11) * (c(Scalar(1) + e(5) / Scalar(3)) * t(3, 7) * t(0, 3) - t(4, 7) * t(0, 4)) +
                    c(e(5)) * t(8, 11) * t(3, 8) * t(0, 3),
                c(e(6)) * t(0, 3) * (t(8, 11) * t(3, 8) + third * t(7, 11) * t(3, 7)) +
                    t(0, 4) * (t(7, 11) * t(4, 7) - t(8, 11) * t(4, 8))};
      case 12:
        return {t(9, 12) * q9, t(0, 3) * (t(8, 12) * t(3, 8) - t(7, 12) * t(3, 7)),
                t(8, 12) * (c(Scalar(3)) * t(3, 8) * t(0, 3) + c(Scalar(3)) * t(5, 8) * t(0, 5) + t(4, 8) * t(0, 4)),
                t(0, 4) * (c(Scalar(1) - e(7)) * t(7, 12) * t(4, 7) + t(9, 12) * t(4, 9) + third * t(8, 12) * t(4, 8)) +
                    c(e(7)) * t(7, 12) * t(3, 7) * t(0, 3),
                c(e(8)) * t(7, 12) * q7 + (t(8, 12) * t(5, 8) - t(9, 12) * t(5, 9)) * t(0, 5)};
      case 13:
        return {t(8, 13) * (t(3, 8) * t(0, 3) + t(5, 8) * t(0, 5) + c(Scalar(rat(1, 3)) - e(10)) * t(4, 8) * t(0, 4)) +
                    c(e(10)) * t(0, 4) * t(9, 13) * t(4, 9),
                t(0, 5) * (t(8, 13) * t(5, 8) + third * t(9, 13) * t(5, 9)) +
                    c(e(11)) * t(0, 4) * (t(9, 13) * t(4, 9) - t(8, 13) * t(4, 8)),
                t(9, 13) * (t(5, 9) * t(0, 5) + c(e(12) - Scalar(1)) * t(4, 9) * t(0, 4)) -
                    c(e(12)) * t(0, 4) * t(8, 13) * t(4, 8)};
      case 14:
        return {t(9, 14) * t(4, 9) * t(0, 4), t(0, 5) * t(9, 14) * t(5, 9)};
      default:
        return {};
    }
  }
  if (order == 4) {
    const SuperParamPoly q8 = c(Scalar(3)) * t(3, 8) * t(0, 3) + t(4, 8) * t(0, 4);
    switch (shift2) {
      case 12:
        return {t(9, 12) * t(6, 9) * t(3, 6) * t(0, 3)};
      case 13:
        return {t(10, 13) * t(7, 10) * t(3, 7) * t(0, 3), t(3, 6) * t(0, 3) * t(10, 13) * t(6, 10),
                t(9, 13) * t(6, 9) * t(3, 6) * t(0, 3)};
      case 14:
        return {t(9, 14) * t(6, 9) * t(3, 6) * t(0, 3), t(0, 3) * t(3, 6) * t(10, 14) * t(6, 10),
                t(0, 4) * t(4, 7) * t(11, 14) * t(7, 11), t(0, 3) * t(3, 7) * t(11, 14) * t(7, 11),
                t(0, 3) * t(10, 14) * t(7, 10) * t(3, 7), t(11, 14) * t(8, 11) * q8};
      case 15:
        return {t(0, 3) * t(3, 6) * t(10, 15) * t(6, 10), t(0, 3) * t(10, 15) * t(7, 10) * t(3, 7),
                t(0, 5) * t(5, 8) * t(12, 15) * t(8, 12), t(11, 15) * t(7, 11) * q7,
                t(11, 15) * t(8, 11) * q8, t(12, 15) * t(7, 12) * q7};
      case 16:
        return {c(e(14)) * t(12, 16) * t(7, 12) * q7 + t(13, 16) * t(9, 13) * q9,
                c(e(16)) * t(12, 16) * t(7, 12) * q7 + t(0, 4) * t(11, 16) * (t(7, 11) * t(4, 7) - t(8, 11) * t(4, 8)),
                (c(Scalar(1) + e(15)) * t(12, 16) * t(7, 12) - t(11, 16) * t(7, 11)) * q7,
                c(e(13)) * t(12, 16) * t(7, 12) * q7 + t(11, 16) * t(8, 11) * (t(3, 8) * t(0, 3) + third * t(4, 8) * t(0, 4)) +
                    t(13, 16) * t(8, 13) * (t(3, 8) * t(0, 3) + t(5, 8) * t(0, 5) + third * t(4, 8) * t(0, 4))};
      case 17:
        return {t(0, 5) * t(12, 17) * t(8, 12) * t(5, 8), t(13, 17) * t(9, 13) * q9, t(12, 17) * t(7, 12) * q7,
                t(13, 17) * t(8, 13) *
                    (c(Scalar(3)) * t(3, 8) * t(0, 3) + c(Scalar(3)) * t(5, 8) * t(0, 5) + t(4, 8) * t(0, 4))};
      case 18:
        return {t(13, 18) * t(9, 13) * q9};
      default:
        return {};
    }
  }
  if (order == 5) {
    switch (shift2) {
      case 19:
        return {t(16, 19) * t(12, 16) * t(7, 12) * q7};
      case 20:
        return {t(16, 20) * t(12, 16) * t(7, 12) * q7,
                t(0, 4) * t(16, 20) * t(11, 16) * (t(7, 11) * t(4, 7) - t(8, 11) * t(4, 8))};
      case 21:
        return {t(16, 21) * t(12, 16) * t(7, 12) * q7, t(16, 21) * t(13, 16) * t(9, 13) * q9,
                t(0, 5) * t(17, 21) * t(12, 17) * t(9, 12) * t(5, 9)};
      default:
        return {};
    }
  }
  return {};
}

}  // namespace

std::vector<Condition> reference_conditions(int order, int n2) {
  if (order < 2 || order > 5) throw std::invalid_argument("reference orders are 2..5");
  const Weight lowest = SymbolSpace::generic(0).lowest;
  std::vector<Condition> out;
  for (int shift2 = 10; shift2 <= n2 && shift2 <= 21; ++shift2)
    for (int a = 0; a + shift2 <= n2; ++a) {
      Window w(a, lowest);
      for (auto& g : block(order, shift2, w))
        if (!g.is_zero()) out.push_back({order, a, a + shift2, g});
    }
  return out;
}

}  // namespace kdef
