#include "kdef/deformation.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "kdef/errors.hpp"

namespace kdef {

SymbolSpace SymbolSpace::generic(int n2) {
  if (n2 < 0) throw std::invalid_argument("2n must be a natural number");
  return SymbolSpace{n2, Scalar::generator(make_context({"l"}), "l")};
}

std::string half_str(int v2) {
  if (v2 % 2 == 0) return std::to_string(v2 / 2);
  return std::to_string(v2) + "/2";
}

int parse_half(const std::string& text) {
  try {
    std::size_t used = 0;
    std::size_t slash = text.find('/');
    if (slash != std::string::npos) {
      std::string num = text.substr(0, slash), den = text.substr(slash + 1);
      int v = std::stoi(num, &used);
      if (used != num.size()) throw ParseError("bad half-integer: " + text);
      if (den == "1") return 2 * v;
      if (den != "2") throw ParseError("not a half-integer: " + text);
      return v;
    }
    std::size_t dot = text.find('.');
    if (dot != std::string::npos) {
      std::string frac = text.substr(dot + 1);
      std::string whole = text.substr(0, dot);
      int v = std::stoi(whole, &used);
      if (used != whole.size()) throw ParseError("bad half-integer: " + text);
      if (frac.find_first_not_of('0') == std::string::npos) return 2 * v;
      if (frac.size() >= 1 && frac[0] == '5' && frac.find_first_not_of('0', 1) == std::string::npos)
        return 2 * v + (text[0] == '-' ? -1 : 1);
      throw ParseError("not a half-integer: " + text);
    }
    int v = std::stoi(text, &used);
    if (used != text.size()) throw ParseError("bad half-integer: " + text);
    return 2 * v;
  } catch (const std::logic_error&) {
    throw ParseError("bad half-integer: " + text);
  }
}

Cochain1 pair_op(const Weight& lambda, int shift2) {
  static const char* const kNames[] = {"U[l,l+3/2]", "U[l,l+2]", "U[l,l+5/2]"};
  if (shift2 >= 3 && shift2 <= 5) return Cochain1::from_bilin(super_cocycle(kNames[shift2 - 3], lambda).body);
  if (shift2 >= 6) return Cochain1::from_bilin(supertransvectant(rat(shift2 + 2, 2), Scalar(-1), lambda));
  throw std::invalid_argument("no deformation operator of shift " + half_str(shift2));
}

std::string pair_op_name(int src2, int shift2) {
  if (shift2 <= 5) return "U[" + offset_weight_str(src2) + "," + offset_weight_str(src2 + shift2) + "]";
  return "J[" + half_str(shift2 + 2) + ";-1," + offset_weight_str(src2) + "]";
}

std::vector<ParamName> parameters(const SymbolSpace& s) {
  std::vector<ParamName> ps;
  for (int a = 0; a <= s.n2; ++a)
    for (int k = 3; k <= 5; ++k)
      if (a + k <= s.n2) ps.push_back({a, a + k});
  std::sort(ps.begin(), ps.end());
  return ps;
}

DefTerm build_infinitesimal(const SymbolSpace& s) {
  DefTerm t{1, {}};
  for (const auto& p : parameters(s))
    t.entries.push_back({p.src2, p.dst2, SuperParamPoly::variable(p), pair_op_name(p.src2, p.shift2())});
  return t;
}

MaurerCartan::MaurerCartan(SymbolSpace s, EngineOptions opts)
    : space_(std::move(s)), opts_(opts), params_(parameters(space_)) {
  coeffs_.resize(2);
  for (const auto& p : params_) coeffs_[1][{p.src2, p.dst2}] = SuperParamPoly::variable(p);
}

SuperParamPoly MaurerCartan::coeff(int order, int src2, int dst2) const {
  if (order < 1 || order > solved_order()) return {};
  auto it = coeffs_[order].find({src2, dst2});
  return it == coeffs_[order].end() ? SuperParamPoly() : it->second;
}

DefTerm MaurerCartan::term(int order) const {
  DefTerm t{order, {}};
  if (order < 1 || order > solved_order()) return t;
  for (const auto& [pair, c] : coeffs_[order])
    t.entries.push_back({pair.first, pair.second, c, pair_op_name(pair.first, pair.second - pair.first)});
  return t;
}

std::map<int, SuperParamPoly> MaurerCartan::quadratic(int order, int src2, int shift2) const {
  std::map<int, SuperParamPoly> r;
  for (int s2 = 3; s2 + 3 <= shift2; ++s2) {
    SuperParamPoly sum;
    for (int i = 1; i < order; ++i) {
      SuperParamPoly up = coeff(i, src2 + s2, src2 + shift2);
      if (up.is_zero()) continue;
      SuperParamPoly lo = coeff(order - i, src2, src2 + s2);
      if (lo.is_zero()) continue;
      sum += up * lo;
    }
    sum = ideal_.reduce_monomials(sum);
    if (!sum.is_zero()) r.emplace(s2, std::move(sum));
  }
  return r;
}

std::vector<RhsEntry> MaurerCartan::rhs(int order) const {
  if (order < 2 || order > solved_order() + 1) throw std::invalid_argument("rhs needs the lower orders solved");
  std::vector<RhsEntry> out;
  for (int shift2 = 6; shift2 <= space_.n2; ++shift2)
    for (int a = 0; a + shift2 <= space_.n2; ++a)
      for (auto& [s2, c] : quadratic(order, a, shift2)) out.push_back({a, a + s2, a + shift2, c});
  return out;
}

const MaurerCartan::Decomposition& MaurerCartan::decomposition(int shift2, const std::vector<int>& inner, int window) {
  auto wkey = std::make_tuple(shift2, inner, window);
  if (auto it = windows_.find(wkey); it != windows_.end()) return it->second;

  auto gkey = std::make_pair(shift2, inner);
  auto git = generic_.find(gkey);
  if (git == generic_.end()) {
    const Weight& l = space_.lowest;
    Grid2 grid = band_grid2(rat(shift2, 2), true, opts_.bump);
    Vector d = fingerprint(delta1(pair_op(l, shift2)), grid).values;
    if (is_zero_vector(d))
      throw BasisDegeneracy("delta of " + pair_op_name(0, shift2) + " vanishes at generic weight");
    std::vector<Vector> cols{d};
    Decomposition dec;
    for (int s2 : inner) {
      Vector v = fingerprint(cup(pair_op(l + half(s2), shift2 - s2), pair_op(l, s2)), grid).values;
      Matrix a(d.size(), cols.size());
      for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < d.size(); ++i) a(i, j) = cols[j][i];
      LinearSolution sol = solve_linear(a, v);
      if (sol.consistent) {
        std::vector<Scalar> on_pivots(sol.particular.begin() + 1, sol.particular.end());
        dec.nonpivot.emplace(s2, std::make_pair(sol.particular[0], on_pivots));
      } else {
        cols.push_back(v);
        dec.pivots.push_back(s2);
      }
    }
    for (auto& [s2, coeffs] : dec.nonpivot) coeffs.second.resize(dec.pivots.size(), Scalar(0));
    git = generic_.emplace(gkey, std::move(dec)).first;
  }

  Decomposition shifted = git->second;
  if (window != 0) {
    Scalar at = space_.lowest + half(window);
    auto sub = [&](const Scalar& x) { return substitute(x, "l", at); };
    for (auto& [s2, coeffs] : shifted.nonpivot) {
      coeffs.first = sub(coeffs.first);
      for (auto& c : coeffs.second) c = sub(c);
    }
  }
  return windows_.emplace(wkey, std::move(shifted)).first->second;
}

MaurerCartan::Step MaurerCartan::step(int order) {
  Step st;
  for (int shift2 = 6; shift2 <= space_.n2; ++shift2) {
    for (int a = 0; a + shift2 <= space_.n2; ++a) {
      std::map<int, SuperParamPoly> r = quadratic(order, a, shift2);
      if (r.empty()) continue;
      std::vector<int> inner;
      for (auto it = r.rbegin(); it != r.rend(); ++it) inner.push_back(it->first);
      const Decomposition& dec = decomposition(shift2, inner, a);
      SuperParamPoly p;
      for (const auto& [s2, coeffs] : dec.nonpivot) p -= r.at(s2).scaled(coeffs.first);
      if (!p.is_zero()) st.coeffs[{a, a + shift2}] = p;
      for (std::size_t k = 0; k < dec.pivots.size(); ++k) {
        SuperParamPoly cond = r.at(dec.pivots[k]);
        for (const auto& [s2, coeffs] : dec.nonpivot) cond += r.at(s2).scaled(coeffs.second[k]);
        if (!cond.is_zero()) st.conditions.push_back({order, a, a + shift2, cond});
      }
    }
  }
  return st;
}

void MaurerCartan::solve_to(int order) {
  while (solved_order() < order) {
    const int m = solved_order() + 1;
    Step st = step(m);
    for (const auto& c : st.conditions) {
      SuperParamPoly r = ideal_.reduce_monomials(c.poly);
      if (r.is_zero() || ideal_.contains(r)) continue;
      ideal_.add(r);
      conditions_.push_back({c.order, c.src2, c.dst2, r.monic()});
    }
    std::map<std::pair<int, int>, SuperParamPoly> reduced;
    for (auto& [pair, c] : st.coeffs) {
      SuperParamPoly r = ideal_.reduce_monomials(c);
      if (!r.is_zero()) reduced.emplace(pair, std::move(r));
    }
    coeffs_.push_back(std::move(reduced));
  }
}

std::vector<Condition> MaurerCartan::obstructions(int order) {
  if (order != solved_order() + 1) throw std::invalid_argument("obstructions are computed for the next unsolved order");
  std::vector<Condition> out;
  ConditionIdeal seen = ideal_;
  for (const auto& c : step(order).conditions) {
    SuperParamPoly r = seen.reduce_monomials(c.poly);
    if (r.is_zero() || seen.contains(r)) continue;
    seen.add(r);
    out.push_back({c.order, c.src2, c.dst2, r.monic()});
  }
  return out;
}

ConditionIdeal integrability_ideal(const SymbolSpace& s, int max_order) {
  MaurerCartan engine(s);
  engine.solve_to(max_order);
  return engine.ideal();
}

std::vector<Family> enumerate_maximal(const ConditionIdeal& ideal, const std::vector<ParamName>& params) {
  std::set<std::vector<ParamName>> sets;
  for (const auto& g : ideal.generators())
    for (const auto& [m, c] : g.terms()) {
      std::vector<ParamName> vs(m.begin(), m.end());
      vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
      sets.insert(vs);
    }
  std::vector<std::vector<ParamName>> minimal;
  for (const auto& s : sets) {
    bool redundant = false;
    for (const auto& o : sets)
      if (o != s && std::includes(s.begin(), s.end(), o.begin(), o.end())) redundant = true;
    if (!redundant) minimal.push_back(s);
  }

  std::set<std::vector<ParamName>> found;
  std::vector<ParamName> chosen;
  std::function<void(std::size_t)> search = [&](std::size_t budget) {
    const std::vector<ParamName>* open = nullptr;
    for (const auto& s : minimal) {
      bool hit = std::any_of(s.begin(), s.end(),
                             [&](const ParamName& p) { return std::find(chosen.begin(), chosen.end(), p) != chosen.end(); });
      if (!hit) {
        open = &s;
        break;
      }
    }
    if (!open) {
      std::vector<ParamName> k = chosen;
      std::sort(k.begin(), k.end());
      found.insert(k);
      return;
    }
    if (budget == 0) return;
    for (const auto& p : *open) {
      chosen.push_back(p);
      search(budget - 1);
      chosen.pop_back();
    }
  };
  for (std::size_t k = 0; found.empty(); ++k) search(k);

  std::vector<Family> out;
  for (const auto& k : found) out.push_back({k, static_cast<int>(params.size() - k.size())});
  return out;
}

namespace {

using State = std::map<std::pair<ParamMonomial, int>, SuperPoly>;

struct LiveEntry {
  int dst2;
  int parity;
  SuperParamPoly coeff;
  Cochain1 op;
};

void accumulate(State& s, const ParamMonomial& m, int comp, const SuperPoly& v) {
  if (v.is_zero()) return;
  auto key = std::make_pair(m, comp);
  auto it = s.find(key);
  if (it == s.end()) {
    s.emplace(key, v);
    return;
  }
  it->second += v;
  if (it->second.is_zero()) s.erase(it);
}

}  // namespace

HomomorphismCheck verify_formal_deformation(MaurerCartan& engine, const std::map<ParamName, Scalar>& assignment,
                                            int t_degree_bound, bool enforce_ideal, int bump) {
  const SymbolSpace& sp = engine.space();
  engine.solve_to(std::min(t_degree_bound, sp.n2 / 3));
  if (enforce_ideal) {
    for (const auto& g : engine.ideal().generators())
      if (!g.substituted(assignment).is_zero()) throw IdealViolation("assignment leaves " + g.str() + " nonzero");
  } else {
    for (const auto& [p, v] : assignment)
      if (p.parity() && !v.is_zero()) throw std::invalid_argument("odd parameter " + p.str() + " can only be assigned 0");
  }

  std::map<int, std::vector<LiveEntry>> by_src;
  std::map<std::pair<int, int>, Cochain1> ops;
  for (int m = 1; m <= engine.solved_order(); ++m) {
    for (const auto& e : engine.term(m).entries) {
      SuperParamPoly c = e.coeff.substituted(assignment).truncated(t_degree_bound);
      if (c.is_zero()) continue;
      const int shift2 = e.dst2 - e.src2;
      auto key = std::make_pair(e.src2, shift2);
      auto it = ops.find(key);
      if (it == ops.end()) it = ops.emplace(key, pair_op(sp.weight(e.src2), shift2)).first;
      by_src[e.src2].push_back({e.dst2, shift2 & 1, c, it->second});
    }
  }

  auto apply = [&](const ContactGen& g, const State& in, int max_comp) {
    State out;
    const int pg = g.parity();
    for (const auto& [key, f] : in) {
      const auto& [m, a] = key;
      const int pm = monomial_parity(m);
      accumulate(out, m, a, lie_density(g, {f, sp.weight(a)}).f.scaled(Scalar(sign(pm * pg))));
      auto it = by_src.find(a);
      if (it == by_src.end()) continue;
      for (const auto& e : it->second) {
        if (e.dst2 > max_comp) continue;
        SuperPoly cf = e.op(g, f);
        if (cf.is_zero()) continue;
        const int s0 = sign(pm * (e.parity + pg));
        for (const auto& [pmono, pc] : e.coeff.terms()) {
          if (static_cast<int>(pmono.size() + m.size()) > t_degree_bound) continue;
          ParamMonomial nm = pmono;
          nm.insert(nm.end(), m.begin(), m.end());
          const int s = canonicalize(nm);
          if (s == 0) continue;
          accumulate(out, nm, e.dst2, cf.scaled(pc * Scalar(s * s0)));
        }
      }
    }
    return out;
  };

  HomomorphismCheck res;
  for (int a = 0; a <= sp.n2; ++a) {
    for (int b = a; b <= sp.n2; ++b) {
      Grid2 grid = band_grid2(rat(b - a, 2), false, bump);
      for (const auto& [ug, uh, uf] : grid.points) {
        ContactGen g = unit_generator(ug), h = unit_generator(uh);
        State in;
        in.emplace(std::make_pair(ParamMonomial{}, a), unit_monomial(uf));
        State gh = apply(g, apply(h, in, b), b);
        State hg = apply(h, apply(g, in, b), b);
        State br = apply(contact_bracket(g, h), in, b);
        const int sgn = sign(g.parity() * h.parity());
        for (const auto& [key, v] : hg) accumulate(gh, key.first, key.second, v.scaled(Scalar(-sgn)));
        for (const auto& [key, v] : br) accumulate(gh, key.first, key.second, -v);
        ++res.points;
        for (const auto& [key, v] : gh) {
          if (key.second != b) continue;
          std::ostringstream os;
          os << "g = " << g.str() << ", h = " << h.str() << ", F = " << unit_monomial(uf).str() << " in F_"
             << offset_weight_str(a) << ", component F_" << offset_weight_str(b) << ", coefficient of "
             << monomial_str(key.first) << ": " << v.str();
          res.witness = os.str();
          return res;
        }
      }
    }
  }
  res.holds = true;
  return res;
}

}  // namespace kdef
