#include "suites.hpp"

#include <fstream>
#include <sstream>

#include "kdef/cohomology.hpp"
#include "kdef/densmod.hpp"
#include "kdef/errors.hpp"
#include "kdef/lemmas.hpp"
#include "kdef/reference.hpp"
#include "kdef/transvectants.hpp"

namespace kdef::cli {

namespace {

Scalar lam() { return SymbolSpace::generic(0).lowest; }

ContextPtr tau_lambda_ctx() {
  static ContextPtr c = make_context({"t", "l"});
  return c;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

std::string kill_str(const std::vector<ParamName>& ps) {
  std::vector<std::string> names;
  for (const auto& p : ps) names.push_back(p.str());
  return "{" + join(names, ", ") + "}";
}

}  // namespace

int predicted_singular_dim(int k, const Rational& tau, const Rational& lambda) {
  auto resonant = [&](const Rational& w, int& v) {
    Rational m = -2 * w;
    if (m.get_den() != 1 || m < 0 || m > k - 1) return false;
    v = static_cast<int>(m.get_num().get_si());
    return true;
  };
  int t = 0, s = 0;
  bool rt = resonant(tau, t), rs = resonant(lambda, s);
  return rt && rs && t > k - s - 2 ? 2 : 1;
}

Report verify_algebra(int jacobi_degree, int representation_degree) {
  Report r;
  r.command = "verify algebra";
  r.run("contact.jacobi", [&](std::string& d) {
    auto gens = monomial_generators(jacobi_degree);
    std::size_t n = 0;
    for (const auto& f : gens)
      for (const auto& g : gens)
        for (const auto& h : gens) {
          ++n;
          if (!jacobi_check(f, g, h)) {
            d = "fails at " + f.str() + ", " + g.str() + ", " + h.str();
            return false;
          }
        }
    d = std::to_string(n) + " triples, degree <= " + std::to_string(jacobi_degree);
    return true;
  });
  r.run("density.representation", [&](std::string& d) {
    Scalar l = lam();
    auto gens = monomial_generators(representation_degree);
    std::size_t n = 0;
    for (const auto& f : gens)
      for (const auto& g : gens) {
        ContactGen fg = contact_bracket(f, g);
        Scalar s(sign(f.parity() * g.parity()));
        for (int deg = 0; deg <= representation_degree; ++deg)
          for (int th = 0; th < 2; ++th) {
            ++n;
            Density h{SuperPoly::monomial(deg, th), l};
            SuperPoly lhs = lie_density(fg, h).f;
            SuperPoly rhs = lie_density(f, lie_density(g, h)).f - lie_density(g, lie_density(f, h)).f.scaled(s);
            if (lhs != rhs) {
              d = "fails at " + f.str() + ", " + g.str() + " on " + h.f.str();
              return false;
            }
          }
      }
    d = std::to_string(n) + " cases, degree <= " + std::to_string(representation_degree);
    return true;
  });
  r.run("params.supercommutativity", [&](std::string& d) {
    std::size_t n = 0;
    for (int n2 = 5; n2 <= 11; ++n2) {
      auto ps = parameters(SymbolSpace::generic(n2));
      for (const auto& p : ps)
        for (const auto& q : ps) {
          ++n;
          SuperParamPoly a = SuperParamPoly::variable(p), b = SuperParamPoly::variable(q);
          if (a * b != (b * a).scaled(Scalar(sign(p.parity() * q.parity())))) {
            d = "fails at " + p.str() + ", " + q.str();
            return false;
          }
          if (p == q && p.parity() && !(a * a).is_zero()) {
            d = "odd square nonzero: " + p.str();
            return false;
          }
        }
    }
    d = std::to_string(n) + " pairs, 2n = 5..11";
    return true;
  });
  r.run("params.count", [&](std::string& d) {
    for (int n2 = 5; n2 <= 16; ++n2) {
      int got = static_cast<int>(parameters(SymbolSpace::generic(n2)).size());
      if (got != 3 * n2 - 9) {
        d = "2n = " + std::to_string(n2) + ": " + std::to_string(got);
        return false;
      }
    }
    d = "6n - 9 for 2n = 5..16";
    return true;
  });
  return r;
}

Report verify_transvectants(int kmax2, int bump) {
  Report r;
  r.command = "verify transvectants --kmax " + half_str(kmax2);
  Scalar t = Scalar::generator(tau_lambda_ctx(), "t"), l = Scalar::generator(tau_lambda_ctx(), "l");
  for (int k = 0; k <= 6; ++k) {
    r.run("J_" + std::to_string(k) + ".recurrence", [&](std::string& d) {
      ClassicalBilin j = transvectant(k, t, l);
      bool rec = satisfies_recurrence(j), inv = check_sl2_invariance(j, k + 3);
      if (!rec) d = "recurrence fails";
      if (!inv) d += std::string(d.empty() ? "" : "; ") + "sl2 invariance fails";
      return rec && inv;
    });
  }
  r.run("J.singular_dimensions", [&](std::string& d) {
    int samples = 0, two = 0;
    for (int k = 2; k <= 6 && samples < 20; ++k)
      for (int a = 0; a <= k - 1 && samples < 20; ++a)
        for (int b = 0; b <= k - 1 && samples < 20; b += 2) {
          Rational tw = rat(-a, 2), lw = rat(-b, 2);
          auto space = transvectant_singular(k, tw, lw);
          int expected = predicted_singular_dim(k, tw, lw);
          if (static_cast<int>(space.size()) != expected) {
            d = "k = " + std::to_string(k) + ", tau = " + tw.get_str() + ", lambda = " + lw.get_str() + ": " +
                std::to_string(space.size()) + " vs " + std::to_string(expected);
            return false;
          }
          for (const auto& b : space)
            if (!satisfies_recurrence(b) || !check_sl2_invariance(b, k + 2)) {
              d = "k = " + std::to_string(k) + ": singular solution fails the recurrence or sl2 invariance";
              return false;
            }
          two += expected == 2;
          ++samples;
        }
    d = std::to_string(samples) + " resonant samples, " + std::to_string(two) + " two-dimensional";
    return true;
  });
  for (int k2 = 0; k2 <= kmax2; ++k2) {
    r.run("SJ_" + half_str(k2) + ".invariance", [&](std::string& d) {
      return check_invariance(supertransvectant(rat(k2, 2), t, l), &d, bump);
    });
  }
  return r;
}

Report verify_cocycles(const std::string& which) {
  Report r;
  r.command = "verify cocycles --which " + which;
  auto want = [&](const std::string& n) { return which == "all" || which == n; };
  bool any = false;
  Scalar l = lam();
  ContextPtr quad_r = make_algebraic_context("r", "2*r^2 + 7*r + 2");
  ContextPtr quad_a = make_algebraic_context("a", "2*a^2 + 10*a + 3");

  for (const auto& name : super_cocycle_names()) {
    if (!want(name)) continue;
    any = true;
    std::vector<Scalar> weights{l};
    if (name == "U[l,l+3]") weights = {Scalar(0), Scalar(rat(-5, 2))};
    if (name == "U[l,l+4]") weights = {Scalar::generator(quad_r, "r")};
    for (const auto& w : weights) {
      std::string label = name + (weights.size() > 1 || name == "U[l,l+4]" ? " at l=" + w.str() : "");
      r.run(label, [&](std::string& d) {
        NamedCocycle c = super_cocycle(name, w);
        Cochain1 u = Cochain1::from_bilin(c.body);
        if (!is_cocycle(u, 4, &d)) return false;
        if (c.osp_relative && !vanishes_on_osp(u, 6)) {
          d = "does not vanish on osp(1|2)";
          return false;
        }
        d = c.osp_relative ? "cocycle, vanishes on osp(1|2)" : "cocycle";
        return true;
      });
    }
  }
  const std::pair<const char*, int> props[] = {{"U[l,l+3/2]", 5}, {"U[l,l+2]", 6}, {"U[l,l+5/2]", 7}};
  for (const auto& [name, k2] : props) {
    if (!want(name)) continue;
    r.run(std::string(name) + ".proportional", [&](std::string& d) {
      auto c = proportionality(supertransvectant(rat(k2, 2), Scalar(-1), l), super_cocycle(name, l).body);
      if (!c || c->is_zero()) {
        d = "not proportional to the supertransvectant of order " + half_str(k2);
        return false;
      }
      d = "J[" + half_str(k2) + ";-1,l] = (" + c->str() + ") * cocycle";
      return true;
    });
  }
  for (const auto& name : classical_cocycle_names()) {
    if (!want(name)) continue;
    any = true;
    r.run(name, [&](std::string& d) {
      Scalar w = name.find("[a,") != std::string::npos ? Scalar::generator(quad_a, "a") : l;
      ClassicalBilin c = classical_cocycle(name, w);
      if (!classical_is_cocycle(c, w.context()->algebraic() ? 10 : c.order + 3, &d)) return false;
      if (name[0] == 'A' && !classical_vanishes_on_sl2(c)) {
        d = "does not vanish on sl2";
        return false;
      }
      d = name[0] == 'A' ? "cocycle, vanishes on sl2" : "cocycle";
      return true;
    });
  }
  for (const auto& name : two_cocycle_names()) {
    if (!want(name)) continue;
    any = true;
    r.run(name, [&](std::string& d) {
      Cochain2 b = two_cocycle(name, l);
      if (!is_cocycle(b, 2, &d)) return false;
      d = "2-cocycle";
      return true;
    });
  }
  if (!any) throw UsageError("unknown cocycle: " + which);
  return r;
}

Report verify_lemmas(const std::string& which, int bump) {
  Report r;
  r.command = "verify lemmas --which " + which;
  Scalar l = lam();
  std::vector<std::string> names = lemma_names();
  names.push_back("lth2");
  bool known = which == "all";
  for (const auto& n : names) known |= n == which;
  if (!known) throw UsageError("unknown lemma: " + which);

  Json results = Json::object();
  for (const auto& name : names) {
    if (which != "all" && which != name) continue;
    if (name == "lth2") {
      r.run("lth2.generic", [&](std::string& d) {
        CoboundarySolution s = solve_coboundary(two_cocycle("B[l,l+5]", l), 20, bump);
        bool cert = !s.solvable && check_certificate(s);
        d = s.solvable ? "solvable" : (cert ? "nontrivial, certificate checks" : "nontrivial, certificate fails");
        return cert;
      });
      for (const Rational& v : {rat(0), rat(-9, 2)}) {
        r.run("lth2.at " + v.get_str(), [&](std::string& d) {
          CoboundarySolution s = solve_coboundary(two_cocycle("B[l,l+5]", Scalar(v)), 20, bump);
          d = s.solvable ? "solvable" : "nontrivial";
          return s.solvable;
        });
      }
      continue;
    }
    for (const auto& id : lemma_identities(name, l)) {
      r.run(id.name, [&](std::string& d) {
        IdentityReport rep = check_identity(id, l, bump);
        Json j;
        j["holds"] = rep.holds;
        j["solvable"] = rep.solvable;
        j["unique"] = rep.unique;
        Json terms = Json::array();
        for (std::size_t i = 0; i < id.rhs.size(); ++i) {
          Json t;
          t["term"] = id.rhs[i].str();
          t["printed"] = rep.printed[i].str();
          if (rep.solvable) t["solved"] = rep.solved[i].str();
          terms.push_back(std::move(t));
        }
        j["terms"] = std::move(terms);
        results[id.name] = std::move(j);
        d = rep.holds ? "identity holds" : (rep.solvable ? "printed coefficients differ from the solved ones"
                                                         : "left side is not in the span of the right side");
        return rep.holds;
      });
    }
    for (const auto& sys : lemma_systems(name, l)) {
      r.run(sys.name, [&](std::string& d) {
        SystemReport rep = check_system(sys, l, bump, false);
        Json j;
        j["size"] = rep.size;
        j["rank"] = rep.rank;
        Json rel = Json::array();
        for (const auto& v : rep.relations) {
          Json row = Json::array();
          for (const auto& x : v) row.push_back(x.str());
          rel.push_back(std::move(row));
        }
        j["relations"] = std::move(rel);
        results[sys.name] = std::move(j);
        d = "rank " + std::to_string(rep.rank) + " of " + std::to_string(rep.size);
        return rep.independent();
      });
    }
  }
  r.result["lemmas"] = std::move(results);
  return r;
}

Report cohomology_solve(const std::string& omega, int order_bound, const std::string& lambda, int bump) {
  Report r;
  r.command = "cohomology solve --omega " + omega + " --order-bound " + std::to_string(order_bound) + " --lambda " +
              lambda;
  auto names = two_cocycle_names();
  if (std::find(names.begin(), names.end(), omega) == names.end()) throw UsageError("unknown 2-cocycle: " + omega);
  Scalar at;
  try {
    at = Scalar::parse(lambda, lam().context());
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad --lambda: ") + e.what());
  }
  Cochain2 w = two_cocycle(omega, at);
  CoboundarySolution s = solve_coboundary(w, order_bound, bump);
  r.result["omega"] = omega;
  r.result["lambda"] = at.str();
  r.result["solvable"] = s.solvable;
  r.result["ansatz_size"] = s.ansatz.size();
  r.result["relative_cocycles_in_ansatz"] = s.nullity;
  if (s.solvable) r.result["primitive"] = s.primitive.str();
  r.run("verdict", [&](std::string& d) {
    if (s.solvable) {
      Grid2 grid = band_grid2(weight_shift(w.src(), w.dst()), true, bump + 2);
      bool ok = fingerprint(delta1(Cochain1::from_bilin(s.primitive)), grid).values == fingerprint(w, grid).values;
      d = ok ? "coboundary, primitive re-checked on a larger grid" : "primitive fails the re-check";
      return ok;
    }
    bool ok = check_certificate(s);
    d = ok ? "not a coboundary, certificate checks" : "certificate fails";
    return ok;
  });
  return r;
}

namespace {

void check_n2(int n2) {
  if (n2 < 0 || n2 > 40) throw UsageError("--n must be between 0 and 20");
}

Json condition_json(const Condition& c) {
  Json j;
  j["order"] = c.order;
  j["src"] = offset_weight_str(c.src2);
  j["dst"] = offset_weight_str(c.dst2);
  j["generator"] = c.poly.str();
  return j;
}

ConditionIdeal reference_ideal(int n2, int max_order) {
  ConditionIdeal ri;
  for (int m = 2; m <= std::min(max_order, 5); ++m)
    for (const auto& c : reference_conditions(m, n2)) ri.add(c.poly);
  return ri;
}

}  // namespace

Report deform_conditions(int n2, int max_order) {
  check_n2(n2);
  if (max_order < 2) throw UsageError("--max-order must be at least 2");
  Report r;
  r.command = "deform conditions --n " + half_str(n2) + " --max-order " + std::to_string(max_order);
  MaurerCartan e(SymbolSpace::generic(n2));
  e.solve_to(max_order);
  r.result["n"] = half_str(n2);
  r.result["parameters"] = e.params().size();
  Json conds = Json::array();
  for (const auto& c : e.conditions()) conds.push_back(condition_json(c));
  r.result["generators"] = std::move(conds);

  r.run("order2.matches_reference", [&](std::string& d) {
    ConditionIdeal ri = reference_ideal(n2, 2), gi;
    std::size_t got = 0;
    for (const auto& c : e.conditions())
      if (c.order == 2) {
        gi.add(c.poly);
        ++got;
      }
    for (const auto& g : ri.generators())
      if (!gi.contains(g)) {
        d = "reference generator missing: " + g.str();
        return false;
      }
    for (const auto& g : gi.generators())
      if (!ri.contains(g)) {
        d = "extra generator: " + g.str();
        return false;
      }
    d = std::to_string(got) + " generators";
    return true;
  });
  r.run("ideal.within_reference", [&](std::string& d) {
    ConditionIdeal ri = reference_ideal(n2, max_order);
    for (const auto& c : e.conditions())
      if (c.order <= 5 && !ri.contains(c.poly)) {
        d = "not in the reference ideal: " + c.poly.str();
        return false;
      }
    d = "every generator of order <= 5 lies in the reference ideal";
    return true;
  });
  if (n2 < 10) return r;
  Json ref = Json::array();
  for (int m = 2; m <= std::min(max_order, 5); ++m) {
    auto rc = reference_conditions(m, n2);
    std::size_t in = 0;
    for (const auto& c : rc) in += e.ideal().contains(c.poly);
    ref.push_back({{"order", m}, {"reference_generators", rc.size()}, {"in_engine_ideal", in}});
  }
  r.result["reference"] = std::move(ref);
  return r;
}

Report deform_enumerate(int n2, int max_order) {
  check_n2(n2);
  Report r;
  r.command = "deform enumerate --n " + half_str(n2) + " --max-order " + std::to_string(max_order);
  MaurerCartan e(SymbolSpace::generic(n2));
  e.solve_to(max_order);
  auto fams = enumerate_maximal(e.ideal(), e.params());
  r.result["n"] = half_str(n2);
  r.result["parameters"] = e.params().size();
  r.result["families"] = fams.size();
  r.result["free_parameters"] = fams.empty() ? 0 : fams.front().free_parameters;
  Json sets = Json::array();
  for (const auto& f : fams) {
    Json s = Json::array();
    for (const auto& p : f.killed) s.push_back(p.str());
    sets.push_back(std::move(s));
  }
  r.result["kill_sets"] = std::move(sets);
  r.run("families.annihilate_ideal", [&](std::string& d) {
    for (const auto& f : fams) {
      std::map<ParamName, Scalar> a;
      for (const auto& p : f.killed) a[p] = Scalar(0);
      if (!e.ideal().annihilated_by(a)) {
        d = "family " + kill_str(f.killed) + " leaves a generator";
        return false;
      }
    }
    d = std::to_string(fams.size()) + " families";
    return true;
  });
  return r;
}

std::map<ParamName, Scalar> read_assignment(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read assignment file: " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const std::exception& e) {
    throw UsageError(std::string("assignment file is not JSON: ") + e.what());
  }
  if (!j.is_object()) throw UsageError("assignment file must be a JSON object");
  std::map<ParamName, Scalar> out;
  for (const auto& [k, v] : j.items()) {
    try {
      std::string text = v.is_string() ? v.get<std::string>() : v.dump();
      out[ParamName::parse(k)] = Scalar::parse(text, lam().context());
    } catch (const std::exception& e) {
      throw UsageError("bad assignment entry " + k + ": " + e.what());
    }
  }
  return out;
}

Report deform_check(int n2, const std::string& assignment_file, int t_degree, int bump) {
  check_n2(n2);
  auto a = read_assignment(assignment_file);
  Report r;
  r.command = "deform check --n " + half_str(n2) + " --t-degree " + std::to_string(t_degree);
  MaurerCartan e(SymbolSpace::generic(n2));
  std::vector<std::string> assigned;
  for (const auto& [p, v] : a) assigned.push_back(p.str() + " = " + v.str());
  r.result["n"] = half_str(n2);
  r.result["assignment"] = assigned;
  r.run("ideal.annihilated", [&](std::string& d) {
    e.solve_to(std::min(t_degree, n2 / 3));
    std::size_t n = 0;
    for (const auto& g : e.ideal().generators()) {
      ++n;
      if (!g.substituted(a).is_zero()) {
        d = "assignment leaves " + g.str() + " nonzero";
        return false;
      }
    }
    d = std::to_string(n) + " generators vanish";
    return true;
  });
  r.run("homomorphism", [&](std::string& d) {
    HomomorphismCheck h = verify_formal_deformation(e, a, t_degree, false, bump);
    r.result["points"] = h.points;
    d = h.holds ? "holds modulo t-degree > " + std::to_string(t_degree) : h.witness;
    return h.holds;
  });
  return r;
}

}  // namespace kdef::cli
