#include "holoskew/biskew.hpp"

#include <algorithm>
#include <numeric>

#include "holoskew/error.hpp"

namespace holoskew {

namespace {

std::string at_pair(Elem x, Elem y) { return "x = " + std::to_string(x) + ", y = " + std::to_string(y); }

std::optional<std::pair<Elem, Elem>> anti_hom_witness(const Group& g, const std::vector<Permutation>& v) {
  for (Elem x = 0; x < g.order(); ++x) {
    for (Elem y = 0; y < g.order(); ++y) {
      if (v[g.mul(x, y)] != compose(v[y], v[x])) return std::make_pair(x, y);
    }
  }
  return std::nullopt;
}

std::optional<std::pair<Elem, Elem>> hom_witness(const Group& g, const std::vector<Permutation>& v) {
  for (Elem x = 0; x < g.order(); ++x) {
    for (Elem y = 0; y < g.order(); ++y) {
      if (v[g.mul(x, y)] != compose(v[x], v[y])) return std::make_pair(x, y);
    }
  }
  return std::nullopt;
}

// gamma(x^gamma(y)) = gamma(y)^-1 gamma(x) gamma(y)
std::optional<std::pair<Elem, Elem>> equivariance_witness(const Group& g, const std::vector<Permutation>& v) {
  for (Elem x = 0; x < g.order(); ++x) {
    for (Elem y = 0; y < g.order(); ++y) {
      if (v[v[y][x]] != conjugate(v[x], v[y])) return std::make_pair(x, y);
    }
  }
  return std::nullopt;
}

void check_values(const Group& g, const std::vector<Permutation>& values) {
  if (values.size() != g.order()) throw Rejected("need one value per group element");
  for (Elem y = 0; y < g.order(); ++y) {
    if (!is_automorphism(g, values[y])) throw Rejected("value at " + std::to_string(y) + " is not an automorphism");
  }
}

}  // namespace

std::map<std::string, bool> BiskewReport::flags() const {
  return {{"swap_is_brace", swap_is_brace},
          {"rho_normalizes", rho_normalizes},
          {"anti_homomorphism", anti_homomorphism},
          {"gamma_equivariant", gamma_equivariant},
          {"function_pair", function_pair},
          {"bar_commutator_kernel", bar_commutator_kernel},
          {"commutator_word", commutator_word}};
}

BiskewReport biskew_report(const GammaFunction& gamma_in) {
  const Group& g = gamma_in.group;
  const GammaFunction gamma = make_gamma(g, gamma_in.values);
  const auto& v = gamma.values;
  const std::size_t n = g.order();
  BiskewReport r;

  // 1: (G, o) as additive group, . as circle operation
  const SkewBrace brace = circle_from_gamma(gamma);
  try {
    const GammaFunction swapped = gamma_from_circle(brace.circle, g.table());
    r.swap_is_brace = true;
    for (Elem y = 0; y < n; ++y) {
      ensure(swapped.values[y] == v[y].inverse(), "swapped gamma is not y -> gamma(y)^-1 at y = " + std::to_string(y));
    }
  } catch (const Rejected& e) {
    r.witnesses["swap_is_brace"] = e.what();
  }

  // 2
  r.rho_normalizes = is_normalized_by_rho(g, v);
  if (!r.rho_normalizes) r.witnesses["rho_normalizes"] = "some rho(s) conjugates N outside N";

  // 3
  if (auto w = anti_hom_witness(g, v)) {
    r.witnesses["anti_homomorphism"] = at_pair(w->first, w->second);
  } else {
    r.anti_homomorphism = true;
  }

  // 4
  if (auto w = equivariance_witness(g, v)) {
    r.witnesses["gamma_equivariant"] = at_pair(w->first, w->second);
  } else {
    r.gamma_equivariant = true;
  }

  // 5: the same two identities, checked on the raw value table
  {
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x) {
      for (Elem y = 0; y < n && ok; ++y) {
        const Permutation& gx = v[x];
        const Permutation& gy = v[y];
        const Permutation& gxy = v[g.mul(x, y)];
        const Permutation& gxgy = v[gy[x]];
        for (Elem w = 0; w < n; ++w) {
          // w^gamma(xy) = (w^gamma(y))^gamma(x) and gamma(y) gamma(x^gamma(y)) = gamma(x) gamma(y), at w
          if (gxy[w] != gx[gy[w]] || gxgy[gy[w]] != gy[gx[w]]) {
            ok = false;
            r.witnesses["function_pair"] = at_pair(x, y);
            break;
          }
        }
      }
    }
    r.function_pair = ok;
  }

  // 6: [x, bar(y)] = x^-1 x^bar(y) generate [G, bar(G)]
  {
    const GammaFunction bar = opposite_gamma(gamma);
    std::vector<Elem> seed;
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) seed.push_back(g.mul(g.inv(x), bar.values[y][x]));
    }
    std::sort(seed.begin(), seed.end());
    seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
    const Subgroup c = subgroup_closure(g, seed);
    r.bar_commutator_kernel = true;
    for (Elem z : c.members()) {
      if (!v[z].is_identity()) {
        r.bar_commutator_kernel = false;
        r.witnesses["bar_commutator_kernel"] = "gamma(" + std::to_string(z) + ") != 1";
        break;
      }
    }
  }

  // 7
  r.commutator_word = true;
  for (Elem x = 0; x < n && r.commutator_word; ++x) {
    for (Elem y = 0; y < n; ++y) {
      const Elem w = g.mul(g.mul(g.mul(g.inv(x), g.inv(y)), v[y][x]), y);
      if (!v[w].is_identity()) {
        r.commutator_word = false;
        r.witnesses["commutator_word"] = at_pair(x, y);
        break;
      }
    }
  }

  const auto f = r.flags();
  r.agreement = std::all_of(f.begin(), f.end(), [&](const auto& kv) { return kv.second == r.swap_is_brace; });
  ensure(r.agreement, "bi-skew criteria disagree");
  return r;
}

std::map<std::string, bool> BetaReport::flags() const {
  return {{"aut_preserved", aut_preserved},
          {"unique_iso_type", unique_iso_type},
          {"n_normal_in_hol", n_normal_in_hol},
          {"n_normalized_by_aut", n_normalized_by_aut},
          {"beta_equivariant", beta_equivariant},
          {"function_pair_beta", function_pair_beta}};
}

BetaReport beta_report(const HolGroup& hol, const GammaFunction& gamma) {
  const Group& g = hol.group();
  const AutGroup& aut = hol.aut();
  const auto& v = gamma.values;
  const std::size_t n = g.order();
  const SkewBrace brace = circle_from_gamma(gamma);
  const RegularSubgroup nsub = regular_from_gamma(hol, gamma);
  BetaReport r;

  r.aut_preserved = true;
  for (AutIndex b = 0; b < aut.size() && r.aut_preserved; ++b) {
    const Permutation& beta = aut[b];
    for (Elem x = 0; x < n && r.aut_preserved; ++x) {
      for (Elem y = 0; y < n; ++y) {
        if (beta[brace.circ(x, y)] != brace.circ(beta[x], beta[y])) {
          r.aut_preserved = false;
          r.witnesses["aut_preserved"] = "automorphism " + std::to_string(b) + " fails at " + at_pair(x, y);
          break;
        }
      }
    }
  }

  // orbit of N under Aut(G), closed over the generators
  {
    std::vector<RegularSubgroup> orbit{nsub};
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (AutIndex b : aut.generators()) {
        RegularSubgroup m = conjugate_by_aut(hol, orbit[i], b);
        if (std::find(orbit.begin(), orbit.end(), m) == orbit.end()) orbit.push_back(std::move(m));
      }
    }
    r.orbit_size = orbit.size();
    r.unique_iso_type = orbit.size() == 1;
    if (!r.unique_iso_type) r.witnesses["unique_iso_type"] = "orbit size " + std::to_string(orbit.size());
  }

  r.n_normal_in_hol = is_normal_in_hol(hol, nsub);
  if (!r.n_normal_in_hol) r.witnesses["n_normal_in_hol"] = "N is not normal in Hol(G)";
  r.n_normalized_by_aut = is_normalized_by_aut(hol, nsub);
  if (!r.n_normalized_by_aut) r.witnesses["n_normalized_by_aut"] = "some automorphism moves N";

  r.beta_equivariant = true;
  for (AutIndex b = 0; b < aut.size() && r.beta_equivariant; ++b) {
    const Permutation& beta = aut[b];
    for (Elem x = 0; x < n; ++x) {
      if (v[beta[x]] != conjugate(v[x], beta)) {
        r.beta_equivariant = false;
        r.witnesses["beta_equivariant"] = "automorphism " + std::to_string(b) + ", x = " + std::to_string(x);
        break;
      }
    }
  }

  const bool anti = !anti_hom_witness(g, v);
  r.function_pair_beta = anti && r.beta_equivariant;
  if (!r.function_pair_beta) r.witnesses["function_pair_beta"] = anti ? "beta-equivariance fails" : "not an anti-homomorphism";

  const auto f = r.flags();
  r.agreement = std::all_of(f.begin(), f.end(), [&](const auto& kv) { return kv.second == r.aut_preserved; });
  ensure(r.agreement, "normal-in-holomorph criteria disagree");
  if (r.aut_preserved) ensure(biskew_report(gamma).bi_skew(), "N normal in Hol(G) but the brace is not bi-skew");
  return r;
}

TwoOfThree two_of_three_gf(const Group& g, const std::vector<Permutation>& values) {
  check_values(g, values);
  TwoOfThree t;
  t.first = !gfe_witness(g, values);
  t.second = !anti_hom_witness(g, values);
  t.third = !equivariance_witness(g, values);
  ensure(t.count() != 2, "two of {GFE, anti-homomorphism, equivariance} hold without the third");
  return t;
}

TwoOfThree two_of_three_abelian(const GammaFunction& gamma) {
  const Group& g = gamma.group;
  const auto& v = gamma.values;
  TwoOfThree t;
  t.first = !hom_witness(g, v);
  t.second = true;
  for (Elem x = 0; x < g.order() && t.second; ++x) {
    for (Elem y = 0; y < g.order(); ++y) {
      if (compose(v[x], v[y]) != compose(v[y], v[x])) {
        t.second = false;
        break;
      }
    }
  }
  t.third = !anti_hom_witness(g, v);
  ensure(t.count() != 2, "two of {homomorphism, abelian image, anti-homomorphism} hold without the third");
  return t;
}

std::optional<std::size_t> BraceCensus::find(const RegularSubgroup& n) const {
  auto it = std::lower_bound(regs.begin(), regs.end(), n);
  if (it == regs.end() || !(*it == n)) return std::nullopt;
  return static_cast<std::size_t>(it - regs.begin());
}

BraceCensus brace_census(const Group& g) {
  BraceCensus c{HolGroup(g), {}, {}, {}, {}};
  c.regs = enumerate_regular_subgroups(c.hol);
  for (const auto& n : c.regs) c.gammas.push_back(gamma_from_regular(c.hol, n));

  std::vector<std::size_t> parent(c.regs.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < c.regs.size(); ++i) {
    for (AutIndex b : c.hol.aut().generators()) {
      auto j = c.find(conjugate_by_aut(c.hol, c.regs[i], b));
      ensure(j.has_value(), "Aut(G)-conjugate of a regular subgroup is missing from the enumeration");
      std::size_t a = root(i), d = root(*j);
      if (a != d) parent[std::max(a, d)] = std::min(a, d);
    }
  }
  c.orbit.resize(c.regs.size());
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < c.regs.size(); ++i) {
    c.orbit[i] = root(i);
    groups[c.orbit[i]].push_back(i);
  }
  for (auto& [k, members] : groups) c.orbits.push_back(std::move(members));
  return c;
}

std::vector<std::vector<std::size_t>> brace_iso_classes(const Group& g) { return brace_census(g).orbits; }

}  // namespace holoskew
