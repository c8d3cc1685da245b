#include "holoskew/gamma.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "holoskew/error.hpp"

namespace holoskew {

namespace {

std::string pair_str(Elem x, Elem y) {
  std::ostringstream os;
  os << "(x, y) = (" << x << ", " << y << ")";
  return os.str();
}

std::string triple_str(Elem x, Elem y, Elem z) {
  std::ostringstream os;
  os << "(x, y, z) = (" << x << ", " << y << ", " << z << ")";
  return os.str();
}

std::vector<Elem> circle_table_of(const Group& g, std::span<const Permutation> values) {
  const std::size_t n = g.order();
  std::vector<Elem> t(n * n);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) t[x * n + y] = g.mul(values[y][x], y);
  }
  return t;
}

}  // namespace

const Permutation& RelativeGammaFunction::at(Elem a) const {
  const auto& m = domain.members();
  auto it = std::lower_bound(m.begin(), m.end(), a);
  if (it == m.end() || *it != a) throw Rejected("relative gamma function evaluated outside its domain");
  return values[static_cast<std::size_t>(it - m.begin())];
}

GammaFunction trivial_gamma(const Group& g) {
  return GammaFunction{g, std::vector<Permutation>(g.order(), Permutation::identity(g.order()))};
}

std::optional<std::pair<Elem, Elem>> gfe_witness(const Group& g, std::span<const Permutation> values) {
  for (Elem x = 0; x < g.order(); ++x) {
    for (Elem y = 0; y < g.order(); ++y) {
      const Elem z = g.mul(values[y][x], y);
      const Permutation& lhs = values[z];
      const Permutation& a = values[x];
      const Permutation& b = values[y];
      for (Elem w = 0; w < g.order(); ++w) {
        if (lhs[w] != b[a[w]]) return std::make_pair(x, y);
      }
    }
  }
  return std::nullopt;
}

GammaFunction make_gamma(const Group& g, std::vector<Permutation> values) {
  if (values.size() != g.order()) throw Rejected("gamma function needs one value per group element");
  for (Elem y = 0; y < g.order(); ++y) {
    if (!is_automorphism(g, values[y])) {
      throw Rejected("gamma(" + std::to_string(y) + ") is not an automorphism");
    }
  }
  if (auto w = gfe_witness(g, values)) {
    throw Rejected("gamma functional equation fails at " + pair_str(w->first, w->second));
  }
  return GammaFunction{g, std::move(values)};
}

SkewBrace circle_from_gamma(const GammaFunction& gamma) {
  const Group& g = gamma.group;
  GammaFunction checked = make_gamma(g, gamma.values);
  Group circle = Group::from_table(circle_table_of(g, gamma.values), "circle");
  for (Elem x = 0; x < g.order(); ++x) {
    for (Elem y = 0; y < g.order(); ++y) {
      const Elem lhs_xy = g.mul(x, y);
      for (Elem z = 0; z < g.order(); ++z) {
        const Elem lhs = circle.mul(lhs_xy, z);
        const Elem rhs = g.mul(g.mul(circle.mul(x, z), g.inv(z)), circle.mul(y, z));
        ensure(lhs == rhs, "brace axiom fails at " + triple_str(x, y, z));
      }
    }
  }
  return SkewBrace{g, std::move(circle), std::move(checked)};
}

GammaFunction gamma_from_circle(const Group& g, std::span<const Elem> circle_table) {
  const std::size_t n = g.order();
  if (circle_table.size() != n * n) throw Rejected("circle table has the wrong size");
  const Group circle = Group::from_table(std::vector<Elem>(circle_table.begin(), circle_table.end()));
  std::vector<std::vector<Elem>> maps(n, std::vector<Elem>(n));
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) maps[y][x] = g.mul(circle.mul(x, y), g.inv(y));
  }
  for (Elem y = 0; y < n; ++y) {
    if (!is_endomorphism(g, maps[y])) {
      throw Rejected("not a skew brace: correspondence row 'axiom / gamma(g) in End(G)' fails for y = " +
                     std::to_string(y));
    }
  }
  std::vector<Permutation> values;
  for (Elem y = 0; y < n; ++y) {
    std::vector<char> seen(n, 0);
    for (Elem v : maps[y]) {
      if (seen[v]++) {
        throw Rejected("not a skew brace: correspondence row 'inverses / gamma(g) bijective' fails for y = " +
                       std::to_string(y));
      }
    }
    values.emplace_back(std::move(maps[y]));
  }
  if (auto w = gfe_witness(g, values)) {
    throw Rejected("not a skew brace: correspondence row 'associativity / GFE' fails at " + pair_str(w->first, w->second));
  }
  return GammaFunction{g, std::move(values)};
}

GammaFunction gamma_from_regular(const HolGroup& hol, const RegularSubgroup& n) {
  std::vector<Permutation> values;
  values.reserve(n.size());
  for (Elem g = 0; g < n.size(); ++g) values.push_back(hol.aut()[n.gamma[g]]);
  return GammaFunction{hol.group(), std::move(values)};
}

RegularSubgroup regular_from_gamma(const HolGroup& hol, const GammaFunction& gamma) {
  std::vector<HolElement> elems;
  for (Elem y = 0; y < gamma.values.size(); ++y) {
    auto idx = hol.aut().index_of(gamma.values[y]);
    if (!idx) throw Rejected("gamma(" + std::to_string(y) + ") is not an automorphism");
    elems.push_back({*idx, y});
  }
  auto n = regular_subgroup_from_elements(hol, elems);
  if (!n) throw Rejected("{gamma(y) rho(y)} is not a regular subgroup: gamma is not a gamma function");
  return *n;
}

bool Table1Report::all_hold() const {
  return std::all_of(rows.begin(), rows.end(), [](const Table1Row& r) { return r.circle_holds && r.gamma_holds; });
}

Table1Report validate_table1(const Group& g, const std::vector<std::vector<Elem>>& maps) {
  const std::size_t n = g.order();
  if (maps.size() != n) throw Rejected("need one map per group element");
  for (const auto& m : maps) {
    if (m.size() != n) throw Rejected("each map must have one image per group element");
    for (Elem v : m) {
      if (v >= n) throw Rejected("map image out of range");
    }
  }
  auto circ = [&](Elem x, Elem y) { return g.mul(maps[y][x], y); };
  Table1Report rep;

  Table1Row r1{"axiom (xy) o z = (x o z) z^-1 (y o z)", "gamma(g) in End(G)", true, true, {}};
  for (Elem x = 0; x < n && r1.circle_holds; ++x) {
    for (Elem y = 0; y < n && r1.circle_holds; ++y) {
      for (Elem z = 0; z < n; ++z) {
        if (circ(g.mul(x, y), z) != g.mul(g.mul(circ(x, z), g.inv(z)), circ(y, z))) {
          r1.circle_holds = false;
          r1.witness = "axiom fails at " + triple_str(x, y, z);
          break;
        }
      }
    }
  }
  for (Elem y = 0; y < n; ++y) {
    if (!is_endomorphism(g, maps[y])) {
      r1.gamma_holds = false;
      if (r1.witness.empty()) r1.witness = "gamma(" + std::to_string(y) + ") is not an endomorphism";
      break;
    }
  }

  Table1Row r2{"o is associative", "gamma(x^gamma(y) y) = gamma(x) gamma(y)", true, true, {}};
  for (Elem x = 0; x < n && r2.circle_holds; ++x) {
    for (Elem y = 0; y < n && r2.circle_holds; ++y) {
      for (Elem z = 0; z < n; ++z) {
        if (circ(circ(x, y), z) != circ(x, circ(y, z))) {
          r2.circle_holds = false;
          r2.witness = "associativity fails at " + triple_str(x, y, z);
          break;
        }
      }
    }
  }
  for (Elem x = 0; x < n && r2.gamma_holds; ++x) {
    for (Elem y = 0; y < n && r2.gamma_holds; ++y) {
      const auto& lhs = maps[circ(x, y)];
      for (Elem w = 0; w < n; ++w) {
        if (lhs[w] != maps[y][maps[x][w]]) {
          r2.gamma_holds = false;
          if (r2.witness.empty()) r2.witness = "GFE fails at " + pair_str(x, y);
          break;
        }
      }
    }
  }

  Table1Row r3{"o admits inverses", "gamma(g) is bijective", true, true, {}};
  // identity 0 on both sides, then a two-sided inverse for every x
  for (Elem x = 0; x < n && r3.circle_holds; ++x) {
    if (circ(0, x) != x || circ(x, 0) != x) {
      r3.circle_holds = false;
      r3.witness = "0 is not a two-sided identity for o at x = " + std::to_string(x);
    }
  }
  for (Elem x = 0; x < n && r3.circle_holds; ++x) {
    bool found = false;
    for (Elem y = 0; y < n && !found; ++y) found = circ(x, y) == 0 && circ(y, x) == 0;
    if (!found) {
      r3.circle_holds = false;
      r3.witness = "no inverse for x = " + std::to_string(x);
    }
  }
  for (Elem y = 0; y < n && r3.gamma_holds; ++y) {
    std::vector<char> seen(n, 0);
    for (Elem v : maps[y]) {
      if (seen[v]++) {
        r3.gamma_holds = false;
        if (r3.witness.empty()) r3.witness = "gamma(" + std::to_string(y) + ") is not bijective";
        break;
      }
    }
  }

  ensure(r1.circle_holds == r1.gamma_holds, "correspondence row 1 sides disagree");
  if (r1.gamma_holds) ensure(r2.circle_holds == r2.gamma_holds, "correspondence row 2 sides disagree under row 1");
  if (r1.gamma_holds && r2.gamma_holds) {
    ensure(!r3.gamma_holds || r3.circle_holds, "bijective gamma without inverses for o");
  }

  rep.caveats = {
      "row 1: the two properties are equivalent",
      "row 2: equivalent only when row 1 holds",
      "row 3: the gamma property implies the circle property; the converse needs the row 2 gamma property",
      "row 1 forces o to share the identity 0 of (G, .)",
  };
  rep.rows = {std::move(r1), std::move(r2), std::move(r3)};
  return rep;
}

RgfCheck validate_rgf(const RelativeGammaFunction& rgf) {
  const Group& g = rgf.group;
  const auto& dom = rgf.domain.members();
  RgfCheck out{true, true, {}};
  for (std::size_t i = 0; i < dom.size() && out.invariant; ++i) {
    for (Elem a : dom) {
      if (!rgf.domain.contains(rgf.values[i][a])) {
        out.invariant = false;
        out.witness = "gamma'(" + std::to_string(dom[i]) + ") moves " + std::to_string(a) + " out of A";
        break;
      }
    }
  }
  for (Elem x : dom) {
    for (Elem y : dom) {
      const Elem z = g.mul(rgf.at(y)[x], y);
      if (!rgf.domain.contains(z) || rgf.at(z) != compose(rgf.at(x), rgf.at(y))) {
        out.gfe = false;
        if (out.witness.empty()) out.witness = "GFE fails at " + pair_str(x, y);
        return out;
      }
    }
  }
  return out;
}

Subgroup kernel_gamma(const GammaFunction& gamma) {
  std::vector<Elem> ker;
  for (Elem y = 0; y < gamma.values.size(); ++y) {
    if (gamma.values[y].is_identity()) ker.push_back(y);
  }
  const Group& g = gamma.group;
  Subgroup k;
  try {
    k = Subgroup(g, ker);
  } catch (const Rejected&) {
    throw InvariantBreach("ker(gamma) is not a subgroup of (G, .)");
  }
  const SkewBrace b = circle_from_gamma(gamma);
  for (Elem x : ker) {
    for (Elem y = 0; y < g.order(); ++y) {
      ensure(k.contains(b.circle.conj(x, y)), "ker(gamma) is not normal in (G, o)");
    }
  }
  return k;
}

GammaFunction opposite_gamma(const GammaFunction& gamma) {
  const Group& g = gamma.group;
  std::vector<Permutation> bar;
  bar.reserve(g.order());
  for (Elem y = 0; y < g.order(); ++y) {
    const Elem yi = g.inv(y);
    bar.push_back(compose(gamma.values[yi], inner(g, yi)));
  }
  // oracle: {bar(y) rho(y)} = inv {gamma(y) rho(y)} inv
  const Permutation inv = inv_map(g);
  std::set<Permutation> lhs, rhs;
  for (Elem y = 0; y < g.order(); ++y) {
    lhs.insert(compose(bar[y], rho(g, y)));
    rhs.insert(compose(compose(inv, compose(gamma.values[y], rho(g, y))), inv));
  }
  ensure(lhs == rhs, "opposite gamma does not match the inv-conjugate regular subgroup");
  return GammaFunction{g, std::move(bar)};
}

std::vector<GammaFunction> enumerate_gammas(const HolGroup& hol) {
  std::vector<GammaFunction> out;
  for (const RegularSubgroup& n : enumerate_regular_subgroups(hol)) out.push_back(gamma_from_regular(hol, n));
  return out;
}

std::vector<GammaFunction> enumerate_gammas(const Group& g) { return enumerate_gammas(HolGroup(g)); }

}  // namespace holoskew
