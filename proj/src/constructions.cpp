#include "holoskew/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "holoskew/automorphism.hpp"
#include "holoskew/biskew.hpp"
#include "holoskew/error.hpp"
#include "holoskew/group_spec.hpp"

namespace holoskew {

namespace {

std::string elem_pair(Elem x, Elem y) { return "(" + std::to_string(x) + ", " + std::to_string(y) + ")"; }

// Gamma functions the constructions are proven to produce; a failure here is
// a bug, not bad input.
GammaFunction certified_gamma(const Group& g, std::vector<Permutation> values, const std::string& what) {
  try {
    return make_gamma(g, std::move(values));
  } catch (const Rejected& e) {
    throw InvariantBreach(what + " did not produce a gamma function: " + e.what());
  }
}

void require_bi_gf(const GammaFunction& gamma, const std::string& what) {
  ensure(biskew_report(gamma).bi_skew(), what + " did not produce a bi-GF");
}

void require_semidirect(const Group& g, const Subgroup& k, const Subgroup& h, std::vector<std::string>& tr) {
  if (!is_normal(g, k)) throw Rejected("K is not normal in G");
  tr.push_back("K is normal in G");
  if (!factorizes(g, h, k)) throw Rejected("G != HK");
  tr.push_back("G = HK");
  if (intersection(g, h, k).size() != 1) throw Rejected("H n K is not trivial, so G is not a semidirect product of K by H");
  tr.push_back("H n K = 1");
}

// Bilinear extension of form[i][j] = <gens[i], gens[j]> from generators of
// the abelian group `a` into the abelian subgroup of `target` holding the
// values. Every coordinate representation of every element is tried.
std::vector<Elem> extend_bilinear(const Group& a, const std::vector<Elem>& gens,
                                  const std::vector<std::vector<Elem>>& form, const Group& target) {
  const std::size_t r = gens.size();
  if (form.size() != r) throw Rejected("form needs " + std::to_string(r) + " rows");
  std::vector<std::size_t> ord(r);
  for (std::size_t i = 0; i < r; ++i) {
    ord[i] = a.element_order(gens[i]);
    if (form[i].size() != r) throw Rejected("form needs " + std::to_string(r) + " columns");
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      const Elem f = form[i][j];
      if (f >= target.order()) throw Rejected("form value out of range");
      if (target.pow(f, static_cast<long long>(ord[i])) != 0 || target.pow(f, static_cast<long long>(ord[j])) != 0) {
        throw Rejected("form value at " + elem_pair(i, j) + " does not respect the generator orders " +
                       elem_pair(ord[i], ord[j]));
      }
    }
  }
  std::size_t count = 1;
  for (std::size_t o : ord) count *= o;
  std::vector<std::vector<std::size_t>> coords(count, std::vector<std::size_t>(r));
  std::vector<Elem> elem(count);
  for (std::size_t c = 0; c < count; ++c) {
    std::size_t rest = c;
    Elem e = 0;
    for (std::size_t i = 0; i < r; ++i) {
      coords[c][i] = rest % ord[i];
      rest /= ord[i];
      e = a.mul(e, a.pow(gens[i], static_cast<long long>(coords[c][i])));
    }
    elem[c] = e;
  }
  const std::size_t n = a.order();
  const Elem unset = target.order();
  std::vector<Elem> table(n * n, unset);
  for (std::size_t c = 0; c < count; ++c) {
    for (std::size_t d = 0; d < count; ++d) {
      Elem v = 0;
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
          v = target.mul(v, target.pow(form[i][j], static_cast<long long>(coords[c][i] * coords[d][j])));
        }
      }
      Elem& slot = table[elem[c] * n + elem[d]];
      if (slot == unset) {
        slot = v;
      } else if (slot != v) {
        throw Rejected("form is not well defined on the quotient at " + elem_pair(elem[c], elem[d]));
      }
    }
  }
  ensure(std::find(table.begin(), table.end(), unset) == table.end(), "generators do not generate");
  return table;
}

}  // namespace

Construction childs_gamma(const Group& g, const Subgroup& k, const Subgroup& h) {
  Construction out{trivial_gamma(g), {}};
  require_semidirect(g, k, h, out.transcript);
  std::vector<Permutation> values(g.order(), Permutation::identity(g.order()));
  for (Elem x : h.members()) {
    const Permutation iota = inner(g, g.inv(x));
    for (Elem y : k.members()) values[g.mul(x, y)] = iota;
  }
  out.gamma = certified_gamma(g, std::move(values), "Childs construction");
  require_bi_gf(out.gamma, "Childs construction");
  out.transcript.push_back("gamma(hk) = iota(h^-1) is a bi-GF");
  return out;
}

Construction lift_rgf(const Group& g, const Subgroup& h, const Subgroup& k, const RelativeGammaFunction& rgf) {
  Construction out{trivial_gamma(g), {}};
  if (!(rgf.domain == h)) throw Rejected("the relative gamma function is not defined on H");
  if (rgf.values.size() != h.size()) throw Rejected("need one value per element of H");
  for (const Permutation& p : rgf.values) {
    if (!is_automorphism(g, p)) throw Rejected("a value of gamma' is not an automorphism of G");
  }
  const RgfCheck chk = validate_rgf(rgf);
  if (!chk.valid()) throw Rejected("gamma' is not a relative gamma function: " + chk.witness);
  out.transcript.push_back("gamma' is a relative gamma function on H");
  if (!factorizes(g, h, k)) throw Rejected("G != HK");
  out.transcript.push_back("G = HK");

  const Subgroup cap = intersection(g, h, k);
  for (Elem x : cap.members()) {
    if (!rgf.at(x).is_identity()) throw Rejected("gamma'(" + std::to_string(x) + ") != 1 for an element of H n K");
  }
  out.transcript.push_back("gamma'(H n K) = 1");

  for (Elem x : h.members()) {
    const Permutation m = compose(rgf.at(x), inner(g, x));
    for (Elem y : k.members()) {
      if (!k.contains(m[y])) {
        throw Rejected("K is not invariant under gamma'(h) iota(h) at h = " + std::to_string(x) +
                       ", k = " + std::to_string(y));
      }
    }
  }
  out.transcript.push_back("K is invariant under gamma'(h) iota(h)");

  const std::size_t n = g.order();
  std::vector<std::optional<Permutation>> values(n);
  for (std::size_t i = 0; i < h.size(); ++i) {
    for (Elem y : k.members()) {
      const Elem z = g.mul(h.members()[i], y);
      if (!values[z]) {
        values[z] = rgf.values[i];
      } else if (*values[z] != rgf.values[i]) {
        throw Rejected("gamma is not well defined at " + std::to_string(z));
      }
    }
  }
  std::vector<Permutation> vals;
  for (auto& v : values) vals.push_back(std::move(*v));
  out.transcript.push_back("gamma(hk) = gamma'(h) agrees on every factorization");
  out.gamma = certified_gamma(g, std::move(vals), "lifting");

  std::set<Elem> expect;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (!rgf.values[i].is_identity()) continue;
    for (Elem y : k.members()) expect.insert(g.mul(h.members()[i], y));
  }
  const Subgroup ker = kernel_gamma(out.gamma);
  ensure(std::vector<Elem>(expect.begin(), expect.end()) == ker.members(), "ker(gamma) != ker(gamma') K");
  out.transcript.push_back("ker(gamma) = ker(gamma') K");
  return out;
}

CentralConstruction central_gamma(const Group& g, const Subgroup& k, const Subgroup& h) {
  CentralConstruction out{{trivial_gamma(g), {}}};
  auto& tr = out.c.transcript;
  if (!is_normal(g, k)) throw Rejected("K is not normal in G");
  tr.push_back("K is normal in G");
  if (!factorizes(g, h, k)) throw Rejected("G != HK");
  tr.push_back("G = HK");
  const Subgroup z = center(g);
  const Subgroup cap = intersection(g, h, k);
  for (Elem x : cap.members()) {
    if (!z.contains(x)) throw Rejected("H n K is not central: " + std::to_string(x));
  }
  tr.push_back("H n K <= Z(G)");

  RelativeGammaFunction rgf{g, h, {}};
  for (Elem x : h.members()) rgf.values.push_back(inner(g, g.inv(x)));
  Construction lifted = lift_rgf(g, h, k, rgf);
  tr.insert(tr.end(), lifted.transcript.begin(), lifted.transcript.end());
  out.c.gamma = std::move(lifted.gamma);
  require_bi_gf(out.c.gamma, "central construction");
  tr.push_back("gamma(hk) = iota(h^-1) is a bi-GF");

  out.bar_is_bi_gf = biskew_report(opposite_gamma(out.c.gamma)).bi_skew();
  out.h_normal = is_normal(g, h);
  const Subgroup kz = intersection(g, k, z);
  std::vector<Elem> seed = h.members();
  seed.insert(seed.end(), kz.members().begin(), kz.members().end());
  const Subgroup hz = subgroup_closure(g, seed);
  ensure(hz == kernel_gamma(opposite_gamma(out.c.gamma)), "ker(gamma-bar) != H (K n Z(G))");
  out.kernel_normal = is_normal(g, hz);
  ensure(out.bar_is_bi_gf == out.kernel_normal, "opposite gamma is a bi-GF exactly when H (K n Z(G)) is normal: violated");
  ensure(!out.h_normal || out.bar_is_bi_gf, "H normal but the opposite gamma is not a bi-GF");
  tr.push_back(std::string("opposite gamma bi-GF: ") + (out.bar_is_bi_gf ? "yes" : "no") +
               ", H normal: " + (out.h_normal ? "yes" : "no") +
               ", H (K n Z(G)) normal: " + (out.kernel_normal ? "yes" : "no"));
  return out;
}

bool CompatiblePairGroup::contains(const Permutation& p) const {
  auto it = std::lower_bound(members.begin(), members.end(), p,
                             [](const CompatiblePair& m, const Permutation& q) { return m.aut < q; });
  return it != members.end() && it->aut == p;
}

CompatiblePairGroup compatible_pair_group(const Group& g, const Subgroup& k, const Subgroup& h) {
  std::vector<std::string> tr;
  require_semidirect(g, k, h, tr);
  CompatiblePairGroup out{g, k, h, {}};
  const AutGroup aut(g);
  for (const Permutation& beta : aut.elements()) {
    const bool keeps = std::all_of(h.members().begin(), h.members().end(), [&](Elem x) { return h.contains(beta[x]); }) &&
                       std::all_of(k.members().begin(), k.members().end(), [&](Elem x) { return k.contains(beta[x]); });
    if (!keeps) continue;
    CompatiblePair pair{beta, {}, {}};
    for (Elem x : h.members()) pair.d.push_back(beta[x]);
    for (Elem x : k.members()) pair.a.push_back(beta[x]);
    // iota(h)^a = iota(h^d) on K
    for (Elem x : h.members()) {
      for (Elem y : k.members()) {
        ensure(beta[g.conj(y, x)] == g.conj(beta[y], beta[x]), "compatible pair relation fails");
      }
    }
    out.members.push_back(std::move(pair));
  }
  std::sort(out.members.begin(), out.members.end(), [](const auto& a, const auto& b) { return a.aut < b.aut; });
  for (const auto& a : out.members) {
    for (const auto& b : out.members) ensure(out.contains(compose(a.aut, b.aut)), "compatible pairs are not closed");
  }
  return out;
}

Construction semi_gamma(const Group& g, const Subgroup& k, const Subgroup& h, const RelativeGammaFunction& rgf) {
  Construction out{trivial_gamma(g), {}};
  require_semidirect(g, k, h, out.transcript);
  if (!(rgf.domain == h) || rgf.values.size() != h.size()) throw Rejected("gamma' must be given on H");
  const CompatiblePairGroup p = compatible_pair_group(g, k, h);
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (!p.contains(rgf.values[i])) {
      throw Rejected("gamma'(" + std::to_string(h.members()[i]) + ") does not leave H and K invariant");
    }
  }
  out.transcript.push_back("gamma'(H) lies in the compatible pair group (" + std::to_string(p.members.size()) +
                           " elements)");
  for (Elem x : h.members()) {
    for (Elem y : h.members()) {
      if (rgf.at(g.mul(x, y)) != compose(rgf.at(y), rgf.at(x))) {
        throw Rejected("gamma'(h1 h2) != gamma'(h2) gamma'(h1) at " + elem_pair(x, y));
      }
    }
  }
  out.transcript.push_back("gamma' is an anti-homomorphism on H");
  Construction lifted = lift_rgf(g, h, k, rgf);
  out.transcript.insert(out.transcript.end(), lifted.transcript.begin(), lifted.transcript.end());
  out.gamma = std::move(lifted.gamma);
  require_bi_gf(out.gamma, "semidirect construction");
  out.transcript.push_back("gamma(hk) = gamma'(h) is a bi-GF");
  return out;
}

SemiExample semi_example(std::size_t p, std::size_t q, std::size_t s, std::size_t t) {
  if (p < 3 || q < 2 || (q - 1) % p != 0) throw Rejected("need p > 2 with p | q - 1");
  auto powmod = [](std::size_t b, std::size_t e, std::size_t m) {
    std::size_t r = 1 % m;
    for (std::size_t i = 0; i < e; ++i) r = r * b % m;
    return r;
  };
  std::size_t r = 2;
  while (r < q && powmod(r, p, q) != 1) ++r;
  if (r == q) throw Rejected("no automorphism of order p on C_q");
  std::size_t r_inv = 1;
  while (r * r_inv % q != 1) ++r_inv;
  const std::size_t pp = p * p;
  Group g = make_group("sd(c" + std::to_string(q) + ",c" + std::to_string(pp) + ",pow" + std::to_string(r) + ")");
  std::vector<Elem> km(q), hm(pp);
  std::iota(km.begin(), km.end(), 0);
  for (std::size_t i = 0; i < pp; ++i) hm[i] = i * q;
  Subgroup k(g, km), h(g, hm);
  const Elem hgen = q;
  ensure(g.conj(1, hgen) == r % q, "h does not act on K as the chosen power");

  // h^i k^j -> h^(i (1+p)^t) k^(j r^-s)
  const std::size_t hs = powmod(1 + p, t, pp);
  const std::size_t ks = powmod(r_inv, s, q);
  std::vector<Elem> img(g.order());
  for (std::size_t i = 0; i < pp; ++i) {
    for (std::size_t j = 0; j < q; ++j) img[i * q + j] = (i * hs % pp) * q + (j * ks % q);
  }
  Permutation theta(std::move(img));
  ensure(is_automorphism(g, theta), "iota(h)^-s psi^t is not an automorphism");
  RelativeGammaFunction rgf{g, h, {}};
  Permutation cur = Permutation::identity(g.order());
  for (std::size_t i = 0; i < pp; ++i) {
    rgf.values.push_back(cur);
    cur = compose(cur, theta);
  }
  return SemiExample{g, k, h, std::move(rgf)};
}

BiHom make_bihom(const Group& g, const Subgroup& k, std::vector<Elem> table) {
  const Subgroup z = center(g);
  for (Elem x : k.members()) {
    if (!z.contains(x)) throw Rejected("K is not central");
  }
  Quotient q = quotient(g, k);
  const std::size_t m = q.group.order();
  if (table.size() != m * m) throw Rejected("Delta table must be |G/K| x |G/K|");
  for (Elem v : table) {
    if (!k.contains(v)) throw Rejected("Delta takes a value outside K");
  }
  const Group& qg = q.group;
  for (Elem a = 0; a < m; ++a) {
    for (Elem b = 0; b < m; ++b) {
      for (Elem c = 0; c < m; ++c) {
        if (table[qg.mul(a, b) * m + c] != g.mul(table[a * m + c], table[b * m + c])) {
          throw Rejected("Delta is not a homomorphism in the first variable at " + elem_pair(a, b) +
                         ", second argument " + std::to_string(c));
        }
        if (table[c * m + qg.mul(a, b)] != g.mul(table[c * m + a], table[c * m + b])) {
          throw Rejected("Delta is not a homomorphism in the second variable at " + elem_pair(a, b) +
                         ", first argument " + std::to_string(c));
        }
      }
    }
  }
  return BiHom{g, k, std::move(q), std::move(table)};
}

Construction delta_gamma(const BiHom& delta) {
  const Group& g = delta.group;
  Construction out{trivial_gamma(g), {"K <= Z(G)", "Delta is bilinear"}};
  std::vector<Permutation> values;
  for (Elem y = 0; y < g.order(); ++y) {
    std::vector<Elem> img(g.order());
    for (Elem x = 0; x < g.order(); ++x) img[x] = g.mul(delta(x, y), x);
    values.emplace_back(std::move(img));
  }
  out.gamma = certified_gamma(g, std::move(values), "Delta construction");
  const TwoOfThree t = two_of_three_abelian(out.gamma);
  ensure(t.count() == 3, "Delta gamma is not a homomorphism with abelian image");
  out.transcript.push_back("gamma is a homomorphism and an anti-homomorphism with abelian image");
  require_bi_gf(out.gamma, "Delta construction");
  out.transcript.push_back("gamma is a bi-GF");
  return out;
}

namespace {

Quotient abelianized_over(const Group& g, const Subgroup& k) {
  std::vector<Elem> seed = derived_subgroup(g).members();
  seed.insert(seed.end(), k.members().begin(), k.members().end());
  return quotient(g, subgroup_closure(g, seed));
}

}  // namespace

std::vector<Elem> bilinear_generators(const Group& g, const Subgroup& k) {
  const Quotient a = abelianized_over(g, k);
  std::vector<Elem> out;
  for (Elem e : generating_sequence(a.group)) out.push_back(a.representatives[e]);
  return out;
}

BiHom bilinear_delta(const Group& g, const Subgroup& k, const std::vector<std::vector<Elem>>& form) {
  const Subgroup z = center(g);
  for (Elem x : k.members()) {
    if (!z.contains(x)) throw Rejected("K is not central");
  }
  for (const auto& row : form) {
    for (Elem v : row) {
      if (v >= g.order() || !k.contains(v)) throw Rejected("form takes a value outside K");
    }
  }
  const Quotient a = abelianized_over(g, k);
  const std::vector<Elem> gens = generating_sequence(a.group);
  const std::vector<Elem> on_a = extend_bilinear(a.group, gens, form, g);
  const Quotient q = quotient(g, k);
  const std::size_t m = q.group.order();
  const std::size_t na = a.group.order();
  std::vector<Elem> table(m * m);
  for (Elem x = 0; x < m; ++x) {
    for (Elem y = 0; y < m; ++y) {
      const Elem px = a.projection[q.representatives[x]];
      const Elem py = a.projection[q.representatives[y]];
      table[x * m + y] = on_a[px * na + py];
    }
  }
  return make_bihom(g, k, std::move(table));
}

Construction ault_watters_gamma(const Group& g) {
  if (g.order() % 2 == 0) throw Rejected("Ault-Watters construction needs odd order");
  if (!has_class_at_most_two(g)) throw Rejected("Ault-Watters construction needs nilpotency class at most two");
  const Subgroup z = center(g);
  std::size_t e = 1;
  for (Elem x : z.members()) e = std::lcm(e, g.element_order(x));
  // c^m = c^(-1/2) since 2m = -1 mod e
  const long long m = static_cast<long long>((e - 1) / 2);
  const Quotient q = quotient(g, z);
  const std::size_t nq = q.group.order();
  std::vector<Elem> table(nq * nq);
  for (Elem a = 0; a < nq; ++a) {
    for (Elem b = 0; b < nq; ++b) table[a * nq + b] = g.pow(g.comm(q.representatives[a], q.representatives[b]), m);
  }
  for (Elem x = 0; x < g.order(); ++x) {
    for (Elem y = 0; y < g.order(); ++y) {
      ensure(g.pow(g.comm(x, y), m) == table[q.projection[x] * nq + q.projection[y]],
             "[x, y] depends on more than the cosets mod Z(G)");
    }
  }
  BiHom delta = [&] {
    try {
      return make_bihom(g, z, std::move(table));
    } catch (const Rejected& ex) {
      throw InvariantBreach(std::string("commutator form is not bilinear in class two: ") + ex.what());
    }
  }();
  Construction out = delta_gamma(delta);
  out.transcript.insert(out.transcript.begin(), {"|G| odd", "G has class at most two",
                                                 "Delta(xK, yK) = [x, y]^" + std::to_string(m) + " with K = Z(G)"});
  const SkewBrace b = circle_from_gamma(out.gamma);
  for (Elem x = 0; x < g.order(); ++x) {
    for (Elem y = 0; y < g.order(); ++y) {
      ensure(b.circ(x, y) == b.circ(y, x), "o is not commutative at " + elem_pair(x, y));
      ensure(b.circ(x, y) == g.mul(g.pow(g.comm(x, y), m), g.mul(x, y)), "x o y != [x, y]^(-1/2) x y");
    }
  }
  out.transcript.push_back("o is commutative");
  return out;
}

RadicalRing make_radical_ring(const Group& additive, std::vector<Elem> star) {
  const Group& a = additive;
  const std::size_t n = a.order();
  if (!a.is_abelian()) throw Rejected("additive group of a ring must be abelian");
  if (star.size() != n * n) throw Rejected("product table must be n x n");
  for (Elem v : star) {
    if (v >= n) throw Rejected("product value out of range");
  }
  auto mul = [&](Elem x, Elem y) { return star[x * n + y]; };
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (mul(x, y) != mul(y, x)) throw Rejected("ring axiom fails: commutativity at " + elem_pair(x, y));
      for (Elem z = 0; z < n; ++z) {
        if (mul(x, a.mul(y, z)) != a.mul(mul(x, y), mul(x, z))) {
          throw Rejected("ring axiom fails: left distributivity at " + elem_pair(x, y) + ", z = " + std::to_string(z));
        }
        if (mul(a.mul(x, y), z) != a.mul(mul(x, z), mul(y, z))) {
          throw Rejected("ring axiom fails: right distributivity at " + elem_pair(x, y) + ", z = " + std::to_string(z));
        }
        if (mul(mul(x, y), z) != mul(x, mul(y, z))) {
          throw Rejected("ring axiom fails: associativity at " + elem_pair(x, y) + ", z = " + std::to_string(z));
        }
      }
    }
  }
  std::vector<Elem> circ(n * n);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) circ[x * n + y] = a.mul(a.mul(x, y), mul(x, y));
  }
  try {
    (void)Group::from_table(std::move(circ));
  } catch (const Rejected& e) {
    throw Rejected(std::string("ring is not radical: x + y + x*y is not a group operation: ") + e.what());
  }
  return RadicalRing{a, std::move(star)};
}

std::vector<Elem> ring_generators(const Group& additive) { return generating_sequence(additive); }

RadicalRing ring_from_products(const Group& additive, const std::vector<std::vector<Elem>>& products) {
  if (!additive.is_abelian()) throw Rejected("additive group of a ring must be abelian");
  return make_radical_ring(additive, extend_bilinear(additive, ring_generators(additive), products, additive));
}

GammaFunction ring_to_gamma(const RadicalRing& r) {
  const Group& a = r.additive;
  std::vector<Permutation> values;
  for (Elem y = 0; y < a.order(); ++y) {
    std::vector<Elem> img(a.order());
    for (Elem x = 0; x < a.order(); ++x) img[x] = a.mul(x, r.mul(x, y));
    values.emplace_back(std::move(img));
  }
  GammaFunction gamma = certified_gamma(a, std::move(values), "radical ring");
  ensure(circle_from_gamma(gamma).circle.is_abelian(), "radical ring gives a non-abelian circle group");
  return gamma;
}

bool cube_condition(const RadicalRing& r) {
  const std::size_t n = r.additive.order();
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      const Elem xy = r.mul(x, y);
      for (Elem z = 0; z < n; ++z) {
        if (r.mul(xy, z) != 0) return false;
      }
    }
  }
  return true;
}

std::vector<RadicalRing> enumerate_radical_rings(const Group& additive) {
  if (!additive.is_abelian()) throw Rejected("additive group of a ring must be abelian");
  const std::size_t n = additive.order();
  if (n > kRingEnumerationBound) {
    throw Rejected("radical ring enumeration is limited to order " + std::to_string(kRingEnumerationBound));
  }
  const std::size_t r = ring_generators(additive).size();
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i; j < r; ++j) slots.emplace_back(i, j);
  }
  std::set<std::vector<Elem>> seen;
  std::vector<RadicalRing> out;
  std::vector<Elem> choice(slots.size(), 0);
  while (true) {
    std::vector<std::vector<Elem>> form(r, std::vector<Elem>(r));
    for (std::size_t s = 0; s < slots.size(); ++s) {
      form[slots[s].first][slots[s].second] = choice[s];
      form[slots[s].second][slots[s].first] = choice[s];
    }
    try {
      RadicalRing ring = ring_from_products(additive, form);
      if (seen.insert(ring.star).second) out.push_back(std::move(ring));
    } catch (const Rejected&) {
    }
    std::size_t s = 0;
    while (s < choice.size() && ++choice[s] == n) choice[s++] = 0;
    if (s == choice.size()) break;
  }
  std::sort(out.begin(), out.end(), [](const RadicalRing& a, const RadicalRing& b) { return a.star < b.star; });
  return out;
}

}  // namespace holoskew
