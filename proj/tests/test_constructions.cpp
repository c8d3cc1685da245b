#include <doctest.h>

#include <algorithm>
#include <set>

#include "holoskew/automorphism.hpp"
#include "holoskew/biskew.hpp"
#include "holoskew/constructions.hpp"
#include "holoskew/error.hpp"
#include "holoskew/group_spec.hpp"
#include "holoskew/holomorph.hpp"
#include "holoskew/identify.hpp"
#include "support.hpp"

using namespace holoskew;

namespace {

Subgroup span(const Group& g, std::vector<Elem> gens) { return subgroup_closure(g, gens); }

Subgroup range(const Group& g, Elem from, Elem step, std::size_t count) {
  std::vector<Elem> xs;
  for (std::size_t i = 0; i < count; ++i) xs.push_back(from + i * step);
  return Subgroup(g, xs);
}

RelativeGammaFunction inner_pow(const Group& g, const Subgroup& h, long long t) {
  RelativeGammaFunction r{g, h, {}};
  for (Elem x : h.members()) r.values.push_back(inner(g, g.pow(x, -t)));
  return r;
}

RelativeGammaFunction identity_rgf(const Group& g, const Subgroup& h) {
  return {g, h, std::vector<Permutation>(h.size(), Permutation::identity(g.order()))};
}

void require_bi_gf(const GammaFunction& gamma) {
  const BiskewReport r = biskew_report(gamma);
  for (const auto& [name, v] : r.flags()) {
    CAPTURE(name);
    CHECK(v);
  }
  CHECK(r.bi_skew());
}

bool commutative(const SkewBrace& b) {
  const std::size_t n = b.circle.order();
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (b.circ(x, y) != b.circ(y, x)) return false;
    }
  }
  return true;
}

struct Triple {
  std::string spec;
  std::vector<Elem> k, h;  // generators
};

}  // namespace

TEST_CASE("childs_gamma examples") {
  const Group d3 = dihedral(3);
  CHECK(childs_gamma(d3, whole_group(d3), trivial_subgroup(d3)).gamma == trivial_gamma(d3));

  const Subgroup rot = range(d3, 0, 1, 3), s = span(d3, {3});
  const Construction c = childs_gamma(d3, rot, s);
  require_bi_gf(c.gamma);
  CHECK(kernel_gamma(c.gamma) == rot);
  CHECK_FALSE(c.transcript.empty());

  const Group ab = abelian({2, 3});
  CHECK(childs_gamma(ab, range(ab, 0, 1, 3), range(ab, 0, 3, 2)).gamma == trivial_gamma(ab));

  // K not normal
  CHECK_THROWS_AS(childs_gamma(d3, s, rot), Rejected);
  // not a complement
  CHECK_THROWS_AS(childs_gamma(d3, rot, whole_group(d3)), Rejected);
}

TEST_CASE("lift_rgf examples") {
  const Group d3 = dihedral(3);
  const Subgroup rot = range(d3, 0, 1, 3), s = span(d3, {3});
  CHECK(lift_rgf(d3, s, rot, identity_rgf(d3, s)).gamma == trivial_gamma(d3));
  CHECK(lift_rgf(d3, s, rot, inner_pow(d3, s, 1)).gamma == childs_gamma(d3, rot, s).gamma);

  // the order-18 gammas: lifts from the Sylow 2-subgroup with Sylow 3-kernel
  const Group d9 = dihedral(9);
  const Subgroup k = range(d9, 0, 1, 9);
  std::size_t matched = 0;
  for (const GammaFunction& gamma : enumerate_gammas(d9)) {
    if (kernel_gamma(gamma) != k || !two_of_three_abelian(gamma).first) continue;
    // a Sylow 2-subgroup <x> left invariant by gamma(x)
    Elem x = 9;
    while (x < 18 && gamma(x)[x] != x) ++x;
    REQUIRE(x < 18);
    const Subgroup h = span(d9, {x});
    RelativeGammaFunction r{d9, h, {gamma(0), gamma(x)}};
    CHECK(lift_rgf(d9, h, k, r).gamma == gamma);
    ++matched;
  }
  CHECK(matched == 9);

  // gamma'(H n K) must be trivial: H = G, K = rotations, inner(h^-1) is not trivial on rotations
  CHECK_THROWS_AS(lift_rgf(d3, whole_group(d3), rot, inner_pow(d3, whole_group(d3), 1)), Rejected);
}

TEST_CASE("central_gamma examples") {
  const Group d3 = dihedral(3);
  const Subgroup rot = range(d3, 0, 1, 3), s = span(d3, {3});
  const CentralConstruction cd3 = central_gamma(d3, rot, s);
  CHECK(cd3.c.gamma == childs_gamma(d3, rot, s).gamma);

  const Group m = make_group("modext(3,2)");
  const CentralConstruction cm = central_gamma(m, range(m, 0, 1, 9), span(m, {9}));
  require_bi_gf(cm.c.gamma);
  const SkewBrace b = circle_from_gamma(cm.c.gamma);
  CHECK(b.circle.is_abelian());
  CHECK(identify_group(b.circle) == "ab3x9");
  // H = <b> has index 3 in a group of order 27, so it is normal and the
  // opposite gamma is a bi-GF
  CHECK(cm.h_normal);
  CHECK(cm.bar_is_bi_gf);

  // H n K not central
  const Group d4 = dihedral(4);
  CHECK_THROWS_AS(central_gamma(d4, range(d4, 0, 1, 4), span(d4, {1, 4})), Rejected);
}

TEST_CASE("property: central construction biconditional in both truth values") {
  const std::vector<Triple> catalog = {
      {"d3", {1}, {3}},               // H non-normal, semidirect
      {"d4", {1}, {4}},               // H non-normal, but H Z(G) normal
      {"d4", {1}, {4, 2}},            // H Klein, normal, H n K = <r^2> central
      {"d6", {1}, {6, 3}},            // H non-normal, H n K = <r^3> central
      {"sd(c3,c4,inv)", {1}, {3}},    // H = C4 non-normal
      {"a4", {1, 2}, {4}},            // K = V4, H = C3 non-normal
      {"q8", {1}, {4}},               // H normal, H n K = Z
      {"heis3", {1, 9}, {3, 1}},      // H normal of index 3
      {"modext(3,2)", {1, 3}, {9}},   // H = <b>, normal
      {"d9", {1}, {9}},               // H non-normal
      {"d5", {1}, {5}},               // H non-normal
      {"sd(c7,c3,pow2)", {1}, {7}},   // H non-normal
  };
  std::set<bool> seen;
  for (const Triple& t : catalog) {
    CAPTURE(t.spec);
    CAPTURE(t.h);
    const Group g = make_group(t.spec);
    const Subgroup k = span(g, t.k), h = span(g, t.h);
    const CentralConstruction c = central_gamma(g, k, h);
    require_bi_gf(c.c.gamma);
    // both sides recomputed here
    const bool bar = biskew_report(opposite_gamma(c.c.gamma)).bi_skew();
    const bool normal = is_normal(g, h);
    const Subgroup kz = intersection(g, k, center(g));
    std::vector<Elem> seed = h.members();
    seed.insert(seed.end(), kz.members().begin(), kz.members().end());
    const bool kz_in_h = std::all_of(kz.members().begin(), kz.members().end(), [&](Elem x) { return h.contains(x); });
    CHECK(c.bar_is_bi_gf == bar);
    CHECK(c.h_normal == normal);
    CHECK(bar == is_normal(g, subgroup_closure(g, seed)));
    if (normal) CHECK(bar);
    if (kz_in_h) {
      CHECK(bar == normal);
      seen.insert(normal);
    }
  }
  CHECK(seen == std::set<bool>{false, true});
}

TEST_CASE("central construction on D4 with H = <s>: opposite gamma bi-GF, H not normal") {
  const Group d4 = dihedral(4);
  const Subgroup k = range(d4, 0, 1, 4), h = span(d4, {4});
  const CentralConstruction c = central_gamma(d4, k, h);
  CHECK_FALSE(c.h_normal);
  CHECK(c.bar_is_bi_gf);
  CHECK(c.kernel_normal);
  CHECK(kernel_gamma(opposite_gamma(c.c.gamma)).members() == std::vector<Elem>{0, 2, 4, 6});
}

TEST_CASE("compatible pair group") {
  const Group ab = abelian({2, 3});
  const Subgroup k = range(ab, 0, 1, 3), h = range(ab, 0, 3, 2);
  const CompatiblePairGroup p = compatible_pair_group(ab, k, h);
  std::size_t preserving = 0;
  const AutGroup aut(ab);
  for (const Permutation& a : aut.elements()) {
    bool ok = true;
    for (Elem x : k.members()) ok = ok && k.contains(a[x]);
    for (Elem x : h.members()) ok = ok && h.contains(a[x]);
    preserving += ok;
  }
  CHECK(p.members.size() == preserving);

  const Group d3 = dihedral(3);
  const Subgroup rot = range(d3, 0, 1, 3), s = span(d3, {3});
  const CompatiblePairGroup pd = compatible_pair_group(d3, rot, s);
  CHECK(pd.members.size() == 2);
  for (const CompatiblePair& m : pd.members) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      const Elem hh = s.members()[i];
      CHECK(m.d[i] == m.aut[hh]);
      // iota(h)^a = iota(h^d) on K
      for (Elem x : rot.members()) CHECK(m.aut[d3.conj(x, hh)] == d3.conj(m.aut[x], m.d[i]));
    }
    for (std::size_t i = 0; i < rot.size(); ++i) CHECK(m.a[i] == m.aut[rot.members()[i]]);
  }

  const SemiExample ex = semi_example(3, 7, 2, 1);
  const CompatiblePairGroup p63 = compatible_pair_group(ex.group, ex.k, ex.h);
  for (const Permutation& v : ex.rgf.values) CHECK(p63.contains(v));
}

TEST_CASE("semi_gamma examples") {
  const Group d3 = dihedral(3);
  const Subgroup rot = range(d3, 0, 1, 3), s = span(d3, {3});
  CHECK(semi_gamma(d3, rot, s, inner_pow(d3, s, 1)).gamma == childs_gamma(d3, rot, s).gamma);

  for (std::size_t sv = 0; sv < 3; ++sv) {
    for (std::size_t tv = 0; tv < 3; ++tv) {
      CAPTURE(sv);
      CAPTURE(tv);
      const SemiExample ex = semi_example(3, 7, sv, tv);
      REQUIRE(ex.group.order() == 63);
      const Construction c = semi_gamma(ex.group, ex.k, ex.h, ex.rgf);
      require_bi_gf(c.gamma);
      const Group circle = circle_from_gamma(c.gamma).circle;
      if (sv % 3 == 1) {
        CHECK(identify_group(circle) == "c63");
      } else {
        CHECK(is_isomorphic(circle, ex.group).has_value());
      }
    }
  }
}

TEST_CASE("delta_gamma and bilinear_delta") {
  const Group h = make_group("heis3");
  const Subgroup z = center(h);
  REQUIRE(z.members() == std::vector<Elem>{0, 1, 2});
  REQUIRE(bilinear_generators(h, z).size() == 2);

  CHECK(delta_gamma(bilinear_delta(h, z, {{0, 0}, {0, 0}})).gamma == trivial_gamma(h));

  // every 2x2 matrix over the field with three elements gives a bi-GF
  std::set<std::vector<Permutation>> distinct;
  for (Elem a = 0; a < 3; ++a) {
    for (Elem b = 0; b < 3; ++b) {
      for (Elem c = 0; c < 3; ++c) {
        for (Elem d = 0; d < 3; ++d) {
          const Construction con = delta_gamma(bilinear_delta(h, z, {{a, b}, {c, d}}));
          CHECK(biskew_report(con.gamma).bi_skew());
          CHECK(two_of_three_abelian(con.gamma).count() == 3);
          distinct.insert(con.gamma.values);
        }
      }
    }
  }
  CHECK(distinct.size() == 81);

  // alternating non-zero form
  const Construction alt = delta_gamma(bilinear_delta(h, z, {{0, 1}, {2, 0}}));
  require_bi_gf(alt.gamma);
  CHECK_FALSE(alt.gamma == trivial_gamma(h));

  // abelian G with K = G: G/K trivial
  const Group c6 = cyclic(6);
  CHECK(bilinear_generators(c6, whole_group(c6)).empty());
  CHECK(delta_gamma(bilinear_delta(c6, whole_group(c6), {})).gamma == trivial_gamma(c6));

  // Delta(e, e) of order 4 on a generator of order 2 modulo K
  const Group ab = abelian({2, 4});
  CHECK_THROWS_AS(bilinear_delta(ab, range(ab, 0, 1, 4), {{1}}), Rejected);
  // K not central
  const Group d3 = dihedral(3);
  CHECK_THROWS_AS(make_bihom(d3, range(d3, 0, 1, 3), {0, 0, 0, 0}), Rejected);
}

TEST_CASE("ault_watters_gamma") {
  CHECK(ault_watters_gamma(cyclic(9)).gamma == trivial_gamma(cyclic(9)));
  for (const char* s : {"heis3", "heis5"}) {
    CAPTURE(s);
    const Group g = make_group(s);
    const Construction c = ault_watters_gamma(g);
    require_bi_gf(c.gamma);
    const SkewBrace b = circle_from_gamma(c.gamma);
    CHECK(commutative(b));
    CHECK(b.circle.order() == g.order());
    CHECK(b.circle.is_abelian());
  }
  CHECK(identify_group(circle_from_gamma(ault_watters_gamma(make_group("heis3")).gamma).circle) == "ab3x3x3");
  CHECK_THROWS_AS(ault_watters_gamma(dihedral(4)), Rejected);
  CHECK_THROWS_AS(ault_watters_gamma(make_group("sd(c7,c3,pow2)")), Rejected);
}

TEST_CASE("radical rings") {
  const Group c4 = cyclic(4);
  const RadicalRing zero = make_radical_ring(c4, std::vector<Elem>(16, 0));
  CHECK(cube_condition(zero));
  CHECK(ring_to_gamma(zero) == trivial_gamma(c4));

  std::vector<Elem> two(16);
  for (Elem x = 0; x < 4; ++x) {
    for (Elem y = 0; y < 4; ++y) two[x * 4 + y] = 2 * x * y % 4;
  }
  const RadicalRing r4 = make_radical_ring(c4, two);
  CHECK(cube_condition(r4));
  const GammaFunction k = ring_to_gamma(r4);
  CHECK(k.values[1] == inv_map(c4));
  CHECK(k.values[2].is_identity());
  CHECK(identify_group(circle_from_gamma(k).circle) == "ab2x2");
  require_bi_gf(k);

  const Group c8 = cyclic(8);
  std::vector<Elem> two8(64);
  for (Elem x = 0; x < 8; ++x) {
    for (Elem y = 0; y < 8; ++y) two8[x * 8 + y] = 2 * x * y % 8;
  }
  const RadicalRing r8 = make_radical_ring(c8, two8);
  CHECK_FALSE(cube_condition(r8));
  CHECK_FALSE(biskew_report(ring_to_gamma(r8)).bi_skew());

  // x * y = xy on C4 is not radical: 1 o 3 = 1 + 3 + 3 = 3 and x o 3 = 3 for all x
  std::vector<Elem> plain(16);
  for (Elem x = 0; x < 4; ++x) {
    for (Elem y = 0; y < 4; ++y) plain[x * 4 + y] = x * y % 4;
  }
  CHECK_THROWS_AS(make_radical_ring(c4, plain), Rejected);
  // not distributive
  std::vector<Elem> bad(16, 0);
  bad[1 * 4 + 1] = 2;
  bad[2 * 4 + 1] = 2;
  CHECK_THROWS_AS(make_radical_ring(c4, bad), Rejected);
}

TEST_CASE("property: bi-GF iff cube condition over every commutative radical ring") {
  const std::vector<std::pair<std::string, std::size_t>> expected = {
      {"c4", 2}, {"c8", 4}, {"c9", 3}, {"ab2x2", 4}, {"ab3x3", 9}};
  for (const auto& [s, count] : expected) {
    CAPTURE(s);
    const Group g = make_group(s);
    const auto rings = enumerate_radical_rings(g);
    CHECK(rings.size() == count);
    for (const RadicalRing& r : rings) {
      for (Elem x = 0; x < g.order(); ++x) {
        for (Elem y = 0; y < g.order(); ++y) REQUIRE(r.mul(x, y) == r.mul(y, x));
      }
      const GammaFunction gamma = ring_to_gamma(r);
      CHECK(circle_from_gamma(gamma).circle.is_abelian());
      CHECK(biskew_report(gamma).bi_skew() == cube_condition(r));
    }
  }
}

TEST_CASE("order-18 gammas: bi-GF, index 9, circle group cyclic") {
  const Group d9 = dihedral(9);
  const HolGroup hol(d9);
  const Subgroup k = range(d9, 0, 1, 9), h = span(d9, {9});
  const Construction c = lift_rgf(d9, h, k, inner_pow(d9, h, 1));
  require_bi_gf(c.gamma);
  CHECK(kernel_gamma(c.gamma) == k);
  CHECK(normalizer_in_hol(hol, regular_from_gamma(hol, c.gamma)).index == 9);
  // for q = 2 the only non-trivial exponent is t = 1, Childs's gamma, whose
  // circle group is H^op x K
  CHECK(identify_group(circle_from_gamma(c.gamma).circle) == "c18");
  CHECK_FALSE(is_isomorphic(circle_from_gamma(c.gamma).circle, d9).has_value());
}

TEST_CASE("order-147 gammas: circle group isomorphic to G exactly for t = 2") {
  const Group g = make_group("sd(c49,c3,pow18)");
  REQUIRE(g.order() == 147);
  const Subgroup k = range(g, 0, 1, 49), h = range(g, 0, 49, 3);
  const HolGroup hol(g);
  REQUIRE(hol.aut().size() == 2058);
  for (long long t : {1, 2}) {
    CAPTURE(t);
    const Construction c = lift_rgf(g, h, k, inner_pow(g, h, t));
    require_bi_gf(c.gamma);
    CHECK(two_of_three_abelian(c.gamma).count() == 3);
    CHECK(kernel_gamma(c.gamma) == k);
    const Group circle = circle_from_gamma(c.gamma).circle;
    CHECK(is_isomorphic(circle, g).has_value() == (t == 2));
    if (t == 2) {
      const RegularSubgroup n = regular_from_gamma(hol, c.gamma);
      CHECK(normalizer_in_hol(hol, n).index == 49);
      CHECK(is_normalized_by_rho(hol, n));
      CHECK_FALSE(is_normal_in_hol(hol, n));
    }
  }
}
