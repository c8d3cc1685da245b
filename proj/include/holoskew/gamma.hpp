#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "holoskew/group.hpp"
#include "holoskew/holomorph.hpp"
#include "holoskew/perm.hpp"

namespace holoskew {

/// A gamma function G -> Aut(G), y -> gamma(y). Values are stored as
/// automorphism image arrays so that no Aut(G) enumeration is needed.
struct GammaFunction {
  Group group;
  std::vector<Permutation> values;

  const Permutation& operator()(Elem y) const { return values[y]; }
  /// x^gamma(y)
  Elem act(Elem x, Elem y) const { return values[y][x]; }

  friend bool operator==(const GammaFunction& a, const GammaFunction& b) { return a.values == b.values; }
};

/// A gamma function defined on a subgroup A only.
struct RelativeGammaFunction {
  Group group;
  Subgroup domain;
  /// values[i] belongs to domain.members()[i]
  std::vector<Permutation> values;

  const Permutation& at(Elem a) const;
};

struct SkewBrace {
  Group additive;
  Group circle;
  GammaFunction gamma;

  Elem circ(Elem x, Elem y) const { return circle.mul(x, y); }
};

/// gamma(y) = identity for every y.
GammaFunction trivial_gamma(const Group& g);
/// Builds a GammaFunction after checking that every value is an
/// automorphism and the gamma functional equation holds.
GammaFunction make_gamma(const Group& g, std::vector<Permutation> values);

/// First (x, y) where gamma(x^gamma(y) y) != gamma(x) gamma(y), if any.
std::optional<std::pair<Elem, Elem>> gfe_witness(const Group& g, std::span<const Permutation> values);

/// x o y = x^gamma(y) y. Throws Rejected naming a witness if the GFE fails.
SkewBrace circle_from_gamma(const GammaFunction& gamma);

/// x^gamma(y) = (x o y) y^-1. Throws Rejected naming the correspondence row that
/// fails when (G, ., o) is not a skew brace.
GammaFunction gamma_from_circle(const Group& g, std::span<const Elem> circle_table);

GammaFunction gamma_from_regular(const HolGroup& hol, const RegularSubgroup& n);
RegularSubgroup regular_from_gamma(const HolGroup& hol, const GammaFunction& gamma);

/// Row-by-row evaluation of the correspondence between properties of o
/// (left) and of gamma (right), for arbitrary maps gamma(y) : G -> G.
struct Table1Row {
  std::string circle_property;
  std::string gamma_property;
  bool circle_holds = false;
  bool gamma_holds = false;
  std::string witness;  // empty when both hold
};
struct Table1Report {
  std::vector<Table1Row> rows;  // endomorphism / associativity / bijectivity
  std::vector<std::string> caveats;
  bool all_hold() const;
};
Table1Report validate_table1(const Group& g, const std::vector<std::vector<Elem>>& maps);

struct RgfCheck {
  bool gfe = false;
  bool invariant = false;
  std::string witness;
  bool valid() const { return gfe && invariant; }
};
RgfCheck validate_rgf(const RelativeGammaFunction& rgf);

/// ker(gamma); checks that it is a subgroup of (G, .) and normal in (G, o).
Subgroup kernel_gamma(const GammaFunction& gamma);

/// gamma-bar(y) = gamma(y^-1) iota(y^-1): the gamma function of N^inv.
/// Cross-checked against inv N inv as a set of permutations.
GammaFunction opposite_gamma(const GammaFunction& gamma);

/// All gamma functions on G, in the order of enumerate_regular_subgroups.
std::vector<GammaFunction> enumerate_gammas(const Group& g);
std::vector<GammaFunction> enumerate_gammas(const HolGroup& hol);

}  // namespace holoskew
