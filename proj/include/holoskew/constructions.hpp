#pragma once

#include <string>
#include <vector>

#include "holoskew/gamma.hpp"
#include "holoskew/group.hpp"

namespace holoskew {

/// A constructed gamma function with the hypothesis checks that were run.
struct Construction {
  GammaFunction gamma;
  std::vector<std::string> transcript;
};

/// gamma(hk) = iota(h^-1) for G the semidirect product of K by H.
Construction childs_gamma(const Group& g, const Subgroup& k, const Subgroup& h);

/// gamma(hk) = gamma'(h) for a relative gamma function on H, G = HK.
/// Checks gamma'(H n K) = 1, K invariant under gamma'(h) iota(h), and that
/// gamma is the same for every factorization of each element.
Construction lift_rgf(const Group& g, const Subgroup& h, const Subgroup& k, const RelativeGammaFunction& rgf);

struct CentralConstruction {
  Construction c;
  bool bar_is_bi_gf = false;
  bool h_normal = false;
  /// H (K n Z(G)) is normal; this is ker(gamma-bar)
  bool kernel_normal = false;
};
/// gamma(hk) = iota(h^-1) with K normal, G = HK and H n K <= Z(G). Also
/// reports whether the opposite gamma is a bi-GF and whether H is normal.
/// The opposite gamma is a bi-GF exactly when H (K n Z(G)) is normal, which
/// is asserted; this matches "H normal" whenever K n Z(G) <= H.
CentralConstruction central_gamma(const Group& g, const Subgroup& k, const Subgroup& h);

/// An automorphism of G leaving H and K invariant, with its restrictions.
struct CompatiblePair {
  Permutation aut;
  std::vector<Elem> d;  // d[i] = image of h.members()[i]
  std::vector<Elem> a;  // a[i] = image of k.members()[i]
};
struct CompatiblePairGroup {
  Group group;
  Subgroup k;
  Subgroup h;
  std::vector<CompatiblePair> members;  // sorted by aut

  bool contains(const Permutation& p) const;
};
CompatiblePairGroup compatible_pair_group(const Group& g, const Subgroup& k, const Subgroup& h);

/// gamma(hk) = gamma'(h) for an anti-homomorphic relative gamma function
/// on H with values in the compatible pair group.
Construction semi_gamma(const Group& g, const Subgroup& k, const Subgroup& h, const RelativeGammaFunction& rgf);

/// Input for the semidirect example C_q by C_{p^2}, with H acting on K
/// through a group of order p: gamma'(h^i) = (iota(h)^-s on K, psi^t on H)^i
/// where psi : x -> x^(1+p).
struct SemiExample {
  Group group;
  Subgroup k;
  Subgroup h;
  RelativeGammaFunction rgf;
};
SemiExample semi_example(std::size_t p, std::size_t q, std::size_t s, std::size_t t);

/// Delta : G/K x G/K -> K with K central, bilinear in each variable.
struct BiHom {
  Group group;
  Subgroup k;
  Quotient quotient;       // G/K
  std::vector<Elem> table;  // table[a * |G/K| + b], an element of K

  Elem operator()(Elem x, Elem y) const {
    const std::size_t m = quotient.group.order();
    return table[quotient.projection[x] * m + quotient.projection[y]];
  }
};

/// Checks K <= Z(G), values in K and bilinearity; throws Rejected naming
/// the failing variable.
BiHom make_bihom(const Group& g, const Subgroup& k, std::vector<Elem> table);

/// x^gamma(y) = Delta(xK, yK) x
Construction delta_gamma(const BiHom& delta);

/// Representatives in G of the generators of G/G'K on which a form for
/// bilinear_delta is given.
std::vector<Elem> bilinear_generators(const Group& g, const Subgroup& k);

/// Extends form[i][j] = Delta(e_i, e_j), e = bilinear_generators(g, k),
/// bilinearly; rejects forms that are not well defined on G/G'K.
BiHom bilinear_delta(const Group& g, const Subgroup& k, const std::vector<std::vector<Elem>>& form);

/// Delta(xK, yK) = [x, y]^(-1/2) with K = Z(G), for G of odd order and
/// class at most two. Checks that o is commutative.
Construction ault_watters_gamma(const Group& g);

/// A commutative radical ring on an abelian group (additive = the group
/// operation).
struct RadicalRing {
  Group additive;
  std::vector<Elem> star;

  Elem mul(Elem x, Elem y) const { return star[x * additive.order() + y]; }
  friend bool operator==(const RadicalRing& a, const RadicalRing& b) { return a.star == b.star; }
};

/// Validates every ring axiom and quasi-regularity; throws Rejected naming
/// the axiom that fails.
RadicalRing make_radical_ring(const Group& additive, std::vector<Elem> star);

/// Generators e_i of the additive group on which products are specified.
std::vector<Elem> ring_generators(const Group& additive);

/// Bilinear extension of products[i][j] = e_i * e_j.
RadicalRing ring_from_products(const Group& additive, const std::vector<std::vector<Elem>>& products);

/// x^gamma(y) = x + x * y
GammaFunction ring_to_gamma(const RadicalRing& r);

/// G * G * G = {0}
bool cube_condition(const RadicalRing& r);

/// Every commutative radical ring structure on an abelian group of order
/// at most kRingEnumerationBound.
inline constexpr std::size_t kRingEnumerationBound = 9;
std::vector<RadicalRing> enumerate_radical_rings(const Group& additive);

}  // namespace holoskew
