#pragma once

#include <compare>
#include <optional>
#include <span>
#include <vector>

#include "holoskew/automorphism.hpp"
#include "holoskew/group.hpp"
#include "holoskew/perm.hpp"

namespace holoskew {

/// (alpha, g) acting as x -> x^alpha g.
struct HolElement {
  AutIndex aut = 0;
  Elem g = 0;
  friend bool operator==(const HolElement&, const HolElement&) = default;
  friend auto operator<=>(const HolElement&, const HolElement&) = default;
};

/// Hol(G) = Aut(G) rho(G) as a concrete permutation group on G.
class HolGroup {
 public:
  explicit HolGroup(const Group& g);
  HolGroup(const Group& g, AutGroup aut);

  const Group& group() const { return group_; }
  const AutGroup& aut() const { return aut_; }
  std::size_t order() const { return aut_.size() * group_.order(); }

  /// (a, g)(b, h) = (ab, g^b h)
  HolElement compose(HolElement x, HolElement y) const {
    return {aut_.compose(x.aut, y.aut), group_.mul(aut_.apply(y.aut, x.g), y.g)};
  }
  HolElement inverse(HolElement x) const;
  /// y^-1 x y
  HolElement conjugate(HolElement x, HolElement y) const { return compose(compose(inverse(y), x), y); }
  Elem act(HolElement h, Elem x) const { return group_.mul(aut_.apply(h.aut, x), h.g); }
  Permutation as_permutation(HolElement h) const;

  std::size_t index(HolElement h) const { return h.aut * group_.order() + h.g; }
  HolElement element(std::size_t idx) const { return {idx / group_.order(), idx % group_.order()}; }

  std::vector<HolElement> rho_generators() const;
  std::vector<HolElement> aut_generators() const;
  std::vector<HolElement> generators() const;

 private:
  Group group_;
  AutGroup aut_;
};

/// Hol(G) as an abstract group; element index is HolGroup::index.
Group hol_as_group(const HolGroup& hol);

/// A regular subgroup N of Hol(G), stored through nu: nu(g) = (gamma[g], g)
/// is the unique element of N sending the identity to g.
struct RegularSubgroup {
  std::vector<AutIndex> gamma;

  std::size_t size() const { return gamma.size(); }
  HolElement nu(Elem g) const { return {gamma[g], g}; }
  bool contains(HolElement h) const { return h.g < gamma.size() && gamma[h.g] == h.aut; }
  std::vector<HolElement> elements() const;

  friend bool operator==(const RegularSubgroup&, const RegularSubgroup&) = default;
  friend auto operator<=>(const RegularSubgroup&, const RegularSubgroup&) = default;
};

/// rho(G) itself.
RegularSubgroup rho_subgroup(const HolGroup& hol);

/// Validates that the listed elements form a regular subgroup of Hol(G).
std::optional<RegularSubgroup> regular_subgroup_from_elements(const HolGroup& hol, std::span<const HolElement> elems);

/// N as an abstract group in nu-coordinates: table[x][y] = z with
/// nu(x) nu(y) = nu(z). This is the circle group of the associated brace.
Group regular_subgroup_as_group(const HolGroup& hol, const RegularSubgroup& n);

/// Every regular subgroup of Hol(G), sorted by gamma array, duplicate-free.
std::vector<RegularSubgroup> enumerate_regular_subgroups(const HolGroup& hol);

/// N^beta for beta in Aut(G).
RegularSubgroup conjugate_by_aut(const HolGroup& hol, const RegularSubgroup& n, AutIndex beta);

struct NormalizerInHol {
  std::vector<HolElement> members;
  std::size_t index = 0;  // |Hol(G) : N_Hol(G)(N)|
};
NormalizerInHol normalizer_in_hol(const HolGroup& hol, const RegularSubgroup& n);

bool is_normalized_by_rho(const HolGroup& hol, const RegularSubgroup& n);
bool is_normalized_by_aut(const HolGroup& hol, const RegularSubgroup& n);
bool is_normal_in_hol(const HolGroup& hol, const RegularSubgroup& n);

/// The same rho-normality test on raw automorphism values gamma(y), without
/// materializing Aut(G).
bool is_normalized_by_rho(const Group& g, std::span<const Permutation> gamma);

/// Largest degree for which T(G) is computed by searching all of S(G).
inline constexpr std::size_t kDirectDegreeBound = 8;

/// |N_S(G)(Hol(G)) : Hol(G)| by brute force over S(G). Throws Rejected for
/// |G| > kDirectDegreeBound.
std::size_t multiple_holomorph_direct(const HolGroup& hol);

/// Indices into `regs` of the set H(G): regular N with N = G and N normal
/// in Hol(G).
std::vector<std::size_t> miller_set(const HolGroup& hol, std::span<const RegularSubgroup> regs);

}  // namespace holoskew
