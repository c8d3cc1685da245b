#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "holoskew/gamma.hpp"
#include "holoskew/holomorph.hpp"

namespace holoskew {

/// The seven equivalent characterizations of a bi-skew brace, each
/// evaluated from its own formula.
struct BiskewReport {
  bool swap_is_brace = false;          // (G, o, .) is a skew brace
  bool rho_normalizes = false;         // rho(G) normalizes N
  bool anti_homomorphism = false;      // gamma(xy) = gamma(y) gamma(x)
  bool gamma_equivariant = false;      // gamma(x^gamma(y)) = gamma(x)^gamma(y)
  bool function_pair = false;          // both of the above, GFE not assumed
  bool bar_commutator_kernel = false;  // gamma([G, bar-gamma(G)]) = 1
  bool commutator_word = false;        // gamma(x^-1 y^-1 x^gamma(y) y) = 1
  bool agreement = false;
  /// flag name -> first counterexample, for every false flag
  std::map<std::string, std::string> witnesses;

  std::map<std::string, bool> flags() const;
  bool bi_skew() const { return agreement && swap_is_brace; }
};

/// Throws Rejected if gamma is not a gamma function and InvariantBreach
/// if the flags disagree.
BiskewReport biskew_report(const GammaFunction& gamma);

/// The equivalent characterizations of N normal in Hol(G).
struct BetaReport {
  bool aut_preserved = false;        // Aut(G, .) <= Aut(G, o)
  bool unique_iso_type = false;      // Aut(G)-orbit of N is {N}
  bool n_normal_in_hol = false;
  bool n_normalized_by_aut = false;
  bool beta_equivariant = false;     // gamma(x^b) = gamma(x)^b
  bool function_pair_beta = false;   // anti-homomorphism and the above
  bool agreement = false;
  std::size_t orbit_size = 0;
  std::map<std::string, std::string> witnesses;

  std::map<std::string, bool> flags() const;
};

BetaReport beta_report(const HolGroup& hol, const GammaFunction& gamma);

/// For a map G -> Aut(G): which of {GFE, anti-homomorphism, equivariance}
/// hold. Any two imply the third; this is asserted.
struct TwoOfThree {
  bool first = false;
  bool second = false;
  bool third = false;
  int count() const { return first + second + third; }
};
TwoOfThree two_of_three_gf(const Group& g, const std::vector<Permutation>& values);

/// For a gamma function: {homomorphism, abelian image, anti-homomorphism}.
TwoOfThree two_of_three_abelian(const GammaFunction& gamma);

/// All skew braces on G, with their Aut(G)-orbits.
struct BraceCensus {
  HolGroup hol;
  std::vector<RegularSubgroup> regs;    // sorted
  std::vector<GammaFunction> gammas;    // gammas[i] belongs to regs[i]
  std::vector<std::size_t> orbit;       // smallest index in the orbit of i
  std::vector<std::vector<std::size_t>> orbits;

  std::optional<std::size_t> find(const RegularSubgroup& n) const;
  std::size_t size() const { return regs.size(); }
};
BraceCensus brace_census(const Group& g);

/// Partition of the gamma functions on G into Aut(G)-orbits (brace
/// isomorphism classes), each orbit sorted, orbits ordered by first member.
std::vector<std::vector<std::size_t>> brace_iso_classes(const Group& g);

}  // namespace holoskew
