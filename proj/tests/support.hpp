#pragma once

#include <random>
#include <set>
#include <string>
#include <vector>

#include "holoskew/group.hpp"
#include "holoskew/perm.hpp"

namespace holoskew::testing {

/// Every group of order <= max_order up to isomorphism, as spec strings.
std::vector<std::string> small_groups(std::size_t max_order);

/// small_groups(12) plus heis3 and modext(3,2).
std::vector<std::string> sweep_groups();

/// Automorphisms by brute force over all bijections fixing 0.
std::vector<Permutation> brute_automorphisms(const Group& g);

/// All circle tables o on G making (G, ., o) a skew brace, found without the
/// holomorph: each column z of o is x -> f(x) z for an automorphism f, and
/// the columns must close up into a regular permutation group. Row-major
/// tables, sorted. Limited to |G| <= 8.
std::set<std::vector<Elem>> oracle_circle_tables(const Group& g);

/// Fixed-seed generator for property tests.
inline std::mt19937_64& rng() {
  static std::mt19937_64 r(20240611);
  return r;
}

inline Elem random_element(const Group& g) {
  return std::uniform_int_distribution<Elem>(0, g.order() - 1)(rng());
}

/// n maps drawn uniformly from `pool`.
std::vector<Permutation> random_aut_valued(std::size_t n, const std::vector<Permutation>& pool);

}  // namespace holoskew::testing
