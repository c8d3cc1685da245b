#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "holoskew/group.hpp"
#include "holoskew/perm.hpp"

namespace holoskew {

using AutIndex = std::size_t;

/// The full automorphism group of a finite group, materialized as a list in
/// lexicographic order of image arrays. The identity is always index 0.
///
/// For groups with at most kTableLimit automorphisms the composition table
/// is precomputed; larger groups compose on demand.
class AutGroup {
 public:
  static constexpr std::size_t kTableLimit = 2048;

  explicit AutGroup(const Group& g);

  const Group& group() const { return group_; }
  std::size_t size() const { return auts_.size(); }
  const Permutation& operator[](AutIndex i) const { return auts_[i]; }
  const std::vector<Permutation>& elements() const { return auts_; }
  std::optional<AutIndex> index_of(const Permutation& p) const;

  /// a then b
  AutIndex compose(AutIndex a, AutIndex b) const;
  AutIndex inverse(AutIndex a) const { return inverse_[a]; }
  /// b^-1 a b
  AutIndex conjugate(AutIndex a, AutIndex b) const { return compose(compose(inverse(b), a), b); }
  Elem apply(AutIndex a, Elem x) const { return auts_[a][x]; }
  bool has_table() const { return !table_.empty(); }

  /// A small generating set, chosen greedily.
  const std::vector<AutIndex>& generators() const { return gens_; }

  /// The indices of inner automorphisms, i.e. inner(y) for all y.
  std::vector<AutIndex> inner_indices() const;

 private:
  Group group_;
  std::vector<Permutation> auts_;
  std::unordered_map<Permutation, AutIndex, PermutationHash> index_;
  std::vector<AutIndex> inverse_;
  std::vector<std::uint32_t> table_;
  std::vector<AutIndex> gens_;
};

inline AutGroup automorphism_group(const Group& g) { return AutGroup(g); }

}  // namespace holoskew
