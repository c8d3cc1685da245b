#include "holoskew/automorphism.hpp"

#include <algorithm>

#include "holoskew/error.hpp"

namespace holoskew {

AutGroup::AutGroup(const Group& g) : group_(g) {
  for (auto& images : all_isomorphisms(g, g)) auts_.emplace_back(std::move(images));
  ensure(!auts_.empty() && auts_.front().is_identity(), "identity automorphism must come first");
  index_.reserve(auts_.size());
  for (AutIndex i = 0; i < auts_.size(); ++i) index_.emplace(auts_[i], i);

  const std::size_t m = auts_.size();
  if (m <= kTableLimit) {
    table_.resize(m * m);
    for (AutIndex a = 0; a < m; ++a) {
      for (AutIndex b = 0; b < m; ++b) {
        auto it = index_.find(holoskew::compose(auts_[a], auts_[b]));
        ensure(it != index_.end(), "automorphism list is not closed under composition");
        table_[a * m + b] = static_cast<std::uint32_t>(it->second);
      }
    }
  }
  inverse_.resize(m);
  for (AutIndex a = 0; a < m; ++a) {
    auto it = index_.find(auts_[a].inverse());
    ensure(it != index_.end(), "automorphism list is not closed under inverses");
    inverse_[a] = it->second;
  }

  // greedy generators, largest element order first
  std::vector<std::size_t> ord(m, 1);
  for (AutIndex a = 1; a < m; ++a) {
    AutIndex x = a;
    while (x != 0) {
      x = compose(x, a);
      ++ord[a];
    }
  }
  std::vector<AutIndex> by_order(m);
  for (AutIndex a = 0; a < m; ++a) by_order[a] = a;
  std::stable_sort(by_order.begin(), by_order.end(), [&](AutIndex a, AutIndex b) { return ord[a] > ord[b]; });
  std::vector<char> in(m, 0);
  std::vector<AutIndex> members{0};
  in[0] = 1;
  for (AutIndex cand : by_order) {
    if (members.size() == m) break;
    if (in[cand]) continue;
    gens_.push_back(cand);
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (AutIndex s : gens_) {
        const AutIndex y = compose(members[i], s);
        if (!in[y]) {
          in[y] = 1;
          members.push_back(y);
        }
      }
    }
  }
}

std::optional<AutIndex> AutGroup::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

AutIndex AutGroup::compose(AutIndex a, AutIndex b) const {
  if (!table_.empty()) return table_[a * auts_.size() + b];
  return index_.at(holoskew::compose(auts_[a], auts_[b]));
}

std::vector<AutIndex> AutGroup::inner_indices() const {
  std::vector<AutIndex> out;
  for (Elem y = 0; y < group_.order(); ++y) out.push_back(*index_of(inner(group_, y)));
  return out;
}

}  // namespace holoskew
