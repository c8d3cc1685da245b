#include "holoskew/identify.hpp"

#include <map>

#include "holoskew/group_spec.hpp"

namespace holoskew {

namespace {

// non-abelian groups only; abelian ones are named from their invariants
const std::map<std::size_t, std::vector<std::string>>& nonabelian_catalog() {
  static const std::map<std::size_t, std::vector<std::string>> cat = {
      {6, {"d3"}},
      {8, {"d4", "q8"}},
      {10, {"d5"}},
      {12, {"d6", "a4", "sd(c3,c4,inv)"}},
      {14, {"d7"}},
      {18, {"d9", "dp(d3,c3)", "sd(ab3x3,c2,inv)"}},
      {20, {"d10", "sd(c5,c4,inv)", "sd(c5,c4,pow2)"}},
      {21, {"sd(c7,c3,pow2)"}},
      {27, {"heis3", "modext(3,2)"}},
      {63, {"sd(c7,c9,pow2)", "dp(sd(c7,c3,pow2),c3)"}},
  };
  return cat;
}

struct Built {
  std::string spec;
  Group group;
  std::map<std::size_t, std::size_t> stats;
};

const std::vector<Built>& built(std::size_t order) {
  static const std::map<std::size_t, std::vector<Built>> all = [] {
    std::map<std::size_t, std::vector<Built>> out;
    for (const auto& [n, specs] : nonabelian_catalog()) {
      for (const auto& s : specs) {
        Group g = make_group(s);
        out[n].push_back({s, g, order_statistics(g)});
      }
    }
    return out;
  }();
  static const std::vector<Built> none;
  auto it = all.find(order);
  return it == all.end() ? none : it->second;
}

std::string abelian_name(const Group& g) {
  const auto inv = abelian_invariants(g);
  if (inv.size() <= 1) return "c" + std::to_string(g.order());
  std::string s = "ab";
  for (std::size_t i = 0; i < inv.size(); ++i) s += (i ? "x" : "") + std::to_string(inv[i]);
  return s;
}

}  // namespace

const std::vector<std::string>& catalog_specs(std::size_t order) {
  static const std::vector<std::string> none;
  auto it = nonabelian_catalog().find(order);
  return it == nonabelian_catalog().end() ? none : it->second;
}

bool catalog_complete(std::size_t order) {
  return order <= 15 || order == 18 || order == 20 || order == 21 || order == 27 || order == 63;
}

std::string identify_group(const Group& g) {
  if (g.is_abelian()) return abelian_name(g);
  const auto stats = order_statistics(g);
  for (const Built& b : built(g.order())) {
    if (b.stats == stats && is_isomorphic(g, b.group)) return b.spec;
  }
  return "order" + std::to_string(g.order()) + "?";
}

}  // namespace holoskew
