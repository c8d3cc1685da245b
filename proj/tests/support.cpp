#include "support.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace holoskew::testing {

std::vector<std::string> small_groups(std::size_t max_order) {
  static const std::vector<std::pair<std::size_t, std::vector<std::string>>> all = {
      {1, {"trivial"}},
      {2, {"c2"}},
      {3, {"c3"}},
      {4, {"c4", "ab2x2"}},
      {5, {"c5"}},
      {6, {"c6", "d3"}},
      {7, {"c7"}},
      {8, {"c8", "ab2x4", "ab2x2x2", "d4", "q8"}},
      {9, {"c9", "ab3x3"}},
      {10, {"c10", "d5"}},
      {11, {"c11"}},
      {12, {"c12", "ab2x6", "d6", "a4", "sd(c3,c4,inv)"}},
  };
  std::vector<std::string> out;
  for (const auto& [n, specs] : all) {
    if (n <= max_order) out.insert(out.end(), specs.begin(), specs.end());
  }
  return out;
}

std::vector<std::string> sweep_groups() {
  auto out = small_groups(12);
  out.push_back("heis3");
  out.push_back("modext(3,2)");
  return out;
}

std::vector<Permutation> brute_automorphisms(const Group& g) {
  const std::size_t n = g.order();
  std::vector<Elem> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> out;
  do {
    bool hom = true;
    for (Elem x = 0; x < n && hom; ++x) {
      for (Elem y = 0; y < n && hom; ++y) hom = img[g.mul(x, y)] == g.mul(img[x], img[y]);
    }
    if (hom) out.emplace_back(img);
  } while (std::next_permutation(img.begin() + 1, img.end()));
  return out;
}

namespace {

using Column = std::vector<Elem>;  // column[x] = x o z

struct Search {
  const Group& g;
  std::vector<Permutation> auts;
  std::set<std::vector<Elem>> found;

  // Closes `cols` (indexed by z = image of 0) under composition; false on a
  // clash, i.e. two different permutations sending 0 to the same point.
  bool close(std::map<Elem, Column>& cols) const {
    std::vector<Elem> todo;
    for (const auto& [z, c] : cols) todo.push_back(z);
    while (!todo.empty()) {
      const Elem a = todo.back();
      todo.pop_back();
      std::vector<Elem> keys;
      for (const auto& [z, c] : cols) keys.push_back(z);
      for (Elem b : keys) {
        for (int side = 0; side < 2; ++side) {
          const Column& p = cols.at(side ? a : b);
          const Column& q = cols.at(side ? b : a);
          Column r(p.size());
          for (Elem x = 0; x < p.size(); ++x) r[x] = q[p[x]];
          auto it = cols.find(r[0]);
          if (it == cols.end()) {
            cols.emplace(r[0], r);
            todo.push_back(r[0]);
          } else if (it->second != r) {
            return false;
          }
        }
      }
    }
    return true;
  }

  void run(std::map<Elem, Column> cols) {
    const std::size_t n = g.order();
    Elem z = 0;
    while (z < n && cols.count(z)) ++z;
    if (z == n) {
      std::vector<Elem> table(n * n);
      for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) table[x * n + y] = cols.at(y)[x];
      }
      found.insert(std::move(table));
      return;
    }
    for (const Permutation& f : auts) {
      Column c(n);
      for (Elem x = 0; x < n; ++x) c[x] = g.mul(f[x], z);
      auto next = cols;
      next.emplace(z, c);
      if (close(next)) run(std::move(next));
    }
  }
};

}  // namespace

std::set<std::vector<Elem>> oracle_circle_tables(const Group& g) {
  if (g.order() > 8) throw std::invalid_argument("circle-table oracle is limited to order 8");
  Search s{g, brute_automorphisms(g), {}};
  std::map<Elem, Column> start;
  Column id(g.order());
  std::iota(id.begin(), id.end(), 0);
  start.emplace(0, id);
  s.run(start);
  // Certify each table directly: group axioms and the brace axiom.
  const std::size_t n = g.order();
  for (const auto& t : s.found) {
    Group::from_table(t);
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        for (Elem z = 0; z < n; ++z) {
          const Elem lhs = t[g.mul(x, y) * n + z];
          const Elem rhs = g.mul(g.mul(t[x * n + z], g.inv(z)), t[y * n + z]);
          if (lhs != rhs) throw std::logic_error("oracle produced a table violating the brace axiom");
        }
      }
    }
  }
  return s.found;
}

std::vector<Permutation> random_aut_valued(std::size_t n, const std::vector<Permutation>& pool) {
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::vector<Permutation> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(pool[pick(rng())]);
  return out;
}

}  // namespace holoskew::testing
