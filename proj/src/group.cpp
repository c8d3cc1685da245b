#include "holoskew/group.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "holoskew/error.hpp"

namespace holoskew {

namespace {

std::size_t isqrt_exact(std::size_t m) {
  auto r = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(m))));
  while (r * r > m) --r;
  while ((r + 1) * (r + 1) <= m) ++r;
  return r;
}

std::string triple(Elem i, Elem j, Elem k) {
  std::ostringstream os;
  os << "(" << i << ", " << j << ", " << k << ")";
  return os.str();
}

}  // namespace

Group Group::from_table(std::vector<Elem> table, std::string name) {
  const std::size_t n = isqrt_exact(table.size());
  if (n == 0 || n * n != table.size()) throw Rejected("Cayley table must be a non-empty n x n array");
  for (std::size_t idx = 0; idx < table.size(); ++idx) {
    if (table[idx] >= n) {
      std::ostringstream os;
      os << "table entry at row " << idx / n << ", column " << idx % n << " is out of range";
      throw Rejected(os.str());
    }
  }
  auto at = [&](Elem a, Elem b) { return table[a * n + b]; };
  for (Elem j = 0; j < n; ++j) {
    if (at(0, j) != j || at(j, 0) != j) {
      std::ostringstream os;
      os << "index 0 is not a two-sided identity (fails at element " << j << ")";
      throw Rejected(os.str());
    }
  }
  std::vector<char> seen(n);
  for (Elem i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem j = 0; j < n; ++j) {
      if (seen[at(i, j)]++) throw Rejected("row " + std::to_string(i) + " is not a permutation");
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem j = 0; j < n; ++j) {
      if (seen[at(j, i)]++) throw Rejected("column " + std::to_string(i) + " is not a permutation");
    }
  }
  for (Elem i = 0; i < n; ++i) {
    for (Elem j = 0; j < n; ++j) {
      const Elem ij = at(i, j);
      for (Elem k = 0; k < n; ++k) {
        if (at(ij, k) != at(i, at(j, k))) throw Rejected("operation is not associative at " + triple(i, j, k));
      }
    }
  }

  auto d = std::make_shared<Data>();
  d->n = n;
  d->name = std::move(name);
  d->inverse.assign(n, 0);
  d->orders.assign(n, 1);
  for (Elem i = 0; i < n; ++i) {
    for (Elem j = 0; j < n; ++j) {
      if (at(i, j) == 0) d->inverse[i] = j;
    }
    Elem x = i;
    std::size_t k = 1;
    while (x != 0) {
      x = at(x, i);
      ++k;
    }
    d->orders[i] = i == 0 ? 1 : k;
  }
  d->table = std::move(table);
  return Group(std::move(d));
}

Elem Group::pow(Elem x, long long k) const {
  if (k < 0) {
    x = inv(x);
    k = -k;
  }
  k %= static_cast<long long>(element_order(x));
  Elem r = 0;
  Elem b = x;
  while (k > 0) {
    if (k & 1) r = mul(r, b);
    b = mul(b, b);
    k >>= 1;
  }
  return r;
}

bool Group::is_abelian() const {
  const auto n = order();
  for (Elem i = 0; i < n; ++i) {
    for (Elem j = i + 1; j < n; ++j) {
      if (mul(i, j) != mul(j, i)) return false;
    }
  }
  return true;
}

Group Group::renamed(std::string name) const {
  auto d = std::make_shared<Data>(*d_);
  d->name = std::move(name);
  return Group(std::move(d));
}

Subgroup::Subgroup(const Group& g, std::vector<Elem> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  mask_.assign(g.order(), false);
  for (Elem m : members) {
    if (m >= g.order()) throw Rejected("subgroup member out of range");
    mask_[m] = true;
  }
  if (members.empty() || members.front() != 0) throw Rejected("subgroup must contain the identity");
  for (Elem a : members) {
    if (!mask_[g.inv(a)]) throw Rejected("subset is not closed under inverses");
    for (Elem b : members) {
      if (!mask_[g.mul(a, b)]) throw Rejected("subset is not closed under the group operation");
    }
  }
  members_ = std::move(members);
}

Subgroup subgroup_closure(const Group& g, std::span<const Elem> seed) {
  std::vector<char> in(g.order(), 0);
  std::vector<Elem> members{0};
  in[0] = 1;
  std::vector<Elem> gens;
  for (Elem s : seed) {
    if (s >= g.order()) throw Rejected("seed element out of range");
    if (s != 0) gens.push_back(s);
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Elem s : gens) {
      const Elem y = g.mul(members[i], s);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  }
  return Subgroup(g, std::move(members));
}

Subgroup whole_group(const Group& g) {
  std::vector<Elem> all(g.order());
  std::iota(all.begin(), all.end(), Elem{0});
  return Subgroup(g, std::move(all));
}

Subgroup trivial_subgroup(const Group& g) { return Subgroup(g, {0}); }

Subgroup center(const Group& g) {
  std::vector<Elem> z;
  for (Elem x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Elem y = 0; y < g.order() && central; ++y) central = g.mul(x, y) == g.mul(y, x);
    if (central) z.push_back(x);
  }
  return Subgroup(g, std::move(z));
}

Subgroup derived_subgroup(const Group& g) {
  std::set<Elem> comms;
  for (Elem x = 0; x < g.order(); ++x) {
    for (Elem y = 0; y < g.order(); ++y) comms.insert(g.comm(x, y));
  }
  std::vector<Elem> seed(comms.begin(), comms.end());
  return subgroup_closure(g, seed);
}

Subgroup intersection(const Group& g, const Subgroup& a, const Subgroup& b) {
  std::vector<Elem> out;
  for (Elem x : a.members()) {
    if (b.contains(x)) out.push_back(x);
  }
  return Subgroup(g, std::move(out));
}

std::vector<Subgroup> all_subgroups(const Group& g) {
  std::set<std::vector<Elem>> found;
  std::vector<Subgroup> queue{trivial_subgroup(g)};
  found.insert(queue.front().members());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Subgroup s = queue[i];
    std::vector<char> covered(g.order(), 0);
    for (Elem x = 0; x < g.order(); ++x) {
      if (s.contains(x) || covered[x]) continue;
      std::vector<Elem> seed = s.members();
      seed.push_back(x);
      Subgroup t = subgroup_closure(g, seed);
      // <s, x> = <s, xm> for m in s
      for (Elem m : s.members()) covered[g.mul(x, m)] = 1;
      if (found.insert(t.members()).second) queue.push_back(std::move(t));
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

std::vector<Subgroup> maximal_subgroups(const Group& g) {
  std::vector<Subgroup> out;
  for (const Subgroup& s : all_subgroups(g)) {
    if (s.size() == g.order()) continue;
    bool maximal = true;
    for (Elem x = 0; x < g.order() && maximal; ++x) {
      if (s.contains(x)) continue;
      std::vector<Elem> seed = s.members();
      seed.push_back(x);
      maximal = subgroup_closure(g, seed).size() == g.order();
    }
    if (maximal) out.push_back(s);
  }
  return out;
}

Subgroup frattini(const Group& g) {
  Subgroup acc = whole_group(g);
  for (const Subgroup& m : maximal_subgroups(g)) acc = intersection(g, acc, m);
  return acc;
}

bool is_normal(const Group& g, const Subgroup& s) {
  for (Elem x : s.members()) {
    for (Elem y = 0; y < g.order(); ++y) {
      if (!s.contains(g.conj(x, y))) return false;
    }
  }
  return true;
}

bool factorizes(const Group& g, const Subgroup& h, const Subgroup& k) {
  std::vector<char> hit(g.order(), 0);
  std::size_t count = 0;
  for (Elem a : h.members()) {
    for (Elem b : k.members()) {
      Elem p = g.mul(a, b);
      if (!hit[p]) {
        hit[p] = 1;
        ++count;
      }
    }
  }
  return count == g.order();
}

Quotient quotient(const Group& g, const Subgroup& n) {
  if (!is_normal(g, n)) throw Rejected("quotient requires a normal subgroup");
  const std::size_t idx = g.order() / n.size();
  std::vector<Elem> coset(g.order(), g.order());
  std::vector<Elem> reps;
  for (Elem x = 0; x < g.order(); ++x) {
    if (coset[x] != g.order()) continue;
    const Elem c = reps.size();
    reps.push_back(x);
    for (Elem m : n.members()) coset[g.mul(x, m)] = c;
  }
  std::vector<Elem> table(idx * idx);
  for (Elem i = 0; i < idx; ++i) {
    for (Elem j = 0; j < idx; ++j) table[i * idx + j] = coset[g.mul(reps[i], reps[j])];
  }
  std::string name = g.name().empty() ? std::string{} : g.name() + "/N";
  return Quotient{Group::from_table(std::move(table), std::move(name)), std::move(coset), std::move(reps)};
}

std::vector<Elem> generating_sequence(const Group& g) {
  std::vector<Elem> order(g.order());
  std::iota(order.begin(), order.end(), Elem{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Elem a, Elem b) { return g.element_order(a) > g.element_order(b); });
  std::vector<Elem> gens;
  Subgroup cur = trivial_subgroup(g);
  for (Elem x : order) {
    if (cur.size() == g.order()) break;
    if (cur.contains(x)) continue;
    gens.push_back(x);
    cur = subgroup_closure(g, gens);
  }
  return gens;
}

std::map<std::size_t, std::size_t> order_statistics(const Group& g) {
  std::map<std::size_t, std::size_t> stats;
  for (Elem x = 0; x < g.order(); ++x) ++stats[g.element_order(x)];
  return stats;
}

std::size_t exponent(const Group& g) {
  std::size_t e = 1;
  for (Elem x = 0; x < g.order(); ++x) e = std::lcm(e, g.element_order(x));
  return e;
}

bool has_class_at_most_two(const Group& g) {
  const Subgroup z = center(g);
  for (Elem x = 0; x < g.order(); ++x) {
    for (Elem y = 0; y < g.order(); ++y) {
      if (!z.contains(g.comm(x, y))) return false;
    }
  }
  return true;
}

namespace {

// Backtracking search for homomorphic bijections a -> b, extending images
// of a generating sequence one generator at a time.
class IsoSearch {
 public:
  IsoSearch(const Group& a, const Group& b, bool want_all) : a_(a), b_(b), want_all_(want_all) {
    gens_ = generating_sequence(a_);
    // layered spanning trees: level i spans <gens_[0..i]> using those generators
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      Level lv;
      std::vector<char> in(a_.order(), 0);
      lv.bfs.push_back(0);
      in[0] = 1;
      lv.parent.assign(a_.order(), 0);
      lv.via.assign(a_.order(), 0);
      for (std::size_t q = 0; q < lv.bfs.size(); ++q) {
        for (std::size_t j = 0; j <= i; ++j) {
          const Elem y = a_.mul(lv.bfs[q], gens_[j]);
          if (!in[y]) {
            in[y] = 1;
            lv.parent[y] = lv.bfs[q];
            lv.via[y] = j;
            lv.bfs.push_back(y);
          }
        }
      }
      levels_.push_back(std::move(lv));
    }
    for (Elem g : gens_) {
      std::vector<Elem> c;
      for (Elem y = 0; y < b_.order(); ++y) {
        if (b_.element_order(y) == a_.element_order(g)) c.push_back(y);
      }
      candidates_.push_back(std::move(c));
    }
  }

  void run() {
    if (a_.order() != b_.order() || order_statistics(a_) != order_statistics(b_)) return;
    if (a_.order() == 1) {
      results_.push_back({0});
      return;
    }
    images_.assign(gens_.size(), 0);
    recurse(0);
    std::sort(results_.begin(), results_.end());
  }

  std::vector<std::vector<Elem>> results_;

 private:
  struct Level {
    std::vector<Elem> bfs;
    std::vector<Elem> parent;
    std::vector<std::size_t> via;
  };

  bool done() const { return !want_all_ && !results_.empty(); }

  // Builds the map on <gens_[0..i]> and checks it is an injective homomorphism.
  bool extend(std::size_t i, std::vector<Elem>& phi) const {
    const Level& lv = levels_[i];
    phi.assign(a_.order(), b_.order());
    std::vector<char> used(b_.order(), 0);
    phi[0] = 0;
    used[0] = 1;
    for (std::size_t q = 1; q < lv.bfs.size(); ++q) {
      const Elem x = lv.bfs[q];
      const Elem y = b_.mul(phi[lv.parent[x]], images_[lv.via[x]]);
      if (used[y]) return false;
      used[y] = 1;
      phi[x] = y;
    }
    for (Elem x : lv.bfs) {
      for (std::size_t j = 0; j <= i; ++j) {
        if (phi[a_.mul(x, gens_[j])] != b_.mul(phi[x], images_[j])) return false;
      }
    }
    return true;
  }

  void recurse(std::size_t i) {
    std::vector<Elem> phi;
    for (Elem c : candidates_[i]) {
      if (done()) return;
      images_[i] = c;
      if (!extend(i, phi)) continue;
      if (i + 1 == gens_.size()) {
        results_.push_back(phi);
      } else {
        recurse(i + 1);
      }
    }
  }

  const Group& a_;
  const Group& b_;
  bool want_all_;
  std::vector<Elem> gens_;
  std::vector<Level> levels_;
  std::vector<std::vector<Elem>> candidates_;
  std::vector<Elem> images_;
};

}  // namespace

std::optional<std::vector<Elem>> is_isomorphic(const Group& a, const Group& b) {
  IsoSearch s(a, b, false);
  s.run();
  if (s.results_.empty()) return std::nullopt;
  return s.results_.front();
}

std::vector<std::vector<Elem>> all_isomorphisms(const Group& a, const Group& b) {
  IsoSearch s(a, b, true);
  s.run();
  return std::move(s.results_);
}

std::vector<std::size_t> abelian_invariants(const Group& g) {
  if (!g.is_abelian()) throw Rejected("abelian_invariants requires an abelian group");
  std::size_t n = g.order();
  std::vector<std::vector<std::size_t>> prime_parts;  // descending prime powers per prime
  for (std::size_t p = 2; n > 1; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    // s_k = log_p #{x : x^(p^k) = 1}
    std::vector<std::size_t> s{0};
    std::size_t pk = 1;
    while (true) {
      pk *= p;
      std::size_t count = 0;
      for (Elem x = 0; x < g.order(); ++x) count += g.pow(x, static_cast<long long>(pk)) == 0;
      std::size_t e = 0;
      for (std::size_t c = count; c > 1; c /= p) ++e;
      if (e == s.back()) break;
      s.push_back(e);
    }
    // r_k = number of cyclic factors of order >= p^k
    std::vector<std::size_t> powers;
    for (std::size_t k = s.size() - 1; k >= 1; --k) {
      const std::size_t r_k = s[k] - s[k - 1];
      const std::size_t r_next = k + 1 < s.size() ? s[k + 1] - s[k] : 0;
      std::size_t q = 1;
      for (std::size_t t = 0; t < k; ++t) q *= p;
      for (std::size_t c = 0; c < r_k - r_next; ++c) powers.push_back(q);
    }
    prime_parts.push_back(std::move(powers));
  }
  std::size_t len = 0;
  for (const auto& pp : prime_parts) len = std::max(len, pp.size());
  std::vector<std::size_t> inv(len, 1);
  for (const auto& pp : prime_parts) {
    for (std::size_t i = 0; i < pp.size(); ++i) inv[i] *= pp[i];
  }
  std::sort(inv.begin(), inv.end());
  return inv;
}

}  // namespace holoskew
