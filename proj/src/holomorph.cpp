#include "holoskew/holomorph.hpp"

#include <algorithm>
#include <unordered_set>

#include "holoskew/error.hpp"

namespace holoskew {

HolGroup::HolGroup(const Group& g) : group_(g), aut_(g) {}

HolGroup::HolGroup(const Group& g, AutGroup aut) : group_(g), aut_(std::move(aut)) {
  if (!(aut_.group() == g)) throw Rejected("automorphism group belongs to a different group");
}

HolElement HolGroup::inverse(HolElement x) const {
  // (a, g)^-1 = (a^-1, (g^-1)^(a^-1))
  const AutIndex ai = aut_.inverse(x.aut);
  return {ai, aut_.apply(ai, group_.inv(x.g))};
}

Permutation HolGroup::as_permutation(HolElement h) const {
  std::vector<Elem> img(group_.order());
  for (Elem x = 0; x < group_.order(); ++x) img[x] = act(h, x);
  return Permutation(std::move(img));
}

std::vector<HolElement> HolGroup::rho_generators() const {
  std::vector<HolElement> out;
  for (Elem g : generating_sequence(group_)) out.push_back({0, g});
  return out;
}

std::vector<HolElement> HolGroup::aut_generators() const {
  std::vector<HolElement> out;
  for (AutIndex a : aut_.generators()) out.push_back({a, 0});
  return out;
}

std::vector<HolElement> HolGroup::generators() const {
  auto out = aut_generators();
  auto r = rho_generators();
  out.insert(out.end(), r.begin(), r.end());
  return out;
}

Group hol_as_group(const HolGroup& hol) {
  const std::size_t m = hol.order();
  std::vector<Elem> t(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) t[i * m + j] = hol.index(hol.compose(hol.element(i), hol.element(j)));
  }
  return Group::from_table(std::move(t), "Hol(" + hol.group().name() + ")");
}

std::vector<HolElement> RegularSubgroup::elements() const {
  std::vector<HolElement> out;
  for (Elem g = 0; g < gamma.size(); ++g) out.push_back(nu(g));
  return out;
}

RegularSubgroup rho_subgroup(const HolGroup& hol) {
  return RegularSubgroup{std::vector<AutIndex>(hol.group().order(), 0)};
}

std::optional<RegularSubgroup> regular_subgroup_from_elements(const HolGroup& hol,
                                                              std::span<const HolElement> elems) {
  const std::size_t n = hol.group().order();
  if (elems.size() != n) return std::nullopt;
  RegularSubgroup out{std::vector<AutIndex>(n, hol.aut().size())};
  for (const HolElement& h : elems) {
    if (h.aut >= hol.aut().size() || h.g >= n || out.gamma[h.g] != hol.aut().size()) return std::nullopt;
    out.gamma[h.g] = h.aut;
  }
  for (const HolElement& a : elems) {
    if (!out.contains(hol.inverse(a))) return std::nullopt;
    for (const HolElement& b : elems) {
      if (!out.contains(hol.compose(a, b))) return std::nullopt;
    }
  }
  return out;
}

Group regular_subgroup_as_group(const HolGroup& hol, const RegularSubgroup& n) {
  const std::size_t k = n.size();
  std::vector<Elem> t(k * k);
  for (Elem x = 0; x < k; ++x) {
    for (Elem y = 0; y < k; ++y) {
      const HolElement p = hol.compose(n.nu(x), n.nu(y));
      ensure(n.contains(p), "regular subgroup is not closed");
      t[x * k + y] = p.g;
    }
  }
  return Group::from_table(std::move(t));
}

namespace {

// Depth-first search over partial regular subgroups. At each node the
// smallest uncovered translation t is chosen and every (a, t) is tried; the
// closure must keep all translations distinct. Distinct choices at a node
// give distinct subgroups, so no deduplication is needed.
class RegularSearch {
 public:
  explicit RegularSearch(const HolGroup& hol) : hol_(hol), n_(hol.group().order()), none_(hol.aut().size()) {}

  std::vector<RegularSubgroup> run() {
    std::vector<AutIndex> trans(n_, none_);
    trans[0] = 0;
    std::vector<HolElement> gens;
    dfs(trans, 1, gens);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  // Closure of <gens>; false if two elements share a translation.
  bool close(const std::vector<HolElement>& gens, std::vector<AutIndex>& trans, std::size_t& count) const {
    std::fill(trans.begin(), trans.end(), none_);
    std::vector<HolElement> elems{{0, 0}};
    trans[0] = 0;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (const HolElement& s : gens) {
        const HolElement y = hol_.compose(elems[i], s);
        if (trans[y.g] == y.aut) continue;
        if (trans[y.g] != none_) return false;
        trans[y.g] = y.aut;
        elems.push_back(y);
      }
    }
    count = elems.size();
    return true;
  }

  void dfs(const std::vector<AutIndex>& trans, std::size_t count, std::vector<HolElement>& gens) {
    if (count == n_) {
      found_.push_back(RegularSubgroup{trans});
      return;
    }
    Elem t = 0;
    while (trans[t] != none_) ++t;
    std::vector<AutIndex> next(n_);
    for (AutIndex a = 0; a < none_; ++a) {
      gens.push_back({a, t});
      std::size_t c = 0;
      if (close(gens, next, c)) dfs(next, c, gens);
      gens.pop_back();
    }
  }

  const HolGroup& hol_;
  std::size_t n_;
  AutIndex none_;
  std::vector<RegularSubgroup> found_;
};

}  // namespace

std::vector<RegularSubgroup> enumerate_regular_subgroups(const HolGroup& hol) {
  return RegularSearch(hol).run();
}

RegularSubgroup conjugate_by_aut(const HolGroup& hol, const RegularSubgroup& n, AutIndex beta) {
  // (b^-1 a b, y^b): gamma'(y^b) = gamma(y)^b
  RegularSubgroup out{std::vector<AutIndex>(n.size())};
  for (Elem y = 0; y < n.size(); ++y) {
    out.gamma[hol.aut().apply(beta, y)] = hol.aut().conjugate(n.gamma[y], beta);
  }
  return out;
}

namespace {

std::vector<HolElement> subgroup_generators(const HolGroup& hol, const RegularSubgroup& n) {
  // greedy: add nu(g) whenever it is not yet generated
  std::vector<HolElement> gens;
  std::vector<char> in(n.size(), 0);
  std::vector<HolElement> elems{{0, 0}};
  in[0] = 1;
  for (Elem g = 1; g < n.size(); ++g) {
    if (in[g]) continue;
    gens.push_back(n.nu(g));
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (const HolElement& s : gens) {
        const HolElement y = hol.compose(elems[i], s);
        if (!in[y.g]) {
          in[y.g] = 1;
          elems.push_back(y);
        }
      }
    }
  }
  return gens;
}

bool normalized_by(const HolGroup& hol, const RegularSubgroup& n, std::span<const HolElement> by) {
  for (const HolElement& h : by) {
    for (Elem y = 0; y < n.size(); ++y) {
      if (!n.contains(hol.conjugate(n.nu(y), h))) return false;
    }
  }
  return true;
}

}  // namespace

NormalizerInHol normalizer_in_hol(const HolGroup& hol, const RegularSubgroup& n) {
  const auto gens = subgroup_generators(hol, n);
  NormalizerInHol out;
  for (std::size_t i = 0; i < hol.order(); ++i) {
    const HolElement h = hol.element(i);
    bool keeps = true;
    for (const HolElement& s : gens) {
      if (!n.contains(hol.conjugate(s, h))) {
        keeps = false;
        break;
      }
    }
    if (keeps) out.members.push_back(h);
  }
  out.index = hol.order() / out.members.size();
  return out;
}

bool is_normalized_by_rho(const HolGroup& hol, const RegularSubgroup& n) {
  const auto gens = hol.rho_generators();
  return normalized_by(hol, n, gens);
}

bool is_normalized_by_aut(const HolGroup& hol, const RegularSubgroup& n) {
  const auto gens = hol.aut_generators();
  return normalized_by(hol, n, gens);
}

bool is_normal_in_hol(const HolGroup& hol, const RegularSubgroup& n) {
  const auto gens = hol.generators();
  return normalized_by(hol, n, gens);
}

bool is_normalized_by_rho(const Group& g, std::span<const Permutation> gamma) {
  // rho(s)^-1 (a, y) rho(s) = (a, (s^-1)^a y s), which lies in N iff
  // gamma of its translation is a again
  for (Elem s : generating_sequence(g)) {
    const Elem si = g.inv(s);
    for (Elem y = 0; y < g.order(); ++y) {
      const Permutation& a = gamma[y];
      const Elem t = g.mul(g.mul(a[si], y), s);
      if (gamma[t] != a) return false;
    }
  }
  return true;
}

std::size_t multiple_holomorph_direct(const HolGroup& hol) {
  const std::size_t n = hol.group().order();
  if (n > kDirectDegreeBound) {
    throw Rejected("direct T(G) computation is limited to |G| <= " + std::to_string(kDirectDegreeBound));
  }
  auto key = [n](const std::vector<Elem>& img) {
    std::uint64_t k = 0;
    for (Elem x : img) k = k * n + x;
    return k;
  };
  std::unordered_set<std::uint64_t> hol_set;
  for (std::size_t i = 0; i < hol.order(); ++i) hol_set.insert(key(hol.as_permutation(hol.element(i)).images()));
  ensure(hol_set.size() == hol.order(), "holomorph action is not faithful");

  std::vector<std::vector<Elem>> gens;
  for (const HolElement& h : hol.generators()) gens.push_back(hol.as_permutation(h).images());

  std::vector<Elem> tau(n), tau_inv(n), conj(n);
  for (Elem x = 0; x < n; ++x) tau[x] = x;
  std::size_t normalizer = 0;
  do {
    for (Elem x = 0; x < n; ++x) tau_inv[tau[x]] = x;
    bool ok = true;
    for (const auto& p : gens) {
      // x^(tau^-1 p tau)
      for (Elem x = 0; x < n; ++x) conj[x] = tau[p[tau_inv[x]]];
      if (!hol_set.count(key(conj))) {
        ok = false;
        break;
      }
    }
    normalizer += ok;
  } while (std::next_permutation(tau.begin(), tau.end()));
  ensure(normalizer % hol.order() == 0, "Hol(G) order does not divide its normalizer order");
  return normalizer / hol.order();
}

std::vector<std::size_t> miller_set(const HolGroup& hol, std::span<const RegularSubgroup> regs) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < regs.size(); ++i) {
    if (!is_normal_in_hol(hol, regs[i])) continue;
    if (is_isomorphic(regular_subgroup_as_group(hol, regs[i]), hol.group())) out.push_back(i);
  }
  return out;
}

}  // namespace holoskew
