#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace holoskew {

/// Elements of a finite group are the indices 0..n-1 of its Cayley table.
using Elem = std::size_t;

/// A finite group given by its Cayley table. Index 0 is the identity.
///
/// The table is validated on construction (identity, Latin square,
/// associativity) and shared between copies, so a Group is cheap to pass
/// by value and safe to read concurrently.
class Group {
 public:
  /// Validates and wraps a row-major n*n table. Throws Rejected with a
  /// witness when an invariant fails.
  static Group from_table(std::vector<Elem> table, std::string name = {});

  std::size_t order() const { return d_->n; }
  const std::string& name() const { return d_->name; }

  Elem mul(Elem a, Elem b) const { return d_->table[a * d_->n + b]; }
  Elem inv(Elem a) const { return d_->inverse[a]; }
  /// y^-1 x y
  Elem conj(Elem x, Elem y) const { return mul(mul(inv(y), x), y); }
  /// x^-1 y^-1 x y
  Elem comm(Elem x, Elem y) const { return mul(mul(inv(x), inv(y)), mul(x, y)); }
  Elem pow(Elem x, long long k) const;
  std::size_t element_order(Elem x) const { return d_->orders[x]; }

  std::span<const Elem> table() const { return d_->table; }
  bool is_abelian() const;

  Group renamed(std::string name) const;

  friend bool operator==(const Group& a, const Group& b) {
    return a.d_ == b.d_ || a.d_->table == b.d_->table;
  }

 private:
  struct Data {
    std::size_t n = 0;
    std::vector<Elem> table;
    std::vector<Elem> inverse;
    std::vector<std::size_t> orders;
    std::string name;
  };
  explicit Group(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

/// A subgroup, stored as the sorted list of its members.
class Subgroup {
 public:
  Subgroup() = default;
  /// Checks closure; throws Rejected if `members` is not a subgroup of g.
  Subgroup(const Group& g, std::vector<Elem> members);

  std::size_t size() const { return members_.size(); }
  const std::vector<Elem>& members() const { return members_; }
  bool contains(Elem x) const { return x < mask_.size() && mask_[x]; }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }
  friend auto operator<=>(const Subgroup& a, const Subgroup& b) { return a.members_ <=> b.members_; }

 private:
  std::vector<Elem> members_;
  std::vector<bool> mask_;
};

struct Quotient {
  Group group;
  /// projection[x] = coset of x, as an element of `group`
  std::vector<Elem> projection;
  /// smallest member of each coset
  std::vector<Elem> representatives;
};

Subgroup subgroup_closure(const Group& g, std::span<const Elem> seed);
Subgroup whole_group(const Group& g);
Subgroup trivial_subgroup(const Group& g);

Subgroup center(const Group& g);
Subgroup derived_subgroup(const Group& g);
Subgroup frattini(const Group& g);
Subgroup intersection(const Group& g, const Subgroup& a, const Subgroup& b);

bool is_normal(const Group& g, const Subgroup& s);
/// True when every element of g is h*k with h in H, k in K.
bool factorizes(const Group& g, const Subgroup& h, const Subgroup& k);
Quotient quotient(const Group& g, const Subgroup& n);

/// All subgroups, sorted. Exponential in the worst case; meant for the
/// small groups this library targets.
std::vector<Subgroup> all_subgroups(const Group& g);
std::vector<Subgroup> maximal_subgroups(const Group& g);

/// A greedy generating sequence; each entry enlarges the closure of the
/// previous ones.
std::vector<Elem> generating_sequence(const Group& g);

/// Multiset of element orders as order -> count.
std::map<std::size_t, std::size_t> order_statistics(const Group& g);
std::size_t exponent(const Group& g);
/// Nilpotency class <= 2, i.e. G' <= Z(G).
bool has_class_at_most_two(const Group& g);

/// An explicit isomorphism a -> b (images indexed by elements of a), or
/// nothing. Deterministic.
std::optional<std::vector<Elem>> is_isomorphic(const Group& a, const Group& b);

/// Every isomorphism a -> b, in lexicographic order of image arrays.
std::vector<std::vector<Elem>> all_isomorphisms(const Group& a, const Group& b);

/// Invariant factors of an abelian group, ascending (e.g. {3, 9}).
std::vector<std::size_t> abelian_invariants(const Group& g);

}  // namespace holoskew
