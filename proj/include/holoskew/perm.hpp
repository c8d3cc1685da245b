#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "holoskew/group.hpp"

namespace holoskew {

/// A bijection of {0..n-1}, stored as its image array. Permutations act on
/// the right: x^(pq) = (x^p)^q, so compose(p, q) applies p first.
class Permutation {
 public:
  Permutation() = default;
  /// Throws Rejected unless `images` is a bijection.
  explicit Permutation(std::vector<Elem> images);
  static Permutation identity(std::size_t n);

  std::size_t degree() const { return img_.size(); }
  Elem operator[](Elem x) const { return img_[x]; }
  const std::vector<Elem>& images() const { return img_; }
  bool is_identity() const;
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<Elem> images, Unchecked) : img_(std::move(images)) {}
  friend Permutation compose(const Permutation& p, const Permutation& q);
  std::vector<Elem> img_;
};

/// p then q.
Permutation compose(const Permutation& p, const Permutation& q);
inline Elem apply(const Permutation& p, Elem x) { return p[x]; }
/// q^-1 p q
Permutation conjugate(const Permutation& p, const Permutation& q);

/// x -> x g
Permutation rho(const Group& g, Elem y);
/// x -> y^-1 x, so that lambda is a homomorphism under left-to-right composition
Permutation lambda_rep(const Group& g, Elem y);
/// x -> x^-1
Permutation inv_map(const Group& g);
/// x -> y^-1 x y
Permutation inner(const Group& g, Elem y);

bool is_endomorphism(const Group& g, std::span<const Elem> map);
bool is_automorphism(const Group& g, const Permutation& p);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace holoskew
