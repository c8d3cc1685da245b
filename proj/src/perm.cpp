#include "holoskew/perm.hpp"

#include <numeric>

#include "holoskew/error.hpp"

namespace holoskew {

Permutation::Permutation(std::vector<Elem> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (Elem x : img_) {
    if (x >= img_.size() || seen[x]++) throw Rejected("image array is not a bijection");
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Elem> img(n);
  std::iota(img.begin(), img.end(), Elem{0});
  return Permutation(std::move(img), Unchecked{});
}

bool Permutation::is_identity() const {
  for (Elem x = 0; x < img_.size(); ++x) {
    if (img_[x] != x) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Elem> out(img_.size());
  for (Elem x = 0; x < img_.size(); ++x) out[img_[x]] = x;
  return Permutation(std::move(out), Unchecked{});
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw Rejected("cannot compose permutations of different degree");
  std::vector<Elem> out(p.degree());
  for (Elem x = 0; x < out.size(); ++x) out[x] = q[p[x]];
  return Permutation(std::move(out), Permutation::Unchecked{});
}

Permutation conjugate(const Permutation& p, const Permutation& q) {
  return compose(compose(q.inverse(), p), q);
}

Permutation rho(const Group& g, Elem y) {
  std::vector<Elem> img(g.order());
  for (Elem x = 0; x < g.order(); ++x) img[x] = g.mul(x, y);
  return Permutation(std::move(img));
}

Permutation lambda_rep(const Group& g, Elem y) {
  std::vector<Elem> img(g.order());
  const Elem yi = g.inv(y);
  for (Elem x = 0; x < g.order(); ++x) img[x] = g.mul(yi, x);
  return Permutation(std::move(img));
}

Permutation inv_map(const Group& g) {
  std::vector<Elem> img(g.order());
  for (Elem x = 0; x < g.order(); ++x) img[x] = g.inv(x);
  return Permutation(std::move(img));
}

Permutation inner(const Group& g, Elem y) {
  std::vector<Elem> img(g.order());
  for (Elem x = 0; x < g.order(); ++x) img[x] = g.conj(x, y);
  return Permutation(std::move(img));
}

bool is_endomorphism(const Group& g, std::span<const Elem> map) {
  if (map.size() != g.order()) return false;
  for (Elem x = 0; x < g.order(); ++x) {
    if (map[x] >= g.order()) return false;
    for (Elem y = 0; y < g.order(); ++y) {
      if (map[g.mul(x, y)] != g.mul(map[x], map[y])) return false;
    }
  }
  return true;
}

bool is_automorphism(const Group& g, const Permutation& p) {
  return p.degree() == g.order() && is_endomorphism(g, p.images());
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Elem x : p.images()) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace holoskew
