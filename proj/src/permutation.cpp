#include "cantor/permutation.hpp"

#include <numeric>

#include "cantor/error.hpp"

namespace cantor {

Permutation::Permutation(int n) : image_(static_cast<std::size_t>(n)) {
  std::iota(image_.begin(), image_.end(), 0);
}

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  if (!is_bijection()) throw Error(ErrorKind::Usage, "permutation image is not a bijection");
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  for (const auto& c : cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      img[static_cast<std::size_t>(c[k] - 1)] = c[(k + 1) % c.size()] - 1;
    }
  }
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) inv[static_cast<std::size_t>(image_[i])] = static_cast<int>(i);
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != static_cast<int>(i)) return false;
  return true;
}

bool Permutation::is_bijection() const {
  std::vector<bool> seen(image_.size(), false);
  for (int v : image_) {
    if (v < 0 || v >= size() || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

std::vector<std::vector<int>> Permutation::orbits() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(image_.size(), false);
  for (int i = 0; i < size(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    std::vector<int> orbit;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = (*this)(j)) {
      seen[static_cast<std::size_t>(j)] = true;
      orbit.push_back(j);
    }
    out.push_back(std::move(orbit));
  }
  return out;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  for (auto& o : orbits())
    if (o.size() > 1) out.push_back(std::move(o));
  return out;
}

std::string Permutation::to_string() const {
  std::string s;
  for (const auto& c : cycles()) {
    s += "(";
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k > 0) s += " ";
      s += std::to_string(c[k] + 1);
    }
    s += ")";
  }
  return s.empty() ? "id" : s;
}

std::vector<int> Permutation::one_based() const {
  std::vector<int> out;
  out.reserve(image_.size());
  for (int v : image_) out.push_back(v + 1);
  return out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::Usage, "permutation sizes differ");
  std::vector<int> img(a.image_.size());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = b(a.image_[i]);
  return Permutation(std::move(img));
}

}  // namespace cantor
