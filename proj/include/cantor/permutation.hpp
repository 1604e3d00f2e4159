#pragma once

#include <string>
#include <vector>

namespace cantor {

/// Permutation of {0..n-1}. Products follow the opposite-group rule:
/// (a * b)(i) = b(a(i)), i.e. apply a first.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int n);
  explicit Permutation(std::vector<int> image);

  /// Builds from 1-based disjoint cycles, e.g. {{1, 4}, {2, 3}}.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& image() const { return image_; }

  Permutation inverse() const;
  bool is_identity() const;
  bool is_bijection() const;
  /// Disjoint cycles (0-based), fixed points omitted.
  std::vector<std::vector<int>> cycles() const;
  /// Orbits including fixed points, each starting at its smallest element.
  std::vector<std::vector<int>> orbits() const;
  /// "(1 4)(2 3)" in 1-based notation, "id" for the identity.
  std::string to_string() const;
  /// 1-based image list, the serialized form.
  std::vector<int> one_based() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation& a, const Permutation& b) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) = default;

 private:
  std::vector<int> image_;
};

}  // namespace cantor
