#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cantor/free_word.hpp"
#include "cantor/permutation.hpp"
#include "cantor/topology.hpp"

namespace cantor {

/// Element (slots, perm) of G^X x| S(X)^op. G must provide a default
/// identity, operator* and inverse().
template <class G>
struct WreathElement {
  std::vector<G> slots;
  Permutation perm;

  static WreathElement identity(int n) { return {std::vector<G>(static_cast<std::size_t>(n)), Permutation(n)}; }
  int size() const { return perm.size(); }
  friend bool operator==(const WreathElement&, const WreathElement&) = default;
};

/// (a, t)(b, u) = (x -> a(x) b(t(x)), t u).
template <class G>
WreathElement<G> wreath_product(const WreathElement<G>& x, const WreathElement<G>& y) {
  WreathElement<G> out;
  out.perm = x.perm * y.perm;
  out.slots.resize(x.slots.size());
  for (int i = 0; i < x.size(); ++i) {
    out.slots[static_cast<std::size_t>(i)] = x.slots[static_cast<std::size_t>(i)] * y.slots[static_cast<std::size_t>(x.perm(i))];
  }
  return out;
}

template <class G>
WreathElement<G> wreath_inverse(const WreathElement<G>& x) {
  WreathElement<G> out;
  out.perm = x.perm.inverse();
  out.slots.resize(x.slots.size());
  for (int y = 0; y < x.size(); ++y) {
    out.slots[static_cast<std::size_t>(y)] = x.slots[static_cast<std::size_t>(out.perm(y))].inverse();
  }
  return out;
}

/// Element of Z2 + Z2, stored as bits (a, b) = a + 2b.
struct Klein {
  std::uint8_t bits = 0;

  static Klein of(int a, int b) { return {static_cast<std::uint8_t>((a & 1) | ((b & 1) << 1))}; }
  int a() const { return bits & 1; }
  int b() const { return (bits >> 1) & 1; }
  Klein inverse() const { return *this; }
  bool is_identity() const { return bits == 0; }
  std::string to_string() const;

  friend Klein operator*(Klein x, Klein y) { return {static_cast<std::uint8_t>(x.bits ^ y.bits)}; }
  friend bool operator==(Klein, Klein) = default;
  friend auto operator<=>(Klein, Klein) = default;
};

/// Depth-1 image of an arbitrary word under the table's recursion.
WreathElement<FreeWord> table_element(const RecursionTable& table, const FreeWord& g);

/// Level-k element; slot and permutation index i1 i2 .. ik as i1 * d^(k-1) + index(i2 .. ik).
WreathElement<FreeWord> iterate_recursion(const RecursionTable& table, const FreeWord& g, int depth);

/// 1-based digit string of a level-k index, e.g. "14".
std::string word_label(int index, int degree, int depth);

/// Exact comparison of the extracted depth-1 elements of g g' with the product of
/// the elements of g and g', for all generator pairs; empty when consistent.
std::string check_depth1_homomorphism(const RecursionTable& table,
                                      const std::vector<std::vector<WreathElement<FreeWord>>>& pair_elements);

}  // namespace cantor
