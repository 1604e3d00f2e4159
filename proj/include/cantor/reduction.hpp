#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cantor/free_word.hpp"
#include "cantor/topology.hpp"
#include "cantor/wreath.hpp"

namespace cantor {

/// Exponent sums of the A and B letters mod 2.
Klein mu_reduce(const FreeWord& w, int a_index, int b_index);
Klein mu_reduce(const RecursionTable& table, const FreeWord& w);

/// Recursion of a table pushed down to Z2 + Z2, with labels in the order-8 quotient.
struct QuotientRecursion {
  int degree = 0;
  std::array<FreeWord, 4> representatives;  // e, A, B, A B, indexed by Klein bits
  std::array<Permutation, 4> perms;
  std::array<std::vector<Klein>, 4> slots;
  /// Cosets of the A- and B-projected depth-1 images in the order-8 quotient.
  std::array<std::array<int, 2>, 4> labels{};
  std::vector<std::array<int, 2>> generator_labels;
  std::vector<std::string> generators;

  WreathElement<Klein> element(Klein x) const { return {slots[x.bits], perms[x.bits]}; }
  /// zeta index (0 = e, 1..3) of a label component, -1 outside R.
  int zeta_of(Klein x, int component) const;
};

QuotientRecursion reduce_recursion(const RecursionTable& table);

/// Recursion on Z2 + Z2 given directly, e.g. for hand-made control cases.
QuotientRecursion make_quotient_recursion(int degree, const std::array<Permutation, 4>& perms,
                                          const std::array<std::vector<Klein>, 4>& slots);

enum class InjectivityVerdict { Pass, Fail, Unknown };
std::string to_string(InjectivityVerdict v);

struct FixedPair {
  Klein g;
  std::string word;  // 1-based digits
  std::string image;  // where the permutation at that depth sends the word
};

struct NucleusResult {
  std::vector<std::vector<Klein>> steps;  // S_0, S_1, ...
  std::vector<Klein> limit;
  bool monotone = true;
  InjectivityVerdict verdict = InjectivityVerdict::Unknown;
  std::optional<FixedPair> witness;
};

NucleusResult nucleus_test(const QuotientRecursion& q);

struct FreeNucleusResult {
  std::vector<std::vector<FreeWord>> steps;
  InjectivityVerdict verdict = InjectivityVerdict::Unknown;
};

/// Sections of the generator set iterated at the free-group level.
FreeNucleusResult free_nucleus(const RecursionTable& table, int max_steps = 64);

struct CaseTable {
  int number = 0;  // 1..4
  // zeta indices of (1,0), (0,1), (1,1) in each component
  std::array<std::array<int, 2>, 3> zetas{};
  std::array<int, 2> conjugator{};  // cosets in the order-8 quotient
};

std::vector<CaseTable> four_cases(const QuotientRecursion& q);

struct Claim2Result {
  Klein witness;
  std::vector<Klein> persistent;  // greatest self-sustaining set
  std::vector<Klein> cycle;
};

Claim2Result claim2_search(const CaseTable& c);

struct Claim3Result {
  int max_length = 0;
  long long words = 0;
  long long identity_words = 0;
  long long violations = 0;
  std::string first_violation;
};

/// Reduced words up to max_length whose table permutation is the identity
/// must have mu-image (0,0) or (1,1).
Claim3Result claim3_check(const RecursionTable& table, int max_length = 6);

/// Empty when the table has the quartic shape; otherwise a description of the first mismatch.
std::string quartic_shape_mismatch(const RecursionTable& table);

}  // namespace cantor
