#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cantor/permutation.hpp"

namespace cantor {

/// Finite group given by its multiplication table on codes 0..n-1.
class FiniteGroup {
 public:
  FiniteGroup() = default;
  FiniteGroup(std::vector<std::vector<int>> table, std::vector<std::string> names);

  int order() const { return static_cast<int>(table_.size()); }
  int identity() const { return identity_; }
  int mul(int x, int y) const { return table_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]; }
  int inverse(int x) const { return inverse_[static_cast<std::size_t>(x)]; }
  int conjugate(int g, int x) const { return mul(mul(g, x), inverse(g)); }
  int element_order(int x) const;
  bool is_abelian() const;
  int exponent() const;
  const std::string& name(int x) const { return names_[static_cast<std::size_t>(x)]; }

 private:
  std::vector<std::vector<int>> table_;
  std::vector<std::string> names_;
  std::vector<int> inverse_;
  int identity_ = 0;
};

/// Sorted list of element codes.
using Subset = std::vector<int>;

bool is_subgroup(const FiniteGroup& g, const Subset& h);
/// Throws NotSubgroup when h is not closed.
bool is_normal(const FiniteGroup& g, const Subset& h);

struct Restriction {
  FiniteGroup group;
  std::vector<int> embedding;  // code in the subgroup -> code in the parent
};
Restriction restrict_to(const FiniteGroup& g, const Subset& h);

struct Quotient {
  FiniteGroup group;
  std::vector<int> projection;  // parent code -> coset code
};
/// Cosets numbered by smallest representative. Throws NotNormal / NotSubgroup.
Quotient quotient(const FiniteGroup& g, const Subset& n);

/// Some h with h x h^-1 = y.
std::optional<int> conjugacy_test(const FiniteGroup& g, int x, int y);
Subset conjugacy_class(const FiniteGroup& g, int x);

/// The eight permutations preserving the partition {{1,4},{2,3}}, in the fixed order
/// id, (1 4), (2 3), (1 2)(3 4), (1 3)(2 4), (1 4)(2 3), (1 2 4 3), (1 3 4 2).
const std::vector<Permutation>& block_preserving_perms();
FiniteGroup build_T_group();
/// Position in the fixed list above, or -1.
int t_index_of(const Permutation& p);

/// Z2^4 x| T with (q, t)(q', t') = (q + t.q', t t') and (t.q)(i) = q(t(i)).
/// Code = q + 16 * (index of t), where bit i of q is the value at letter i+1.
FiniteGroup build_Z2_4_semidirect_T();
int semidirect_code(int q, int t_index);
int semidirect_q(int code);
int semidirect_t(int code);
/// "((1,1,0,0),(1 2)(3 4))".
std::string semidirect_name(int code);
int bits_from_tuple(const std::vector<int>& tuple);

/// Subsets of Z2^4 and of T.
std::vector<int> q_even();          // coordinate sum zero
std::vector<int> q_block_constant();  // q1 = q4, q2 = q3
std::vector<int> t_all();
std::vector<int> t_block_fixing();  // id, (1 4), (2 3), (1 4)(2 3)
Subset semidirect_subset(const std::vector<int>& qs, const std::vector<int>& ts);

struct Claim1Report {
  bool item1 = false;
  std::string item1_counterexample;
  bool sl_normal = false, ql_normal = false, qt_normal = false, st_normal = true;
  int r_order = 0;
  bool r_klein = false;
  int quotient_order = 0;
  bool quotient_abelian = true;
  int quotient_exponent = 0;
  bool has_order4 = false;
  // codes in the order-8 quotient
  int zeta1 = -1, zeta2 = -1, zeta3 = -1;
  bool zeta1_conj_zeta3 = false;
  int witness = -1;  // representative in Z2^4 x| T conjugating zeta1 to zeta3
  int zeta2_class_size = 0;
  bool all_pass() const;
};

Claim1Report verify_claim1();

/// The order-8 quotient by S x| L together with the projection and the zeta codes.
struct DihedralQuotient {
  FiniteGroup full;
  Quotient q;
  int zeta[4] = {0, -1, -1, -1};  // zeta[0] is the identity coset
  /// 0..3 if the coset is e or one of the zetas, -1 otherwise.
  int zeta_index(int coset) const;
};
const DihedralQuotient& dihedral_quotient();

}  // namespace cantor
