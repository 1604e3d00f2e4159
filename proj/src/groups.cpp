#include "cantor/groups.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <numeric>

#include "cantor/error.hpp"

namespace cantor {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table, std::vector<std::string> names)
    : table_(std::move(table)), names_(std::move(names)) {
  const int n = order();
  if (static_cast<int>(names_.size()) != n) throw Error(ErrorKind::Usage, "group names and table differ in size");
  identity_ = -1;
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw Error(ErrorKind::Usage, "table has no identity");
  inverse_.assign(static_cast<std::size_t>(n), -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (mul(x, y) == identity_) inverse_[static_cast<std::size_t>(x)] = y;
  if (std::find(inverse_.begin(), inverse_.end(), -1) != inverse_.end()) throw Error(ErrorKind::Usage, "element without inverse");
  if (n <= 128) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (mul(mul(x, y), z) != mul(x, mul(y, z))) throw Error(ErrorKind::Usage, "table is not associative");
  }
}

int FiniteGroup::element_order(int x) const {
  int k = 1;
  for (int y = x; y != identity_; y = mul(y, x)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (int x = 0; x < order(); ++x)
    for (int y = 0; y < order(); ++y)
      if (mul(x, y) != mul(y, x)) return false;
  return true;
}

int FiniteGroup::exponent() const {
  int e = 1;
  for (int x = 0; x < order(); ++x) e = std::lcm(e, element_order(x));
  return e;
}

bool is_subgroup(const FiniteGroup& g, const Subset& h) {
  if (!std::binary_search(h.begin(), h.end(), g.identity())) return false;
  for (int x : h)
    for (int y : h)
      if (!std::binary_search(h.begin(), h.end(), g.mul(x, g.inverse(y)))) return false;
  return true;
}

bool is_normal(const FiniteGroup& g, const Subset& h) {
  if (!is_subgroup(g, h)) throw Error(ErrorKind::NotSubgroup, "subset is not closed");
  for (int x = 0; x < g.order(); ++x)
    for (int y : h)
      if (!std::binary_search(h.begin(), h.end(), g.conjugate(x, y))) return false;
  return true;
}

Restriction restrict_to(const FiniteGroup& g, const Subset& h) {
  if (!is_subgroup(g, h)) throw Error(ErrorKind::NotSubgroup, "subset is not closed");
  std::map<int, int> code;
  for (std::size_t i = 0; i < h.size(); ++i) code[h[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> table(h.size(), std::vector<int>(h.size()));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < h.size(); ++i) {
    names.push_back(g.name(h[i]));
    for (std::size_t j = 0; j < h.size(); ++j) table[i][j] = code.at(g.mul(h[i], h[j]));
  }
  return {FiniteGroup(std::move(table), std::move(names)), h};
}

Quotient quotient(const FiniteGroup& g, const Subset& n) {
  if (!is_normal(g, n)) throw Error(ErrorKind::NotNormal, "subgroup is not normal");
  std::vector<int> rep_of(static_cast<std::size_t>(g.order()), -1);
  std::vector<int> reps;
  for (int x = 0; x < g.order(); ++x) {
    if (rep_of[static_cast<std::size_t>(x)] >= 0) continue;
    for (int y : n) rep_of[static_cast<std::size_t>(g.mul(x, y))] = static_cast<int>(reps.size());
    reps.push_back(x);
  }
  std::vector<std::vector<int>> table(reps.size(), std::vector<int>(reps.size()));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    names.push_back(g.name(reps[i]) + "N");
    for (std::size_t j = 0; j < reps.size(); ++j) table[i][j] = rep_of[static_cast<std::size_t>(g.mul(reps[i], reps[j]))];
  }
  return {FiniteGroup(std::move(table), std::move(names)), std::move(rep_of)};
}

std::optional<int> conjugacy_test(const FiniteGroup& g, int x, int y) {
  for (int h = 0; h < g.order(); ++h)
    if (g.conjugate(h, x) == y) return h;
  return std::nullopt;
}

Subset conjugacy_class(const FiniteGroup& g, int x) {
  Subset out;
  for (int h = 0; h < g.order(); ++h) out.push_back(g.conjugate(h, x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

const std::vector<Permutation>& block_preserving_perms() {
  static const std::vector<Permutation> perms = {
      Permutation(4),
      Permutation::from_cycles(4, {{1, 4}}),
      Permutation::from_cycles(4, {{2, 3}}),
      Permutation::from_cycles(4, {{1, 2}, {3, 4}}),
      Permutation::from_cycles(4, {{1, 3}, {2, 4}}),
      Permutation::from_cycles(4, {{1, 4}, {2, 3}}),
      Permutation::from_cycles(4, {{1, 2, 4, 3}}),
      Permutation::from_cycles(4, {{1, 3, 4, 2}}),
  };
  return perms;
}

int t_index_of(const Permutation& p) {
  const auto& t = block_preserving_perms();
  const auto it = std::find(t.begin(), t.end(), p);
  return it == t.end() ? -1 : static_cast<int>(it - t.begin());
}

namespace {

int t_index(const Permutation& p) {
  const int i = t_index_of(p);
  if (i < 0) throw Error(ErrorKind::NotSubgroup, "permutation outside T: " + p.to_string());
  return i;
}

int act(int t, int q) {
  const auto& p = block_preserving_perms()[static_cast<std::size_t>(t)];
  int out = 0;
  for (int i = 0; i < 4; ++i) out |= ((q >> p(i)) & 1) << i;
  return out;
}

}  // namespace

FiniteGroup build_T_group() {
  const auto& t = block_preserving_perms();
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < 8; ++i) {
    names.push_back(t[i].to_string());
    for (std::size_t j = 0; j < 8; ++j) table[i][j] = t_index(t[i] * t[j]);
  }
  return FiniteGroup(std::move(table), std::move(names));
}

int semidirect_code(int q, int t) { return q + 16 * t; }
int semidirect_q(int code) { return code % 16; }
int semidirect_t(int code) { return code / 16; }

std::string semidirect_name(int code) {
  const int q = semidirect_q(code);
  std::string out = "((";
  for (int i = 0; i < 4; ++i) out += std::to_string((q >> i) & 1) + (i < 3 ? "," : "");
  return out + ")," + block_preserving_perms()[static_cast<std::size_t>(semidirect_t(code))].to_string() + ")";
}

int bits_from_tuple(const std::vector<int>& tuple) {
  int q = 0;
  for (std::size_t i = 0; i < tuple.size(); ++i) q |= (tuple[i] & 1) << i;
  return q;
}

FiniteGroup build_Z2_4_semidirect_T() {
  const FiniteGroup t = build_T_group();
  std::vector<std::vector<int>> table(128, std::vector<int>(128));
  std::vector<std::string> names;
  for (int x = 0; x < 128; ++x) {
    names.push_back(semidirect_name(x));
    for (int y = 0; y < 128; ++y) {
      const int q = semidirect_q(x) ^ act(semidirect_t(x), semidirect_q(y));
      table[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = semidirect_code(q, t.mul(semidirect_t(x), semidirect_t(y)));
    }
  }
  return FiniteGroup(std::move(table), std::move(names));
}

std::vector<int> q_even() {
  std::vector<int> out;
  for (int q = 0; q < 16; ++q)
    if (__builtin_popcount(static_cast<unsigned>(q)) % 2 == 0) out.push_back(q);
  return out;
}

std::vector<int> q_block_constant() {
  std::vector<int> out;
  for (int q = 0; q < 16; ++q)
    if ((q & 1) == ((q >> 3) & 1) && ((q >> 1) & 1) == ((q >> 2) & 1)) out.push_back(q);
  return out;
}

std::vector<int> t_all() { return {0, 1, 2, 3, 4, 5, 6, 7}; }
std::vector<int> t_block_fixing() { return {0, 1, 2, 5}; }

Subset semidirect_subset(const std::vector<int>& qs, const std::vector<int>& ts) {
  Subset out;
  for (int t : ts)
    for (int q : qs) out.push_back(semidirect_code(q, t));
  std::sort(out.begin(), out.end());
  return out;
}

int DihedralQuotient::zeta_index(int coset) const {
  for (int k = 0; k < 4; ++k)
    if (zeta[k] == coset) return k;
  return -1;
}

namespace {

Subset difference(const Subset& a, const Subset& b) {
  Subset out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

int single_coset(const Quotient& q, const Subset& elements) {
  const int c = q.projection[static_cast<std::size_t>(elements.front())];
  for (int x : elements)
    if (q.projection[static_cast<std::size_t>(x)] != c) throw Error(ErrorKind::InconsistentHomomorphism, "subset spans several cosets");
  return c;
}

}  // namespace

const DihedralQuotient& dihedral_quotient() {
  static const DihedralQuotient dq = [] {
    DihedralQuotient out;
    out.full = build_Z2_4_semidirect_T();
    const Subset sl = semidirect_subset(q_block_constant(), t_block_fixing());
    out.q = quotient(out.full, sl);
    out.zeta[0] = out.q.group.identity();
    out.zeta[1] = single_coset(out.q, difference(semidirect_subset(q_block_constant(), t_all()), sl));
    out.zeta[2] = single_coset(out.q, difference(semidirect_subset(q_even(), t_block_fixing()), sl));
    out.zeta[3] = out.q.group.mul(out.zeta[1], out.zeta[2]);
    return out;
  }();
  return dq;
}

bool Claim1Report::all_pass() const {
  return item1 && sl_normal && ql_normal && qt_normal && !st_normal && r_order == 4 && r_klein && quotient_order == 8 &&
         !quotient_abelian && has_order4 && zeta1_conj_zeta3 && zeta2_class_size == 1;
}

Claim1Report verify_claim1() {
  Claim1Report r;
  const auto& dq = dihedral_quotient();
  const FiniteGroup& g = dq.full;
  const auto s = q_block_constant();
  const auto qe = q_even();
  const auto l = t_block_fixing();
  r.item1 = true;
  for (int q = 0; q < 16 && r.item1; ++q) {
    for (int t = 0; t < 8; ++t) {
      const bool lhs = std::binary_search(s.begin(), s.end(), q ^ act(t, q));
      const bool rhs = std::binary_search(l.begin(), l.end(), t) || std::binary_search(qe.begin(), qe.end(), q);
      if (lhs != rhs) {
        r.item1 = false;
        r.item1_counterexample = semidirect_name(semidirect_code(q, t));
        break;
      }
    }
  }
  const Subset sl = semidirect_subset(s, l);
  const Subset ql = semidirect_subset(qe, l);
  const Subset qt = semidirect_subset(qe, t_all());
  const Subset st = semidirect_subset(s, t_all());
  r.sl_normal = is_normal(g, sl);
  r.ql_normal = is_normal(g, ql);
  r.qt_normal = is_normal(g, qt);
  r.st_normal = is_normal(g, st);

  const Restriction qt_group = restrict_to(g, qt);
  Subset sl_inside;
  for (std::size_t i = 0; i < qt.size(); ++i)
    if (std::binary_search(sl.begin(), sl.end(), qt[i])) sl_inside.push_back(static_cast<int>(i));
  const Quotient rq = quotient(qt_group.group, sl_inside);
  r.r_order = rq.group.order();
  r.r_klein = r.r_order == 4;
  for (int x = 0; x < rq.group.order(); ++x)
    if (x != rq.group.identity() && rq.group.element_order(x) != 2) r.r_klein = false;

  const FiniteGroup& d = dq.q.group;
  r.quotient_order = d.order();
  r.quotient_abelian = d.is_abelian();
  r.quotient_exponent = d.exponent();
  for (int x = 0; x < d.order(); ++x)
    if (d.element_order(x) == 4) r.has_order4 = true;
  r.zeta1 = dq.zeta[1];
  r.zeta2 = dq.zeta[2];
  r.zeta3 = dq.zeta[3];
  if (const auto h = conjugacy_test(d, r.zeta1, r.zeta3)) {
    r.zeta1_conj_zeta3 = true;
    for (int x = 0; x < g.order(); ++x) {
      if (dq.q.projection[static_cast<std::size_t>(x)] == *h) {
        r.witness = x;
        break;
      }
    }
  }
  r.zeta2_class_size = static_cast<int>(conjugacy_class(d, r.zeta2).size());
  return r;
}

}  // namespace cantor
