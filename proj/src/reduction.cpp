#include "cantor/reduction.hpp"

#include <algorithm>
#include <set>

#include "cantor/error.hpp"
#include "cantor/groups.hpp"

namespace cantor {

Klein mu_reduce(const FreeWord& w, int a_index, int b_index) {
  const int a = a_index >= 0 ? w.exponent_sum(a_index) : 0;
  const int b = b_index >= 0 ? w.exponent_sum(b_index) : 0;
  return Klein::of(((a % 2) + 2) % 2, ((b % 2) + 2) % 2);
}

Klein mu_reduce(const RecursionTable& table, const FreeWord& w) {
  return mu_reduce(w, table.index_of("A"), table.index_of("B"));
}

int QuotientRecursion::zeta_of(Klein x, int component) const {
  const int c = labels[x.bits][static_cast<std::size_t>(component)];
  return c < 0 ? -1 : dihedral_quotient().zeta_index(c);
}

std::string to_string(InjectivityVerdict v) {
  switch (v) {
    case InjectivityVerdict::Pass: return "pass";
    case InjectivityVerdict::Fail: return "fail";
    case InjectivityVerdict::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

// Cosets of the A- and B-components, or -1 when the permutation leaves T.
std::array<int, 2> label_of(const WreathElement<Klein>& w) {
  if (w.size() != 4) return {-1, -1};
  const int t = t_index_of(w.perm);
  if (t < 0) return {-1, -1};
  int qa = 0, qb = 0;
  for (int i = 0; i < 4; ++i) {
    qa |= w.slots[static_cast<std::size_t>(i)].a() << i;
    qb |= w.slots[static_cast<std::size_t>(i)].b() << i;
  }
  const auto& proj = dihedral_quotient().q.projection;
  return {proj[static_cast<std::size_t>(semidirect_code(qa, t))], proj[static_cast<std::size_t>(semidirect_code(qb, t))]};
}

void check_domain(const QuotientRecursion& q) {
  for (std::uint8_t x = 0; x < 4; ++x) {
    for (std::uint8_t y = 0; y < 4; ++y) {
      const auto prod = wreath_product(q.element(Klein{x}), q.element(Klein{y}));
      if (!(prod == q.element(Klein{x} * Klein{y}))) {
        throw Error(ErrorKind::InconsistentHomomorphism,
                    "depth-1 product of " + Klein{x}.to_string() + " and " + Klein{y}.to_string() + " disagrees");
      }
    }
  }
}

}  // namespace

QuotientRecursion make_quotient_recursion(int degree, const std::array<Permutation, 4>& perms,
                                          const std::array<std::vector<Klein>, 4>& slots) {
  QuotientRecursion q;
  q.degree = degree;
  q.perms = perms;
  q.slots = slots;
  for (std::size_t x = 0; x < 4; ++x) {
    if (static_cast<int>(slots[x].size()) != degree || perms[x].size() != degree) {
      throw Error(ErrorKind::Usage, "slot count differs from the degree");
    }
    q.labels[x] = label_of(q.element(Klein{static_cast<std::uint8_t>(x)}));
  }
  check_domain(q);
  return q;
}

QuotientRecursion reduce_recursion(const RecursionTable& table) {
  const int a = table.index_of("A");
  const int b = table.index_of("B");
  if (a < 0 || b < 0) throw Error(ErrorKind::Usage, "reduction needs generators A and B");
  for (const auto& name : table.generators) {
    if (name != "A" && name != "B" && name.rfind('C', 0) != 0) throw Error(ErrorKind::Usage, "unexpected generator " + name);
  }
  const auto push = [&](const WreathElement<FreeWord>& w) {
    WreathElement<Klein> out{{}, w.perm};
    for (const auto& s : w.slots) out.slots.push_back(mu_reduce(s, a, b));
    return out;
  };

  QuotientRecursion q;
  q.degree = table.degree();
  q.generators = table.generators;
  const FreeWord fa = FreeWord::letter(a), fb = FreeWord::letter(b);
  q.representatives = {FreeWord(), fa, fb, fa * fb};
  for (std::size_t x = 0; x < 4; ++x) {
    const auto w = push(table_element(table, q.representatives[x]));
    q.perms[x] = w.perm;
    q.slots[x] = w.slots;
    q.labels[x] = label_of(w);
  }
  const auto& d = dihedral_quotient();
  for (int g = 0; g < table.size(); ++g) {
    const auto label = label_of(push(table_element(table, FreeWord::letter(g))));
    if (label[0] < 0) throw Error(ErrorKind::InconsistentHomomorphism, table.generators[static_cast<std::size_t>(g)] + " permutes outside T");
    q.generator_labels.push_back(label);
    const Klein mu = mu_reduce(FreeWord::letter(g), a, b);
    if (label != q.labels[mu.bits]) {
      throw Error(ErrorKind::InconsistentHomomorphism,
                  "label of " + table.generators[static_cast<std::size_t>(g)] + " does not factor through mu");
    }
  }
  for (int c = 0; c < 2; ++c) {
    const int la = q.labels[1][static_cast<std::size_t>(c)];
    const int lb = q.labels[2][static_cast<std::size_t>(c)];
    const auto& grp = d.q.group;
    if (grp.mul(la, la) != grp.identity() || grp.mul(lb, lb) != grp.identity() || grp.mul(la, lb) != grp.mul(lb, la)) {
      throw Error(ErrorKind::InconsistentHomomorphism, "labels of A and B do not span a Klein image");
    }
  }
  check_domain(q);
  return q;
}

namespace {

std::vector<Klein> step(const QuotientRecursion& q, const std::vector<Klein>& set) {
  std::set<Klein> out;
  for (Klein x : set)
    for (Klein s : q.slots[x.bits]) out.insert(s);
  return {out.begin(), out.end()};
}

// Level-k section and permutation of a domain element.
WreathElement<Klein> level(const QuotientRecursion& q, Klein g, int depth) {
  WreathElement<Klein> cur{{g}, Permutation(1)};
  const int d = q.degree;
  for (int k = 1; k <= depth; ++k) {
    const int prev = cur.size();
    std::vector<int> image(static_cast<std::size_t>(prev * d));
    std::vector<Klein> slots(static_cast<std::size_t>(prev * d));
    for (int w = 0; w < prev; ++w) {
      const auto sec = q.element(cur.slots[static_cast<std::size_t>(w)]);
      for (int i = 0; i < d; ++i) {
        image[static_cast<std::size_t>(i * prev + w)] = sec.perm(i) * prev + cur.perm(w);
        slots[static_cast<std::size_t>(i * prev + w)] = sec.slots[static_cast<std::size_t>(i)];
      }
    }
    cur = {std::move(slots), Permutation(std::move(image))};
  }
  return cur;
}

}  // namespace

NucleusResult nucleus_test(const QuotientRecursion& q) {
  NucleusResult r;
  r.steps.push_back({Klein{0}, Klein{1}, Klein{2}, Klein{3}});
  for (int k = 0; k < 8; ++k) {
    auto next = step(q, r.steps.back());
    if (!std::includes(r.steps.back().begin(), r.steps.back().end(), next.begin(), next.end())) r.monotone = false;
    const bool stable = next == r.steps.back();
    r.steps.push_back(std::move(next));
    if (stable) break;
  }
  r.limit = r.steps.back();
  if (r.limit.size() == 1 && r.limit.front().is_identity()) {
    r.verdict = InjectivityVerdict::Pass;
    return r;
  }
  r.verdict = InjectivityVerdict::Fail;
  for (int depth = 1; depth <= 3 && !r.witness; ++depth) {
    for (Klein g : r.limit) {
      if (g.is_identity() || r.witness) continue;
      const auto lv = level(q, g, depth);
      for (int w = 0; w < lv.size(); ++w) {
        if (lv.slots[static_cast<std::size_t>(w)] == g && lv.perm(w) != w) {
          r.witness = FixedPair{g, word_label(w, q.degree, depth), word_label(lv.perm(w), q.degree, depth)};
          break;
        }
      }
    }
  }
  return r;
}

FreeNucleusResult free_nucleus(const RecursionTable& table, int max_steps) {
  FreeNucleusResult r;
  std::vector<FreeWord> start;
  for (int g = 0; g < table.size(); ++g) start.push_back(FreeWord::letter(g));
  r.steps.push_back(start);
  for (int k = 0; k < max_steps; ++k) {
    std::set<FreeWord> next;
    for (const auto& w : r.steps.back()) {
      const auto el = table_element(table, w);
      for (const auto& s : el.slots) {
        if (s.length() > 1) return r;
        next.insert(s);
      }
    }
    std::vector<FreeWord> v(next.begin(), next.end());
    if (v.size() == 1 && v.front().is_identity()) {
      r.steps.push_back(std::move(v));
      r.verdict = InjectivityVerdict::Pass;
      return r;
    }
    const bool stable = v == r.steps.back();
    r.steps.push_back(std::move(v));
    if (stable) return r;
  }
  return r;
}

namespace {

constexpr std::array<std::array<std::array<int, 2>, 2>, 4> kCases = {{
    {{{1, 3}, {3, 1}}},
    {{{3, 3}, {1, 1}}},
    {{{1, 1}, {3, 3}}},
    {{{3, 1}, {1, 3}}},
}};

}  // namespace

std::vector<CaseTable> four_cases(const QuotientRecursion& q) {
  const auto& dq = dihedral_quotient();
  const auto& grp = dq.q.group;
  std::vector<CaseTable> out;
  for (int h1 = 0; h1 < grp.order(); ++h1) {
    for (int h2 = 0; h2 < grp.order(); ++h2) {
      const int h[2] = {h1, h2};
      CaseTable c;
      for (std::size_t x = 0; x < 3; ++x) {
        for (std::size_t comp = 0; comp < 2; ++comp) {
          const int label = q.labels[x + 1][comp];
          if (label < 0) throw Error(ErrorKind::CaseCountMismatch, "label outside the order-8 quotient");
          c.zetas[x][comp] = dq.zeta_index(grp.conjugate(h[comp], label));
          if (c.zetas[x][comp] < 0) throw Error(ErrorKind::CaseCountMismatch, "label outside R");
        }
      }
      const auto same = [&](const CaseTable& o) { return o.zetas == c.zetas; };
      if (std::none_of(out.begin(), out.end(), same)) {
        c.conjugator = {h1, h2};
        out.push_back(c);
      }
    }
  }
  if (out.size() != 4) throw Error(ErrorKind::CaseCountMismatch, "found " + std::to_string(out.size()) + " cases");
  for (auto& c : out) {
    for (std::size_t k = 0; k < 4; ++k)
      if (c.zetas[0] == kCases[k][0] && c.zetas[1] == kCases[k][1]) c.number = static_cast<int>(k) + 1;
    if (c.number == 0) throw Error(ErrorKind::CaseCountMismatch, "case outside the expected list");
  }
  std::sort(out.begin(), out.end(), [](const CaseTable& a, const CaseTable& b) { return a.number < b.number; });
  return out;
}

Claim2Result claim2_search(const CaseTable& c) {
  // x has a guaranteed slot in Y_X when its X-label is zeta2 or zeta3.
  const std::array<std::vector<Klein>, 2> y = {{{Klein::of(1, 0), Klein::of(1, 1)}, {Klein::of(0, 1), Klein::of(1, 1)}}};
  const auto label = [&](Klein x, int comp) { return c.zetas[static_cast<std::size_t>(x.bits - 1)][static_cast<std::size_t>(comp)]; };
  std::vector<Klein> w = {Klein{1}, Klein{2}, Klein{3}};
  const auto inside = [&](const std::vector<Klein>& set) {
    return std::all_of(set.begin(), set.end(), [&](Klein k) { return std::find(w.begin(), w.end(), k) != w.end(); });
  };
  const auto successor = [&](Klein x) -> std::optional<Klein> {
    for (int comp = 0; comp < 2; ++comp) {
      const int z = label(x, comp);
      if ((z == 2 || z == 3) && inside(y[static_cast<std::size_t>(comp)])) return y[static_cast<std::size_t>(comp)].front();
    }
    return std::nullopt;
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (auto it = w.begin(); it != w.end(); ++it) {
      if (!successor(*it)) {
        w.erase(it);
        changed = true;
        break;
      }
    }
  }
  if (w.empty()) throw Error(ErrorKind::NoWitness, "case " + std::to_string(c.number) + " has no persistent element");
  Claim2Result r;
  r.witness = w.front();
  r.persistent = w;
  std::vector<Klein> path{r.witness};
  for (;;) {
    const Klein next = *successor(path.back());
    const auto seen = std::find(path.begin(), path.end(), next);
    if (seen != path.end()) {
      r.cycle.assign(seen, path.end());
      break;
    }
    path.push_back(next);
  }
  return r;
}

Claim3Result claim3_check(const RecursionTable& table, int max_length) {
  Claim3Result r;
  r.max_length = max_length;
  const int a = table.index_of("A"), b = table.index_of("B");
  const int n = table.size();
  const int d = table.degree();
  std::vector<int> letters;
  for (int g = 1; g <= n; ++g) {
    letters.push_back(g);
    letters.push_back(-g);
  }
  std::vector<int> word;
  std::vector<std::vector<int>> perm_stack{Permutation(d).image()};
  std::vector<Klein> mu_stack{Klein{}};
  const auto visit = [&](auto&& self) -> void {
    if (!word.empty()) {
      ++r.words;
      const auto& p = perm_stack.back();
      bool id = true;
      for (int i = 0; i < d; ++i) id = id && p[static_cast<std::size_t>(i)] == i;
      if (id) {
        ++r.identity_words;
        const Klein m = mu_stack.back();
        if (m.bits != 0 && m.bits != 3) {
          if (r.violations++ == 0) r.first_violation = FreeWord(word).to_string(table.generators);
        }
      }
    }
    if (static_cast<int>(word.size()) == max_length) return;
    for (int letter : letters) {
      if (!word.empty() && word.back() == -letter) continue;
      const auto gen = static_cast<std::size_t>(std::abs(letter) - 1);
      const Permutation step = letter > 0 ? table.perms[gen] : table.perms[gen].inverse();
      const auto& cur = perm_stack.back();
      std::vector<int> next(static_cast<std::size_t>(d));
      for (int i = 0; i < d; ++i) next[static_cast<std::size_t>(i)] = step(cur[static_cast<std::size_t>(i)]);
      word.push_back(letter);
      perm_stack.push_back(std::move(next));
      mu_stack.push_back(mu_stack.back() * mu_reduce(FreeWord::letter(static_cast<int>(gen)), a, b));
      self(self);
      word.pop_back();
      perm_stack.pop_back();
      mu_stack.pop_back();
    }
  };
  visit(visit);
  return r;
}

std::string quartic_shape_mismatch(const RecursionTable& table) {
  if (table.degree() != 4) return "degree " + std::to_string(table.degree());
  if (table.size() < 3 || table.generators[0] != "A" || table.generators[1] != "B") return "generators must start A, B, C0";
  const auto word = [&](const std::string& text) { return parse_word(text, table.generators); };
  const Permutation swap = Permutation::from_cycles(4, {{1, 2}, {3, 4}});
  struct Row {
    Permutation perm;
    std::vector<std::string> slots;
  };
  std::vector<Row> expected = {
      {swap, {"A", "A^-1", "e", "e"}},
      {swap, {"e", "e", "B", "B^-1"}},
      {Permutation::from_cycles(4, {{1, 4}}), {"B", "e", "e", "B^-1"}},
  };
  for (int k = 1; k + 2 < table.size(); ++k) expected.push_back({Permutation(4), {"e", "e", "e", "C" + std::to_string(k - 1)}});
  for (int g = 0; g < table.size(); ++g) {
    const auto& name = table.generators[static_cast<std::size_t>(g)];
    if (g >= 2 && name != "C" + std::to_string(g - 2)) return "unexpected generator " + name;
    const auto& row = expected[static_cast<std::size_t>(g)];
    if (!(table.perms[static_cast<std::size_t>(g)] == row.perm)) return name + " permutation " + table.perms[static_cast<std::size_t>(g)].to_string();
    for (std::size_t i = 0; i < 4; ++i) {
      if (!(table.slots[static_cast<std::size_t>(g)][i] == word(row.slots[i]))) {
        return name + " slot " + std::to_string(i + 1) + " reads " + table.slots[static_cast<std::size_t>(g)][i].to_string(table.generators);
      }
    }
  }
  return {};
}

}  // namespace cantor
