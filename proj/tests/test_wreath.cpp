#include <functional>
#include <random>

#include "cantor/error.hpp"
#include "cantor/groups.hpp"
#include "cantor/reduction.hpp"
#include "cantor/wreath.hpp"
#include "doctest.h"

using namespace cantor;

namespace {

// The a = 3i table written out by hand.
RecursionTable quartic_table() {
  RecursionTable t;
  t.generators = {"A", "B", "C0", "C1"};
  const auto swap = Permutation::from_cycles(4, {{1, 2}, {3, 4}});
  t.perms = {swap, swap, Permutation::from_cycles(4, {{1, 4}}), Permutation(4)};
  const auto p = [&](const std::string& s) { return parse_word(s, t.generators); };
  t.slots = {{p("A"), p("A^-1"), p("e"), p("e")},
             {p("e"), p("e"), p("B"), p("B^-1")},
             {p("B"), p("e"), p("e"), p("B^-1")},
             {p("e"), p("e"), p("e"), p("C0")}};
  return t;
}

// Basilica-style control, z^2 - 1 shaped.
RecursionTable binary_table() {
  RecursionTable t;
  t.generators = {"a", "b"};
  t.perms = {Permutation::from_cycles(2, {{1, 2}}), Permutation(2)};
  t.slots = {{FreeWord(), FreeWord::letter(1)}, {FreeWord(), FreeWord::letter(0)}};
  return t;
}

using Str = std::vector<int>;

// Action on strings read straight from the table, letter by letter.
Str act(const RecursionTable& t, const FreeWord& g, Str s) {
  if (s.empty()) return s;
  for (int letter : g.letters()) {
    const int gen = std::abs(letter) - 1;
    const Permutation& p = t.perms[static_cast<std::size_t>(gen)];
    Str tail(s.begin() + 1, s.end());
    if (letter > 0) {
      const FreeWord sec = t.slots[static_cast<std::size_t>(gen)][static_cast<std::size_t>(s[0])];
      tail = act(t, sec, tail);
      s[0] = p(s[0]);
    } else {
      const int x = p.inverse()(s[0]);
      tail = act(t, t.slots[static_cast<std::size_t>(gen)][static_cast<std::size_t>(x)].inverse(), tail);
      s[0] = x;
    }
    std::copy(tail.begin(), tail.end(), s.begin() + 1);
  }
  return s;
}

int index_of(const Str& s, int d) {
  int i = 0;
  for (int x : s) i = i * d + x;
  return i;
}

Str string_of(int index, int d, int k) {
  Str s(static_cast<std::size_t>(k));
  for (int j = k - 1; j >= 0; --j) {
    s[static_cast<std::size_t>(j)] = index % d;
    index /= d;
  }
  return s;
}

FreeWord random_free(std::mt19937& rng, int gens, int length) {
  std::uniform_int_distribution<int> g(0, gens - 1), sign(0, 1);
  FreeWord w;
  for (int k = 0; k < length; ++k) w = w * FreeWord::letter(g(rng), sign(rng) ? 1 : -1);
  return w;
}

struct Z2 {
  int v = 0;
  Z2 inverse() const { return *this; }
  friend Z2 operator*(Z2 a, Z2 b) { return {a.v ^ b.v}; }
  friend bool operator==(Z2, Z2) = default;
};

}  // namespace

TEST_CASE("permutation products apply the left factor first") {
  const auto a = Permutation::from_cycles(3, {{1, 2}});
  const auto b = Permutation::from_cycles(3, {{2, 3}});
  CHECK((a * b)(0) == 2);
  CHECK((a * b).to_string() == "(1 3 2)");
  CHECK((b * a).to_string() == "(1 2 3)");
  CHECK((a * a.inverse()).is_identity());
}

TEST_CASE("wreath product by hand") {
  const auto l = [](int g) { return FreeWord::letter(g); };
  const WreathElement<FreeWord> x{{l(0), l(1), l(2)}, Permutation::from_cycles(3, {{1, 2}})};
  const WreathElement<FreeWord> y{{l(3), l(4), l(5)}, Permutation::from_cycles(3, {{2, 3}})};
  const auto xy = wreath_product(x, y);
  CHECK(xy.slots == std::vector<FreeWord>{l(0) * l(4), l(1) * l(3), l(2) * l(5)});
  CHECK(xy.perm.to_string() == "(1 3 2)");
  CHECK(wreath_product(x, wreath_inverse(x)) == WreathElement<FreeWord>::identity(3));
}

TEST_CASE("wreath products are associative") {
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> pick(0, 23);
  std::vector<Permutation> s4;
  std::vector<int> v = {0, 1, 2, 3};
  do s4.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  const auto random_el = [&] {
    WreathElement<FreeWord> e;
    for (int i = 0; i < 4; ++i) e.slots.push_back(random_free(rng, 3, 3));
    e.perm = s4[static_cast<std::size_t>(pick(rng))];
    return e;
  };
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_el(), b = random_el(), c = random_el();
    CHECK(wreath_product(wreath_product(a, b), c) == wreath_product(a, wreath_product(b, c)));
    CHECK(wreath_product(WreathElement<FreeWord>::identity(4), a) == a);
  }
}

TEST_CASE("table elements of the quartic recursion") {
  const auto t = quartic_table();
  const FreeWord a = FreeWord::letter(0);
  CHECK(table_element(t, a * a) == WreathElement<FreeWord>::identity(4));
  CHECK(table_element(t, FreeWord::letter(1) * FreeWord::letter(1)) == WreathElement<FreeWord>::identity(4));
  const auto ab = table_element(t, a * FreeWord::letter(1));
  CHECK(ab.perm.is_identity());
  CHECK_THROWS_AS(table_element(t, FreeWord::letter(7)), Error);
  const auto a2 = iterate_recursion(t, a, 2);
  CHECK(word_label(a2.perm(0), 4, 2) == "22");
  CHECK(word_label(0, 4, 2) == "11");
  CHECK_THROWS_AS(iterate_recursion(t, a, 13), Error);
}

TEST_CASE("iterated recursion matches the string action") {
  const auto t = quartic_table();
  std::mt19937 rng(9);
  std::vector<FreeWord> words;
  for (int g = 0; g < t.size(); ++g) words.push_back(FreeWord::letter(g));
  for (int k = 0; k < 12; ++k) words.push_back(random_free(rng, t.size(), 1 + k % 4));
  for (const auto& g : words) {
    for (int k = 1; k <= 4; ++k) {
      const auto el = iterate_recursion(t, g, k);
      int total = 1;
      for (int j = 0; j < k; ++j) total *= 4;
      for (int i = 0; i < total; ++i) {
        const Str s = string_of(i, 4, k);
        CHECK(el.perm(i) == index_of(act(t, g, s), 4));
        // section at s acts on the continuation
        const Str u = {1, 3};
        Str su = s;
        su.insert(su.end(), u.begin(), u.end());
        const Str image = act(t, g, su);
        const Str tail(image.begin() + k, image.end());
        CHECK(tail == act(t, el.slots[static_cast<std::size_t>(i)], u));
      }
    }
  }
}

TEST_CASE("iterated recursion is multiplicative") {
  const auto t = quartic_table();
  std::mt19937 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = random_free(rng, t.size(), 1 + trial % 4);
    const auto h = random_free(rng, t.size(), 1 + (trial / 4) % 4);
    for (int k = 1; k <= 4; ++k) {
      CHECK(iterate_recursion(t, g * h, k) == wreath_product(iterate_recursion(t, g, k), iterate_recursion(t, h, k)));
    }
  }
}

TEST_CASE("depth-1 homomorphism check") {
  const auto t = quartic_table();
  std::vector<std::vector<WreathElement<FreeWord>>> pairs(4, std::vector<WreathElement<FreeWord>>(4));
  for (int g = 0; g < 4; ++g)
    for (int h = 0; h < 4; ++h) pairs[g][h] = table_element(t, FreeWord::letter(g) * FreeWord::letter(h));
  CHECK(check_depth1_homomorphism(t, pairs).empty());
  pairs[2][3].slots[0] = FreeWord();
  CHECK_FALSE(check_depth1_homomorphism(t, pairs).empty());
}

TEST_CASE("the group of block-preserving permutations") {
  const auto t = build_T_group();
  CHECK(t.order() == 8);
  CHECK_FALSE(t.is_abelian());
  CHECK(t.exponent() == 4);
  CHECK(t_index_of(Permutation::from_cycles(4, {{1, 2, 4, 3}})) == 6);
  CHECK(t_index_of(Permutation::from_cycles(4, {{1, 2}})) == -1);
  for (const auto& p : block_preserving_perms()) {
    // {1,4} goes to a block
    const int x = p(0), y = p(3);
    CHECK(((x == 0 && y == 3) || (x == 3 && y == 0) || (x == 1 && y == 2) || (x == 2 && y == 1)));
  }
}

TEST_CASE("semidirect product agrees with the wreath product over Z2") {
  const auto g = build_Z2_4_semidirect_T();
  CHECK(g.order() == 128);
  const auto& t = block_preserving_perms();
  const auto as_wreath = [&](int code) {
    WreathElement<Z2> w;
    for (int i = 0; i < 4; ++i) w.slots.push_back({(semidirect_q(code) >> i) & 1});
    w.perm = t[static_cast<std::size_t>(semidirect_t(code))];
    return w;
  };
  for (int x = 0; x < 128; ++x)
    for (int y = 0; y < 128; ++y) CHECK(as_wreath(g.mul(x, y)) == wreath_product(as_wreath(x), as_wreath(y)));
  CHECK(bits_from_tuple({1, 0, 0, 1}) == 9);
  CHECK(q_block_constant() == std::vector<int>{0, 6, 9, 15});
  CHECK(q_even().size() == 8);
}

TEST_CASE("normal subgroups and the order-8 quotient") {
  const auto g = build_Z2_4_semidirect_T();
  const Subset sl = semidirect_subset(q_block_constant(), t_block_fixing());
  CHECK(is_subgroup(g, sl));
  CHECK(is_normal(g, sl));
  const auto q = quotient(g, sl);
  CHECK(q.group.order() == 8);
  CHECK_FALSE(q.group.is_abelian());
  const Subset flip = semidirect_subset({0}, {0, 1});
  CHECK(is_subgroup(g, flip));
  CHECK_FALSE(is_normal(g, flip));
  CHECK_THROWS_AS(quotient(g, flip), Error);
  CHECK_THROWS_AS(is_normal(g, Subset{0, 1, 2}), Error);
  const auto r = restrict_to(g, sl);
  CHECK(r.group.order() == 16);
  for (int x = 0; x < r.group.order(); ++x)
    for (int y = 0; y < r.group.order(); ++y)
      CHECK(r.embedding[static_cast<std::size_t>(r.group.mul(x, y))] ==
            g.mul(r.embedding[static_cast<std::size_t>(x)], r.embedding[static_cast<std::size_t>(y)]));
}

TEST_CASE("structure of the order-8 quotient") {
  const auto rep = verify_claim1();
  CHECK(rep.all_pass());
  CHECK(rep.quotient_order == 8);
  CHECK(rep.quotient_exponent == 4);
  CHECK(rep.r_order == 4);
  CHECK(rep.zeta2_class_size == 1);
  const auto& dq = dihedral_quotient();
  const auto& d = dq.q.group;
  CHECK(d.mul(dq.zeta[1], dq.zeta[2]) == dq.zeta[3]);
  for (int k = 1; k <= 3; ++k) CHECK(d.element_order(dq.zeta[k]) == 2);
  const auto h = conjugacy_test(d, dq.zeta[1], dq.zeta[3]);
  REQUIRE(h);
  CHECK(d.conjugate(*h, dq.zeta[1]) == dq.zeta[3]);
  CHECK(d.conjugate(dq.q.projection[static_cast<std::size_t>(rep.witness)], dq.zeta[1]) == dq.zeta[3]);
  // zeta2 is central
  for (int x = 0; x < 8; ++x) CHECK(d.conjugate(x, dq.zeta[2]) == dq.zeta[2]);
}

TEST_CASE("abelianisation to the Klein group") {
  const auto t = quartic_table();
  CHECK(mu_reduce(t, parse_word("A B A", t.generators)) == Klein::of(0, 1));
  CHECK(mu_reduce(t, parse_word("A^-1 C0 C1 B", t.generators)) == Klein::of(1, 1));
  CHECK(mu_reduce(t, parse_word("C0 C1^-1", t.generators)) == Klein{});
  CHECK(Klein::of(1, 1).to_string() == "(1,1)");
}

TEST_CASE("quotient recursion of the quartic") {
  const auto q = reduce_recursion(quartic_table());
  CHECK(q.zeta_of(Klein::of(1, 0), 0) == 3);
  CHECK(q.zeta_of(Klein::of(1, 0), 1) == 1);
  CHECK(q.zeta_of(Klein::of(0, 1), 0) == 1);
  CHECK(q.zeta_of(Klein::of(0, 1), 1) == 3);
  CHECK(q.zeta_of(Klein::of(1, 1), 0) == 2);
  CHECK(q.zeta_of(Klein::of(1, 1), 1) == 2);
  const Klein A = Klein::of(1, 0), B = Klein::of(0, 1), e{};
  CHECK(q.slots[A.bits] == std::vector<Klein>{A, A, e, e});
  CHECK(q.slots[B.bits] == std::vector<Klein>{e, e, B, B});
  CHECK(q.slots[3] == std::vector<Klein>{A, A, B, B});
  CHECK(q.perms[3].is_identity());

  auto bad = quartic_table();
  bad.slots[3] = {FreeWord::letter(0), FreeWord(), FreeWord(), FreeWord()};
  CHECK_THROWS_AS(reduce_recursion(bad), Error);
  auto missing = quartic_table();
  missing.generators[1] = "X";
  CHECK_THROWS_AS(reduce_recursion(missing), Error);
}

TEST_CASE("nucleus iteration") {
  const auto q = reduce_recursion(quartic_table());
  const auto r = nucleus_test(q);
  CHECK(r.verdict == InjectivityVerdict::Fail);
  CHECK(r.monotone);
  REQUIRE(r.witness);
  CHECK(r.witness->g == Klein::of(1, 0));
  CHECK(r.witness->word == "1");
  CHECK(r.witness->image == "2");

  const auto swap = Permutation::from_cycles(4, {{1, 2}, {3, 4}});
  const std::vector<Klein> zeros(4);
  const auto flat = make_quotient_recursion(4, {Permutation(4), swap, swap, Permutation(4)}, {zeros, zeros, zeros, zeros});
  const auto fr = nucleus_test(flat);
  CHECK(fr.verdict == InjectivityVerdict::Pass);
  REQUIRE(fr.steps.size() >= 2);
  CHECK(fr.steps[1] == std::vector<Klein>{Klein{}});
  CHECK_FALSE(fr.witness);
}

TEST_CASE("conjugacy cases and the persistent element") {
  const auto q = reduce_recursion(quartic_table());
  const auto cases = four_cases(q);
  REQUIRE(cases.size() == 4);
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(cases[k].number == static_cast<int>(k) + 1);
    CHECK(cases[k].zetas[2] == std::array<int, 2>{2, 2});
  }
  const auto extracted = [&](const CaseTable& c) {
    for (std::size_t x = 0; x < 3; ++x)
      for (int comp = 0; comp < 2; ++comp)
        if (c.zetas[x][static_cast<std::size_t>(comp)] != q.zeta_of(Klein{static_cast<std::uint8_t>(x + 1)}, comp)) return false;
    return true;
  };
  CHECK(std::count_if(cases.begin(), cases.end(), extracted) == 1);
  const Klein expect[4] = {Klein::of(1, 0), Klein::of(1, 0), Klein::of(0, 1), Klein::of(1, 0)};
  for (std::size_t k = 0; k < 4; ++k) {
    const auto r = claim2_search(cases[k]);
    CHECK(r.witness == expect[k]);
    CHECK_FALSE(r.cycle.empty());
    // every persistent element has a label in {zeta2, zeta3} in some component
    for (Klein x : r.persistent) {
      const auto& z = cases[k].zetas[static_cast<std::size_t>(x.bits - 1)];
      CHECK((z[0] >= 2 || z[1] >= 2));
    }
  }
  CaseTable none;
  none.zetas = {{{1, 1}, {1, 1}, {1, 1}}};
  CHECK_THROWS_AS(claim2_search(none), Error);
}

TEST_CASE("identity-permutation words reduce into the diagonal") {
  const auto r = claim3_check(quartic_table(), 6);
  // reduced words over 8 letters, lengths 1..6
  long long expect = 0, layer = 8;
  for (int k = 1; k <= 6; ++k, layer *= 7) expect += layer;
  CHECK(r.words == expect);
  CHECK(r.words == 156864);
  CHECK(r.violations == 0);
  CHECK(r.identity_words > 0);

  // brute-force count of identity words up to length 3
  const auto t = quartic_table();
  long long ids = 0, bad = 0;
  std::function<void(FreeWord, int)> walk = [&](FreeWord w, int left) {
    if (!w.is_identity()) {
      if (table_element(t, w).perm.is_identity()) {
        ++ids;
        const Klein m = mu_reduce(t, w);
        if (m.bits == 1 || m.bits == 2) ++bad;
      }
    }
    if (left == 0) return;
    for (int g = 0; g < 4; ++g)
      for (int s : {1, -1}) {
        const auto next = w * FreeWord::letter(g, s);
        if (next.length() == w.length() + 1) walk(next, left - 1);
      }
  };
  walk(FreeWord(), 3);
  const auto r3 = claim3_check(t, 3);
  CHECK(r3.identity_words == ids);
  CHECK(r3.violations == bad);
}

TEST_CASE("free nucleus of a contracting binary table") {
  const auto r = free_nucleus(binary_table());
  CHECK(r.verdict == InjectivityVerdict::Unknown);
  RecursionTable t;
  t.generators = {"g"};
  t.perms = {Permutation::from_cycles(2, {{1, 2}})};
  t.slots = {{FreeWord(), FreeWord()}};
  const auto p = free_nucleus(t);
  CHECK(p.verdict == InjectivityVerdict::Pass);
  CHECK(p.steps.back() == std::vector<FreeWord>{FreeWord()});
  CHECK(free_nucleus(quartic_table()).verdict != InjectivityVerdict::Pass);
}

TEST_CASE("quartic shape detection") {
  CHECK(quartic_shape_mismatch(quartic_table()).empty());
  auto t = quartic_table();
  t.perms[2] = Permutation(4);
  CHECK_FALSE(quartic_shape_mismatch(t).empty());
  CHECK_FALSE(quartic_shape_mismatch(binary_table()).empty());
}
