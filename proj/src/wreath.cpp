#include "cantor/wreath.hpp"

#include "cantor/error.hpp"

namespace cantor {

std::string Klein::to_string() const { return "(" + std::to_string(a()) + "," + std::to_string(b()) + ")"; }

WreathElement<FreeWord> table_element(const RecursionTable& table, const FreeWord& g) {
  if (g.max_generator() >= table.size()) throw Error(ErrorKind::AlphabetEscape, "word uses a letter outside the table");
  auto out = WreathElement<FreeWord>::identity(table.degree());
  for (int letter : g.letters()) {
    const auto gen = static_cast<std::size_t>(std::abs(letter) - 1);
    WreathElement<FreeWord> step{table.slots[gen], table.perms[gen]};
    out = wreath_product(out, letter > 0 ? step : wreath_inverse(step));
  }
  return out;
}

WreathElement<FreeWord> iterate_recursion(const RecursionTable& table, const FreeWord& g, int depth) {
  if (depth < 0 || depth > 12) throw Error(ErrorKind::Usage, "recursion depth must lie in [0, 12]");
  const int d = table.degree();
  WreathElement<FreeWord> level{{g}, Permutation(1)};
  for (int k = 1; k <= depth; ++k) {
    const int prev = level.size();
    std::vector<int> image(static_cast<std::size_t>(prev * d));
    std::vector<FreeWord> slots(static_cast<std::size_t>(prev * d));
    for (int w = 0; w < prev; ++w) {
      const auto section = table_element(table, level.slots[static_cast<std::size_t>(w)]);
      for (int i = 0; i < d; ++i) {
        const auto idx = static_cast<std::size_t>(w * d + i);
        image[idx] = level.perm(w) * d + section.perm(i);
        slots[idx] = section.slots[static_cast<std::size_t>(i)];
        if (slots[idx].max_generator() >= table.size()) throw Error(ErrorKind::AlphabetEscape, "slot word leaves the alphabet");
      }
    }
    level = {std::move(slots), Permutation(std::move(image))};
  }
  return level;
}

std::string word_label(int index, int degree, int depth) {
  std::string out(static_cast<std::size_t>(depth), '0');
  for (int k = depth - 1; k >= 0; --k) {
    out[static_cast<std::size_t>(k)] = static_cast<char>('1' + index % degree);
    index /= degree;
  }
  return out;
}

std::string check_depth1_homomorphism(const RecursionTable& table,
                                      const std::vector<std::vector<WreathElement<FreeWord>>>& pair_elements) {
  for (int g = 0; g < table.size(); ++g) {
    for (int h = 0; h < table.size(); ++h) {
      const auto expected = wreath_product(table_element(table, FreeWord::letter(g)), table_element(table, FreeWord::letter(h)));
      if (!(pair_elements[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)] == expected)) {
        return table.generators[static_cast<std::size_t>(g)] + " " + table.generators[static_cast<std::size_t>(h)];
      }
    }
  }
  return {};
}

}  // namespace cantor
