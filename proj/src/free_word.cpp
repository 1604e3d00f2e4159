#include "cantor/free_word.hpp"

#include <algorithm>
#include <sstream>

#include "cantor/error.hpp"

namespace cantor {

FreeWord::FreeWord(const std::vector<int>& letters) {
  for (int x : letters) {
    if (x == 0) throw Error(ErrorKind::Usage, "zero is not a letter");
    if (!letters_.empty() && letters_.back() == -x) {
      letters_.pop_back();
    } else {
      letters_.push_back(x);
    }
  }
}

FreeWord FreeWord::letter(int generator, int sign) {
  return FreeWord(std::vector<int>{sign > 0 ? generator + 1 : -(generator + 1)});
}

FreeWord FreeWord::inverse() const {
  FreeWord out;
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back(-*it);
  return out;
}

int FreeWord::exponent_sum(int generator) const {
  int s = 0;
  for (int x : letters_) {
    if (x == generator + 1) ++s;
    if (x == -(generator + 1)) --s;
  }
  return s;
}

int FreeWord::max_generator() const {
  int m = -1;
  for (int x : letters_) m = std::max(m, std::abs(x) - 1);
  return m;
}

std::string FreeWord::to_string(const std::vector<std::string>& names) const {
  if (letters_.empty()) return "e";
  std::string s;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    const int g = std::abs(letters_[k]) - 1;
    if (k > 0) s += " ";
    s += g < static_cast<int>(names.size()) ? names[static_cast<std::size_t>(g)] : "g" + std::to_string(g + 1);
    if (letters_[k] < 0) s += "^-1";
  }
  return s;
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  FreeWord out = a;
  for (int x : b.letters_) {
    if (!out.letters_.empty() && out.letters_.back() == -x) {
      out.letters_.pop_back();
    } else {
      out.letters_.push_back(x);
    }
  }
  return out;
}

FreeWord parse_word(const std::string& text, const std::vector<std::string>& names) {
  std::istringstream in(text);
  std::string tok;
  std::vector<int> letters;
  while (in >> tok) {
    if (tok == "e") continue;
    int sign = 1;
    if (tok.size() > 3 && tok.ends_with("^-1")) {
      sign = -1;
      tok.resize(tok.size() - 3);
    }
    const auto it = std::find(names.begin(), names.end(), tok);
    if (it == names.end()) throw Error(ErrorKind::AlphabetEscape, "unknown generator '" + tok + "'");
    letters.push_back(sign * static_cast<int>(it - names.begin() + 1));
  }
  return FreeWord(letters);
}

}  // namespace cantor
