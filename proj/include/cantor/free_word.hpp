#pragma once

#include <string>
#include <vector>

namespace cantor {

/// Freely reduced word. Letter +k is generator k-1, letter -k its inverse.
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(const std::vector<int>& letters);

  /// Generator index (0-based) raised to sign +1 or -1.
  static FreeWord letter(int generator, int sign = 1);

  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  FreeWord inverse() const;
  /// Sum of the exponents of one generator (0-based index).
  int exponent_sum(int generator) const;
  /// Largest generator index used, or -1 for the identity.
  int max_generator() const;

  /// "A B^-1 C0", or "e" for the identity.
  std::string to_string(const std::vector<std::string>& names) const;

  friend FreeWord operator*(const FreeWord& a, const FreeWord& b);
  friend bool operator==(const FreeWord& a, const FreeWord& b) = default;
  friend auto operator<=>(const FreeWord& a, const FreeWord& b) = default;

 private:
  std::vector<int> letters_;
};

/// Parses "A B^-1 C0" style words over the given names; "e" is the identity.
FreeWord parse_word(const std::string& text, const std::vector<std::string>& names);

}  // namespace cantor
