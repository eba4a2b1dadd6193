#pragma once

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace alexmod {

/// One syllable x_g^e of a word; e is never zero inside a Word.
struct Letter {
  int generator = 0;
  std::int64_t exponent = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Freely reduced element of a free group on indexed generators.
///
/// Adjacent letters never share a generator; the empty word is the identity.
/// Exponents are kept compressed, so x^100 is a single letter.
class Word {
 public:
  Word() = default;
  /// Builds the free reduction of an arbitrary letter sequence.
  explicit Word(std::span<const Letter> letters);
  Word(std::initializer_list<Letter> letters);

  static Word generator(int g, std::int64_t exponent = 1);

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  /// Largest generator index used, or -1 for the identity.
  int max_generator() const;

  Word inverse() const;
  Word power(std::int64_t n) const;

  /// Conjugate-minimal representative: strips matching ends until the
  /// first and last letters use different generators (merging when equal).
  Word cyclically_reduced() const;

  /// Exponent sum per generator, length `generator_count`.
  std::vector<std::int64_t> exponent_sums(int generator_count) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend Word word_concat(const Word& u, const Word& v);

 private:
  void push(Letter l);

  std::vector<Letter> letters_;
};

/// Freely reduced product u*v.
Word word_concat(const Word& u, const Word& v);

inline Word operator*(const Word& u, const Word& v) { return word_concat(u, v); }

/// Renders as space-separated tokens `name` / `name^e`.
std::string to_string(const Word& w, std::span<const std::string> names);

}  // namespace alexmod
