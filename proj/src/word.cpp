#include "alexmod/word.hpp"

#include <algorithm>
#include <sstream>

namespace alexmod {

Word::Word(std::span<const Letter> letters) {
  for (const Letter& l : letters) push(l);
}

Word::Word(std::initializer_list<Letter> letters)
    : Word(std::span<const Letter>(letters.begin(), letters.size())) {}

Word Word::generator(int g, std::int64_t exponent) {
  Word w;
  w.push({g, exponent});
  return w;
}

void Word::push(Letter l) {
  if (l.exponent == 0) return;
  if (!letters_.empty() && letters_.back().generator == l.generator) {
    letters_.back().exponent += l.exponent;
    if (letters_.back().exponent == 0) letters_.pop_back();
    return;
  }
  letters_.push_back(l);
}

int Word::max_generator() const {
  int m = -1;
  for (const Letter& l : letters_) m = std::max(m, l.generator);
  return m;
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back({it->generator, -it->exponent});
  return w;
}

Word Word::power(std::int64_t n) const {
  Word base = n < 0 ? inverse() : *this;
  Word result;
  for (std::int64_t i = 0; i < (n < 0 ? -n : n); ++i) result = result * base;
  return result;
}

Word Word::cyclically_reduced() const {
  std::vector<Letter> ls = letters_;
  std::size_t lo = 0, hi = ls.size();
  while (hi - lo >= 2 && ls[lo].generator == ls[hi - 1].generator) {
    const std::int64_t sum = ls[lo].exponent + ls[hi - 1].exponent;
    if (sum == 0) {
      ++lo;
      --hi;
      continue;
    }
    // Conjugating by the last letter folds it into the first.
    ls[lo].exponent = sum;
    --hi;
    break;
  }
  Word w;
  for (std::size_t i = lo; i < hi; ++i) w.push(ls[i]);
  // A fold can expose new matching ends, e.g. a b a^-1 -> b.
  if (w.size() >= 2 && w.letters_.front().generator == w.letters_.back().generator)
    return w.cyclically_reduced();
  return w;
}

std::vector<std::int64_t> Word::exponent_sums(int generator_count) const {
  std::vector<std::int64_t> sums(static_cast<std::size_t>(generator_count), 0);
  for (const Letter& l : letters_) sums.at(static_cast<std::size_t>(l.generator)) += l.exponent;
  return sums;
}

Word word_concat(const Word& u, const Word& v) {
  Word w = u;
  for (const Letter& l : v.letters()) w.push(l);
  return w;
}

std::string to_string(const Word& w, std::span<const std::string> names) {
  std::ostringstream os;
  bool first = true;
  for (const Letter& l : w.letters()) {
    if (!first) os << ' ';
    first = false;
    os << names[static_cast<std::size_t>(l.generator)];
    if (l.exponent != 1) os << '^' << l.exponent;
  }
  return os.str();
}

}  // namespace alexmod
