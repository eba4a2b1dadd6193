#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "alexmod/word.hpp"

namespace alexmod {

/// Finitely presented group <generators | relators>.
///
/// Relators are stored cyclically reduced; `relator_text` keeps the source
/// line (after the keyword) for display, and is regenerated for relators
/// built programmatically.
class GroupPresentation {
 public:
  GroupPresentation() = default;
  /// Throws InputError on duplicate names or out-of-range generator indices.
  GroupPresentation(std::vector<std::string> generator_names, std::vector<Word> relators,
                    std::vector<std::string> relator_text = {});

  int generator_count() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& generator_names() const { return names_; }
  const std::vector<Word>& relators() const { return relators_; }
  const std::vector<std::string>& relator_text() const { return text_; }

  /// Index of a generator name, or -1.
  int find_generator(std::string_view name) const;

  friend bool operator==(const GroupPresentation& a, const GroupPresentation& b) {
    return a.names_ == b.names_ && a.relators_ == b.relators_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Word> relators_;
  std::vector<std::string> text_;
};

/// Parses the line-oriented presentation format:
///
///     generators a b
///     relator a b a = b a b     # `=` splits lhs/rhs, stored as lhs*rhs^-1
///     relator a^2 b^-2
///
/// `relators` is accepted as a synonym of `relator`. Throws ParseError.
GroupPresentation parse_presentation(std::string_view text);
GroupPresentation parse_presentation(std::istream& in);

/// Canonical printout; `parse_presentation(print_presentation(p)) == p`.
std::string print_presentation(const GroupPresentation& p);

}  // namespace alexmod
