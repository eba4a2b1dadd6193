#include "alexmod/presentation.hpp"

#include <cctype>
#include <charconv>
#include <iterator>
#include <set>
#include <sstream>

#include "alexmod/errors.hpp"

namespace alexmod {

GroupPresentation::GroupPresentation(std::vector<std::string> generator_names,
                                     std::vector<Word> relators,
                                     std::vector<std::string> relator_text)
    : names_(std::move(generator_names)), text_(std::move(relator_text)) {
  std::set<std::string> seen;
  for (const auto& n : names_)
    if (!seen.insert(n).second) throw InputError("duplicate generator name '" + n + "'");
  const bool keep_text = text_.size() == relators.size();
  std::vector<std::string> text;
  relators_.reserve(relators.size());
  for (std::size_t i = 0; i < relators.size(); ++i) {
    if (relators[i].max_generator() >= generator_count())
      throw InputError("relator uses generator index beyond the generator list");
    Word r = relators[i].cyclically_reduced();
    // Relators that freely reduce to the identity impose nothing.
    if (r.is_identity()) continue;
    relators_.push_back(std::move(r));
    if (keep_text) text.push_back(text_[i]);
  }
  text_ = std::move(text);
  if (text_.size() != relators_.size()) {
    text_.clear();
    for (const Word& r : relators_) text_.push_back(to_string(r, names_));
  }
}

int GroupPresentation::find_generator(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

struct Token {
  std::string text;
  int column;  // 1-based
};

std::vector<Token> split_tokens(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    out.push_back({std::string(line.substr(i, j - i)), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

Letter parse_letter(const Token& tok, const std::vector<std::string>& names, int line_no) {
  const std::string& s = tok.text;
  if (s.empty() || !is_ident_start(s[0]))
    throw ParseError("expected generator name, got '" + s + "'", line_no, tok.column);
  std::size_t k = 1;
  while (k < s.size() && is_ident_char(s[k])) ++k;
  const std::string name = s.substr(0, k);
  int index = -1;
  for (std::size_t g = 0; g < names.size(); ++g)
    if (names[g] == name) index = static_cast<int>(g);
  if (index < 0) throw ParseError("unknown generator '" + name + "'", line_no, tok.column);
  std::int64_t exponent = 1;
  if (k < s.size()) {
    if (s[k] != '^')
      throw ParseError("unexpected character '" + std::string(1, s[k]) + "'", line_no,
                       tok.column + static_cast<int>(k));
    std::size_t e = k + 1;
    if (e < s.size() && s[e] == '+') ++e;
    const char* first = s.data() + e;
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, exponent);
    if (ec != std::errc() || ptr != last || first == last)
      throw ParseError("malformed exponent in '" + s + "'", line_no,
                       tok.column + static_cast<int>(k) + 1);
    if (exponent == 0)
      throw ParseError("zero exponent in '" + s + "'", line_no,
                       tok.column + static_cast<int>(k) + 1);
  }
  return {index, exponent};
}

}  // namespace

GroupPresentation parse_presentation(std::string_view text) {
  std::vector<std::string> names;
  bool have_generators = false;
  std::vector<Word> relators;
  std::vector<std::string> relator_text;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const std::string_view raw =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    const std::string_view line = strip_comment(raw);
    const std::vector<Token> toks = split_tokens(line);
    if (toks.empty()) continue;
    const std::string& keyword = toks[0].text;

    if (keyword == "generators") {
      if (have_generators) throw ParseError("duplicate 'generators' line", line_no, toks[0].column);
      have_generators = true;
      for (std::size_t i = 1; i < toks.size(); ++i) {
        const std::string& n = toks[i].text;
        bool ok = is_ident_start(n[0]);
        for (char c : n) ok = ok && is_ident_char(c);
        if (!ok) throw ParseError("invalid generator name '" + n + "'", line_no, toks[i].column);
        for (const auto& existing : names)
          if (existing == n)
            throw ParseError("duplicate generator '" + n + "'", line_no, toks[i].column);
        names.push_back(n);
      }
    } else if (keyword == "relator" || keyword == "relators") {
      if (!have_generators)
        throw ParseError("relator before 'generators' line", line_no, toks[0].column);
      std::vector<Letter> lhs, rhs;
      bool seen_eq = false;
      for (std::size_t i = 1; i < toks.size(); ++i) {
        if (toks[i].text == "=") {
          if (seen_eq) throw ParseError("more than one '='", line_no, toks[i].column);
          seen_eq = true;
          continue;
        }
        (seen_eq ? rhs : lhs).push_back(parse_letter(toks[i], names, line_no));
      }
      if (lhs.empty() && rhs.empty())
        throw ParseError("empty relator", line_no, toks[0].column);
      Word w = Word(lhs) * Word(rhs).inverse();
      relators.push_back(w);
      const auto body_start = static_cast<std::size_t>(toks[1 < toks.size() ? 1 : 0].column - 1);
      std::string body(line.substr(body_start));
      while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.pop_back();
      relator_text.push_back(body);
    } else {
      throw ParseError("unknown keyword '" + keyword + "'", line_no, toks[0].column);
    }
  }
  if (!have_generators) throw ParseError("missing 'generators' line", line_no, 1);
  return GroupPresentation(std::move(names), std::move(relators), std::move(relator_text));
}

GroupPresentation parse_presentation(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_presentation(std::string_view(text));
}

std::string print_presentation(const GroupPresentation& p) {
  std::ostringstream os;
  os << "generators";
  for (const auto& n : p.generator_names()) os << ' ' << n;
  os << '\n';
  for (const Word& r : p.relators()) {
    os << "relator " << to_string(r, p.generator_names()) << '\n';
  }
  return os.str();
}

}  // namespace alexmod
