#include "alexmod/curve.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

#include "alexmod/errors.hpp"

namespace alexmod {

SingularityGerm SingularityGerm::quasi_homogeneous(long p, long q, long count) {
  if (p < 2 || q < 2) throw InputError("quasi-homogeneous germ needs p, q >= 2");
  if (count < 1) throw InputError("singularity count must be positive");
  SingularityGerm s;
  s.kind = Kind::quasi_homogeneous;
  s.p = p;
  s.q = q;
  s.mu = (p - 1) * (q - 1);
  s.branches = std::gcd(p, q);
  if ((s.mu + s.branches - 1) % 2 != 0) throw InputError("non-integral delta invariant");
  s.delta = (s.mu + s.branches - 1) / 2;
  s.count = count;
  return s;
}

SingularityGerm SingularityGerm::from_data(long mu, long branches, long delta, long count) {
  if (mu < 1 || branches < 1 || delta < 0) throw InputError("singularity data out of range");
  if (count < 1) throw InputError("singularity count must be positive");
  if (2 * delta != mu + branches - 1)
    throw InputError("singularity data violates 2*delta = mu + branches - 1");
  SingularityGerm s;
  s.kind = Kind::explicit_data;
  s.mu = mu;
  s.branches = branches;
  s.delta = delta;
  s.count = count;
  return s;
}

long CurveSpec::singular_point_count() const {
  long l = 0;
  for (const auto& s : singularities) l += s.count;
  return l;
}

namespace {

struct LineCursor {
  std::vector<std::string> tokens;
  std::vector<int> columns;
  int line;
};

LineCursor tokenize(std::string_view line, int line_no) {
  LineCursor c{{}, {}, line_no};
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    c.tokens.emplace_back(line.substr(i, j - i));
    c.columns.push_back(static_cast<int>(i) + 1);
    i = j;
  }
  return c;
}

long parse_long(const LineCursor& c, std::size_t k, std::string_view text) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw ParseError("expected an integer, got '" + std::string(text) + "'", c.line, c.columns[k]);
  return v;
}

long token_long(const LineCursor& c, std::size_t k) {
  if (k >= c.tokens.size())
    throw ParseError("missing value", c.line, c.columns.empty() ? 1 : c.columns.back());
  return parse_long(c, k, c.tokens[k]);
}

bool token_bool(const LineCursor& c, std::size_t k) {
  if (k >= c.tokens.size()) throw ParseError("missing true/false", c.line, c.columns.back());
  if (c.tokens[k] == "true") return true;
  if (c.tokens[k] == "false") return false;
  throw ParseError("expected true or false, got '" + c.tokens[k] + "'", c.line, c.columns[k]);
}

// `x<count>` suffix; defaults to 1 when absent.
long count_suffix(const LineCursor& c, std::size_t k) {
  if (k >= c.tokens.size()) return 1;
  const std::string& t = c.tokens[k];
  if (t.size() < 2 || t[0] != 'x')
    throw ParseError("expected multiplicity x<count>, got '" + t + "'", c.line, c.columns[k]);
  if (k + 1 < c.tokens.size()) throw ParseError("trailing tokens", c.line, c.columns[k + 1]);
  return parse_long(c, k, std::string_view(t).substr(1));
}

long keyed_value(const LineCursor& c, std::size_t k, std::string_view key) {
  if (k >= c.tokens.size()) throw ParseError("missing " + std::string(key) + "=", c.line, c.columns.back());
  const std::string& t = c.tokens[k];
  if (t.rfind(std::string(key) + "=", 0) != 0)
    throw ParseError("expected " + std::string(key) + "=<n>, got '" + t + "'", c.line, c.columns[k]);
  return parse_long(c, k, std::string_view(t).substr(key.size() + 1));
}

SingularityGerm parse_germ(const LineCursor& c, std::size_t k, bool allow_count) {
  if (k >= c.tokens.size()) throw ParseError("missing singularity kind", c.line, c.columns.back());
  try {
    if (c.tokens[k] == "qh") {
      const long p = token_long(c, k + 1), q = token_long(c, k + 2);
      const long n = allow_count ? count_suffix(c, k + 3) : 1;
      if (!allow_count && k + 3 < c.tokens.size())
        throw ParseError("trailing tokens", c.line, c.columns[k + 3]);
      return SingularityGerm::quasi_homogeneous(p, q, n);
    }
    if (c.tokens[k] == "explicit") {
      const long mu = keyed_value(c, k + 1, "mu");
      const long b = keyed_value(c, k + 2, "branches");
      const long d = keyed_value(c, k + 3, "delta");
      const long n = allow_count ? count_suffix(c, k + 4) : 1;
      return SingularityGerm::from_data(mu, b, d, n);
    }
  } catch (const ParseError&) {
    throw;
  } catch (const InputError& e) {
    throw ParseError(e.what(), c.line, c.columns[k]);
  }
  throw ParseError("unknown singularity kind '" + c.tokens[k] + "'", c.line, c.columns[k]);
}

GroupPresentation load_group(const LineCursor& c, const AssetResolver& resolve) {
  if (c.tokens.size() != 2) throw ParseError("expected a single path", c.line, c.columns[0]);
  std::string text;
  try {
    text = resolve(c.tokens[1]);
  } catch (const InputError& e) {
    throw ParseError(e.what(), c.line, c.columns[1]);
  }
  try {
    return parse_presentation(std::string_view(text));
  } catch (const ParseError& e) {
    throw InputError(c.tokens[1] + ": " + e.what());
  }
}

}  // namespace

CurveSpec parse_curve(std::string_view text, const AssetResolver& resolve) {
  CurveSpec c;
  bool have_degree = false, have_components = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
    const LineCursor cur = tokenize(line, line_no);
    if (cur.tokens.empty()) continue;
    const std::string& key = cur.tokens[0];

    if (key == "degree") {
      c.degree = token_long(cur, 1);
      if (c.degree < 1) throw ParseError("degree must be positive", line_no, cur.columns[1]);
      have_degree = true;
    } else if (key == "components") {
      c.component_degrees.clear();
      for (std::size_t k = 1; k < cur.tokens.size(); ++k) {
        const long d = token_long(cur, k);
        if (d < 1) throw ParseError("component degree must be positive", line_no, cur.columns[k]);
        c.component_degrees.push_back(d);
      }
      if (c.component_degrees.empty()) throw ParseError("empty component list", line_no, cur.columns[0]);
      have_components = true;
    } else if (key == "transverse") {
      c.transverse = token_bool(cur, 1);
    } else if (key == "weighted_homogeneous") {
      c.weighted_homogeneous = token_bool(cur, 1);
    } else if (key == "singularity") {
      c.singularities.push_back(parse_germ(cur, 1, true));
    } else if (key == "fibered_model") {
      c.fibered_model = parse_germ(cur, 1, false);
    } else if (key == "genus") {
      const long g = token_long(cur, 1);
      if (g < 0) throw ParseError("genus must be nonnegative", line_no, cur.columns[1]);
      c.genus_override = g;
    } else if (key == "group") {
      c.group = load_group(cur, resolve);
    } else if (key == "commutator_group") {
      c.commutator_group = load_group(cur, resolve);
    } else {
      throw ParseError("unknown keyword '" + key + "'", line_no, cur.columns[0]);
    }
  }
  if (!have_degree) throw ParseError("missing 'degree' line", 1, 1);
  if (!have_components) c.component_degrees = {c.degree};
  if (std::accumulate(c.component_degrees.begin(), c.component_degrees.end(), 0L) != c.degree)
    throw InputError("component degrees do not sum to the degree");
  return c;
}

AssetResolver filesystem_resolver(std::string base_dir) {
  return [base = std::move(base_dir)](const std::string& path) {
    const std::string full = (!path.empty() && path[0] == '/') || base.empty() ? path : base + "/" + path;
    std::ifstream in(full);
    if (!in) throw InputError("cannot open '" + full + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
}

long genus_normalized(const CurveSpec& c) {
  if (c.genus_override) return *c.genus_override;
  if (c.component_count() != 1)
    throw InputError("reducible curve: give the total genus of the normalization with 'genus'");
  long g = (c.degree - 1) * (c.degree - 2) / 2;
  for (const auto& s : c.singularities) g -= s.count * s.delta;
  if (g < 0) throw InputError("singularities exceed the arithmetic genus");
  return g;
}

namespace {
void require_transverse(const CurveSpec& c) {
  if (!c.transverse) throw NotApplicable("curve is not transverse to the line at infinity");
}
}  // namespace

long euler_char_complement(const CurveSpec& c) {
  require_transverse(c);
  // Normalization: sum of (2 - 2 g_i); glue branches at each singular point;
  // remove the d points at infinity.
  long chi_curve = 2L * c.component_count() - 2 * genus_normalized(c);
  for (const auto& s : c.singularities) chi_curve -= s.count * (s.branches - 1);
  chi_curve -= c.degree;
  return 1 - chi_curve;
}

long bound_milnor(const CurveSpec& c) {
  require_transverse(c);
  long b = 2 * genus_normalized(c) + c.degree - c.singular_point_count();
  for (const auto& s : c.singularities) b += s.count * (s.mu + 2 * s.branches);
  return b;
}

long harvey_local_degree(const SingularityGerm& s, int level) {
  return level == 0 && s.branches == 1 ? s.mu : s.mu - 1;
}

long bound_harvey(const CurveSpec& c, int level) {
  require_transverse(c);
  long b = 2 * genus_normalized(c) + c.degree;
  for (const auto& s : c.singularities) b += s.count * (harvey_local_degree(s, level) + 2 * s.branches);
  return b;
}

long bound_infinity(const CurveSpec& c) {
  require_transverse(c);
  return c.degree * (c.degree - 2);
}

long wh_degree(const CurveSpec& c, int level) {
  if (!c.weighted_homogeneous) throw InputError("curve is not marked weighted homogeneous");
  if (c.singular_point_count() != 1 || c.singularities.size() != 1)
    throw InputError("weighted-homogeneous formula needs exactly one singular point");
  const long mu = c.singularities.front().mu;
  return level > 0 || c.component_count() > 1 ? mu - 1 : mu;
}

BoundReport bound_report(const CurveSpec& c) {
  BoundReport r;
  if (!c.transverse) return r;
  r.applicable = true;
  r.milnor = bound_milnor(c);
  r.harvey0 = bound_harvey(c, 0);
  r.harvey1 = bound_harvey(c, 1);
  r.infinity = bound_infinity(c);
  r.chi = euler_char_complement(c);
  return r;
}

}  // namespace alexmod
