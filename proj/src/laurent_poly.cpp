#include "alexmod/laurent_poly.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "alexmod/errors.hpp"

namespace alexmod {

LaurentPoly LaurentPoly::constant(int nvars, const mpz_class& c) {
  LaurentPoly p(nvars);
  p.add_term(Exponents(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(int nvars, Exponents e, const mpz_class& c) {
  if (static_cast<int>(e.size()) != nvars) throw std::invalid_argument("exponent length mismatch");
  LaurentPoly p(nvars);
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::variable(int nvars, int index, int power) {
  Exponents e(static_cast<std::size_t>(nvars), 0);
  e.at(static_cast<std::size_t>(index)) = power;
  return monomial(nvars, std::move(e));
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

bool LaurentPoly::is_unit() const {
  return terms_.size() == 1 && abs(terms_.begin()->second) == 1;
}

mpz_class LaurentPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

Exponents LaurentPoly::min_exponents() const {
  Exponents m(static_cast<std::size_t>(nvars_), 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i) m[i] = first ? e[i] : std::min(m[i], e[i]);
    first = false;
  }
  return m;
}

Exponents LaurentPoly::max_exponents() const {
  Exponents m(static_cast<std::size_t>(nvars_), 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i) m[i] = first ? e[i] : std::max(m[i], e[i]);
    first = false;
  }
  return m;
}

long LaurentPoly::total_span() const {
  if (terms_.empty()) return 0;
  const Exponents lo = min_exponents(), hi = max_exponents();
  long s = 0;
  for (std::size_t i = 0; i < lo.size(); ++i) s += hi[i] - lo[i];
  return s;
}

mpz_class LaurentPoly::content() const {
  mpz_class g = 0;
  for (const auto& [e, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

LaurentPoly LaurentPoly::shifted(const Exponents& shift) const {
  LaurentPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    for (std::size_t i = 0; i < f.size(); ++i) f[i] += shift[i];
    out.terms_.emplace_hint(out.terms_.end(), std::move(f), c);
  }
  return out;
}

LaurentPoly LaurentPoly::normalized() const {
  if (terms_.empty()) return *this;
  Exponents lo = min_exponents();
  for (int& x : lo) x = -x;
  LaurentPoly out = shifted(lo);
  if (out.leading_coefficient() < 0) out = -out;
  return out;
}

LaurentPoly LaurentPoly::substitute(std::span<const Exponents> images, int target_nvars) const {
  if (static_cast<int>(images.size()) != nvars_)
    throw std::invalid_argument("substitution needs one image per variable");
  LaurentPoly out(target_nvars);
  for (const auto& [e, c] : terms_) {
    Exponents f(static_cast<std::size_t>(target_nvars), 0);
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t k = 0; k < f.size(); ++k) f[k] += e[i] * images[i][k];
    out.add_term(f, c);
  }
  return out;
}

mpq_class LaurentPoly::evaluate(std::span<const mpq_class> point) const {
  if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("point dimension");
  mpq_class sum = 0;
  for (const auto& [e, c] : terms_) {
    mpq_class term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (point[i] == 0) throw std::domain_error("evaluation at a zero coordinate");
      mpq_class base = e[i] > 0 ? point[i] : mpq_class(1) / point[i];
      for (int k = 0; k < std::abs(e[i]); ++k) term *= base;
    }
    sum += term;
  }
  return sum;
}

void LaurentPoly::add_term(const Exponents& e, const mpz_class& c) {
  if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("exponent length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPoly::check_nvars(const LaurentPoly& o) const {
  if (o.nvars_ != nvars_) throw std::invalid_argument("variable-count mismatch");
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_nvars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_nvars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const mpz_class& k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= k;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_nvars(b);
  LaurentPoly out(a.nvars_);
  Exponents e(static_cast<std::size_t>(a.nvars_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

std::string LaurentPoly::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const mpz_class mag = abs(c);
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    bool wrote = false;
    const bool is_const = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    if (mag != 1 || is_const) {
      os << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << '*';
      os << names[i];
      if (e[i] != 1) os << '^' << e[i];
      wrote = true;
    }
  }
  return os.str();
}

std::string LaurentPoly::to_string() const {
  const auto names = default_variable_names(nvars_);
  return to_string(names);
}

std::vector<std::string> default_variable_names(int nvars) {
  if (nvars == 1) return {"t"};
  std::vector<std::string> names;
  for (int i = 1; i <= nvars; ++i) names.push_back("t" + std::to_string(i));
  return names;
}

LaurentPoly parse_laurent(std::string_view text, std::span<const std::string> names) {
  const int n = static_cast<int>(names.size());
  LaurentPoly out(n);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& what) -> void {
    throw ParseError(what, 1, static_cast<int>(i) + 1);
  };
  auto read_int = [&]() -> long {
    if (i >= text.size()) fail("missing exponent");
    std::size_t j = i;
    if (j < text.size() && (text[j] == '-' || text[j] == '+')) ++j;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    long v = 0;
    const char* first = text.data() + i + (text[i] == '+' ? 1 : 0);
    auto [ptr, ec] = std::from_chars(first, text.data() + j, v);
    if (ec != std::errc() || ptr != text.data() + j) fail("malformed integer");
    i = j;
    return v;
  };

  skip_ws();
  if (i == text.size()) fail("empty polynomial");
  bool first_term = true;
  while (true) {
    skip_ws();
    if (i == text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (!first_term) {
      fail("expected '+' or '-'");
    }
    first_term = false;
    mpz_class coef = 1;
    Exponents e(static_cast<std::size_t>(n), 0);
    bool any = false;
    while (i < text.size()) {
      skip_ws();
      if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        std::size_t j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        coef *= mpz_class(std::string(text.substr(i, j - i)));
        i = j;
      } else if (i < text.size() && (std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
        std::size_t j = i;
        while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
        const std::string_view name = text.substr(i, j - i);
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end()) fail("unknown variable '" + std::string(name) + "'");
        i = j;
        int power = 1;
        if (i < text.size() && text[i] == '^') {
          ++i;
          power = static_cast<int>(read_int());
        }
        e[static_cast<std::size_t>(it - names.begin())] += power;
      } else {
        fail("expected coefficient or variable");
      }
      any = true;
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    if (!any) fail("empty term");
    out.add_term(e, coef * sign);
  }
  return out;
}

long span_degree(const LaurentPoly& f, int var) {
  if (f.is_zero()) throw std::domain_error("span_degree of the zero polynomial");
  const auto v = static_cast<std::size_t>(var);
  return f.max_exponents().at(v) - f.min_exponents().at(v);
}

bool associates(const LaurentPoly& f, const LaurentPoly& g) {
  return f.normalized() == g.normalized();
}

}  // namespace alexmod
