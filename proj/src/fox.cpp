#include "alexmod/fox.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "alexmod/errors.hpp"

namespace alexmod {

namespace {

std::vector<std::string> level_names(int level, int nvars) {
  if (level == 0) return default_variable_names(nvars);
  if (nvars == 1) return {"p"};
  if (nvars == 2) return {"p", "q"};
  std::vector<std::string> names;
  for (int i = 1; i <= nvars; ++i) names.push_back("p" + std::to_string(i));
  return names;
}

}  // namespace

CoefficientSpec::CoefficientSpec(int level, int nvars, std::vector<Exponents> images,
                                 int split_index, std::vector<std::string> variable_names)
    : level_(level),
      nvars_(nvars),
      images_(std::move(images)),
      split_index_(split_index),
      names_(std::move(variable_names)) {
  if (level_ != 0 && level_ != 1) throw InputError("coefficient level must be 0 or 1");
  if (nvars_ < 1) throw InputError("coefficient system needs at least one variable");
  bool nontrivial = false;
  for (const auto& e : images_) {
    if (static_cast<int>(e.size()) != nvars_) throw InputError("generator image has wrong length");
    for (int x : e) nontrivial = nontrivial || x != 0;
  }
  if (!nontrivial) throw InputError("trivial coefficient system: every generator maps to 1");
  if (level_ == 0 && (split_index_ < 0 || split_index_ >= nvars_))
    throw InputError("split index " + std::to_string(split_index_) + " out of range");
  if (names_.empty()) names_ = level_names(level_, nvars_);
  if (static_cast<int>(names_.size()) != nvars_) throw InputError("variable name count mismatch");
}

CoefficientSpec CoefficientSpec::from_abelianization(const Abelianization& ab, int level,
                                                     int split_index) {
  std::vector<Exponents> images;
  for (std::size_t j = 0; j < ab.projection.rows(); ++j) {
    Exponents e;
    for (auto x : ab.image(static_cast<int>(j))) e.push_back(static_cast<int>(x));
    images.push_back(std::move(e));
  }
  return CoefficientSpec(level, static_cast<int>(ab.free_rank), std::move(images), split_index);
}

LaurentPoly CoefficientSpec::monomial(int generator) const {
  return LaurentPoly::monomial(nvars_, image(generator));
}

Exponents CoefficientSpec::image_of(const Word& w) const {
  Exponents e(static_cast<std::size_t>(nvars_), 0);
  for (const Letter& l : w.letters()) {
    const Exponents& x = image(l.generator);
    for (std::size_t k = 0; k < e.size(); ++k) e[k] += static_cast<int>(l.exponent) * x[k];
  }
  return e;
}

long CoefficientSpec::psi(int generator) const {
  const Exponents& x = image(generator);
  return std::accumulate(x.begin(), x.end(), 0L);
}

bool CoefficientSpec::meridional() const {
  for (int j = 0; j < generator_count(); ++j)
    if (psi(j) != 1) return false;
  return true;
}

LaurentPoly fox_derivative(const Word& w, int generator, const CoefficientSpec& spec) {
  const int n = spec.nvars();
  LaurentPoly d(n);
  Exponents prefix(static_cast<std::size_t>(n), 0);
  Exponents e(prefix.size());
  for (const Letter& l : w.letters()) {
    const Exponents& x = spec.image(l.generator);
    if (l.generator == generator) {
      // d(x^k) = 1 + x + ... + x^(k-1);  d(x^-k) = -(x^-1 + ... + x^-k)
      const std::int64_t k = l.exponent;
      const std::int64_t lo = k > 0 ? 0 : k;
      const std::int64_t hi = k > 0 ? k - 1 : -1;
      const mpz_class sign = k > 0 ? 1 : -1;
      for (std::int64_t i = lo; i <= hi; ++i) {
        for (std::size_t c = 0; c < e.size(); ++c) e[c] = prefix[c] + static_cast<int>(i) * x[c];
        d.add_term(e, sign);
      }
    }
    for (std::size_t c = 0; c < prefix.size(); ++c) prefix[c] += static_cast<int>(l.exponent) * x[c];
  }
  return d;
}

FoxJacobian jacobian(const GroupPresentation& p, const CoefficientSpec& spec) {
  if (spec.generator_count() != p.generator_count())
    throw InputError("coefficient system has " + std::to_string(spec.generator_count()) +
                     " generator images, presentation has " + std::to_string(p.generator_count()));
  const auto rows = p.relators().size();
  const auto cols = static_cast<std::size_t>(p.generator_count());
  PolyMatrix m(rows, cols, spec.nvars());
  const Exponents zero(static_cast<std::size_t>(spec.nvars()), 0);
  for (std::size_t i = 0; i < rows; ++i) {
    const Word& r = p.relators()[i];
    if (spec.image_of(r) != zero)
      throw InputError("relator " + std::to_string(i + 1) +
                       " has nonzero image; coefficient system does not factor through the group");
    LaurentPoly identity(spec.nvars());
    for (std::size_t j = 0; j < cols; ++j) {
      m(i, j) = fox_derivative(r, static_cast<int>(j), spec);
      identity += m(i, j) * (spec.monomial(static_cast<int>(j)) - LaurentPoly::constant(spec.nvars(), 1));
    }
    if (!identity.is_zero()) throw std::logic_error("Fox fundamental identity failed");
  }
  return {std::move(m), spec};
}

std::string format_jacobian(const FoxJacobian& j) {
  std::ostringstream os;
  for (std::size_t i = 0; i < j.matrix.rows(); ++i) {
    for (std::size_t c = 0; c < j.matrix.cols(); ++c)
      os << (c ? "\t" : "") << j.matrix(i, c).to_string(j.spec.variable_names());
    os << '\n';
  }
  return os.str();
}

}  // namespace alexmod
