#include "doctest.h"

#include <random>
#include <sstream>

#include "alexmod/abelianization.hpp"
#include "alexmod/errors.hpp"
#include "alexmod/presentation.hpp"
#include "alexmod/word.hpp"
#include "support/oracles.hpp"

using namespace alexmod;

namespace {

const std::vector<std::string> abc = {"a", "b", "c"};

GroupPresentation parse(const std::string& s) { return parse_presentation(std::string_view(s)); }

// Exponent-sum matrix reduced by hand: rows (1,-1) etc. give these images.
std::vector<std::int64_t> image(const Abelianization& ab, int g) { return ab.image(g); }

}  // namespace

TEST_CASE("word concatenation reduces freely") {
  CHECK((Word{{0, 1}} * Word{{0, -1}}).is_identity());
  CHECK(Word{{0, 1}, {1, 1}} * Word{{1, -1}, {2, 1}} == Word{{0, 1}, {2, 1}});
  CHECK(Word{{0, 2}} * Word{{0, 3}} == Word{{0, 5}});
  CHECK(Word{{0, 2}, {0, -2}, {1, 1}} == Word{{1, 1}});
  CHECK(to_string(Word{{0, 1}, {1, -2}}, abc) == "a b^-2");
}

TEST_CASE("word inverse, power and cyclic reduction") {
  const Word w{{0, 1}, {1, 2}, {0, -1}};
  CHECK(w.inverse() == Word{{0, 1}, {1, -2}, {0, -1}});
  CHECK(w.power(3) == Word{{0, 1}, {1, 6}, {0, -1}});
  CHECK(w.power(0).is_identity());
  CHECK(w.power(-1) == w.inverse());
  CHECK(w.cyclically_reduced() == Word{{1, 2}});
  CHECK(Word{{0, 2}, {1, 1}, {0, 1}}.cyclically_reduced() == Word{{0, 3}, {1, 1}});
  CHECK(w.exponent_sums(2) == std::vector<std::int64_t>{0, 2});
}

TEST_CASE("property: free group axioms on random words") {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 300; ++i) {
    const Word u = oracle::random_word(rng, 3, 6), v = oracle::random_word(rng, 3, 6),
               w = oracle::random_word(rng, 3, 6);
    CHECK((u * v) * w == u * (v * w));
    CHECK((u * u.inverse()).is_identity());
    CHECK((u.inverse() * u).is_identity());
    CHECK(u.inverse().inverse() == u);
    CHECK((u * v).inverse() == v.inverse() * u.inverse());
    CHECK(u * Word{} == u);
    for (std::size_t k = 1; k < u.letters().size(); ++k)
      CHECK(u.letters()[k].generator != u.letters()[k - 1].generator);
  }
}

TEST_CASE("parse presentations") {
  const auto p = parse("generators a b\nrelators a b a b^-1 a^-1 b^-1\n");
  CHECK(p.generator_count() == 2);
  REQUIRE(p.relators().size() == 1);
  CHECK(p.relators()[0] == Word{{0, 1}, {1, 1}, {0, 1}, {1, -1}, {0, -1}, {1, -1}});

  const auto eq = parse("# trefoil\ngenerators a b\nrelator a b a = b a b  # braid relation\n");
  CHECK(eq == p);

  const auto b4 = parse(
      "generators s1 s2 s3\nrelator s1 s3 = s3 s1\nrelator s1 s2 s1 = s2 s1 s2\nrelator s2 s3 s2 = s3 s2 s3\n");
  CHECK(b4.generator_count() == 3);
  CHECK(b4.relators().size() == 3);
  CHECK(b4.find_generator("s3") == 2);
  CHECK(b4.find_generator("s4") == -1);
}

TEST_CASE("presentation errors carry locations") {
  const auto fails = [](const std::string& text, int line, int column) {
    try {
      parse(text);
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
      CHECK(e.column() == column);
      return true;
    }
    return false;
  };
  CHECK(fails("generators a\nrelators a^0\n", 2, 12));
  CHECK(fails("generators a b\nrelator a c\n", 2, 11));
  CHECK(fails("generators a\nrelator a^x\n", 2, 11));
  CHECK(fails("relator a\n", 1, 1));
  CHECK(fails("generators a a\n", 1, 14));
  CHECK(fails("generators a\nfoo a\n", 2, 1));
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(GroupPresentation({"a"}, {Word{{1, 1}}}), InputError);
}

TEST_CASE("property: print/parse round trip") {
  std::mt19937_64 rng(7);
  const std::vector<std::string> names = {"x", "y2", "long_name", "w"};
  for (int i = 0; i < 250; ++i) {
    std::vector<Word> rel;
    const int n = static_cast<int>(rng() % 4);
    for (int k = 0; k < n; ++k) rel.push_back(oracle::random_word(rng, 4, 7, 4));
    const GroupPresentation p(names, rel);
    for (const Word& r : p.relators()) CHECK(r == r.cyclically_reduced());
    const std::string text = print_presentation(p);
    CHECK(parse(text) == p);
    std::istringstream in(text);
    CHECK(parse_presentation(in) == p);
  }
}

TEST_CASE("abelianization examples") {
  const auto trefoil = abelianize(parse("generators a b\nrelator a b a = b a b\n"));
  CHECK(trefoil.free_rank == 1);
  CHECK(trefoil.torsion.empty());
  CHECK(image(trefoil, 0) == std::vector<std::int64_t>{1});
  CHECK(image(trefoil, 1) == std::vector<std::int64_t>{1});

  const auto quartic = abelianize(parse("generators a b\nrelator a b a = b a b\nrelator a^2 = b^2\n"));
  CHECK(quartic.free_rank == 1);
  CHECK(quartic.torsion.empty());
  CHECK(image(quartic, 0) == std::vector<std::int64_t>{1});

  const auto b4c = abelianize(parse(
      "generators p q a b c\nrelator p a p^-1 = b\nrelator p b p^-1 = b^2 c\nrelator q a q^-1 = c\n"
      "relator q b q^-1 = c^3 a^-1 c\nrelator c = a^-1 b\n"));
  CHECK(b4c.free_rank == 2);
  CHECK(b4c.torsion.empty());
  CHECK(image(b4c, 0) == std::vector<std::int64_t>{1, 0});
  CHECK(image(b4c, 1) == std::vector<std::int64_t>{0, 1});
  for (int g = 2; g < 5; ++g) CHECK(image(b4c, g) == std::vector<std::int64_t>{0, 0});

  const auto oka = abelianize(parse("generators a b\nrelator a^3 = b^5\n"));
  CHECK(image(oka, 0) == std::vector<std::int64_t>{5});
  CHECK(image(oka, 1) == std::vector<std::int64_t>{3});

  const auto finite = abelianize(parse("generators a b\nrelator a^2\nrelator b^3\n"));
  CHECK(finite.free_rank == 0);
  CHECK(finite.torsion == std::vector<mpz_class>{6});

  const auto mixed = abelianize(parse("generators a b c\nrelator a^4 b^-2\n"));
  CHECK(mixed.free_rank == 2);
  CHECK(mixed.torsion == std::vector<mpz_class>{2});
}

TEST_CASE("property: projection kills relators; invariance under conjugation and inversion") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 250; ++i) {
    const int g = 2 + static_cast<int>(rng() % 3);
    std::vector<std::string> names;
    for (int k = 0; k < g; ++k) names.push_back("x" + std::to_string(k));
    std::vector<Word> rel;
    const int n = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < n; ++k) rel.push_back(oracle::random_word(rng, g, 5));
    const GroupPresentation p(names, rel);
    const Abelianization ab = abelianize(p);

    for (const Word& r : p.relators()) {
      const auto sums = r.exponent_sums(g);
      for (std::size_t c = 0; c < ab.free_rank; ++c) {
        mpz_class s = 0;
        for (int j = 0; j < g; ++j) s += ab.projection(static_cast<std::size_t>(j), c) * sums[static_cast<std::size_t>(j)];
        CHECK(s == 0);
      }
    }
    for (std::size_t k = 1; k < ab.torsion.size(); ++k) CHECK(ab.torsion[k] % ab.torsion[k - 1] == 0);

    std::vector<Word> changed;
    for (const Word& r : p.relators()) {
      const Word w = oracle::random_word(rng, g, 4);
      changed.push_back(rng() % 2 ? w * r * w.inverse() : r.inverse());
    }
    const Abelianization ab2 = abelianize(GroupPresentation(names, changed));
    CHECK(ab2.free_rank == ab.free_rank);
    CHECK(ab2.torsion == ab.torsion);
    CHECK(ab2.projection == ab.projection);
  }
}
