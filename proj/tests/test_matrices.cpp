#include <doctest.h>

#include "oracles.hpp"
#include "wordlab/error.hpp"
#include "wordlab/matrices.hpp"

using namespace wordlab;

namespace {
Word B(std::string const& s) { return Word::binary(s); }
using Rows = std::vector<std::vector<std::uint64_t>>;
}  // namespace

TEST_CASE("Parikh vectors") {
  CHECK(parikh_vector(B("aabaabbababba")).counts == std::vector<std::uint64_t>{7, 6});
  CHECK(parikh_vector(Word()).counts == std::vector<std::uint64_t>{0, 0});
  CHECK(parikh_vector(Word::parse("abcacab")).counts == std::vector<std::uint64_t>{3, 2, 2});
}

TEST_CASE("precedence matrix fixtures") {
  CHECK(precedence_matrix(B("ab")).rows() == Rows{{1, 1}, {0, 1}});
  CHECK(precedence_matrix(Word()).rows() == Rows{{0, 0}, {0, 0}});
  CHECK(precedence_matrix(B("aabaabbababba")).rows() == Rows{{7, 27}, {15, 6}});
  CHECK(precedence_matrix(B("aabaabbababba"), PrecedenceVariant::upper_only).rows()
        == Rows{{7, 27}, {0, 6}});
}

TEST_CASE("Parikh matrix fixtures") {
  CHECK(parikh_matrix(B("ab")).rows() == Rows{{1, 1, 1}, {0, 1, 1}, {0, 0, 1}});
  CHECK(parikh_matrix(Word()).rows() == Rows{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(parikh_matrix(B("aabaabbababba")).rows()[0] == std::vector<std::uint64_t>{1, 7, 27});
}

TEST_CASE("circ rejects mismatched shapes") {
  PrecedenceMatrix x(2, PrecedenceVariant::full);
  PrecedenceMatrix y(3, PrecedenceVariant::full);
  PrecedenceMatrix z(2, PrecedenceVariant::upper_only);
  CHECK_THROWS_AS(circ(x, y), DomainError);
  CHECK_THROWS_AS(circ(x, z), DomainError);
}

TEST_CASE("entries match subword counts") {
  for (int rep = 0; rep < 200; ++rep) {
    auto const s = oracle::random_word("abc", oracle::random_size(0, 12));
    Word const w(Alphabet::from_letters("abc"), s);
    auto const p = precedence_matrix(w);
    auto const q = parikh_matrix(w);
    std::string const letters = "abc";
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(p.at(i, i) == oracle::subword_count(s, std::string(1, letters[i])));
      for (std::size_t j = 0; j < 3; ++j) {
        if (i != j) {
          CHECK(p.at(i, j) == oracle::subword_count(s, {letters[i], letters[j]}));
          // complementary off-diagonal pair
          CHECK(p.at(i, j) + p.at(j, i) == p.at(i, i) * p.at(j, j));
        }
      }
      for (std::size_t j = i + 1; j <= 3; ++j) {
        CHECK(q.at(i, j) == oracle::subword_count(s, letters.substr(i, j - i)));
      }
    }
  }
}

TEST_CASE("fold identities on small words") {
  for (std::string letters : {"ab", "abc"}) {
    auto const alphabet = Alphabet::from_letters(letters);
    for (int rep = 0; rep < 300; ++rep) {
      Word const w(alphabet, oracle::random_word(letters, oracle::random_size(0, 12)));
      CHECK(fold_precedence(w) == precedence_matrix(w));
      CHECK(fold_precedence(w, PrecedenceVariant::upper_only)
            == precedence_matrix(w, PrecedenceVariant::upper_only));
      CHECK(fold_parikh(w) == parikh_matrix(w));
    }
  }
}

TEST_CASE("equivalent_2binomial fixtures") {
  CHECK(equivalent_2binomial(B("abababa"), B("baabaab")));
  CHECK_FALSE(equivalent_2binomial(B("ab"), B("ba")));
  auto const u = Word::parse("abcacab");
  CHECK(equivalent_2binomial(u, Word::parse("caabbac", u.alphabet())));
  CHECK_THROWS_AS(equivalent_2binomial(B("ab"), Word::parse("abc")), DomainError);
}

TEST_CASE("equivalent_2binomial against all subwords of length <= 2") {
  for (std::size_t n = 0; n <= 8; ++n) {
    auto const words = oracle::binary_words(n);
    for (auto const& u : words) {
      for (auto const& v : words) {
        REQUIRE(equivalent_2binomial(B(u), B(v)) == oracle::equivalent2(u, v, "ab"));
      }
    }
  }
}

TEST_CASE("~2 is a congruence") {
  for (int rep = 0; rep < 300; ++rep) {
    auto const n = oracle::random_size(0, 8);
    auto const u = oracle::random_word("ab", n);
    auto const v = oracle::random_word("ab", n);
    auto const x = oracle::random_word("ab", oracle::random_size(0, 4));
    auto const y = oracle::random_word("ab", oracle::random_size(0, 4));
    CHECK(equivalent_2binomial(B(u), B(v)) == equivalent_2binomial(B(x + u + y), B(x + v + y)));
  }
}
