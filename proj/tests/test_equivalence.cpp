#include <doctest.h>

#include "oracles.hpp"
#include "wordlab/equivalence.hpp"
#include "wordlab/error.hpp"

using namespace wordlab;

namespace {

Word B(std::string const& s) { return Word::binary(s); }

std::vector<std::string> strs(std::vector<Word> const& words) {
  std::vector<std::string> out;
  for (auto const& w : words) {
    out.push_back(w.str());
  }
  return out;
}

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// S_b and counts determine the class of a binary word.
bool same_class(std::string const& u, std::string const& v) {
  return oracle::equivalent2(u, v, "ab");
}

}  // namespace

TEST_CASE("rewrite successors") {
  auto const next = strs(rewrite_successors(B("abababa")));
  CHECK(std::count(next.begin(), next.end(), "baaabba") == 1);
  CHECK(std::count(next.begin(), next.end(), "baabaab") == 1);
  CHECK(rewrite_successors(B("aabb")).empty());
  CHECK(strs(rewrite_successors(B("abba"))) == std::vector<std::string>{"baab"});
  CHECK(strs(rewrite_predecessors(B("baab"))) == std::vector<std::string>{"abba"});
}

TEST_CASE("successors and predecessors match the definition") {
  for (std::size_t n = 0; n <= 10; ++n) {
    for (auto const& u : oracle::binary_words(n)) {
      auto const next = strs(rewrite_successors(B(u)));
      REQUIRE(next == sorted(oracle::rewrite_steps(u)));
      REQUIRE(strs(rewrite_predecessors(B(u))) == sorted(oracle::rewrite_steps_back(u)));
      for (auto const& v : next) {
        // u -> v keeps the class and goes up lexicographically
        REQUIRE(same_class(u, v));
        REQUIRE(u < v);
      }
    }
  }
}

TEST_CASE("spa steps are the -> steps with a one-letter middle") {
  for (std::size_t n = 0; n <= 10; ++n) {
    for (auto const& u : oracle::binary_words(n)) {
      std::vector<std::string> expected;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = i + 2; j + 1 < n; ++j) {
          auto const middle = u.substr(i + 2, j - i - 2);
          bool const one_letter = middle.find('a') == std::string::npos
                                  || middle.find('b') == std::string::npos;
          if (u.substr(i, 2) == "ab" && u.substr(j, 2) == "ba" && one_letter) {
            expected.push_back(u.substr(0, i) + "ba" + middle + "ab" + u.substr(j + 2));
          }
        }
      }
      REQUIRE(strs(spa_successors(B(u))) == sorted(expected));
    }
  }
  auto const steps = spa_rewrites(B("abba"));
  REQUIRE(steps.size() == 1);
  CHECK(steps[0].via_a);
  CHECK(steps[0].via_b);
}

TEST_CASE("switching one ab to ba loses exactly one ab") {
  for (int rep = 0; rep < 200; ++rep) {
    auto const x = oracle::random_word("ab", oracle::random_size(0, 6));
    auto const y = oracle::random_word("ab", oracle::random_size(0, 6));
    CHECK(binom(B(x + "ab" + y), B("ab")) == binom(B(x + "ba" + y), B("ab")) + 1);
  }
}

TEST_CASE("Psi-decomposition of the worked pair") {
  std::vector<std::pair<std::string, std::string>> const expected{
      {"aabab", "babaa"}, {"b", "b"},       {"a", "a"},
      {"ababbb", "bbabba"}, {"a", "a"},     {"baa", "aab"},
      {"babaaaa", "aaaaabb"}, {"aab", "baa"}};
  std::string u;
  std::string v;
  for (auto const& [x, y] : expected) {
    u += x;
    v += y;
  }
  auto const d = psi_decomposition(B(u), B(v));
  REQUIRE(d.pairs.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(d.pairs[i].first.str() == expected[i].first);
    CHECK(d.pairs[i].second.str() == expected[i].second);
  }
  CHECK(psi_decomposition(B("abba"), B("abba")).pairs.size() == 4);
  CHECK(psi_decomposition(B("ab"), B("ba")).pairs.size() == 1);
  CHECK_THROWS_AS(psi_decomposition(B("ab"), B("bb")), DomainError);
}

TEST_CASE("binom differences add up over the decomposition") {
  for (int rep = 0; rep < 300; ++rep) {
    auto const u = oracle::random_word("ab", oracle::random_size(1, 14));
    auto v = u;
    std::shuffle(v.begin(), v.end(), oracle::rng());
    auto const d = psi_decomposition(B(u), B(v));
    std::int64_t binom_sum = 0;
    std::uint64_t dist_sum = 0;
    for (auto const& [x, y] : d.pairs) {
      CHECK(count_letter(x, 'a') == count_letter(y, 'a'));
      binom_sum += static_cast<std::int64_t>(binom(x, B("ab")))
                   - static_cast<std::int64_t>(binom(y, B("ab")));
      dist_sum += distance(x, y);
    }
    CHECK(binom_sum == static_cast<std::int64_t>(binom(B(u), B("ab")))
                           - static_cast<std::int64_t>(binom(B(v), B("ab"))));
    CHECK(dist_sum == distance(B(u), B(v)));
  }
}

TEST_CASE("undecomposable pairs") {
  // (au, bv) undecomposable: binom(au, ab) > binom(bv, ab), and every proper
  // prefix of au holds more a's than the prefix of bv of the same length
  for (std::size_t n = 2; n <= 10; ++n) {
    for (auto const& u : oracle::binary_words(n)) {
      if (u[0] != 'a') {
        continue;
      }
      for (int rep = 0; rep < 4; ++rep) {
        auto v = u;
        std::shuffle(v.begin(), v.end(), oracle::rng());
        if (v[0] != 'b') {
          continue;
        }
        if (psi_decomposition(B(u), B(v)).pairs.size() != 1) {
          continue;
        }
        CHECK(binom(B(u), B("ab")) > binom(B(v), B("ab")));
        long balance = 0;
        for (std::size_t i = 0; i + 1 < n; ++i) {
          balance += (u[i] == 'a') - (v[i] == 'a');
          CHECK(balance > 0);
        }
      }
    }
  }
}

TEST_CASE("distance") {
  CHECK(distance(B("ab"), B("ba")) == 1);
  CHECK(distance(B("abba"), B("abba")) == 0);
  CHECK(distance(B("abababa"), B("baabaab")) == 2);
  for (int rep = 0; rep < 300; ++rep) {
    auto const n = oracle::random_size(0, 12);
    auto const u = oracle::random_word("ab", n);
    auto v = u;
    auto z = u;
    std::shuffle(v.begin(), v.end(), oracle::rng());
    std::shuffle(z.begin(), z.end(), oracle::rng());
    auto const duv = distance(B(u), B(v));
    CHECK(duv == oracle::symmetric_difference(u, v));
    CHECK(duv == distance(B(v), B(u)));
    CHECK(distance(B(u), B(z)) <= duv + distance(B(v), B(z)));
    CHECK((duv == 0) == (u == v));
    if (same_class(u, v)) {
      CHECK(duv % 2 == 0);
    }
    // a single step moves d(., z) by -2, 0 or +2
    for (auto const& w : rewrite_successors(B(u))) {
      auto const before = static_cast<long>(distance(B(u), B(z)));
      auto const after = static_cast<long>(distance(w, B(z)));
      CHECK((after - before == -2 || after == before || after - before == 2));
    }
  }
}

TEST_CASE("minimal derivations") {
  auto const one = minimal_derivation(B("abababa"), B("baabaab"));
  CHECK(one.length() == 1);
  CHECK(minimal_derivation(B("abba"), B("abba")).length() == 0);
  auto const d = minimal_derivation(B("aabbbaa"), B("baabaab"));
  CHECK(d.length() == distance(B("aabbbaa"), B("baabaab")) / 2);
  CHECK(d.length() == oracle::bfs_distance("aabbbaa", "baabaab"));
  CHECK_THROWS_AS(minimal_derivation(B("ab"), B("ba")), DomainError);
  CHECK_THROWS_AS(minimal_derivation(B("ab"), B("aab")), DomainError);
}

TEST_CASE("derivation steps are single rewrites and as short as BFS allows") {
  for (int rep = 0; rep < 150; ++rep) {
    auto const n = oracle::random_size(2, 10);
    auto const u = oracle::random_word("ab", n);
    auto const cls = oracle::closure(u, [](std::string const& x) {
      auto out = oracle::rewrite_steps(x);
      auto back = oracle::rewrite_steps_back(x);
      out.insert(out.end(), back.begin(), back.end());
      return out;
    });
    std::vector<std::string> members(cls.begin(), cls.end());
    auto const v = members[oracle::random_size(0, members.size() - 1)];
    auto const d = minimal_derivation(B(u), B(v));
    REQUIRE(d.steps.front().word.str() == u);
    REQUIRE(d.steps.back().word.str() == v);
    CHECK(d.length() == distance(B(u), B(v)) / 2);
    CHECK(d.length() == oracle::bfs_distance(u, v));
    for (std::size_t k = 1; k < d.steps.size(); ++k) {
      auto const& prev = d.steps[k - 1].word.str();
      auto const& cur = d.steps[k].word.str();
      auto fwd = oracle::rewrite_steps(prev);
      auto back = oracle::rewrite_steps_back(prev);
      CHECK((std::count(fwd.begin(), fwd.end(), cur) + std::count(back.begin(), back.end(), cur))
            > 0);
      CHECK(d.steps[k].swap_positions.size() == 2);
    }
  }
}

TEST_CASE("init and final words") {
  CHECK(init_word({7, 6, 27}).str() == "aaaabbbabbbaa");
  CHECK(final_word({7, 6, 27}).str() == "bbaaaaaababbb");
  CHECK(init_word({4, 3, 6}).str() == "aabbbaa");
  CHECK(final_word({4, 3, 6}).str() == "baabaab");
  CHECK(init_word({3, 2, 6}).str() == "aaabb");
  CHECK(final_word({3, 2, 6}).str() == "aaabb");
  CHECK(init_word({0, 0, 0}).empty());
  CHECK_THROWS_AS(init_word({2, 2, 5}), DomainError);
  CHECK_THROWS_AS(final_word({2, 2, 5}), DomainError);
}

TEST_CASE("init and final are the lexicographic extremes and avoid their patterns") {
  for (std::size_t n = 0; n <= 10; ++n) {
    std::map<std::tuple<std::size_t, std::size_t, std::uint64_t>, std::vector<std::string>> classes;
    for (auto const& s : oracle::binary_words(n)) {
      auto const sig = signature_of(B(s));
      classes[{sig.na, sig.nb, sig.m}].push_back(s);
    }
    for (auto const& [key, members] : classes) {
      auto const [na, nb, m] = key;
      auto const lo = init_word({na, nb, m}).str();
      auto const hi = final_word({na, nb, m}).str();
      CHECK(lo == members.front());
      CHECK(hi == members.back());
      // final avoids ab...ba, init avoids ba...ab
      auto const ab = hi.find("ab");
      CHECK((ab == std::string::npos || hi.find("ba", ab + 2) == std::string::npos));
      auto const ba = lo.find("ba");
      CHECK((ba == std::string::npos || lo.find("ab", ba + 2) == std::string::npos));
      for (auto const& s : members) {
        CHECK(is_singleton_class(B(s)) == (members.size() == 1));
      }
    }
  }
}

TEST_CASE("singletons and class counts") {
  CHECK(is_singleton_class(B("aba")));
  CHECK_FALSE(is_singleton_class(B("abba")));
  CHECK(class_count(3) == 8);
  for (std::size_t n = 0; n <= 12; ++n) {
    std::set<std::tuple<std::size_t, std::size_t, std::uint64_t>> seen;
    for (auto const& s : oracle::binary_words(n)) {
      auto const sig = signature_of(B(s));
      seen.emplace(sig.na, sig.nb, sig.m);
    }
    CHECK(seen.size() == class_count(n));
  }
}

TEST_CASE("closure of -> both ways is the ~2 class") {
  for (std::size_t n = 0; n <= 8; ++n) {
    auto const words = oracle::binary_words(n);
    for (auto const& u : words) {
      auto const cls = oracle::closure(u, [](std::string const& x) {
        auto out = strs(rewrite_successors(B(x)));
        auto back = strs(rewrite_predecessors(B(x)));
        out.insert(out.end(), back.begin(), back.end());
        return out;
      });
      std::set<std::string> brute;
      for (auto const& v : words) {
        if (same_class(u, v)) {
          brute.insert(v);
        }
      }
      REQUIRE(cls == brute);
    }
  }
}
