#pragma once

// Slow, obviously-correct reference implementations used only by tests.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

inline std::vector<std::string> words_over(std::string const& letters, std::size_t n) {
  std::vector<std::string> out{""};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::string> next;
    for (auto const& w : out) {
      for (char c : letters) {
        next.push_back(w + c);
      }
    }
    out = std::move(next);
  }
  return out;
}

inline std::vector<std::string> binary_words(std::size_t n) { return words_over("ab", n); }

// Occurrences of u in w, by walking every strictly increasing index tuple.
inline std::uint64_t subword_count(std::string const& w, std::string const& u) {
  std::uint64_t count = 0;
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t from, std::size_t k) {
    if (k == u.size()) {
      ++count;
      return;
    }
    for (std::size_t i = from; i < w.size(); ++i) {
      if (w[i] == u[k]) {
        walk(i + 1, k + 1);
      }
    }
  };
  walk(0, 0);
  return count;
}

// u ~2 v: same count of every subword of length <= 2 over the letters used.
inline bool equivalent2(std::string const& u, std::string const& v, std::string const& letters) {
  if (u.size() != v.size()) {
    return false;
  }
  for (std::size_t len = 1; len <= 2; ++len) {
    for (auto const& x : words_over(letters, len)) {
      if (subword_count(u, x) != subword_count(v, x)) {
        return false;
      }
    }
  }
  return true;
}

inline bool fair_by_definition(std::string const& w) {
  std::set<char> letters(w.begin(), w.end());
  for (char a : letters) {
    for (char b : letters) {
      if (a < b && subword_count(w, {a, b}) != subword_count(w, {b, a})) {
        return false;
      }
    }
  }
  return true;
}

inline bool palindrome(std::string const& w) {
  return std::equal(w.begin(), w.end(), w.rbegin());
}

// Balanced by the definition: all pairs of equal-length factors.
inline bool balanced(std::string const& w) {
  for (std::size_t len = 1; len <= w.size(); ++len) {
    for (std::size_t i = 0; i + len <= w.size(); ++i) {
      for (std::size_t j = 0; j + len <= w.size(); ++j) {
        auto const x = std::count(w.begin() + i, w.begin() + i + len, 'a');
        auto const y = std::count(w.begin() + j, w.begin() + j + len, 'a');
        if (x - y > 1 || y - x > 1) {
          return false;
        }
      }
    }
  }
  return true;
}

// Every u -> v step, written out from the definition with substring search.
inline std::vector<std::string> rewrite_steps(std::string const& u) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i + 1 < u.size(); ++i) {
    for (std::size_t j = i + 2; j + 1 < u.size(); ++j) {
      if (u.substr(i, 2) == "ab" && u.substr(j, 2) == "ba") {
        out.push_back(u.substr(0, i) + "ba" + u.substr(i + 2, j - i - 2) + "ab" + u.substr(j + 2));
      }
    }
  }
  return out;
}

inline std::vector<std::string> rewrite_steps_back(std::string const& u) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i + 1 < u.size(); ++i) {
    for (std::size_t j = i + 2; j + 1 < u.size(); ++j) {
      if (u.substr(i, 2) == "ba" && u.substr(j, 2) == "ab") {
        out.push_back(u.substr(0, i) + "ab" + u.substr(i + 2, j - i - 2) + "ba" + u.substr(j + 2));
      }
    }
  }
  return out;
}

// BFS closure under a neighbour function.
inline std::set<std::string> closure(
    std::string const& start,
    std::function<std::vector<std::string>(std::string const&)> const& next) {
  std::set<std::string> seen{start};
  std::deque<std::string> todo{start};
  while (!todo.empty()) {
    auto const u = todo.front();
    todo.pop_front();
    for (auto const& v : next(u)) {
      if (seen.insert(v).second) {
        todo.push_back(v);
      }
    }
  }
  return seen;
}

// Shortest number of single -> steps (either direction) from u to v.
inline std::size_t bfs_distance(std::string const& u, std::string const& v) {
  std::map<std::string, std::size_t> depth{{u, 0}};
  std::deque<std::string> todo{u};
  while (!todo.empty()) {
    auto const x = todo.front();
    todo.pop_front();
    if (x == v) {
      return depth[x];
    }
    auto nexts = rewrite_steps(x);
    auto back = rewrite_steps_back(x);
    nexts.insert(nexts.end(), back.begin(), back.end());
    for (auto const& y : nexts) {
      if (depth.emplace(y, depth[x] + 1).second) {
        todo.push_back(y);
      }
    }
  }
  return static_cast<std::size_t>(-1);
}

// Left(w) as an explicit cell set: (i, j) with i <= a's before the j-th b.
inline std::set<std::pair<std::size_t, std::size_t>> left_cells(std::string const& w) {
  std::set<std::pair<std::size_t, std::size_t>> cells;
  std::size_t a = 0;
  std::size_t j = 0;
  for (char c : w) {
    if (c == 'a') {
      ++a;
    } else {
      ++j;
      for (std::size_t i = 1; i <= a; ++i) {
        cells.emplace(i, j);
      }
    }
  }
  return cells;
}

inline std::size_t symmetric_difference(std::string const& u, std::string const& v) {
  auto const x = left_cells(u);
  auto const y = left_cells(v);
  std::vector<std::pair<std::size_t, std::size_t>> d;
  std::set_symmetric_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(d));
  return d.size();
}

// All partitions of n padded with zeros to exactly n parts.
inline std::vector<std::vector<std::size_t>> partitions_of(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t, std::size_t)> go = [&](std::size_t rest, std::size_t cap) {
    if (rest == 0) {
      auto p = cur;
      p.resize(n, 0);
      out.push_back(p);
      return;
    }
    for (std::size_t x = std::min(rest, cap); x >= 1; --x) {
      cur.push_back(x);
      go(rest - x, x);
      cur.pop_back();
    }
  };
  go(n, n);
  return out;
}

inline bool dominated(std::vector<std::size_t> const& mu, std::vector<std::size_t> const& lambda) {
  std::size_t sm = 0;
  std::size_t sl = 0;
  for (std::size_t i = 0; i < std::max(mu.size(), lambda.size()); ++i) {
    sm += i < mu.size() ? mu[i] : 0;
    sl += i < lambda.size() ? lambda[i] : 0;
    if (sm > sl) {
      return false;
    }
  }
  return true;
}

// Cover pairs (lambda, mu) of dominance order on partitions of n.
inline std::set<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> dominance_covers(
    std::size_t n) {
  auto const all = partitions_of(n);
  std::set<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> covers;
  for (auto const& l : all) {
    for (auto const& m : all) {
      if (l == m || !dominated(m, l)) {
        continue;
      }
      bool between = false;
      for (auto const& z : all) {
        if (z != l && z != m && dominated(m, z) && dominated(z, l)) {
          between = true;
          break;
        }
      }
      if (!between) {
        covers.emplace(l, m);
      }
    }
  }
  return covers;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(20240611);
  return engine;
}

inline std::string random_word(std::string const& letters, std::size_t n) {
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  std::string w;
  for (std::size_t i = 0; i < n; ++i) {
    w.push_back(letters[pick(rng())]);
  }
  return w;
}

inline std::size_t random_size(std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng());
}

}  // namespace oracle
