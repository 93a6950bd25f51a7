#include "wordlab/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "wordlab/equivalence.hpp"
#include "wordlab/error.hpp"

namespace wordlab {

Partition::Partition(std::vector<std::size_t> parts, std::optional<std::size_t> bound)
    : parts_(std::move(parts)), bound_(bound) {
  for (std::size_t i = 1; i < parts_.size(); ++i) {
    if (parts_[i] > parts_[i - 1]) {
      throw DomainError("partition parts must be non-increasing");
    }
  }
  if (bound_ && !parts_.empty() && parts_[0] > *bound_) {
    throw DomainError("partition part " + std::to_string(parts_[0])
                      + " exceeds bound " + std::to_string(*bound_));
  }
}

std::uint64_t Partition::sum() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), std::uint64_t{0});
}

Partition Partition::normalized() const {
  auto parts = parts_;
  while (!parts.empty() && parts.back() == 0) {
    parts.pop_back();
  }
  return Partition(std::move(parts), bound_);
}

Partition Partition::padded(std::size_t length) const {
  auto parts = parts_;
  if (length < parts.size()
      && std::any_of(parts.begin() + static_cast<std::ptrdiff_t>(length), parts.end(),
                     [](std::size_t x) { return x != 0; })) {
    throw DomainError("cannot shorten partition to " + std::to_string(length)
                      + " parts without dropping a nonzero part");
  }
  parts.resize(length, 0);
  return Partition(std::move(parts), bound_);
}

Partition part_p(Word const& w) {
  require_binary(w, "part_p");
  auto counts = a_counts_before_b(w.view());
  std::reverse(counts.begin(), counts.end());
  return Partition(std::move(counts), count_letter(w, 'a'));
}

Partition part_s(Word const& w) {
  require_binary(w, "part_s");
  std::vector<std::size_t> parts;
  std::size_t b_after = count_letter(w, 'b');
  for (char c : w) {
    if (c == 'b') {
      --b_after;
    } else {
      parts.push_back(b_after);
    }
  }
  return Partition(std::move(parts), count_letter(w, 'b'));
}

Partition conjugate(Partition const& lambda, std::size_t length) {
  std::vector<std::size_t> parts(length, 0);
  for (std::size_t i = 0; i < length; ++i) {
    parts[i] = static_cast<std::size_t>(
        std::count_if(lambda.parts().begin(), lambda.parts().end(),
                      [i](std::size_t x) { return x > i; }));
  }
  if (lambda.largest() > length) {
    throw DomainError("conjugate: length too small for the largest part");
  }
  return Partition(std::move(parts), lambda.size());
}

Partition conjugate(Partition const& lambda) {
  return conjugate(lambda, lambda.largest());
}

Word word_from_partition(Partition const& lambda, std::size_t nb_parts,
                         std::size_t bound) {
  auto const p = lambda.padded(nb_parts).parts();
  if (!p.empty() && p[0] > bound) {
    throw DomainError("word_from_partition: part exceeds bound");
  }
  // prod_{i=k..1} a^(l_i - l_{i+1}) b, then a^(bound - l_1)
  std::string s;
  std::size_t previous = 0;
  for (std::size_t i = nb_parts; i-- > 0;) {
    s.append(p[i] - previous, 'a');
    s.push_back('b');
    previous = p[i];
  }
  s.append(bound - previous, 'a');
  return Word::binary(s);
}

Word word_from_suffix_partition(Partition const& lambda, std::size_t na_parts,
                                std::size_t bound) {
  auto const p = lambda.padded(na_parts).parts();
  if (!p.empty() && p[0] > bound) {
    throw DomainError("word_from_suffix_partition: part exceeds bound");
  }
  // b^(bound - m_1) a b^(m_1 - m_2) a ... a b^(m_k)
  std::string s(na_parts == 0 ? bound : bound - p[0], 'b');
  for (std::size_t i = 0; i < na_parts; ++i) {
    s.push_back('a');
    s.append(p[i] - (i + 1 < na_parts ? p[i + 1] : 0), 'b');
  }
  return Word::binary(s);
}

namespace {

std::vector<std::uint64_t> prefix_sums(std::vector<std::size_t> const& parts,
                                       std::size_t length) {
  std::vector<std::uint64_t> sums(length, 0);
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < length; ++i) {
    acc += i < parts.size() ? parts[i] : 0;
    sums[i] = acc;
  }
  return sums;
}

void require_same_sum(Partition const& x, Partition const& y, char const* op) {
  if (x.sum() != y.sum()) {
    throw DomainError(std::string(op) + ": partitions of different integers");
  }
}

}  // namespace

bool dominance_leq(Partition const& mu, Partition const& lambda) {
  require_same_sum(mu, lambda, "dominance_leq");
  std::size_t const n = std::max(mu.size(), lambda.size());
  auto const m = prefix_sums(mu.parts(), n);
  auto const l = prefix_sums(lambda.parts(), n);
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i] > l[i]) {
      return false;
    }
  }
  return true;
}

Partition dominance_meet(Partition const& x, Partition const& y) {
  require_same_sum(x, y, "dominance_meet");
  std::size_t const n = std::max(x.size(), y.size());
  auto const sx = prefix_sums(x.parts(), n);
  auto const sy = prefix_sums(y.parts(), n);
  // min of two concave sequences is concave, so the differences decrease
  std::vector<std::size_t> parts(n);
  std::uint64_t previous = 0;
  for (std::size_t i = 0; i < n; ++i) {
    auto const s = std::min(sx[i], sy[i]);
    parts[i] = static_cast<std::size_t>(s - previous);
    previous = s;
  }
  std::optional<std::size_t> bound;
  if (x.bound() && y.bound()) {
    bound = std::min(*x.bound(), *y.bound());
  }
  return Partition(std::move(parts), bound);
}

std::vector<std::pair<Partition, CoverRule>> brylawski_covers(Partition const& lambda) {
  std::vector<std::pair<Partition, CoverRule>> out;
  auto const& p = lambda.parts();
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (p[j] == 0) {
      continue;
    }
    for (std::size_t k = j + 1; k < p.size(); ++k) {
      auto mu = p;
      --mu[j];
      ++mu[k];
      if (!std::is_sorted(mu.rbegin(), mu.rend())) {
        continue;
      }
      bool const rule1 = k == j + 1;
      bool const rule2 = mu[j] == mu[k];
      if (rule1) {
        out.emplace_back(Partition(mu, lambda.bound()), CoverRule::adjacent);
      }
      if (rule2) {
        out.emplace_back(Partition(mu, lambda.bound()), CoverRule::equal_parts);
      }
    }
  }
  return out;
}

bool covers_by_rule(Partition const& lambda, Partition const& mu, CoverRule rule) {
  if (lambda.sum() != mu.sum()) {
    return false;
  }
  std::size_t const n = std::max(lambda.size(), mu.size());
  auto const l = lambda.padded(n).parts();
  auto const m = mu.padded(n).parts();
  std::optional<std::size_t> j;
  std::optional<std::size_t> k;
  for (std::size_t i = 0; i < n; ++i) {
    if (l[i] == m[i]) {
      continue;
    }
    if (l[i] == m[i] + 1 && !j && !k) {
      j = i;
    } else if (m[i] == l[i] + 1 && j && !k) {
      k = i;
    } else {
      return false;
    }
  }
  if (!j || !k) {
    return false;
  }
  return rule == CoverRule::adjacent ? *k == *j + 1 : m[*j] == m[*k];
}

std::uint64_t count_partitions(std::uint64_t n, std::size_t k, std::size_t l) {
  if (n > static_cast<std::uint64_t>(k) * l) {
    return 0;
  }
  auto const size = static_cast<std::size_t>(n) + 1;
  // table[b][s]: partitions of s into at most (current) parts, each <= b.
  // P(k, b, s) = P(k, b - 1, s) + P(k - 1, b, s - b)
  std::vector<std::vector<std::uint64_t>> prev(l + 1, std::vector<std::uint64_t>(size, 0));
  for (auto& row : prev) {
    row[0] = 1;  // zero parts
  }
  for (std::size_t parts = 1; parts <= k; ++parts) {
    std::vector<std::vector<std::uint64_t>> cur(l + 1, std::vector<std::uint64_t>(size, 0));
    cur[0][0] = 1;
    for (std::size_t b = 1; b <= l; ++b) {
      for (std::size_t s = 0; s < size; ++s) {
        cur[b][s] = cur[b - 1][s] + (s >= b ? prev[b][s - b] : 0);
      }
    }
    prev = std::move(cur);
  }
  return prev[l][static_cast<std::size_t>(n)];
}

namespace {

void generate(std::uint64_t remaining, std::size_t cap, std::size_t slots,
              std::vector<std::size_t>& current, std::vector<Partition>& out,
              std::size_t bound) {
  if (slots == 0) {
    if (remaining == 0) {
      out.emplace_back(current, bound);
    }
    return;
  }
  if (remaining > static_cast<std::uint64_t>(cap) * slots) {
    return;
  }
  std::size_t const top = static_cast<std::size_t>(std::min<std::uint64_t>(cap, remaining));
  for (std::size_t x = top + 1; x-- > 0;) {
    current.push_back(x);
    generate(remaining - x, x, slots - 1, current, out, bound);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> bounded_partitions(std::uint64_t n, std::size_t k, std::size_t l) {
  std::vector<Partition> out;
  std::vector<std::size_t> current;
  generate(n, l, k, current, out, l);
  return out;
}

CoverCorrespondence check_cover_correspondence(Word const& u, Word const& v) {
  require_binary(u, "check_cover_correspondence");
  require_binary(v, "check_cover_correspondence");
  CoverCorrespondence c;
  if (u.size() != v.size() || count_letter(u, 'a') != count_letter(v, 'a')) {
    return c;
  }
  for (auto const& r : spa_rewrites(u)) {
    if (r.result == v) {
      c.a_step = c.a_step || r.via_a;
      c.b_step = c.b_step || r.via_b;
    }
  }
  auto const pu = part_p(u);
  auto const pv = part_p(v);
  auto const su = part_s(u);
  auto const sv = part_s(v);
  c.prefix_rule1 = covers_by_rule(pv, pu, CoverRule::adjacent);
  c.prefix_rule2 = covers_by_rule(pv, pu, CoverRule::equal_parts);
  c.suffix_rule1 = covers_by_rule(su, sv, CoverRule::adjacent);
  c.suffix_rule2 = covers_by_rule(su, sv, CoverRule::equal_parts);
  return c;
}

}  // namespace wordlab
