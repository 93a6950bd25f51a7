#include "wordlab/kernels.hpp"

#include <algorithm>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wordlab::kernels {

namespace {

// Bit i set means letter i is b.
bool fair_mask(std::uint64_t mask, std::size_t n) {
  std::uint64_t ab = 0;
  std::uint64_t na = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if ((mask >> i) & 1U) {
      ab += na;
    } else {
      ++na;
    }
  }
  return 2 * ab == na * (n - na);
}

std::uint64_t signature_slot(std::uint64_t mask, std::size_t n) {
  std::uint64_t ab = 0;
  std::uint64_t na = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if ((mask >> i) & 1U) {
      ab += na;
    } else {
      ++na;
    }
  }
  // m <= n^2 / 4, so (na, m) packs into na * stride + m
  std::uint64_t const stride = n * n / 4 + 1;
  return na * stride + ab;
}

void set_jobs(int jobs) {
#ifdef _OPENMP
  if (jobs > 0) {
    omp_set_num_threads(jobs);
  }
#else
  (void)jobs;
#endif
}

}  // namespace

std::vector<std::vector<bool>> fair_factor_table(std::string_view w) {
  std::size_t const n = w.size();
  // a[p]: a's in w[0, p); s[p]: sum over b's in w[0, p) of the a's before
  std::vector<std::uint64_t> a(n + 1, 0);
  std::vector<std::uint64_t> s(n + 1, 0);
  for (std::size_t p = 0; p < n; ++p) {
    a[p + 1] = a[p] + (w[p] == 'a');
    s[p + 1] = s[p] + (w[p] == 'b' ? a[p] : 0);
  }
  std::vector<std::vector<bool>> fair(n + 1, std::vector<bool>(n + 1, false));
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = i; j <= n; ++j) {
      std::uint64_t const na = a[j] - a[i];
      std::uint64_t const nb = (j - i) - na;
      std::uint64_t const ab = (s[j] - s[i]) - a[i] * nb;
      fair[i][j] = 2 * ab == na * nb;
    }
  }
  return fair;
}

std::vector<std::size_t> fair_lengths_from(std::string_view w, std::size_t start,
                                           std::vector<std::vector<bool>> const& fair) {
  std::size_t const n = w.size();
  constexpr auto inf = std::numeric_limits<std::size_t>::max();
  // best[j]: fair length of w[start, j); single letters are fair so it is
  // always finite
  std::vector<std::size_t> best(n + 1, inf);
  best[start] = 0;
  for (std::size_t j = start + 1; j <= n; ++j) {
    for (std::size_t k = start; k < j; ++k) {
      if (best[k] != inf && fair[k][j]) {
        best[j] = std::min(best[j], best[k] + 1);
      }
    }
  }
  return {best.begin() + static_cast<std::ptrdiff_t>(start) + 1, best.end()};
}

std::uint64_t fair_count_brute_serial(std::size_t n) {
  std::uint64_t count = 0;
  std::uint64_t const total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    count += fair_mask(mask, n);
  }
  return count;
}

std::uint64_t fair_count_brute_parallel(std::size_t n, int jobs) {
  set_jobs(jobs);
  std::uint64_t count = 0;
  auto const total = static_cast<std::int64_t>(std::uint64_t{1} << n);
#pragma omp parallel for reduction(+ : count) schedule(static)
  for (std::int64_t mask = 0; mask < total; ++mask) {
    count += fair_mask(static_cast<std::uint64_t>(mask), n);
  }
  return count;
}

std::uint64_t signature_count_serial(std::size_t n) {
  std::vector<bool> seen((n + 1) * (n * n / 4 + 1), false);
  std::uint64_t const total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    seen[signature_slot(mask, n)] = true;
  }
  return static_cast<std::uint64_t>(std::count(seen.begin(), seen.end(), true));
}

std::uint64_t signature_count_parallel(std::size_t n, int jobs) {
  set_jobs(jobs);
  std::size_t const slots = (n + 1) * (n * n / 4 + 1);
  std::vector<char> seen(slots, 0);
  auto const total = static_cast<std::int64_t>(std::uint64_t{1} << n);
#pragma omp parallel
  {
    std::vector<char> local(slots, 0);
#pragma omp for schedule(static) nowait
    for (std::int64_t mask = 0; mask < total; ++mask) {
      local[signature_slot(static_cast<std::uint64_t>(mask), n)] = 1;
    }
#pragma omp critical
    for (std::size_t i = 0; i < slots; ++i) {
      seen[i] |= local[i];
    }
  }
  return static_cast<std::uint64_t>(std::count(seen.begin(), seen.end(), 1));
}

std::size_t max_factor_fair_length_serial(std::string_view w) {
  auto const fair = fair_factor_table(w);
  std::size_t best = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto const lengths = fair_lengths_from(w, i, fair);
    best = std::max(best, *std::max_element(lengths.begin(), lengths.end()));
  }
  return best;
}

std::size_t max_factor_fair_length_parallel(std::string_view w, int jobs) {
  set_jobs(jobs);
  auto const fair = fair_factor_table(w);
  std::size_t best = 0;
  auto const n = static_cast<std::int64_t>(w.size());
#pragma omp parallel for reduction(max : best) schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) {
    auto const lengths = fair_lengths_from(w, static_cast<std::size_t>(i), fair);
    best = std::max(best, *std::max_element(lengths.begin(), lengths.end()));
  }
  return best;
}

}  // namespace wordlab::kernels
