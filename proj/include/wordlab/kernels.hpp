#pragma once

// Exhaustive kernels, each with a serial reference and an OpenMP version.
// The parallel versions must return exactly what the serial ones do; tests
// and the benchmark compare them. `jobs` <= 0 means "use the OpenMP default".

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace wordlab::kernels {

/// fair[i][j] for 0 <= i <= j <= n: is the binary factor w[i, j) fair.
/// O(1) per entry from prefix sums.
std::vector<std::vector<bool>> fair_factor_table(std::string_view w);

/// Fair lengths of w[start, j) for j = start + 1 .. |w|, in that order.
std::vector<std::size_t> fair_lengths_from(std::string_view w, std::size_t start,
                                           std::vector<std::vector<bool>> const& fair);

/// Count of binary fair words of length n, by scanning all 2^n words.
std::uint64_t fair_count_brute_serial(std::size_t n);
std::uint64_t fair_count_brute_parallel(std::size_t n, int jobs = 0);

/// Number of distinct (|w|_a, |w|_b, binom(w, ab)) over the 2^n words of
/// length n.
std::uint64_t signature_count_serial(std::size_t n);
std::uint64_t signature_count_parallel(std::size_t n, int jobs = 0);

/// Maximum fair length over all nonempty factors of a binary word.
std::size_t max_factor_fair_length_serial(std::string_view w);
std::size_t max_factor_fair_length_parallel(std::string_view w, int jobs = 0);

}  // namespace wordlab::kernels
