#pragma once

#include "lzbg/factorizer.hpp"

namespace lzbg {

inline constexpr std::string_view kRandomGeneratorName = "mt19937_64";

// Shortest Fibonacci word of length >= min_length, over {'a','b'} with
// seeds "b", "a" and rule F(k) = F(k-1) F(k-2); the words considered start
// at F(2) = "a". Lengths follow the Fibonacci numbers.
Text gen_fibonacci(std::int64_t min_length);

// Uniform bytes over the first alphabet_size values, deterministic per seed.
Text gen_random(std::int64_t length, int alphabet_size, std::uint64_t seed);

// Statistics columns of the benchmark table.
struct CorpusStats {
    std::int64_t text_length = 0;
    int alphabet_count = 0;  // distinct byte values present
    std::int64_t factor_count = 0;
    double average_factor_length = 0.0;  // N/n rounded to 2 decimals, 0 when N = 0
    Idx s_max = 0;                       // stack-scan telemetry from the report
};

CorpusStats compute_stats(const Text& text, const Factorization& f, const RunReport& report);

}  // namespace lzbg
