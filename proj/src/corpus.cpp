#include "lzbg/corpus.hpp"

#include <cmath>
#include <random>

namespace lzbg {

Text gen_fibonacci(std::int64_t min_length) {
    if (min_length < 1) min_length = 1;
    if (min_length > kMaxTextLength)
        throw Error("requested Fibonacci word exceeds the supported text length");
    std::string prev = "b";
    std::string cur = "a";
    while (static_cast<std::int64_t>(cur.size()) < min_length) {
        std::string next;
        next.reserve(cur.size() + prev.size());
        next.append(cur);
        next.append(prev);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return Text(cur);
}

Text gen_random(std::int64_t length, int alphabet_size, std::uint64_t seed) {
    if (alphabet_size < 2 || alphabet_size > 256)
        throw Error("alphabet_size must be in 2..256");
    if (length < 0 || length > kMaxTextLength) throw Error("bad random text length");
    std::mt19937_64 rng(seed);
    std::vector<std::uint8_t> bytes(static_cast<std::size_t>(length));
    const auto k = static_cast<std::uint64_t>(alphabet_size);
    for (auto& b : bytes) b = static_cast<std::uint8_t>(rng() % k);
    return Text(std::move(bytes));
}

CorpusStats compute_stats(const Text& text, const Factorization& f, const RunReport& report) {
    CorpusStats stats;
    stats.text_length = text.length();
    bool seen[256] = {};
    for (std::uint8_t b : text.bytes()) seen[b] = true;
    for (bool s : seen) stats.alphabet_count += s ? 1 : 0;
    stats.factor_count = f.count();
    stats.average_factor_length =
        stats.factor_count == 0
            ? 0.0
            : std::round(100.0 * static_cast<double>(stats.text_length) /
                         static_cast<double>(stats.factor_count)) /
                  100.0;
    stats.s_max = report.s_max;
    return stats;
}

}  // namespace lzbg
