#pragma once

#include "lzbg/neighbors.hpp"
#include "lzbg/report.hpp"

namespace lzbg {

// One factor of the greedy factorization: either a copy of length >= 1 from
// an earlier source position (self-overlap allowed), or a fresh literal byte
// recorded with length 0.
struct Factor {
    Idx length = 0;
    Idx source = 0;            // copies only, 1-based, source < factor start
    std::uint8_t literal = 0;  // literals only

    bool is_literal() const { return length == 0; }
    friend bool operator==(const Factor&, const Factor&) = default;
};

struct Factorization {
    std::vector<Factor> factors;

    std::int64_t count() const { return static_cast<std::int64_t>(factors.size()); }

    // A literal consumes one text position, a copy consumes its length.
    std::int64_t decoded_length() const;

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

// lpf[i]: longest match between the suffix at i and any earlier suffix.
// prevocc[i]: the smallest witness position, or -1 where lpf[i] = 0.
// Both 1-based with slot 0 unused.
struct LpfArrays {
    std::vector<Idx> lpf;
    std::vector<Idx> prevocc;
};

inline constexpr Idx kNaiveFactorizeCap = 100000;
inline constexpr Idx kLpfBruteCap = 100000;

// Length of the longest common prefix of the suffixes at j and p (j < p),
// found by direct comparison. Adds every executed character test to
// `comparisons`, including the final failing one; a scan stopped by the end
// of the text adds only the successful tests.
Idx lcp_extend(const Text& text, Idx j, Idx p, std::uint64_t& comparisons);

// Full pipeline: suffix array, neighbor arrays per `variant`, factor loop.
// Fills every RunReport field when `report` is given.
Factorization factorize(const Text& text, Variant variant, RunReport* report = nullptr);

// Same, starting from a prebuilt suffix array. `sa` is taken by value: pass
// a copy to keep the caller's array, or move to hand it over (the text-order
// variants consume it). Everything from the call on is charged to
// post_sa_seconds; sa_build_seconds is left untouched.
Factorization factorize_with_sa(const Text& text, std::vector<Idx> sa, Variant variant,
                                RunReport* report = nullptr);

// Reference factorizer scanning all previous positions per factor. Witness
// is the smallest position achieving the maximum. O(N^2), capped.
Factorization factorize_naive(const Text& text, Idx cap = kNaiveFactorizeCap);

// Literal evaluation of the LPF/PrevOcc definitions. O(N^2), capped.
LpfArrays lpf_brute_force(const Text& text, Idx cap = kLpfBruteCap);

// Factorization read off precomputed LPF/PrevOcc arrays.
Factorization lz_from_lpf(const Text& text, const LpfArrays& arrays);

// Structural validity: coverage of the text, well-formed factors, every copy
// re-verified by substring comparison, every literal a first occurrence.
// Does not check greedy maximality.
bool verify_factorization(const Text& text, const Factorization& f);

}  // namespace lzbg
