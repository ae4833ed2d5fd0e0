#pragma once

#include <iosfwd>

#include "lzbg/text.hpp"

namespace lzbg {

// Suffix array plus inverse. Both arrays are 1-based: they have N+1 slots
// with slot 0 unused (kept 0). sa[i] is the start position of the i-th
// lexicographically smallest suffix, isa[sa[i]] = i.
struct SuffixArrayBundle {
    std::vector<Idx> sa;
    std::vector<Idx> isa;

    Idx size() const { return sa.empty() ? 0 : static_cast<Idx>(sa.size()) - 1; }
};

inline constexpr Idx kNaiveSaCap = 100000;

// Induced-sorting construction, O(N) over the byte alphabet.
SuffixArrayBundle build_sa(const Text& text);

// Reference construction by full lexicographic comparison sort. O(N^2 log N)
// worst case, guarded by the size cap.
std::vector<Idx> build_sa_naive(const Text& text, Idx cap = kNaiveSaCap);

std::vector<Idx> invert_sa(std::span<const Idx> sa);

// phi[sa[i]] = sa[i-1] for i >= 2; phi[sa[1]] = 0 (no preceding suffix).
std::vector<Idx> build_phi(std::span<const Idx> sa);

// Debug dump, one row per rank: rank, sa, isa-of-sa, phi-of-sa.
void write_sa_csv(std::ostream& out, const SuffixArrayBundle& bundle);

}  // namespace lzbg
