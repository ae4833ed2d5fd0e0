#pragma once

#include <iosfwd>

#include "lzbg/suffix_array.hpp"

namespace lzbg {

enum class Order { lex, text };
enum class Layout { plain, interleaved };

inline constexpr Idx kBruteNeighborCap = 10000;

// Previous/next-smaller-value arrays over 1..N. Values are 1-based with 0
// meaning "no such element".
//
// Plain layout: psv/nsv vectors of N+1 slots (slot 0 unused).
// Interleaved layout: single pnsv vector of 2N+2 slots with psv(i) stored at
// 2i and nsv(i) at 2i+1; slots 0 and 1 unused.
//
// order == lex: values are suffix-array ranks, indexed by rank.
// order == text: values are text positions, indexed by text position, with
// psv_text[sa[i]] = sa[psv_lex[i]] and nsv_text[sa[i]] = sa[nsv_lex[i]].
struct NeighborArrays {
    Order order = Order::lex;
    Layout layout = Layout::plain;
    std::vector<Idx> psv;
    std::vector<Idx> nsv;
    std::vector<Idx> pnsv;

    Idx s_max = 0;                        // stack scan only
    std::uint64_t stack_pushes = 0;       // stack scan only
    std::uint64_t peak_eliminations = 0;  // peak elimination only
    std::uint64_t work_peak_bytes = 0;    // high-water mark of arrays owned
                                          // by the computation, text excluded

    Idx size() const;
    Idx psv_at(Idx i) const;
    Idx nsv_at(Idx i) const;
};

// Single left-to-right scan of the suffix array with a stack. s_max records
// the deepest stack state reached.
NeighborArrays psv_nsv_stack(std::span<const Idx> sa, Layout layout = Layout::plain);

// Peak elimination in lexicographic order. Same output as psv_nsv_stack.
NeighborArrays psv_nsv_peak_lex(std::span<const Idx> sa, Layout layout = Layout::plain);

// Peak elimination in text order driven by the phi array. Consumes the
// suffix array: the plain layout overwrites its buffer in place with the
// psv values; the interleaved layout releases it once phi is derived.
NeighborArrays psv_nsv_peak_text(const Text& text, std::vector<Idx>&& sa,
                                 Layout layout = Layout::plain);

// Literal evaluation of the defining sets, O(N^2) worst case.
NeighborArrays psv_nsv_brute(std::span<const Idx> sa, Idx cap = kBruteNeighborCap);

// Layout converters. The i* variants build the interleaved layout directly
// during their scan; these exist as the semantic contract between layouts.
NeighborArrays interleave(const NeighborArrays& plain);
NeighborArrays deinterleave(const NeighborArrays& interleaved);

// Debug dump, one row per index: i, sa[i], psv[i], nsv[i].
void write_neighbors_csv(std::ostream& out, std::span<const Idx> sa,
                         const NeighborArrays& arrays);

}  // namespace lzbg
