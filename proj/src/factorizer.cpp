#include "lzbg/factorizer.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>

namespace lzbg {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::uint64_t bytes_of(const std::vector<Idx>& v) {
    return static_cast<std::uint64_t>(v.capacity()) * sizeof(Idx);
}

// Candidate providers: for a factor starting at p, the previous-occurrence
// candidates are the two text positions whose suffixes are the nearest
// lexicographic neighbors below among suffixes starting before p. 0 = none.
struct LexPlainCandidates {
    std::span<const Idx> sa;
    std::span<const Idx> isa;
    const NeighborArrays& na;
    std::pair<Idx, Idx> operator()(Idx p) const {
        const Idx r = isa[p];
        const Idx a = na.psv[static_cast<std::size_t>(r)];
        const Idx b = na.nsv[static_cast<std::size_t>(r)];
        return {a == 0 ? 0 : sa[a], b == 0 ? 0 : sa[b]};
    }
};

struct LexInterleavedCandidates {
    std::span<const Idx> sa;
    std::span<const Idx> isa;
    const NeighborArrays& na;
    std::pair<Idx, Idx> operator()(Idx p) const {
        const std::size_t r = static_cast<std::size_t>(isa[p]);
        const Idx a = na.pnsv[2 * r];
        const Idx b = na.pnsv[2 * r + 1];
        return {a == 0 ? 0 : sa[a], b == 0 ? 0 : sa[b]};
    }
};

struct TextPlainCandidates {
    const NeighborArrays& na;
    std::pair<Idx, Idx> operator()(Idx p) const {
        return {na.psv[static_cast<std::size_t>(p)], na.nsv[static_cast<std::size_t>(p)]};
    }
};

struct TextInterleavedCandidates {
    const NeighborArrays& na;
    std::pair<Idx, Idx> operator()(Idx p) const {
        const std::size_t q = 2 * static_cast<std::size_t>(p);
        return {na.pnsv[q], na.pnsv[q + 1]};
    }
};

// The main loop: probe the two candidates, keep the longer match with the
// psv candidate winning ties, advance by max(1, match).
template <class Candidates>
Factorization factor_loop(const Text& text, Candidates candidates, std::uint64_t& comparisons) {
    const Idx n = text.length();
    Factorization f;
    Idx p = 1;
    while (p <= n) {
        const auto [psv_cand, nsv_cand] = candidates(p);
        Idx best = 0;
        Idx source = 0;
        if (psv_cand != 0) {
            const Idx l = lcp_extend(text, psv_cand, p, comparisons);
            if (l > best) {
                best = l;
                source = psv_cand;
            }
        }
        if (nsv_cand != 0) {
            const Idx l = lcp_extend(text, nsv_cand, p, comparisons);
            if (l > best) {
                best = l;
                source = nsv_cand;
            }
        }
        if (best > 0)
            f.factors.push_back(Factor{best, source, 0});
        else
            f.factors.push_back(Factor{0, 0, text[p]});
        p += std::max<Idx>(1, best);
    }
    return f;
}

}  // namespace

std::int64_t Factorization::decoded_length() const {
    std::int64_t total = 0;
    for (const Factor& f : factors) total += std::max<Idx>(1, f.length);
    return total;
}

Idx lcp_extend(const Text& text, Idx j, Idx p, std::uint64_t& comparisons) {
    assert(1 <= j && j < p && p <= text.length());
    const Idx n = text.length();
    Idx l = 0;
    for (;;) {
        if (p + l > n) break;
        ++comparisons;
        if (text[j + l] != text[p + l]) break;
        ++l;
    }
    return l;
}

Factorization factorize(const Text& text, Variant variant, RunReport* report) {
    const auto start = Clock::now();
    SuffixArrayBundle bundle = build_sa(text);
    const double sa_seconds = seconds_since(start);
    if (report) report->sa_build_seconds = sa_seconds;
    return factorize_with_sa(text, std::move(bundle.sa), variant, report);
}

Factorization factorize_with_sa(const Text& text, std::vector<Idx> sa, Variant variant,
                                RunReport* report) {
    const auto start = Clock::now();
    const Idx n = text.length();
    assert(static_cast<std::int64_t>(sa.size()) == static_cast<std::int64_t>(n) + 1 ||
           (n == 0 && sa.empty()));

    std::uint64_t comparisons = 0;
    std::uint64_t peak_bytes = static_cast<std::uint64_t>(text.bytes().size());
    Idx s_max = 0;
    Factorization f;

    const Layout layout =
        is_interleaved_variant(variant) ? Layout::interleaved : Layout::plain;

    if (is_text_order_variant(variant)) {
        // bgt / ibgt: the factor loop needs only the text-order arrays.
        NeighborArrays na = psv_nsv_peak_text(text, std::move(sa), layout);
        peak_bytes += na.work_peak_bytes;
        if (layout == Layout::plain)
            f = factor_loop(text, TextPlainCandidates{na}, comparisons);
        else
            f = factor_loop(text, TextInterleavedCandidates{na}, comparisons);
    } else {
        std::vector<Idx> isa = invert_sa(sa);
        NeighborArrays na = is_stack_variant(variant) ? psv_nsv_stack(sa, layout)
                                                      : psv_nsv_peak_lex(sa, layout);
        s_max = na.s_max;
        peak_bytes += bytes_of(sa) + bytes_of(isa) + na.work_peak_bytes;
        if (layout == Layout::plain)
            f = factor_loop(text, LexPlainCandidates{sa, isa, na}, comparisons);
        else
            f = factor_loop(text, LexInterleavedCandidates{sa, isa, na}, comparisons);
    }

    if (report) {
        report->variant = std::string(to_string(variant));
        report->text_length = n;
        report->factor_count = f.count();
        report->s_max = s_max;
        report->comparison_count = comparisons;
        report->modeled_bytes = modeled_bytes(variant, n, s_max);
        report->actual_peak_bytes = peak_bytes;
        report->post_sa_seconds = seconds_since(start);
    }
    return f;
}

Factorization factorize_naive(const Text& text, Idx cap) {
    const Idx n = text.length();
    if (n > cap) throw OracleLimitError("factorize_naive", n, cap);
    std::uint64_t comparisons = 0;
    Factorization f;
    Idx p = 1;
    while (p <= n) {
        Idx best = 0;
        Idx source = 0;
        for (Idx j = 1; j < p; ++j) {
            const Idx l = lcp_extend(text, j, p, comparisons);
            if (l > best) {
                best = l;
                source = j;
            }
        }
        if (best > 0)
            f.factors.push_back(Factor{best, source, 0});
        else
            f.factors.push_back(Factor{0, 0, text[p]});
        p += std::max<Idx>(1, best);
    }
    return f;
}

LpfArrays lpf_brute_force(const Text& text, Idx cap) {
    const Idx n = text.length();
    if (n > cap) throw OracleLimitError("lpf_brute_force", n, cap);
    LpfArrays arrays;
    arrays.lpf.assign(static_cast<std::size_t>(n) + 1, 0);
    arrays.prevocc.assign(static_cast<std::size_t>(n) + 1, -1);
    arrays.prevocc[0] = 0;
    std::uint64_t comparisons = 0;
    for (Idx i = 1; i <= n; ++i) {
        Idx best = 0;
        Idx witness = -1;
        for (Idx j = 1; j < i; ++j) {
            const Idx l = lcp_extend(text, j, i, comparisons);
            if (l > best) {
                best = l;
                witness = j;
            }
        }
        arrays.lpf[i] = best;
        arrays.prevocc[i] = best > 0 ? witness : -1;
    }
    return arrays;
}

Factorization lz_from_lpf(const Text& text, const LpfArrays& arrays) {
    const Idx n = text.length();
    Factorization f;
    Idx p = 1;
    while (p <= n) {
        const Idx l = arrays.lpf[p];
        if (l == 0)
            f.factors.push_back(Factor{0, 0, text[p]});
        else
            f.factors.push_back(Factor{l, arrays.prevocc[p], 0});
        p += std::max<Idx>(1, l);
    }
    return f;
}

bool verify_factorization(const Text& text, const Factorization& f) {
    const Idx n = text.length();
    if (f.decoded_length() != n) return false;
    bool seen[256] = {};
    Idx p = 1;
    for (const Factor& factor : f.factors) {
        if (factor.is_literal()) {
            if (p > n || text[p] != factor.literal) return false;
            if (seen[factor.literal]) return false;  // not a first occurrence
            seen[factor.literal] = true;
            p += 1;
        } else {
            if (factor.length < 1 || factor.source < 1 || factor.source >= p) return false;
            if (p + factor.length - 1 > n) return false;
            for (Idx k = 0; k < factor.length; ++k) {
                if (text[factor.source + k] != text[p + k]) return false;
                seen[text[p + k]] = true;
            }
            p += factor.length;
        }
    }
    return p == n + 1;
}

}  // namespace lzbg
