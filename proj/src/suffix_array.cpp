#include "lzbg/suffix_array.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <ostream>

namespace lzbg {

namespace {

// Induced-sorting suffix array construction (SA-IS). `s` holds values in
// [0, sigma) and ends with a unique smallest sentinel 0; `sa` receives the
// full suffix order including the sentinel suffix.
void sais(std::span<const Idx> s, std::span<Idx> sa, Idx sigma) {
    const Idx n = static_cast<Idx>(s.size());
    if (n == 1) {
        sa[0] = 0;
        return;
    }

    // Type classification: S-type iff the suffix is smaller than its successor.
    std::vector<bool> is_s(static_cast<std::size_t>(n));
    is_s[n - 1] = true;
    for (Idx i = n - 2; i >= 0; --i)
        is_s[i] = s[i] < s[i + 1] || (s[i] == s[i + 1] && is_s[i + 1]);
    auto is_lms = [&](Idx i) { return i > 0 && is_s[i] && !is_s[i - 1]; };

    std::vector<Idx> bucket(static_cast<std::size_t>(sigma), 0);
    std::vector<Idx> edge(static_cast<std::size_t>(sigma));
    for (Idx i = 0; i < n; ++i) ++bucket[s[i]];
    auto reset_heads = [&] {
        Idx sum = 0;
        for (Idx c = 0; c < sigma; ++c) {
            edge[c] = sum;
            sum += bucket[c];
        }
    };
    auto reset_tails = [&] {
        Idx sum = 0;
        for (Idx c = 0; c < sigma; ++c) {
            sum += bucket[c];
            edge[c] = sum;
        }
    };

    // Induce L-suffixes from the left, then S-suffixes from the right.
    auto induce = [&] {
        reset_heads();
        for (Idx i = 0; i < n; ++i) {
            const Idx j = sa[i];
            if (j > 0 && !is_s[j - 1]) sa[edge[s[j - 1]]++] = j - 1;
        }
        reset_tails();
        for (Idx i = n - 1; i >= 0; --i) {
            const Idx j = sa[i];
            if (j > 0 && is_s[j - 1]) sa[--edge[s[j - 1]]] = j - 1;
        }
    };

    // First pass: seed the LMS positions in any order and induce, which
    // leaves the LMS substrings sorted.
    std::fill(sa.begin(), sa.end(), Idx{-1});
    reset_tails();
    for (Idx i = 1; i < n; ++i)
        if (is_lms(i)) sa[--edge[s[i]]] = i;
    induce();

    // Compact the LMS positions, now in sorted substring order.
    Idx m = 0;
    for (Idx i = 0; i < n; ++i)
        if (is_lms(sa[i])) sa[m++] = sa[i];

    // Name the LMS substrings; equal substrings share a name.
    std::vector<Idx> name_of(static_cast<std::size_t>(n / 2) + 1, -1);
    Idx names = 0;
    Idx prev = -1;
    for (Idx k = 0; k < m; ++k) {
        const Idx pos = sa[k];
        bool differ = prev < 0;
        for (Idx d = 0; !differ; ++d) {
            if (s[prev + d] != s[pos + d]) {
                differ = true;
            } else if (d > 0) {
                const bool end_a = is_lms(prev + d);
                const bool end_b = is_lms(pos + d);
                if (end_a && end_b) break;
                if (end_a != end_b) differ = true;
            }
        }
        if (differ) ++names;
        name_of[pos >> 1] = names - 1;
        prev = pos;
    }

    // Reduced string: LMS names in text order. Its sentinel is the name of
    // the input sentinel, which is 0 and unique.
    std::vector<Idx> lms_pos;
    lms_pos.reserve(static_cast<std::size_t>(m));
    for (Idx i = 1; i < n; ++i)
        if (is_lms(i)) lms_pos.push_back(i);
    std::vector<Idx> s1(static_cast<std::size_t>(m));
    for (Idx k = 0; k < m; ++k) s1[k] = name_of[lms_pos[k] >> 1];

    std::vector<Idx> sa1(static_cast<std::size_t>(m));
    if (names < m) {
        sais(s1, sa1, names);
    } else {
        for (Idx k = 0; k < m; ++k) sa1[s1[k]] = k;
    }

    // Second pass: seed the LMS suffixes in their true order and induce.
    std::fill(sa.begin(), sa.end(), Idx{-1});
    reset_tails();
    for (Idx k = m - 1; k >= 0; --k) {
        const Idx pos = lms_pos[sa1[k]];
        sa[--edge[s[pos]]] = pos;
    }
    induce();
}

}  // namespace

SuffixArrayBundle build_sa(const Text& text) {
    const Idx n = text.length();
    SuffixArrayBundle bundle;
    bundle.sa.assign(static_cast<std::size_t>(n) + 1, 0);
    bundle.isa.assign(static_cast<std::size_t>(n) + 1, 0);
    if (n == 0) return bundle;

    // Shift bytes to 1..256 and append the 0 sentinel.
    std::vector<Idx> s(static_cast<std::size_t>(n) + 1);
    const auto bytes = text.bytes();
    for (Idx i = 0; i < n; ++i) s[i] = Idx{bytes[i]} + 1;
    s[n] = 0;

    std::vector<Idx> sa0(static_cast<std::size_t>(n) + 1);
    sais(s, sa0, 257);

    // sa0[0] is the sentinel suffix; the rest map to 1-based positions.
    for (Idx i = 1; i <= n; ++i) bundle.sa[i] = sa0[i] + 1;
    for (Idx i = 1; i <= n; ++i) bundle.isa[bundle.sa[i]] = i;
    return bundle;
}

std::vector<Idx> build_sa_naive(const Text& text, Idx cap) {
    const Idx n = text.length();
    if (n > cap) throw OracleLimitError("build_sa_naive", n, cap);
    std::vector<Idx> sa(static_cast<std::size_t>(n) + 1);
    std::iota(sa.begin(), sa.end(), Idx{0});
    const auto bytes = text.bytes();
    std::sort(sa.begin() + 1, sa.end(), [&](Idx a, Idx b) {
        return std::lexicographical_compare(bytes.begin() + (a - 1), bytes.end(),
                                            bytes.begin() + (b - 1), bytes.end());
    });
    sa[0] = 0;
    return sa;
}

std::vector<Idx> invert_sa(std::span<const Idx> sa) {
    const Idx n = sa.empty() ? 0 : static_cast<Idx>(sa.size()) - 1;
    std::vector<Idx> isa(static_cast<std::size_t>(n) + 1, 0);
    for (Idx i = 1; i <= n; ++i) isa[sa[i]] = i;
    return isa;
}

std::vector<Idx> build_phi(std::span<const Idx> sa) {
    const Idx n = sa.empty() ? 0 : static_cast<Idx>(sa.size()) - 1;
    std::vector<Idx> phi(static_cast<std::size_t>(n) + 1, 0);
    for (Idx i = 2; i <= n; ++i) phi[sa[i]] = sa[i - 1];
    if (n >= 1) phi[sa[1]] = 0;
    return phi;
}

void write_sa_csv(std::ostream& out, const SuffixArrayBundle& bundle) {
    const Idx n = bundle.size();
    const auto phi = build_phi(bundle.sa);
    out << "rank,sa,isa_of_sa,phi_of_sa\n";
    for (Idx i = 1; i <= n; ++i)
        out << i << ',' << bundle.sa[i] << ',' << bundle.isa[bundle.sa[i]] << ','
            << phi[bundle.sa[i]] << '\n';
}

}  // namespace lzbg
