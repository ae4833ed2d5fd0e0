#include "lzbg/neighbors.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <utility>

namespace lzbg {

namespace {

Idx sa_count(std::span<const Idx> sa) {
    return sa.empty() ? 0 : static_cast<Idx>(sa.size()) - 1;
}

std::uint64_t bytes_of(const std::vector<Idx>& v) {
    return static_cast<std::uint64_t>(v.capacity()) * sizeof(Idx);
}

// Write targets for the two layouts, so the interleaved variants fill their
// single array during the scan itself rather than converting afterwards.
struct PlainStore {
    std::vector<Idx> psv, nsv;

    PlainStore(Idx n, Idx init)
        : psv(static_cast<std::size_t>(n) + 1, init), nsv(static_cast<std::size_t>(n) + 1, init) {}
    PlainStore(std::vector<Idx>&& reuse, Idx n, Idx init) : psv(std::move(reuse)) {
        assert(static_cast<Idx>(psv.size()) == n + 1);
        std::fill(psv.begin(), psv.end(), init);
        nsv.assign(static_cast<std::size_t>(n) + 1, init);
    }

    Idx get_psv(Idx i) const { return psv[static_cast<std::size_t>(i)]; }
    Idx get_nsv(Idx i) const { return nsv[static_cast<std::size_t>(i)]; }
    void set_psv(Idx i, Idx v) { psv[static_cast<std::size_t>(i)] = v; }
    void set_nsv(Idx i, Idx v) { nsv[static_cast<std::size_t>(i)] = v; }

    void finish(NeighborArrays& out) {
        psv[0] = 0;
        nsv[0] = 0;
        out.layout = Layout::plain;
        out.psv = std::move(psv);
        out.nsv = std::move(nsv);
        out.work_peak_bytes += bytes_of(out.psv) + bytes_of(out.nsv);
    }
};

struct InterleavedStore {
    std::vector<Idx> pnsv;

    InterleavedStore(Idx n, Idx init) : pnsv(2 * (static_cast<std::size_t>(n) + 1), init) {}

    Idx get_psv(Idx i) const { return pnsv[2 * static_cast<std::size_t>(i)]; }
    Idx get_nsv(Idx i) const { return pnsv[2 * static_cast<std::size_t>(i) + 1]; }
    void set_psv(Idx i, Idx v) { pnsv[2 * static_cast<std::size_t>(i)] = v; }
    void set_nsv(Idx i, Idx v) { pnsv[2 * static_cast<std::size_t>(i) + 1] = v; }

    void finish(NeighborArrays& out) {
        pnsv[0] = 0;
        pnsv[1] = 0;
        out.layout = Layout::interleaved;
        out.pnsv = std::move(pnsv);
        out.work_peak_bytes += bytes_of(out.pnsv);
    }
};

template <class Store>
void stack_scan(std::span<const Idx> sa, Store& store, NeighborArrays& out) {
    const Idx n = sa_count(sa);
    std::vector<Idx> stack;
    Idx s_max = 0;
    for (Idx i = 1; i <= n; ++i) {
        const Idx x = sa[i];
        while (!stack.empty() && sa[stack.back()] > x) {
            store.set_nsv(stack.back(), i);
            stack.pop_back();
        }
        store.set_psv(i, stack.empty() ? 0 : stack.back());
        stack.push_back(i);
        s_max = std::max(s_max, static_cast<Idx>(stack.size()));
    }
    while (!stack.empty()) {
        store.set_nsv(stack.back(), 0);
        stack.pop_back();
    }
    out.s_max = s_max;
    out.stack_pushes = static_cast<std::uint64_t>(n);
    out.work_peak_bytes += bytes_of(stack);
}

template <class Store>
void peak_elim_lex(std::span<const Idx> sa, Store& store, NeighborArrays& out) {
    const Idx n = sa_count(sa);
    std::uint64_t eliminations = 0;
    // nsv entries default to 0 and stay 0 unless a later smaller value exists.
    for (Idx i = 2; i <= n; ++i) {
        Idx j = i - 1;
        while (j != 0 && sa[j] > sa[i]) {
            store.set_nsv(j, i);  // j has both neighbors now: eliminate it
            j = store.get_psv(j);
            ++eliminations;
        }
        store.set_psv(i, j);
    }
    out.peak_eliminations = eliminations;
}

// Text-order peak elimination. `bottom` marks not-yet-known entries and must
// stay distinct from the 0 sentinel: a chain suspended on an unknown value
// resumes later when that value is filled in, including the 0 chain that
// walks the positions with no earlier smaller suffix.
template <class Store>
void peak_elim_text(std::span<const Idx> phi, Store& store, Idx bottom, NeighborArrays& out) {
    const Idx n = sa_count(phi);
    std::uint64_t eliminations = 0;
    for (Idx start = 1; start <= n; ++start) {
        Idx j = phi[start];
        Idx i = start;
        for (;;) {
            assert(j != i);
            if (j < i) {
                store.set_psv(i, j);
                const Idx next = store.get_nsv(i);
                if (next == bottom) break;
                i = next;  // i was a peak
                ++eliminations;
            } else {
                store.set_nsv(j, i);
                const Idx next = store.get_psv(j);
                if (next == bottom) break;
                j = next;  // j was a peak
                ++eliminations;
            }
        }
    }
    // Entries never assigned have no smaller neighbor on that side.
    for (Idx i = 1; i <= n; ++i) {
        if (store.get_psv(i) == bottom) store.set_psv(i, 0);
        if (store.get_nsv(i) == bottom) store.set_nsv(i, 0);
    }
    out.peak_eliminations = eliminations;
}

}  // namespace

Idx NeighborArrays::size() const {
    if (layout == Layout::plain) return psv.empty() ? 0 : static_cast<Idx>(psv.size()) - 1;
    return pnsv.empty() ? 0 : static_cast<Idx>(pnsv.size() / 2) - 1;
}

Idx NeighborArrays::psv_at(Idx i) const {
    return layout == Layout::plain ? psv[static_cast<std::size_t>(i)]
                                   : pnsv[2 * static_cast<std::size_t>(i)];
}

Idx NeighborArrays::nsv_at(Idx i) const {
    return layout == Layout::plain ? nsv[static_cast<std::size_t>(i)]
                                   : pnsv[2 * static_cast<std::size_t>(i) + 1];
}

NeighborArrays psv_nsv_stack(std::span<const Idx> sa, Layout layout) {
    const Idx n = sa_count(sa);
    NeighborArrays out;
    out.order = Order::lex;
    if (layout == Layout::plain) {
        PlainStore store(n, 0);
        stack_scan(sa, store, out);
        store.finish(out);
    } else {
        InterleavedStore store(n, 0);
        stack_scan(sa, store, out);
        store.finish(out);
    }
    return out;
}

NeighborArrays psv_nsv_peak_lex(std::span<const Idx> sa, Layout layout) {
    const Idx n = sa_count(sa);
    NeighborArrays out;
    out.order = Order::lex;
    if (layout == Layout::plain) {
        PlainStore store(n, 0);
        peak_elim_lex(sa, store, out);
        store.finish(out);
    } else {
        InterleavedStore store(n, 0);
        peak_elim_lex(sa, store, out);
        store.finish(out);
    }
    return out;
}

NeighborArrays psv_nsv_peak_text(const Text& text, std::vector<Idx>&& sa, Layout layout) {
    const Idx n = text.length();
    assert(static_cast<Idx>(sa.size()) == n + 1 || (n == 0 && sa.empty()));
    NeighborArrays out;
    out.order = Order::text;
    if (n == 0) {
        sa = {};
        if (layout == Layout::plain) {
            out.psv.assign(1, 0);
            out.nsv.assign(1, 0);
        } else {
            out.pnsv.assign(2, 0);
            out.layout = Layout::interleaved;
        }
        return out;
    }

    std::vector<Idx> phi(static_cast<std::size_t>(n) + 1, 0);
    for (Idx i = 2; i <= n; ++i) phi[sa[i]] = sa[i - 1];
    phi[sa[1]] = 0;

    const Idx bottom = n + 2;
    if (layout == Layout::plain) {
        // The suffix array buffer becomes the psv array.
        PlainStore store(std::move(sa), n, bottom);
        peak_elim_text<PlainStore>(phi, store, bottom, out);
        store.finish(out);
        out.work_peak_bytes += bytes_of(phi);
    } else {
        const std::uint64_t sa_bytes = bytes_of(sa);
        std::vector<Idx>().swap(sa);  // not needed once phi exists
        InterleavedStore store(n, bottom);
        peak_elim_text<InterleavedStore>(phi, store, bottom, out);
        const std::uint64_t with_sa = sa_bytes + bytes_of(phi);
        store.finish(out);
        out.work_peak_bytes = std::max(out.work_peak_bytes + bytes_of(phi), with_sa);
    }
    return out;
}

NeighborArrays psv_nsv_brute(std::span<const Idx> sa, Idx cap) {
    const Idx n = sa_count(sa);
    if (n > cap) throw OracleLimitError("psv_nsv_brute", n, cap);
    NeighborArrays out;
    out.order = Order::lex;
    out.psv.assign(static_cast<std::size_t>(n) + 1, 0);
    out.nsv.assign(static_cast<std::size_t>(n) + 1, 0);
    for (Idx i = 1; i <= n; ++i) {
        for (Idx j = i - 1; j >= 1; --j)
            if (sa[j] < sa[i]) {
                out.psv[i] = j;
                break;
            }
        for (Idx j = i + 1; j <= n; ++j)
            if (sa[j] < sa[i]) {
                out.nsv[i] = j;
                break;
            }
    }
    return out;
}

NeighborArrays interleave(const NeighborArrays& plain) {
    assert(plain.layout == Layout::plain);
    const Idx n = plain.size();
    NeighborArrays out;
    out.order = plain.order;
    out.layout = Layout::interleaved;
    out.s_max = plain.s_max;
    out.pnsv.assign(2 * (static_cast<std::size_t>(n) + 1), 0);
    for (Idx i = 1; i <= n; ++i) {
        out.pnsv[2 * static_cast<std::size_t>(i)] = plain.psv[i];
        out.pnsv[2 * static_cast<std::size_t>(i) + 1] = plain.nsv[i];
    }
    return out;
}

NeighborArrays deinterleave(const NeighborArrays& interleaved) {
    assert(interleaved.layout == Layout::interleaved);
    const Idx n = interleaved.size();
    NeighborArrays out;
    out.order = interleaved.order;
    out.layout = Layout::plain;
    out.s_max = interleaved.s_max;
    out.psv.assign(static_cast<std::size_t>(n) + 1, 0);
    out.nsv.assign(static_cast<std::size_t>(n) + 1, 0);
    for (Idx i = 1; i <= n; ++i) {
        out.psv[i] = interleaved.pnsv[2 * static_cast<std::size_t>(i)];
        out.nsv[i] = interleaved.pnsv[2 * static_cast<std::size_t>(i) + 1];
    }
    return out;
}

void write_neighbors_csv(std::ostream& out, std::span<const Idx> sa,
                         const NeighborArrays& arrays) {
    const Idx n = arrays.size();
    out << "i,sa,psv,nsv\n";
    for (Idx i = 1; i <= n; ++i)
        out << i << ',' << sa[i] << ',' << arrays.psv_at(i) << ',' << arrays.nsv_at(i) << '\n';
}

}  // namespace lzbg
