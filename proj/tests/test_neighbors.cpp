#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "lzbg/neighbors.hpp"
#include "test_helpers.hpp"

using namespace lzbg;
using namespace lzbg::test;

namespace {

std::vector<Idx> one_based(std::vector<Idx> values) {
    values.insert(values.begin(), 0);
    return values;
}

// Stack depth oracle: after processing rank i, the stack holds exactly the
// ranks j <= i whose next smaller value lies beyond i.
Idx s_max_oracle(const std::vector<Idx>& sa) {
    const auto na = psv_nsv_brute(sa);
    const Idx n = na.size();
    Idx deepest = 0;
    for (Idx i = 1; i <= n; ++i) {
        Idx depth = 0;
        for (Idx j = 1; j <= i; ++j)
            if (na.nsv[j] == 0 || na.nsv[j] > i) ++depth;
        deepest = std::max(deepest, depth);
    }
    return deepest;
}

}  // namespace

TEST_SUITE("neighbors") {

TEST_CASE("banana lexicographic arrays") {
    const auto sa = one_based({6, 4, 2, 1, 5, 3});
    const std::vector<Idx> psv = {0, 0, 0, 0, 4, 4};
    const std::vector<Idx> nsv = {2, 3, 4, 0, 6, 0};
    for (const auto& na : {psv_nsv_stack(sa), psv_nsv_peak_lex(sa), psv_nsv_brute(sa)}) {
        CHECK(body(na.psv) == psv);
        CHECK(body(na.nsv) == nsv);
    }
}

TEST_CASE("singleton") {
    const auto sa = one_based({1});
    const auto na = psv_nsv_stack(sa);
    CHECK(body(na.psv) == std::vector<Idx>{0});
    CHECK(body(na.nsv) == std::vector<Idx>{0});
    CHECK(na.s_max == 1);
}

TEST_CASE("empty input") {
    const std::vector<Idx> sa = {0};
    CHECK(psv_nsv_stack(sa).size() == 0);
    CHECK(psv_nsv_peak_lex(sa).size() == 0);
    CHECK(body(psv_nsv_peak_lex(sa).psv).empty());
}

TEST_CASE("strictly decreasing sa keeps the stack at depth one") {
    const auto sa = one_based({4, 3, 2, 1});  // text "aaaa"
    const auto na = psv_nsv_stack(sa);
    CHECK(body(na.psv) == std::vector<Idx>{0, 0, 0, 0});
    CHECK(body(na.nsv) == std::vector<Idx>{2, 3, 4, 0});
    CHECK(na.s_max == 1);
}

TEST_CASE("methods agree with the brute-force definition on random inputs") {
    std::mt19937_64 rng(20240812);
    for (int round = 0; round < 1000; ++round) {
        const Idx n = static_cast<Idx>(rng() % 500);
        const Text t = random_text(rng, n, kAlphabets[round % 4]);
        const auto sa = build_sa(t).sa;
        const auto expect = psv_nsv_brute(sa);
        const auto from_stack = psv_nsv_stack(sa);
        const auto from_peak = psv_nsv_peak_lex(sa);
        REQUIRE(from_stack.psv == expect.psv);
        REQUIRE(from_stack.nsv == expect.nsv);
        REQUIRE(from_peak.psv == expect.psv);
        REQUIRE(from_peak.nsv == expect.nsv);

        // work bounds
        REQUIRE(from_stack.stack_pushes == static_cast<std::uint64_t>(n));
        REQUIRE(from_peak.peak_eliminations <= static_cast<std::uint64_t>(n));
    }
}

TEST_CASE("stack telemetry equals the visible-chain oracle") {
    std::mt19937_64 rng(33);
    for (int round = 0; round < 200; ++round) {
        const Idx n = static_cast<Idx>(rng() % 200);
        const Text t = random_text(rng, n, kAlphabets[round % 4]);
        const auto sa = build_sa(t).sa;
        REQUIRE(psv_nsv_stack(sa).s_max == s_max_oracle(sa));
    }
}

TEST_CASE("interleaved index mapping") {
    const auto sa = one_based({6, 4, 2, 1, 5, 3});
    const auto plain = psv_nsv_stack(sa);
    const auto inter = interleave(plain);
    // psv/nsv pairs interleaved pairwise, slots 0..1 unused
    const std::vector<Idx> expect = {0, 2, 0, 3, 0, 4, 0, 0, 4, 6, 4, 0};
    CHECK(std::vector<Idx>(inter.pnsv.begin() + 2, inter.pnsv.end()) == expect);

    // built-directly layouts equal the converted ones
    CHECK(psv_nsv_stack(sa, Layout::interleaved).pnsv == inter.pnsv);
    CHECK(psv_nsv_peak_lex(sa, Layout::interleaved).pnsv == inter.pnsv);

    // accessor equivalence
    for (Idx i = 1; i <= 6; ++i) {
        CHECK(inter.psv_at(i) == plain.psv_at(i));
        CHECK(inter.nsv_at(i) == plain.nsv_at(i));
    }
}

TEST_CASE("interleave of empty arrays") {
    const std::vector<Idx> sa = {0};
    const auto inter = interleave(psv_nsv_stack(sa));
    CHECK(inter.size() == 0);
}

TEST_CASE("interleave round-trips") {
    std::mt19937_64 rng(5150);
    for (Idx n : {0, 1, 7, 500, 10000}) {
        const Text t = random_text(rng, n, 4);
        const auto plain = psv_nsv_stack(build_sa(t).sa);
        const auto back = deinterleave(interleave(plain));
        REQUIRE(back.psv == plain.psv);
        REQUIRE(back.nsv == plain.nsv);
    }
}

TEST_CASE("text-order arrays for banana") {
    const Text t("banana");
    auto sa = build_sa(t).sa;
    const auto na = psv_nsv_peak_text(t, std::move(sa));
    CHECK(body(na.psv) == std::vector<Idx>{0, 0, 1, 0, 1, 0});
    CHECK(body(na.nsv) == std::vector<Idx>{0, 1, 0, 2, 3, 4});
}

TEST_CASE("text-order arrays for a single character") {
    const Text t("a");
    const auto na = psv_nsv_peak_text(t, build_sa(t).sa);
    CHECK(body(na.psv) == std::vector<Idx>{0});
    CHECK(body(na.nsv) == std::vector<Idx>{0});
}

TEST_CASE("text order satisfies the cross-order identity") {
    std::mt19937_64 rng(20240813);
    for (int round = 0; round < 400; ++round) {
        const Idx n = static_cast<Idx>(rng() % 800);
        const Text t = random_text(rng, n, kAlphabets[round % 4]);
        const auto bundle = build_sa(t);
        const auto lex = psv_nsv_stack(bundle.sa);

        auto sa_copy = bundle.sa;
        const auto text_plain = psv_nsv_peak_text(t, std::move(sa_copy));
        auto sa_copy2 = bundle.sa;
        const auto text_inter = psv_nsv_peak_text(t, std::move(sa_copy2), Layout::interleaved);

        REQUIRE(text_plain.peak_eliminations <= static_cast<std::uint64_t>(n));
        for (Idx i = 1; i <= n; ++i) {
            const Idx p = bundle.sa[i];
            const Idx expect_psv = lex.psv[i] == 0 ? 0 : bundle.sa[lex.psv[i]];
            const Idx expect_nsv = lex.nsv[i] == 0 ? 0 : bundle.sa[lex.nsv[i]];
            REQUIRE(text_plain.psv[p] == expect_psv);
            REQUIRE(text_plain.nsv[p] == expect_nsv);
            REQUIRE(text_inter.psv_at(p) == expect_psv);
            REQUIRE(text_inter.nsv_at(p) == expect_nsv);
        }
        // no undefined markers survive; every value is a position or 0
        for (Idx p = 1; p <= n; ++p) {
            REQUIRE(text_plain.psv[p] >= 0);
            REQUIRE(text_plain.psv[p] <= n);
            REQUIRE(text_plain.nsv[p] >= 0);
            REQUIRE(text_plain.nsv[p] <= n);
        }
    }
}

TEST_CASE("brute oracle refuses above its cap") {
    const auto sa = one_based({3, 2, 1});
    CHECK_THROWS_AS(psv_nsv_brute(sa, 2), OracleLimitError);
}

TEST_CASE("csv dump") {
    const auto sa = one_based({6, 4, 2, 1, 5, 3});
    const auto na = psv_nsv_stack(sa);
    std::ostringstream out;
    write_neighbors_csv(out, sa, na);
    CHECK(out.str() ==
          "i,sa,psv,nsv\n"
          "1,6,0,2\n2,4,0,3\n3,2,0,4\n4,1,0,0\n5,5,4,6\n6,3,4,0\n");
}

}  // TEST_SUITE
