#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "lzbg/suffix_array.hpp"
#include "test_helpers.hpp"

using namespace lzbg;
using namespace lzbg::test;

TEST_SUITE("suffix_array") {

TEST_CASE("banana") {
    const Text t("banana");
    CHECK(body(build_sa_naive(t)) == std::vector<Idx>{6, 4, 2, 1, 5, 3});
    CHECK(body(build_sa(t).sa) == std::vector<Idx>{6, 4, 2, 1, 5, 3});
}

TEST_CASE("empty text") {
    const Text t("");
    const auto bundle = build_sa(t);
    CHECK(bundle.size() == 0);
    CHECK(body(bundle.sa).empty());
    CHECK(body(build_sa_naive(t)).empty());
}

TEST_CASE("single character") {
    CHECK(body(build_sa_naive(Text("a"))) == std::vector<Idx>{1});
    CHECK(body(build_sa(Text("a")).sa) == std::vector<Idx>{1});
}

TEST_CASE("aaaa sorts by decreasing position") {
    CHECK(body(build_sa_naive(Text("aaaa"))) == std::vector<Idx>{4, 3, 2, 1});
    CHECK(body(build_sa(Text("aaaa")).sa) == std::vector<Idx>{4, 3, 2, 1});
}

TEST_CASE("matches the naive oracle on the running example") {
    const Text t("abaabababaaaaabbabab");
    CHECK(body(build_sa(t).sa) == body(build_sa_naive(t)));
}

TEST_CASE("naive oracle refuses above its cap") {
    CHECK_THROWS_AS(build_sa_naive(Text("banana"), 5), OracleLimitError);
}

TEST_CASE("matches the naive oracle on random texts") {
    std::mt19937_64 rng(20240811);
    for (int round = 0; round < 400; ++round) {
        const int alphabet = kAlphabets[round % 4];
        const Idx n = static_cast<Idx>(rng() % 600);
        const Text t = random_text(rng, n, alphabet);
        const auto bundle = build_sa(t);
        REQUIRE(bundle.sa == build_sa_naive(t));
        // isa inverts sa
        for (Idx i = 1; i <= n; ++i) REQUIRE(bundle.isa[bundle.sa[i]] == i);
    }
}

TEST_CASE("matches the naive oracle on structured inputs") {
    std::vector<std::string> inputs = {
        std::string(500, 'a'),
        "abababababababababababab",
        "abcabcabcabcabcabcabcabc",
        "zyxwvutsrqponmlkjihgfedcba",
        "mississippi",
        "aabbaabbaabbaa",
    };
    std::string ascending;
    for (int c = 0; c < 256; ++c) ascending.push_back(static_cast<char>(c));
    inputs.push_back(ascending);
    for (const auto& s : inputs) {
        const Text t(s);
        CHECK(body(build_sa(t).sa) == body(build_sa_naive(t)));
    }
}

TEST_CASE("larger random texts round-trip through isa") {
    std::mt19937_64 rng(7);
    for (int alphabet : {2, 256}) {
        const Text t = random_text(rng, 10000, alphabet);
        const auto bundle = build_sa(t);
        REQUIRE(bundle.sa == build_sa_naive(t, 10000));
        std::vector<Idx> seen(static_cast<std::size_t>(t.length()) + 1, 0);
        for (Idx i = 1; i <= t.length(); ++i) seen[bundle.sa[i]] += 1;
        CHECK(std::count(seen.begin() + 1, seen.end(), 1) == t.length());
    }
}

TEST_CASE("phi examples") {
    const auto bundle = build_sa(Text("banana"));
    const auto phi = build_phi(bundle.sa);
    // phi[6]=0, phi[4]=6, phi[2]=4, phi[1]=2, phi[5]=1, phi[3]=5
    CHECK(body(phi) == std::vector<Idx>{2, 4, 5, 6, 1, 0});

    const std::vector<Idx> single = {0, 1};
    CHECK(body(build_phi(single)) == std::vector<Idx>{0});
}

TEST_CASE("phi is a shifted permutation and reconstructs sa") {
    std::mt19937_64 rng(99);
    for (int round = 0; round < 50; ++round) {
        const Idx n = 1 + static_cast<Idx>(rng() % 300);
        const Text t = random_text(rng, n, kAlphabets[round % 4]);
        const auto bundle = build_sa(t);
        const auto phi = build_phi(bundle.sa);

        // every sa entry except sa[N] appears exactly once as a phi value
        std::vector<int> times(static_cast<std::size_t>(n) + 1, 0);
        for (Idx j = 1; j <= n; ++j)
            if (phi[j] != 0) times[phi[j]] += 1;
        for (Idx i = 1; i < n; ++i) REQUIRE(times[bundle.sa[i]] == 1);
        REQUIRE(times[bundle.sa[n]] == 0);

        // walking phi links from the position absent from phi's image
        // enumerates sa back to front
        Idx start = 0;
        for (Idx j = 1; j <= n; ++j)
            if (times[j] == 0) start = j;
        std::vector<Idx> rebuilt(static_cast<std::size_t>(n) + 1, 0);
        Idx cur = start;
        for (Idx i = n; i >= 1; --i) {
            rebuilt[i] = cur;
            cur = phi[cur];
        }
        REQUIRE(cur == 0);
        REQUIRE(rebuilt == bundle.sa);
    }
}

TEST_CASE("csv dump") {
    const auto bundle = build_sa(Text("banana"));
    std::ostringstream out;
    write_sa_csv(out, bundle);
    CHECK(out.str() ==
          "rank,sa,isa_of_sa,phi_of_sa\n"
          "1,6,1,0\n2,4,2,6\n3,2,3,4\n4,1,4,2\n5,5,5,1\n6,3,6,5\n");
}

}  // TEST_SUITE
