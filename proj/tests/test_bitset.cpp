#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "fcaerr/bitset.hpp"

using fcaerr::Bitset;

TEST_CASE("basic bit operations", "[bitset]") {
    Bitset b(70);
    REQUIRE(b.size() == 70);
    REQUIRE(b.none());
    b.set(0);
    b.set(63);
    b.set(64);
    b.set(69);
    REQUIRE(b.count() == 4);
    REQUIRE(b.test(63));
    REQUIRE(b.test(64));
    REQUIRE_FALSE(b.test(1));
    b.reset(63);
    REQUIRE(b.count() == 3);
    REQUIRE(b.indices() == std::vector<std::size_t>{0, 64, 69});
}

TEST_CASE("set algebra and subset tests", "[bitset]") {
    Bitset a = Bitset::of(8, {0, 2, 5});
    Bitset b = Bitset::of(8, {2, 5, 7});
    REQUIRE((a & b) == Bitset::of(8, {2, 5}));
    REQUIRE((a | b) == Bitset::of(8, {0, 2, 5, 7}));
    REQUIRE((a - b) == Bitset::of(8, {0}));
    REQUIRE(Bitset::of(8, {2, 5}).is_subset_of(a));
    REQUIRE_FALSE(a.is_subset_of(b));
    REQUIRE(a.intersects(b));
    REQUIRE_FALSE(Bitset::of(8, {1}).intersects(a));
}

TEST_CASE("complement keeps trailing bits clean", "[bitset]") {
    Bitset a = Bitset::of(67, {0, 66});
    Bitset c = a.complement();
    REQUIRE(c.count() == 65);
    REQUIRE_FALSE(c.test(0));
    REQUIRE(c.test(1));
    REQUIRE((a | c) == Bitset::full(67));
}

TEST_CASE("width mismatch is rejected", "[bitset]") {
    Bitset a(4), b(5);
    REQUIRE_THROWS_AS(a &= b, std::invalid_argument);
    REQUIRE_THROWS_AS(a.is_subset_of(b), std::invalid_argument);
}

TEST_CASE("equal_below compares prefixes only", "[bitset]") {
    Bitset a = Bitset::of(130, {3, 70, 128});
    Bitset b = Bitset::of(130, {3, 70, 129});
    REQUIRE(a.equal_below(b, 128));
    REQUIRE(a.equal_below(b, 129));
    REQUIRE_FALSE(a.equal_below(b, 130));
    Bitset c = Bitset::of(130, {4, 70});
    REQUIRE(a.equal_below(c, 3));
    REQUIRE_FALSE(a.equal_below(c, 5));
}

TEST_CASE("canonical order sorts by cardinality then first difference", "[bitset]") {
    std::vector<Bitset> fam = {
        Bitset::of(5, {1, 2}), Bitset::of(5, {0, 4}), Bitset::of(5, {3}),
        Bitset::of(5, {}),     Bitset::of(5, {0, 1, 2}),
    };
    std::sort(fam.begin(), fam.end(), fcaerr::CanonicalLess{});
    REQUIRE(fam[0] == Bitset::of(5, {}));
    REQUIRE(fam[1] == Bitset::of(5, {3}));
    REQUIRE(fam[2] == Bitset::of(5, {0, 4}));  // index 0 beats index 1
    REQUIRE(fam[3] == Bitset::of(5, {1, 2}));
    REQUIRE(fam[4] == Bitset::of(5, {0, 1, 2}));

    // strict weak ordering sanity on random data
    std::mt19937 rng(7);
    std::vector<Bitset> rnd;
    for (int i = 0; i < 200; ++i) {
        Bitset b(40);
        for (int j = 0; j < 40; ++j)
            if (rng() & 1) b.set(j);
        rnd.push_back(b);
    }
    std::sort(rnd.begin(), rnd.end(), fcaerr::CanonicalLess{});
    REQUIRE(std::is_sorted(rnd.begin(), rnd.end(), fcaerr::CanonicalLess{}));
    for (std::size_t i = 0; i + 1 < rnd.size(); ++i)
        REQUIRE(rnd[i].count() <= rnd[i + 1].count());
}

TEST_CASE("hash agrees with equality", "[bitset]") {
    Bitset a = Bitset::of(100, {0, 50, 99});
    Bitset b = Bitset::of(100, {0, 50, 99});
    Bitset c = Bitset::of(100, {0, 50});
    REQUIRE(a.hash() == b.hash());
    REQUIRE(a.hash() != c.hash());  // not guaranteed in general, but true here
}
