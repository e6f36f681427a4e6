#include <doctest.h>

#include "metaca/rng.hpp"

using namespace metaca;

// Reference sequences computed with an independent implementation of the
// published algorithms.
TEST_CASE("splitmix64 matches the reference sequence") {
    splitmix64 sm(0);
    CHECK(sm.next() == 0xe220a8397b1dcdafULL);
    CHECK(sm.next() == 0x6e789e6aa1b965f4ULL);
    CHECK(sm.next() == 0x06c45d188009454fULL);
    CHECK(sm.next() == 0xf88bb8a8724c81ecULL);
    CHECK(sm.next() == 0x1b39896a51a8749bULL);

    splitmix64 sm42(42);
    CHECK(sm42.next() == 0xbdd732262feb6e95ULL);
    CHECK(sm42.next() == 0x28efe333b266f103ULL);
    CHECK(sm42.next() == 0x47526757130f9f52ULL);
}

TEST_CASE("xoshiro256** matches the reference sequence") {
    xoshiro256ss gen0(0);
    CHECK(gen0.next() == 0x99ec5f36cb75f2b4ULL);
    CHECK(gen0.next() == 0xbf6e1f784956452aULL);
    CHECK(gen0.next() == 0x1a5f849d4933e6e0ULL);
    CHECK(gen0.next() == 0x6aa594f1262d2d2cULL);
    CHECK(gen0.next() == 0xbba5ad4a1f842e59ULL);

    xoshiro256ss gen42(42);
    CHECK(gen42.next() == 0x15780b2e0c2ec716ULL);
    CHECK(gen42.next() == 0x6104d9866d113a7eULL);
    CHECK(gen42.next() == 0xae17533239e499a1ULL);

    xoshiro256ss beef(0xdeadbeef);
    CHECK(beef.next() == 0xc5555444a74d7e83ULL);
    CHECK(beef.next() == 0x65c30d37b4b16e38ULL);
    CHECK(beef.next() == 0x54f773200a4efa23ULL);
}

TEST_CASE("identical seeds give identical streams") {
    xoshiro256ss a(123456789), b(123456789);
    for (int i = 0; i < 1000; ++i) {
        REQUIRE(a.next() == b.next());
    }
}

TEST_CASE("run streams derive from master seed XOR run index") {
    xoshiro256ss direct(42 ^ 7);
    xoshiro256ss stream = run_stream(42, 7);
    for (int i = 0; i < 100; ++i) {
        REQUIRE(stream.next() == direct.next());
    }
    // run 0 is the master stream itself
    xoshiro256ss master(42);
    xoshiro256ss run0 = run_stream(42, 0);
    CHECK(run0.next() == master.next());
}

TEST_CASE("derived draws stay in range") {
    xoshiro256ss gen(99);
    for (int i = 0; i < 10000; ++i) {
        const double d = gen.next_double();
        REQUIRE(d >= 0.0);
        REQUIRE(d < 1.0);
    }
    for (int i = 0; i < 10000; ++i) {
        REQUIRE(gen.next_below(7) < 7);
    }
}
