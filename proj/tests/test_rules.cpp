#include <doctest.h>

#include "metaca/rule.hpp"

#include <set>
#include <stdexcept>

using namespace metaca;

namespace {

rule_table wolfram(int number) {
    return rule_table::from_number(number, rule_convention::wolfram);
}

rule_table ascending(int number) {
    return rule_table::from_number(number, rule_convention::ascending);
}

} // namespace

TEST_CASE("rule application follows the printed table") {
    const rule_table r = rule_table::from_string("01010100");
    CHECK(r.apply(0, 0, 0) == 0);
    CHECK(r.apply(0, 0, 1) == 1);
    CHECK(r.apply(0, 1, 0) == 0);
    CHECK(r.apply(0, 1, 1) == 1);
    CHECK(r.apply(1, 0, 0) == 0);
    CHECK(r.apply(1, 0, 1) == 1);
    CHECK(r.apply(1, 1, 0) == 0);
    CHECK(r.apply(1, 1, 1) == 0);

    const rule_table zero;
    for (int n = 0; n < 8; ++n) {
        CHECK(apply_rule(zero, (n >> 2) & 1, (n >> 1) & 1, n & 1) == 0);
    }
}

TEST_CASE("the worked-example table is ascending 84 and Wolfram 42") {
    const rule_table r = rule_table::from_string("01010100");
    CHECK(r.to_number(rule_convention::ascending) == 84);
    CHECK(r.to_number(rule_convention::wolfram) == 42);
    CHECK(rule_table().to_number(rule_convention::wolfram) == 0);
    CHECK(ascending(84) == r);
    CHECK(wolfram(42) == r);
    CHECK(r.to_string() == "01010100");
}

TEST_CASE("number round trips and the bit-reversal relation hold for all 256 rules") {
    for (int value = 0; value < 256; ++value) {
        for (const auto conv : {rule_convention::ascending, rule_convention::wolfram}) {
            CHECK(rule_table::from_number(value, conv).to_number(conv) == value);
        }
        const rule_table r = ascending(value);
        int reversed = 0;
        for (int n = 0; n < 8; ++n) {
            reversed |= ((value >> (7 - n)) & 1) << n;
        }
        CHECK(r.to_number(rule_convention::wolfram) == reversed);
        CHECK(rule_table::from_string(r.to_string()) == r);
    }
}

TEST_CASE("rule constructors reject bad input") {
    CHECK_THROWS_AS(rule_table::from_number(-1, rule_convention::wolfram), std::out_of_range);
    CHECK_THROWS_AS(rule_table::from_number(256, rule_convention::ascending), std::out_of_range);
    CHECK_THROWS_AS(rule_table::from_string("0101010"), std::invalid_argument);
    CHECK_THROWS_AS(rule_table::from_string("01010abc"), std::invalid_argument);
}

TEST_CASE("mirror reflects neighbourhoods") {
    const rule_table ones = ascending(255);
    CHECK(mirror(ones) == ones);
    // brute-force reflection oracle
    const rule_table w110 = wolfram(110);
    rule_table expected;
    for (int l = 0; l < 2; ++l) {
        for (int c = 0; c < 2; ++c) {
            for (int r = 0; r < 2; ++r) {
                expected = expected.with_output((l << 2) | (c << 1) | r, w110.apply(r, c, l));
            }
        }
    }
    CHECK(mirror(w110) == expected);
    CHECK(mirror(w110).to_number(rule_convention::wolfram) == 124);
}

TEST_CASE("complement conjugates outputs") {
    CHECK(complement(rule_table()) == ascending(255));
    // brute-force conjugation oracle
    const rule_table w110 = wolfram(110);
    rule_table expected;
    for (int n = 0; n < 8; ++n) {
        expected = expected.with_output(n, !w110.output(7 - n));
    }
    CHECK(complement(w110) == expected);
    CHECK(complement(w110).to_number(rule_convention::wolfram) == 137);
}

TEST_CASE("mirror and complement are commuting involutions") {
    for (int value = 0; value < 256; ++value) {
        const rule_table r = ascending(value);
        CHECK(mirror(mirror(r)) == r);
        CHECK(complement(complement(r)) == r);
        CHECK(mirror(complement(r)) == complement(mirror(r)));
    }
}

TEST_CASE("family closures have 1, 2 or 4 distinct members") {
    for (int value = 0; value < 256; ++value) {
        const auto members = family_closure(ascending(value));
        const auto size = members.size();
        CHECK((size == 1 || size == 2 || size == 4));
    }
}

TEST_CASE("classification finds the interesting families") {
    CHECK(classify(wolfram(110)) == rule_family::family110);
    CHECK(classify(wolfram(124)) == rule_family::family110); // mirror oracle above
    CHECK(classify(wolfram(137)) == rule_family::family110);
    CHECK(classify(wolfram(30)) == rule_family::family30);
    CHECK(classify(wolfram(90)) == rule_family::family90);
    CHECK(classify(wolfram(184)) == rule_family::family184);
    CHECK(classify(wolfram(0)) == rule_family::other);
    CHECK(classify(ascending(255)) == rule_family::other);
}

TEST_CASE("classification is invariant under mirror and complement") {
    std::set<int> interesting;
    for (int value = 0; value < 256; ++value) {
        const rule_table r = ascending(value);
        const rule_family family = classify(r);
        CHECK(classify(mirror(r)) == family);
        CHECK(classify(complement(r)) == family);
        if (family != rule_family::other) {
            interesting.insert(value);
        }
    }
    // 110 and 30 contribute 4 variants each, 90 and 184 two each
    CHECK(interesting.size() == 12);
}

TEST_CASE("family names render") {
    CHECK(to_string(rule_family::family110) == "family110");
    CHECK(to_string(rule_family::other) == "other");
}
