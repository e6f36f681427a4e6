#pragma once

#include <array>
#include <bit>
#include <cassert>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace metaca {

// Numbering conventions for the 256 elementary rules.
//
// ascending reads the output column for neighbourhoods 000..111 as a
// big-endian binary string (the order every printed rule listing uses);
// wolfram is its bit reversal and matches the literature numbering for
// Rule 110, Rule 30 and friends. The table printed as "01010100" is 84 in
// the ascending convention and 42 in Wolfram's.
enum class rule_convention { ascending, wolfram };

// An elementary 1D CA rule: one output bit per 3-cell neighbourhood.
// Neighbourhood n in [0,8) encodes (left, centre, right) big-endian,
// so "011" is n = 3.
class rule_table {
public:
    constexpr rule_table() noexcept = default;

    // value must be in [0,255].
    static rule_table from_number(int value, rule_convention conv);

    // 8 characters of '0'/'1', leftmost = output for neighbourhood 000.
    static rule_table from_string(std::string_view bits);

    static constexpr rule_table from_outputs(const std::array<bool, 8>& outputs) noexcept {
        rule_table r;
        for (int n = 0; n < 8; ++n) {
            r = r.with_output(n, outputs[n]);
        }
        return r;
    }

    int to_number(rule_convention conv) const noexcept;
    std::string to_string() const;

    constexpr bool output(int neighbourhood) const noexcept {
        assert(neighbourhood >= 0 && neighbourhood < 8);
        return ((bits_ >> (7 - neighbourhood)) & 1) != 0;
    }

    constexpr rule_table with_output(int neighbourhood, bool bit) const noexcept {
        assert(neighbourhood >= 0 && neighbourhood < 8);
        rule_table r = *this;
        const std::uint8_t mask = static_cast<std::uint8_t>(1u << (7 - neighbourhood));
        r.bits_ = bit ? (r.bits_ | mask) : (r.bits_ & ~mask);
        return r;
    }

    constexpr bool apply(bool left, bool centre, bool right) const noexcept {
        return output(int{left} << 2 | int{centre} << 1 | int{right});
    }

    constexpr int popcount() const noexcept { return std::popcount(bits_); }

    friend constexpr bool operator==(rule_table, rule_table) noexcept = default;
    friend constexpr auto operator<=>(rule_table, rule_table) noexcept = default;

private:
    // bit (7-n) holds the output for neighbourhood n; the byte value is
    // therefore the ascending rule number.
    std::uint8_t bits_ = 0;
};

constexpr bool apply_rule(rule_table rule, bool left, bool centre, bool right) noexcept {
    return rule.apply(left, centre, right);
}

// Reflect neighbourhoods: the output for (l,c,r) becomes the output for (r,c,l).
constexpr rule_table mirror(rule_table rule) noexcept {
    rule_table r;
    for (int n = 0; n < 8; ++n) {
        const int reflected = ((n & 1) << 2) | (n & 2) | (n >> 2);
        r = r.with_output(n, rule.output(reflected));
    }
    return r;
}

// 0/1 conjugation: the output for n becomes the inverse of the output for 7-n.
constexpr rule_table complement(rule_table rule) noexcept {
    rule_table r;
    for (int n = 0; n < 8; ++n) {
        r = r.with_output(n, !rule.output(7 - n));
    }
    return r;
}

enum class rule_family { family110, family30, family90, family184, other };

// Family membership under the mirror/complement closure of the named
// Wolfram base rules, checked in the order 110, 30, 90, 184 (first match
// wins). The closures are computed, not tabulated.
rule_family classify(rule_table rule) noexcept;

// Distinct members of the mirror/complement closure of a base rule
// (1, 2 or 4 tables).
std::vector<rule_table> family_closure(rule_table base);

std::string_view to_string(rule_family family) noexcept;

} // namespace metaca
