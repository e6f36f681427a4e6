#include "metaca/rule.hpp"

#include <algorithm>
#include <stdexcept>

namespace metaca {

namespace {

constexpr std::uint8_t reverse_bits(std::uint8_t b) noexcept {
    b = static_cast<std::uint8_t>((b & 0xf0) >> 4 | (b & 0x0f) << 4);
    b = static_cast<std::uint8_t>((b & 0xcc) >> 2 | (b & 0x33) << 2);
    b = static_cast<std::uint8_t>((b & 0xaa) >> 1 | (b & 0x55) << 1);
    return b;
}

} // namespace

rule_table rule_table::from_number(int value, rule_convention conv) {
    if (value < 0 || value > 255) {
        throw std::out_of_range("rule number must be in [0,255], got " + std::to_string(value));
    }
    const std::uint8_t ascending = conv == rule_convention::ascending
                                       ? static_cast<std::uint8_t>(value)
                                       : reverse_bits(static_cast<std::uint8_t>(value));
    rule_table r;
    for (int n = 0; n < 8; ++n) {
        r = r.with_output(n, (ascending >> (7 - n)) & 1);
    }
    return r;
}

rule_table rule_table::from_string(std::string_view bits) {
    if (bits.size() != 8) {
        throw std::invalid_argument("rule literal must have 8 characters");
    }
    rule_table r;
    for (int n = 0; n < 8; ++n) {
        const char c = bits[static_cast<std::size_t>(n)];
        if (c != '0' && c != '1') {
            throw std::invalid_argument("rule literal may only contain '0'/'1'");
        }
        r = r.with_output(n, c == '1');
    }
    return r;
}

int rule_table::to_number(rule_convention conv) const noexcept {
    return conv == rule_convention::ascending ? bits_ : reverse_bits(bits_);
}

std::string rule_table::to_string() const {
    std::string s(8, '0');
    for (int n = 0; n < 8; ++n) {
        s[static_cast<std::size_t>(n)] = output(n) ? '1' : '0';
    }
    return s;
}

std::vector<rule_table> family_closure(rule_table base) {
    std::vector<rule_table> members{base, mirror(base), complement(base), mirror(complement(base))};
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return members;
}

rule_family classify(rule_table rule) noexcept {
    static const std::array<rule_family, 256> table = [] {
        std::array<rule_family, 256> t{};
        t.fill(rule_family::other);
        constexpr std::pair<int, rule_family> bases[] = {
            {110, rule_family::family110},
            {30, rule_family::family30},
            {90, rule_family::family90},
            {184, rule_family::family184},
        };
        for (const auto& [wolfram_number, family] : bases) {
            const rule_table base = rule_table::from_number(wolfram_number, rule_convention::wolfram);
            for (rule_table member : family_closure(base)) {
                auto& slot = t[static_cast<std::size_t>(member.to_number(rule_convention::ascending))];
                if (slot == rule_family::other) {
                    slot = family;
                }
            }
        }
        return t;
    }();
    return table[static_cast<std::size_t>(rule.to_number(rule_convention::ascending))];
}

std::string_view to_string(rule_family family) noexcept {
    switch (family) {
    case rule_family::family110: return "family110";
    case rule_family::family30: return "family30";
    case rule_family::family90: return "family90";
    case rule_family::family184: return "family184";
    case rule_family::other: return "other";
    }
    return "other";
}

} // namespace metaca
