#pragma once

#include "metaca/rule.hpp"

#include <cassert>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace metaca {

// A rule table whose entries may be undefined. This is the home of the
// generic space of two rules and of weakened input rules.
class partial_rule_table {
public:
    constexpr partial_rule_table() noexcept = default; // all entries undefined

    // 8 characters of '0'/'1'/'U'.
    static partial_rule_table from_string(std::string_view text);

    static constexpr partial_rule_table from_rule(rule_table rule) noexcept {
        partial_rule_table p;
        for (int n = 0; n < 8; ++n) {
            p = p.with_entry(n, rule.output(n));
        }
        return p;
    }

    constexpr bool defined(int neighbourhood) const noexcept {
        assert(neighbourhood >= 0 && neighbourhood < 8);
        return (defined_ >> (7 - neighbourhood)) & 1;
    }

    // Meaningful only when defined(neighbourhood).
    constexpr bool value(int neighbourhood) const noexcept {
        assert(neighbourhood >= 0 && neighbourhood < 8);
        return (bits_ >> (7 - neighbourhood)) & 1;
    }

    constexpr std::optional<bool> entry(int neighbourhood) const noexcept {
        if (!defined(neighbourhood)) {
            return std::nullopt;
        }
        return value(neighbourhood);
    }

    constexpr partial_rule_table with_entry(int neighbourhood, bool bit) const noexcept {
        assert(neighbourhood >= 0 && neighbourhood < 8);
        partial_rule_table p = *this;
        const std::uint8_t mask = static_cast<std::uint8_t>(1u << (7 - neighbourhood));
        p.defined_ |= mask;
        p.bits_ = bit ? (p.bits_ | mask) : (p.bits_ & ~mask);
        return p;
    }

    constexpr partial_rule_table without_entry(int neighbourhood) const noexcept {
        assert(neighbourhood >= 0 && neighbourhood < 8);
        partial_rule_table p = *this;
        const std::uint8_t mask = static_cast<std::uint8_t>(1u << (7 - neighbourhood));
        p.defined_ &= ~mask;
        p.bits_ &= ~mask;
        return p;
    }

    constexpr bool total() const noexcept { return defined_ == 0xff; }
    constexpr int defined_count() const noexcept { return std::popcount(defined_); }

    // Requires total().
    rule_table to_rule() const;

    std::string to_string() const;

    friend constexpr bool operator==(const partial_rule_table&, const partial_rule_table&) noexcept = default;

private:
    std::uint8_t defined_ = 0; // bit (7-n) set iff entry n is defined
    std::uint8_t bits_ = 0;    // entry values, zero where undefined
};

// The multiplication meta-rule: the local rule applied bitwise across the
// alleles of its neighbours.
constexpr rule_table multiply(rule_table left, rule_table local, rule_table right) noexcept {
    rule_table r;
    for (int n = 0; n < 8; ++n) {
        r = r.with_output(n, local.apply(left.output(n), local.output(n), right.output(n)));
    }
    return r;
}

// Entries on which the two outer rules agree; everything else stays open.
constexpr partial_rule_table generic_space(rule_table left, rule_table right) noexcept {
    partial_rule_table p;
    for (int n = 0; n < 8; ++n) {
        if (left.output(n) == right.output(n)) {
            p = p.with_entry(n, left.output(n));
        }
    }
    return p;
}

// Remove the listed alleles from a rule. Indices must be in [0,8).
partial_rule_table weaken(rule_table rule, std::span<const int> conflicts);
partial_rule_table weaken(rule_table rule, std::initializer_list<int> conflicts);

// The blending meta-rule: consensus alleles copy the shared neighbour
// bit, the rest run the local rule.
constexpr rule_table blend(rule_table left, rule_table local, rule_table right) noexcept {
    rule_table r;
    for (int n = 0; n < 8; ++n) {
        const bool l = left.output(n);
        const bool rt = right.output(n);
        r = r.with_output(n, l == rt ? l : local.apply(l, local.output(n), rt));
    }
    return r;
}

// Fill every undefined entry of a partial rule with the local rule applied
// to (left_n, local_n, right_n).
constexpr rule_table complete_with_local(const partial_rule_table& base, rule_table left,
                                         rule_table local, rule_table right) noexcept {
    rule_table r;
    for (int n = 0; n < 8; ++n) {
        r = r.with_output(n, base.defined(n)
                                 ? base.value(n)
                                 : local.apply(left.output(n), local.output(n), right.output(n)));
    }
    return r;
}

// Union of two partial rules; nullopt when they disagree on a common allele.
std::optional<partial_rule_table> merge(const partial_rule_table& a, const partial_rule_table& b) noexcept;

// The blend spelled out as its weakening pipeline: compute the generic
// space, weaken both inputs by the conflicting alleles, merge the
// weakened rules, then complete with local logic. Agrees with blend() on
// every input; kept as the slow reference path.
rule_table blend_via_weakening(rule_table left, rule_table local, rule_table right);

// The blending principle expressed as a plain CA rule, with "local logic"
// meaning "substitute my own value": matching neighbours win, otherwise
// the centre bit is copied. Ascending number 23 (Wolfram 232).
constexpr rule_table self_rule() noexcept {
    rule_table r;
    for (int n = 0; n < 8; ++n) {
        const bool l = (n >> 2) & 1;
        const bool c = (n >> 1) & 1;
        const bool rt = n & 1;
        r = r.with_output(n, l == rt ? l : c);
    }
    return r;
}

// Per-pattern blending template: each neighbourhood pattern either locks
// the output bit or defers to the local rule.
class blend_template {
public:
    constexpr blend_template() noexcept = default; // all local logic

    // 8 characters of '0'/'1' (locked bit) or '*' (local logic).
    static blend_template from_string(std::string_view text);

    constexpr bool locks(int pattern) const noexcept {
        assert(pattern >= 0 && pattern < 8);
        return (locked_ >> (7 - pattern)) & 1;
    }

    // Meaningful only when locks(pattern).
    constexpr bool locked_value(int pattern) const noexcept {
        assert(pattern >= 0 && pattern < 8);
        return (bits_ >> (7 - pattern)) & 1;
    }

    constexpr blend_template with_locked(int pattern, bool bit) const noexcept {
        assert(pattern >= 0 && pattern < 8);
        blend_template t = *this;
        const std::uint8_t mask = static_cast<std::uint8_t>(1u << (7 - pattern));
        t.locked_ |= mask;
        t.bits_ = bit ? (t.bits_ | mask) : (t.bits_ & ~mask);
        return t;
    }

    constexpr int local_count() const noexcept { return 8 - std::popcount(locked_); }

    std::string to_string() const;

    friend constexpr bool operator==(const blend_template&, const blend_template&) noexcept = default;

private:
    std::uint8_t locked_ = 0;
    std::uint8_t bits_ = 0;
};

// The template that reproduces allele-wise blending: patterns whose outer
// bits agree are locked to the shared value, the other four defer to the
// local rule.
constexpr blend_template censored_template() noexcept {
    blend_template t;
    for (int n = 0; n < 8; ++n) {
        const bool l = (n >> 2) & 1;
        const bool rt = n & 1;
        if (l == rt) {
            t = t.with_locked(n, l);
        }
    }
    return t;
}

// Template-parameterized blend. For each allele the template is consulted
// with the data triple (left_n, local_n, right_n), exactly the way a rule
// table is applied: locked patterns emit their bit, the rest run the
// local rule on the triple.
constexpr rule_table template_blend(const blend_template& tmpl, rule_table left, rule_table local,
                                    rule_table right) noexcept {
    rule_table r;
    for (int n = 0; n < 8; ++n) {
        const bool l = left.output(n);
        const bool c = local.output(n);
        const bool rt = right.output(n);
        const int pattern = (l << 2) | (c << 1) | rt;
        r = r.with_output(n, tmpl.locks(pattern) ? tmpl.locked_value(pattern) : local.output(pattern));
    }
    return r;
}

} // namespace metaca
