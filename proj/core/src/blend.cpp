#include "metaca/blend.hpp"

#include <stdexcept>

namespace metaca {

partial_rule_table partial_rule_table::from_string(std::string_view text) {
    if (text.size() != 8) {
        throw std::invalid_argument("partial rule literal must have 8 characters");
    }
    partial_rule_table p;
    for (int n = 0; n < 8; ++n) {
        switch (text[static_cast<std::size_t>(n)]) {
        case '0': p = p.with_entry(n, false); break;
        case '1': p = p.with_entry(n, true); break;
        case 'U': break;
        default: throw std::invalid_argument("partial rule literal may only contain '0'/'1'/'U'");
        }
    }
    return p;
}

rule_table partial_rule_table::to_rule() const {
    if (!total()) {
        throw std::logic_error("partial rule has undefined entries");
    }
    rule_table r;
    for (int n = 0; n < 8; ++n) {
        r = r.with_output(n, value(n));
    }
    return r;
}

std::string partial_rule_table::to_string() const {
    std::string s(8, 'U');
    for (int n = 0; n < 8; ++n) {
        if (defined(n)) {
            s[static_cast<std::size_t>(n)] = value(n) ? '1' : '0';
        }
    }
    return s;
}

partial_rule_table weaken(rule_table rule, std::span<const int> conflicts) {
    for (int index : conflicts) {
        if (index < 0 || index > 7) {
            throw std::out_of_range("allele index must be in [0,7], got " + std::to_string(index));
        }
    }
    partial_rule_table p = partial_rule_table::from_rule(rule);
    for (int index : conflicts) {
        p = p.without_entry(index);
    }
    return p;
}

partial_rule_table weaken(rule_table rule, std::initializer_list<int> conflicts) {
    return weaken(rule, std::span<const int>(conflicts.begin(), conflicts.size()));
}

std::optional<partial_rule_table> merge(const partial_rule_table& a, const partial_rule_table& b) noexcept {
    partial_rule_table out = a;
    for (int n = 0; n < 8; ++n) {
        if (!b.defined(n)) {
            continue;
        }
        if (a.defined(n) && a.value(n) != b.value(n)) {
            return std::nullopt;
        }
        out = out.with_entry(n, b.value(n));
    }
    return out;
}

rule_table blend_via_weakening(rule_table left, rule_table local, rule_table right) {
    const partial_rule_table shared = generic_space(left, right);
    int conflicts[8];
    std::size_t count = 0;
    for (int n = 0; n < 8; ++n) {
        if (!shared.defined(n)) {
            conflicts[count++] = n;
        }
    }
    const std::span<const int> conflict_set(conflicts, count);
    const auto merged = merge(weaken(left, conflict_set), weaken(right, conflict_set));
    if (!merged) {
        throw std::logic_error("weakened rules disagree on a retained allele");
    }
    return complete_with_local(*merged, left, local, right);
}

std::string blend_template::to_string() const {
    std::string s(8, '*');
    for (int n = 0; n < 8; ++n) {
        if (locks(n)) {
            s[static_cast<std::size_t>(n)] = locked_value(n) ? '1' : '0';
        }
    }
    return s;
}

blend_template blend_template::from_string(std::string_view text) {
    if (text.size() != 8) {
        throw std::invalid_argument("blend template literal must have 8 characters");
    }
    blend_template t;
    for (int n = 0; n < 8; ++n) {
        switch (text[static_cast<std::size_t>(n)]) {
        case '0': t = t.with_locked(n, false); break;
        case '1': t = t.with_locked(n, true); break;
        case '*': break;
        default: throw std::invalid_argument("blend template literal may only contain '0'/'1'/'*'");
        }
    }
    return t;
}

} // namespace metaca
