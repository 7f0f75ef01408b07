#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "morsify/polynomial.hpp"

namespace morsify {

/// Ordered, duplicate-free list of variable names for one ring.
class VariableSet {
public:
    VariableSet() = default;
    explicit VariableSet(std::vector<std::string> names);

    std::size_t size() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    std::optional<std::size_t> index_of(std::string_view name) const;

    // New set with `extra` appended; the names must not collide.
    VariableSet with_appended(const std::vector<std::string>& extra) const;

    friend bool operator==(const VariableSet&, const VariableSet&) = default;

private:
    std::vector<std::string> names_;
};

bool is_identifier(std::string_view text);

// Grammar: sums and differences of products of powers. Integers, "a/b"
// rational literals, variables, parentheses, natural exponents after '^'.
// Implicit multiplication is rejected. Throws ParseError or InputError.
Polynomial parse_polynomial(std::string_view text, const VariableSet& vars);

// Canonical text: terms by descending total degree, ties broken
// lexicographically; parse_polynomial(format_polynomial(p)) == p.
std::string format_polynomial(const Polynomial& p, const VariableSet& vars);

} // namespace morsify
