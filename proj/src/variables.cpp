#include "morsify/variables.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "morsify/errors.hpp"

namespace morsify {

VariableSet::VariableSet(std::vector<std::string> names) : names_(std::move(names))
{
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (!is_identifier(n))
            throw InputError("invalid variable name '" + n + "'");
        if (!seen.insert(n).second)
            throw InputError("duplicate variable name '" + n + "'");
    }
}

std::optional<std::size_t> VariableSet::index_of(std::string_view name) const
{
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

VariableSet VariableSet::with_appended(const std::vector<std::string>& extra) const
{
    auto all = names_;
    all.insert(all.end(), extra.begin(), extra.end());
    return VariableSet(std::move(all));
}

bool is_identifier(std::string_view text)
{
    if (text.empty() || !(std::isalpha(static_cast<unsigned char>(text[0])) || text[0] == '_'))
        return false;
    return std::all_of(text.begin(), text.end(),
                       [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

namespace {

class Parser {
public:
    Parser(std::string_view text, const VariableSet& vars) : text_(text), vars_(vars) {}

    Polynomial run()
    {
        skip_space();
        if (pos_ == text_.size())
            fail("empty expression");
        Polynomial result = expression();
        skip_space();
        if (pos_ != text_.size())
            fail(std::string("unexpected '") + text_[pos_] + "'");
        return result;
    }

private:
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial expression()
    {
        Polynomial acc = signed_term();
        for (;;) {
            if (accept('+'))
                acc += signed_term();
            else if (accept('-'))
                acc -= signed_term();
            else
                return acc;
        }
    }

    Polynomial signed_term()
    {
        if (accept('-'))
            return -signed_term();
        if (accept('+'))
            return signed_term();
        return term();
    }

    Polynomial term()
    {
        Polynomial acc = power();
        while (accept('*'))
            acc *= power();
        return acc;
    }

    Polynomial power()
    {
        Polynomial base = primary();
        if (accept('^')) {
            skip_space();
            Integer e = natural();
            if (e > 4096)
                fail("exponent too large");
            base = base.pow(static_cast<unsigned>(e.get_ui()));
        }
        return base;
    }

    Integer natural()
    {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected a natural number");
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    Polynomial primary()
    {
        skip_space();
        if (pos_ >= text_.size())
            fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial inner = expression();
            if (!accept(')'))
                fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Rational value(natural());
            std::size_t save = pos_;
            if (accept('/')) {
                skip_space();
                if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                    Integer den = natural();
                    if (den == 0)
                        fail("zero denominator");
                    value /= Rational(den);
                } else {
                    pos_ = save;
                    fail("'/' is only allowed inside a rational literal");
                }
            }
            if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                fail("implicit multiplication is not allowed");
            return Polynomial::constant(vars_.size(), value);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            auto name = text_.substr(start, pos_ - start);
            auto index = vars_.index_of(name);
            if (!index) {
                pos_ = start;
                fail("unknown variable '" + std::string(name) + "'");
            }
            return Polynomial::variable(vars_.size(), *index);
        }
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view text_;
    const VariableSet& vars_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(std::string_view text, const VariableSet& vars)
{
    return Parser(text, vars).run();
}

std::string format_polynomial(const Polynomial& p, const VariableSet& vars)
{
    if (p.nvars() != vars.size())
        throw InternalError("variable set does not match polynomial ring");
    if (p.is_zero())
        return "0";

    std::vector<std::pair<Monomial, Rational>> terms(p.terms().begin(), p.terms().end());
    std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        auto da = total_degree(a.first), db = total_degree(b.first);
        if (da != db)
            return da > db;
        return a.first > b.first;
    });

    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms) {
        Rational magnitude = abs(c);
        if (first) {
            if (c < 0)
                out << '-';
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;

        std::vector<std::string> factors;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0)
                continue;
            factors.push_back(m[i] == 1 ? vars.name(i) : vars.name(i) + "^" + std::to_string(m[i]));
        }
        bool unit = magnitude == 1;
        if (!unit || factors.empty())
            out << magnitude.get_str();
        for (std::size_t k = 0; k < factors.size(); ++k) {
            if (k > 0 || !unit)
                out << '*';
            out << factors[k];
        }
    }
    return out.str();
}

} // namespace morsify
