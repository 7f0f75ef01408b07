#include "morsify/ideal.hpp"

#include <algorithm>

#include "morsify/errors.hpp"

namespace morsify {

namespace {

std::vector<bool> last_variable_mask(std::size_t nvars)
{
    std::vector<bool> mask(nvars, false);
    mask.back() = true;
    return mask;
}

Ideal drop_last_variable(const Ideal& ideal)
{
    const std::size_t n = ideal.nvars() - 1;
    std::vector<Polynomial> gens;
    for (const auto& g : ideal.generators())
        gens.push_back(g.truncate_ring(n));
    return Ideal(n, std::move(gens));
}

} // namespace

Ideal eliminate(const Ideal& ideal, const std::vector<bool>& front, const GroebnerLimits& limits)
{
    const std::size_t n = ideal.nvars();
    if (front.size() != n)
        throw InternalError("elimination mask does not match ring");
    if (std::all_of(front.begin(), front.end(), [](bool b) { return b; }))
        throw InternalError("cannot eliminate every variable");
    if (ideal.is_zero())
        return ideal;

    GroebnerBasis gb = buchberger(ideal, MonomialOrder::block(front), limits);
    std::vector<Polynomial> kept;
    for (const auto& g : gb.elements()) {
        bool free = true;
        for (std::size_t i = 0; i < n && free; ++i)
            if (front[i] && g.uses_variable(i))
                free = false;
        if (free)
            kept.push_back(g);
    }
    return Ideal(n, std::move(kept));
}

Ideal intersection(const Ideal& a, const Ideal& b, const GroebnerLimits& limits)
{
    if (a.nvars() != b.nvars())
        throw InternalError("ideals live in different rings");
    if (a.is_zero() || b.is_zero())
        return Ideal(a.nvars());
    const std::size_t n = a.nvars();
    const Polynomial t = Polynomial::variable(n + 1, n);
    const Polynomial one_minus_t = Polynomial::constant(n + 1, 1) - t;
    std::vector<Polynomial> gens;
    for (const auto& g : a.generators())
        gens.push_back(t * g.extend(1));
    for (const auto& g : b.generators())
        gens.push_back(one_minus_t * g.extend(1));
    return drop_last_variable(eliminate(Ideal(n + 1, std::move(gens)), last_variable_mask(n + 1), limits));
}

Ideal ideal_quotient(const Ideal& ideal, const Polynomial& h, const GroebnerLimits& limits)
{
    if (h.is_zero())
        throw InternalError("ideal quotient by the zero polynomial");
    if (ideal.is_zero())
        return ideal;
    if (h.is_constant())
        return ideal;
    Ideal meet = intersection(ideal, Ideal(ideal.nvars(), {h}), limits);
    std::vector<Polynomial> gens;
    for (const auto& g : meet.generators()) {
        auto q = divide_exact(g, h);
        if (!q)
            throw InternalError("intersection with (h) produced a non-multiple of h");
        gens.push_back(std::move(*q));
    }
    return Ideal(ideal.nvars(), std::move(gens));
}

Ideal saturation(const Ideal& ideal, const Polynomial& h, const GroebnerLimits& limits)
{
    if (h.is_zero())
        throw InternalError("saturation by the zero polynomial");
    const auto order = MonomialOrder::grevlex();
    if (ideal.is_zero())
        return ideal;
    GroebnerBasis current = buchberger(ideal, order, limits);
    if (h.is_constant() || current.is_unit())
        return current.ideal();
    for (;;) {
        Ideal next = ideal_quotient(current.ideal(), h, limits);
        // current ⊆ next always; equality means the chain is stable.
        if (contains(current, next))
            return current.ideal();
        current = buchberger(next, order, limits);
        if (current.is_unit())
            return current.ideal();
    }
}

Ideal saturation(const Ideal& ideal, const Ideal& by, const GroebnerLimits& limits)
{
    const std::size_t n = ideal.nvars();
    if (by.nvars() != n)
        throw InternalError("ideals live in different rings");
    if (by.is_zero())
        return Ideal::unit(n);
    std::optional<Ideal> acc;
    for (const auto& h : by.generators()) {
        Ideal part = saturation(ideal, h, limits);
        if (buchberger(part, MonomialOrder::grevlex(), limits).is_unit())
            continue;
        acc = acc ? intersection(*acc, part, limits) : part;
    }
    if (!acc)
        return Ideal::unit(n);
    return buchberger(*acc, MonomialOrder::grevlex(), limits).ideal();
}

int krull_dimension(const GroebnerBasis& basis)
{
    if (basis.is_unit())
        return -1;
    const std::size_t n = basis.nvars();
    if (n > 20)
        throw NotSupported("dimension search over more than 20 variables");
    const auto& leads = basis.leading_monomials();
    int best = 0;
    for (unsigned long subset = 0; subset < (1ul << n); ++subset) {
        int size = __builtin_popcountl(subset);
        if (size <= best)
            continue;
        bool independent = std::none_of(leads.begin(), leads.end(), [&](const Monomial& m) {
            for (std::size_t i = 0; i < n; ++i)
                if (m[i] != 0 && !(subset & (1ul << i)))
                    return false;
            return true;
        });
        if (independent)
            best = size;
    }
    return best;
}

int krull_dimension(const Ideal& ideal, const GroebnerLimits& limits)
{
    return krull_dimension(buchberger(ideal, MonomialOrder::grevlex(), limits));
}

std::optional<std::vector<Monomial>> quotient_basis(const GroebnerBasis& basis)
{
    const std::size_t n = basis.nvars();
    if (basis.is_unit())
        return std::vector<Monomial>{};
    std::vector<std::uint32_t> bound(n, 0);
    for (const auto& m : basis.leading_monomials()) {
        std::size_t support = 0, var = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (m[i] != 0) {
                ++support;
                var = i;
            }
        if (support == 1 && (bound[var] == 0 || m[var] < bound[var]))
            bound[var] = m[var];
    }
    if (std::any_of(bound.begin(), bound.end(), [](std::uint32_t b) { return b == 0; }))
        return std::nullopt;

    std::vector<Monomial> out;
    Monomial m(n, 0);
    for (;;) {
        bool standard = std::none_of(basis.leading_monomials().begin(), basis.leading_monomials().end(),
                                     [&](const Monomial& lead) { return divides(lead, m); });
        if (standard)
            out.push_back(m);
        std::size_t i = 0;
        while (i < n && ++m[i] == bound[i])
            m[i++] = 0;
        if (i == n)
            break;
    }
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return basis.order().less(a, b); });
    return out;
}

std::optional<std::vector<Monomial>> quotient_basis(const Ideal& ideal, const GroebnerLimits& limits)
{
    return quotient_basis(buchberger(ideal, MonomialOrder::grevlex(), limits));
}

bool radical_contains(const Ideal& ideal, const Polynomial& p, const GroebnerLimits& limits)
{
    const std::size_t n = ideal.nvars();
    if (p.is_zero())
        return true;
    std::vector<Polynomial> gens;
    for (const auto& g : ideal.generators())
        gens.push_back(g.extend(1));
    gens.push_back(Polynomial::constant(n + 1, 1) - Polynomial::variable(n + 1, n) * p.extend(1));
    return buchberger(Ideal(n + 1, std::move(gens)), MonomialOrder::grevlex(), limits).is_unit();
}

} // namespace morsify
