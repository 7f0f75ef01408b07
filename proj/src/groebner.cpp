#include "morsify/groebner.hpp"

#include <algorithm>
#include <string>

#include "morsify/errors.hpp"

namespace morsify {

namespace {

int grevlex_compare(const Monomial& a, const Monomial& b, const std::vector<bool>* mask, bool want)
{
    std::uint32_t da = 0, db = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (mask && (*mask)[i] != want)
            continue;
        da += a[i];
        db += b[i];
    }
    if (da != db)
        return da < db ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (mask && (*mask)[i] != want)
            continue;
        if (a[i] != b[i])
            return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

// Terms sorted by decreasing monomial in the active order.
using Term = std::pair<Monomial, Rational>;
using OrderedPoly = std::vector<Term>;

OrderedPoly to_ordered(const Polynomial& p, const MonomialOrder& order)
{
    OrderedPoly out(p.terms().begin(), p.terms().end());
    std::sort(out.begin(), out.end(), [&](const Term& a, const Term& b) { return order.compare(a.first, b.first) > 0; });
    return out;
}

Polynomial from_ordered(std::size_t nvars, const OrderedPoly& p)
{
    Polynomial::TermMap terms(p.begin(), p.end());
    return Polynomial(nvars, std::move(terms));
}

void make_monic(OrderedPoly& p)
{
    if (p.empty() || p.front().second == 1)
        return;
    Rational inv = 1 / p.front().second;
    for (auto& t : p)
        t.second *= inv;
}

// a - c * shift * b, merged in order.
OrderedPoly sub_scaled(const OrderedPoly& a, const Rational& c, const Monomial& shift, const OrderedPoly& b,
                       const MonomialOrder& order)
{
    OrderedPoly out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    Monomial shifted;
    bool have_shifted = false;
    while (i < a.size() || j < b.size()) {
        if (j < b.size() && !have_shifted) {
            shifted = monomial_product(b[j].first, shift);
            have_shifted = true;
        }
        int cmp;
        if (i == a.size())
            cmp = -1;
        else if (j == b.size())
            cmp = 1;
        else
            cmp = order.compare(a[i].first, shifted);
        if (cmp > 0) {
            out.push_back(a[i++]);
        } else if (cmp < 0) {
            out.emplace_back(std::move(shifted), -c * b[j].second);
            have_shifted = false;
            ++j;
        } else {
            Rational v = a[i].second - c * b[j].second;
            if (v != 0)
                out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
            have_shifted = false;
        }
    }
    return out;
}

// Full reduction of p by the list; the list entries are monic.
OrderedPoly reduce(OrderedPoly p, const std::vector<OrderedPoly>& by, const MonomialOrder& order,
                   std::size_t skip = static_cast<std::size_t>(-1))
{
    OrderedPoly remainder;
    while (!p.empty()) {
        const Monomial& lead = p.front().first;
        bool reduced = false;
        for (std::size_t k = 0; k < by.size(); ++k) {
            if (k == skip || by[k].empty())
                continue;
            if (divides(by[k].front().first, lead)) {
                Rational c = p.front().second;
                Monomial shift = monomial_quotient(lead, by[k].front().first);
                p = sub_scaled(p, c, shift, by[k], order);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            remainder.push_back(std::move(p.front()));
            p.erase(p.begin());
        }
    }
    return remainder;
}

struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
};

OrderedPoly s_polynomial(const OrderedPoly& a, const OrderedPoly& b, const Monomial& lcm, const MonomialOrder& order)
{
    // Both inputs are monic.
    OrderedPoly sa;
    Monomial shift_a = monomial_quotient(lcm, a.front().first);
    sa.reserve(a.size());
    for (const auto& [m, c] : a)
        sa.emplace_back(monomial_product(m, shift_a), c);
    return sub_scaled(sa, 1, monomial_quotient(lcm, b.front().first), b, order);
}

bool coprime(const Monomial& a, const Monomial& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0)
            return false;
    return true;
}

} // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const
{
    switch (kind_) {
    case OrderKind::lex:
        if (a == b)
            return 0;
        return a < b ? -1 : 1;
    case OrderKind::grevlex:
        return grevlex_compare(a, b, nullptr, true);
    case OrderKind::block_elimination:
        if (front_.size() != a.size())
            throw InternalError("block order mask does not match ring");
        if (int c = grevlex_compare(a, b, &front_, true); c != 0)
            return c;
        return grevlex_compare(a, b, &front_, false);
    }
    return 0;
}

Monomial leading_monomial(const Polynomial& p, const MonomialOrder& order)
{
    if (p.is_zero())
        throw InternalError("leading monomial of zero");
    const Monomial* best = &p.terms().begin()->first;
    for (const auto& [m, c] : p.terms())
        if (order.compare(m, *best) > 0)
            best = &m;
    return *best;
}

Rational leading_coefficient(const Polynomial& p, const MonomialOrder& order)
{
    return p.coefficient(leading_monomial(p, order));
}

Ideal::Ideal(std::size_t nvars, std::vector<Polynomial> generators) : nvars_(nvars)
{
    for (auto& g : generators) {
        if (g.nvars() != nvars)
            throw InternalError("ideal generator lives in a different ring");
        if (!g.is_zero())
            generators_.push_back(std::move(g));
    }
}

Ideal Ideal::operator+(const Ideal& other) const
{
    if (other.nvars_ != nvars_)
        throw InternalError("ideals live in different rings");
    auto gens = generators_;
    gens.insert(gens.end(), other.generators_.begin(), other.generators_.end());
    return Ideal(nvars_, std::move(gens));
}

GroebnerBasis::GroebnerBasis(std::size_t nvars, MonomialOrder order, std::vector<Polynomial> basis)
    : nvars_(nvars), order_(std::move(order)), basis_(std::move(basis))
{
    leads_.reserve(basis_.size());
    for (const auto& g : basis_)
        leads_.push_back(leading_monomial(g, order_));
}

bool GroebnerBasis::is_unit() const
{
    return basis_.size() == 1 && basis_.front().is_constant();
}

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order, const GroebnerLimits& limits)
{
    const std::size_t n = ideal.nvars();
    if (order.kind() == OrderKind::block_elimination && order.front().size() != n)
        throw InternalError("block order mask does not match ring");

    std::vector<OrderedPoly> basis;
    std::vector<Pair> pairs;
    std::size_t processed = 0;

    auto check_degree = [&](const OrderedPoly& p) {
        for (const auto& t : p)
            if (total_degree(t.first) > limits.max_degree)
                throw ResourceCapExceeded("Groebner basis degree exceeds cap of " + std::to_string(limits.max_degree));
    };

    auto add = [&](OrderedPoly g) {
        make_monic(g);
        const std::size_t idx = basis.size();
        basis.push_back(std::move(g));
        for (std::size_t i = 0; i < idx; ++i) {
            if (basis[i].empty())
                continue;
            pairs.push_back({i, idx, monomial_lcm(basis[i].front().first, basis[idx].front().first)});
        }
    };

    for (const auto& g : ideal.generators()) {
        OrderedPoly p = reduce(to_ordered(g, order), basis, order);
        if (p.empty())
            continue;
        check_degree(p);
        if (total_degree(p.front().first) == 0) {
            basis.assign(1, OrderedPoly{{Monomial(n, 0), Rational(1)}});
            pairs.clear();
            break;
        }
        add(std::move(p));
    }

    auto pending = [&](std::size_t a, std::size_t b) {
        if (a > b)
            std::swap(a, b);
        return std::any_of(pairs.begin(), pairs.end(), [&](const Pair& p) { return p.i == a && p.j == b; });
    };

    while (!pairs.empty()) {
        auto pick = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
            int c = order.compare(a.lcm, b.lcm);
            if (c != 0)
                return c < 0;
            return std::tie(a.j, a.i) < std::tie(b.j, b.i);
        });
        Pair pair = *pick;
        pairs.erase(pick);

        const auto& gi = basis[pair.i];
        const auto& gj = basis[pair.j];
        if (coprime(gi.front().first, gj.front().first))
            continue;
        bool chain = false;
        for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
            if (k == pair.i || k == pair.j || basis[k].empty())
                continue;
            if (divides(basis[k].front().first, pair.lcm) && !pending(pair.i, k) && !pending(pair.j, k))
                chain = true;
        }
        if (chain)
            continue;

        if (++processed > limits.max_pairs)
            throw ResourceCapExceeded("Groebner basis S-pair count exceeds cap of " + std::to_string(limits.max_pairs));

        OrderedPoly s = reduce(s_polynomial(gi, gj, pair.lcm, order), basis, order);
        if (s.empty())
            continue;
        check_degree(s);
        if (total_degree(s.front().first) == 0) {
            basis.assign(1, OrderedPoly{{Monomial(n, 0), Rational(1)}});
            pairs.clear();
            break;
        }
        add(std::move(s));
    }

    // Minimalize, then inter-reduce.
    std::vector<OrderedPoly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].empty())
            continue;
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (j == i || basis[j].empty())
                continue;
            const auto& li = basis[i].front().first;
            const auto& lj = basis[j].front().first;
            if (divides(lj, li) && (lj != li || j < i))
                redundant = true;
        }
        if (!redundant)
            minimal.push_back(basis[i]);
    }
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        OrderedPoly tail(minimal[i].begin() + 1, minimal[i].end());
        OrderedPoly reduced_tail = reduce(std::move(tail), minimal, order, i);
        OrderedPoly full;
        full.reserve(reduced_tail.size() + 1);
        full.push_back(minimal[i].front());
        full.insert(full.end(), reduced_tail.begin(), reduced_tail.end());
        minimal[i] = std::move(full);
    }
    std::sort(minimal.begin(), minimal.end(),
              [&](const OrderedPoly& a, const OrderedPoly& b) { return order.less(a.front().first, b.front().first); });

    std::vector<Polynomial> out;
    out.reserve(minimal.size());
    for (const auto& g : minimal)
        out.push_back(from_ordered(n, g));
    return GroebnerBasis(n, order, std::move(out));
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& basis)
{
    if (p.nvars() != basis.nvars())
        throw InternalError("polynomial and basis live in different rings");
    std::vector<OrderedPoly> by;
    by.reserve(basis.elements().size());
    for (const auto& g : basis.elements())
        by.push_back(to_ordered(g, basis.order()));
    return from_ordered(p.nvars(), reduce(to_ordered(p, basis.order()), by, basis.order()));
}

bool contains(const GroebnerBasis& basis, const Polynomial& p)
{
    return normal_form(p, basis).is_zero();
}

bool contains(const GroebnerBasis& basis, const Ideal& ideal)
{
    return std::all_of(ideal.generators().begin(), ideal.generators().end(),
                       [&](const Polynomial& g) { return contains(basis, g); });
}

bool ideals_equal(const Ideal& a, const Ideal& b, const GroebnerLimits& limits)
{
    auto order = MonomialOrder::grevlex();
    return contains(buchberger(a, order, limits), b) && contains(buchberger(b, order, limits), a);
}

} // namespace morsify
