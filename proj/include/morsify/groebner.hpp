#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "morsify/polynomial.hpp"

namespace morsify {

enum class OrderKind { lex, grevlex, block_elimination };

/// Total order on exponent vectors.
///
/// lex and grevlex treat variable 0 as the largest. block_elimination
/// compares the front-block exponents by grevlex first and breaks ties with
/// grevlex on the remaining variables, so any monomial containing a front
/// variable outranks every monomial free of them.
class MonomialOrder {
public:
    static MonomialOrder lex() { return MonomialOrder(OrderKind::lex, {}); }
    static MonomialOrder grevlex() { return MonomialOrder(OrderKind::grevlex, {}); }
    static MonomialOrder block(std::vector<bool> front) { return MonomialOrder(OrderKind::block_elimination, std::move(front)); }

    OrderKind kind() const noexcept { return kind_; }
    const std::vector<bool>& front() const noexcept { return front_; }

    // Negative, zero or positive as a is smaller, equal or larger than b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

private:
    MonomialOrder(OrderKind kind, std::vector<bool> front) : kind_(kind), front_(std::move(front)) {}

    OrderKind kind_;
    std::vector<bool> front_;
};

Monomial leading_monomial(const Polynomial& p, const MonomialOrder& order);
Rational leading_coefficient(const Polynomial& p, const MonomialOrder& order);

/// Generator list over a fixed ring. Zero generators are dropped, so an
/// Ideal with no generators is the zero ideal.
class Ideal {
public:
    explicit Ideal(std::size_t nvars) : nvars_(nvars) {}
    Ideal(std::size_t nvars, std::vector<Polynomial> generators);

    static Ideal unit(std::size_t nvars) { return Ideal(nvars, {Polynomial::constant(nvars, 1)}); }

    std::size_t nvars() const noexcept { return nvars_; }
    const std::vector<Polynomial>& generators() const noexcept { return generators_; }
    bool is_zero() const noexcept { return generators_.empty(); }

    Ideal operator+(const Ideal& other) const;

private:
    std::size_t nvars_;
    std::vector<Polynomial> generators_;
};

struct GroebnerLimits {
    std::size_t max_pairs = 20000;
    unsigned max_degree = 60;
};

/// Reduced, monic Groebner basis, sorted by increasing leading monomial.
class GroebnerBasis {
public:
    GroebnerBasis(std::size_t nvars, MonomialOrder order, std::vector<Polynomial> basis);

    std::size_t nvars() const noexcept { return nvars_; }
    const MonomialOrder& order() const noexcept { return order_; }
    const std::vector<Polynomial>& elements() const noexcept { return basis_; }
    const std::vector<Monomial>& leading_monomials() const noexcept { return leads_; }

    bool is_unit() const;
    bool is_zero() const noexcept { return basis_.empty(); }
    Ideal ideal() const { return Ideal(nvars_, basis_); }

    friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b)
    {
        return a.order_ == b.order_ && a.basis_ == b.basis_;
    }

private:
    std::size_t nvars_;
    MonomialOrder order_;
    std::vector<Polynomial> basis_;
    std::vector<Monomial> leads_;
};

// Buchberger completion with the coprime and chain criteria and
// normal-strategy pair selection. Throws ResourceCapExceeded.
GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order, const GroebnerLimits& limits = {});

// Remainder of full multivariate division by the basis.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& basis);

bool contains(const GroebnerBasis& basis, const Polynomial& p);
bool contains(const GroebnerBasis& basis, const Ideal& ideal);

// Equality by mutual membership.
bool ideals_equal(const Ideal& a, const Ideal& b, const GroebnerLimits& limits = {});

} // namespace morsify
