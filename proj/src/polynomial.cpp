#include "apolar/polynomial.hpp"

#include <algorithm>

#include "apolar/errors.hpp"

namespace apolar {

namespace {

bool term_greater(const Term& a, const Term& b) { return DiagonalLexGreater{}(a.mono, b.mono); }

// a + c * m * b over descending-sorted term lists.
std::vector<Term> add_scaled(const std::vector<Term>& a, const Rational& c, const Monomial& m,
                             const std::vector<Term>& b) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    auto ia = a.begin();
    auto ib = b.begin();
    std::optional<Term> pending;
    auto next_b = [&]() -> Term { return Term{ib->mono.times(m), ib->coeff * c}; };
    if (ib != b.end()) pending = next_b();
    while (ia != a.end() || pending) {
        if (!pending) {
            out.push_back(*ia++);
            continue;
        }
        if (ia == a.end()) {
            out.push_back(std::move(*pending));
        } else {
            const auto ord = diagonal_lex_compare(ia->mono, pending->mono);
            if (ord == std::strong_ordering::greater) {
                out.push_back(*ia++);
                continue;
            }
            if (ord == std::strong_ordering::equal) {
                Rational s = ia->coeff + pending->coeff;
                if (!s.is_zero()) out.push_back(Term{ia->mono, std::move(s)});
                ++ia;
            } else {
                out.push_back(std::move(*pending));
            }
        }
        ++ib;
        pending.reset();
        if (ib != b.end()) pending = next_b();
    }
    return out;
}

} // namespace

void require_compatible(const Polynomial& p, const Polynomial& q) {
    if (p.ring() != q.ring()) throw UsageError("ring mismatch");
    if (!(p.grid() == q.grid())) throw UsageError("grid mismatch");
}

Polynomial Polynomial::constant(Ring ring, VariableGrid grid, const Rational& c) {
    return monomial(ring, grid, Monomial{}, c);
}

Polynomial Polynomial::variable(Ring ring, VariableGrid grid, VarIndex v) {
    if (v >= grid.variable_count()) throw UsageError("variable index out of range");
    return monomial(ring, grid, Monomial::variable(v), 1);
}

Polynomial Polynomial::monomial(Ring ring, VariableGrid grid, Monomial m, const Rational& c) {
    Polynomial p(ring, grid);
    if (!m.powers().empty() && m.powers().back().var >= grid.variable_count()) {
        throw UsageError("monomial uses a variable outside the grid");
    }
    if (!c.is_zero()) p.terms_.push_back(Term{std::move(m), c});
    return p;
}

Polynomial Polynomial::from_terms(Ring ring, VariableGrid grid, std::vector<Term> terms) {
    Polynomial p(ring, grid);
    const int nvars = grid.variable_count();
    for (const auto& t : terms) {
        if (!t.mono.powers().empty() && t.mono.powers().back().var >= nvars) {
            throw UsageError("monomial uses a variable outside the grid");
        }
    }
    std::sort(terms.begin(), terms.end(), term_greater);
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
            if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
        } else if (!t.coeff.is_zero()) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw UsageError("leading term of the zero polynomial");
    return terms_.front();
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
    return d;
}

bool Polynomial::is_homogeneous() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const Term& t) { return t.mono.degree() == terms_.front().mono.degree(); });
}

std::optional<int> Polynomial::homogeneous_degree() const {
    if (terms_.empty() || !is_homogeneous()) return std::nullopt;
    return static_cast<int>(terms_.front().mono.degree());
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& x) { return DiagonalLexGreater{}(t.mono, x); });
    if (it != terms_.end() && it->mono == m) return it->coeff;
    return Rational(0);
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial p(ring_, grid_);
    if (c.is_zero()) return p;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back(Term{t.mono, t.coeff * c});
    return p;
}

Polynomial Polynomial::times(const Monomial& m, const Rational& c) const {
    Polynomial p(ring_, grid_);
    if (c.is_zero()) return p;
    p.terms_.reserve(terms_.size());
    // Multiplication by a monomial preserves the order.
    for (const auto& t : terms_) p.terms_.push_back(Term{t.mono.times(m), t.coeff * c});
    return p;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result = constant(ring_, grid_, 1);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1U) result = result * base;
        e >>= 1U;
        if (e > 0) base = base * base;
    }
    return result;
}

Polynomial Polynomial::on_ring(Ring ring) const {
    Polynomial p = *this;
    p.ring_ = ring;
    return p;
}

Polynomial Polynomial::with_variable_set_to_one(VarIndex v) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        const auto e = t.mono.exponent(v);
        out.push_back(Term{e == 0 ? t.mono : t.mono.quotient(Monomial::variable(v, e)), t.coeff});
    }
    return from_terms(ring_, grid_, std::move(out));
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    require_compatible(p, q);
    Polynomial r(p.ring_, p.grid_);
    r.terms_ = add_scaled(p.terms_, Rational(1), Monomial{}, q.terms_);
    return r;
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) {
    require_compatible(p, q);
    Polynomial r(p.ring_, p.grid_);
    r.terms_ = add_scaled(p.terms_, Rational(-1), Monomial{}, q.terms_);
    return r;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    require_compatible(p, q);
    std::vector<Term> out;
    out.reserve(p.terms_.size() * q.terms_.size());
    for (const auto& a : p.terms_) {
        for (const auto& b : q.terms_) out.push_back(Term{a.mono.times(b.mono), a.coeff * b.coeff});
    }
    return Polynomial::from_terms(p.ring_, p.grid_, std::move(out));
}

Polynomial poly_add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }

Polynomial contract(const Monomial& m, const Polynomial& f) {
    if (f.ring() != Ring::R) throw UsageError("contract: the form must live in R");
    std::vector<Term> out;
    for (const auto& t : f.terms()) {
        if (m.divides(t.mono)) out.push_back(Term{t.mono.quotient(m), t.coeff});
    }
    // Distinct terms give distinct quotients, and division by a fixed
    // monomial preserves the order.
    return Polynomial::from_terms(Ring::R, f.grid(), std::move(out));
}

Polynomial contract(const Polynomial& h, const Polynomial& f) {
    if (h.ring() != Ring::S || f.ring() != Ring::R) {
        throw UsageError("contract: operator must live in S and form in R");
    }
    if (!(h.grid() == f.grid())) throw UsageError("grid mismatch");
    std::vector<Term> out;
    for (const auto& ht : h.terms()) {
        for (const auto& ft : f.terms()) {
            if (ht.mono.divides(ft.mono)) out.push_back(Term{ft.mono.quotient(ht.mono), ht.coeff * ft.coeff});
        }
    }
    return Polynomial::from_terms(Ring::R, f.grid(), std::move(out));
}

namespace {

template <bool WithQuotients>
Polynomial divide_impl(const Polynomial& f, std::span<const Polynomial> divisors,
                       std::vector<std::vector<Term>>* quotient_terms) {
    for (const auto& g : divisors) {
        require_compatible(f, g);
        if (g.is_zero()) throw UsageError("division by the zero polynomial");
    }
    std::vector<Term> p = f.terms();
    std::vector<Term> rem;
    while (!p.empty()) {
        const Term lead = p.front();
        bool divided = false;
        for (std::size_t i = 0; i < divisors.size(); ++i) {
            const Term& glt = divisors[i].leading_term();
            if (!glt.mono.divides(lead.mono)) continue;
            const Monomial q = lead.mono.quotient(glt.mono);
            const Rational c = lead.coeff / glt.coeff;
            if constexpr (WithQuotients) (*quotient_terms)[i].push_back(Term{q, c});
            p = add_scaled(p, -c, q, divisors[i].terms());
            divided = true;
            break;
        }
        if (!divided) {
            rem.push_back(lead);
            p.erase(p.begin());
        }
    }
    return Polynomial::from_terms(f.ring(), f.grid(), std::move(rem));
}

} // namespace

DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors, const TermOrder& order) {
    (void)order;
    std::vector<std::vector<Term>> qt(divisors.size());
    Polynomial r = divide_impl<true>(f, divisors, &qt);
    DivisionResult out{{}, std::move(r)};
    out.quotients.reserve(divisors.size());
    for (auto& terms : qt) out.quotients.push_back(Polynomial::from_terms(f.ring(), f.grid(), std::move(terms)));
    return out;
}

Polynomial reduce(const Polynomial& f, std::span<const Polynomial> divisors, const TermOrder& order) {
    (void)order;
    return divide_impl<false>(f, divisors, nullptr);
}

} // namespace apolar
