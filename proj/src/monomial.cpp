#include "apolar/monomial.hpp"

#include <algorithm>
#include <vector>

#include "apolar/errors.hpp"

namespace apolar {

Monomial::Monomial(std::initializer_list<VarPower> powers) {
    *this = from_powers(std::span<const VarPower>(powers.begin(), powers.size()));
}

Monomial Monomial::variable(VarIndex v, std::uint16_t exp) {
    Monomial m;
    if (exp > 0) {
        m.powers_.push_back({v, exp});
        m.degree_ = exp;
    }
    return m;
}

Monomial Monomial::from_powers(std::span<const VarPower> powers) {
    std::vector<VarPower> sorted(powers.begin(), powers.end());
    std::sort(sorted.begin(), sorted.end(), [](const VarPower& a, const VarPower& b) { return a.var < b.var; });
    Monomial m;
    for (const auto& p : sorted) {
        if (p.exp == 0) continue;
        if (!m.powers_.empty() && m.powers_.back().var == p.var) {
            m.powers_.back().exp = static_cast<std::uint16_t>(m.powers_.back().exp + p.exp);
        } else {
            m.powers_.push_back(p);
        }
        m.degree_ += p.exp;
    }
    return m;
}

std::uint16_t Monomial::exponent(VarIndex v) const {
    for (const auto& p : powers_) {
        if (p.var == v) return p.exp;
        if (p.var > v) break;
    }
    return 0;
}

bool Monomial::is_square_free() const {
    return std::all_of(powers_.begin(), powers_.end(), [](const VarPower& p) { return p.exp == 1; });
}

bool Monomial::divides(const Monomial& other) const {
    if (degree_ > other.degree_ || powers_.size() > other.powers_.size()) return false;
    auto it = other.powers_.begin();
    const auto end = other.powers_.end();
    for (const auto& p : powers_) {
        while (it != end && it->var < p.var) ++it;
        if (it == end || it->var != p.var || it->exp < p.exp) return false;
        ++it;
    }
    return true;
}

Monomial Monomial::quotient(const Monomial& d) const {
    Monomial q;
    auto it = d.powers_.begin();
    const auto end = d.powers_.end();
    for (const auto& p : powers_) {
        std::uint16_t e = p.exp;
        if (it != end && it->var == p.var) {
            if (it->exp > e) throw UsageError("monomial quotient: divisor does not divide");
            e = static_cast<std::uint16_t>(e - it->exp);
            ++it;
        } else if (it != end && it->var < p.var) {
            throw UsageError("monomial quotient: divisor does not divide");
        }
        if (e > 0) {
            q.powers_.push_back({p.var, e});
            q.degree_ += e;
        }
    }
    if (it != end) throw UsageError("monomial quotient: divisor does not divide");
    return q;
}

Monomial Monomial::times(const Monomial& other) const {
    Monomial r;
    auto a = powers_.begin(), ae = powers_.end();
    auto b = other.powers_.begin(), be = other.powers_.end();
    while (a != ae || b != be) {
        if (b == be || (a != ae && a->var < b->var)) {
            r.powers_.push_back(*a++);
        } else if (a == ae || b->var < a->var) {
            r.powers_.push_back(*b++);
        } else {
            r.powers_.push_back({a->var, static_cast<std::uint16_t>(a->exp + b->exp)});
            ++a;
            ++b;
        }
    }
    r.degree_ = degree_ + other.degree_;
    return r;
}

Monomial Monomial::times_variable(VarIndex v) const {
    Monomial r = *this;
    auto it = std::lower_bound(r.powers_.begin(), r.powers_.end(), v,
                               [](const VarPower& p, VarIndex x) { return p.var < x; });
    if (it != r.powers_.end() && it->var == v) {
        ++it->exp;
    } else {
        r.powers_.insert(it, VarPower{v, 1});
    }
    ++r.degree_;
    return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
    Monomial r;
    auto a = powers_.begin(), ae = powers_.end();
    auto b = other.powers_.begin(), be = other.powers_.end();
    while (a != ae || b != be) {
        if (b == be || (a != ae && a->var < b->var)) {
            r.powers_.push_back(*a++);
        } else if (a == ae || b->var < a->var) {
            r.powers_.push_back(*b++);
        } else {
            r.powers_.push_back({a->var, std::max(a->exp, b->exp)});
            ++a;
            ++b;
        }
    }
    for (const auto& p : r.powers_) r.degree_ += p.exp;
    return r;
}

bool Monomial::coprime(const Monomial& other) const {
    auto a = powers_.begin(), ae = powers_.end();
    auto b = other.powers_.begin(), be = other.powers_.end();
    while (a != ae && b != be) {
        if (a->var == b->var) return false;
        if (a->var < b->var) {
            ++a;
        } else {
            ++b;
        }
    }
    return true;
}

std::size_t Monomial::hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (const auto& p : powers_) {
        const std::size_t x = (static_cast<std::size_t>(p.var) << 16) | p.exp;
        h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

std::strong_ordering diagonal_lex_compare(const Monomial& u, const Monomial& v) {
    if (u.degree() != v.degree()) return u.degree() <=> v.degree();
    const auto& a = u.powers();
    const auto& b = v.powers();
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].var != b[i].var) {
            // The monomial containing the smaller-index variable is larger.
            return a[i].var < b[i].var ? std::strong_ordering::greater : std::strong_ordering::less;
        }
        if (a[i].exp != b[i].exp) return a[i].exp <=> b[i].exp;
    }
    return a.size() <=> b.size();
}

} // namespace apolar
