#include "apolar/monomial_ideal.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "apolar/errors.hpp"

namespace apolar {

MonomialIdeal::MonomialIdeal(std::vector<Monomial> generators) {
    std::sort(generators.begin(), generators.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return DiagonalLexGreater{}(a, b);
    });
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    for (auto& g : generators) {
        const bool redundant =
            std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& h) { return h.divides(g); });
        if (!redundant) gens_.push_back(std::move(g));
    }
    std::sort(gens_.begin(), gens_.end(), DiagonalLexGreater{});
}

bool MonomialIdeal::contains(const Monomial& m) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

namespace {

// Standard monomials by degree. Each degree-(d+1) standard monomial is a
// degree-d standard monomial times a variable at least as large (in index)
// as its last variable, so every monomial is produced exactly once.
template <class Visit>
void sweep(const MonomialIdeal& ideal, int nvars, int k_max, std::uint64_t max_count, Visit&& visit) {
    std::vector<Monomial> level{Monomial{}};
    visit(0, level);
    for (int d = 1; d <= k_max; ++d) {
        std::vector<Monomial> next;
        for (const auto& m : level) {
            const int start = m.is_one() ? 0 : m.powers().back().var;
            for (int v = start; v < nvars; ++v) {
                Monomial c = m.times_variable(static_cast<VarIndex>(v));
                if (ideal.contains(c)) continue;
                next.push_back(std::move(c));
                if (next.size() > max_count) {
                    throw CeilingError("standard monomial enumeration exceeded " + std::to_string(max_count));
                }
            }
        }
        level = std::move(next);
        visit(d, level);
    }
}

} // namespace

std::vector<std::uint64_t> MonomialIdeal::standard_monomial_counts(int nvars, int k_max, std::uint64_t max_count) const {
    std::vector<std::uint64_t> counts;
    sweep(*this, nvars, k_max, max_count, [&](int, const std::vector<Monomial>& level) { counts.push_back(level.size()); });
    return counts;
}

std::uint64_t MonomialIdeal::standard_monomial_count(int nvars, int k, std::uint64_t max_count) const {
    if (k < 0) return 0;
    return standard_monomial_counts(nvars, k, max_count).back();
}

std::vector<Monomial> MonomialIdeal::standard_monomials(int nvars, int k, std::uint64_t max_count) const {
    std::vector<Monomial> out;
    if (k < 0) return out;
    sweep(*this, nvars, k, max_count, [&](int d, const std::vector<Monomial>& level) {
        if (d == k) out = level;
    });
    std::sort(out.begin(), out.end(), DiagonalLexGreater{});
    return out;
}

} // namespace apolar
