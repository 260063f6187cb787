#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "apolar/monomial.hpp"

namespace apolar {

// Monomial ideal kept by its minimal generators (pairwise non-dividing).
class MonomialIdeal {
public:
    MonomialIdeal() = default;
    // Drops duplicates and generators divisible by others; sorted descending.
    explicit MonomialIdeal(std::vector<Monomial> generators);

    const std::vector<Monomial>& generators() const { return gens_; }
    bool contains(const Monomial& m) const;

    // Degree-k monomials in variables 0..nvars-1 outside the ideal.
    // Enumerates the order ideal degree by degree, so the cost is governed by
    // the number of standard monomials, not by the ambient dimension.
    std::uint64_t standard_monomial_count(int nvars, int k, std::uint64_t max_count = 50'000'000) const;
    // Counts for degrees 0..k_max in one sweep.
    std::vector<std::uint64_t> standard_monomial_counts(int nvars, int k_max,
                                                        std::uint64_t max_count = 50'000'000) const;
    std::vector<Monomial> standard_monomials(int nvars, int k, std::uint64_t max_count = 50'000'000) const;

private:
    std::vector<Monomial> gens_;
};

} // namespace apolar
