#include "apolar/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <tuple>

#include "apolar/errors.hpp"
#include "apolar/invariants.hpp"

namespace apolar {

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& order) {
    (void)order;
    require_compatible(f, g);
    if (f.is_zero() || g.is_zero()) throw UsageError("S-polynomial of the zero polynomial");
    const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
    return f.times(l.quotient(f.leading_monomial()), 1 / f.leading_coefficient()) -
           g.times(l.quotient(g.leading_monomial()), 1 / g.leading_coefficient());
}

namespace {

struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
};

// Normal strategy: lower lcm first (degree, then diagonal order), then indices.
bool pair_before(const Pair& a, const Pair& b) {
    const auto c = diagonal_lex_compare(a.lcm, b.lcm);
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
}

void require_nonzero(std::span<const Polynomial> gens) {
    for (const auto& g : gens) {
        if (g.is_zero()) throw UsageError("zero polynomial in a generating set");
        require_compatible(gens.front(), g);
    }
}

} // namespace

bool is_minimal_basis(std::span<const Polynomial> gens) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = 0; j < gens.size(); ++j) {
            if (i != j && gens[j].leading_monomial().divides(gens[i].leading_monomial())) return false;
        }
    }
    return true;
}

bool is_reduced_basis(std::span<const Polynomial> gens) {
    if (!is_minimal_basis(gens)) return false;
    for (const auto& g : gens) {
        if (g.leading_coefficient() != 1) return false;
        for (std::size_t t = 1; t < g.terms().size(); ++t) {
            for (const auto& h : gens) {
                if (h.leading_monomial().divides(g.terms()[t].mono)) return false;
            }
        }
    }
    return true;
}

GroebnerReport buchberger_check(std::span<const Polynomial> gens, const TermOrder& order,
                                const BuchbergerOptions& opts) {
    require_nonzero(gens);
    GroebnerReport rep;
    rep.generators = gens.size();
    std::vector<Pair> pairs;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            ++rep.pairs;
            const Monomial& a = gens[i].leading_monomial();
            const Monomial& b = gens[j].leading_monomial();
            if (opts.skip_coprime && a.coprime(b)) {
                ++rep.skipped;
                continue;
            }
            pairs.push_back(Pair{i, j, a.lcm(b)});
        }
    }
    std::sort(pairs.begin(), pairs.end(), pair_before);

    std::vector<Polynomial> remainders(pairs.size(), Polynomial(gens.front().ring(), gens.front().grid()));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t p = next++; p < pairs.size(); p = next++) {
            remainders[p] = reduce(s_polynomial(gens[pairs[p].i], gens[pairs[p].j], order), gens, order);
        }
    };
    const unsigned nthreads = std::max(1U, opts.threads);
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        if (remainders[p].is_zero()) {
            ++rep.reduced_to_zero;
            continue;
        }
        ++rep.failure_count;
        if (rep.failures.size() < opts.max_recorded_failures) {
            rep.failures.push_back(PairFailure{pairs[p].i, pairs[p].j, std::move(remainders[p])});
        }
    }
    rep.is_groebner = rep.failure_count == 0;
    rep.minimal = is_minimal_basis(gens);
    rep.reduced = is_reduced_basis(gens);
    return rep;
}

std::vector<Polynomial> buchberger_complete(std::span<const Polynomial> gens, const TermOrder& order,
                                            std::size_t max_size) {
    require_nonzero(gens);
    std::vector<Polynomial> basis(gens.begin(), gens.end());
    std::vector<Pair> queue;
    auto add_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            const Monomial& a = basis[i].leading_monomial();
            const Monomial& b = basis[j].leading_monomial();
            if (!a.coprime(b)) queue.push_back(Pair{i, j, a.lcm(b)});
        }
    };
    for (std::size_t j = 1; j < basis.size(); ++j) add_pairs(j);
    // Kept as a max-heap on "comes later" so the front is the next pair.
    auto later = [](const Pair& a, const Pair& b) { return pair_before(b, a); };
    std::make_heap(queue.begin(), queue.end(), later);
    while (!queue.empty()) {
        std::pop_heap(queue.begin(), queue.end(), later);
        const Pair p = queue.back();
        queue.pop_back();
        Polynomial r = reduce(s_polynomial(basis[p.i], basis[p.j], order), basis, order);
        if (r.is_zero()) continue;
        if (basis.size() >= max_size) {
            throw CeilingError("Groebner completion exceeded " + std::to_string(max_size) + " elements");
        }
        basis.push_back(r.scaled(1 / r.leading_coefficient()));
        const std::size_t before = queue.size();
        add_pairs(basis.size() - 1);
        for (std::size_t q = before; q < queue.size(); ++q) std::push_heap(queue.begin(), queue.begin() + q + 1, later);
    }
    return basis;
}

std::vector<Polynomial> interreduce(std::span<const Polynomial> basis) {
    require_nonzero(basis);
    std::vector<Polynomial> kept;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool drop = false;
        for (std::size_t j = 0; j < basis.size() && !drop; ++j) {
            if (i == j) continue;
            const Monomial& li = basis[i].leading_monomial();
            const Monomial& lj = basis[j].leading_monomial();
            // Equal leading terms: keep the first occurrence.
            drop = lj.divides(li) && (!(li == lj) || j < i);
        }
        if (!drop) kept.push_back(basis[i]);
    }
    for (auto& g : kept) {
        const Term lead = g.leading_term();
        std::vector<Term> tail(g.terms().begin() + 1, g.terms().end());
        const Polynomial rest = reduce(Polynomial::from_terms(g.ring(), g.grid(), std::move(tail)), kept);
        g = (Polynomial::monomial(g.ring(), g.grid(), lead.mono, lead.coeff) + rest).scaled(1 / lead.coeff);
    }
    std::sort(kept.begin(), kept.end(), [](const Polynomial& a, const Polynomial& b) {
        return DiagonalLexGreater{}(a.leading_monomial(), b.leading_monomial());
    });
    return kept;
}

std::vector<Polynomial> reduced_groebner_basis(std::span<const Polynomial> gens, const TermOrder& order) {
    const auto g = buchberger_complete(gens, order);
    return interreduce(g);
}

MonomialIdeal initial_ideal(std::span<const Polynomial> gens, const TermOrder& order) {
    (void)order;
    require_nonzero(gens);
    std::vector<Monomial> lts;
    lts.reserve(gens.size());
    for (const auto& g : gens) lts.push_back(g.leading_monomial());
    return MonomialIdeal(std::move(lts));
}

std::uint64_t standard_monomial_count(const MonomialIdeal& ideal, int nvars, int k) {
    return ideal.standard_monomial_count(nvars, k);
}

bool GroebnerVerificationReport::passed() const {
    if (!candidates_annihilate || !route_available || degrees.empty()) return false;
    return std::all_of(degrees.begin(), degrees.end(), [](const StandardCount& c) { return c.equal(); });
}

GroebnerVerificationReport verify_degree2_generation_via_groebner(const Polynomial& f,
                                                                  std::span<const Polynomial> candidates,
                                                                  const TermOrder& order, const EngineConfig& cfg,
                                                                  const BuchbergerOptions& opts,
                                                                  const HilbertFunction* known) {
    if (f.is_zero() || !f.is_homogeneous()) throw UsageError("verification needs a nonzero homogeneous form");
    GroebnerVerificationReport rep;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const auto& g = candidates[i];
        if (g.ring() != Ring::S || !(g.grid() == f.grid())) throw UsageError("candidate ring or grid mismatch");
        if (!contract(g, f).is_zero()) rep.failing_candidates.push_back(i);
    }
    if (!rep.failing_candidates.empty()) {
        rep.candidates_annihilate = false;
        return rep;
    }
    if (cfg.progress) cfg.progress("groebner: checking " + std::to_string(candidates.size()) + " generators");
    rep.groebner = buchberger_check(candidates, order, opts);
    std::vector<Polynomial> basis(candidates.begin(), candidates.end());
    const bool quadrics = std::all_of(candidates.begin(), candidates.end(), [](const Polynomial& g) {
        return g.homogeneous_degree() == std::optional<int>(2);
    });
    if (!rep.groebner.is_groebner && quadrics) {
        const auto span = GradedSubspace::span_of(candidates, Ring::S, f.grid(), 2, cfg.max_pivots);
        basis = span.basis();
        if (cfg.progress) cfg.progress("groebner: retrying with " + std::to_string(basis.size()) + " interreduced generators");
        rep.interreduced = buchberger_check(basis, order, opts);
    }
    rep.route_available = rep.groebner.is_groebner || (rep.interreduced && rep.interreduced->is_groebner);
    if (!rep.route_available) return rep;
    const HilbertFunction h = known ? *known : hilbert_function(f, cfg);
    const int deg = f.degree();
    if (static_cast<int>(h.values.size()) != deg + 1) throw UsageError("Hilbert function has the wrong length");
    const auto counts = initial_ideal(basis, order).standard_monomial_counts(f.grid().variable_count(), deg + 1);
    for (int k = 0; k <= deg + 1; ++k) {
        rep.degrees.push_back(StandardCount{k, counts[static_cast<std::size_t>(k)],
                                            k <= deg ? h.values[static_cast<std::size_t>(k)] : 0});
    }
    return rep;
}

std::vector<Polynomial> LaubenbacherSwansonBasis::all() const {
    std::vector<Polynomial> out = permanents;
    out.insert(out.end(), cubics.begin(), cubics.end());
    out.insert(out.end(), quartics.begin(), quartics.end());
    return out;
}

LaubenbacherSwansonBasis laubenbacher_swanson_basis(int n) {
    if (n < 2) throw UsageError("the permanent basis needs n >= 2");
    const VariableGrid grid = VariableGrid::generic(n, n);
    auto var = [&](int i, int j) { return grid.entry(i, j).var; };
    auto mono = [&](std::initializer_list<std::pair<std::pair<int, int>, int>> factors) {
        std::vector<VarPower> p;
        for (const auto& [cell, e] : factors) {
            p.push_back({var(cell.first, cell.second), static_cast<std::uint16_t>(e)});
        }
        return Polynomial::monomial(Ring::S, grid, Monomial::from_powers(p));
    };
    LaubenbacherSwansonBasis b;
    for (int i = 0; i < n; ++i) {
        for (int k = i + 1; k < n; ++k) {
            for (int j = 0; j < n; ++j) {
                for (int l = j + 1; l < n; ++l) {
                    b.permanents.push_back(mono({{{i, j}, 1}, {{k, l}, 1}}) + mono({{{k, j}, 1}, {{i, l}, 1}}));
                }
            }
        }
    }
    // Two rows (r1 > r2), three columns c1 < c2 < c3.
    for (int r1 = 0; r1 < n; ++r1) {
        for (int r2 = 0; r2 < r1; ++r2) {
            for (int c1 = 0; c1 < n; ++c1) {
                for (int c2 = c1 + 1; c2 < n; ++c2) {
                    for (int c3 = c2 + 1; c3 < n; ++c3) {
                        b.cubics.push_back(mono({{{r1, c1}, 1}, {{r1, c2}, 1}, {{r2, c3}, 1}}));
                        b.cubics.push_back(mono({{{r1, c1}, 1}, {{r2, c2}, 1}, {{r2, c3}, 1}}));
                    }
                }
            }
        }
    }
    // Three rows r1 < r2 < r3, two columns c1 > c2.
    for (int r1 = 0; r1 < n; ++r1) {
        for (int r2 = r1 + 1; r2 < n; ++r2) {
            for (int r3 = r2 + 1; r3 < n; ++r3) {
                for (int c1 = 0; c1 < n; ++c1) {
                    for (int c2 = 0; c2 < c1; ++c2) {
                        b.cubics.push_back(mono({{{r1, c1}, 1}, {{r2, c1}, 1}, {{r3, c2}, 1}}));
                        b.cubics.push_back(mono({{{r1, c1}, 1}, {{r2, c2}, 1}, {{r3, c2}, 1}}));
                    }
                }
            }
        }
    }
    // Anti-diagonal triples with one squared entry.
    for (int r1 = 0; r1 < n; ++r1) {
        for (int r2 = r1 + 1; r2 < n; ++r2) {
            for (int r3 = r2 + 1; r3 < n; ++r3) {
                for (int c3 = 0; c3 < n; ++c3) {
                    for (int c2 = c3 + 1; c2 < n; ++c2) {
                        for (int c1 = c2 + 1; c1 < n; ++c1) {
                            for (int sq = 0; sq < 3; ++sq) {
                                b.quartics.push_back(mono({{{r1, c1}, sq == 0 ? 2 : 1},
                                                           {{r2, c2}, sq == 1 ? 2 : 1},
                                                           {{r3, c3}, sq == 2 ? 2 : 1}}));
                            }
                        }
                    }
                }
            }
        }
    }
    return b;
}

} // namespace apolar
