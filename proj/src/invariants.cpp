#include "apolar/invariants.hpp"

#include <algorithm>
#include <numeric>

#include "apolar/errors.hpp"

namespace apolar {

std::string short_name(InvariantKind kind) {
    switch (kind) {
    case InvariantKind::Determinant: return "det";
    case InvariantKind::Permanent: return "perm";
    case InvariantKind::Pfaffian: return "pf";
    case InvariantKind::Hafnian: return "hf";
    }
    return "?";
}

InvariantKind parse_invariant_kind(const std::string& name) {
    if (name == "det") return InvariantKind::Determinant;
    if (name == "perm") return InvariantKind::Permanent;
    if (name == "pf") return InvariantKind::Pfaffian;
    if (name == "hf") return InvariantKind::Hafnian;
    throw UsageError("unknown invariant '" + name + "' (expected det, perm, pf or hf)");
}

VariableGrid grid_for(InvariantKind kind, int n) {
    if (n < 1) throw UsageError("n must be at least 1");
    switch (kind) {
    case InvariantKind::Determinant:
    case InvariantKind::Permanent: return VariableGrid::generic(n, n);
    case InvariantKind::Pfaffian: return VariableGrid::skew_symmetric(2 * n);
    case InvariantKind::Hafnian: return VariableGrid::zero_diagonal_symmetric(2 * n);
    }
    throw UsageError("unknown invariant kind");
}

namespace {

int permutation_sign(const std::vector<int>& p) {
    int inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            if (p[i] > p[j]) ++inversions;
        }
    }
    return inversions % 2 == 0 ? 1 : -1;
}

Polynomial leibniz(const VariableGrid& grid, Ring ring, std::span<const int> rows, std::span<const int> cols,
                   bool signed_sum) {
    if (rows.size() != cols.size()) throw UsageError("minor must be square");
    std::vector<int> perm(rows.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Term> terms;
    std::vector<VarPower> powers;
    do {
        int sign = signed_sum ? permutation_sign(perm) : 1;
        powers.clear();
        for (std::size_t i = 0; i < rows.size() && sign != 0; ++i) {
            const CellEntry e = grid.entry(rows[i], cols[static_cast<std::size_t>(perm[i])]);
            if (e.is_zero()) {
                sign = 0;
                break;
            }
            sign *= e.sign;
            powers.push_back({e.var, 1});
        }
        if (sign != 0) terms.push_back(Term{Monomial::from_powers(powers), Rational(sign)});
    } while (std::next_permutation(perm.begin(), perm.end()));
    return Polynomial::from_terms(ring, grid, std::move(terms));
}

void collect_matchings(std::vector<int>& remaining, std::vector<int>& flat, std::vector<Matching>& out) {
    if (remaining.empty()) {
        Matching m;
        for (std::size_t i = 0; i < flat.size(); i += 2) m.pairs.emplace_back(flat[i], flat[i + 1]);
        m.sign = permutation_sign(flat);
        out.push_back(std::move(m));
        return;
    }
    const int first = remaining.front();
    for (std::size_t k = 1; k < remaining.size(); ++k) {
        const int partner = remaining[k];
        std::vector<int> rest;
        rest.reserve(remaining.size() - 2);
        for (std::size_t j = 1; j < remaining.size(); ++j) {
            if (j != k) rest.push_back(remaining[j]);
        }
        flat.push_back(first);
        flat.push_back(partner);
        collect_matchings(rest, flat, out);
        flat.pop_back();
        flat.pop_back();
    }
}

Polynomial matching_sum(const VariableGrid& grid, Ring ring, std::span<const int> indices, bool signed_sum) {
    if (indices.size() % 2 != 0) throw UsageError("Pfaffian/Hafnian needs an even number of indices");
    std::vector<Term> terms;
    std::vector<VarPower> powers;
    for (const auto& m : perfect_matchings(static_cast<int>(indices.size()))) {
        int sign = signed_sum ? m.sign : 1;
        powers.clear();
        for (const auto& [a, b] : m.pairs) {
            const CellEntry e = grid.entry(indices[static_cast<std::size_t>(a)], indices[static_cast<std::size_t>(b)]);
            if (e.is_zero()) {
                sign = 0;
                break;
            }
            if (signed_sum) sign *= e.sign;
            powers.push_back({e.var, 1});
        }
        if (sign != 0) terms.push_back(Term{Monomial::from_powers(powers), Rational(sign)});
    }
    return Polynomial::from_terms(ring, grid, std::move(terms));
}

// All size-k subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i <= n - (k - static_cast<int>(cur.size())); ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

} // namespace

std::vector<Matching> perfect_matchings(int size) {
    if (size < 0 || size % 2 != 0) throw UsageError("perfect matchings need an even size");
    std::vector<int> remaining(static_cast<std::size_t>(size));
    std::iota(remaining.begin(), remaining.end(), 0);
    std::vector<int> flat;
    std::vector<Matching> out;
    collect_matchings(remaining, flat, out);
    return out;
}

Polynomial grid_determinant(const VariableGrid& grid, Ring ring, std::span<const int> rows, std::span<const int> cols) {
    return leibniz(grid, ring, rows, cols, true);
}

Polynomial grid_permanent(const VariableGrid& grid, Ring ring, std::span<const int> rows, std::span<const int> cols) {
    return leibniz(grid, ring, rows, cols, false);
}

Polynomial grid_determinant(const VariableGrid& grid, Ring ring) {
    if (grid.rows() != grid.cols()) throw UsageError("determinant of a non-square grid");
    std::vector<int> idx(static_cast<std::size_t>(grid.rows()));
    std::iota(idx.begin(), idx.end(), 0);
    return grid_determinant(grid, ring, idx, idx);
}

Polynomial grid_pfaffian(const VariableGrid& grid, Ring ring, std::span<const int> indices) {
    return matching_sum(grid, ring, indices, true);
}

Polynomial grid_hafnian(const VariableGrid& grid, Ring ring, std::span<const int> indices) {
    return matching_sum(grid, ring, indices, false);
}

Polynomial build_invariant(InvariantKind kind, int n) {
    const VariableGrid grid = grid_for(kind, n);
    std::vector<int> idx(static_cast<std::size_t>(grid.rows()));
    std::iota(idx.begin(), idx.end(), 0);
    switch (kind) {
    case InvariantKind::Determinant: return grid_determinant(grid, Ring::R, idx, idx);
    case InvariantKind::Permanent: return grid_permanent(grid, Ring::R, idx, idx);
    case InvariantKind::Pfaffian: return grid_pfaffian(grid, Ring::R, idx);
    case InvariantKind::Hafnian: return grid_hafnian(grid, Ring::R, idx);
    }
    throw UsageError("unknown invariant kind");
}

std::vector<Polynomial> MinorFamily::polynomials() const {
    std::vector<Polynomial> out;
    out.reserve(members.size());
    for (const auto& m : members) out.push_back(m.poly);
    return out;
}

MinorFamily build_minors(MinorKind kind, int rows, int cols, int size) {
    if (kind != MinorKind::DetMinors && kind != MinorKind::PermMinors) {
        throw UsageError("rectangular grids support only determinant and permanent minors");
    }
    const VariableGrid grid = VariableGrid::generic(rows, cols);
    if (size < 1 || size > std::min(rows, cols)) throw UsageError("minor size out of range");
    MinorFamily fam{kind, size, {}};
    for (const auto& r : subsets(rows, size)) {
        for (const auto& c : subsets(cols, size)) {
            Polynomial p = kind == MinorKind::DetMinors ? grid_determinant(grid, Ring::R, r, c)
                                                        : grid_permanent(grid, Ring::R, r, c);
            fam.members.push_back({r, c, std::move(p)});
        }
    }
    return fam;
}

MinorFamily build_minors(MinorKind kind, int n, int size) {
    if (n < 1) throw UsageError("n must be at least 1");
    if (kind == MinorKind::DetMinors || kind == MinorKind::PermMinors) return build_minors(kind, n, n, size);
    if (size < 2 || size > 2 * n || size % 2 != 0) throw UsageError("Pfaffian minor size must be even, 2 <= 2t <= 2n");
    const VariableGrid grid = kind == MinorKind::PfaffianMinors ? VariableGrid::skew_symmetric(2 * n)
                                                                : VariableGrid::zero_diagonal_symmetric(2 * n);
    MinorFamily fam{kind, size, {}};
    for (const auto& s : subsets(2 * n, size)) {
        Polynomial p = kind == MinorKind::PfaffianMinors ? grid_pfaffian(grid, Ring::R, s) : grid_hafnian(grid, Ring::R, s);
        fam.members.push_back({s, s, std::move(p)});
    }
    return fam;
}

namespace {

// Rows and columns occupied by a variable of the operator matrix.
std::vector<int> lines_of(VarIndex v, const VariableGrid& grid) {
    const auto [i, j] = grid.cell_of(v);
    if (grid.symmetry() == Symmetry::Generic) return {i, grid.rows() + j};
    return {i, j};  // rows {i,j} and columns {i,j} coincide
}

bool share_line(VarIndex u, VarIndex v, const VariableGrid& grid) {
    const auto a = lines_of(u, grid);
    const auto b = lines_of(v, grid);
    for (int x : a) {
        for (int y : b) {
            if (x == y) return true;
        }
    }
    return false;
}

} // namespace

bool is_acceptable(const Monomial& m, const VariableGrid& grid) {
    if (!m.is_square_free()) return false;
    const auto& p = m.powers();
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            if (share_line(p[i].var, p[j].var, grid)) return false;
        }
    }
    return true;
}

std::vector<Polynomial> unacceptable_quadrics(const VariableGrid& grid) {
    std::vector<Polynomial> out;
    const int nv = grid.variable_count();
    for (int v = 0; v < nv; ++v) {
        out.push_back(Polynomial::monomial(Ring::S, grid, Monomial::variable(static_cast<VarIndex>(v), 2)));
    }
    auto product = [&](int u, int v) {
        return Polynomial::monomial(Ring::S, grid,
                                    Monomial{{static_cast<VarIndex>(u), 1}, {static_cast<VarIndex>(v), 1}});
    };
    if (grid.symmetry() == Symmetry::Generic) {
        // Same row, then same column.
        for (int i = 0; i < grid.rows(); ++i) {
            for (int j = 0; j < grid.cols(); ++j) {
                for (int l = j + 1; l < grid.cols(); ++l) out.push_back(product(grid.entry(i, j).var, grid.entry(i, l).var));
            }
        }
        for (int j = 0; j < grid.cols(); ++j) {
            for (int i = 0; i < grid.rows(); ++i) {
                for (int k = i + 1; k < grid.rows(); ++k) out.push_back(product(grid.entry(i, j).var, grid.entry(k, j).var));
            }
        }
    } else {
        for (int u = 0; u < nv; ++u) {
            for (int v = u + 1; v < nv; ++v) {
                if (share_line(static_cast<VarIndex>(u), static_cast<VarIndex>(v), grid)) out.push_back(product(u, v));
            }
        }
    }
    return out;
}

std::vector<Polynomial> degree2_candidates(InvariantKind kind, int n) {
    if (n < 2) throw UsageError("degree-2 candidates need n >= 2");
    const VariableGrid grid = grid_for(kind, n);
    std::vector<Polynomial> out;
    if (kind == InvariantKind::Determinant || kind == InvariantKind::Permanent) {
        for (const auto& r : subsets(n, 2)) {
            for (const auto& c : subsets(n, 2)) {
                out.push_back(kind == InvariantKind::Determinant ? grid_permanent(grid, Ring::S, r, c)
                                                                 : grid_determinant(grid, Ring::S, r, c));
            }
        }
    } else {
        const int sign = kind == InvariantKind::Pfaffian ? 1 : -1;
        auto y = [&](int a, int b) { return Polynomial::variable(Ring::S, grid, grid.entry(a, b).var); };
        for (const auto& s : subsets(2 * n, 4)) {
            const Polynomial p12_34 = y(s[0], s[1]) * y(s[2], s[3]);
            const Polynomial p13_24 = y(s[0], s[2]) * y(s[1], s[3]);
            const Polynomial p14_23 = y(s[0], s[3]) * y(s[1], s[2]);
            out.push_back(p12_34 + p13_24.scaled(sign));
            out.push_back(p12_34 - p14_23);
        }
    }
    auto mono = unacceptable_quadrics(grid);
    out.insert(out.end(), std::make_move_iterator(mono.begin()), std::make_move_iterator(mono.end()));
    if (kind == InvariantKind::Hafnian) {
        const Polynomial hf = build_invariant(kind, n);
        for (std::size_t i = 0; i < out.size(); ++i) {
            if (!contract(out[i], hf).is_zero()) {
                throw VerificationError("Hafnian candidate #" + std::to_string(i) + " does not annihilate Hf");
            }
        }
    }
    return out;
}

} // namespace apolar
