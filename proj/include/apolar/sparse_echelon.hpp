#pragma once

// Incremental sparse row echelon form over an exact field. Rows are inserted
// one at a time and reduced against the stored pivot rows; a row that does
// not reduce to zero becomes a new pivot row (normalized to leading
// coefficient 1) at its lowest column index.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "apolar/errors.hpp"
#include "apolar/scalar.hpp"

namespace apolar {

template <class S>
using SparseRow = std::vector<std::pair<std::uint32_t, S>>;

// a - c * b for rows sorted by column.
template <class S>
SparseRow<S> row_axpy(const SparseRow<S>& a, const S& c, const SparseRow<S>& b) {
    SparseRow<S> out;
    out.reserve(a.size() + b.size());
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
            out.push_back(*ia++);
        } else if (ia == a.end() || ib->first < ia->first) {
            out.emplace_back(ib->first, -(c * ib->second));
            ++ib;
        } else {
            S v = ia->second - c * ib->second;
            if (!Field<S>::is_zero(v)) out.emplace_back(ia->first, std::move(v));
            ++ia;
            ++ib;
        }
    }
    return out;
}

// Entries whose image in the field is zero (e.g. a rational multiple of p
// read mod p) must not be mistaken for pivots.
template <class S>
void row_prune_zeros(SparseRow<S>& row) {
    std::erase_if(row, [](const auto& e) { return Field<S>::is_zero(e.second); });
}

template <class S>
void row_normalize(SparseRow<S>& row) {
    if (row.empty() || Field<S>::is_one(row.front().second)) return;
    const S inv = Field<S>::inverse(row.front().second);
    for (auto& e : row) e.second = e.second * inv;
}

template <class S>
class SparseEchelon {
public:
    explicit SparseEchelon(std::size_t max_pivots = 50000) : max_pivots_(max_pivots) {}

    // Returns true when the rank grew.
    bool insert(SparseRow<S> row) {
        row_prune_zeros(row);
        reduce_in_place(row);
        if (row.empty()) return false;
        if (rows_.size() >= max_pivots_) {
            throw CeilingError("pivot count ceiling of " + std::to_string(max_pivots_) + " exceeded");
        }
        row_normalize(row);
        const std::uint32_t col = row.front().first;
        if (col >= pivot_of_.size()) pivot_of_.resize(static_cast<std::size_t>(col) + 1, -1);
        pivot_of_[col] = static_cast<std::int64_t>(rows_.size());
        rows_.push_back(std::move(row));
        return true;
    }

    // Leading-term reduction against the current pivots.
    void reduce_in_place(SparseRow<S>& row) const {
        while (!row.empty()) {
            const std::uint32_t col = row.front().first;
            const std::int64_t p = col < pivot_of_.size() ? pivot_of_[col] : -1;
            if (p < 0) return;
            const S c = row.front().second;
            row = row_axpy(row, c, rows_[static_cast<std::size_t>(p)]);
        }
    }

    bool in_span(SparseRow<S> row) const {
        row_prune_zeros(row);
        reduce_in_place(row);
        return row.empty();
    }

    std::size_t rank() const { return rows_.size(); }

    // Fully reduced basis sorted by pivot column: every pivot column is zero
    // in all rows except its own.
    std::vector<SparseRow<S>> reduced_rows() const {
        std::vector<std::size_t> order(rows_.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return rows_[a].front().first > rows_[b].front().first; });
        std::vector<SparseRow<S>> reduced(rows_.size());
        std::vector<std::int64_t> done_of(pivot_of_.size(), -1);
        // Largest pivot column first; rows below are already reduced.
        for (std::size_t idx : order) {
            SparseRow<S> row = rows_[idx];
            bool changed = true;
            while (changed) {
                changed = false;
                for (std::size_t e = 1; e < row.size(); ++e) {
                    const std::uint32_t col = row[e].first;
                    const std::int64_t d = col < done_of.size() ? done_of[col] : -1;
                    if (d < 0) continue;
                    const S c = row[e].second;
                    row = row_axpy(row, c, reduced[static_cast<std::size_t>(d)]);
                    changed = true;
                    break;
                }
            }
            done_of[row.front().first] = static_cast<std::int64_t>(idx);
            reduced[idx] = std::move(row);
        }
        std::sort(reduced.begin(), reduced.end(),
                  [](const SparseRow<S>& a, const SparseRow<S>& b) { return a.front().first < b.front().first; });
        return reduced;
    }

private:
    std::size_t max_pivots_;
    std::vector<SparseRow<S>> rows_;
    std::vector<std::int64_t> pivot_of_;
};

// Echelon that also tracks, for each stored row, which combination of the
// inserted rows produced it. Used to read off kernel vectors: when an
// inserted row reduces to zero, its tracked combination is a linear relation.
template <class S>
class TrackingEchelon {
public:
    explicit TrackingEchelon(std::size_t max_pivots = 50000) : max_pivots_(max_pivots) {}

    // Inserts `row` tagged as input number `tag`. Returns the relation
    // (combination over input tags, coefficient 1 on `tag`) when the row
    // is dependent on earlier ones.
    std::optional<SparseRow<S>> insert(SparseRow<S> row, std::uint32_t tag) {
        row_prune_zeros(row);
        SparseRow<S> combo{{tag, Field<S>::one()}};
        while (!row.empty()) {
            const std::uint32_t col = row.front().first;
            const std::int64_t p = col < pivot_of_.size() ? pivot_of_[col] : -1;
            if (p < 0) break;
            const S c = row.front().second;
            const auto& piv = rows_[static_cast<std::size_t>(p)];
            row = row_axpy(row, c, piv.first);
            combo = row_axpy(combo, c, piv.second);
        }
        if (row.empty()) return combo;
        if (rows_.size() >= max_pivots_) {
            throw CeilingError("pivot count ceiling of " + std::to_string(max_pivots_) + " exceeded");
        }
        const S inv = Field<S>::inverse(row.front().second);
        if (!Field<S>::is_one(row.front().second)) {
            for (auto& e : row) e.second = e.second * inv;
            for (auto& e : combo) e.second = e.second * inv;
        }
        const std::uint32_t col = row.front().first;
        if (col >= pivot_of_.size()) pivot_of_.resize(static_cast<std::size_t>(col) + 1, -1);
        pivot_of_[col] = static_cast<std::int64_t>(rows_.size());
        rows_.emplace_back(std::move(row), std::move(combo));
        return std::nullopt;
    }

    std::size_t rank() const { return rows_.size(); }

private:
    std::size_t max_pivots_;
    std::vector<std::pair<SparseRow<S>, SparseRow<S>>> rows_;
    std::vector<std::int64_t> pivot_of_;
};

} // namespace apolar
