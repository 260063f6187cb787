#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

namespace apolar {

using VarIndex = std::uint16_t;

// Which side of the apolarity pairing a polynomial lives on: R = k[a_ij]
// (or k[x_ij]) carries the forms, S = k[d_ij] (or k[y_ij]) the operators.
enum class Ring { R, S };

enum class Symmetry { Generic, SkewSymmetric, ZeroDiagonalSymmetric };

// What a matrix cell holds after canonicalization: zero, or sign * variable.
struct CellEntry {
    int sign = 0;  // 0 means the cell is identically zero
    VarIndex var = 0;

    bool is_zero() const { return sign == 0; }
    friend bool operator==(const CellEntry&, const CellEntry&) = default;
};

// An m x n matrix of formal variables. Cells are 0-based here; printed
// names are 1-based. Variables are numbered column-major over the cells
// that own a variable (all cells for Generic, the strict upper triangle
// otherwise), so that variable 0 is the largest one in the diagonal order.
class VariableGrid {
public:
    static VariableGrid generic(int rows, int cols);
    static VariableGrid skew_symmetric(int size);
    static VariableGrid zero_diagonal_symmetric(int size);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Symmetry symmetry() const { return symmetry_; }
    int variable_count() const;

    CellEntry entry(int i, int j) const;
    // Owning cell (i <= j for the symmetric kinds) of a variable.
    std::pair<int, int> cell_of(VarIndex v) const;
    // Canonical cell for (i, j): (i, j) for Generic, (min, max) otherwise.
    std::pair<int, int> canonical_cell(int i, int j) const;

    std::string variable_name(VarIndex v, Ring ring) const;
    // Parses names such as "a_{1,2}"; the letter must match ring and grid kind.
    std::optional<CellEntry> parse_variable(const std::string& name, Ring ring) const;

    char letter(Ring ring) const;

    friend bool operator==(const VariableGrid&, const VariableGrid&) = default;

private:
    VariableGrid(int rows, int cols, Symmetry s) : rows_(rows), cols_(cols), symmetry_(s) {}
    void check_cell(int i, int j) const;

    int rows_ = 0;
    int cols_ = 0;
    Symmetry symmetry_ = Symmetry::Generic;
};

std::string to_string(Symmetry s);

} // namespace apolar
