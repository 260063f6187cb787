#include "apolar/grid.hpp"

#include <limits>
#include <regex>

#include "apolar/errors.hpp"

namespace apolar {

namespace {

constexpr int kMaxVariables = std::numeric_limits<VarIndex>::max();

int triangle_index(int i, int j) { return j * (j - 1) / 2 + i; }

} // namespace

VariableGrid VariableGrid::generic(int rows, int cols) {
    if (rows < 1 || cols < 1) throw UsageError("grid dimensions must be positive");
    if (rows * cols > kMaxVariables) throw UsageError("grid too large");
    return VariableGrid(rows, cols, Symmetry::Generic);
}

VariableGrid VariableGrid::skew_symmetric(int size) {
    if (size < 1) throw UsageError("grid dimensions must be positive");
    if (size * (size - 1) / 2 > kMaxVariables) throw UsageError("grid too large");
    return VariableGrid(size, size, Symmetry::SkewSymmetric);
}

VariableGrid VariableGrid::zero_diagonal_symmetric(int size) {
    if (size < 1) throw UsageError("grid dimensions must be positive");
    if (size * (size - 1) / 2 > kMaxVariables) throw UsageError("grid too large");
    return VariableGrid(size, size, Symmetry::ZeroDiagonalSymmetric);
}

int VariableGrid::variable_count() const {
    if (symmetry_ == Symmetry::Generic) return rows_ * cols_;
    return rows_ * (rows_ - 1) / 2;
}

void VariableGrid::check_cell(int i, int j) const {
    if (i < 0 || j < 0 || i >= rows_ || j >= cols_) throw UsageError("cell index out of range");
}

std::pair<int, int> VariableGrid::canonical_cell(int i, int j) const {
    check_cell(i, j);
    if (symmetry_ == Symmetry::Generic) return {i, j};
    return {std::min(i, j), std::max(i, j)};
}

CellEntry VariableGrid::entry(int i, int j) const {
    check_cell(i, j);
    switch (symmetry_) {
    case Symmetry::Generic:
        return {1, static_cast<VarIndex>(j * rows_ + i)};
    case Symmetry::SkewSymmetric:
        if (i == j) return {};
        if (i < j) return {1, static_cast<VarIndex>(triangle_index(i, j))};
        return {-1, static_cast<VarIndex>(triangle_index(j, i))};
    case Symmetry::ZeroDiagonalSymmetric:
        if (i == j) return {};
        return {1, static_cast<VarIndex>(triangle_index(std::min(i, j), std::max(i, j)))};
    }
    return {};
}

std::pair<int, int> VariableGrid::cell_of(VarIndex v) const {
    if (v >= variable_count()) throw UsageError("variable index out of range");
    if (symmetry_ == Symmetry::Generic) return {v % rows_, v / rows_};
    int j = 1;
    while (triangle_index(0, j + 1) <= v) ++j;
    return {v - triangle_index(0, j), j};
}

char VariableGrid::letter(Ring ring) const {
    if (symmetry_ == Symmetry::Generic) return ring == Ring::R ? 'a' : 'd';
    return ring == Ring::R ? 'x' : 'y';
}

std::string VariableGrid::variable_name(VarIndex v, Ring ring) const {
    auto [i, j] = cell_of(v);
    return std::string(1, letter(ring)) + "_{" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "}";
}

std::optional<CellEntry> VariableGrid::parse_variable(const std::string& name, Ring ring) const {
    static const std::regex pattern(R"(([adxy])_\{(\d+),(\d+)\})");
    std::smatch m;
    if (!std::regex_match(name, m, pattern)) return std::nullopt;
    if (m[1].str()[0] != letter(ring)) return std::nullopt;
    const int i = std::stoi(m[2].str()) - 1;
    const int j = std::stoi(m[3].str()) - 1;
    if (i < 0 || j < 0 || i >= rows_ || j >= cols_) return std::nullopt;
    return entry(i, j);
}

std::string to_string(Symmetry s) {
    switch (s) {
    case Symmetry::Generic: return "generic";
    case Symmetry::SkewSymmetric: return "skew";
    case Symmetry::ZeroDiagonalSymmetric: return "zero-diagonal-symmetric";
    }
    return "?";
}

} // namespace apolar
