#pragma once

#include <compare>
#include <functional>
#include <vector>

#include "stammerlab/validity.hpp"

namespace stammerlab {

// Rook placement in the double staircase 2delta_n. Rows are numbered 1..n
// from the bottom, row r has length 2(n-r+1); columns are global, 1-based
// and left aligned, so truncating rows never re-indexes columns.
// dots[r-1] is the dot column of row r.
struct RookPlacement {
    int n = 0;
    std::vector<int> dots;

    friend bool operator==(const RookPlacement&, const RookPlacement&) = default;
    friend auto operator<=>(const RookPlacement&, const RookPlacement&) = default;
};

// Same geometry, at most one dot per row; 0 marks a dotless row.
struct PartialRookPlacement {
    int n = 0;
    std::vector<int> dots;

    int dot_count() const;
    friend bool operator==(const PartialRookPlacement&, const PartialRookPlacement&) = default;
    friend auto operator<=>(const PartialRookPlacement&, const PartialRookPlacement&) = default;
};

int staircase_row_length(int n, int row);
int staircase_column_height(int n, int col);  // number of rows reaching column col

ValidityReport validate_rook(const RookPlacement& r);
ValidityReport validate_partial_rook(const PartialRookPlacement& r);

// All placements of size n+1 obtained by adding a bottom row of length
// 2(n+1) under a placement of size n, sorted by the new dot column.
std::vector<RookPlacement> extensions(const RookPlacement& r);

void for_each_rook(int n, const std::function<void(const RookPlacement&)>& fn);
std::vector<RookPlacement> enumerate_rooks(int n);

// The placement formed by the i topmost rows, re-indexed as rows 1..i of
// 2delta_i; columns are unchanged.
RookPlacement top_rows(const RookPlacement& r, int i);

}  // namespace stammerlab
