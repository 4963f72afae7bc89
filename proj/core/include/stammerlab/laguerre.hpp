#pragma once

#include <functional>
#include <vector>

#include <gmpxx.h>

#include "stammerlab/dyck.hpp"

namespace stammerlab {

// Dot in the column filling of a Dyck shape; cell indices count from the
// bottom of the column, starting at 1.
struct ColumnDot {
    int column = 0;
    int index = 0;
    friend bool operator==(const ColumnDot&, const ColumnDot&) = default;
    friend auto operator<=>(const ColumnDot&, const ColumnDot&) = default;
};

// One dot in each column below an up step, nowhere else. A column below an
// up step from height h holds floor(h/2)+1 cells, so histories of shape D
// number prod over up steps of (floor(h/2)+1).
class LaguerreHistory {
public:
    LaguerreHistory(DyckPath shape, std::vector<ColumnDot> dots);

    const DyckPath& shape() const { return shape_; }
    const std::vector<ColumnDot>& dots() const { return dots_; }  // sorted by column
    int dot_index(int column) const;                              // 0 when column empty

    friend bool operator==(const LaguerreHistory&, const LaguerreHistory&) = default;

private:
    DyckPath shape_;
    std::vector<ColumnDot> dots_;
};

// One dot in each odd column.
class DyckTableau {
public:
    DyckTableau(DyckPath shape, std::vector<ColumnDot> dots);

    const DyckPath& shape() const { return shape_; }
    const std::vector<ColumnDot>& dots() const { return dots_; }
    int dot_index(int column) const;

    friend bool operator==(const DyckTableau&, const DyckTableau&) = default;

private:
    DyckPath shape_;
    std::vector<ColumnDot> dots_;
};

// Dot at the left extremity of every ribbon.
LaguerreHistory history_from_chain(const ChainOfDyckShapes& c);

// Inverse: peel ribbons rightmost-first, following the upper border of
// cells right to left until a dotted cell. Throws when the filling is not
// a history of any chain.
ChainOfDyckShapes chain_from_history(const LaguerreHistory& h);

// Cell-count-preserving bijection from columns below an up step to odd
// columns: odd columns are fixed; an even column below the up step
// (x,y)->(x+1,y+1) maps to the column right of its facing down step, the
// first one returning to height y. Pairs sorted by source column.
std::vector<std::pair<int, int>> kappa(const DyckPath& p);

DyckTableau to_dyck_tableau(const LaguerreHistory& h);
LaguerreHistory from_dyck_tableau(const DyckTableau& t);

mpz_class count_histories(const DyckPath& shape);
void for_each_history(const DyckPath& shape, const std::function<void(const LaguerreHistory&)>& fn);
void for_each_history_of_rank(int n, const std::function<void(const LaguerreHistory&)>& fn);
void for_each_dyck_tableau(const DyckPath& shape, const std::function<void(const DyckTableau&)>& fn);

}  // namespace stammerlab
