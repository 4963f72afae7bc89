#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "stammerlab/staircase.hpp"

namespace stammerlab {

enum class Step : std::uint8_t { Up, Down };

// Dyck path of length 2m: every prefix has at least as many up as down
// steps and the totals agree. The step word is the canonical form; the skew
// shape view (cells, columns, ribbons) is computed on demand.
class DyckPath {
public:
    DyckPath() = default;
    explicit DyckPath(std::vector<Step> steps);
    static DyckPath from_word(std::string_view word);  // over 'U' / 'D'

    const std::vector<Step>& steps() const { return steps_; }
    std::string word() const;
    int length() const { return static_cast<int>(steps_.size()); }
    int rank() const { return length() / 2; }
    int height_after(int i) const;  // i in 0..length

    friend bool operator==(const DyckPath&, const DyckPath&) = default;
    friend auto operator<=>(const DyckPath&, const DyckPath&) = default;

private:
    std::vector<Step> steps_;
};

// Cells of the Dyck shape in Japanese notation: bottom-left cell (0,0), the
// cell to its North-East (1,1), bottom-right (2m-2,0). Column k (1-based)
// sits below step k and its cells have x = k-1, y = x mod 2, x mod 2 + 2, ...
struct Cell {
    int x = 0;
    int y = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

int column_height(const DyckPath& p, int col);
std::vector<Cell> column_cells(const DyckPath& p, int col);  // bottom to top
std::vector<Cell> cells_of(const DyckPath& p);               // sorted

// Connected skew cell set without a 2x2 square (in the rotated grid:
// {(x,y),(x-1,y-1),(x+1,y-1),(x,y-2)}).
struct Ribbon {
    std::vector<Cell> cells;  // sorted
    friend bool operator==(const Ribbon&, const Ribbon&) = default;
};

bool is_ribbon(const std::vector<Cell>& cells);
int ne_diagonal_count(const Ribbon& r);  // distinct x - y values
int leftmost_column(const Ribbon& r);

// The m+1 one-ribbon extensions of a rank-m path: flip one down step of
// D followed by two extra downs (any but the last). Ordered by the ribbon's
// NE-diagonal count, which takes exactly the values 1..m+1.
std::vector<std::pair<DyckPath, Ribbon>> ribbon_successors(const DyckPath& p);
DyckPath add_ribbon(const DyckPath& p, int diagonals);

// Saturated chain D_1 < D_2 < ... < D_n under ribbon addition, D_i of
// length 2i. The n difference ribbons (with D_0 empty) partition D_n.
class ChainOfDyckShapes {
public:
    explicit ChainOfDyckShapes(std::vector<DyckPath> paths);

    int size() const { return static_cast<int>(paths_.size()); }
    const std::vector<DyckPath>& paths() const { return paths_; }
    const DyckPath& shape() const { return paths_.back(); }
    std::vector<Ribbon> ribbons() const;

    friend bool operator==(const ChainOfDyckShapes&, const ChainOfDyckShapes&) = default;

private:
    std::vector<DyckPath> paths_;
};

// d(R): first step up, last step down, step i+1 up iff column i of R holds
// a dot. Always a Dyck path.
DyckPath path_from_rook(const RookPlacement& r);

// R in 2delta_{n-1}  <->  n-chain (d(top_rows(R,0)), ..., d(top_rows(R,n-1))).
ChainOfDyckShapes chain_from_rook(const RookPlacement& r);
RookPlacement rook_from_chain(const ChainOfDyckShapes& c);

void for_each_chain(int n, const std::function<void(const ChainOfDyckShapes&)>& fn);

}  // namespace stammerlab
