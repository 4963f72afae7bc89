#include "stammerlab/dyck.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace stammerlab {

DyckPath::DyckPath(std::vector<Step> steps) : steps_(std::move(steps)) {
    int h = 0;
    for (Step s : steps_) {
        h += (s == Step::Up) ? 1 : -1;
        if (h < 0) throw std::invalid_argument("DyckPath: prefix goes below the axis");
    }
    if (h != 0) throw std::invalid_argument("DyckPath: path must return to the axis");
}

DyckPath DyckPath::from_word(std::string_view word) {
    std::vector<Step> steps;
    steps.reserve(word.size());
    for (char c : word) {
        if (c == 'U')
            steps.push_back(Step::Up);
        else if (c == 'D')
            steps.push_back(Step::Down);
        else
            throw std::invalid_argument("DyckPath::from_word: letters must be U or D");
    }
    return DyckPath(std::move(steps));
}

std::string DyckPath::word() const {
    std::string out;
    out.reserve(steps_.size());
    for (Step s : steps_) out += (s == Step::Up) ? 'U' : 'D';
    return out;
}

int DyckPath::height_after(int i) const {
    if (i < 0 || i > length()) throw std::invalid_argument("height_after: index out of range");
    int h = 0;
    for (int k = 0; k < i; ++k) h += (steps_[k] == Step::Up) ? 1 : -1;
    return h;
}

int column_height(const DyckPath& p, int col) {
    if (col < 1 || col > p.length())
        throw std::invalid_argument("column_height: column out of range");
    if (p.steps()[col - 1] == Step::Up) return p.height_after(col - 1) / 2 + 1;
    return (p.height_after(col) + 1) / 2;
}

std::vector<Cell> column_cells(const DyckPath& p, int col) {
    int height = column_height(p, col);
    int x = col - 1;
    std::vector<Cell> cells;
    cells.reserve(height);
    for (int i = 0; i < height; ++i) cells.push_back({x, x % 2 + 2 * i});
    return cells;
}

std::vector<Cell> cells_of(const DyckPath& p) {
    std::vector<Cell> cells;
    for (int col = 1; col <= p.length(); ++col) {
        auto cc = column_cells(p, col);
        cells.insert(cells.end(), cc.begin(), cc.end());
    }
    std::sort(cells.begin(), cells.end());
    return cells;
}

bool is_ribbon(const std::vector<Cell>& cells) {
    if (cells.empty()) return false;
    std::set<Cell> set(cells.begin(), cells.end());
    // no 2x2 square (a diamond of four cells in the rotated grid)
    for (const Cell& c : set)
        if (set.count({c.x - 1, c.y - 1}) && set.count({c.x + 1, c.y - 1}) &&
            set.count({c.x, c.y - 2}))
            return false;
    // connected under diagonal adjacency
    std::vector<Cell> queue = {*set.begin()};
    std::set<Cell> seen = {*set.begin()};
    while (!queue.empty()) {
        Cell c = queue.back();
        queue.pop_back();
        for (int dx : {-1, 1})
            for (int dy : {-1, 1}) {
                Cell nb{c.x + dx, c.y + dy};
                if (set.count(nb) && seen.insert(nb).second) queue.push_back(nb);
            }
    }
    return seen.size() == set.size();
}

int ne_diagonal_count(const Ribbon& r) {
    std::set<int> diags;
    for (const Cell& c : r.cells) diags.insert(c.x - c.y);
    return static_cast<int>(diags.size());
}

int leftmost_column(const Ribbon& r) {
    if (r.cells.empty()) throw std::invalid_argument("leftmost_column: empty ribbon");
    int x = r.cells.front().x;
    for (const Cell& c : r.cells) x = std::min(x, c.x);
    return x + 1;
}

namespace {

Ribbon difference(const DyckPath& small, const DyckPath& big) {
    auto a = cells_of(small);
    auto b = cells_of(big);
    std::vector<Cell> diff;
    std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(diff));
    return Ribbon{std::move(diff)};
}

}  // namespace

std::vector<std::pair<DyckPath, Ribbon>> ribbon_successors(const DyckPath& p) {
    std::vector<Step> base = p.steps();
    base.push_back(Step::Down);
    base.push_back(Step::Down);
    std::vector<std::pair<DyckPath, Ribbon>> out;
    for (std::size_t i = 0; i + 1 < base.size(); ++i) {
        if (base[i] != Step::Down) continue;
        std::vector<Step> steps = base;
        steps[i] = Step::Up;
        DyckPath successor(std::move(steps));
        Ribbon ribbon = difference(p, successor);
        out.emplace_back(std::move(successor), std::move(ribbon));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return ne_diagonal_count(a.second) < ne_diagonal_count(b.second);
    });
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (!is_ribbon(out[i].second.cells) ||
            ne_diagonal_count(out[i].second) != static_cast<int>(i) + 1)
            throw std::logic_error("ribbon_successors: diagonal counts are not 1..m+1");
    }
    return out;
}

DyckPath add_ribbon(const DyckPath& p, int diagonals) {
    if (diagonals < 1 || diagonals > p.rank() + 1)
        throw std::invalid_argument("add_ribbon: diagonal count out of range");
    return ribbon_successors(p)[diagonals - 1].first;
}

ChainOfDyckShapes::ChainOfDyckShapes(std::vector<DyckPath> paths) : paths_(std::move(paths)) {
    if (paths_.empty()) throw std::invalid_argument("ChainOfDyckShapes: chain must be nonempty");
    for (std::size_t i = 0; i < paths_.size(); ++i) {
        if (paths_[i].length() != 2 * (static_cast<int>(i) + 1))
            throw std::invalid_argument("ChainOfDyckShapes: element " + std::to_string(i + 1) +
                                        " must have length " + std::to_string(2 * (i + 1)));
        if (i == 0) continue;
        Ribbon diff = difference(paths_[i - 1], paths_[i]);
        auto small = cells_of(paths_[i - 1]);
        auto big = cells_of(paths_[i]);
        if (small.size() + diff.cells.size() != big.size() ||
            !std::includes(big.begin(), big.end(), small.begin(), small.end()) ||
            !is_ribbon(diff.cells))
            throw std::invalid_argument("ChainOfDyckShapes: consecutive difference is not a ribbon");
    }
}

std::vector<Ribbon> ChainOfDyckShapes::ribbons() const {
    std::vector<Ribbon> out;
    out.reserve(paths_.size());
    out.push_back(Ribbon{cells_of(paths_[0])});
    for (std::size_t i = 1; i < paths_.size(); ++i)
        out.push_back(difference(paths_[i - 1], paths_[i]));
    return out;
}

DyckPath path_from_rook(const RookPlacement& r) {
    if (auto report = validate_rook(r); !report)
        throw std::invalid_argument("path_from_rook: invalid placement: " + report.rule);
    std::vector<char> dotted(2 * r.n + 1, 0);
    for (int c : r.dots) dotted[c] = 1;
    std::vector<Step> steps;
    steps.reserve(2 * r.n + 2);
    steps.push_back(Step::Up);
    for (int c = 1; c <= 2 * r.n; ++c) steps.push_back(dotted[c] ? Step::Up : Step::Down);
    steps.push_back(Step::Down);
    return DyckPath(std::move(steps));
}

ChainOfDyckShapes chain_from_rook(const RookPlacement& r) {
    std::vector<DyckPath> paths;
    paths.reserve(r.n + 1);
    for (int i = 0; i <= r.n; ++i) paths.push_back(path_from_rook(top_rows(r, i)));
    return ChainOfDyckShapes(std::move(paths));
}

RookPlacement rook_from_chain(const ChainOfDyckShapes& c) {
    int n = c.size();
    RookPlacement out;
    out.n = n - 1;
    out.dots.assign(n - 1, 0);
    for (int i = 1; i < n; ++i) {
        const auto& small = c.paths()[i - 1].steps();
        const auto& big = c.paths()[i].steps();
        int j = 2 * i + 1;  // when the smaller path is a prefix
        for (std::size_t s = 0; s < small.size(); ++s)
            if (small[s] != big[s]) {
                j = static_cast<int>(s) + 1;
                break;
            }
        out.dots[n - 1 - i] = j - 1;  // row n-i, counted from the bottom
    }
    if (auto report = validate_rook(out); !report)
        throw std::invalid_argument("rook_from_chain: decoded dots are invalid: " + report.rule);
    return out;
}

namespace {

void chain_walk(std::vector<DyckPath>& prefix, int n,
                const std::function<void(const ChainOfDyckShapes&)>& fn) {
    if (static_cast<int>(prefix.size()) == n) {
        fn(ChainOfDyckShapes(prefix));
        return;
    }
    for (auto& [succ, ribbon] : ribbon_successors(prefix.back())) {
        prefix.push_back(succ);
        chain_walk(prefix, n, fn);
        prefix.pop_back();
    }
}

}  // namespace

void for_each_chain(int n, const std::function<void(const ChainOfDyckShapes&)>& fn) {
    if (n < 1) throw std::invalid_argument("for_each_chain: n must be positive");
    std::vector<DyckPath> prefix = {DyckPath::from_word("UD")};
    chain_walk(prefix, n, fn);
}

}  // namespace stammerlab
