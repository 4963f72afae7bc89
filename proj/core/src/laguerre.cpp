#include "stammerlab/laguerre.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "stammerlab/poset.hpp"

namespace stammerlab {

namespace {

std::vector<ColumnDot> normalize_dots(std::vector<ColumnDot> dots) {
    std::sort(dots.begin(), dots.end());
    return dots;
}

void check_filling(const DyckPath& shape, const std::vector<ColumnDot>& dots,
                   const std::vector<int>& required_columns, const char* what) {
    if (dots.size() != required_columns.size())
        throw std::invalid_argument(std::string(what) + ": wrong number of dots");
    for (std::size_t i = 0; i < dots.size(); ++i) {
        if (dots[i].column != required_columns[i])
            throw std::invalid_argument(std::string(what) + ": dot columns mismatch");
        int height = column_height(shape, dots[i].column);
        if (dots[i].index < 1 || dots[i].index > height)
            throw std::invalid_argument(std::string(what) + ": dot index outside its column");
    }
}

std::vector<int> up_columns(const DyckPath& p) {
    std::vector<int> cols;
    for (int c = 1; c <= p.length(); ++c)
        if (p.steps()[c - 1] == Step::Up) cols.push_back(c);
    return cols;
}

std::vector<int> odd_columns(const DyckPath& p) {
    std::vector<int> cols;
    for (int c = 1; c <= p.length(); c += 2) cols.push_back(c);
    return cols;
}

}  // namespace

LaguerreHistory::LaguerreHistory(DyckPath shape, std::vector<ColumnDot> dots)
    : shape_(std::move(shape)), dots_(normalize_dots(std::move(dots))) {
    check_filling(shape_, dots_, up_columns(shape_), "LaguerreHistory");
}

int LaguerreHistory::dot_index(int column) const {
    for (const auto& d : dots_)
        if (d.column == column) return d.index;
    return 0;
}

DyckTableau::DyckTableau(DyckPath shape, std::vector<ColumnDot> dots)
    : shape_(std::move(shape)), dots_(normalize_dots(std::move(dots))) {
    check_filling(shape_, dots_, odd_columns(shape_), "DyckTableau");
}

int DyckTableau::dot_index(int column) const {
    for (const auto& d : dots_)
        if (d.column == column) return d.index;
    return 0;
}

LaguerreHistory history_from_chain(const ChainOfDyckShapes& c) {
    std::vector<ColumnDot> dots;
    for (const Ribbon& r : c.ribbons()) {
        Cell left = r.cells.front();
        for (const Cell& cell : r.cells)
            if (cell.x < left.x) left = cell;
        dots.push_back({left.x + 1, (left.y - left.x % 2) / 2 + 1});
    }
    return LaguerreHistory(c.shape(), std::move(dots));
}

ChainOfDyckShapes chain_from_history(const LaguerreHistory& h) {
    int n = h.shape().rank();
    std::vector<DyckPath> paths(n);
    paths[n - 1] = h.shape();

    std::map<int, int> pending;  // column -> dot index, not yet consumed
    for (const auto& d : h.dots()) pending[d.column] = d.index;
    std::vector<int> height(h.shape().length() + 1, 0);
    for (int c = 1; c <= h.shape().length(); ++c) height[c] = column_height(h.shape(), c);

    for (int i = n; i >= 1; --i) {
        const DyckPath& cur = paths[i - 1];
        // Walk the upper border right to left until a dotted border cell.
        int stop = 0;
        for (int c = 2 * i - 1; c >= 1; --c) {
            if (height[c] == 0)
                throw std::invalid_argument("chain_from_history: border walk hit an empty column");
            auto it = pending.find(c);
            bool dotted_border = it != pending.end() && it->second == height[c];
            if (it != pending.end() && it->second > height[c])
                throw std::invalid_argument("chain_from_history: dot above the current border");
            --height[c];
            if (dotted_border) {
                pending.erase(it);
                stop = c;
                break;
            }
        }
        if (stop == 0)
            throw std::invalid_argument("chain_from_history: ribbon peel found no dot");
        if (i == 1) break;

        // The peeled ribbon entered at column `stop`: undo the word flip.
        auto steps = cur.steps();
        if (steps[stop - 1] != Step::Up)
            throw std::invalid_argument("chain_from_history: dotted column is not below an up step");
        steps[stop - 1] = Step::Down;
        if (steps[2 * i - 2] != Step::Down || steps[2 * i - 1] != Step::Down)
            throw std::invalid_argument("chain_from_history: peel does not shorten the path");
        steps.resize(2 * i - 2);
        paths[i - 2] = DyckPath(std::move(steps));

        for (int c = 1; c <= 2 * (i - 1); ++c)
            if (height[c] != column_height(paths[i - 2], c))
                throw std::invalid_argument("chain_from_history: peel left a ragged shape");
    }
    if (!pending.empty())
        throw std::invalid_argument("chain_from_history: dots left after peeling");
    return ChainOfDyckShapes(std::move(paths));
}

std::vector<std::pair<int, int>> kappa(const DyckPath& p) {
    std::vector<std::pair<int, int>> out;
    for (int c : up_columns(p)) {
        if (c % 2 == 1) {
            out.emplace_back(c, c);
            continue;
        }
        int start = p.height_after(c - 1);
        int facing = 0;
        for (int j = c + 1; j <= p.length(); ++j)
            if (p.height_after(j) == start) {
                facing = j;
                break;
            }
        if (facing == 0 || facing % 2 == 0)
            throw std::logic_error("kappa: no odd facing column found");
        out.emplace_back(c, facing);
    }
    return out;
}

DyckTableau to_dyck_tableau(const LaguerreHistory& h) {
    std::map<int, int> image;
    for (const auto& [from, to] : kappa(h.shape())) image[from] = to;
    std::vector<ColumnDot> dots;
    for (const auto& d : h.dots()) dots.push_back({image.at(d.column), d.index});
    return DyckTableau(h.shape(), std::move(dots));
}

LaguerreHistory from_dyck_tableau(const DyckTableau& t) {
    std::map<int, int> preimage;
    for (const auto& [from, to] : kappa(t.shape())) preimage[to] = from;
    std::vector<ColumnDot> dots;
    for (const auto& d : t.dots()) dots.push_back({preimage.at(d.column), d.index});
    return LaguerreHistory(t.shape(), std::move(dots));
}

mpz_class count_histories(const DyckPath& shape) {
    mpz_class total = 1;
    for (int c : up_columns(shape)) total *= column_height(shape, c);
    return total;
}

namespace {

void fill_walk(const DyckPath& shape, const std::vector<int>& cols, std::size_t i,
               std::vector<ColumnDot>& dots,
               const std::function<void(const std::vector<ColumnDot>&)>& fn) {
    if (i == cols.size()) {
        fn(dots);
        return;
    }
    int height = column_height(shape, cols[i]);
    for (int idx = 1; idx <= height; ++idx) {
        dots.push_back({cols[i], idx});
        fill_walk(shape, cols, i + 1, dots, fn);
        dots.pop_back();
    }
}

}  // namespace

void for_each_history(const DyckPath& shape,
                      const std::function<void(const LaguerreHistory&)>& fn) {
    std::vector<ColumnDot> dots;
    fill_walk(shape, up_columns(shape), 0, dots,
              [&](const std::vector<ColumnDot>& d) { fn(LaguerreHistory(shape, d)); });
}

void for_each_history_of_rank(int n, const std::function<void(const LaguerreHistory&)>& fn) {
    for (const DyckPath& shape : all_dyck_paths(n)) for_each_history(shape, fn);
}

void for_each_dyck_tableau(const DyckPath& shape,
                           const std::function<void(const DyckTableau&)>& fn) {
    std::vector<ColumnDot> dots;
    fill_walk(shape, odd_columns(shape), 0, dots,
              [&](const std::vector<ColumnDot>& d) { fn(DyckTableau(shape, d)); });
}

}  // namespace stammerlab
