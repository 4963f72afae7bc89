#include "stammerlab/growth.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace stammerlab {

namespace {

bool up_or_equal(const Partition& lo, const Partition& hi) {
    return lo == hi || is_cover(lo, hi);
}

}  // namespace

Partition forward_cell(const Partition& lam, const Partition& mu,
                       const Partition& nu, bool dotted) {
    if (!up_or_equal(lam, mu) || !up_or_equal(lam, nu))
        throw std::invalid_argument("forward_cell: SW corner does not reach its neighbours");
    if (dotted && !(lam == mu && lam == nu))
        throw std::invalid_argument("forward_cell: dotted cell requires equal corners");
    if (mu != nu) return union_max(mu, nu);
    if (lam == mu) {
        if (!dotted) return lam;
        return lam.empty() ? Partition({1}) : add_cell(lam, 1);
    }
    // lam covered by mu == nu: grow mu one row above the changed row.
    int k = cover_row(lam, mu);
    return add_cell(mu, k + 1);
}

std::pair<Partition, bool> reverse_cell(const Partition& mu, const Partition& nu,
                                        const Partition& rho) {
    if (mu != nu) {
        if (rho != union_max(mu, nu))
            throw std::invalid_argument("reverse_cell: NE corner must be the union of N and E");
        Partition lam = intersect_min(mu, nu);
        if (!up_or_equal(lam, mu) || !up_or_equal(lam, nu))
            throw std::invalid_argument("reverse_cell: unreachable corner triple");
        return {std::move(lam), false};
    }
    if (rho == mu) return {mu, false};
    int j = cover_row(mu, rho);
    if (j == -1) throw std::invalid_argument("reverse_cell: NE corner must cover or equal N");
    if (j == 1) return {mu, true};
    if (!is_removable_row(mu, j - 1))
        throw std::invalid_argument("reverse_cell: unreachable corner triple");
    return {remove_cell(mu, j - 1), false};
}

int GrowthDiagram::vertex_top(int n, int x) {
    return x <= 2 ? n : n + 1 - (x + 1) / 2;
}

int GrowthDiagram::cell_top(int n, int x) { return n - x / 2; }

namespace {

GrowthDiagram empty_grid(int n) {
    GrowthDiagram g;
    g.n = n;
    g.labels.resize(2 * n + 1);
    for (int x = 0; x <= 2 * n; ++x)
        g.labels[x].resize(GrowthDiagram::vertex_top(n, x) + 1);
    g.dot.resize(std::max(0, 2 * n));
    for (int x = 0; x < 2 * n; ++x) g.dot[x].assign(GrowthDiagram::cell_top(n, x), 0);
    return g;
}

void forward_fill(GrowthDiagram& g) {
    int n = g.n;
    for (int x = 0; x < 2 * n; ++x)
        for (int y = 0; y < GrowthDiagram::cell_top(n, x); ++y)
            g.labels[x + 1][y + 1] = forward_cell(g.labels[x][y], g.labels[x][y + 1],
                                                  g.labels[x + 1][y], g.dot[x][y] != 0);
#ifndef NDEBUG
    // Any dependency-compatible evaluation order agrees; recheck row-major.
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < 2 * (n - y); ++x) {
            Partition rho = forward_cell(g.labels[x][y], g.labels[x][y + 1],
                                         g.labels[x + 1][y], g.dot[x][y] != 0);
            if (rho != g.labels[x + 1][y + 1])
                throw std::logic_error("growth diagram evaluation is order dependent");
        }
#endif
}

}  // namespace

GrowthDiagram GrowthDiagram::from_rook(const RookPlacement& r) {
    if (auto report = validate_rook(r); !report)
        throw std::invalid_argument("GrowthDiagram::from_rook: invalid placement: " + report.rule);
    GrowthDiagram g = empty_grid(r.n);
    for (int row = 1; row <= r.n; ++row) g.dot[r.dots[row - 1] - 1][row - 1] = 1;
    forward_fill(g);
    return g;
}

std::vector<Partition> GrowthDiagram::ne_boundary() const {
    std::vector<Partition> out;
    out.reserve(3 * n + 1);
    out.push_back(labels[0][n]);
    for (int t = 0; t < n; ++t) {
        out.push_back(labels[2 * t + 1][n - t]);
        out.push_back(labels[2 * t + 2][n - t]);
        out.push_back(labels[2 * t + 2][n - t - 1]);
    }
    return out;
}

StammeringTableau rook_to_stammering(const RookPlacement& r) {
    return make_stammering(GrowthDiagram::from_rook(r).ne_boundary());
}

namespace {

// Places the walk along the NE boundary and completes the diagram with the
// reverse local rules, right to left and top to bottom.
GrowthDiagram reverse_fill(const StammeringTableau& t) {
    int n = t.size;
    GrowthDiagram g = empty_grid(n);
    g.labels[0][n] = t.steps[0];
    for (int s = 0; s < n; ++s) {
        g.labels[2 * s + 1][n - s] = t.steps[3 * s + 1];
        g.labels[2 * s + 2][n - s] = t.steps[3 * s + 2];
        g.labels[2 * s + 2][n - s - 1] = t.steps[3 * s + 3];
    }
    for (int x = 2 * n - 1; x >= 0; --x)
        for (int y = GrowthDiagram::cell_top(n, x) - 1; y >= 0; --y) {
            auto [lam, dotted] = reverse_cell(g.labels[x][y + 1], g.labels[x + 1][y],
                                              g.labels[x + 1][y + 1]);
            g.labels[x][y] = std::move(lam);
            g.dot[x][y] = dotted ? 1 : 0;
        }
    return g;
}

PartialRookPlacement dots_of(const GrowthDiagram& g) {
    PartialRookPlacement p;
    p.n = g.n;
    p.dots.assign(g.n, 0);
    for (int x = 0; x < 2 * g.n; ++x)
        for (int y = 0; y < GrowthDiagram::cell_top(g.n, x); ++y)
            if (g.dot[x][y]) {
                if (p.dots[y] != 0)
                    throw std::invalid_argument("growth diagram holds two dots in one row");
                p.dots[y] = x + 1;
            }
    if (auto report = validate_partial_rook(p); !report)
        throw std::invalid_argument("growth diagram dots are not a partial placement: " +
                                    report.rule);
    return p;
}

}  // namespace

RookPlacement to_full_placement(const PartialRookPlacement& p) {
    for (int c : p.dots)
        if (c == 0) throw std::invalid_argument("to_full_placement: a row has no dot");
    RookPlacement r{p.n, p.dots};
    if (auto report = validate_rook(r); !report)
        throw std::invalid_argument("to_full_placement: " + report.rule);
    return r;
}

RookPlacement stammering_to_rook(const StammeringTableau& t) {
    if (t.steps.empty() || 3 * t.size + 1 != static_cast<int>(t.steps.size()))
        throw std::invalid_argument("stammering_to_rook: stored size disagrees with the walk");
    if (auto report = validate_stammering(t.steps, Partition(), Partition()); !report)
        throw std::invalid_argument("stammering_to_rook: not a plain stammering tableau: " +
                                    report.rule + " at index " + std::to_string(report.index));
    return to_full_placement(dots_of(reverse_fill(t)));
}

SchenstedResult rook_to_stammering_via_schensted(const RookPlacement& r) {
    if (auto report = validate_rook(r); !report)
        throw std::invalid_argument("via_schensted: invalid placement: " + report.rule);
    int n = r.n;
    std::vector<int> dot_row_of_col(2 * n + 1, 0);
    for (int row = 1; row <= n; ++row) dot_row_of_col[r.dots[row - 1]] = row;

    SchenstedResult out;
    out.tableaux.reserve(3 * n + 1);
    out.tableaux.emplace_back();
    for (int t = 0; t < n; ++t) {
        for (int c : {2 * t + 1, 2 * t + 2}) {
            const auto& prev = out.tableaux.back();
            int k = dot_row_of_col[c];
            out.tableaux.push_back(k == 0 ? prev : row_insert(prev, k));
        }
        try {
            out.tableaux.push_back(corner_remove(out.tableaux.back(), n - t));
        } catch (const std::invalid_argument&) {
            throw std::logic_error("via_schensted: walk tried to remove a non-corner entry");
        }
    }
    std::vector<Partition> shapes;
    shapes.reserve(out.tableaux.size());
    for (const auto& tab : out.tableaux) shapes.push_back(tab.shape());
    out.shapes = make_stammering(std::move(shapes));
    return out;
}

namespace {

struct ShadowDot {
    int col = 0;
    int row = 0;
};

// Splits a dot family into its shadow lines: each line is the lower-left
// staircase of the dots not yet covered, read by column; rows strictly
// decrease along a line.
std::vector<std::vector<ShadowDot>> shadow_lines(std::vector<ShadowDot> dots) {
    std::sort(dots.begin(), dots.end(),
              [](const ShadowDot& a, const ShadowDot& b) { return a.col < b.col; });
    std::vector<std::vector<ShadowDot>> lines;
    std::vector<char> taken(dots.size(), 0);
    std::size_t left = dots.size();
    while (left > 0) {
        std::vector<ShadowDot> line;
        int min_row = 0;
        for (std::size_t i = 0; i < dots.size(); ++i) {
            if (taken[i]) continue;
            if (line.empty() || dots[i].row < min_row) {
                line.push_back(dots[i]);
                min_row = dots[i].row;
                taken[i] = 1;
                --left;
            }
        }
        lines.push_back(std::move(line));
    }
    return lines;
}

}  // namespace

StammeringTableau rook_to_stammering_via_shadows(const RookPlacement& r) {
    if (auto report = validate_rook(r); !report)
        throw std::invalid_argument("via_shadows: invalid placement: " + report.rule);
    int n = r.n;

    // delta[j][s]: change of row j+1 at boundary step s (1..3n).
    std::vector<std::vector<int>> delta;

    std::vector<ShadowDot> family;
    for (int row = 1; row <= n; ++row) family.push_back({r.dots[row - 1], row});

    while (!family.empty()) {
        {
            std::set<int> cols, rows;
            for (const ShadowDot& d : family) {
                if (!cols.insert(d.col).second || !rows.insert(d.row).second)
                    throw std::logic_error("via_shadows: derived dots clash");
            }
        }
        delta.emplace_back(3 * n + 1, 0);
        auto& dj = delta.back();
        std::vector<char> step_hit(3 * n + 1, 0);
        auto record = [&](int step, int change) {
            if (step_hit[step])
                throw std::logic_error("via_shadows: two crossings of one family on one step");
            step_hit[step] = 1;
            dj[step] = change;
        };

        std::vector<ShadowDot> next_family;
        for (const auto& line : shadow_lines(family)) {
            for (std::size_t i = 0; i < line.size(); ++i) {
                // Vertical piece at column c, spanning rows [line[i].row, prev row).
                int c = line[i].col;
                int h = staircase_column_height(n, c);
                bool below_top = (i == 0) || h < line[i - 1].row;
                if (h >= line[i].row && below_top) {
                    int t = (c - 1) / 2;
                    record(c % 2 == 1 ? 3 * t + 1 : 3 * t + 2, +1);
                }
                // Horizontal piece at this row, spanning columns [c, next col).
                int edge = staircase_row_length(n, line[i].row);
                if (i + 1 == line.size() || edge < line[i + 1].col)
                    record(3 * (n - line[i].row) + 3, -1);
                // Corner before the next dot becomes a dot of the next family
                // when it lands inside the staircase.
                if (i + 1 < line.size() && line[i + 1].col <= edge)
                    next_family.push_back({line[i + 1].col, line[i].row});
            }
        }
        family = std::move(next_family);
    }

    std::vector<Partition> steps;
    steps.reserve(3 * n + 1);
    std::vector<int> running(delta.size(), 0);
    steps.push_back(Partition());
    for (int s = 1; s <= 3 * n; ++s) {
        std::vector<int> parts;
        for (std::size_t j = 0; j < delta.size(); ++j) {
            running[j] += delta[j][s];
            if (running[j] < 0) throw std::logic_error("via_shadows: negative row tally");
        }
        for (std::size_t j = 0; j < delta.size(); ++j) {
            if (running[j] == 0) break;
            parts.push_back(running[j]);
        }
        int kept = static_cast<int>(parts.size());
        for (std::size_t j = kept; j < delta.size(); ++j)
            if (running[j] != 0) throw std::logic_error("via_shadows: row tallies not a partition");
        steps.push_back(Partition(std::move(parts)));
    }
    return make_stammering(std::move(steps));
}

namespace {

// Rebuilds the growth order of a weakly increasing border walk: each strict
// step must add one cell; entry t is written into the tableau at the t-th
// added cell. Returns the positions (1-based step indices) that grew.
struct BorderChain {
    IncompleteStandardTableau tableau;
    std::vector<int> growth_steps;
};

BorderChain chain_encode(const std::vector<Partition>& border) {
    std::vector<std::vector<int>> rows;
    std::vector<int> growth;
    int entry = 0;
    for (std::size_t i = 0; i + 1 < border.size(); ++i) {
        if (border[i] == border[i + 1]) continue;
        int row = cover_row(border[i], border[i + 1]);
        if (row == -1)
            throw std::invalid_argument("generalized border must grow by single cells");
        ++entry;
        if (row > static_cast<int>(rows.size())) rows.emplace_back();
        rows[row - 1].push_back(entry);
        growth.push_back(static_cast<int>(i) + 1);
    }
    return {IncompleteStandardTableau(std::move(rows)), std::move(growth)};
}

std::vector<Partition> chain_decode(const IncompleteStandardTableau& tableau,
                                    const std::vector<int>& growth_steps, int steps) {
    int k = tableau.cell_count();
    if (static_cast<int>(growth_steps.size()) != k)
        throw std::invalid_argument("generalized border data: size mismatch");
    // entry t sits in row row_of[t].
    std::vector<int> row_of(k + 1, 0);
    for (std::size_t r = 0; r < tableau.rows().size(); ++r)
        for (int entry : tableau.rows()[r]) {
            if (entry < 1 || entry > k || row_of[entry])
                throw std::invalid_argument("generalized border data: tableau is not standard");
            row_of[entry] = static_cast<int>(r) + 1;
        }
    std::vector<Partition> border;
    border.reserve(steps + 1);
    border.emplace_back();
    int next = 1;
    for (int s = 1; s <= steps; ++s) {
        if (next <= k && growth_steps[next - 1] == s) {
            border.push_back(add_cell(border.back(), row_of[next]));
            ++next;
        } else {
            border.push_back(border.back());
        }
    }
    if (next != k + 1) throw std::invalid_argument("generalized border data: steps out of range");
    return border;
}

}  // namespace

GeneralizedDecoding decode_generalized(const StammeringTableau& t, EndpointCase dir) {
    if (t.steps.empty() || 3 * t.size + 1 != static_cast<int>(t.steps.size()))
        throw std::invalid_argument("decode_generalized: stored size disagrees with the walk");
    if (auto report = validate_stammering(t.steps, t.front(), t.back()); !report)
        throw std::invalid_argument("decode_generalized: invalid walk: " + report.rule);
    const bool to_lambda = dir == EndpointCase::EmptyToLambda;
    if (to_lambda && !t.front().empty())
        throw std::invalid_argument("decode_generalized: walk must start at the empty partition");
    if (!to_lambda && !t.back().empty())
        throw std::invalid_argument("decode_generalized: walk must end at the empty partition");

    GrowthDiagram g = reverse_fill(t);
    int n = g.n;
    GeneralizedDecoding out;
    out.direction = dir;
    out.placement = dots_of(g);

    if (to_lambda) {
        for (int y = 0; y <= n; ++y)
            if (!g.labels[0][y].empty())
                throw std::invalid_argument("decode_generalized: west border not empty");
        std::vector<Partition> bottom;
        for (int x = 0; x <= 2 * n; ++x) bottom.push_back(g.labels[x][0]);
        auto enc = chain_encode(bottom);
        // growth may only happen under dotless columns
        {
            std::set<int> dotted(out.placement.dots.begin(), out.placement.dots.end());
            for (int col : enc.growth_steps)
                if (dotted.count(col))
                    throw std::logic_error("decode_generalized: bottom border grew under a dot");
        }
        if (out.placement.dot_count() != n)
            throw std::invalid_argument("decode_generalized: expected a full placement");
        out.tableau = std::move(enc.tableau);
        out.growth_columns = std::move(enc.growth_steps);
        if (out.tableau.shape() != t.back())
            throw std::logic_error("decode_generalized: bottom border does not reach lambda");
    } else {
        for (int x = 0; x <= 2 * n; ++x)
            if (!g.labels[x][0].empty())
                throw std::invalid_argument("decode_generalized: south border not empty");
        std::vector<Partition> west;
        for (int y = 0; y <= n; ++y) west.push_back(g.labels[0][y]);
        auto enc = chain_encode(west);
        // rows with a dot keep the border constant, dotless rows grow it
        for (int row = 1; row <= n; ++row) {
            bool grew = std::find(enc.growth_steps.begin(), enc.growth_steps.end(), row) !=
                        enc.growth_steps.end();
            bool dotted = out.placement.dots[row - 1] != 0;
            if (grew == dotted)
                throw std::logic_error("decode_generalized: west border disagrees with dots");
        }
        out.tableau = std::move(enc.tableau);
        if (out.tableau.shape() != t.front())
            throw std::logic_error("decode_generalized: west border does not reach lambda");
    }
    return out;
}

StammeringTableau encode_generalized(const GeneralizedDecoding& d) {
    if (auto report = validate_partial_rook(d.placement); !report)
        throw std::invalid_argument("encode_generalized: invalid placement: " + report.rule);
    int n = d.placement.n;
    GrowthDiagram g = empty_grid(n);
    for (int row = 1; row <= n; ++row)
        if (d.placement.dots[row - 1] != 0) g.dot[d.placement.dots[row - 1] - 1][row - 1] = 1;

    if (d.direction == EndpointCase::EmptyToLambda) {
        if (d.placement.dot_count() != n)
            throw std::invalid_argument("encode_generalized: placement must be full");
        std::set<int> dotted(d.placement.dots.begin(), d.placement.dots.end());
        for (int col : d.growth_columns)
            if (col < 1 || col > 2 * n || dotted.count(col))
                throw std::invalid_argument("encode_generalized: growth columns must be dotless");
        auto bottom = chain_decode(d.tableau, d.growth_columns, 2 * n);
        for (int x = 0; x <= 2 * n; ++x) g.labels[x][0] = bottom[x];
    } else {
        std::vector<int> growth_rows;
        for (int row = 1; row <= n; ++row)
            if (d.placement.dots[row - 1] == 0) growth_rows.push_back(row);
        auto west = chain_decode(d.tableau, growth_rows, n);
        for (int y = 0; y <= n; ++y) g.labels[0][y] = west[y];
    }
    forward_fill(g);
    return make_stammering(g.ne_boundary());
}

}  // namespace stammerlab
