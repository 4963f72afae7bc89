#include "stammerlab/staircase.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace stammerlab {

int staircase_row_length(int n, int row) {
    if (row < 1 || row > n) throw std::invalid_argument("staircase_row_length: row out of range");
    return 2 * (n - row + 1);
}

int staircase_column_height(int n, int col) {
    if (col < 1 || col > 2 * n)
        throw std::invalid_argument("staircase_column_height: column out of range");
    return n - (col - 1) / 2;
}

int PartialRookPlacement::dot_count() const {
    int total = 0;
    for (int c : dots) total += (c != 0);
    return total;
}

namespace {

ValidityReport validate_dots(int n, const std::vector<int>& dots, bool allow_empty) {
    if (static_cast<int>(dots.size()) != n)
        return ValidityReport::bad(n, "one entry per row required");
    std::set<int> used;
    for (int r = 1; r <= n; ++r) {
        int c = dots[r - 1];
        if (c == 0) {
            if (!allow_empty) return ValidityReport::bad(r, "row has no dot");
            continue;
        }
        if (c < 1 || c > staircase_row_length(n, r))
            return ValidityReport::bad(r, "dot outside its row");
        if (!used.insert(c).second) return ValidityReport::bad(r, "column holds two dots");
    }
    return ValidityReport::good();
}

}  // namespace

ValidityReport validate_rook(const RookPlacement& r) {
    if (r.n < 0) return ValidityReport::bad(0, "size must be nonnegative");
    return validate_dots(r.n, r.dots, false);
}

ValidityReport validate_partial_rook(const PartialRookPlacement& r) {
    if (r.n < 0) return ValidityReport::bad(0, "size must be nonnegative");
    return validate_dots(r.n, r.dots, true);
}

std::vector<RookPlacement> extensions(const RookPlacement& r) {
    if (auto report = validate_rook(r); !report)
        throw std::invalid_argument("extensions: invalid placement: " + report.rule);
    int n = r.n + 1;
    std::set<int> used(r.dots.begin(), r.dots.end());
    std::vector<RookPlacement> out;
    for (int c = 1; c <= 2 * n; ++c) {
        if (used.count(c)) continue;
        RookPlacement ext;
        ext.n = n;
        ext.dots.reserve(n);
        ext.dots.push_back(c);
        ext.dots.insert(ext.dots.end(), r.dots.begin(), r.dots.end());
        out.push_back(std::move(ext));
    }
    return out;
}

namespace {

void rook_walk(const RookPlacement& r, int n, const std::function<void(const RookPlacement&)>& fn) {
    if (r.n == n) {
        fn(r);
        return;
    }
    for (const RookPlacement& ext : extensions(r)) rook_walk(ext, n, fn);
}

}  // namespace

void for_each_rook(int n, const std::function<void(const RookPlacement&)>& fn) {
    if (n < 0) throw std::invalid_argument("for_each_rook: n must be nonnegative");
    rook_walk(RookPlacement{}, n, fn);
}

std::vector<RookPlacement> enumerate_rooks(int n) {
    std::vector<RookPlacement> out;
    for_each_rook(n, [&](const RookPlacement& r) { out.push_back(r); });
    return out;
}

RookPlacement top_rows(const RookPlacement& r, int i) {
    if (auto report = validate_rook(r); !report)
        throw std::invalid_argument("top_rows: invalid placement: " + report.rule);
    if (i < 0 || i > r.n) throw std::invalid_argument("top_rows: i out of range");
    RookPlacement out;
    out.n = i;
    out.dots.assign(r.dots.end() - i, r.dots.end());
    return out;
}

}  // namespace stammerlab
