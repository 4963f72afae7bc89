#include "stammerlab/tableau.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace stammerlab {

ValidityReport IncompleteStandardTableau::check(const std::vector<std::vector<int>>& rows) {
    std::set<int> seen;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.empty()) return ValidityReport::bad(static_cast<int>(r) + 1, "empty row stored");
        if (r > 0 && row.size() > rows[r - 1].size())
            return ValidityReport::bad(static_cast<int>(r) + 1, "row lengths must weakly decrease upward");
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (row[c] <= 0)
                return ValidityReport::bad(static_cast<int>(r) + 1, "entries must be positive");
            if (c > 0 && row[c] <= row[c - 1])
                return ValidityReport::bad(static_cast<int>(r) + 1, "rows must strictly increase");
            if (r > 0 && row[c] <= rows[r - 1][c])
                return ValidityReport::bad(static_cast<int>(r) + 1, "columns must strictly increase upward");
            if (!seen.insert(row[c]).second)
                return ValidityReport::bad(static_cast<int>(r) + 1, "entries must be distinct");
        }
    }
    return ValidityReport::good();
}

IncompleteStandardTableau::IncompleteStandardTableau(std::vector<std::vector<int>> rows)
    : rows_(std::move(rows)) {
    if (auto report = check(rows_); !report)
        throw std::invalid_argument("IncompleteStandardTableau: " + report.rule +
                                    " (row " + std::to_string(report.index) + ")");
}

Partition IncompleteStandardTableau::shape() const {
    std::vector<int> parts;
    parts.reserve(rows_.size());
    for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
    return Partition(std::move(parts));
}

int IncompleteStandardTableau::cell_count() const {
    int total = 0;
    for (const auto& row : rows_) total += static_cast<int>(row.size());
    return total;
}

bool IncompleteStandardTableau::contains(int k) const {
    for (const auto& row : rows_)
        if (std::binary_search(row.begin(), row.end(), k)) return true;
    return false;
}

bool IncompleteStandardTableau::is_standard() const {
    std::set<int> entries;
    for (const auto& row : rows_) entries.insert(row.begin(), row.end());
    int m = cell_count();
    return static_cast<int>(entries.size()) == m && (m == 0 || (*entries.begin() == 1 && *entries.rbegin() == m));
}

IncompleteStandardTableau row_insert(const IncompleteStandardTableau& t, int k) {
    if (k <= 0) throw std::invalid_argument("row_insert: entry must be positive");
    if (t.contains(k)) throw std::invalid_argument("row_insert: entry already present");
    auto rows = t.rows();
    int cur = k;
    for (std::size_t r = 0;; ++r) {
        if (r == rows.size()) {
            rows.push_back({cur});
            break;
        }
        auto it = std::upper_bound(rows[r].begin(), rows[r].end(), cur);
        if (it == rows[r].end()) {
            rows[r].push_back(cur);
            break;
        }
        std::swap(cur, *it);  // bump into the row above
    }
    return IncompleteStandardTableau(std::move(rows));
}

IncompleteStandardTableau corner_remove(const IncompleteStandardTableau& t, int k) {
    auto rows = t.rows();
    for (std::size_t r = 0; r < rows.size(); ++r) {
        auto it = std::find(rows[r].begin(), rows[r].end(), k);
        if (it == rows[r].end()) continue;
        bool last_in_row = (it + 1 == rows[r].end());
        bool row_above_shorter = (r + 1 == rows.size() || rows[r + 1].size() < rows[r].size());
        if (!last_in_row || !row_above_shorter)
            throw std::invalid_argument("corner_remove: entry is not at a removable corner");
        rows[r].pop_back();
        if (rows[r].empty()) rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(r));
        return IncompleteStandardTableau(std::move(rows));
    }
    throw std::invalid_argument("corner_remove: entry not present");
}

}  // namespace stammerlab
