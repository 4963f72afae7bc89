#pragma once

#include <vector>

#include "stammerlab/partition.hpp"
#include "stammerlab/validity.hpp"

namespace stammerlab {

// Filling of a Young diagram with distinct positive integers, strictly
// increasing along rows and up columns. rows()[0] is the bottom row.
// A standard tableau additionally uses exactly the entries 1..m.
class IncompleteStandardTableau {
public:
    IncompleteStandardTableau() = default;
    explicit IncompleteStandardTableau(std::vector<std::vector<int>> rows);

    static ValidityReport check(const std::vector<std::vector<int>>& rows);

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    Partition shape() const;
    int cell_count() const;
    bool contains(int k) const;
    bool is_standard() const;
    bool empty() const { return rows_.empty(); }

    friend bool operator==(const IncompleteStandardTableau&,
                           const IncompleteStandardTableau&) = default;
    friend auto operator<=>(const IncompleteStandardTableau&,
                            const IncompleteStandardTableau&) = default;

private:
    std::vector<std::vector<int>> rows_;
};

// Schensted row insertion T <- k; k must not occur in t.
IncompleteStandardTableau row_insert(const IncompleteStandardTableau& t, int k);

// T -> k: deletes k, which must sit at a removable corner. No bumping.
IncompleteStandardTableau corner_remove(const IncompleteStandardTableau& t, int k);

}  // namespace stammerlab
