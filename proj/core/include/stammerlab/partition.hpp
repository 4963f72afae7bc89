#pragma once

#include <compare>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace stammerlab {

// Integer partition: weakly decreasing positive parts. Part 1 is the bottom
// row (French convention); no zero parts are stored, so two partitions are
// equal iff their part vectors are.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int part(int row) const;  // 1-based; 0 past the last row
    int rows() const { return static_cast<int>(parts_.size()); }
    int cells() const;
    bool empty() const { return parts_.empty(); }
    bool contains(const Partition& other) const;
    std::string str() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
};

bool is_addable_row(const Partition& p, int row);
bool is_removable_row(const Partition& p, int row);
Partition add_cell(const Partition& p, int row);
Partition remove_cell(const Partition& p, int row);

// Covers in Young's lattice, listed by changed row ascending. This fixed
// order makes every enumeration downstream deterministic.
std::vector<Partition> covers_above(const Partition& p);
std::vector<Partition> covers_below(const Partition& p);
bool is_cover(const Partition& lo, const Partition& hi);
int cover_row(const Partition& lo, const Partition& hi);  // 1-based; -1 if not a cover

Partition union_max(const Partition& a, const Partition& b);
Partition intersect_min(const Partition& a, const Partition& b);

// f_lambda, via memoized summation over covers_below.
mpz_class count_standard_tableaux(const Partition& p);

std::vector<Partition> partitions_of(int n);
std::vector<Partition> partitions_up_to(int n);

}  // namespace stammerlab
