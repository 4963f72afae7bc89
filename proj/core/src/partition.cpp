#include "stammerlab/partition.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace stammerlab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

int Partition::part(int row) const {
    if (row < 1) throw std::invalid_argument("Partition::part: row is 1-based");
    return row <= rows() ? parts_[row - 1] : 0;
}

int Partition::cells() const {
    int total = 0;
    for (int p : parts_) total += p;
    return total;
}

bool Partition::contains(const Partition& other) const {
    if (other.rows() > rows()) return false;
    for (int r = 0; r < other.rows(); ++r)
        if (other.parts_[r] > parts_[r]) return false;
    return true;
}

std::string Partition::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    out += ')';
    return out;
}

bool is_addable_row(const Partition& p, int row) {
    if (row < 1 || row > p.rows() + 1) return false;
    return p.part(row) < (row == 1 ? p.part(1) + 1 : p.part(row - 1));
}

bool is_removable_row(const Partition& p, int row) {
    if (row < 1 || row > p.rows()) return false;
    return p.part(row) > p.part(row + 1);
}

Partition add_cell(const Partition& p, int row) {
    if (!is_addable_row(p, row))
        throw std::invalid_argument("add_cell: row " + std::to_string(row) +
                                    " is not addable in " + p.str());
    std::vector<int> parts = p.parts();
    if (row == p.rows() + 1)
        parts.push_back(1);
    else
        ++parts[row - 1];
    return Partition(std::move(parts));
}

Partition remove_cell(const Partition& p, int row) {
    if (!is_removable_row(p, row))
        throw std::invalid_argument("remove_cell: row " + std::to_string(row) +
                                    " is not removable in " + p.str());
    std::vector<int> parts = p.parts();
    if (--parts[row - 1] == 0) parts.pop_back();
    return Partition(std::move(parts));
}

std::vector<Partition> covers_above(const Partition& p) {
    std::vector<Partition> out;
    for (int row = 1; row <= p.rows() + 1; ++row)
        if (is_addable_row(p, row)) out.push_back(add_cell(p, row));
    return out;
}

std::vector<Partition> covers_below(const Partition& p) {
    std::vector<Partition> out;
    for (int row = 1; row <= p.rows(); ++row)
        if (is_removable_row(p, row)) out.push_back(remove_cell(p, row));
    return out;
}

int cover_row(const Partition& lo, const Partition& hi) {
    if (hi.rows() < lo.rows() || hi.rows() > lo.rows() + 1) return -1;
    int changed = -1;
    for (int row = 1; row <= hi.rows(); ++row) {
        int d = hi.part(row) - lo.part(row);
        if (d == 0) continue;
        if (d != 1 || changed != -1) return -1;
        changed = row;
    }
    return changed;
}

bool is_cover(const Partition& lo, const Partition& hi) {
    return cover_row(lo, hi) != -1;
}

Partition union_max(const Partition& a, const Partition& b) {
    std::vector<int> parts(std::max(a.rows(), b.rows()));
    for (std::size_t r = 0; r < parts.size(); ++r)
        parts[r] = std::max(a.part(static_cast<int>(r) + 1), b.part(static_cast<int>(r) + 1));
    return Partition(std::move(parts));
}

Partition intersect_min(const Partition& a, const Partition& b) {
    std::vector<int> parts;
    int rows = std::min(a.rows(), b.rows());
    for (int r = 1; r <= rows; ++r) {
        int m = std::min(a.part(r), b.part(r));
        if (m == 0) break;
        parts.push_back(m);
    }
    return Partition(std::move(parts));
}

namespace {

const mpz_class& syt_count(const Partition& p, std::map<Partition, mpz_class>& memo) {
    auto it = memo.find(p);
    if (it != memo.end()) return it->second;
    mpz_class total = 0;
    if (p.empty()) {
        total = 1;
    } else {
        for (const Partition& q : covers_below(p)) total += syt_count(q, memo);
    }
    return memo.emplace(p, std::move(total)).first->second;
}

}  // namespace

mpz_class count_standard_tableaux(const Partition& p) {
    std::map<Partition, mpz_class> memo;
    return syt_count(p, memo);
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(cur));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_partitions(n, n == 0 ? 1 : n, cur, out);
    return out;
}

std::vector<Partition> partitions_up_to(int n) {
    std::vector<Partition> out;
    for (int m = 0; m <= n; ++m) {
        auto part = partitions_of(m);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

}  // namespace stammerlab
