#include "stammerlab/poset.hpp"

#include <algorithm>

namespace stammerlab {

namespace {

int digit(const DyckPath& p, int i) {  // 1-based, zero-padded
    if (i > p.length()) return 0;
    return p.steps()[i - 1] == Step::Up ? 1 : 0;
}

}  // namespace

bool leq(const DyckPath& a, const DyckPath& b) {
    int len = std::max(a.length(), b.length());
    for (int i = 1; i <= len; ++i)
        if (digit(a, i) > digit(b, i)) return false;
    return true;
}

DyckPath join(const DyckPath& a, const DyckPath& b) {
    int len = std::max(a.length(), b.length());
    int ones = 0;
    std::vector<int> digits(len);
    for (int i = 1; i <= len; ++i) ones += digits[i - 1] = std::max(digit(a, i), digit(b, i));
    std::vector<Step> steps;
    steps.reserve(2 * ones);
    for (int i = 0; i < 2 * ones; ++i)
        steps.push_back(i < len && digits[i] ? Step::Up : Step::Down);
    return DyckPath(std::move(steps));
}

DyckPath meet(const DyckPath& a, const DyckPath& b) {
    int len = std::max(a.length(), b.length());
    // Smallest prefix of the pointwise minimum holding more 0s than 1s; it
    // always exists once the padding zeros kick in.
    std::vector<Step> steps;
    int balance = 0;
    int ones = 0;
    for (int i = 1; balance >= 0; ++i) {
        int d = i <= len ? std::min(digit(a, i), digit(b, i)) : 0;
        balance += d ? 1 : -1;
        ones += d;
        steps.push_back(d ? Step::Up : Step::Down);
    }
    steps.resize(2 * ones, Step::Down);  // drop the final excess down step
    return DyckPath(std::move(steps));
}

namespace {

void gen_paths(std::vector<Step>& cur, int ups_left, int height, int rank,
               std::vector<DyckPath>& out) {
    if (ups_left == 0 && height == 0 && static_cast<int>(cur.size()) == 2 * rank) {
        out.push_back(DyckPath(cur));
        return;
    }
    if (ups_left > 0) {
        cur.push_back(Step::Up);
        gen_paths(cur, ups_left - 1, height + 1, rank, out);
        cur.pop_back();
    }
    if (height > 0) {
        cur.push_back(Step::Down);
        gen_paths(cur, ups_left, height - 1, rank, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<DyckPath> all_dyck_paths(int rank) {
    std::vector<DyckPath> out;
    std::vector<Step> cur;
    gen_paths(cur, rank, 0, rank, out);
    return out;
}

}  // namespace stammerlab
