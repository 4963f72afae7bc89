#include "stammerlab/profile.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace stammerlab {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
    std::vector<char> seen(values_.size() + 1, 0);
    for (int v : values_) {
        if (v < 1 || v > static_cast<int>(values_.size()) || seen[v])
            throw std::invalid_argument("Permutation: values must rearrange 1..n");
        seen[v] = 1;
    }
}

int Permutation::position_of(int value) const {
    for (std::size_t i = 0; i < values_.size(); ++i)
        if (values_[i] == value) return static_cast<int>(i) + 1;
    throw std::invalid_argument("Permutation::position_of: value out of range");
}

std::vector<ValueClass> classify(const Permutation& s) {
    int n = s.size();
    std::vector<int> pos(n + 1, 0);
    for (int i = 1; i <= n; ++i) pos[s.values()[i - 1]] = i;
    std::vector<ValueClass> out(n);
    for (int v = 1; v <= n; ++v) {
        int p = pos[v];
        int left = p > 1 ? s.values()[p - 2] : 0;              // sigma_0 = 0
        int right = p < n ? s.values()[p] : n + 1;             // sigma_{n+1} = n+1
        if (left < v && v > right)
            out[v - 1] = ValueClass::Peak;
        else if (left > v && v < right)
            out[v - 1] = ValueClass::Valley;
        else if (left < v && v < right)
            out[v - 1] = ValueClass::DoubleAscent;
        else
            out[v - 1] = ValueClass::DoubleDescent;
    }
    return out;
}

DyckPath profile(const Permutation& s) {
    std::vector<Step> steps;
    steps.reserve(2 * s.size());
    for (ValueClass c : classify(s)) {
        switch (c) {
            case ValueClass::Valley:
                steps.push_back(Step::Up);
                steps.push_back(Step::Up);
                break;
            case ValueClass::Peak:
                steps.push_back(Step::Down);
                steps.push_back(Step::Down);
                break;
            case ValueClass::DoubleAscent:
                steps.push_back(Step::Up);
                steps.push_back(Step::Down);
                break;
            case ValueClass::DoubleDescent:
                steps.push_back(Step::Down);
                steps.push_back(Step::Up);
                break;
        }
    }
    return DyckPath(std::move(steps));
}

Permutation delete_max(const Permutation& s) {
    if (s.size() == 0) throw std::invalid_argument("delete_max: empty permutation");
    std::vector<int> values;
    values.reserve(s.size() - 1);
    for (int v : s.values())
        if (v != s.size()) values.push_back(v);
    return Permutation(std::move(values));
}

ChainOfDyckShapes chain_of(const Permutation& s) {
    if (s.size() == 0) throw std::invalid_argument("chain_of: empty permutation");
    std::vector<DyckPath> paths(s.size());
    Permutation cur = s;
    for (int i = s.size(); i >= 1; --i) {
        paths[i - 1] = profile(cur);
        if (i > 1) cur = delete_max(cur);
    }
    return ChainOfDyckShapes(std::move(paths));
}

std::vector<Permutation> permutation_insertion_trace(const ChainOfDyckShapes& c) {
    int n = c.size();
    auto ribbons = c.ribbons();
    std::vector<Permutation> trace;
    trace.reserve(n);
    std::vector<int> values = {1};
    trace.push_back(Permutation(values));
    for (int j = 1; j < n; ++j) {
        int i = leftmost_column(ribbons[j]);
        if (i == 2 * j + 1) {
            values.push_back(j + 1);
        } else if (i % 2 == 0) {
            auto at = std::find(values.begin(), values.end(), i / 2);
            values.insert(at, j + 1);
        } else {
            auto at = std::find(values.begin(), values.end(), (i + 1) / 2);
            values.insert(at + 1, j + 1);
        }
        trace.push_back(Permutation(values));
    }
    return trace;
}

Permutation permutation_of(const ChainOfDyckShapes& c) {
    return permutation_insertion_trace(c).back();
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn) {
    if (n < 0) throw std::invalid_argument("for_each_permutation: n must be nonnegative");
    std::vector<int> values(n);
    std::iota(values.begin(), values.end(), 1);
    do {
        fn(Permutation(values));
    } while (std::next_permutation(values.begin(), values.end()));
}

}  // namespace stammerlab
