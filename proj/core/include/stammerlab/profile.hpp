#pragma once

#include <functional>
#include <vector>

#include "stammerlab/dyck.hpp"

namespace stammerlab {

class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> values);

    const std::vector<int>& values() const { return values_; }
    int size() const { return static_cast<int>(values_.size()); }
    int position_of(int value) const;  // 1-based

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> values_;
};

// Classification of the VALUE i (not the index), with the boundary
// convention sigma_0 = 0, sigma_{n+1} = n+1.
enum class ValueClass { Peak, Valley, DoubleAscent, DoubleDescent };

std::vector<ValueClass> classify(const Permutation& s);  // [i-1] is the class of value i

// Profile Delta(sigma): the i-th step pair encodes the class of value i
// (valley UU, peak DD, double ascent UD, double descent DU).
DyckPath profile(const Permutation& s);

Permutation delete_max(const Permutation& s);

// sigma  ->  (Delta(sigma^(n-1)), ..., Delta(sigma'), Delta(sigma)),
// a bijection onto n-chains of Dyck shapes.
ChainOfDyckShapes chain_of(const Permutation& s);

// Inverse: insert 2..n successively; the leftmost column i of ribbon
// D_{j+1}/D_j places j+1 at the end (i = 2j+1), left of i/2 (i even) or
// right of (i+1)/2 (i odd). The trace keeps all intermediate permutations.
std::vector<Permutation> permutation_insertion_trace(const ChainOfDyckShapes& c);
Permutation permutation_of(const ChainOfDyckShapes& c);

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn);

}  // namespace stammerlab
