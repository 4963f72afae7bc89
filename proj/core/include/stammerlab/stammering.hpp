#pragma once

#include <functional>
#include <vector>

#include <gmpxx.h>

#include "stammerlab/partition.hpp"
#include "stammerlab/validity.hpp"

namespace stammerlab {

// Walk of 3n+1 vertices in Young's lattice whose step pattern repeats
// (up-or-stay, up-or-stay, strictly down). Plain walks start and end at the
// empty partition; generalized walks have arbitrary endpoints.
struct StammeringTableau {
    std::vector<Partition> steps;
    int size = 0;  // n; steps.size() == 3n+1

    const Partition& front() const { return steps.front(); }
    const Partition& back() const { return steps.back(); }
    bool plain() const { return steps.front().empty() && steps.back().empty(); }

    friend bool operator==(const StammeringTableau&, const StammeringTableau&) = default;
};

// Checks the step pattern and the endpoints. On failure, index is the left
// vertex of the offending step (or the offending endpoint).
ValidityReport validate_stammering(const std::vector<Partition>& steps,
                                   const Partition& mu, const Partition& nu);

// Builds a StammeringTableau from a step-pattern-valid sequence (endpoints free).
StammeringTableau make_stammering(std::vector<Partition> steps);

// Depth-first enumeration of all generalized stammering tableaux of size n
// from mu to nu, each exactly once, in lexicographic order of the per-step
// choices (stay before each cover; covers by changed row ascending).
// Branches that cannot reach |nu| with the remaining steps are pruned.
void for_each_stammering(int n, const Partition& mu, const Partition& nu,
                         const std::function<void(const StammeringTableau&)>& fn);
std::vector<StammeringTableau> enumerate_stammering(int n, const Partition& mu,
                                                    const Partition& nu);
mpz_class count_stammering(int n, const Partition& mu, const Partition& nu);

}  // namespace stammerlab
