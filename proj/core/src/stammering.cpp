#include "stammerlab/stammering.hpp"

#include <stdexcept>

namespace stammerlab {

namespace {

// Step legality for position i -> i+1.
bool step_ok(int i, const Partition& from, const Partition& to) {
    if (i % 3 == 2) return is_cover(to, from);  // strictly down
    return from == to || is_cover(from, to);    // up or stay
}

}  // namespace

ValidityReport validate_stammering(const std::vector<Partition>& steps,
                                   const Partition& mu, const Partition& nu) {
    if (steps.empty() || (steps.size() - 1) % 3 != 0)
        return ValidityReport::bad(static_cast<int>(steps.size()), "length must be 3n+1");
    if (steps.front() != mu) return ValidityReport::bad(0, "walk must start at mu");
    for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
        if (!step_ok(static_cast<int>(i), steps[i], steps[i + 1]))
            return ValidityReport::bad(static_cast<int>(i),
                                       i % 3 == 2 ? "step must strictly descend"
                                                  : "step must go up or stay");
    }
    if (steps.back() != nu)
        return ValidityReport::bad(static_cast<int>(steps.size()) - 1, "walk must end at nu");
    return ValidityReport::good();
}

StammeringTableau make_stammering(std::vector<Partition> steps) {
    if (steps.empty() || (steps.size() - 1) % 3 != 0)
        throw std::invalid_argument("make_stammering: length must be 3n+1");
    auto report = validate_stammering(steps, steps.front(), steps.back());
    if (!report)
        throw std::invalid_argument("make_stammering: " + report.rule + " at index " +
                                    std::to_string(report.index));
    StammeringTableau t;
    t.size = static_cast<int>(steps.size() - 1) / 3;
    t.steps = std::move(steps);
    return t;
}

namespace {

struct Enumerator {
    int total_steps;  // 3n
    const Partition& nu;
    const std::function<void(const StammeringTableau&)>* fn;
    mpz_class count = 0;
    std::vector<Partition> cur;

    // Number of positions j in [i, total) with j % 3 == 2.
    static int downs_after(int i, int total) { return total / 3 - i / 3; }

    bool reachable(int next_pos, const Partition& q) const {
        int steps_left = total_steps - next_pos;
        int d = downs_after(next_pos, total_steps);
        int u = steps_left - d;
        int target = nu.cells();
        int lo = q.cells() - d;
        int hi = q.cells() - d + u;
        return lo <= target && target <= hi;
    }

    void emit() {
        StammeringTableau t;
        t.size = total_steps / 3;
        t.steps = cur;
        if (fn) (*fn)(t);
        ++count;
    }

    void walk(int i) {
        if (i == total_steps) {
            if (cur.back() == nu) emit();
            return;
        }
        const Partition here = cur.back();
        if (i % 3 == 2) {
            for (const Partition& q : covers_below(here)) {
                if (!reachable(i + 1, q)) continue;
                cur.push_back(q);
                walk(i + 1);
                cur.pop_back();
            }
        } else {
            if (reachable(i + 1, here)) {  // stay first
                cur.push_back(here);
                walk(i + 1);
                cur.pop_back();
            }
            for (const Partition& q : covers_above(here)) {
                if (!reachable(i + 1, q)) continue;
                cur.push_back(q);
                walk(i + 1);
                cur.pop_back();
            }
        }
    }
};

}  // namespace

void for_each_stammering(int n, const Partition& mu, const Partition& nu,
                         const std::function<void(const StammeringTableau&)>& fn) {
    if (n < 0) throw std::invalid_argument("for_each_stammering: n must be nonnegative");
    Enumerator e{3 * n, nu, &fn, {}, {}};
    e.cur.push_back(mu);
    if (e.reachable(0, mu)) e.walk(0);
}

std::vector<StammeringTableau> enumerate_stammering(int n, const Partition& mu,
                                                    const Partition& nu) {
    std::vector<StammeringTableau> out;
    for_each_stammering(n, mu, nu, [&](const StammeringTableau& t) { out.push_back(t); });
    return out;
}

mpz_class count_stammering(int n, const Partition& mu, const Partition& nu) {
    if (n < 0) throw std::invalid_argument("count_stammering: n must be nonnegative");
    Enumerator e{3 * n, nu, nullptr, {}, {}};
    e.cur.push_back(mu);
    if (e.reachable(0, mu)) e.walk(0);
    return e.count;
}

}  // namespace stammerlab
