#pragma once

#include <string>

namespace stammerlab {

// Outcome of a structural validation. `index` points at the offending
// position (module-specific: step index, row number, ...), -1 when ok.
struct ValidityReport {
    bool ok = true;
    int index = -1;
    std::string rule;

    explicit operator bool() const { return ok; }
    static ValidityReport good() { return {}; }
    static ValidityReport bad(int index, std::string rule) {
        return {false, index, std::move(rule)};
    }
};

}  // namespace stammerlab
