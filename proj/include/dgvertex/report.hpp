#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace dgv {

struct AxiomFailure {
    std::string check;   // which axiom
    std::string cell;    // which operands / mode indices
    std::string defect;  // nonzero defect in canonical element syntax
};

/// Outcome of a desk-scale axiom verification. A finite mode window cannot
/// prove a polynomial identity in the indices, so the window is part of the
/// result.
struct AxiomReport {
    bool pass = true;
    long long window_lo = 0;
    long long window_hi = 0;
    std::string scope;
    std::size_t cells_checked = 0;
    std::vector<AxiomFailure> failures;
    std::vector<std::string> notes;

    void record(const std::string& check, const std::string& cell, bool ok,
                std::string defect = {}) {
        ++cells_checked;
        if (!ok) {
            pass = false;
            failures.push_back(AxiomFailure{check, cell, std::move(defect)});
        }
    }
};

}  // namespace dgv
