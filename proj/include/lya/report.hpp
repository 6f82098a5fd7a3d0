#pragma once

#include "lya/scalar.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <deque>
#include <vector>

namespace lya {

// One named identity checked over a finite set of basis tuples.
struct Check {
    std::string name;
    bool passed = true;
    std::size_t violations = 0;
    std::vector<std::size_t> witness;  // first failing tuple, 0-based
    Vector residual;                   // LHS - RHS at the witness
    std::string note;
    bool advisory = false;  // reported, but ignored by Report::passed()

    // Records a failure; only the first witness is kept.
    void fail(std::vector<std::size_t> tuple, Vector residual);
    // Records a failure if `residual` is nonzero.
    void expect_zero(std::vector<std::size_t> tuple, const Vector& residual);
};

struct Report {
    std::string subject;
    std::deque<Check> checks;  // deque: references from add() stay valid
    std::vector<std::string> notes;

    bool passed() const;
    Check& add(std::string name);
    const Check* find(std::string_view name) const;
    bool passed(std::string_view name) const;
    // Appends the checks of `other`, prefixing their names.
    void merge(const Report& other, std::string_view prefix = {});
};

}  // namespace lya
