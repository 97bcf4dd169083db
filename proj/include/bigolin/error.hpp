#pragma once

#include <stdexcept>
#include <string>

namespace bigolin {

// Structured error surfaced at library boundaries. `detail` carries the
// offending label / witness basis vector / location, machine-readable.
class Error : public std::runtime_error {
public:
    enum class Kind {
        label_mismatch, // incompatible label lists in block assembly
        not_a_complex,  // composite of consecutive maps is nonzero
        axiom_violation,
        unsupported,   // e.g. window requested on an almost-complex structure
        precondition,  // operation preconditions (index ranges etc.)
        parse,
    };

    Error(Kind kind, std::string message, std::string detail = {})
        : std::runtime_error(std::move(message)), kind_(kind), detail_(std::move(detail)) {}

    Kind kind() const { return kind_; }
    const std::string& detail() const { return detail_; }

private:
    Kind kind_;
    std::string detail_;
};

} // namespace bigolin
