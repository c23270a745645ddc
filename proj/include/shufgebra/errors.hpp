#ifndef SHUFGEBRA_ERRORS_HPP
#define SHUFGEBRA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace shufgebra {

// Two operands live over different coefficient fields.
class field_mismatch : public std::invalid_argument {
public:
    explicit field_mismatch(const std::string& what)
        : std::invalid_argument("field mismatch: " + what) {}
};

// Exact division left a nonzero remainder. `witness` holds the first
// leading term that could not be reduced, in canonical text form.
class not_divisible : public std::domain_error {
public:
    not_divisible(const std::string& what, std::string witness)
        : std::domain_error("not divisible: " + what), witness_(std::move(witness)) {}

    const std::string& witness() const noexcept { return witness_; }

private:
    std::string witness_;
};

class parse_error : public std::invalid_argument {
public:
    explicit parse_error(const std::string& what)
        : std::invalid_argument("parse error: " + what) {}
};

// Inputs that break a structural precondition (rank, grading, index range).
class invalid_input : public std::invalid_argument {
public:
    explicit invalid_input(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace shufgebra

#endif // SHUFGEBRA_ERRORS_HPP
