#pragma once

#include <stdexcept>
#include <string>

namespace qframe {

enum class ErrorKind {
    invalid_dimension,
    unsupported_dimension,
    dimension_mismatch,
    division_by_zero,
    singular_basis,
    not_a_frame,
    not_a_basis,
    invalid_weight,
    invalid_point,
    invalid_input,
    no_fiducial_found,
    outcome_mismatch,
    retry_constellation,
    parse_error,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::invalid_argument {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::invalid_argument(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace qframe
