#pragma once

#include <stdexcept>
#include <string>

namespace ligamark {

// One code per failure mode named in the library contracts. CLI maps any
// Error to exit code 2 (data error); usage problems never reach here.
enum class Errc {
    file_not_found,
    parse_error,
    degenerate_mesh,
    empty_mesh,
    non_positive_radius,
    degenerate_geometry,
    empty_intersection,
    scheme_mismatch,
    missing_label,
    too_few_pairs,
    degenerate_configuration,
    missing_rule,
    empty_set,
    key_mismatch,
    invalid_spec,
    invalid_config,
    numerical_failure,
    io_error,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

}  // namespace ligamark
