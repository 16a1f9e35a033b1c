#pragma once

#include <stdexcept>
#include <string>

namespace circ4 {

/// Error categories surfaced through the C API as status codes and by the
/// CLI as exit codes.
enum class errc {
    ok = 0,
    non_finite,
    ordering_violation,
    invalid_params,
    not_positive_definite,
    eigenvector_input,
    zero_vector,
    scale_overflow,
    out_of_domain,
    singular_metric,
    unknown_family,
    boundary_fixed_point,
};

const char* errc_name(errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw Error(code, what); }

} // namespace circ4
