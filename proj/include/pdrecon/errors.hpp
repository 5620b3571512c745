#pragma once

#include <stdexcept>
#include <string>

namespace pdrecon {

enum class errc {
    ok = 0,
    invalid_argument,
    dimension_mismatch,
    index_out_of_range,
    zero_vector,
    degenerate_direction,
    too_few_points,
    need_two_vertices,
    min_angle_too_small,
    singular_intersection,
    match_count_mismatch,
    projection_degenerate,
    degenerate_configuration,
    io_error,
};

const char* errc_name(errc code) noexcept;

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw error(code, what); }

} // namespace pdrecon
