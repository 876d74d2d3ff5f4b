#pragma once

#include <stdexcept>
#include <string>

namespace lcmlat {

enum class Errc {
    missing_required_set,
    not_intersection_closed,
    atom_capacity,
    not_minimal,
    invalid_labeling,
    atom_count_mismatch,
    not_comparable,
    out_of_supported_range,
    shape_mismatch,
    label_inconsistent,
    not_graded_rank_n,
    homotopy_mismatch,
    parse_error,
    bad_argument,
    internal,
};

const char* errc_name(Errc c);

// Library-wide exception. `code()` is machine readable; `what()` carries the
// human readable detail (witnesses, positions, ...).
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace lcmlat
