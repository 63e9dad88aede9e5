#pragma once

#include <stdexcept>
#include <string>

namespace homodec {

enum class errc {
    element_repeated,
    element_missing,
    self_in_class,
    not_reflectless,
    empty_set,
    part_not_homogeneous,
    malformed_graph,
    incomplete_coloring,
    not_bipartite,
    bad_k,
    parse_error,
    duplicate_edge,
    index_out_of_range,
    pivot_inside,
    too_large,
    overlapping_sets,
    not_weakly_partitive,
};

const char *errc_name(errc code);

// All recoverable failures carry an errc; `detail` holds the offending
// index (part number, line number, ...) when one exists.
class Error : public std::runtime_error {
public:
    Error(errc code, const std::string &message, long detail = -1)
        : std::runtime_error(message), code_(code), detail_(detail) {}

    errc code() const { return code_; }
    long detail() const { return detail_; }

private:
    errc code_;
    long detail_;
};

[[noreturn]] inline void fail(errc code, const std::string &message, long detail = -1) {
    throw Error(code, message, detail);
}

} // namespace homodec
