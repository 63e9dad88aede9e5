#include "homodec/errors.hpp"

namespace homodec {

const char *errc_name(errc code) {
    switch (code) {
    case errc::element_repeated: return "ElementRepeated";
    case errc::element_missing: return "ElementMissing";
    case errc::self_in_class: return "SelfInClass";
    case errc::not_reflectless: return "NotReflectless";
    case errc::empty_set: return "EmptySet";
    case errc::part_not_homogeneous: return "PartNotHomogeneous";
    case errc::malformed_graph: return "MalformedGraph";
    case errc::incomplete_coloring: return "IncompleteColoring";
    case errc::not_bipartite: return "NotBipartite";
    case errc::bad_k: return "BadK";
    case errc::parse_error: return "ParseError";
    case errc::duplicate_edge: return "DuplicateEdge";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::pivot_inside: return "PivotInside";
    case errc::too_large: return "TooLarge";
    case errc::overlapping_sets: return "OverlappingSets";
    case errc::not_weakly_partitive: return "NotWeaklyPartitive";
    }
    return "UnknownError";
}

} // namespace homodec
