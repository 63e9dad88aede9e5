#pragma once

#include "homodec/relation.hpp"

#include <iosfwd>
#include <string>

namespace homodec {

// Interchange format: {"n": <int>, "classes": [...]} where classes[s] is
// the partition of V∖{s} as arrays of element ids. Parsing validates both
// the JSON shape and the partition semantics; serialization is canonical
// (members ascending, classes in lexicographic order).
Relation relation_from_json(const std::string &text);
Relation relation_from_json(std::istream &in);
std::string relation_to_json(const Relation &r);

} // namespace homodec
