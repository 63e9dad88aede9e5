#pragma once

#include "homodec/relation.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace homodec {

enum class Axiom { A1, A2, A3, A4 };

const char *axiom_name(Axiom which);

// Outcome of a checker run. Element-level checkers fill `witness` with the
// offending tuple in statement order; set-level checkers (submodularity,
// closure) fill `witness_sets` with the offending pair instead. Scans are
// ordered, so the reported witness is deterministic.
struct AxiomReport {
    std::string axiom;
    bool holds = true;
    std::vector<Element> witness;
    std::vector<ElementSet> witness_sets;
};

// Raw positive facts H(s|xy) for validating untrusted input: any pair not
// listed (and not reflexive) is read as non-equivalent.
struct TripleList {
    int n = 0;
    std::vector<std::array<Element, 3>> triples; // (s, x, y)
};

// Per-element equivalence (symmetry, reflexivity, transitivity). Holds by
// construction for table-built Relations; the TripleList overload does the
// real checking.
AxiomReport check_base(const Relation &r);
AxiomReport check_base(const TripleList &raw);

AxiomReport check_axiom(const Relation &r, Axiom which);

enum class SubmodularMode { exhaustive, sampled };

// splitter_count(X) + splitter_count(Y) ≥ splitter_count(X∪Y) +
// splitter_count(X∩Y) over overlapping pairs X, Y. Exhaustive mode scans
// every pair of subsets and needs n ≤ 12; sampled mode draws `samples`
// random pairs from a fixed-seed generator and checks those that overlap.
AxiomReport check_submodularity(const Relation &r, SubmodularMode mode,
                                std::uint64_t seed = 1, int samples = 10000);

enum class ClosureLevel { weakly_partitive, partitive };

// Closure of the homogeneous-set family under union, intersection and the
// two differences of overlapping pairs; `partitive` additionally requires
// the symmetric difference. Enumerates the family, so n ≤ 12.
AxiomReport check_family_closure(const Relation &r, ClosureLevel level);

} // namespace homodec
