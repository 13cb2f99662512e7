#pragma once

// Exhaustive enumeration of dessins with a prescribed passport, up to
// isomorphism. The face type may be left free ("-"), in which case all
// partitions of n are tried as face types.
//
// Strategy: fix z as the canonical permutation of the face type; build x
// depth-first cycle by cycle (each cycle starts at the smallest unplaced
// point), with each placed edge of x forcing one value of y = x^-1 z^-1;
// partial y-cycles are tracked incrementally and pruned against the white
// type. Completed triples are deduplicated by canonical form.

#include "dessin.hpp"

#include <map>
#include <optional>
#include <vector>

namespace enumerate {

struct DegreeTooLarge : std::runtime_error {
    explicit DegreeTooLarge(const std::string& what) : std::runtime_error(what) {}
};
struct ListNotMirrorClosed : std::runtime_error {
    ListNotMirrorClosed()
        : std::runtime_error("dessin list is not closed under mirror images") {}
};

struct PassportQuery {
    grp::CycleType black, white;
    std::optional<grp::CycleType> faces; // nullopt = free ("-")
    int degree = 0;
};

struct EnumerateOptions {
    int degree_budget = 24;            // reject larger degrees outright
    long long candidate_budget = 1000000000; // raw DFS edge-placement budget
    int threads = 1;                   // workers over first-level branches
    bool prune = true;                 // false: naive oracle mode (degree <= 14)
};

// All isomorphism classes matching the query, in canonical form, sorted.
std::vector<dsn::Dessin> enumerate_passport(const PassportQuery& q,
                                            const EnumerateOptions& opts = {});

// The degree-11 dessins of type (3,2,r) with two faces (r != 11): the query
// (3^3,1^2; 2^5,1^1; -) bucketed by face-valency split, e.g. key {10,1}.
std::map<std::vector<int>, std::vector<dsn::Dessin>> enumerate_type_degree11(
    const EnumerateOptions& opts = {});

struct ChiralityPartition {
    std::vector<dsn::Dessin> symmetric;                      // mirror-isomorphic to self
    std::vector<std::pair<dsn::Dessin, dsn::Dessin>> pairs;  // chiral pairs
};

// Classify a mirror-closed list (throws ListNotMirrorClosed otherwise).
ChiralityPartition chirality_partition(const std::vector<dsn::Dessin>& ds);

// All partitions of n, each descending, in lexicographically decreasing order.
std::vector<std::vector<int>> partitions_of(int n);

} // namespace enumerate
