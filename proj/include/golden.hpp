#pragma once

// Regression checks over the embedded golden datasets (the generating triples
// of the degree 11/13/17/31/32/73 dessins) and regeneration of the three
// summary tables (regular-cover genera, modular-dessin genera, Bateman-Horn
// estimates) against their published values.

#include "dessin.hpp"

#include <cstdint>
#include <iosfwd>

namespace gold {

struct CheckLine {
    std::string id;
    bool ok = false;
    std::string detail;
};

struct Report {
    bool ok = true;
    std::vector<CheckLine> lines;
    void add(const std::string& id, bool pass, const std::string& detail = "");
};

// FNV-1a over the raw bytes of a file.
std::uint64_t fnv1a64_file(const std::string& path);

// Expected shape of one golden dataset file.
struct GoldenDataset {
    std::string file;
    int degree = 0;
    int count = 0;
    std::string passport;             // every record shares it
    long long genus = 0;
    std::vector<grp::u128> orders;    // expected monodromy order per record
    std::vector<std::pair<int, int>> chiral_pairs; // 1-based record indices
    std::vector<int> symmetric;       // records isomorphic to their own mirror
};
const std::vector<GoldenDataset>& golden_datasets();

// Re-validates every dataset record: checksum against the manifest, byte-exact
// reprint, the face permutation (1,...,L) with any fixed points trailing,
// passport, genus, monodromy order, chiral pairings and mirror symmetries.
Report verify_appendix(const std::string& data_dir);

// Regenerates the published tables and diffs them against frozen values:
// regular-cover genera of the degree-11 dessins of type (3,2,r), r != 11;
// the genus of the modular dessin for p = 2..53; and the Bateman-Horn
// estimates E(x) for x = 10^10..10^11 (9 printed significant digits).
// The last needs a prime sieve to 10^9; skip_slow omits it.
Report report_tables(bool skip_slow = false, int threads = 1);

void print_report(std::ostream& out, const Report& rep);

} // namespace gold
