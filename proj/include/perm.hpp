#pragma once

// Exact permutation arithmetic and permutation-group algorithms:
// orbits, transitivity, primitivity, order via stabilizer chains, membership.
//
// Points are 1-based in all I/O (cycle notation, test data) and 0-based
// internally; the conversion happens only in the parser/printer.
// Composition is left-to-right: compose(p, q) maps i to q(p(i)).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace grp {

using u128 = unsigned __int128;

std::string u128_to_string(u128 v);

struct degree_mismatch : std::runtime_error {
    degree_mismatch() : std::runtime_error("degree mismatch") {}
};
struct not_transitive_error : std::runtime_error {
    not_transitive_error() : std::runtime_error("generators are not transitive") {}
};

class Permutation {
public:
    Permutation() = default;
    explicit Permutation(int n);                       // identity on n points
    explicit Permutation(std::vector<int> images);     // 0-based image array

    int degree() const { return (int)img_.size(); }
    int operator[](int i) const { return img_[i]; }    // 0-based
    const std::vector<int>& images() const { return img_; }

    bool is_identity() const;
    bool operator==(const Permutation& o) const { return img_ == o.img_; }
    bool operator!=(const Permutation& o) const { return img_ != o.img_; }
    bool operator<(const Permutation& o) const { return img_ < o.img_; }

private:
    std::vector<int> img_;
};

Permutation compose(const Permutation& p, const Permutation& q); // i -> q(p(i))
Permutation inverse(const Permutation& p);
// conjugate(p, t): the permutation mapping t(i) -> t(p(i)), i.e. "p relabeled by t".
Permutation conjugate(const Permutation& p, const Permutation& t);
Permutation power(const Permutation& p, long long e);
int element_order(const Permutation& p);
bool is_even(const Permutation& p);

// Multiset of cycle lengths (fixed points included), stored as sorted
// (length, multiplicity) pairs with lengths descending.
struct CycleType {
    std::vector<std::pair<int, int>> parts; // (length, multiplicity), length descending
    int degree() const;
    bool operator==(const CycleType& o) const { return parts == o.parts; }
    bool operator!=(const CycleType& o) const { return parts != o.parts; }
    bool operator<(const CycleType& o) const { return parts < o.parts; }
    std::string str() const;                 // e.g. "3^3,1^2"
    std::vector<int> lengths() const;        // expanded, descending
    static CycleType from_lengths(std::vector<int> ls);
    static CycleType parse(const std::string& s, int expected_degree = -1);
};

CycleType cycle_type(const Permutation& p);
int cycle_count(const Permutation& p); // number of cycles incl. fixed points

// Cycle-notation parser/printer. Disjoint cycles, 1-based points, fixed points
// omitted; whitespace insignificant. Degree supplied out-of-band.
Permutation parse_cycles(const std::string& s, int degree);
// Least point first in each cycle; cycles sorted by least point. "()" for identity.
std::string print_cycles(const Permutation& p);

std::vector<int> orbit_of(const std::vector<Permutation>& gens, int point); // sorted, 0-based
bool is_transitive(const std::vector<Permutation>& gens, int n);
// Minimal-block test over seed pairs {0, beta}. Throws not_transitive_error.
bool is_primitive(const std::vector<Permutation>& gens);

// Deterministic stabilizer chain (base = first moved points in increasing order).
class PermGroup {
public:
    explicit PermGroup(std::vector<Permutation> gens);

    int degree() const { return n_; }
    const std::vector<Permutation>& generators() const { return gens_; }

    u128 order() const;               // exact; throws overflow_error on u128 overflow
    bool order_overflows() const;
    bool membership(const Permutation& p) const;

private:
    void build() const;
    int n_ = 0;
    std::vector<Permutation> gens_;
    struct Level {
        int base = -1;
        std::vector<Permutation> gens;
        std::vector<int> orbit;            // BFS order
        std::vector<int> where;            // point -> orbit index or -1
        std::vector<Permutation> transv;   // point -> perm mapping base to point
    };
    mutable bool built_ = false;
    mutable std::vector<Level> levels_;
    // strong generators available at level i: own gens plus all deeper levels'
    // (they fix the first i base points, so they act on this level's orbit too)
    std::vector<Permutation> level_gens(size_t i) const;
    void place(const Permutation& g, size_t level) const;
    void complete(size_t i) const; // establish strong generation at levels >= i
    void rebuild_orbit(size_t level) const;
    // returns (residue, level reached); residue identity means full sift
    std::pair<Permutation, size_t> sift(const Permutation& g, size_t from = 0) const;
};

} // namespace grp
