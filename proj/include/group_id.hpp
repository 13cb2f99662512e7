#pragma once

// Identification of monodromy groups of dessins of degree p or p+1 (p prime)
// by their order, following the classification of transitive groups of prime
// degree and of perfect groups of degree p+1 containing a p-cycle. Includes
// the Jordan-criterion shortcut (a prime-length cycle with >= 3 fixed points
// in a primitive group forces the alternating group).

#include "dessin.hpp"

namespace gid {

using grp::u128;

struct NotPrimitive : std::runtime_error {
    NotPrimitive() : std::runtime_error("monodromy group is not primitive") {}
};
struct UnrecognizedOrder : std::runtime_error {
    explicit UnrecognizedOrder(const std::string& what) : std::runtime_error(what) {}
};
struct GcdNotOne : std::runtime_error {
    GcdNotOne() : std::runtime_error("projective order requires gcd(n, q-1) = 1") {}
};

enum class Family {
    Alt,
    Sym,
    PSL,        // PSL_n(q); n = 2 covers both the natural and exceptional actions
    AGL2,       // AGL_n(2) of degree 2^n
    AGL1Sub,    // solvable subgroup of AGL_1(p), order k*p with k | p-1
    M11,
    M12,
    M23,
    M24,
    Unknown,
};

struct GroupLabel {
    Family family = Family::Unknown;
    int n = 0;       // PSL/AGL dimension
    long long q = 0; // PSL field size
    long long p = 0; // relevant prime (degree, or degree-1)
    u128 order = 0;
    bool order_overflowed = false; // huge Alt/Sym beyond 128 bits
    std::string str() const;
    bool operator==(const GroupLabel& o) const {
        return family == o.family && n == o.n && q == o.q && p == o.p && order == o.order;
    }
};

// |PSL_n(q)| = q^(n(n-1)/2) * prod_{i=2..n} (q^i - 1), valid when
// gcd(n, q-1) = 1 (so PSL = SL and the centre is trivial).
u128 projective_order(int n, long long q);

// True iff some word in the configured set (powers of z, powers of [x,y],
// and powers of x z^a x z^b for a, b < order(z)) is a single prime-length
// cycle with at least three fixed points. Throws NotPrimitive.
bool jordan_criterion(const dsn::Dessin& d);

// Degree must be prime. Matches |<x,y>| against the candidate orders of the
// prime-degree classification; asserts the candidates are pairwise distinct.
GroupLabel identify_prime_degree(const dsn::Dessin& d);

// Degree must be p+1 with p prime and z containing a p-cycle. Matches against
// the perfect groups of degree p+1: A_{p+1}, PSL_2(p), AGL_n(2) for
// p = 2^n - 1, and M_11 (degree 12), M_12, M_24.
GroupLabel identify_degree_p_plus_1(const dsn::Dessin& d);

// Dispatch on the degree: prime -> identify_prime_degree; p+1 with a p-cycle
// in z -> identify_degree_p_plus_1; otherwise Unknown with the exact order.
GroupLabel identify(const dsn::Dessin& d);

} // namespace gid
