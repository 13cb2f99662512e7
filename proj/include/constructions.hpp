#pragma once

// Explicit dessin constructions: modular dessins from the PSL_2(p) action on
// the projective line, degree-11 coset actions from explicit matrix
// generators, two families of plane trees of prime degree, a loop-plus-path
// family of degree p+1, and affine lifts of GL_n(2) triples to AGL_n(2).

#include "dessin.hpp"

#include <cstdint>

namespace cons {

struct CongruenceMismatch : std::runtime_error {
    explicit CongruenceMismatch(const std::string& what) : std::runtime_error(what) {}
};
struct ClosureOrderWrong : std::runtime_error {
    explicit ClosureOrderWrong(const std::string& what) : std::runtime_error(what) {}
};
struct KernelViolation : std::runtime_error {
    explicit KernelViolation(const std::string& what) : std::runtime_error(what) {}
};
struct ComplementDegenerate : std::runtime_error {
    ComplementDegenerate()
        : std::runtime_error("n = 3: every type-(3,2,7) triple generates a complement "
                             "of the translation subgroup, not AGL_3(2)") {}
};
struct SearchExhausted : std::runtime_error {
    explicit SearchExhausted(const std::string& what) : std::runtime_error(what) {}
};

// Element of PSL_2(p) stored as a unimodular 2x2 matrix over F_p up to global
// sign, normalized so the first nonzero entry lies in 1..(p-1)/2. The matrix
// acts on row vectors (t, 1), so the Mobius map is t -> (a t + b)/(c t + d)
// for m = [[a, c], [b, d]], and composition reads left to right.
struct ProjMat2 {
    long long p = 0;
    long long m[2][2] = {{1, 0}, {0, 1}};
    // from the Mobius coefficients of t -> (a t + b)/(c t + d); checks ad - bc = 1
    static ProjMat2 from_mobius(long long p, long long a, long long b, long long c,
                                long long d);
    bool operator==(const ProjMat2& o) const;
    bool operator<(const ProjMat2& o) const;
};

ProjMat2 pm_mul(const ProjMat2& a, const ProjMat2& b);
// The permutation of P^1(F_p) induced by the Mobius action, with t = 0..p-1
// labeled 1..p and the point at infinity labeled p+1.
grp::Permutation mobius_permutation(const ProjMat2& g);

// The dessin D0(p) of the natural PSL_2(p) action: x: t -> -1/(t-1),
// y: t -> -1/t, so that z: t -> t+1 is the face cycle (1,...,p)(p+1).
dsn::Dessin modular_dessin(long long p);

// Degree and genus of the minimal regular cover of D0(p):
// p(p^2-1)/2 and (p+2)(p-3)(p-5)/24, with the degenerate case p = 2 -> (6, 0).
std::pair<grp::u128, long long> modular_cover_stats(long long p);

enum class CosetVariant { H, Hbar };
// The degree-11 action of PSL_2(11) on the cosets of the A_5 subgroup
// H = <u, v, w> (or its outer-automorphic image for Hbar), with x, y the
// standard Mobius generators. Asserts |H| = 60 (ClosureOrderWrong).
dsn::Dessin psl2_coset_dessin(CosetVariant variant);

enum class TreeVariant { D, Dprime };
// Plane trees of degree p: variant D needs p = 3k+2 and has passport
// (3^k 1^2, 2^(k+1) 1^k, p^1); variant Dprime needs p = 3k+1 and has passport
// (3^k 1^1, 2^k 1^(k+1), p^1). Emitted with the face cycle z = (1,...,p).
dsn::Dessin family_dessin_degree_p(long long p, TreeVariant variant);

// The loop-plus-path dessin of degree p+1 (p >= 17) whose monodromy group is
// A_{p+1}: passport (3^k 1^3, 2^(k+3) 1^(k-3), p^1 1^1) for p = 3k+2, and
// (3^k 1^5, 2^(k+5) 1^(k-5), p^1 1^1) for p = 3k+4.
dsn::Dessin family_dessin_degree_p_plus_1(long long p);

// n x n matrix over F_2; row i is the bit mask rows[i], and vectors act on
// the right: (v M)_j = parity of v & column j.
struct BinMat {
    int n = 0;
    std::vector<std::uint32_t> rows;
    explicit BinMat(int n = 0) : n(n), rows(n, 0) {}
    static BinMat identity(int n);
    bool operator==(const BinMat& o) const { return n == o.n && rows == o.rows; }
};

BinMat bm_mul(const BinMat& a, const BinMat& b);
BinMat bm_add(const BinMat& a, const BinMat& b);
std::uint32_t bm_apply(std::uint32_t v, const BinMat& m);
int bm_rank(BinMat m);
// all vectors v with v m = 0, in increasing order (includes 0)
std::vector<std::uint32_t> bm_kernel(const BinMat& m);
// all vectors v m, in increasing order
std::vector<std::uint32_t> bm_image(const BinMat& m);
int bm_element_order(const BinMat& m, int limit = 1 << 20);

// Least-lexicographic primitive polynomial of degree n over F_2, returned as
// its companion matrix (a Singer cycle of order 2^n - 1 on nonzero vectors).
BinMat singer_companion(int n);

struct GLTriple {
    BinMat x, y, z; // x y z = 1, orders 3, 2, 2^n - 1
    long long attempts = 0;
};

// Deterministic randomized search for a type-(3, 2, 2^n - 1) triple in
// GL_n(2) with z a fixed Singer cycle, y conjugate to the one-Jordan-block
// involution (s = 1) and x of order 3 with a one-dimensional fixed space
// (r = 1). Throws SearchExhausted after the attempt budget.
GLTriple find_glnq_triple(int n, std::uint64_t seed, long long budget = 1000000);

// Permutation action of <x, y> on the 2^n - 1 nonzero vectors of F_2^n
// (the projective points for q = 2), vector v labeled v.
dsn::Dessin projective_action_dessin(const BinMat& x, const BinMat& y);

// a must lie in ker(x^2 + x + 1) and b in ker(y + 1) (KernelViolation).
std::vector<std::uint32_t> agl_a_choices(const BinMat& x); // T_x
std::vector<std::uint32_t> agl_b_choices(const BinMat& y); // T_y
std::vector<std::uint32_t> agl_b_degenerate(const BinMat& y); // T(1-y) = im(y + 1)

// Affine lift of a GL_n(2) triple: u = xa, v = yb, w = zc with
// c = a(yz) + b z, acting on the 2^n points of F_2^n (vector v labeled v+1).
// n = 3 throws ComplementDegenerate; b outside im(y+1) gives the
// fixed-point-free involution and passport (3^((p-1)/3) 1^2, 2^((p+1)/2), p^1 1^1).
dsn::Dessin agl_lift(const BinMat& glx, const BinMat& gly, const BinMat& glz,
                     std::uint32_t a, std::uint32_t b);

} // namespace cons
