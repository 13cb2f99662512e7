#pragma once

// Exact triple counting in finite groups: the Frobenius class-product formula
// evaluated over character tables with cyclotomic entries, a brute-force
// oracle enumerating conjugacy-class products, and the closed-form dessin
// counts for the Fermat, PSL3 and Mersenne families.

#include "perm.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace chr {

struct NotRational : std::runtime_error {
    NotRational() : std::runtime_error("cyclotomic value is not rational") {}
};
struct NonIntegerCount : std::runtime_error {
    explicit NonIntegerCount(const std::string& what) : std::runtime_error(what) {}
};
struct PartialNotApplicable : std::runtime_error {
    explicit PartialNotApplicable(const std::string& what) : std::runtime_error(what) {}
};
struct NonIntegerOrbits : std::runtime_error {
    NonIntegerOrbits() : std::runtime_error("generating triples not divisible by |Aut G|") {}
};
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};
struct NotProjectivePrime : std::runtime_error {
    explicit NotProjectivePrime(const std::string& what) : std::runtime_error(what) {}
};

// Exact fraction on 64-bit numerator/denominator, always reduced, denominator
// positive. Intermediate products go through 128 bits; narrowing overflow throws.
struct Rational {
    long long num = 0;
    long long den = 1;
    Rational() = default;
    Rational(long long n) : num(n) {}
    Rational(long long n, long long d);
    bool is_integer() const { return den == 1; }
    std::string str() const; // "num" or "num/den"
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
};
Rational operator+(const Rational& a, const Rational& b);
Rational operator-(const Rational& a, const Rational& b);
Rational operator*(const Rational& a, const Rational& b);
Rational operator/(const Rational& a, const Rational& b);
Rational operator-(const Rational& a);

// Element of Q(zeta_n): sum of c_k * zeta_n^k, kept reduced modulo the n-th
// cyclotomic polynomial, so exponents stay below deg Phi_n and the coefficient
// vector is a coordinate vector in the power basis. The conductor is whatever
// the inputs dictate (lcm on mixed-conductor arithmetic), never minimized.
struct Cyclotomic {
    long long conductor = 1;
    std::map<long long, Rational> coeffs; // exponent -> nonzero coefficient
    Cyclotomic() = default;
    Cyclotomic(const Rational& r);
    Cyclotomic(long long n) : Cyclotomic(Rational(n)) {}
    static Cyclotomic zeta_power(long long n, long long k); // E(n)^k, reduced
    bool is_zero() const { return coeffs.empty(); }
    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }
    std::string str() const; // value grammar, round-trips through parse_cyc_value
};

Cyclotomic cyc_add(const Cyclotomic& a, const Cyclotomic& b);
Cyclotomic cyc_sub(const Cyclotomic& a, const Cyclotomic& b);
Cyclotomic cyc_mul(const Cyclotomic& a, const Cyclotomic& b);
// Galois map zeta_n -> zeta_n^k; requires gcd(k, n) = 1.
Cyclotomic cyc_galois(const Cyclotomic& a, long long k);
// Throws NotRational unless the reduced value has no zeta component.
Rational cyc_to_rational(const Cyclotomic& a);

// "-1", "1/2", "E(11)+E(11)^3", "-E(8)-E(8)^3", "2*E(5)^2+1/2*E(5)^3", ...
Cyclotomic parse_cyc_value(const std::string& s);

struct CharacterTable {
    struct ClassInfo {
        std::string name;
        long long element_order = 0;
        long long centralizer = 0;
    };
    std::string group_name;
    long long group_order = 0;
    std::vector<ClassInfo> classes;
    bool partial = false; // true: omitted rows vanish on every queried class triple
    std::vector<std::pair<std::string, std::vector<Cyclotomic>>> characters;
    size_t class_index(const std::string& name) const; // throws invalid_argument
};

// Text format, one item per line, '#' to end of line is a comment:
//   group <name> order <N>
//   classes: <name> <element_order> <centralizer_order>
//   partial: <true|false>
//   char <row-name>: <v1> | <v2> | ...
// Full tables (partial: false) are validated on parse: class equation,
// principal first row, and sum of squared degrees equal to the group order.
CharacterTable parse_character_table(std::istream& in);
CharacterTable parse_character_table(const std::string& text);
CharacterTable read_character_table_file(const std::string& path);
std::string print_character_table(const CharacterTable& t); // parse/print round-trips

// Sum over rows of chi(x) chi(y) chi(z) / chi(1), as an exact rational.
Rational frobenius_char_sum(const CharacterTable& t, const std::string& cx,
                            const std::string& cy, const std::string& cz);
// |G|^2 / (|C(x)| |C(y)| |C(z)|) times the character sum. On full tables the
// result must be a non-negative integer (NonIntegerCount otherwise); a table
// whose rows provably do not span the full table must declare partial: true
// (PartialNotApplicable otherwise).
Rational frobenius_count(const CharacterTable& t, const std::string& cx,
                         const std::string& cy, const std::string& cz);

struct TripleCount {
    long long total = 0;
    std::map<std::string, long long> per_class_Z;
    std::optional<long long> generating;
};

struct BruteForceOptions {
    unsigned long long pair_budget = 20000000; // |X| * |Y| products
    bool count_generating = true;
    int threads = 1;
};

// Exact count of triples (x, y, z) with xyz = 1 where x runs over the
// conjugacy class of x_rep in G = <gens>, y over the class of y_rep, and z
// over each of the named classes of z_reps. Conjugation-invariance is used:
// x is pinned to x_rep and the result scaled by |class of x_rep|.
// A triple "generates" when <x, y> has the full group order.
TripleCount brute_force_triples(const std::vector<grp::Permutation>& gens,
                                const grp::Permutation& x_rep, const grp::Permutation& y_rep,
                                const std::vector<std::pair<std::string, grp::Permutation>>& z_reps,
                                const BruteForceOptions& opts = {});

// Orbits of Aut G on generating triples: total / |Aut G|, asserted integral
// because the action is semi-regular.
Rational aut_orbit_count(long long total_generating, long long aut_order);

struct ExpectedCount {
    long long p = 0;        // the projective prime the family realizes
    long long count = 0;    // dessin count, or chiral-pair lower bound
    bool lower_bound = false;
};

// Fermat prime p = 2^(2^k) + 1: exactly 2^(2^k - k - 1) dessins.
ExpectedCount expected_dessin_count_fermat(int k);
// p = 1 + q + q^2 with q = r^e: exactly (p - 1) / 3e dessins.
ExpectedCount expected_dessin_count_psl3(long long q);
// Mersenne prime p = 2^n - 1: at least (p - 1) / 2n chiral pairs.
ExpectedCount expected_dessin_count_mersenne(int n);

} // namespace chr
