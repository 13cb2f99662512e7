#pragma once

// Primality testing, projective primes p = 1+q+...+q^(n-1), and the
// Bateman-Horn machinery: the constant C(f), the integral estimate E(x) and
// exact counts Q(x) for the families arising from projective primes.

#include "perm.hpp" // u128, u128_to_string

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace primes {

using grp::u128;
using i128 = __int128;

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};
struct ConditionsViolated : std::runtime_error {
    explicit ConditionsViolated(const std::string& what) : std::runtime_error(what) {}
};
struct QuadratureFailure : std::runtime_error {
    QuadratureFailure() : std::runtime_error("adaptive quadrature did not converge") {}
};

// Deterministic for m < 3.3e24 (Miller-Rabin with the first 13 prime bases,
// after trial division by small primes).
bool is_prime(u128 m);

// Integer polynomial, dense ascending coefficients (c[0] + c[1] t + ...).
struct Poly {
    std::vector<long long> c;
    int degree() const;
    i128 eval(long long t) const;
    std::string str() const;
    bool operator==(const Poly& o) const { return c == o.c; }
};

// Grammar: terms `c`, `t`, `t^k`, `c*t^k` joined by + or -; e.g. "1+t+t^2".
Poly parse_poly(const std::string& s);

struct PolyFamily {
    std::vector<Poly> polys;
};

// Lemma criterion: 1 + t^e + t^(2e) + ... + t^((n-1)e) is irreducible in Z[t]
// iff exactly one divisor d of n*e does not divide e (iff n prime, e = n^i).
bool f_irreducible(long long n, long long e);

struct QPair {
    long long q; // = r^e
    long long r; // prime
    int e;
    int n; // p = 1 + q + ... + q^(n-1)
};
struct ProjectiveDecomposition {
    long long p;
    std::vector<QPair> pairs;
};
// All representations of the prime p as 1+q+...+q^(n-1), q a prime power.
ProjectiveDecomposition projective_decompositions(long long p);

struct ProjectiveCount {
    long long total = 0;                           // distinct projective primes <= x
    std::vector<long long> primes;                 // sorted
    std::map<std::pair<int, int>, long long> by_form; // (n, e) -> count of reps
};
ProjectiveCount count_projective_primes(long long x);

// Projective primes <= x with at least two (q, n) decompositions.
std::vector<long long> goormaghtigh_scan(long long x);

// Number of distinct roots of the product of the family mod the prime r.
long long omega_f(const PolyFamily& f, long long r);

struct BHOptions {
    bool assume_irreducible = false;
    int threads = 1;
};

// Partial product over primes r <= prime_bound of (1-1/r)^(-k) (1-omega(r)/r),
// accumulated in log space with compensated summation.
double bh_constant(const PolyFamily& f, long long prime_bound, const BHOptions& opts = {});

struct BHJob {
    PolyFamily family;
    double x = 0;
    long long prime_product_bound = 1000000000;
    bool li_variant = false;
    BHOptions opts;
};
// E(x) = C/(prod deg f_i) * integral_2^x dt/(ln t)^k, or the Li variant with
// integrand prod 1/ln(f_i(t)) starting at the least t >= 2 with all f_i(t) >= 2.
double bh_estimate(const BHJob& job);
// Same, with a precomputed constant (avoids resieving for a table of x values).
double bh_estimate_with_constant(const PolyFamily& f, double C, double x, bool li_variant);

// Exact Q(x): primes t <= x such that 1 + t^e + ... + t^((n-1)e) is prime.
long long count_Q(int n, int e, long long x, int threads = 1);

// Stream all primes <= bound through the callback, in increasing order.
void for_primes_upto(long long bound, const std::function<void(long long)>& fn);

} // namespace primes
