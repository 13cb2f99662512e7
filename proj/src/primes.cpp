#include "primes.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cctype>
#include <cmath>
#include <numeric>
#include <sstream>
#include <thread>

namespace primes {

// ---------------------------------------------------------------- primality

namespace {

u128 mulmod(u128 a, u128 b, u128 m) {
    if (m <= (u128)0xFFFFFFFFFFFFFFFFull) return (a % m) * (b % m) % m;
    // shift-and-add for moduli above 64 bits (values here stay < 2^80)
    a %= m;
    b %= m;
    u128 r = 0;
    while (b) {
        if (b & 1) {
            r += a;
            if (r >= m) r -= m;
        }
        a <<= 1;
        if (a >= m) a -= m;
        b >>= 1;
    }
    return r;
}

u128 powmod(u128 a, u128 e, u128 m) {
    u128 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

bool miller_rabin(u128 n, u128 a) {
    if (a % n == 0) return true;
    u128 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    u128 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

} // namespace

bool is_prime(u128 m) {
    if (m < 2) return false;
    for (u128 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
        if (m == p) return true;
        if (m % p == 0) return false;
    }
    // first 13 prime bases: deterministic below 3.3e24 (covers every value in scope)
    for (u128 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41})
        if (!miller_rabin(m, a)) return false;
    return true;
}

void for_primes_upto(long long bound, const std::function<void(long long)>& fn) {
    if (bound < 2) return;
    long long root = (long long)std::sqrt((double)bound) + 1;
    while (root * root > bound) --root;
    while ((root + 1) * (root + 1) <= bound) ++root;
    std::vector<char> small(root + 1, 1);
    std::vector<long long> base;
    for (long long i = 2; i <= root; ++i) {
        if (!small[i]) continue;
        base.push_back(i);
        for (long long j = i * i; j <= root; j += i) small[j] = 0;
    }
    for (long long p : base) fn(p);
    const long long seg = 1 << 20;
    std::vector<char> mark(seg);
    for (long long lo = root + 1; lo <= bound; lo += seg) {
        long long hi = std::min(bound, lo + seg - 1);
        std::fill(mark.begin(), mark.begin() + (hi - lo + 1), 1);
        for (long long p : base) {
            long long start = ((lo + p - 1) / p) * p;
            for (long long j = start; j <= hi; j += p) mark[j - lo] = 0;
        }
        for (long long v = lo; v <= hi; ++v)
            if (mark[v - lo]) fn(v);
    }
}

// ------------------------------------------------------------- polynomials

int Poly::degree() const {
    for (int i = (int)c.size() - 1; i >= 0; --i)
        if (c[i] != 0) return i;
    return 0;
}

i128 Poly::eval(long long t) const {
    i128 r = 0;
    for (int i = (int)c.size() - 1; i >= 0; --i) r = r * t + c[i];
    return r;
}

std::string Poly::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        long long v = c[k];
        if (first) {
            if (v < 0) os << "-";
        } else {
            os << (v < 0 ? "-" : "+");
        }
        first = false;
        long long a = std::abs(v);
        if (k == 0) {
            os << a;
        } else {
            if (a != 1) os << a << "*";
            os << "t";
            if (k > 1) os << "^" << k;
        }
    }
    if (first) os << "0";
    return os.str();
}

Poly parse_poly(const std::string& s) {
    Poly p;
    size_t i = 0;
    auto skip = [&] { while (i < s.size() && std::isspace((unsigned char)s[i])) ++i; };
    auto number = [&]() -> long long {
        size_t j = i;
        while (j < s.size() && std::isdigit((unsigned char)s[j])) ++j;
        if (j == i) throw std::invalid_argument("bad polynomial: " + s);
        long long v = std::stoll(s.substr(i, j - i));
        i = j;
        return v;
    };
    skip();
    bool any = false;
    while (i < s.size()) {
        long long sign = 1;
        skip();
        if (s[i] == '+' || s[i] == '-') {
            if (s[i] == '-') sign = -1;
            ++i;
            skip();
        } else if (any) {
            throw std::invalid_argument("expected + or - in polynomial: " + s);
        }
        long long coef = 1;
        int deg = 0;
        bool saw_coef = false, saw_t = false;
        if (i < s.size() && std::isdigit((unsigned char)s[i])) {
            coef = number();
            saw_coef = true;
            skip();
            if (i < s.size() && s[i] == '*') {
                ++i;
                skip();
            }
        }
        if (i < s.size() && s[i] == 't') {
            saw_t = true;
            ++i;
            deg = 1;
            skip();
            if (i < s.size() && s[i] == '^') {
                ++i;
                skip();
                deg = (int)number();
            }
        }
        if (!saw_coef && !saw_t) throw std::invalid_argument("bad polynomial term: " + s);
        if ((int)p.c.size() <= deg) p.c.resize(deg + 1, 0);
        p.c[deg] += sign * coef;
        any = true;
        skip();
    }
    if (!any) throw std::invalid_argument("empty polynomial");
    return p;
}

bool f_irreducible(long long n, long long e) {
    long long ne = n * e;
    int count = 0;
    for (long long d = 1; d <= ne; ++d)
        if (ne % d == 0 && e % d != 0) ++count;
    return count == 1;
}

// --------------------------------------------------- projective primes

namespace {

// q = r^e with r prime? (q >= 2)
bool prime_power(long long q, long long& r, int& e) {
    for (long long d = 2; d * d <= q; ++d) {
        if (q % d) continue;
        long long rest = q;
        e = 0;
        while (rest % d == 0) {
            rest /= d;
            ++e;
        }
        if (rest != 1) return false;
        r = d;
        return true;
    }
    r = q; // q itself prime
    e = 1;
    return true;
}

// 1 + q + ... + q^(n-1), or 0 on overflow past `cap`
u128 repunit(long long q, int n, u128 cap) {
    u128 v = 1, term = 1;
    for (int i = 1; i < n; ++i) {
        term *= (u128)q;
        v += term;
        if (v > cap) return 0;
    }
    return v;
}

bool is_power_of(long long e, long long n) {
    if (e == 1) return true;
    while (e % n == 0) e /= n;
    return e == 1;
}

// enumerate all (q prime power, n >= 2) with 1+q+...+q^(n-1) = value <= x and
// value prime; fn(value, q, r, e, n)
void scan_projective(long long x,
                     const std::function<void(long long, long long, long long, int, int)>& fn) {
    if (x > 1000000000000ll)
        throw BudgetExceeded("projective-prime scan bound above 1e12");
    // n = 2: p = 1 + q prime and odd forces q = 2^e
    for (long long q = 2; q < x; q *= 2) {
        if (is_prime((u128)(1 + q))) {
            long long r;
            int e;
            prime_power(q, r, e);
            fn(1 + q, q, r, e, 2);
        }
    }
    for (int n = 3; n < 64; ++n) {
        if ((u128)repunit(2, n, (u128)x) == 0) break; // even q=2 already too big
        for (long long q = 2;; ++q) {
            u128 v = repunit(q, n, (u128)x);
            if (v == 0) break;
            long long r;
            int e;
            if (!prime_power(q, r, e)) continue;
            if (!is_prime(v)) continue;
            fn((long long)v, q, r, e, n);
        }
    }
}

} // namespace

ProjectiveDecomposition projective_decompositions(long long p) {
    assert(is_prime((u128)p));
    ProjectiveDecomposition out;
    out.p = p;
    for (int n = 2; n < 64; ++n) {
        if (repunit(2, n, (u128)p) == 0) break;
        // binary search the q with 1+q+...+q^(n-1) = p
        long long lo = 2, hi = p;
        while (lo < hi) {
            long long mid = lo + (hi - lo) / 2;
            u128 v = repunit(mid, n, (u128)p);
            if (v == 0 || v >= (u128)p)
                hi = mid;
            else
                lo = mid + 1;
        }
        if (repunit(lo, n, (u128)p) != (u128)p) continue;
        long long r;
        int e;
        if (!prime_power(lo, r, e)) continue;
        // necessary conditions for p prime: n prime, e a power of n, q != 1 mod n
        assert(is_prime((u128)n));
        assert(is_power_of(e, n));
        assert(lo % n != 1);
        out.pairs.push_back({lo, r, e, n});
    }
    return out;
}

ProjectiveCount count_projective_primes(long long x) {
    ProjectiveCount out;
    scan_projective(x, [&](long long p, long long, long long, int e, int n) {
        out.primes.push_back(p);
        out.by_form[{n, e}]++;
    });
    std::sort(out.primes.begin(), out.primes.end());
    out.primes.erase(std::unique(out.primes.begin(), out.primes.end()), out.primes.end());
    out.total = (long long)out.primes.size();
    return out;
}

std::vector<long long> goormaghtigh_scan(long long x) {
    std::map<long long, int> reps;
    scan_projective(x, [&](long long p, long long, long long, int, int) { reps[p]++; });
    std::vector<long long> out;
    for (auto [p, k] : reps)
        if (k >= 2) out.push_back(p);
    return out;
}

// ------------------------------------------------------------ Bateman-Horn

namespace {

// dense polynomial arithmetic mod a prime r (coefficients ascending)
using ModPoly = std::vector<long long>;

void trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly reduce_mod(const Poly& p, long long r) {
    ModPoly a(p.c.size());
    for (size_t i = 0; i < p.c.size(); ++i) a[i] = ((p.c[i] % r) + r) % r;
    trim(a);
    return a;
}

ModPoly mul_mod(const ModPoly& a, const ModPoly& b, long long r) {
    if (a.empty() || b.empty()) return {};
    ModPoly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + (i128)a[i] * b[j]) % r;
    trim(c);
    return c;
}

// a mod m (monic-normalized divisor handled internally)
ModPoly rem_mod(ModPoly a, ModPoly m, long long r) {
    trim(a);
    trim(m);
    if (m.empty()) throw std::invalid_argument("polynomial division by zero");
    // make m monic
    long long lead = m.back();
    if (lead != 1) {
        long long inv = (long long)powmod((u128)lead, (u128)(r - 2), (u128)r);
        for (auto& v : m) v = (i128)v * inv % r;
    }
    while (a.size() >= m.size()) {
        long long coef = a.back();
        size_t shift = a.size() - m.size();
        if (coef != 0)
            for (size_t i = 0; i < m.size(); ++i)
                a[shift + i] = ((a[shift + i] - (i128)coef * m[i]) % r + r) % r;
        a.pop_back();
        trim(a);
    }
    return a;
}

ModPoly gcd_mod(ModPoly a, ModPoly b, long long r) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        ModPoly t = rem_mod(a, b, r);
        a = std::move(b);
        b = std::move(t);
    }
    return a;
}

// x^r mod m
ModPoly x_pow_r_mod(long long r, const ModPoly& m, long long rr) {
    ModPoly result{1};
    ModPoly base{0, 1};
    base = rem_mod(base, m, rr);
    long long e = r;
    while (e) {
        if (e & 1) result = rem_mod(mul_mod(result, base, rr), m, rr);
        base = rem_mod(mul_mod(base, base, rr), m, rr);
        e >>= 1;
    }
    return result;
}

enum class FamilyKind { TQuadratic, Twin, Generic };

FamilyKind classify_family(const PolyFamily& f) {
    auto has = [&](std::vector<long long> c) {
        for (const auto& p : f.polys)
            if (p.c == c) return true;
        return false;
    };
    if (f.polys.size() == 2 && has({0, 1}) && has({1, 1, 1})) return FamilyKind::TQuadratic;
    if (f.polys.size() == 2 && has({0, 1}) && has({2, 1})) return FamilyKind::Twin;
    return FamilyKind::Generic;
}

long long omega_generic(const PolyFamily& f, long long r) {
    // product of the family mod r
    ModPoly prod{1};
    for (const auto& p : f.polys) {
        ModPoly a = reduce_mod(p, r);
        if (a.empty()) return r; // a factor vanishes identically mod r
        prod = mul_mod(prod, a, r);
    }
    if (prod.size() <= 1) return 0; // nonzero constant
    if (r <= 100) { // direct evaluation over the field
        long long count = 0;
        for (long long t = 0; t < r; ++t) {
            long long v = 0;
            for (int i = (int)prod.size() - 1; i >= 0; --i) v = ((i128)v * t + prod[i]) % r;
            if (v == 0) ++count;
        }
        return count;
    }
    // distinct roots = deg gcd(x^r - x, prod)
    ModPoly xr = x_pow_r_mod(r, prod, r);
    // subtract x
    if (xr.size() < 2) xr.resize(2, 0);
    xr[1] = ((xr[1] - 1) % r + r) % r;
    trim(xr);
    ModPoly g = gcd_mod(prod, xr, r);
    return g.empty() ? 0 : (long long)g.size() - 1;
}

} // namespace

long long omega_f(const PolyFamily& f, long long r) {
    switch (classify_family(f)) {
        case FamilyKind::TQuadratic: // f = t (1 + t + t^2)
            if (r == 3) return 2;
            return (r % 3 == 1) ? 3 : 1;
        case FamilyKind::Twin: // f = t (t + 2)
            return (r == 2) ? 1 : 2;
        case FamilyKind::Generic:
            return omega_generic(f, r);
    }
    return 0;
}

namespace {

void check_family(const PolyFamily& f, const BHOptions& opts) {
    if (f.polys.empty()) throw ConditionsViolated("empty polynomial family");
    int total_deg = 0;
    for (const auto& p : f.polys) {
        int d = p.degree();
        if (d < 1) throw ConditionsViolated("constant polynomial in family: " + p.str());
        if (p.c[d] <= 0)
            throw ConditionsViolated("non-positive leading coefficient: " + p.str());
        total_deg += d;
        if (d > 3 && !opts.assume_irreducible) {
            // accept the special shape 1 + t^e + t^(2e) + ... + t^((n-1)e)
            long long e = 0;
            for (int i = 1; i <= d && e == 0; ++i)
                if (p.c[i] != 0) e = i;
            bool special = e > 0 && d % e == 0;
            if (special)
                for (int i = 0; i <= d; ++i)
                    if (p.c[i] != ((i % e == 0) ? 1 : 0)) special = false;
            long long n = special ? (long long)d / e + 1 : 0;
            if (!(special && n >= 2 && f_irreducible(n, e)))
                throw ConditionsViolated(
                    "cannot certify irreducibility of degree > 3 factor: " + p.str() +
                    " (rerun with assume_irreducible)");
        }
        if (d == 2 || d == 3) {
            // degree 2 or 3 is reducible over Q iff it has a rational root
            // num/den with num | a0 and den | a_d (rational root theorem)
            long long a0 = p.c[0], an = p.c[d];
            if (a0 == 0)
                throw ConditionsViolated("reducible factor (t divides): " + p.str());
            auto divisors = [](long long v) {
                std::vector<long long> out;
                v = std::abs(v);
                for (long long q = 1; q * q <= v; ++q)
                    if (v % q == 0) {
                        out.push_back(q);
                        if (q != v / q) out.push_back(v / q);
                    }
                return out;
            };
            for (long long num : divisors(a0)) {
                for (long long den : divisors(an)) {
                    for (long long sn : {num, -num}) {
                        // evaluate den^d * f(sn/den) exactly
                        i128 v = 0, scale = 1;
                        for (int i = d; i >= 0; --i) {
                            v = v * sn + (i128)p.c[i] * scale;
                            if (i > 0) scale *= den;
                        }
                        if (v == 0)
                            throw ConditionsViolated("reducible factor (rational root): " +
                                                     p.str());
                    }
                }
            }
        }
    }
    // f must not vanish identically mod any prime r <= total degree
    for (long long r = 2; r <= total_deg; ++r) {
        if (!is_prime((u128)r)) continue;
        if (omega_f(f, r) >= r)
            throw ConditionsViolated("family vanishes identically mod " + std::to_string(r));
    }
}

} // namespace

double bh_constant(const PolyFamily& f, long long prime_bound, const BHOptions& opts) {
    check_family(f, opts);
    int k = (int)f.polys.size();
    FamilyKind kind = classify_family(f);
    // compensated (Kahan) accumulation of log terms
    double sum = 0.0, comp = 0.0;
    auto add = [&](double v) {
        double y = v - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    };
    for_primes_upto(prime_bound, [&](long long r) {
        long long w;
        switch (kind) {
            case FamilyKind::TQuadratic:
                w = (r == 3) ? 2 : (r % 3 == 1 ? 3 : 1);
                break;
            case FamilyKind::Twin:
                w = (r == 2) ? 1 : 2;
                break;
            default:
                w = omega_generic(f, r);
        }
        double term = -k * std::log1p(-1.0 / (double)r) + std::log1p(-(double)w / (double)r);
        add(term);
    });
    return std::exp(sum);
}

namespace {

double adaptive_simpson(const std::function<double(double)>& g, double a, double b,
                        double fa, double fm, double fb, double whole, double tol,
                        int depth) {
    if (depth > 60) throw QuadratureFailure();
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = g(lm), frm = g(rm);
    double left = (m - a) / 6.0 * (fa + 4 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4 * frm + fb);
    double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol * (std::abs(left + right) + 1e-300))
        return left + right + delta / 15.0;
    return adaptive_simpson(g, a, m, fa, flm, fm, left, tol, depth + 1) +
           adaptive_simpson(g, m, b, fm, frm, fb, right, tol, depth + 1);
}

double integrate(const std::function<double(double)>& g, double a, double b, double tol) {
    if (b <= a) return 0.0;
    double m = 0.5 * (a + b);
    double fa = g(a), fm = g(m), fb = g(b);
    double whole = (b - a) / 6.0 * (fa + 4 * fm + fb);
    return adaptive_simpson(g, a, b, fa, fm, fb, whole, tol, 0);
}

} // namespace

double bh_estimate_with_constant(const PolyFamily& f, double C, double x, bool li_variant) {
    int k = (int)f.polys.size();
    long long degprod = 1;
    for (const auto& p : f.polys) degprod *= p.degree();
    const double tol = 1e-12;
    if (!li_variant) {
        // substitute u = ln t: integral of e^u / u^k du over [ln 2, ln x]
        auto g = [&](double u) { return std::exp(u) / std::pow(u, (double)k); };
        return C / (double)degprod * integrate(g, std::log(2.0), std::log(x), tol);
    }
    // lower limit: least integer t >= 2 with all f_i(t) >= 2
    long long t0 = 2;
    for (;; ++t0) {
        bool ok = true;
        for (const auto& p : f.polys)
            if (p.eval(t0) < 2) ok = false;
        if (ok) break;
        if (t0 > 1000000) throw QuadratureFailure();
    }
    auto g = [&](double u) {
        double t = std::exp(u);
        double prod = 1.0;
        for (const auto& p : f.polys) {
            double v = 0.0;
            for (int i = (int)p.c.size() - 1; i >= 0; --i) v = v * t + (double)p.c[i];
            prod *= std::log(v);
        }
        return t / prod;
    };
    return C * integrate(g, std::log((double)t0), std::log(x), tol);
}

double bh_estimate(const BHJob& job) {
    if (job.x < 2) throw std::invalid_argument("bh_estimate requires x >= 2");
    double C = bh_constant(job.family, job.prime_product_bound, job.opts);
    return bh_estimate_with_constant(job.family, C, job.x, job.li_variant);
}

long long count_Q(int n, int e, long long x, int threads) {
    if (x > 2000000000ll) throw BudgetExceeded("count_Q bound above 2e9");
    // primes t <= x with 1 + t^e + ... + t^((n-1)e) prime
    auto value_prime = [n, e](long long t) {
        u128 q = 1;
        for (int i = 0; i < e; ++i) q *= (u128)t;
        u128 v = 1, term = 1;
        for (int i = 1; i < n; ++i) {
            term *= q;
            v += term;
        }
        return is_prime(v);
    };
    const long long seg = 1 << 22;
    long long nseg = (x + seg) / seg;
    std::vector<long long> counts((size_t)nseg, 0);
    // base primes for segment sieving
    long long root = (long long)std::sqrt((double)x) + 2;
    std::vector<char> small(root + 1, 1);
    std::vector<long long> base;
    for (long long i = 2; i <= root; ++i) {
        if (!small[i]) continue;
        base.push_back(i);
        for (long long j = i * i; j <= root; j += i) small[j] = 0;
    }
    std::atomic<long long> next{0};
    auto work = [&] {
        std::vector<char> mark(seg);
        for (;;) {
            long long si = next.fetch_add(1);
            if (si >= nseg) break;
            long long lo = std::max(2ll, si * seg);
            long long hi = std::min(x, (si + 1) * seg - 1);
            if (lo > hi) continue;
            std::fill(mark.begin(), mark.begin() + (hi - lo + 1), 1);
            for (long long p : base) {
                if (p * p > hi) break;
                long long start = std::max(p * p, ((lo + p - 1) / p) * p);
                for (long long j = start; j <= hi; j += p) mark[j - lo] = 0;
            }
            long long c = 0;
            for (long long t = lo; t <= hi; ++t)
                if (mark[t - lo] && value_prime(t)) ++c;
            counts[(size_t)si] = c;
        }
    };
    int nt = std::max(1, threads);
    if (nt == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < nt; ++i) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    return std::accumulate(counts.begin(), counts.end(), 0ll);
}

} // namespace primes
