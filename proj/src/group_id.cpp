#include "group_id.hpp"

#include "primes.hpp"

#include <cassert>
#include <numeric>
#include <optional>
#include <sstream>

namespace gid {

namespace {

bool is_prime_small(long long m) {
    if (m < 2) return false;
    for (long long d = 2; d * d <= m; ++d)
        if (m % d == 0) return false;
    return true;
}

std::optional<u128> factorial_u128(int n) {
    u128 f = 1;
    for (int i = 2; i <= n; ++i) {
        u128 prev = f;
        f *= (u128)i;
        if (f / (u128)i != prev) return std::nullopt;
    }
    return f;
}

} // namespace

std::string GroupLabel::str() const {
    std::ostringstream os;
    switch (family) {
        case Family::Alt: os << "A" << n; break;
        case Family::Sym: os << "S" << n; break;
        case Family::PSL: os << "PSL(" << n << "," << q << ")"; break;
        case Family::AGL2: os << "AGL(" << n << ",2)"; break;
        case Family::AGL1Sub:
            os << "subgroup of AGL(1," << p << ") of order " << grp::u128_to_string(order);
            break;
        case Family::M11: os << "M11"; break;
        case Family::M12: os << "M12"; break;
        case Family::M23: os << "M23"; break;
        case Family::M24: os << "M24"; break;
        case Family::Unknown: os << "unknown"; break;
    }
    return os.str();
}

u128 projective_order(int n, long long q) {
    if (n < 2 || q < 2) throw std::invalid_argument("projective_order needs n, q >= 2");
    if (std::gcd((long long)n, q - 1) != 1) throw GcdNotOne();
    u128 o = 1;
    for (int i = 0; i < n * (n - 1) / 2; ++i) o *= (u128)q;
    for (int i = 2; i <= n; ++i) {
        u128 qi = 1;
        for (int j = 0; j < i; ++j) qi *= (u128)q;
        o *= qi - 1;
    }
    return o;
}

bool jordan_criterion(const dsn::Dessin& d) {
    if (!grp::is_primitive({d.x(), d.y()})) throw NotPrimitive();
    int n = d.degree();
    auto witness = [n](const grp::Permutation& w) {
        for (int k = 1;; ++k) {
            grp::Permutation p = grp::power(w, k);
            if (p.is_identity()) return false;
            auto t = grp::cycle_type(p);
            // exactly one non-trivial cycle, of prime length, >= 3 fixed points
            int moved_cycles = 0, moved_len = 0, fixed = 0;
            for (auto [len, mult] : t.parts) {
                if (len == 1)
                    fixed = mult;
                else {
                    moved_cycles += mult;
                    moved_len = len;
                }
            }
            if (moved_cycles == 1 && fixed >= 3 && is_prime_small(moved_len)) return true;
            (void)n;
        }
    };
    const auto& x = d.x();
    const auto& z = d.z();
    grp::Permutation comm = grp::compose(grp::compose(grp::inverse(x), grp::inverse(d.y())),
                                         grp::compose(x, d.y()));
    if (witness(z) || witness(comm)) return true;
    int ordz = grp::element_order(z);
    for (int a = 1; a < ordz; ++a) {
        grp::Permutation za = grp::power(z, a);
        for (int b = 1; b < ordz; ++b) {
            grp::Permutation w =
                grp::compose(grp::compose(x, za), grp::compose(x, grp::power(z, b)));
            if (witness(w)) return true;
        }
    }
    return false;
}

namespace {

struct Candidate {
    std::optional<u128> order; // nullopt: exceeds 128 bits
    GroupLabel label;
};

GroupLabel match(const dsn::Dessin& d, std::vector<Candidate> candidates,
                 const char* context) {
    // distinctness guard: order-based identification requires distinct orders
    for (size_t i = 0; i < candidates.size(); ++i)
        for (size_t j = i + 1; j < candidates.size(); ++j)
            if (candidates[i].order && candidates[j].order &&
                *candidates[i].order == *candidates[j].order)
                throw UnrecognizedOrder(std::string("ambiguous candidate orders (") +
                                        context + ")");
    grp::PermGroup G = dsn::monodromy_group(d);
    bool even = grp::is_even(d.x()) && grp::is_even(d.y());
    if (G.order_overflows()) {
        // only Alt/Sym candidates exceed 128 bits at the degrees in scope
        for (auto& c : candidates) {
            if (c.order) continue;
            if (c.label.family == Family::Sym && even) continue;
            if (c.label.family == Family::Alt && !even) continue;
            c.label.order_overflowed = true;
            return c.label;
        }
        throw UnrecognizedOrder(std::string("order exceeds 128 bits (") + context + ")");
    }
    u128 order = G.order();
    for (auto& c : candidates) {
        if (!c.order || *c.order != order) continue;
        // parity guard: odd-permutation-free generators can never give Sym
        assert(!(c.label.family == Family::Sym && even));
        c.label.order = order;
        return c.label;
    }
    throw UnrecognizedOrder(std::string("order ") + grp::u128_to_string(order) +
                            " matches no candidate (" + context + ")");
}

} // namespace

GroupLabel identify_prime_degree(const dsn::Dessin& d) {
    long long p = d.degree();
    if (!is_prime_small(p)) throw std::invalid_argument("degree is not prime");
    std::vector<Candidate> cs;
    auto half_fact = factorial_u128((int)p);
    cs.push_back({half_fact ? std::optional<u128>(*half_fact / 2) : std::nullopt,
                  {Family::Alt, (int)p, 0, p}});
    cs.push_back({half_fact, {Family::Sym, (int)p, 0, p}});
    for (long long k = 1; k <= p - 1; ++k)
        if ((p - 1) % k == 0)
            cs.push_back({(u128)(k * p), {Family::AGL1Sub, 0, 0, p, (u128)(k * p)}});
    if (p == 11) {
        cs.push_back({(u128)660, {Family::PSL, 2, 11, 11}});
        cs.push_back({(u128)7920, {Family::M11, 0, 0, 11}});
    }
    if (p == 23) cs.push_back({(u128)10200960, {Family::M23, 0, 0, 23}});
    for (const auto& pr : primes::projective_decompositions(p).pairs)
        cs.push_back({projective_order(pr.n, pr.q), {Family::PSL, pr.n, pr.q, p}});
    return match(d, std::move(cs), "prime degree");
}

GroupLabel identify_degree_p_plus_1(const dsn::Dessin& d) {
    long long p = d.degree() - 1;
    if (!is_prime_small(p)) throw std::invalid_argument("degree is not p+1 for a prime p");
    bool has_p_cycle = false;
    for (auto [len, mult] : grp::cycle_type(d.z()).parts)
        if (len == p) has_p_cycle = true;
    if (!has_p_cycle) throw std::invalid_argument("z has no p-cycle");

    std::vector<Candidate> cs;
    auto fact = factorial_u128((int)p + 1);
    cs.push_back({fact ? std::optional<u128>(*fact / 2) : std::nullopt,
                  {Family::Alt, (int)p + 1, 0, p}});
    cs.push_back({(u128)(p == 2 ? 6 : p * (p * p - 1) / 2), {Family::PSL, 2, p, p}});
    for (int n = 2; n < 40; ++n)
        if ((1ll << n) - 1 == p) {
            u128 o = (u128)1 << n; // 2^n translations
            for (int i = 0; i < n * (n - 1) / 2; ++i) o *= 2;
            for (int i = 2; i <= n; ++i) o *= (((u128)1 << i) - 1);
            // |AGL_n(2)| = 2^n |GL_n(2)|; |GL_n(2)| = |SL_n(2)| = |PSL_n(2)|
            cs.push_back({o, {Family::AGL2, n, 2, p}});
        }
    if (p == 11) {
        cs.push_back({(u128)7920, {Family::M11, 0, 0, 11}});
        cs.push_back({(u128)95040, {Family::M12, 0, 0, 11}});
    }
    if (p == 23) cs.push_back({(u128)244823040, {Family::M24, 0, 0, 23}});
    return match(d, std::move(cs), "degree p+1");
}

GroupLabel identify(const dsn::Dessin& d) {
    long long n = d.degree();
    if (is_prime_small(n)) return identify_prime_degree(d);
    if (is_prime_small(n - 1)) {
        for (auto [len, mult] : grp::cycle_type(d.z()).parts)
            if (len == n - 1) return identify_degree_p_plus_1(d);
    }
    GroupLabel out;
    out.family = Family::Unknown;
    grp::PermGroup G = dsn::monodromy_group(d);
    if (G.order_overflows())
        out.order_overflowed = true;
    else
        out.order = G.order();
    return out;
}

} // namespace gid
