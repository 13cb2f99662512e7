#include "belyi.hpp"

namespace bly {

namespace {
const long long D = -11;
}

std::string QuadElem::str() const {
    if (b == Rational(0)) return a.str();
    std::string s;
    if (a != Rational(0)) s = a.str() + (b.num > 0 ? "+" : "");
    if (b == Rational(1)) return s + "sqrt(-11)";
    if (b == Rational(-1)) return s + "-sqrt(-11)";
    return s + b.str() + "*sqrt(-11)";
}

QuadElem operator+(const QuadElem& x, const QuadElem& y) { return {x.a + y.a, x.b + y.b}; }
QuadElem operator-(const QuadElem& x, const QuadElem& y) { return {x.a - y.a, x.b - y.b}; }
QuadElem operator*(const QuadElem& x, const QuadElem& y) {
    return {x.a * y.a + Rational(D) * x.b * y.b, x.a * y.b + x.b * y.a};
}
QuadElem quad_conj(const QuadElem& x) { return {x.a, -x.b}; }

static void trim(QuadPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int poly_degree(const QuadPoly& p) {
    for (int i = (int)p.size() - 1; i >= 0; --i)
        if (!p[i].is_zero()) return i;
    return -1;
}

QuadPoly poly_add(const QuadPoly& p, const QuadPoly& q) {
    QuadPoly r(std::max(p.size(), q.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < p.size()) r[i] = r[i] + p[i];
        if (i < q.size()) r[i] = r[i] + q[i];
    }
    trim(r);
    return r;
}

QuadPoly poly_sub(const QuadPoly& p, const QuadPoly& q) {
    QuadPoly r(std::max(p.size(), q.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < p.size()) r[i] = r[i] + p[i];
        if (i < q.size()) r[i] = r[i] - q[i];
    }
    trim(r);
    return r;
}

QuadPoly poly_mul(const QuadPoly& p, const QuadPoly& q) {
    if (p.empty() || q.empty()) return {};
    QuadPoly r(p.size() + q.size() - 1);
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = 0; j < q.size(); ++j) r[i + j] = r[i + j] + p[i] * q[j];
    trim(r);
    return r;
}

QuadPoly poly_pow(const QuadPoly& p, int e) {
    QuadPoly r = {QuadElem(1)};
    for (int i = 0; i < e; ++i) r = poly_mul(r, p);
    return r;
}

QuadPoly poly_conj(const QuadPoly& p) {
    QuadPoly r = p;
    for (auto& c : r) c = quad_conj(c);
    return r;
}

KleinPolys klein_shabat_polynomials(int sign_of_sqrt) {
    if (sign_of_sqrt != 1 && sign_of_sqrt != -1)
        throw std::invalid_argument("sign_of_sqrt must be +1 or -1");
    Rational s(sign_of_sqrt);
    auto q = [&](long long a, long long b) { return QuadElem(Rational(a), s * Rational(b)); };
    KleinPolys kp;
    kp.p1 = {q(11, -3), q(2, 0)};
    kp.p2 = {q(-22, -6), q(-11, 3), q(2, 0)};
    kp.p3 = {q(55, 9), q(11, 0), q(1, 0)};
    kp.q1 = {q(5, 3), q(2, 0)};
    kp.q2 = {q(56, 96), q(-12, 12), q(15, -3), q(2, 0)};
    kp.q3_sum = {q(-175, -279), q(21, 45), q(-18, 0), q(2, 0)};
    kp.q3_concat = {q(0, -454), q(21, 45), q(-18, 0), q(2, 0)};
    return kp;
}

IdentityReport check_klein_identity(const KleinPolys& kp, const QuadPoly& q3, int s) {
    IdentityReport rep;
    rep.qside_sign = s;
    QuadPoly lhs = poly_mul(poly_mul(poly_pow(kp.p1, 3), poly_pow(kp.p2, 3)), kp.p3);
    // subtract 2^12 * 3^14
    QuadPoly c = {QuadElem(4096ll * 4782969ll)};
    lhs = poly_sub(lhs, c);
    QuadPoly rhs = poly_mul(poly_mul(poly_pow(kp.q1, 2), poly_pow(kp.q2, 2)), q3);
    rhs = poly_mul(rhs, {QuadElem(2 * s)});
    QuadPoly diff = poly_sub(lhs, rhs);
    if (poly_degree(diff) < 0) {
        rep.ok = true;
        return rep;
    }
    for (size_t i = 0; i < diff.size(); ++i)
        if (!diff[i].is_zero()) {
            rep.failing_coefficient = (int)i;
            rep.detail = "coefficient of x^" + std::to_string(i) + " differs by " +
                         diff[i].str();
            break;
        }
    return rep;
}

IdentityReport verify_klein_shabat(int sign_of_sqrt) {
    auto kp = klein_shabat_polynomials(sign_of_sqrt);
    IdentityReport winner;
    int hits = 0;
    IdentityReport first_fail;
    for (int reading = 0; reading < 2; ++reading)
        for (int s : {1, -1}) {
            auto rep = check_klein_identity(kp, reading == 0 ? kp.q3_sum : kp.q3_concat, s);
            rep.resolved_reading = reading == 0 ? "175+279*sqrt(-11)" : "454*sqrt(-11)";
            if (rep.ok) {
                ++hits;
                winner = rep;
            } else if (first_fail.detail.empty()) {
                first_fail = rep;
            }
        }
    if (hits == 1) return winner;
    IdentityReport rep = first_fail;
    rep.ok = false;
    rep.detail = hits == 0 ? "no reading/sign combination satisfies the identity; " + rep.detail
                           : "identity ambiguous: several combinations work";
    return rep;
}

D013Polys d013_polynomials() {
    auto ip = [](std::initializer_list<long long> cs) {
        QuadPoly p;
        for (long long c : cs) p.push_back(QuadElem(c));
        return p;
    };
    D013Polys dp;
    dp.a_core = ip({1, -19, 20, -7, 1});
    dp.a_factor = ip({13, -5, 1});
    dp.b_core = ip({-1, -38, 122, -108, 46, -10, 1});
    dp.b_factor = ip({13, -6, 1});
    return dp;
}

IdentityReport check_d013_identity(const D013Polys& dp) {
    IdentityReport rep;
    QuadPoly a = poly_mul(poly_pow(dp.a_core, 3), dp.a_factor);
    QuadPoly b = poly_mul(poly_pow(dp.b_core, 2), dp.b_factor);
    QuadPoly t1728 = {QuadElem(0), QuadElem(1728)};
    QuadPoly diff = poly_sub(poly_add(a, t1728), b);
    if (poly_degree(diff) < 0) {
        rep.ok = true;
        return rep;
    }
    for (size_t i = 0; i < diff.size(); ++i)
        if (!diff[i].is_zero()) {
            rep.failing_coefficient = (int)i;
            rep.detail = "coefficient of t^" + std::to_string(i) + " differs by " +
                         diff[i].str();
            break;
        }
    return rep;
}

IdentityReport verify_d013_belyi() { return check_d013_identity(d013_polynomials()); }

} // namespace bly
