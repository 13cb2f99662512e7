#pragma once

// Exact verification of the published Shabat/Belyi factorizations: the
// degree-11 Shabat polynomial over Q(sqrt(-11)) and the degree-14 planar
// Belyi function over Q. Everything is plain rational arithmetic; there are
// no tolerances anywhere in this module.

#include "char_count.hpp" // chr::Rational

#include <string>
#include <vector>

namespace bly {

using chr::Rational;

// a + b*sqrt(-11)
struct QuadElem {
    Rational a, b;
    QuadElem() = default;
    QuadElem(Rational a, Rational b = Rational(0)) : a(a), b(b) {}
    QuadElem(long long a) : a(Rational(a)) {}
    bool is_zero() const { return a == Rational(0) && b == Rational(0); }
    bool operator==(const QuadElem& o) const { return a == o.a && b == o.b; }
    bool operator!=(const QuadElem& o) const { return !(*this == o); }
    std::string str() const;
};

QuadElem operator+(const QuadElem& x, const QuadElem& y);
QuadElem operator-(const QuadElem& x, const QuadElem& y);
QuadElem operator*(const QuadElem& x, const QuadElem& y);
QuadElem quad_conj(const QuadElem& x); // a - b*sqrt(-11)

// dense coefficients, ascending degree; trailing zeros trimmed by the ops
using QuadPoly = std::vector<QuadElem>;

int poly_degree(const QuadPoly& p); // -1 for the zero polynomial
QuadPoly poly_add(const QuadPoly& p, const QuadPoly& q);
QuadPoly poly_sub(const QuadPoly& p, const QuadPoly& q);
QuadPoly poly_mul(const QuadPoly& p, const QuadPoly& q);
QuadPoly poly_pow(const QuadPoly& p, int e);
QuadPoly poly_conj(const QuadPoly& p); // coefficient-wise conjugation

// The published factors, with sqrt(-11) replaced by sign_of_sqrt*sqrt(-11).
// The constant term of q3 is ambiguous in the source (a stray parenthesis),
// so both readings are carried: -(175 + 279*sqrt(-11)) and -454*sqrt(-11).
struct KleinPolys {
    QuadPoly p1, p2, p3, q1, q2;
    QuadPoly q3_sum;    // constant term -(175 + 279*sqrt(-11))
    QuadPoly q3_concat; // constant term -454*sqrt(-11)
};
KleinPolys klein_shabat_polynomials(int sign_of_sqrt);

struct IdentityReport {
    bool ok = false;
    std::string resolved_reading; // "175+279*sqrt(-11)" or "454*sqrt(-11)"
    int qside_sign = 0;           // s in p1^3 p2^3 p3 - 2^12*3^14 = s*2*q1^2 q2^2 q3
    int failing_coefficient = -1; // least mismatching degree when !ok
    std::string detail;
};

// Check p1^3 p2^3 p3 - 2^12*3^14 = s*2*q1^2 q2^2 q3 for one fixed q3 and s.
IdentityReport check_klein_identity(const KleinPolys& kp, const QuadPoly& q3, int s);
// Try both q3 readings and both signs; ok iff exactly one combination works.
IdentityReport verify_klein_shabat(int sign_of_sqrt = 1);

// The two published degree-14 numerators of the planar degree-14 Belyi
// function: A = (t^4-7t^3+20t^2-19t+1)^3 (t^2-5t+13) for f and
// B = (t^6-10t^5+46t^4-108t^3+122t^2-38t-1)^2 (t^2-6t+13) for f-1,
// where f = -A/(1728 t). f - (f-1) = 1 is equivalent to A + 1728 t = B.
struct D013Polys {
    QuadPoly a_core, a_factor, b_core, b_factor;
};
D013Polys d013_polynomials();
IdentityReport check_d013_identity(const D013Polys& dp);
IdentityReport verify_d013_belyi();

} // namespace bly
