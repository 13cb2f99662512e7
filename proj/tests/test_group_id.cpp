#include <doctest.h>

#include "enumerate.hpp"
#include "group_id.hpp"
#include "primes.hpp"

using namespace gid;
using enumerate::enumerate_passport;
using enumerate::enumerate_type_degree11;
using dsn::Dessin;
using grp::parse_cycles;

namespace {
Dessin klein(int i) {
    static const char* xs[] = {
        "(1,4,3)(5,11,9)(6,8,7)", "(1,4,2)(5,11,9)(6,8,7)", "(1,3,2)(4,11,10)(5,9,7)",
        "(1,4,3)(5,11,10)(6,9,8)", "(1,11,6)(2,5,4)(7,10,8)", "(1,11,6)(2,5,3)(7,10,9)"};
    static const char* ys[] = {
        "(1,2)(4,11)(5,8)(9,10)", "(2,3)(4,11)(5,8)(9,10)", "(3,11)(4,9)(5,6)(7,8)",
        "(1,2)(4,11)(5,9)(6,7)", "(1,5)(2,3)(6,10)(8,9)", "(1,5)(3,4)(6,10)(7,8)"};
    return Dessin(parse_cycles(xs[i - 1], 11), parse_cycles(ys[i - 1], 11));
}
} // namespace

TEST_CASE("projective orders") {
    CHECK((unsigned long long)projective_order(2, 4) == 60ull);
    CHECK((unsigned long long)projective_order(3, 2) == 168ull);
    CHECK((unsigned long long)projective_order(3, 3) == 5616ull);
    CHECK((unsigned long long)projective_order(5, 2) == 9999360ull);
    CHECK((unsigned long long)projective_order(3, 5) == 372000ull);
    CHECK((unsigned long long)projective_order(2, 16) == 4080ull);
    CHECK((unsigned long long)projective_order(3, 8) == 16482816ull);
    CHECK_THROWS_AS(projective_order(2, 13), GcdNotOne); // PSL2(13) != SL2(13)
    CHECK_THROWS_AS(projective_order(2, 5), GcdNotOne);  // gcd(2,4) != 1
    CHECK_THROWS_AS(projective_order(3, 4), GcdNotOne);
}

TEST_CASE("Jordan criterion on the degree-11 trees") {
    CHECK_FALSE(jordan_criterion(klein(1))); // PSL2(11), no witness exists
    for (int i = 2; i <= 6; ++i) CHECK(jordan_criterion(klein(i)));
    // imprimitive input is rejected
    Dessin imprimitive(parse_cycles("(1,2,3,4)", 4), parse_cycles("(1,3)", 4));
    CHECK_THROWS_AS(jordan_criterion(imprimitive), NotPrimitive);
}

TEST_CASE("identification at prime degree") {
    auto l1 = identify_prime_degree(klein(1));
    CHECK(l1.family == Family::PSL);
    CHECK(l1.n == 2);
    CHECK(l1.q == 11);
    CHECK((unsigned long long)l1.order == 660ull);
    CHECK(l1.str() == "PSL(2,11)");

    int psl_count = 0, alt_count = 0;
    auto ds = enumerate_passport(
        {grp::CycleType::parse("3^3,1^2"), grp::CycleType::parse("2^4,1^3"), std::nullopt, 11});
    REQUIRE(ds.size() == 10);
    for (const auto& d : ds) {
        auto l = identify_prime_degree(d);
        if (l.family == Family::PSL) ++psl_count;
        if (l.family == Family::Alt) ++alt_count;
        CHECK(identify(dsn::mirror(d)) == l);
    }
    CHECK(psl_count == 2);
    CHECK(alt_count == 8);

    // appendix degree-13 triple: monodromy PSL(3,3)
    Dessin m13(parse_cycles("(2,13,6)(3,5,4)(7,12,11)(8,10,9)", 13),
               parse_cycles("(1,13)(2,5)(6,12)(7,10)", 13));
    auto l13 = identify_prime_degree(m13);
    CHECK(l13.str() == "PSL(3,3)");
    CHECK((unsigned long long)l13.order == 5616ull);

    // degree-11 maps with two faces all have monodromy S11
    auto buckets = enumerate_type_degree11();
    for (auto& [split, list] : buckets)
        for (const auto& d : list) {
            auto l = identify_prime_degree(d);
            CHECK(l.family == Family::Sym);
            CHECK((unsigned long long)l.order == 39916800ull);
        }
}

TEST_CASE("identification at degree p+1") {
    // D0(11): unique dessin with passport (3^4; 2^6; 11^1 1^1)
    auto ds = enumerate_passport({grp::CycleType::parse("3^4"), grp::CycleType::parse("2^6"),
                                  grp::CycleType::parse("11^1,1^1"), 12});
    REQUIRE(ds.size() == 1);
    auto l = identify_degree_p_plus_1(ds[0]);
    CHECK(l.str() == "PSL(2,11)");
    CHECK((unsigned long long)l.order == 660ull);

    // each of the two M12 passports contains one chiral pair of M12 dessins
    const char* m12_passports[][2] = {{"3^3,1^3", "2^6"}, {"3^4", "2^4,1^4"}};
    for (auto& pp : m12_passports) {
        auto m12s = enumerate_passport({grp::CycleType::parse(pp[0]),
                                        grp::CycleType::parse(pp[1]),
                                        grp::CycleType::parse("11^1,1^1"), 12});
        std::vector<dsn::Dessin> hits;
        for (const auto& d : m12s) {
            auto lab = identify_degree_p_plus_1(d);
            if (lab.family == Family::M12) {
                hits.push_back(d);
                CHECK((unsigned long long)lab.order == 95040ull);
            }
        }
        REQUIRE(hits.size() == 2);
        auto part = enumerate::chirality_partition(hits);
        CHECK(part.symmetric.empty());
        CHECK(part.pairs.size() == 1);
    }

    // degree-14 dessins over a 13-cycle: 1 PSL2(13), 29 A14
    auto d14 = enumerate_passport({grp::CycleType::parse("3^4,1^2"),
                                   grp::CycleType::parse("2^6,1^2"),
                                   grp::CycleType::parse("13^1,1^1"), 14});
    REQUIRE(d14.size() == 30);
    int psl = 0, alt = 0;
    for (const auto& d : d14) {
        auto lab = identify_degree_p_plus_1(d);
        if (lab.family == Family::PSL && lab.q == 13) ++psl;
        if (lab.family == Family::Alt) {
            ++alt;
            CHECK((unsigned long long)lab.order == 43589145600ull); // 14!/2
        }
    }
    CHECK(psl == 1);
    CHECK(alt == 29);
}

TEST_CASE("candidate separation sanity") {
    for (long long p : {7, 11, 13, 17, 31}) {
        auto half = [](long long m) {
            grp::u128 f = 1;
            for (long long i = 2; i <= m; ++i) f *= (grp::u128)i;
            return f / 2;
        };
        for (const auto& pr : primes::projective_decompositions(p).pairs)
            CHECK(projective_order(pr.n, pr.q) < half(p));
    }
}

TEST_CASE("identify dispatch") {
    auto l = identify(klein(2));
    CHECK(l.family == Family::Alt);
    CHECK((unsigned long long)l.order == 19958400ull);
    // degree 9 (neither prime nor p+1 with a p-cycle) falls back to the order
    Dessin d9(parse_cycles("(1,2,3)(4,5,6)(7,8,9)", 9), parse_cycles("(1,4)(2,7)", 9));
    auto u = identify(d9);
    CHECK(u.family == Family::Unknown);
    CHECK((unsigned long long)u.order > 0);
}
