#include <doctest.h>

#include "dessin.hpp"

#include <random>
#include <sstream>

using namespace dsn;
using grp::Permutation;
using grp::parse_cycles;

namespace {
Dessin m1() {
    return Dessin(parse_cycles("(1,4,3)(5,11,9)(6,8,7)", 11),
                  parse_cycles("(1,2)(4,11)(5,8)(9,10)", 11), "M1");
}
Dessin m2() {
    return Dessin(parse_cycles("(1,4,2)(5,11,9)(6,8,7)", 11),
                  parse_cycles("(2,3)(4,11)(5,8)(9,10)", 11), "M2");
}
Dessin m5() {
    return Dessin(parse_cycles("(1,11,6)(2,5,4)(7,10,8)", 11),
                  parse_cycles("(1,5)(2,3)(6,10)(8,9)", 11), "M5");
}
} // namespace

TEST_CASE("dessin construction derives z and validates transitivity") {
    Dessin d = m5();
    CHECK(grp::print_cycles(d.z()) == "(1,2,3,4,5,6,7,8,9,10,11)");
    Dessin trivial(Permutation(1), Permutation(1));
    CHECK(trivial.degree() == 1);
    CHECK(genus(trivial) == 0);
    CHECK_THROWS_AS(Dessin(parse_cycles("(1,2,3)", 5), parse_cycles("(4,5)", 5)),
                    NotTransitive);
}

TEST_CASE("passports") {
    CHECK(m1().passport().str() == "(3^3,1^2; 2^4,1^3; 11^1)");
    CHECK(m5().passport().str() == "(3^3,1^2; 2^4,1^3; 11^1)");
    Dessin d = m1();
    CHECK(mirror(d).passport() == d.passport());
}

TEST_CASE("genus of known dessins") {
    CHECK(genus(m1()) == 0);
    CHECK(genus(m2()) == 0);
    CHECK(genus(m5()) == 0);
    CHECK(genus(mirror(m1())) == genus(m1()));
}

TEST_CASE("regular cover genus formulas") {
    CHECK(regular_cover_genus(11, 660) == 26);
    CHECK(regular_cover_genus(11, 19958400) == 756001);
    CHECK(regular_cover_genus(31, 372000) == 25001);
    CHECK_THROWS_AS(regular_cover_genus(11, 661), NonIntegralGenus);
    CHECK_THROWS_AS(regular_cover_genus(5, 660), NonIntegralGenus);

    CHECK(regular_cover_genus_general(10) == 1330561);
    CHECK(regular_cover_genus_general(18) == 2217601);
    CHECK(regular_cover_genus_general(24) == 2494801);
    CHECK(regular_cover_genus_general(28) == 2613601);
    CHECK(regular_cover_genus_general(30) == 2661121);
}

TEST_CASE("mirror is an involution up to isomorphism") {
    for (const Dessin& d : {m1(), m2(), m5()}) {
        Dessin mm = mirror(mirror(d));
        CHECK(are_isomorphic(d, mm).has_value());
        CHECK(canonical_form(mm) == canonical_form(d));
    }
}

TEST_CASE("chirality of the degree-11 tree representatives") {
    // M5 has bilateral symmetry, witnessed by an explicit inverting permutation
    Dessin d5 = m5();
    auto t = are_isomorphic(d5, mirror(d5));
    REQUIRE(t.has_value());
    CHECK(grp::conjugate(d5.x(), *t) == grp::inverse(d5.x()));
    CHECK(grp::conjugate(d5.y(), *t) == grp::inverse(d5.y()));
    Permutation paper_t = parse_cycles("(1,6)(2,8)(3,9)(4,7)(5,10)", 11);
    CHECK(grp::conjugate(d5.x(), paper_t) == grp::inverse(d5.x()));
    CHECK(grp::conjugate(d5.y(), paper_t) == grp::inverse(d5.y()));

    // M1 is chiral: not isomorphic to its mirror image
    Dessin d1 = m1();
    CHECK_FALSE(are_isomorphic(d1, mirror(d1)).has_value());
    // and distinct representatives are non-isomorphic
    CHECK_FALSE(are_isomorphic(d1, m2()).has_value());
}

TEST_CASE("canonical form is idempotent and relabeling-invariant") {
    std::mt19937 rng(2024);
    for (const Dessin& d : {m1(), m2(), m5()}) {
        Dessin c = canonical_form(d);
        CHECK(canonical_form(c) == c);
        for (int k = 0; k < 5; ++k) {
            std::vector<int> img(d.degree());
            for (int i = 0; i < d.degree(); ++i) img[i] = i;
            std::shuffle(img.begin(), img.end(), rng);
            Permutation t{img};
            Dessin relabeled(grp::conjugate(d.x(), t), grp::conjugate(d.y(), t));
            CHECK(canonical_form(relabeled) == c);
            auto conj = are_isomorphic(d, relabeled);
            REQUIRE(conj.has_value());
            CHECK(grp::conjugate(d.x(), *conj) == relabeled.x());
        }
    }
    CHECK(canonical_form(m1()) != canonical_form(m2()));
}

TEST_CASE("monodromy order is invariant under mirror and conjugation") {
    Dessin d = m1();
    CHECK((unsigned long long)monodromy_order(d) == 660ull);
    CHECK((unsigned long long)monodromy_order(mirror(d)) == 660ull);
    CHECK((unsigned long long)monodromy_order(m2()) == 19958400ull);
}

TEST_CASE("dessin text format round trips") {
    std::vector<Dessin> ds{m1(), m5(), Dessin(Permutation(1), Permutation(1))};
    std::ostringstream os;
    write_dessins(os, ds);
    std::istringstream is(os.str());
    auto back = read_dessins(is);
    REQUIRE(back.size() == ds.size());
    for (size_t i = 0; i < ds.size(); ++i) {
        CHECK(back[i] == ds[i]);
        CHECK(back[i].label() == ds[i].label());
    }
    // comments and blank lines are tolerated
    std::istringstream is2("# header\n\ndegree: 11\nx: (1,4,3)(5,11,9)(6,8,7)\n"
                           "y: (1,2)(4,11)(5,8)(9,10)\nlabel: M1\n");
    auto one = read_dessins(is2);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == m1());
}
