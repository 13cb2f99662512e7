#include <doctest.h>

#include "perm.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace grp;

TEST_CASE("cycle notation round trip is bit exact") {
    const char* samples[] = {
        "(1,4,3)(5,11,9)(6,8,7)",
        "(1,2)(4,11)(5,8)(9,10)",
        "(1,2,3,4,5,6,7,8,9,10,11)",
        "()",
    };
    for (const char* s : samples) {
        Permutation p = parse_cycles(s, 11);
        CHECK(print_cycles(p) == s);
        CHECK(parse_cycles(print_cycles(p), 11) == p);
    }
}

TEST_CASE("parser normalizes cycle rotation and order") {
    Permutation p = parse_cycles("(9,10)(11,4)(8,5)(2,1)", 11);
    CHECK(print_cycles(p) == "(1,2)(4,11)(5,8)(9,10)");
    CHECK_THROWS_AS(parse_cycles("(1,2)(2,3)", 5), std::invalid_argument);
    CHECK_THROWS_AS(parse_cycles("(0,1)", 5), std::invalid_argument);
    CHECK_THROWS_AS(parse_cycles("(1,6)", 5), std::invalid_argument);
}

TEST_CASE("composition is left to right") {
    Permutation x = parse_cycles("(1,2,3)", 3);
    Permutation y = parse_cycles("(1,2)", 3);
    // i -> y(x(i)): 1 -> x 2 -> y 1, so compose(x,y) fixes 1? 1->2->1 yes.
    Permutation xy = compose(x, y);
    CHECK(xy[0] == 0);
    CHECK(print_cycles(xy) == "(2,3)");
    CHECK(compose(x, inverse(x)).is_identity());
    CHECK(compose(inverse(x), x).is_identity());
}

TEST_CASE("conjugation relabels cycles") {
    Permutation p = parse_cycles("(1,2,3)", 5);
    Permutation t = parse_cycles("(1,4)(2,5)", 5);
    Permutation c = conjugate(p, t);
    CHECK(print_cycles(c) == "(3,4,5)");
    CHECK(cycle_type(c) == cycle_type(p));
    // conjugate(p, t) == t^-1 p t under left-to-right composition
    CHECK(c == compose(compose(inverse(t), p), t));
}

TEST_CASE("cycle type formatting and parsing") {
    Permutation x = parse_cycles("(1,4,3)(5,11,9)(6,8,7)", 11);
    CHECK(cycle_type(x).str() == "3^3,1^2");
    CHECK(CycleType::parse("3^3,1^2") == cycle_type(x));
    CHECK(CycleType::parse("3^3,1^2", 11) == cycle_type(x));
    CHECK_THROWS_AS(CycleType::parse("3^3,1^2", 12), std::invalid_argument);
    CHECK(CycleType::parse("1^2,3^3").str() == "3^3,1^2"); // normalized descending
    CHECK(cycle_count(x) == 5);
    CHECK(element_order(x) == 3);
    CHECK(is_even(x));
    CHECK_FALSE(is_even(parse_cycles("(1,2)", 4)));
}

TEST_CASE("powers and element orders") {
    Permutation z = parse_cycles("(1,2,3,4,5,6,7,8,9,10,11)", 11);
    CHECK(element_order(z) == 11);
    CHECK(power(z, 11).is_identity());
    CHECK(power(z, -1) == inverse(z));
    CHECK(power(z, 12) == z);
}

TEST_CASE("orbits, transitivity, primitivity") {
    Permutation a = parse_cycles("(1,2)(3,4)", 4);
    Permutation b = parse_cycles("(1,3)(2,4)", 4);
    CHECK(is_transitive({a, b}, 4));
    CHECK_FALSE(is_primitive({a, b})); // Klein four-group acting regularly

    Permutation c = parse_cycles("(1,2,3,4)", 4);
    CHECK_FALSE(is_primitive({c})); // C4 has blocks {1,3},{2,4}

    Permutation s = parse_cycles("(1,2)", 4);
    CHECK(is_primitive({c, s})); // S4 natural action

    Permutation d = parse_cycles("(1,2,3)", 5);
    CHECK_FALSE(is_transitive({d}, 5));
    CHECK_THROWS_AS(is_primitive({d}), not_transitive_error);

    auto orb = orbit_of({d}, 0);
    CHECK(orb == std::vector<int>{0, 1, 2});
}

TEST_CASE("orders of known groups via stabilizer chain") {
    // triple generating PSL(2,11) in its degree-11 action
    Permutation x1 = parse_cycles("(1,4,3)(5,11,9)(6,8,7)", 11);
    Permutation y1 = parse_cycles("(1,2)(4,11)(5,8)(9,10)", 11);
    CHECK((unsigned long long)PermGroup({x1, y1}).order() == 660ull);
    CHECK(element_order(compose(x1, y1)) == 11);

    // triple generating A11
    Permutation x2 = parse_cycles("(1,4,2)(5,11,9)(6,8,7)", 11);
    Permutation y2 = parse_cycles("(2,3)(4,11)(5,8)(9,10)", 11);
    CHECK((unsigned long long)PermGroup({x2, y2}).order() == 19958400ull);

    // symmetric and alternating groups
    Permutation z7 = parse_cycles("(1,2,3,4,5,6,7)", 7);
    Permutation t7 = parse_cycles("(1,2)", 7);
    CHECK((unsigned long long)PermGroup({z7, t7}).order() == 5040ull);
    Permutation u7 = parse_cycles("(1,2,3)", 7);
    CHECK((unsigned long long)PermGroup({z7, u7}).order() == 2520ull);

    CHECK_FALSE(PermGroup({x1, y1}).order_overflows());
}

TEST_CASE("membership agrees with brute-force closure on small groups") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 8; ++trial) {
        int n = 5 + (int)(rng() % 3); // degree 5..7
        auto random_perm = [&] {
            std::vector<int> img(n);
            for (int i = 0; i < n; ++i) img[i] = i;
            std::shuffle(img.begin(), img.end(), rng);
            return Permutation(img);
        };
        std::vector<Permutation> gens{random_perm(), random_perm()};
        // brute-force closure
        std::set<Permutation> closure(gens.begin(), gens.end());
        closure.insert(Permutation(n));
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<Permutation> cur(closure.begin(), closure.end());
            for (const auto& a : cur)
                for (const auto& g : gens)
                    if (closure.insert(compose(a, g)).second) grew = true;
        }
        PermGroup G(gens);
        CHECK((unsigned long long)G.order() == closure.size());
        // every closure element is a member; a random non-member is rejected
        for (const auto& h : closure) CHECK(G.membership(h));
        for (int k = 0; k < 20; ++k) {
            Permutation r = random_perm();
            CHECK(G.membership(r) == (closure.count(r) > 0));
        }
    }
}

TEST_CASE("commutator cycle structures for the degree-11 triples") {
    struct Row {
        const char* x;
        const char* y;
        const char* comm_type;
    };
    // [x,y] = x^-1 y^-1 x y
    const Row rows[] = {
        {"(1,4,3)(5,11,9)(6,8,7)", "(1,2)(4,11)(5,8)(9,10)", "5^2,1^1"},
        {"(1,4,2)(5,11,9)(6,8,7)", "(2,3)(4,11)(5,8)(9,10)", "7^1,3^1,1^1"},
        {"(1,3,2)(4,11,10)(5,9,7)", "(3,11)(4,9)(5,6)(7,8)", "8^1,2^1,1^1"},
        {"(1,4,3)(5,11,10)(6,9,8)", "(1,2)(4,11)(5,9)(6,7)", "5^1,4^1,2^1"},
        {"(1,11,6)(2,5,4)(7,10,8)", "(1,5)(2,3)(6,10)(8,9)", "7^1,2^2"},
        {"(1,11,6)(2,5,3)(7,10,9)", "(1,5)(3,4)(6,10)(7,8)", "4^2,3^1"},
    };
    for (const auto& r : rows) {
        Permutation x = parse_cycles(r.x, 11);
        Permutation y = parse_cycles(r.y, 11);
        Permutation comm = compose(compose(inverse(x), inverse(y)), compose(x, y));
        CHECK(cycle_type(comm).str() == r.comm_type);
    }
}

TEST_CASE("u128 order printing") {
    CHECK(u128_to_string(0) == "0");
    CHECK(u128_to_string(19958400) == "19958400");
    u128 big = (u128)1 << 100;
    CHECK(u128_to_string(big) == "1267650600228229401496703205376");
}
