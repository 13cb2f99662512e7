#include <doctest.h>

#include "enumerate.hpp"

using namespace enumerate;
using dsn::Dessin;
using grp::CycleType;

namespace {
PassportQuery query(const char* black, const char* white, const char* faces, int n) {
    PassportQuery q;
    q.degree = n;
    q.black = CycleType::parse(black, n);
    q.white = CycleType::parse(white, n);
    if (std::string(faces) != "-") q.faces = CycleType::parse(faces, n);
    return q;
}
} // namespace

TEST_CASE("partitions of n") {
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(11).size() == 56);
    auto p5 = partitions_of(5);
    CHECK(p5.front() == std::vector<int>{5});
    CHECK(p5.back() == std::vector<int>{1, 1, 1, 1, 1});
}

TEST_CASE("the ten degree-11 plane trees") {
    auto ds = enumerate_passport(query("3^3,1^2", "2^4,1^3", "-", 11));
    REQUIRE(ds.size() == 10);
    for (const auto& d : ds) {
        CHECK(d.passport().str() == "(3^3,1^2; 2^4,1^3; 11^1)");
        CHECK(dsn::genus(d) == 0);
        CHECK(dsn::canonical_form(d) == d);
    }
    auto part = chirality_partition(ds);
    CHECK(part.symmetric.size() == 2);
    CHECK(part.pairs.size() == 4);
}

TEST_CASE("unique dessin with the degree-12 passport") {
    auto ds = enumerate_passport(query("3^4", "2^6", "11^1,1^1", 12));
    CHECK(ds.size() == 1);
}

TEST_CASE("degree-13 plane trees") {
    auto ds = enumerate_passport(query("3^4,1^1", "2^4,1^5", "13^1", 13));
    CHECK(ds.size() == 14);
}

TEST_CASE("degree-14 passport with thirty classes") {
    auto ds = enumerate_passport(query("3^4,1^2", "2^6,1^2", "13^1,1^1", 14));
    CHECK(ds.size() == 30);
}

TEST_CASE("degree-17 passport with seventy classes") {
    auto ds = enumerate_passport(query("3^5,1^2", "2^8,1^1", "17^1", 17));
    CHECK(ds.size() == 70);
}

TEST_CASE("sixteen degree-11 maps with two faces, by face split") {
    auto buckets = enumerate_type_degree11();
    REQUIRE(buckets.size() == 5);
    auto count = [&](std::vector<int> key) {
        auto it = buckets.find(key);
        return it == buckets.end() ? (size_t)0 : it->second.size();
    };
    CHECK(count({10, 1}) == 6);
    CHECK(count({9, 2}) == 3);
    CHECK(count({8, 3}) == 2);
    CHECK(count({7, 4}) == 3);
    CHECK(count({6, 5}) == 2);
    std::vector<Dessin> all;
    for (auto& [k, v] : buckets) all.insert(all.end(), v.begin(), v.end());
    CHECK(all.size() == 16);
    auto part = chirality_partition(all);
    CHECK(part.symmetric.size() == 4);
    CHECK(part.pairs.size() == 6);
}

TEST_CASE("output is mirror-closed and canonical") {
    auto ds = enumerate_passport(query("3^3,1^2", "2^5,1^1", "9^1,2^1", 11));
    CHECK(ds.size() == 3);
    for (const auto& d : ds) {
        Dessin m = dsn::canonical_form(dsn::mirror(d));
        CHECK(std::find(ds.begin(), ds.end(), m) != ds.end());
    }
    // dropping one member of a chiral pair is detected
    auto part = chirality_partition(ds);
    REQUIRE(part.pairs.size() == 1);
    std::vector<Dessin> broken;
    for (const auto& d : ds)
        if (!(dsn::canonical_form(d) == dsn::canonical_form(part.pairs[0].second)))
            broken.push_back(d);
    CHECK_THROWS_AS(chirality_partition(broken), ListNotMirrorClosed);
}

TEST_CASE("pruned search agrees with the naive oracle at small degree") {
    EnumerateOptions naive;
    naive.prune = false;
    const char* cases[][4] = {
        {"3^3,1^2", "2^4,1^3", "11^1", "11"},
        {"3^4", "2^6", "11^1,1^1", "12"},
        {"3^4,1^1", "2^4,1^5", "13^1", "13"},
        {"2^4,1^2", "2^4,1^2", "5^2", "10"},
    };
    for (auto& c : cases) {
        auto q = query(c[0], c[1], c[2], std::stoi(c[3]));
        auto fast = enumerate_passport(q);
        auto slow = enumerate_passport(q, naive);
        CHECK(fast.size() == slow.size());
        CHECK(fast == slow);
    }
}

TEST_CASE("result is independent of worker count") {
    auto q = query("3^3,1^2", "2^4,1^3", "-", 11);
    EnumerateOptions one, two;
    one.threads = 1;
    two.threads = 2;
    CHECK(enumerate_passport(q, one) == enumerate_passport(q, two));
}

TEST_CASE("budget violations fail loudly") {
    auto q = query("3^8,1^1", "2^12,1^1", "25^1", 25);
    CHECK_THROWS_AS(enumerate_passport(q), DegreeTooLarge);
    auto small = query("3^5,1^2", "2^8,1^1", "17^1", 17);
    EnumerateOptions opts;
    opts.candidate_budget = 100;
    CHECK_THROWS_AS(enumerate_passport(small, opts), DegreeTooLarge);
}
