#include "perm.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace grp {

std::string u128_to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(char('0' + (int)(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

Permutation::Permutation(int n) : img_(n) {
    std::iota(img_.begin(), img_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
        if (v < 0 || v >= (int)img_.size() || seen[v])
            throw std::invalid_argument("image array is not a bijection");
        seen[v] = 1;
    }
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (img_[i] != i) return false;
    return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree()) throw degree_mismatch();
    std::vector<int> r(p.degree());
    for (int i = 0; i < p.degree(); ++i) r[i] = q[p[i]];
    return Permutation(std::move(r));
}

Permutation inverse(const Permutation& p) {
    std::vector<int> r(p.degree());
    for (int i = 0; i < p.degree(); ++i) r[p[i]] = i;
    return Permutation(std::move(r));
}

Permutation conjugate(const Permutation& p, const Permutation& t) {
    if (p.degree() != t.degree()) throw degree_mismatch();
    std::vector<int> r(p.degree());
    for (int i = 0; i < p.degree(); ++i) r[t[i]] = t[p[i]];
    return Permutation(std::move(r));
}

Permutation power(const Permutation& p, long long e) {
    int n = p.degree();
    if (e < 0) return power(inverse(p), -e);
    Permutation acc(n), base = p;
    while (e > 0) {
        if (e & 1) acc = compose(acc, base);
        base = compose(base, base);
        e >>= 1;
    }
    return acc;
}

int element_order(const Permutation& p) {
    long long ord = 1;
    for (auto [len, mult] : cycle_type(p).parts)
        ord = std::lcm(ord, (long long)len);
    return (int)ord;
}

bool is_even(const Permutation& p) {
    int transpositions = 0;
    for (auto [len, mult] : cycle_type(p).parts) transpositions += (len - 1) * mult;
    return transpositions % 2 == 0;
}

int CycleType::degree() const {
    int n = 0;
    for (auto [len, mult] : parts) n += len * mult;
    return n;
}

std::vector<int> CycleType::lengths() const {
    std::vector<int> out;
    for (auto [len, mult] : parts)
        for (int i = 0; i < mult; ++i) out.push_back(len);
    return out;
}

CycleType CycleType::from_lengths(std::vector<int> ls) {
    std::sort(ls.begin(), ls.end(), std::greater<int>());
    CycleType t;
    for (size_t i = 0; i < ls.size();) {
        size_t j = i;
        while (j < ls.size() && ls[j] == ls[i]) ++j;
        t.parts.push_back({ls[i], (int)(j - i)});
        i = j;
    }
    return t;
}

std::string CycleType::str() const {
    std::ostringstream os;
    bool first = true;
    for (auto [len, mult] : parts) {
        if (!first) os << ',';
        first = false;
        os << len << '^' << mult;
    }
    return os.str();
}

CycleType CycleType::parse(const std::string& s, int expected_degree) {
    std::vector<int> lens;
    size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && std::isspace((unsigned char)s[i])) ++i; };
    auto read_int = [&]() -> int {
        skip_ws();
        size_t j = i;
        while (j < s.size() && std::isdigit((unsigned char)s[j])) ++j;
        if (j == i) throw std::invalid_argument("bad cycle type: " + s);
        int v = std::stoi(s.substr(i, j - i));
        i = j;
        return v;
    };
    while (true) {
        int len = read_int();
        int mult = 1;
        skip_ws();
        if (i < s.size() && s[i] == '^') {
            ++i;
            mult = read_int();
        }
        for (int k = 0; k < mult; ++k) lens.push_back(len);
        skip_ws();
        if (i >= s.size()) break;
        if (s[i] != ',') throw std::invalid_argument("bad cycle type: " + s);
        ++i;
    }
    auto t = from_lengths(std::move(lens));
    if (expected_degree >= 0 && t.degree() != expected_degree)
        throw std::invalid_argument("cycle type degree mismatch: " + s);
    return t;
}

CycleType cycle_type(const Permutation& p) {
    std::vector<char> seen(p.degree(), 0);
    std::vector<int> lens;
    for (int i = 0; i < p.degree(); ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = 1;
            j = p[j];
            ++len;
        }
        lens.push_back(len);
    }
    return CycleType::from_lengths(std::move(lens));
}

int cycle_count(const Permutation& p) {
    int c = 0;
    for (auto [len, mult] : cycle_type(p).parts) c += mult;
    return c;
}

Permutation parse_cycles(const std::string& s, int degree) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && std::isspace((unsigned char)s[i])) ++i; };
    skip_ws();
    while (i < s.size()) {
        if (s[i] != '(') throw std::invalid_argument("expected '(' in cycles: " + s);
        ++i;
        skip_ws();
        if (i < s.size() && s[i] == ')') { // "()" denotes the identity
            ++i;
            skip_ws();
            continue;
        }
        std::vector<int> cyc;
        while (true) {
            skip_ws();
            size_t j = i;
            while (j < s.size() && std::isdigit((unsigned char)s[j])) ++j;
            if (j == i) throw std::invalid_argument("expected point in cycles: " + s);
            int pt = std::stoi(s.substr(i, j - i));
            if (pt < 1 || pt > degree)
                throw std::invalid_argument("point out of range in cycles: " + s);
            cyc.push_back(pt - 1);
            i = j;
            skip_ws();
            if (i < s.size() && s[i] == ',') {
                ++i;
                continue;
            }
            if (i < s.size() && s[i] == ')') {
                ++i;
                break;
            }
            throw std::invalid_argument("expected ',' or ')' in cycles: " + s);
        }
        for (size_t k = 0; k < cyc.size(); ++k) {
            int from = cyc[k], to = cyc[(k + 1) % cyc.size()];
            if (img[from] != from)
                throw std::invalid_argument("cycles are not disjoint: " + s);
            img[from] = to;
        }
        // guard against a point mapped twice across cycles via identity check gap:
        skip_ws();
    }
    return Permutation(std::move(img));
}

std::string print_cycles(const Permutation& p) {
    std::ostringstream os;
    std::vector<char> seen(p.degree(), 0);
    bool any = false;
    for (int i = 0; i < p.degree(); ++i) {
        if (seen[i] || p[i] == i) {
            seen[i] = 1;
            continue;
        }
        os << '(';
        int j = i;
        bool first = true;
        while (!seen[j]) {
            if (!first) os << ',';
            first = false;
            os << (j + 1);
            seen[j] = 1;
            j = p[j];
        }
        os << ')';
        any = true;
    }
    if (!any) return "()";
    return os.str();
}

std::vector<int> orbit_of(const std::vector<Permutation>& gens, int point) {
    int n = gens.empty() ? point + 1 : gens[0].degree();
    std::vector<char> in(n, 0);
    std::vector<int> stack{point}, out{point};
    in[point] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const auto& g : gens) {
            int w = g[v];
            if (!in[w]) {
                in[w] = 1;
                stack.push_back(w);
                out.push_back(w);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_transitive(const std::vector<Permutation>& gens, int n) {
    if (n <= 1) return true;
    if (gens.empty()) return false;
    return (int)orbit_of(gens, 0).size() == n;
}

namespace {
// Union-find for the minimal block system containing {a, b}.
struct DSU {
    std::vector<int> p;
    explicit DSU(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        p[b] = a;
        return true;
    }
};
} // namespace

bool is_primitive(const std::vector<Permutation>& gens) {
    int n = gens.empty() ? 0 : gens[0].degree();
    if (!is_transitive(gens, n)) throw not_transitive_error();
    if (n <= 2) return true;
    for (int beta = 1; beta < n; ++beta) {
        DSU dsu(n);
        std::vector<std::pair<int, int>> queue;
        dsu.unite(0, beta);
        queue.push_back({0, beta});
        while (!queue.empty()) {
            auto [a, b] = queue.back();
            queue.pop_back();
            for (const auto& g : gens) {
                int ga = g[a], gb = g[b];
                if (dsu.unite(ga, gb)) queue.push_back({ga, gb});
            }
        }
        int root = dsu.find(0), size = 0;
        for (int i = 0; i < n; ++i)
            if (dsu.find(i) == root) ++size;
        if (size < n) return false; // nontrivial block found (size >= 2 by construction)
    }
    return true;
}

PermGroup::PermGroup(std::vector<Permutation> gens) : gens_(std::move(gens)) {
    if (gens_.empty()) throw std::invalid_argument("PermGroup needs at least one generator");
    n_ = gens_[0].degree();
    for (const auto& g : gens_)
        if (g.degree() != n_) throw degree_mismatch();
}

std::vector<Permutation> PermGroup::level_gens(size_t i) const {
    std::vector<Permutation> out;
    for (size_t j = i; j < levels_.size(); ++j)
        out.insert(out.end(), levels_[j].gens.begin(), levels_[j].gens.end());
    return out;
}

void PermGroup::rebuild_orbit(size_t level) const {
    const std::vector<Permutation> gens = level_gens(level);
    Level& L = levels_[level];
    L.orbit.clear();
    L.where.assign(n_, -1);
    L.transv.assign(n_, Permutation());
    L.orbit.push_back(L.base);
    L.where[L.base] = 0;
    L.transv[L.base] = Permutation(n_);
    for (size_t qi = 0; qi < L.orbit.size(); ++qi) {
        int v = L.orbit[qi];
        for (const auto& g : gens) {
            int w = g[v];
            if (L.where[w] < 0) {
                L.where[w] = (int)L.orbit.size();
                L.orbit.push_back(w);
                L.transv[w] = compose(L.transv[v], g);
            }
        }
    }
}

std::pair<Permutation, size_t> PermGroup::sift(const Permutation& g, size_t from) const {
    Permutation h = g;
    for (size_t i = from; i < levels_.size(); ++i) {
        if (h.is_identity()) return {h, i};
        int img = h[levels_[i].base];
        if (levels_[i].where[img] < 0) return {h, i};
        h = compose(h, inverse(levels_[i].transv[img]));
    }
    return {h, levels_.size()};
}

void PermGroup::place(const Permutation& g, size_t level) const {
    if (level == levels_.size()) {
        int b = -1;
        for (int i = 0; i < n_; ++i)
            if (g[i] != i) {
                b = i;
                break;
            }
        if (b < 0) return; // identity
        levels_.push_back(Level{});
        levels_.back().base = b;
    }
    levels_[level].gens.push_back(g);
}

void PermGroup::complete(size_t i) const {
    if (i >= levels_.size()) return;
    for (;;) {
        complete(i + 1);
        rebuild_orbit(i);
        const std::vector<Permutation> gens = level_gens(i);
        const std::vector<int> orbit = levels_[i].orbit;
        const std::vector<Permutation> transv = levels_[i].transv;
        bool added = false;
        for (size_t qi = 0; qi < orbit.size() && !added; ++qi) {
            int v = orbit[qi];
            for (const auto& s : gens) {
                Permutation sg = compose(compose(transv[v], s), inverse(transv[s[v]]));
                auto [res, lev] = sift(sg, i + 1);
                if (!res.is_identity()) {
                    place(res, lev);
                    added = true;
                    break;
                }
            }
        }
        if (!added) return;
    }
}

void PermGroup::build() const {
    if (built_) return;
    for (const auto& g : gens_) {
        if (g.is_identity()) continue;
        auto [res, lev] = sift(g);
        if (!res.is_identity()) {
            place(res, lev);
            complete(lev);
        }
        // make earlier orbits current before sifting the next generator
        for (size_t j = levels_.size(); j-- > 0;) rebuild_orbit(j);
    }
    complete(0);
    built_ = true;
}

u128 PermGroup::order() const {
    build();
    u128 o = 1;
    for (const auto& L : levels_) {
        u128 prev = o;
        o *= (u128)L.orbit.size();
        if (o / (u128)L.orbit.size() != prev)
            throw std::overflow_error("group order exceeds 128 bits");
    }
    return o;
}

bool PermGroup::order_overflows() const {
    build();
    u128 o = 1;
    for (const auto& L : levels_) {
        u128 prev = o;
        o *= (u128)L.orbit.size();
        if (o / (u128)L.orbit.size() != prev) return true;
    }
    return false;
}

bool PermGroup::membership(const Permutation& p) const {
    if (p.degree() != n_) throw degree_mismatch();
    build();
    auto [res, lev] = sift(p);
    return res.is_identity();
}

} // namespace grp
