#include "constructions.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <map>
#include <set>

namespace cons {

namespace {

long long mod_p(long long v, long long p) { return ((v % p) + p) % p; }

long long inv_mod(long long a, long long p) {
    long long r = 1, e = p - 2, b = mod_p(a, p);
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

} // namespace

ProjMat2 ProjMat2::from_mobius(long long p, long long a, long long b, long long c,
                               long long d) {
    if (p < 2) throw std::invalid_argument("modulus must be a prime >= 2");
    ProjMat2 g;
    g.p = p;
    g.m[0][0] = mod_p(a, p);
    g.m[0][1] = mod_p(c, p);
    g.m[1][0] = mod_p(b, p);
    g.m[1][1] = mod_p(d, p);
    if (mod_p(g.m[0][0] * g.m[1][1] - g.m[0][1] * g.m[1][0], p) != 1)
        throw std::invalid_argument("matrix is not unimodular mod p");
    // normalize the global sign: first nonzero entry in 1..(p-1)/2
    long long flat[4] = {g.m[0][0], g.m[0][1], g.m[1][0], g.m[1][1]};
    for (long long v : flat) {
        if (v == 0) continue;
        if (p > 2 && v > (p - 1) / 2)
            for (auto& row : g.m)
                for (auto& e : row) e = mod_p(-e, p);
        break;
    }
    return g;
}

bool ProjMat2::operator==(const ProjMat2& o) const {
    return p == o.p && m[0][0] == o.m[0][0] && m[0][1] == o.m[0][1] && m[1][0] == o.m[1][0] &&
           m[1][1] == o.m[1][1];
}

bool ProjMat2::operator<(const ProjMat2& o) const {
    long long a[5] = {p, m[0][0], m[0][1], m[1][0], m[1][1]};
    long long b[5] = {o.p, o.m[0][0], o.m[0][1], o.m[1][0], o.m[1][1]};
    return std::lexicographical_compare(a, a + 5, b, b + 5);
}

ProjMat2 pm_mul(const ProjMat2& a, const ProjMat2& b) {
    assert(a.p == b.p);
    long long p = a.p;
    long long r00 = (a.m[0][0] * b.m[0][0] + a.m[0][1] * b.m[1][0]) % p;
    long long r01 = (a.m[0][0] * b.m[0][1] + a.m[0][1] * b.m[1][1]) % p;
    long long r10 = (a.m[1][0] * b.m[0][0] + a.m[1][1] * b.m[1][0]) % p;
    long long r11 = (a.m[1][0] * b.m[0][1] + a.m[1][1] * b.m[1][1]) % p;
    // re-run the constructor for sign normalization
    return ProjMat2::from_mobius(p, r00, r10, r01, r11);
}

grp::Permutation mobius_permutation(const ProjMat2& g) {
    long long p = g.p;
    long long a = g.m[0][0], c = g.m[0][1], b = g.m[1][0], d = g.m[1][1];
    std::vector<int> img(p + 1);
    auto label = [p](long long t, bool inf) { return inf ? (int)p : (int)t; }; // 0-based
    for (long long t = 0; t < p; ++t) {
        long long den = mod_p(c * t + d, p);
        if (den == 0)
            img[label(t, false)] = label(0, true);
        else
            img[label(t, false)] = label(mod_p((a * t + b) % p * inv_mod(den, p), p), false);
    }
    // infinity maps to a/c
    if (mod_p(c, p) == 0)
        img[label(0, true)] = label(0, true);
    else
        img[label(0, true)] = label(mod_p(a * inv_mod(c, p), p), false);
    return grp::Permutation(img);
}

dsn::Dessin modular_dessin(long long p) {
    // x: t -> -1/(t-1) and y: t -> -1/t; then z = (xy)^-1 is t -> t+1
    ProjMat2 x = ProjMat2::from_mobius(p, 0, 1, p - 1, p - 1);
    ProjMat2 y = ProjMat2::from_mobius(p, 0, 1, p - 1, 0);
    dsn::Dessin d(mobius_permutation(x), mobius_permutation(y), "D0(" + std::to_string(p) + ")");
    assert(d.z() == mobius_permutation(ProjMat2::from_mobius(p, 1, 1, 0, 1)));
    return d;
}

std::pair<grp::u128, long long> modular_cover_stats(long long p) {
    if (p < 2) throw std::invalid_argument("p must be a prime >= 2");
    if (p == 2) return {(grp::u128)6, 0};
    grp::u128 degree = (grp::u128)p * (grp::u128)(p * p - 1) / 2;
    long long genus = (p + 2) * (p - 3) * (p - 5) / 24;
    return {degree, genus};
}

dsn::Dessin psl2_coset_dessin(CosetVariant variant) {
    const long long p = 11;
    ProjMat2 u, v, w;
    if (variant == CosetVariant::H) {
        u = ProjMat2::from_mobius(p, 4, 2, -1, -3);
        v = ProjMat2::from_mobius(p, 0, -1, 1, 0);
        w = ProjMat2::from_mobius(p, 2, -3, -4, 1);
    } else {
        u = ProjMat2::from_mobius(p, 4, -2, 1, -3);
        v = ProjMat2::from_mobius(p, 0, 1, -1, 0);
        w = ProjMat2::from_mobius(p, 2, 3, 4, 1);
    }
    // closure of <u, v, w>, expected to be A5 of order 60
    std::set<ProjMat2> H{ProjMat2::from_mobius(p, 1, 0, 0, 1)};
    std::vector<ProjMat2> frontier(H.begin(), H.end());
    while (!frontier.empty()) {
        std::vector<ProjMat2> next;
        for (const auto& h : frontier)
            for (const auto& g : {u, v, w}) {
                ProjMat2 hg = pm_mul(h, g);
                if (H.insert(hg).second) next.push_back(hg);
            }
        frontier = std::move(next);
    }
    if (H.size() != 60)
        throw ClosureOrderWrong("subgroup closure has order " + std::to_string(H.size()) +
                                ", expected 60");
    ProjMat2 x = ProjMat2::from_mobius(p, 0, 1, -1, -1);
    ProjMat2 y = ProjMat2::from_mobius(p, 0, 1, -1, 0);
    // right cosets Hg, discovered by BFS from H along x and y
    auto coset_of = [&H](const ProjMat2& g) {
        std::vector<ProjMat2> c;
        c.reserve(H.size());
        for (const auto& h : H) c.push_back(pm_mul(h, g));
        std::sort(c.begin(), c.end());
        return c;
    };
    std::map<std::vector<ProjMat2>, int> index;
    std::vector<ProjMat2> reps{ProjMat2::from_mobius(p, 1, 0, 0, 1)};
    index[coset_of(reps[0])] = 0;
    for (size_t i = 0; i < reps.size(); ++i)
        for (const auto& g : {x, y}) {
            ProjMat2 r = pm_mul(reps[i], g);
            auto key = coset_of(r);
            if (!index.count(key)) {
                index[key] = (int)reps.size();
                reps.push_back(r);
            }
        }
    if (reps.size() != 11)
        throw ClosureOrderWrong("coset space has size " + std::to_string(reps.size()) +
                                ", expected 11");
    auto action = [&](const ProjMat2& g) {
        std::vector<int> img(reps.size());
        for (size_t i = 0; i < reps.size(); ++i) img[i] = index.at(coset_of(pm_mul(reps[i], g)));
        return grp::Permutation(img);
    };
    return dsn::Dessin(action(x), action(y),
                       variant == CosetVariant::H ? "cosets of H" : "cosets of Hbar");
}

namespace {

// Assemble a dessin from black-vertex rotations and white-vertex pairings,
// then relabel so the long face cycle is (1,...,L) and any fixed point of z
// comes last. Edges are 0-based ints during assembly.
dsn::Dessin assemble(int degree, const std::vector<std::vector<int>>& black_cycles,
                     const std::vector<std::pair<int, int>>& white_pairs, std::string label) {
    std::vector<int> ximg(degree), yimg(degree);
    for (int i = 0; i < degree; ++i) ximg[i] = yimg[i] = i;
    for (const auto& cyc : black_cycles)
        for (size_t i = 0; i < cyc.size(); ++i) ximg[cyc[i]] = cyc[(i + 1) % cyc.size()];
    for (auto [a, b] : white_pairs) {
        yimg[a] = b;
        yimg[b] = a;
    }
    grp::Permutation x(ximg), y(yimg);
    grp::Permutation z = grp::inverse(grp::compose(x, y));
    // relabeling t: follow the long z-cycle from its least point, fixed points after
    std::vector<int> t(degree, -1);
    int start = -1;
    for (int i = 0; i < degree && start < 0; ++i)
        if (z[i] != i) start = i;
    assert(start >= 0);
    int next = 0, cur = start;
    do {
        t[cur] = next++;
        cur = z[cur];
    } while (cur != start);
    for (int i = 0; i < degree; ++i)
        if (t[i] < 0) t[i] = next++;
    grp::Permutation relab(t);
    return dsn::Dessin(grp::conjugate(x, relab), grp::conjugate(y, relab), std::move(label));
}

} // namespace

dsn::Dessin family_dessin_degree_p(long long p, TreeVariant variant) {
    if (p < 5) throw std::invalid_argument("tree families need p >= 5");
    if (variant == TreeVariant::D && p % 3 != 2)
        throw CongruenceMismatch("variant D needs p = 2 mod 3");
    if (variant == TreeVariant::Dprime && p % 3 != 1)
        throw CongruenceMismatch("variant D' needs p = 1 mod 3");
    int k = (int)((variant == TreeVariant::D ? p - 2 : p - 1) / 3);
    int degree = (int)p;
    // spine of k degree-3 black vertices; the last one carries black leaves
    // (two for D, one for D'); the first gets white pendants for its free
    // slots, middles one white pendant each
    int next_edge = 0;
    auto fresh = [&next_edge]() { return next_edge++; };
    std::vector<std::vector<int>> black;
    std::vector<std::pair<int, int>> white;
    int black_leaves = variant == TreeVariant::D ? 2 : 1;
    std::vector<int> left(k, -1), right(k, -1); // spine edge ids per vertex side
    for (int i = 0; i + 1 < k; ++i) {
        right[i] = fresh();
        left[i + 1] = fresh();
        white.emplace_back(right[i], left[i + 1]);
    }
    for (int i = 0; i < k; ++i) {
        // fill this vertex's three slots, counterclockwise starting eastward
        std::vector<int> rot;
        if (i + 1 < k) rot.push_back(right[i]);
        if (i == k - 1) {
            for (int l = 0; l < black_leaves; ++l) {
                int near = fresh(), far = fresh();
                white.emplace_back(near, far);
                rot.push_back(near); // the far edge is a fixed point of both x-cycle sets
            }
        }
        while ((int)rot.size() + (i > 0 ? 1 : 0) < 3) rot.push_back(fresh()); // white pendants
        if (i > 0) rot.push_back(left[i]);
        assert(rot.size() == 3);
        black.push_back(rot);
    }
    assert(next_edge == degree);
    std::string label = (variant == TreeVariant::D ? "D(" : "D'(") + std::to_string(p) + ")";
    return assemble(degree, black, white, label);
}

dsn::Dessin family_dessin_degree_p_plus_1(long long p) {
    if (p < 17) throw std::invalid_argument("the loop-plus-path family needs p >= 17");
    if (p % 3 == 0) throw std::invalid_argument("p must be prime, not divisible by 3");
    bool two_mod_three = p % 3 == 2;
    int k = (int)((two_mod_three ? p - 2 : p - 4) / 3);
    int degree = (int)(p + 1);
    int next_edge = 0;
    auto fresh = [&next_edge]() { return next_edge++; };
    std::vector<std::vector<int>> black;
    std::vector<std::pair<int, int>> white;
    std::vector<int> left(k, -1), right(k, -1);
    for (int i = 0; i + 1 < k; ++i) {
        right[i] = fresh();
        left[i + 1] = fresh();
        white.emplace_back(right[i], left[i + 1]);
    }
    for (int i = 0; i < k; ++i) {
        std::vector<int> rot;
        if (i + 1 < k) rot.push_back(right[i]);
        if (i == 0) {
            // loop at the first vertex: both ends meet at one white vertex
            int l1 = fresh(), l2 = fresh();
            white.emplace_back(l1, l2);
            rot.push_back(l1);
            rot.push_back(l2);
        } else if (i >= 1 && i <= 3) {
            // spine positions 2..4 carry one black leaf each
            int near = fresh(), far = fresh();
            white.emplace_back(near, far);
            rot.push_back(near);
        } else if (i == k - 1) {
            // last vertex: two pendants, white for p = 3k+2, black for p = 3k+4
            for (int l = 0; l < 2; ++l) {
                if (two_mod_three) {
                    rot.push_back(fresh());
                } else {
                    int near = fresh(), far = fresh();
                    white.emplace_back(near, far);
                    rot.push_back(near);
                }
            }
        } else {
            rot.push_back(fresh()); // one white pendant
        }
        if (i > 0) rot.push_back(left[i]);
        assert(rot.size() == 3);
        black.push_back(rot);
    }
    assert(next_edge == degree);
    return assemble(degree, black, white, "A(" + std::to_string(p + 1) + ") family");
}

BinMat BinMat::identity(int n) {
    BinMat m(n);
    for (int i = 0; i < n; ++i) m.rows[i] = 1u << i;
    return m;
}

std::uint32_t bm_apply(std::uint32_t v, const BinMat& m) {
    std::uint32_t out = 0;
    for (int i = 0; i < m.n; ++i)
        if (v >> i & 1) out ^= m.rows[i];
    return out;
}

BinMat bm_mul(const BinMat& a, const BinMat& b) {
    assert(a.n == b.n);
    BinMat out(a.n);
    for (int i = 0; i < a.n; ++i) out.rows[i] = bm_apply(a.rows[i], b);
    return out;
}

BinMat bm_add(const BinMat& a, const BinMat& b) {
    assert(a.n == b.n);
    BinMat out(a.n);
    for (int i = 0; i < a.n; ++i) out.rows[i] = a.rows[i] ^ b.rows[i];
    return out;
}

int bm_rank(BinMat m) {
    int rank = 0;
    for (int col = 0; col < m.n; ++col) {
        int pivot = -1;
        for (int r = rank; r < m.n; ++r)
            if (m.rows[r] >> col & 1) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m.rows[rank], m.rows[pivot]);
        for (int r = 0; r < m.n; ++r)
            if (r != rank && (m.rows[r] >> col & 1)) m.rows[r] ^= m.rows[rank];
        ++rank;
    }
    return rank;
}

std::vector<std::uint32_t> bm_kernel(const BinMat& m) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t v = 0; v < (1u << m.n); ++v)
        if (bm_apply(v, m) == 0) out.push_back(v);
    return out;
}

std::vector<std::uint32_t> bm_image(const BinMat& m) {
    std::set<std::uint32_t> img;
    for (std::uint32_t v = 0; v < (1u << m.n); ++v) img.insert(bm_apply(v, m));
    return {img.begin(), img.end()};
}

int bm_element_order(const BinMat& m, int limit) {
    BinMat id = BinMat::identity(m.n), acc = m;
    for (int k = 1; k <= limit; ++k) {
        if (acc == id) return k;
        acc = bm_mul(acc, m);
    }
    throw std::runtime_error("element order exceeds the limit");
}

BinMat singer_companion(int n) {
    // companion matrix of t^n + c_{n-1} t^{n-1} + ... + c_1 t + 1; scan the
    // coefficient masks in increasing order and keep the first of full order
    for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
        BinMat c(n);
        for (int i = 0; i + 1 < n; ++i) c.rows[i] = 1u << (i + 1);
        c.rows[n - 1] = 1u | (mask << 1);
        long long target = (1ll << n) - 1;
        BinMat acc = c;
        bool primitive = true;
        for (long long k = 1; k < target; ++k) {
            if (acc == BinMat::identity(n)) {
                primitive = false;
                break;
            }
            acc = bm_mul(acc, c);
        }
        if (primitive && acc == BinMat::identity(n)) return c;
    }
    throw std::runtime_error("no primitive polynomial found");
}

namespace {

std::uint64_t splitmix64(std::uint64_t v) {
    v += 0x9e3779b97f4a7c15ull;
    v = (v ^ (v >> 30)) * 0xbf58476d1ce4e5b9ull;
    v = (v ^ (v >> 27)) * 0x94d049bb133111ebull;
    return v ^ (v >> 31);
}

BinMat bm_inverse(const BinMat& m) {
    BinMat a = m, inv = BinMat::identity(m.n);
    for (int col = 0; col < m.n; ++col) {
        int pivot = -1;
        for (int r = col; r < m.n; ++r)
            if (a.rows[r] >> col & 1) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw std::invalid_argument("matrix is singular");
        std::swap(a.rows[col], a.rows[pivot]);
        std::swap(inv.rows[col], inv.rows[pivot]);
        for (int r = 0; r < m.n; ++r)
            if (r != col && (a.rows[r] >> col & 1)) {
                a.rows[r] ^= a.rows[col];
                inv.rows[r] ^= inv.rows[col];
            }
    }
    return inv;
}

} // namespace

GLTriple find_glnq_triple(int n, std::uint64_t seed, long long budget) {
    if (n < 2 || n > 7) throw std::invalid_argument("n out of range (2..7)");
    BinMat z = singer_companion(n);
    // canonical involution with a single Jordan block J_2 (s = 1 fixed space
    // complement): (n-1)/2 blocks [[1,1],[0,1]] plus one singleton
    BinMat y0 = BinMat::identity(n);
    for (int i = 0; i + 1 < n; i += 2) y0.rows[i] ^= 1u << (i + 1);
    std::uint64_t ctr = 0;
    for (long long attempt = 1; attempt <= budget; ++attempt) {
        // draw a random invertible conjugator g
        BinMat g(n);
        for (int i = 0; i < n; ++i)
            g.rows[i] = (std::uint32_t)(splitmix64(seed ^ splitmix64(ctr++)) & ((1u << n) - 1));
        if (bm_rank(g) != n) continue;
        BinMat y = bm_mul(bm_mul(bm_inverse(g), y0), g);
        BinMat x = bm_inverse(bm_mul(y, z));
        BinMat x2 = bm_mul(x, x);
        if (bm_mul(x2, x) != BinMat::identity(n) || x == BinMat::identity(n)) continue;
        // r = 1: the fixed space of x is one-dimensional
        if (bm_kernel(bm_add(x, BinMat::identity(n))).size() != 2) continue;
        GLTriple out;
        out.x = x;
        out.y = y;
        out.z = z;
        out.attempts = attempt;
        return out;
    }
    throw SearchExhausted("no type-(3,2," + std::to_string((1 << n) - 1) +
                          ") triple found within the attempt budget");
}

dsn::Dessin projective_action_dessin(const BinMat& x, const BinMat& y) {
    int n = x.n;
    int npts = (1 << n) - 1;
    std::vector<int> ximg(npts), yimg(npts);
    for (std::uint32_t v = 1; v <= (std::uint32_t)npts; ++v) {
        ximg[v - 1] = (int)bm_apply(v, x) - 1;
        yimg[v - 1] = (int)bm_apply(v, y) - 1;
    }
    return dsn::Dessin(grp::Permutation(ximg), grp::Permutation(yimg));
}

std::vector<std::uint32_t> agl_a_choices(const BinMat& x) {
    BinMat id = BinMat::identity(x.n);
    return bm_kernel(bm_add(bm_add(bm_mul(x, x), x), id));
}

std::vector<std::uint32_t> agl_b_choices(const BinMat& y) {
    return bm_kernel(bm_add(y, BinMat::identity(y.n)));
}

std::vector<std::uint32_t> agl_b_degenerate(const BinMat& y) {
    return bm_image(bm_add(y, BinMat::identity(y.n)));
}

dsn::Dessin agl_lift(const BinMat& glx, const BinMat& gly, const BinMat& glz, std::uint32_t a,
                     std::uint32_t b) {
    int n = glx.n;
    if (n == 3) throw ComplementDegenerate();
    BinMat id = BinMat::identity(n);
    if (bm_mul(bm_mul(glx, glx), glx) != id || bm_mul(gly, gly) != id ||
        bm_mul(bm_mul(glx, gly), glz) != id)
        throw std::invalid_argument("matrices do not form a triple with x^3 = y^2 = xyz = 1");
    if (bm_apply(a, bm_add(bm_add(bm_mul(glx, glx), glx), id)) != 0)
        throw KernelViolation("a is not in ker(x^2 + x + 1)");
    if (bm_apply(b, bm_add(gly, id)) != 0) throw KernelViolation("b is not in ker(y + 1)");
    std::uint32_t c = bm_apply(a, bm_mul(gly, glz)) ^ bm_apply(b, glz);
    int npts = 1 << n;
    std::vector<int> uimg(npts), vimg(npts), wimg(npts);
    for (std::uint32_t t = 0; t < (std::uint32_t)npts; ++t) {
        uimg[t] = (int)(bm_apply(t, glx) ^ a);
        vimg[t] = (int)(bm_apply(t, gly) ^ b);
        wimg[t] = (int)(bm_apply(t, glz) ^ c);
    }
    dsn::Dessin d{grp::Permutation(uimg), grp::Permutation(vimg)};
    assert(d.z() == grp::Permutation(wimg));
    return d;
}

} // namespace cons
