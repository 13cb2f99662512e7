#include "enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

namespace enumerate {

using dsn::Dessin;
using grp::CycleType;
using grp::Permutation;

std::vector<std::vector<int>> partitions_of(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    // descending parts, generated in lexicographically decreasing order
    auto rec = [&](auto&& self, int left, int maxpart) -> void {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(left, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, left - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

namespace {

// z as the canonical permutation of a face type: cycles laid out consecutively
// on 0..n-1, longest first.
Permutation canonical_of_type(const std::vector<int>& lengths_desc, int n) {
    std::vector<int> img(n);
    int pos = 0;
    for (int len : lengths_desc) {
        for (int k = 0; k < len; ++k) img[pos + k] = pos + (k + 1) % len;
        pos += len;
    }
    return Permutation(std::move(img));
}

struct Shared {
    int n = 0;
    std::vector<int> zinv;
    std::vector<int> white_count; // by length
    int white_total = 0;
    std::vector<int> white_sorted_desc;
    bool prune = true;
    long long budget = 0;
    std::atomic<long long> counter{0};
};

// One DFS worker. The y permutation is forced edge by edge: placing x(i) = j
// forces y(j) = z^-1(i). Partial y-cycles are kept as chains with endpoint
// bookkeeping: head_at_tail[t] is the head of the open chain ending at t,
// tail_at_head[h] its tail, len_at_head[h] its length.
struct Worker {
    Shared* S;
    int n;
    std::vector<int> x_img, y_img;
    std::vector<char> in_cycle;
    std::vector<int> black_avail, white_avail;
    std::vector<int> head_at_tail, tail_at_head, len_at_head;
    std::vector<int> closed_lens; // only consulted in oracle (non-pruning) mode
    std::set<Dessin> found;

    Worker(Shared* shared, const CycleType& black) : S(shared), n(shared->n) {
        x_img.assign(n, -1);
        y_img.assign(n, -1);
        in_cycle.assign(n, 0);
        black_avail.assign(n + 1, 0);
        for (auto [len, mult] : black.parts) black_avail[len] += mult;
        white_avail = S->white_count;
        head_at_tail.resize(n);
        tail_at_head.resize(n);
        len_at_head.assign(n, 1);
        for (int i = 0; i < n; ++i) head_at_tail[i] = tail_at_head[i] = i;
    }

    struct Undo {
        int u = -1, v = -1;
        bool closed = false, dec = false, pushed = false;
        int h1 = -1, t2 = -1, lenA = 0, closed_len = 0;
    };

    // Apply the forced y-edge u -> v. Always leaves the structure mutated
    // (caller must undo); returns false when the branch is dead.
    bool add_edge(int u, int v, Undo& un) {
        if (S->counter.fetch_add(1, std::memory_order_relaxed) >= S->budget)
            throw DegreeTooLarge("candidate budget exceeded during enumeration");
        un.u = u;
        un.v = v;
        y_img[u] = v;
        int h1 = head_at_tail[u];
        if (h1 == v) { // chain closes into a y-cycle
            un.closed = true;
            un.closed_len = len_at_head[v];
            head_at_tail[u] = -1;
            tail_at_head[v] = -1;
            if (S->prune) {
                if (white_avail[un.closed_len] == 0) return false;
                --white_avail[un.closed_len];
                un.dec = true;
            } else {
                closed_lens.push_back(un.closed_len);
                un.pushed = true;
            }
            return true;
        }
        // merge: chain (h1 .. u) followed by chain (v .. t2)
        int t2 = tail_at_head[v];
        un.h1 = h1;
        un.t2 = t2;
        un.lenA = len_at_head[h1];
        len_at_head[h1] += len_at_head[v];
        tail_at_head[h1] = t2;
        head_at_tail[t2] = h1;
        head_at_tail[u] = -1;
        tail_at_head[v] = -1;
        if (S->prune) {
            int need = len_at_head[h1];
            for (int w = need; w <= n; ++w)
                if (white_avail[w] > 0) return true;
            return false;
        }
        return true;
    }

    void undo_edge(const Undo& un) {
        y_img[un.u] = -1;
        if (un.closed) {
            head_at_tail[un.u] = un.v;
            tail_at_head[un.v] = un.u;
            if (un.dec) ++white_avail[un.closed_len];
            if (un.pushed) closed_lens.pop_back();
        } else {
            len_at_head[un.h1] = un.lenA;
            tail_at_head[un.h1] = un.u;
            head_at_tail[un.t2] = un.v;
            head_at_tail[un.u] = un.h1;
            tail_at_head[un.v] = un.t2;
        }
    }

    void complete() {
        if (!S->prune) {
            std::vector<int> got = closed_lens;
            std::sort(got.begin(), got.end(), std::greater<int>());
            if (got != S->white_sorted_desc) return;
        }
        Permutation x(x_img), y(y_img);
        if (!grp::is_transitive({x, y}, n)) return;
        found.insert(dsn::canonical_form(Dessin(std::move(x), std::move(y))));
    }

    void extend(int s, int cur, int remaining) {
        if (remaining == 0) { // close the x-cycle: x(cur) = s
            Undo un;
            bool ok = add_edge(s, S->zinv[cur], un);
            x_img[cur] = s;
            if (ok) dfs();
            x_img[cur] = -1;
            undo_edge(un);
            return;
        }
        for (int j = 0; j < n; ++j) {
            if (in_cycle[j]) continue;
            Undo un;
            bool ok = add_edge(j, S->zinv[cur], un);
            x_img[cur] = j;
            in_cycle[j] = 1;
            if (ok) extend(s, j, remaining - 1);
            in_cycle[j] = 0;
            x_img[cur] = -1;
            undo_edge(un);
        }
    }

    void dfs() {
        int s = -1;
        for (int i = 0; i < n; ++i)
            if (!in_cycle[i]) {
                s = i;
                break;
            }
        if (s < 0) {
            complete();
            return;
        }
        for (int L = 1; L <= n; ++L) {
            if (!black_avail[L]) continue;
            --black_avail[L];
            in_cycle[s] = 1;
            extend(s, s, L - 1);
            in_cycle[s] = 0;
            ++black_avail[L];
        }
    }

    // Root subtree: the x-cycle through point 0 has length L and, if L > 1,
    // its first edge is 0 -> first_target.
    void run_task(int L, int first_target) {
        --black_avail[L];
        in_cycle[0] = 1;
        if (L == 1) {
            extend(0, 0, 0);
        } else {
            int j = first_target;
            Undo un;
            bool ok = add_edge(j, S->zinv[0], un);
            x_img[0] = j;
            in_cycle[j] = 1;
            if (ok) extend(0, j, L - 2);
            in_cycle[j] = 0;
            x_img[0] = -1;
            undo_edge(un);
        }
        in_cycle[0] = 0;
        ++black_avail[L];
    }
};

// Enumerate one fixed face type; results inserted into `out`.
void enumerate_fixed_faces(const PassportQuery& q, const std::vector<int>& face_lens,
                           const EnumerateOptions& opts, Shared& shared,
                           std::set<Dessin>& out) {
    int n = q.degree;
    Permutation z = canonical_of_type(face_lens, n);
    shared.n = n;
    shared.zinv = grp::inverse(z).images();
    shared.white_count.assign(n + 1, 0);
    for (auto [len, mult] : q.white.parts) shared.white_count[len] += mult;
    shared.white_sorted_desc = q.white.lengths();
    shared.prune = opts.prune;
    shared.budget = opts.candidate_budget;

    // root tasks: (cycle length through point 0, first target)
    std::vector<std::pair<int, int>> tasks;
    std::vector<char> seen_len(n + 1, 0);
    for (auto [len, mult] : q.black.parts) {
        if (seen_len[len]) continue;
        seen_len[len] = 1;
        if (len == 1)
            tasks.push_back({1, 0});
        else
            for (int j = 1; j < n; ++j) tasks.push_back({len, j});
    }

    int nthreads = std::max(1, opts.threads);
    if (nthreads == 1) {
        Worker w(&shared, q.black);
        for (auto [L, j] : tasks) w.run_task(L, j);
        out.insert(w.found.begin(), w.found.end());
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::set<Dessin>> results(nthreads);
    std::vector<std::exception_ptr> errors(nthreads);
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) {
        pool.emplace_back([&, t] {
            try {
                Worker w(&shared, q.black);
                for (;;) {
                    size_t i = next.fetch_add(1);
                    if (i >= tasks.size()) break;
                    w.run_task(tasks[i].first, tasks[i].second);
                }
                results[t] = std::move(w.found);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    for (auto& r : results) out.insert(r.begin(), r.end());
}

} // namespace

std::vector<Dessin> enumerate_passport(const PassportQuery& q, const EnumerateOptions& opts) {
    int n = q.degree;
    if (n <= 0 || q.black.degree() != n || q.white.degree() != n ||
        (q.faces && q.faces->degree() != n))
        throw std::invalid_argument("inconsistent passport query");
    if (n > opts.degree_budget)
        throw DegreeTooLarge("degree " + std::to_string(n) + " exceeds budget " +
                             std::to_string(opts.degree_budget));

    Shared shared;
    std::set<Dessin> out;
    if (q.faces) {
        enumerate_fixed_faces(q, q.faces->lengths(), opts, shared, out);
    } else {
        for (const auto& part : partitions_of(n))
            enumerate_fixed_faces(q, part, opts, shared, out);
    }
    return std::vector<Dessin>(out.begin(), out.end());
}

std::map<std::vector<int>, std::vector<Dessin>> enumerate_type_degree11(
    const EnumerateOptions& opts) {
    PassportQuery q;
    q.degree = 11;
    q.black = CycleType::parse("3^3,1^2");
    q.white = CycleType::parse("2^5,1^1");
    q.faces = std::nullopt;
    std::map<std::vector<int>, std::vector<Dessin>> buckets;
    for (auto& d : enumerate_passport(q, opts))
        buckets[grp::cycle_type(d.z()).lengths()].push_back(d);
    return buckets;
}

ChiralityPartition chirality_partition(const std::vector<Dessin>& ds) {
    std::vector<Dessin> canon;
    canon.reserve(ds.size());
    for (const auto& d : ds) canon.push_back(dsn::canonical_form(d));
    std::map<Dessin, size_t> index;
    for (size_t i = 0; i < canon.size(); ++i) index[canon[i]] = i;

    ChiralityPartition part;
    std::vector<char> handled(ds.size(), 0);
    for (size_t i = 0; i < ds.size(); ++i) {
        Dessin m = dsn::canonical_form(dsn::mirror(ds[i]));
        auto it = index.find(m);
        if (it == index.end()) throw ListNotMirrorClosed();
        if (handled[i]) continue;
        if (it->second == i) {
            part.symmetric.push_back(ds[i]);
            handled[i] = 1;
        } else {
            part.pairs.push_back({ds[i], ds[it->second]});
            handled[i] = 1;
            handled[it->second] = 1;
        }
    }
    return part;
}

} // namespace enumerate
