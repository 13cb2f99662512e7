#include "dessin.hpp"

#include <cassert>
#include <fstream>
#include <sstream>

namespace dsn {

std::string Passport::str() const {
    return "(" + black.str() + "; " + white.str() + "; " + faces.str() + ")";
}

Dessin::Dessin(Permutation x, Permutation y, std::string label)
    : x_(std::move(x)), y_(std::move(y)), label_(std::move(label)) {
    if (x_.degree() != y_.degree()) throw grp::degree_mismatch();
    z_ = grp::inverse(grp::compose(x_, y_));
    if (!grp::is_transitive({x_, y_}, x_.degree())) throw NotTransitive();
}

Passport Dessin::passport() const {
    return Passport{grp::cycle_type(x_), grp::cycle_type(y_), grp::cycle_type(z_)};
}

int genus(const Dessin& d) {
    int chi = grp::cycle_count(d.x()) + grp::cycle_count(d.y()) +
              grp::cycle_count(d.z()) - d.degree();
    assert(chi % 2 == 0 && "Euler characteristic of a valid dessin is even");
    int g = 1 - chi / 2;
    assert(g >= 0);
    return g;
}

long long regular_cover_genus(int p, u128 group_order) {
    if (p <= 6) throw NonIntegralGenus();
    u128 num = (u128)(p - 6) * group_order;
    u128 den = (u128)12 * (u128)p;
    if (num % den != 0) throw NonIntegralGenus();
    return (long long)(num / den) + 1;
}

long long regular_cover_genus_general(int r) {
    u128 fact11 = 39916800; // 11!
    return regular_cover_genus(r, fact11);
}

Dessin mirror(const Dessin& d) {
    return Dessin(grp::inverse(d.x()), grp::inverse(d.y()), d.label());
}

namespace {

// BFS relabeling from a seed: new labels are assigned in discovery order,
// exploring each point's x-image then y-image (or y then x).
Permutation bfs_relabel(const Permutation& x, const Permutation& y, int seed, bool x_first) {
    int n = x.degree();
    std::vector<int> newlab(n, -1), queue;
    queue.reserve(n);
    newlab[seed] = 0;
    queue.push_back(seed);
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int v = queue[qi];
        int a = x_first ? x[v] : y[v];
        int b = x_first ? y[v] : x[v];
        for (int w : {a, b}) {
            if (newlab[w] < 0) {
                newlab[w] = (int)queue.size();
                queue.push_back(w);
            }
        }
    }
    return Permutation(std::move(newlab)); // old point -> new label
}

// Minimal relabeled (x, y) pair over all seeds and both directions,
// together with the relabeling permutation that achieves it.
std::pair<std::pair<Permutation, Permutation>, Permutation>
minimal_relabeling(const Dessin& d) {
    int n = d.degree();
    bool have = false;
    std::pair<Permutation, Permutation> best;
    Permutation best_sigma;
    for (int seed = 0; seed < n; ++seed) {
        for (bool x_first : {true, false}) {
            Permutation sigma = bfs_relabel(d.x(), d.y(), seed, x_first);
            std::pair<Permutation, Permutation> cand{grp::conjugate(d.x(), sigma),
                                                     grp::conjugate(d.y(), sigma)};
            if (!have || cand < best) {
                best = cand;
                best_sigma = sigma;
                have = true;
            }
        }
    }
    return {best, best_sigma};
}

} // namespace

Dessin canonical_form(const Dessin& d) {
    auto [pair, sigma] = minimal_relabeling(d);
    return Dessin(pair.first, pair.second, d.label());
}

std::optional<Permutation> are_isomorphic(const Dessin& d1, const Dessin& d2) {
    if (d1.degree() != d2.degree()) return std::nullopt;
    auto [p1, s1] = minimal_relabeling(d1);
    auto [p2, s2] = minimal_relabeling(d2);
    if (p1 != p2) return std::nullopt;
    Permutation t = grp::compose(s1, grp::inverse(s2));
    assert(grp::conjugate(d1.x(), t) == d2.x());
    assert(grp::conjugate(d1.y(), t) == d2.y());
    return t;
}

grp::CycleType commutator_signature(const Dessin& d) {
    Permutation comm = grp::compose(grp::compose(grp::inverse(d.x()), grp::inverse(d.y())),
                                    grp::compose(d.x(), d.y()));
    return grp::cycle_type(comm);
}

grp::PermGroup monodromy_group(const Dessin& d) {
    return grp::PermGroup({d.x(), d.y()});
}

u128 monodromy_order(const Dessin& d) {
    return monodromy_group(d).order();
}

std::string print_dessin(const Dessin& d) {
    std::ostringstream os;
    os << "degree: " << d.degree() << "\n";
    os << "x: " << grp::print_cycles(d.x()) << "\n";
    os << "y: " << grp::print_cycles(d.y()) << "\n";
    if (!d.label().empty()) os << "label: " << d.label() << "\n";
    return os.str();
}

std::vector<Dessin> read_dessins(std::istream& in) {
    std::vector<Dessin> out;
    std::string line;
    int degree = -1;
    std::string xs, ys, label;
    auto flush = [&] {
        if (degree < 0) return;
        if (xs.empty() || ys.empty())
            throw std::invalid_argument("dessin record missing x or y line");
        out.emplace_back(grp::parse_cycles(xs, degree), grp::parse_cycles(ys, degree), label);
        degree = -1;
        xs.clear();
        ys.clear();
        label.clear();
    };
    while (std::getline(in, line)) {
        // trim trailing carriage return and surrounding spaces
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        size_t start = line.find_first_not_of(' ');
        if (start == std::string::npos) {
            flush();
            continue;
        }
        std::string s = line.substr(start);
        if (s[0] == '#') continue;
        auto colon = s.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("bad dessin line: " + line);
        std::string key = s.substr(0, colon);
        std::string val = s.substr(colon + 1);
        size_t vs = val.find_first_not_of(' ');
        val = (vs == std::string::npos) ? "" : val.substr(vs);
        if (key == "degree") {
            flush();
            degree = std::stoi(val);
        } else if (key == "x") {
            xs = val;
        } else if (key == "y") {
            ys = val;
        } else if (key == "label") {
            label = val;
        } else {
            throw std::invalid_argument("unknown dessin key: " + key);
        }
    }
    flush();
    return out;
}

std::vector<Dessin> read_dessin_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open dessin file: " + path);
    return read_dessins(in);
}

void write_dessins(std::ostream& out, const std::vector<Dessin>& ds) {
    bool first = true;
    for (const auto& d : ds) {
        if (!first) out << "\n";
        first = false;
        out << print_dessin(d);
    }
}

} // namespace dsn
