#include "char_count.hpp"

#include "primes.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

namespace chr {

namespace {

using i128 = __int128;

long long narrow(i128 v, const char* what) {
    if (v > (i128)INT64_MAX || v < (i128)INT64_MIN)
        throw std::overflow_error(std::string("rational overflow in ") + what);
    return (long long)v;
}

} // namespace

Rational::Rational(long long n, long long d) {
    if (d == 0) throw std::invalid_argument("zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g == 0) g = 1;
    num = n / g;
    den = d / g;
}

std::string Rational::str() const {
    std::ostringstream os;
    os << num;
    if (den != 1) os << "/" << den;
    return os.str();
}

Rational operator+(const Rational& a, const Rational& b) {
    i128 n = (i128)a.num * b.den + (i128)b.num * a.den;
    i128 d = (i128)a.den * b.den;
    // reduce in 128 bits before narrowing
    i128 an = n < 0 ? -n : n;
    i128 gg = d;
    while (an != 0) {
        i128 t = gg % an;
        gg = an;
        an = t;
    }
    if (gg == 0) gg = 1;
    return Rational(narrow(n / gg, "add"), narrow(d / gg, "add"));
}

Rational operator-(const Rational& a, const Rational& b) { return a + Rational(-b.num, b.den); }
Rational operator-(const Rational& a) { return Rational(-a.num, a.den); }

Rational operator*(const Rational& a, const Rational& b) {
    // cross-reduce to keep intermediates small
    long long g1 = std::gcd(a.num < 0 ? -a.num : a.num, b.den);
    long long g2 = std::gcd(b.num < 0 ? -b.num : b.num, a.den);
    i128 n = (i128)(a.num / g1) * (b.num / g2);
    i128 d = (i128)(a.den / g2) * (b.den / g1);
    return Rational(narrow(n, "mul"), narrow(d, "mul"));
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num == 0) throw std::invalid_argument("division by zero");
    return a * Rational(b.den, b.num);
}

namespace {

// n-th cyclotomic polynomial, integer coefficients, via the exact division
// Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d. Cached across calls.
const std::vector<long long>& cyclotomic_poly(long long n) {
    static std::map<long long, std::vector<long long>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<long long> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (long long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        const std::vector<long long>& phi = cyclotomic_poly(d);
        // exact long division of num by the monic poly phi
        std::vector<long long> quot(num.size() - phi.size() + 1, 0);
        std::vector<long long> rem = num;
        for (long long i = (long long)quot.size() - 1; i >= 0; --i) {
            long long c = rem[i + phi.size() - 1];
            quot[i] = c;
            if (c == 0) continue;
            for (size_t j = 0; j < phi.size(); ++j) rem[i + j] -= c * phi[j];
        }
        num = std::move(quot);
    }
    while (num.size() > 1 && num.back() == 0) num.pop_back();
    return cache.emplace(n, std::move(num)).first->second;
}

// Reduce a coefficient map modulo Phi_n (monic), dropping zeros.
void reduce_mod_phi(std::map<long long, Rational>& coeffs, long long n) {
    const std::vector<long long>& phi = cyclotomic_poly(n);
    long long deg = (long long)phi.size() - 1;
    while (!coeffs.empty()) {
        auto top = std::prev(coeffs.end());
        long long e = top->first;
        if (e < deg) break;
        Rational c = top->second;
        coeffs.erase(top);
        for (long long j = 0; j < deg; ++j) {
            if (phi[j] == 0) continue;
            Rational& slot = coeffs[e - deg + j];
            slot = slot - c * Rational(phi[j]);
            if (slot.num == 0) coeffs.erase(e - deg + j);
        }
    }
    for (auto it = coeffs.begin(); it != coeffs.end();)
        it = it->second.num == 0 ? coeffs.erase(it) : std::next(it);
}

Cyclotomic lift(const Cyclotomic& a, long long n) {
    if (a.conductor == n) return a;
    assert(n % a.conductor == 0);
    Cyclotomic out;
    out.conductor = n;
    long long f = n / a.conductor;
    for (const auto& [e, c] : a.coeffs) out.coeffs[e * f] = c;
    reduce_mod_phi(out.coeffs, n);
    return out;
}

} // namespace

Cyclotomic::Cyclotomic(const Rational& r) {
    if (r.num != 0) coeffs[0] = r;
}

Cyclotomic Cyclotomic::zeta_power(long long n, long long k) {
    if (n < 1) throw std::invalid_argument("conductor must be positive");
    Cyclotomic out;
    out.conductor = n;
    out.coeffs[((k % n) + n) % n] = Rational(1);
    reduce_mod_phi(out.coeffs, n);
    return out;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    long long n = std::lcm(conductor, o.conductor);
    return lift(*this, n).coeffs == lift(o, n).coeffs;
}

Cyclotomic cyc_add(const Cyclotomic& a, const Cyclotomic& b) {
    long long n = std::lcm(a.conductor, b.conductor);
    Cyclotomic out = lift(a, n);
    for (const auto& [e, c] : lift(b, n).coeffs) {
        Rational& slot = out.coeffs[e];
        slot = slot + c;
        if (slot.num == 0) out.coeffs.erase(e);
    }
    return out;
}

Cyclotomic cyc_sub(const Cyclotomic& a, const Cyclotomic& b) {
    return cyc_add(a, cyc_mul(b, Cyclotomic(Rational(-1))));
}

Cyclotomic cyc_mul(const Cyclotomic& a, const Cyclotomic& b) {
    long long n = std::lcm(a.conductor, b.conductor);
    Cyclotomic la = lift(a, n), lb = lift(b, n);
    Cyclotomic out;
    out.conductor = n;
    for (const auto& [ea, ca] : la.coeffs)
        for (const auto& [eb, cb] : lb.coeffs) {
            Rational& slot = out.coeffs[(ea + eb) % n];
            slot = slot + ca * cb;
        }
    reduce_mod_phi(out.coeffs, n);
    return out;
}

Cyclotomic cyc_galois(const Cyclotomic& a, long long k) {
    long long n = a.conductor;
    k = ((k % n) + n) % n;
    if (std::gcd(k, n) != 1) throw std::invalid_argument("Galois exponent not coprime");
    Cyclotomic out;
    out.conductor = n;
    for (const auto& [e, c] : a.coeffs) {
        Rational& slot = out.coeffs[(e * k) % n];
        slot = slot + c;
    }
    reduce_mod_phi(out.coeffs, n);
    return out;
}

Rational cyc_to_rational(const Cyclotomic& a) {
    if (a.coeffs.empty()) return Rational(0);
    if (a.coeffs.size() == 1 && a.coeffs.begin()->first == 0) return a.coeffs.begin()->second;
    throw NotRational();
}

std::string Cyclotomic::str() const {
    if (coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeffs) {
        Rational mag = c.num < 0 ? -c : c;
        std::string body;
        if (e == 0) {
            body = mag.str();
        } else {
            if (mag != Rational(1)) body = mag.str() + "*";
            body += "E(" + std::to_string(conductor) + ")";
            if (e != 1) body += "^" + std::to_string(e);
        }
        if (first) {
            if (c.num < 0) os << "-";
            first = false;
        } else {
            os << (c.num < 0 ? "-" : "+");
        }
        os << body;
    }
    return os.str();
}

namespace {

struct ValueScanner {
    const std::string& s;
    size_t i = 0;
    explicit ValueScanner(const std::string& str) : s(str) {}
    void skip_ws() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    long long integer() {
        skip_ws();
        size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        size_t digits = i;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
        if (i == digits) throw std::invalid_argument("expected integer in '" + s + "'");
        return std::stoll(s.substr(start, i - start));
    }
    Rational rational() {
        long long n = integer();
        skip_ws();
        if (i < s.size() && s[i] == '/') {
            ++i;
            return Rational(n, integer());
        }
        return Rational(n);
    }
    void expect(char c) {
        skip_ws();
        if (i >= s.size() || s[i] != c)
            throw std::invalid_argument(std::string("expected '") + c + "' in '" + s + "'");
        ++i;
    }
};

} // namespace

Cyclotomic parse_cyc_value(const std::string& s) {
    ValueScanner sc(s);
    Cyclotomic out;
    bool any = false;
    while (!sc.done()) {
        int sign = 1;
        char c = sc.peek();
        if (c == '+' || c == '-') {
            sign = c == '-' ? -1 : 1;
            ++sc.i;
        } else if (any) {
            throw std::invalid_argument("missing sign between terms in '" + s + "'");
        }
        Rational coef(1);
        if (sc.peek() != 'E') {
            coef = sc.rational();
            if (sc.peek() == '*') ++sc.i;
        }
        if (sign < 0) coef = -coef;
        Cyclotomic term(coef);
        if (sc.peek() == 'E') {
            ++sc.i;
            sc.expect('(');
            long long n = sc.integer();
            sc.expect(')');
            long long k = 1;
            if (sc.peek() == '^') {
                ++sc.i;
                k = sc.integer();
            }
            term = cyc_mul(term, Cyclotomic::zeta_power(n, k));
        }
        out = cyc_add(out, term);
        any = true;
    }
    if (!any) throw std::invalid_argument("empty value");
    return out;
}

size_t CharacterTable::class_index(const std::string& name) const {
    for (size_t i = 0; i < classes.size(); ++i)
        if (classes[i].name == name) return i;
    throw std::invalid_argument("no conjugacy class named '" + name + "'");
}

namespace {

std::string strip(const std::string& line) {
    std::string s = line.substr(0, line.find('#'));
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

void validate_full(const CharacterTable& t) {
    long long class_eq = 0;
    for (const auto& c : t.classes) {
        if (c.centralizer <= 0 || t.group_order % c.centralizer != 0)
            throw std::invalid_argument("centralizer order does not divide the group order");
        class_eq += t.group_order / c.centralizer;
    }
    if (class_eq != t.group_order)
        throw std::invalid_argument("class equation fails: table is not full");
    if (t.characters.empty()) throw std::invalid_argument("table has no character rows");
    Rational sq(0);
    for (const auto& [name, row] : t.characters) {
        if (row.size() != t.classes.size())
            throw std::invalid_argument("row " + name + " has the wrong number of values");
        Rational deg = cyc_to_rational(row[0]);
        sq = sq + deg * deg;
    }
    for (const auto& v : t.characters.front().second)
        if (v != Cyclotomic(Rational(1)))
            throw std::invalid_argument("first row is not the principal character");
    if (sq != Rational(t.group_order))
        throw std::invalid_argument("sum of squared degrees does not equal the group order");
}

} // namespace

CharacterTable parse_character_table(std::istream& in) {
    CharacterTable t;
    bool saw_group = false, saw_partial = false;
    std::string raw;
    while (std::getline(in, raw)) {
        std::string line = strip(raw);
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "group") {
            std::string order_kw;
            ls >> t.group_name >> order_kw >> t.group_order;
            if (order_kw != "order" || t.group_order <= 0 || !ls)
                throw std::invalid_argument("bad group line: " + line);
            saw_group = true;
        } else if (key == "classes:") {
            CharacterTable::ClassInfo c;
            ls >> c.name >> c.element_order >> c.centralizer;
            if (!ls || c.element_order <= 0 || c.centralizer <= 0)
                throw std::invalid_argument("bad class line: " + line);
            t.classes.push_back(c);
        } else if (key == "partial:") {
            std::string v;
            ls >> v;
            if (v != "true" && v != "false")
                throw std::invalid_argument("bad partial line: " + line);
            t.partial = v == "true";
            saw_partial = true;
        } else if (key == "char") {
            size_t colon = line.find(':');
            if (colon == std::string::npos) throw std::invalid_argument("bad char line: " + line);
            std::string name = strip(line.substr(4, colon - 4));
            std::vector<Cyclotomic> row;
            std::string rest = line.substr(colon + 1), cell;
            std::istringstream cells(rest);
            while (std::getline(cells, cell, '|')) row.push_back(parse_cyc_value(cell));
            if (row.size() != t.classes.size())
                throw std::invalid_argument("row " + name + " has the wrong number of values");
            t.characters.emplace_back(name, std::move(row));
        } else {
            throw std::invalid_argument("unrecognized line: " + line);
        }
    }
    if (!saw_group || !saw_partial || t.classes.empty())
        throw std::invalid_argument("incomplete character table");
    if (!t.partial) validate_full(t);
    return t;
}

CharacterTable parse_character_table(const std::string& text) {
    std::istringstream in(text);
    return parse_character_table(in);
}

CharacterTable read_character_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_character_table(in);
}

std::string print_character_table(const CharacterTable& t) {
    std::ostringstream os;
    os << "group " << t.group_name << " order " << t.group_order << "\n";
    for (const auto& c : t.classes)
        os << "classes: " << c.name << " " << c.element_order << " " << c.centralizer << "\n";
    os << "partial: " << (t.partial ? "true" : "false") << "\n";
    for (const auto& [name, row] : t.characters) {
        os << "char " << name << ":";
        for (size_t i = 0; i < row.size(); ++i) os << (i ? " | " : " ") << row[i].str();
        os << "\n";
    }
    return os.str();
}

Rational frobenius_char_sum(const CharacterTable& t, const std::string& cx,
                            const std::string& cy, const std::string& cz) {
    size_t ix = t.class_index(cx), iy = t.class_index(cy), iz = t.class_index(cz);
    Cyclotomic sum;
    for (const auto& [name, row] : t.characters) {
        Cyclotomic prod = cyc_mul(cyc_mul(row[ix], row[iy]), row[iz]);
        if (prod.is_zero()) continue;
        Rational deg = cyc_to_rational(row[0]);
        sum = cyc_add(sum, cyc_mul(prod, Cyclotomic(Rational(1) / deg)));
    }
    return cyc_to_rational(sum);
}

Rational frobenius_count(const CharacterTable& t, const std::string& cx,
                         const std::string& cy, const std::string& cz) {
    if (!t.partial) {
        Rational sq(0);
        for (const auto& [name, row] : t.characters) {
            Rational deg = cyc_to_rational(row[0]);
            sq = sq + deg * deg;
        }
        if (sq != Rational(t.group_order))
            throw PartialNotApplicable(
                "character rows do not span the table; declare it partial");
    }
    size_t ix = t.class_index(cx), iy = t.class_index(cy), iz = t.class_index(cz);
    Rational scale = Rational(t.group_order) * Rational(t.group_order) /
                     (Rational(t.classes[ix].centralizer) * Rational(t.classes[iy].centralizer) *
                      Rational(t.classes[iz].centralizer));
    Rational result = scale * frobenius_char_sum(t, cx, cy, cz);
    if (!t.partial && (!result.is_integer() || result.num < 0))
        throw NonIntegerCount("Frobenius count " + result.str() + " is not a natural number");
    return result;
}

namespace {

// Conjugacy class of rep under the group generated by gens, as a sorted set.
std::vector<grp::Permutation> conjugacy_class(const std::vector<grp::Permutation>& gens,
                                              const grp::Permutation& rep,
                                              unsigned long long cap) {
    std::set<grp::Permutation> seen{rep};
    std::vector<grp::Permutation> frontier{rep};
    while (!frontier.empty()) {
        std::vector<grp::Permutation> next;
        for (const auto& e : frontier)
            for (const auto& g : gens) {
                grp::Permutation c = grp::compose(grp::compose(grp::inverse(g), e), g);
                if (seen.insert(c).second) {
                    next.push_back(std::move(c));
                    if (seen.size() > cap)
                        throw BudgetExceeded("conjugacy class exceeds the pair budget");
                }
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

} // namespace

TripleCount brute_force_triples(const std::vector<grp::Permutation>& gens,
                                const grp::Permutation& x_rep, const grp::Permutation& y_rep,
                                const std::vector<std::pair<std::string, grp::Permutation>>& z_reps,
                                const BruteForceOptions& opts) {
    grp::PermGroup G(gens);
    grp::u128 order = G.order();

    auto class_x = conjugacy_class(gens, x_rep, opts.pair_budget);
    auto class_y = conjugacy_class(gens, y_rep, opts.pair_budget);
    if ((unsigned long long)class_x.size() * class_y.size() > opts.pair_budget)
        throw BudgetExceeded("class product exceeds the pair budget");
    std::vector<std::vector<grp::Permutation>> class_z;
    for (const auto& [name, rep] : z_reps)
        class_z.push_back(conjugacy_class(gens, rep, opts.pair_budget));

    // Conjugating a triple (x, y, z) leaves xyz = 1, the classes, and the
    // closure order invariant, so x can be pinned to x_rep and every count
    // scaled by |class of x|.
    long long x_size = (long long)class_x.size();

    int workers = std::max(1, opts.threads);
    std::vector<std::vector<long long>> hits(workers, std::vector<long long>(z_reps.size(), 0));
    std::vector<long long> gen_hits(workers, 0);
    auto run = [&](int w) {
        for (size_t yi = (size_t)w; yi < class_y.size(); yi += (size_t)workers) {
            const grp::Permutation& y = class_y[yi];
            grp::Permutation z = grp::inverse(grp::compose(x_rep, y));
            bool in_some = false;
            for (size_t zi = 0; zi < class_z.size(); ++zi)
                if (std::binary_search(class_z[zi].begin(), class_z[zi].end(), z)) {
                    ++hits[w][zi];
                    in_some = true;
                }
            if (in_some && opts.count_generating &&
                grp::PermGroup({x_rep, y}).order() == order)
                ++gen_hits[w];
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& th : pool) th.join();
    }

    TripleCount out;
    for (size_t zi = 0; zi < z_reps.size(); ++zi) {
        long long h = 0;
        for (int w = 0; w < workers; ++w) h += hits[w][zi];
        out.per_class_Z[z_reps[zi].first] = h * x_size;
        out.total += h * x_size;
    }
    if (opts.count_generating) {
        long long g = 0;
        for (int w = 0; w < workers; ++w) g += gen_hits[w];
        out.generating = g * x_size;
    }
    return out;
}

Rational aut_orbit_count(long long total_generating, long long aut_order) {
    if (aut_order <= 0) throw std::invalid_argument("automorphism group order must be positive");
    Rational r(total_generating, aut_order);
    if (!r.is_integer()) throw NonIntegerOrbits();
    return r;
}

namespace {

void require_projective(long long p, const std::string& family) {
    if (!primes::is_prime((primes::u128)p) || primes::projective_decompositions(p).pairs.empty())
        throw NotProjectivePrime(family + " parameter gives " + std::to_string(p) +
                                 ", which is not a projective prime");
}

} // namespace

ExpectedCount expected_dessin_count_fermat(int k) {
    if (k < 0 || k > 5) throw std::invalid_argument("Fermat exponent out of range");
    long long e = 1ll << k; // 2^k
    long long p = (1ll << e) + 1;
    require_projective(p, "Fermat");
    ExpectedCount out;
    out.p = p;
    out.count = 1ll << (e - k - 1);
    return out;
}

ExpectedCount expected_dessin_count_psl3(long long q) {
    // q must be a prime power r^e; the dessin count depends on e
    long long r = 0, e = 0;
    for (long long b = 2; b * b <= q; ++b)
        if (q % b == 0) {
            r = b;
            break;
        }
    if (r == 0) {
        r = q;
        e = 1;
    } else {
        long long v = q;
        while (v % r == 0) {
            v /= r;
            ++e;
        }
        if (v != 1) throw std::invalid_argument("q is not a prime power");
    }
    long long p = 1 + q + q * q;
    require_projective(p, "PSL3");
    assert((p - 1) % (3 * e) == 0);
    ExpectedCount out;
    out.p = p;
    out.count = (p - 1) / (3 * e);
    return out;
}

ExpectedCount expected_dessin_count_mersenne(int n) {
    if (n < 2 || n > 61) throw std::invalid_argument("Mersenne exponent out of range");
    long long p = (1ll << n) - 1;
    require_projective(p, "Mersenne");
    assert((p - 1) % (2ll * n) == 0);
    ExpectedCount out;
    out.p = p;
    out.count = (p - 1) / (2ll * n);
    out.lower_bound = true;
    return out;
}

} // namespace chr
