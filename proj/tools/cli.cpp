#include <CLI11.hpp>
#include <json.hpp>

#include "belyi.hpp"
#include "char_count.hpp"
#include "constructions.hpp"
#include "enumerate.hpp"
#include "golden.hpp"
#include "group_id.hpp"
#include "primes.hpp"

#include <iostream>

using nlohmann::json;

namespace {

struct Global {
    std::string format = "text";
    int threads = 1;
    std::uint64_t seed = 42;
    double budget = 0; // 0 = subcommand default
};

json dessin_json(const dsn::Dessin& d) {
    json j;
    j["degree"] = d.degree();
    j["x"] = grp::print_cycles(d.x());
    j["y"] = grp::print_cycles(d.y());
    j["z"] = grp::print_cycles(d.z());
    if (!d.label().empty()) j["label"] = d.label();
    j["passport"] = d.passport().str();
    j["genus"] = dsn::genus(d);
    return j;
}

void emit_dessins(const Global& g, const std::vector<dsn::Dessin>& ds) {
    if (g.format == "json") {
        json out = json::array();
        for (const auto& d : ds) out.push_back(dessin_json(d));
        std::cout << out.dump(2) << "\n";
    } else {
        dsn::write_dessins(std::cout, ds);
        std::cout.flush();
    }
}

json label_json(const gid::GroupLabel& l) {
    json j;
    j["family"] = l.str();
    if (l.n) j["n"] = l.n;
    if (l.q) j["q"] = (long long)l.q;
    j["order"] = l.order_overflowed ? std::string("overflow")
                                    : grp::u128_to_string(l.order);
    return j;
}

int run_enumerate(const Global& g, const std::string& black, const std::string& white,
                  const std::string& faces, int degree) {
    enumerate::PassportQuery q;
    q.black = grp::CycleType::parse(black, degree);
    q.white = grp::CycleType::parse(white, degree);
    if (faces != "-") q.faces = grp::CycleType::parse(faces, degree);
    q.degree = degree;
    enumerate::EnumerateOptions opts;
    opts.threads = g.threads;
    if (g.budget) opts.candidate_budget = (long long)g.budget;
    auto ds = enumerate::enumerate_passport(q, opts);
    if (g.format == "json") {
        json out;
        out["count"] = ds.size();
        out["dessins"] = json::array();
        for (const auto& d : ds) out["dessins"].push_back(dessin_json(d));
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "# " << ds.size() << " isomorphism classes\n";
        dsn::write_dessins(std::cout, ds);
        std::cout.flush();
    }
    return 0;
}

int run_identify(const Global& g, const std::string& file) {
    auto ds = dsn::read_dessin_file(file);
    json out = json::array();
    for (const auto& d : ds) {
        auto l = gid::identify(d);
        if (g.format == "json") {
            json j = label_json(l);
            if (!d.label().empty()) j["label"] = d.label();
            out.push_back(j);
        } else {
            if (!d.label().empty()) std::cout << d.label() << ": ";
            std::cout << l.str() << "  order "
                      << (l.order_overflowed ? std::string(">2^128")
                                             : grp::u128_to_string(l.order))
                      << "\n";
        }
    }
    if (g.format == "json") std::cout << out.dump(2) << "\n";
    return 0;
}

int run_count_triples(const Global& g, const std::string& table, const std::string& xc,
                      const std::string& yc, const std::vector<std::string>& zcs,
                      const std::string& brute_file) {
    json out;
    if (!table.empty()) {
        auto ct = chr::read_character_table_file(table);
        json per = json::object();
        for (const auto& zc : zcs) {
            auto n = chr::frobenius_count(ct, xc, yc, zc);
            per[zc] = n.str();
            if (g.format == "text")
                std::cout << ct.group_name << " (" << xc << "," << yc << "," << zc
                          << "): " << n.str() << "\n";
        }
        out["frobenius"] = per;
    }
    if (!brute_file.empty()) {
        auto ds = dsn::read_dessin_file(brute_file);
        if (ds.empty()) throw std::runtime_error("no dessin in " + brute_file);
        const auto& d = ds.front();
        chr::BruteForceOptions opts;
        opts.threads = g.threads;
        if (g.budget) opts.pair_budget = (unsigned long long)g.budget;
        auto tc = chr::brute_force_triples(
            dsn::monodromy_group(d).generators(), d.x(), d.y(),
            {{ "z", d.z() }}, opts);
        out["brute_force"]["total"] = tc.total;
        if (tc.generating) out["brute_force"]["generating"] = *tc.generating;
        if (g.format == "text") {
            std::cout << "brute force total: " << tc.total;
            if (tc.generating) std::cout << "  generating: " << *tc.generating;
            std::cout << "\n";
        }
    }
    if (g.format == "json") std::cout << out.dump(2) << "\n";
    return 0;
}

int run_construct(const Global& g, const std::string& kind, long long p,
                  const std::string& variant, int n, int a_index, int b_index,
                  bool classes) {
    std::vector<dsn::Dessin> ds;
    if (kind == "d0") {
        ds.push_back(cons::modular_dessin(p));
    } else if (kind == "coset") {
        ds.push_back(cons::psl2_coset_dessin(variant == "Hbar" ? cons::CosetVariant::Hbar
                                                               : cons::CosetVariant::H));
    } else if (kind == "family") {
        if (variant == "A")
            ds.push_back(cons::family_dessin_degree_p_plus_1(p));
        else
            ds.push_back(cons::family_dessin_degree_p(
                p, variant == "Dprime" ? cons::TreeVariant::Dprime
                                       : cons::TreeVariant::D));
    } else if (kind == "agl") {
        auto t = cons::find_glnq_triple(n, g.seed,
                                        g.budget ? (long long)g.budget : 1000000);
        auto as = cons::agl_a_choices(t.x);
        auto bs = cons::agl_b_choices(t.y);
        if (classes) {
            // sweep every (a, b) and report the isomorphism classes among the
            // lifts that stay connected
            std::vector<dsn::Dessin> reps;
            std::vector<int> sizes;
            int skipped = 0;
            for (auto a : as)
                for (auto b : bs) {
                    try {
                        auto d = dsn::canonical_form(cons::agl_lift(t.x, t.y, t.z, a, b));
                        bool found = false;
                        for (size_t k = 0; k < reps.size(); ++k)
                            if (reps[k] == d) {
                                ++sizes[k];
                                found = true;
                            }
                        if (!found) {
                            reps.push_back(d);
                            sizes.push_back(1);
                        }
                    } catch (const dsn::NotTransitive&) {
                        ++skipped;
                    }
                }
            if (g.format == "json") {
                json out;
                out["classes"] = reps.size();
                out["disconnected_choices"] = skipped;
                out["class_sizes"] = sizes;
                out["representatives"] = json::array();
                for (const auto& d : reps) out["representatives"].push_back(dessin_json(d));
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << "# " << reps.size() << " isomorphism classes over "
                          << as.size() * bs.size() << " (a,b) choices, " << skipped
                          << " disconnected\n";
                dsn::write_dessins(std::cout, reps);
                std::cout.flush();
            }
            return 0;
        }
        if (a_index < 0 || a_index >= (int)as.size() || b_index < 0 ||
            b_index >= (int)bs.size())
            throw CLI::ValidationError("--a-index/--b-index out of range");
        ds.push_back(cons::agl_lift(t.x, t.y, t.z, as[a_index], bs[b_index]));
    } else {
        throw CLI::ValidationError("unknown construction: " + kind);
    }
    emit_dessins(g, ds);
    return 0;
}

int run_bh(const Global& g, std::vector<std::string> poly_strs, double x, bool li,
           long long prime_bound, bool with_q) {
    primes::PolyFamily fam;
    for (const auto& s : poly_strs) fam.polys.push_back(primes::parse_poly(s));
    primes::BHOptions bo;
    bo.threads = g.threads;
    double C = primes::bh_constant(fam, prime_bound, bo);
    double E = primes::bh_estimate_with_constant(fam, C, x, li);
    long long Q = -1;
    if (with_q) Q = primes::count_Q(3, 1, (long long)x, g.threads);
    if (g.format == "json") {
        json out;
        out["C"] = C;
        out["x"] = x;
        out["E"] = E;
        if (with_q) {
            out["Q"] = Q;
            out["E_over_Q"] = E / (double)Q;
        }
        std::cout << out.dump(2) << "\n";
    } else if (g.format == "tsv") {
        std::cout << "x\tQ(x)\tE(x)\tE(x)/Q(x)\n";
        std::cout.precision(10);
        std::cout << x << "\t" << (with_q ? std::to_string(Q) : "-") << "\t" << E << "\t";
        if (with_q)
            std::cout << E / (double)Q;
        else
            std::cout << "-";
        std::cout << "\n";
    } else {
        std::cout.precision(10);
        std::cout << "C = " << C << "\nE(" << x << ") = " << E << "\n";
        if (with_q) std::cout << "Q(" << x << ") = " << Q << "\n";
    }
    return 0;
}

int run_projective_primes(const Global& g, long long max, bool histogram) {
    auto pc = primes::count_projective_primes(max);
    if (g.format == "json") {
        json out;
        out["total"] = pc.total;
        out["primes"] = pc.primes;
        if (histogram) {
            json h = json::array();
            for (const auto& [ne, c] : pc.by_form)
                h.push_back({{"n", ne.first}, {"e", ne.second}, {"count", c}});
            out["by_form"] = h;
        }
        std::cout << out.dump(2) << "\n";
    } else if (g.format == "tsv") {
        std::cout << "p\n";
        for (auto p : pc.primes) std::cout << p << "\n";
    } else {
        std::cout << pc.total << " projective primes <= " << max << "\n";
        for (auto p : pc.primes) std::cout << p << " ";
        std::cout << "\n";
        if (histogram)
            for (const auto& [ne, c] : pc.by_form)
                std::cout << "n=" << ne.first << " e=" << ne.second << ": " << c << "\n";
    }
    return 0;
}

int run_verify_belyi(const Global& g, const std::string& which) {
    bly::IdentityReport rep;
    if (which == "klein")
        rep = bly::verify_klein_shabat(1);
    else if (which == "d013")
        rep = bly::verify_d013_belyi();
    else
        throw CLI::ValidationError("--which must be klein or d013");
    if (g.format == "json") {
        json out;
        out["ok"] = rep.ok;
        if (rep.failing_coefficient >= 0)
            out["failing_coefficient"] = rep.failing_coefficient;
        if (!rep.resolved_reading.empty()) out["resolved_reading"] = rep.resolved_reading;
        if (rep.qside_sign) out["qside_sign"] = rep.qside_sign;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << (rep.ok ? "ok" : "FAILED");
        if (!rep.resolved_reading.empty())
            std::cout << "  constant term reading: " << rep.resolved_reading
                      << "  sign: " << (rep.qside_sign > 0 ? "+" : "-");
        if (!rep.detail.empty()) std::cout << "  " << rep.detail;
        std::cout << "\n";
    }
    return rep.ok ? 0 : 1;
}

int emit_report(const Global& g, const gold::Report& rep) {
    if (g.format == "json") {
        json out;
        out["ok"] = rep.ok;
        out["checks"] = json::array();
        for (const auto& l : rep.lines) {
            json j{{"id", l.id}, {"ok", l.ok}};
            if (!l.detail.empty()) j["detail"] = l.detail;
            out["checks"].push_back(j);
        }
        std::cout << out.dump(2) << "\n";
    } else {
        gold::print_report(std::cout, rep);
    }
    return rep.ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"dessins of type (3,2,p): enumeration, identification, counting, "
                 "constructions, and prime-family estimates"};
    app.require_subcommand(1);
    Global g;
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"text", "json", "tsv"}));
    app.add_option("--threads", g.threads, "worker threads");
    app.add_option("--seed", g.seed, "random seed for searches");
    app.add_option("--budget", g.budget, "search/enumeration budget");

    // enumerate
    std::string black, white, faces = "-";
    int degree = 0;
    auto* c_enum = app.add_subcommand("enumerate", "enumerate dessins with a passport");
    c_enum->add_option("--black", black, "black cycle type, e.g. 3^3,1^2")->required();
    c_enum->add_option("--white", white, "white cycle type")->required();
    c_enum->add_option("--faces", faces, "face cycle type, or - for free");
    c_enum->add_option("--degree", degree, "degree")->required();

    // identify
    std::string dessin_file;
    auto* c_id = app.add_subcommand("identify", "identify monodromy groups of a file");
    c_id->add_option("--dessin", dessin_file, "dessin file")->required();

    // count-triples
    std::string table, xc, yc, brute_file;
    std::vector<std::string> zcs;
    auto* c_ct = app.add_subcommand("count-triples",
                                    "Frobenius and brute-force triple counts");
    c_ct->add_option("--table", table, "character table file");
    c_ct->add_option("--x", xc, "class of x");
    c_ct->add_option("--y", yc, "class of y");
    c_ct->add_option("--z", zcs, "class(es) of z");
    c_ct->add_option("--brute", brute_file, "dessin file: brute-force count on its "
                                            "monodromy group and classes");

    // construct
    std::string variant = "D";
    long long cp = 11;
    int cn = 5, a_index = 0, b_index = 0;
    bool classes = false;
    auto* c_cons = app.add_subcommand("construct", "explicit constructions");
    c_cons->require_subcommand(1);
    auto* cc_d0 = c_cons->add_subcommand("d0", "modular dessin of degree p+1");
    cc_d0->add_option("--p", cp, "prime")->required();
    auto* cc_coset = c_cons->add_subcommand("coset", "degree-11 coset dessin");
    cc_coset->add_option("--variant", variant, "H or Hbar")
        ->check(CLI::IsMember({"H", "Hbar"}));
    auto* cc_fam = c_cons->add_subcommand("family", "tree/loop families");
    cc_fam->add_option("--p", cp, "prime")->required();
    cc_fam->add_option("--variant", variant, "D, Dprime, or A (degree p+1)")
        ->check(CLI::IsMember({"D", "Dprime", "A"}));
    auto* cc_agl = c_cons->add_subcommand("agl", "affine lift of a GL_n(2) triple");
    cc_agl->add_option("--n", cn, "dimension");
    cc_agl->add_option("--a-index", a_index, "index into the a choices");
    cc_agl->add_option("--b-index", b_index, "index into the b choices");
    cc_agl->add_flag("--classes", classes, "sweep all (a,b) and report classes");

    // bh
    std::vector<std::string> polys;
    double bx = 1e10;
    bool li = false, with_q = false;
    double prime_bound = 1e7;
    auto* c_bh = app.add_subcommand("bh", "Bateman-Horn estimate");
    c_bh->add_option("--poly", polys, "polynomial, e.g. 1+t+t^2")->required();
    c_bh->add_option("--x", bx, "upper limit");
    c_bh->add_flag("--li", li, "logarithmic-integral variant");
    c_bh->add_option("--prime-bound", prime_bound, "sieve bound for the constant");
    c_bh->add_flag("--with-q", with_q, "also count Q(x) exactly (family n=3, e=1)");

    // projective-primes
    double pmax = 1e8;
    bool histogram = false;
    auto* c_pp = app.add_subcommand("projective-primes", "projective primes up to max");
    c_pp->add_option("--max", pmax, "bound");
    c_pp->add_flag("--histogram", histogram, "counts by (n, e)");

    // goormaghtigh
    double gmax = 1e6;
    auto* c_gm = app.add_subcommand("goormaghtigh",
                                    "primes with two projective representations");
    c_gm->add_option("--max", gmax, "bound");

    // verify-belyi
    std::string which = "klein";
    auto* c_vb = app.add_subcommand("verify-belyi", "check the published identities");
    c_vb->add_option("--which", which, "klein or d013")->required();

    // verify-appendix
    std::string data_dir = ARTIFACT_DATA_DIR;
    auto* c_va = app.add_subcommand("verify-appendix", "re-verify the golden datasets");
    c_va->add_option("--data-dir", data_dir, "data directory");

    // report-tables
    bool skip_slow = false;
    auto* c_rt = app.add_subcommand("report-tables", "regenerate the published tables");
    c_rt->add_flag("--skip-slow", skip_slow, "skip the 10^9 sieve");

    // let global flags appear after a subcommand name
    for (CLI::App* sc : {c_enum, c_id, c_ct, c_cons, cc_d0, cc_coset, cc_fam, cc_agl,
                         c_bh, c_pp, c_gm, c_vb, c_va, c_rt})
        sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*c_enum) return run_enumerate(g, black, white, faces, degree);
        if (*c_id) return run_identify(g, dessin_file);
        if (*c_ct) return run_count_triples(g, table, xc, yc, zcs, brute_file);
        if (*c_cons) {
            if (*cc_d0) return run_construct(g, "d0", cp, variant, cn, 0, 0, false);
            if (*cc_coset) return run_construct(g, "coset", cp, variant, cn, 0, 0, false);
            if (*cc_fam) return run_construct(g, "family", cp, variant, cn, 0, 0, false);
            return run_construct(g, "agl", cp, variant, cn, a_index, b_index, classes);
        }
        if (*c_bh) return run_bh(g, polys, bx, li, (long long)prime_bound, with_q);
        if (*c_pp) return run_projective_primes(g, (long long)pmax, histogram);
        if (*c_gm) {
            auto v = primes::goormaghtigh_scan((long long)gmax);
            if (g.format == "json") {
                std::cout << json(v).dump() << "\n";
            } else {
                for (auto p : v) std::cout << p << "\n";
            }
            return 0;
        }
        if (*c_vb) return run_verify_belyi(g, which);
        if (*c_va) return emit_report(g, gold::verify_appendix(data_dir));
        if (*c_rt) return emit_report(g, gold::report_tables(skip_slow, g.threads));
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
