#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "darboux/examples.hpp"
#include "darboux/io.hpp"

using namespace darboux;

namespace {

struct JobOptions {
    std::string spec_file;
    std::string example;
    std::string pair_file;
    std::vector<std::string> params;
    unsigned k = 12;
    unsigned max_order = 10;
    std::string format = "json";
    std::string out_file;
    bool minimal = false;
    bool rank_only = false;
    bool all_examples = false;
};

void add_source_options(CLI::App* cmd, JobOptions& opt, bool with_pair) {
    cmd->add_option("--spec", opt.spec_file, "condition-set JSON file");
    cmd->add_option("--example", opt.example,
                    "built-in example id (9.2 9.3 9.4 9.5 9.8 9.9 9.10 log)");
    cmd->add_option("--param", opt.params,
                    "example parameter override name=value (repeatable)");
    for (const char* p : {"a", "b", "t", "t0", "t1", "s0", "s1", "lambda",
                          "nu", "alpha0", "alpha2", "beta1", "a0", "a1", "a2"})
        cmd->add_option_function<std::string>(
            std::string("--") + p,
            [&opt, p](const std::string& v) {
                opt.params.push_back(std::string(p) + "=" + v);
            },
            "example parameter " + std::string(p));
    cmd->add_option("--K", opt.k, "series truncation depth")->default_val(12);
    cmd->add_option("--max-order", opt.max_order, "spectral algebra order cap")
        ->default_val(10);
    cmd->add_option("--format", opt.format, "json|latex|text")
        ->default_val("json");
    cmd->add_option("--out", opt.out_file, "write output to a file");
    if (with_pair)
        cmd->add_option("--pair", opt.pair_file, "saved pair JSON file");
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const JobOptions& opt, const std::string& text) {
    if (opt.out_file.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(opt.out_file);
    out << text << "\n";
}

ParamMap parse_params(const std::vector<std::string>& raw) {
    ParamMap map;
    for (const auto& kv : raw) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw ParseError("parameter must be name=value: " + kv);
        mpq_class q;
        if (q.set_str(kv.substr(eq + 1), 10) != 0)
            throw ParseError("bad rational in parameter: " + kv);
        q.canonicalize();
        map[kv.substr(0, eq)] = Rational(q);
    }
    return map;
}

ConditionSet load_conditions(const JobOptions& opt) {
    if (!opt.spec_file.empty() && !opt.example.empty())
        throw ParseError("--spec and --example are mutually exclusive");
    if (!opt.spec_file.empty())
        return conditions_from_json(slurp(opt.spec_file));
    if (!opt.example.empty())
        return example_conditions(opt.example, parse_params(opt.params));
    throw ParseError("one of --spec or --example is required");
}

std::string pair_text_summary(const BispectralPair& pair, unsigned max_order) {
    std::ostringstream out;
    out << "P      : " << pair.p.str() << "\n";
    out << "Q      : " << pair.q.str() << "\n";
    out << "g(z)   : " << pair.g.str() << "\n";
    out << "f(z)   : " << pair.f.str() << "\n";
    out << "h(t)   : " << pair.hhat.str() << "  (t stands for z^N)\n";
    out << "P_b    : " << pair.p_b.str() << "\n";
    out << "Q_b    : " << pair.q_b.str() << "\n";
    out << "g_b(z) : " << pair.g_b.str() << "\n";
    out << "f_b(z) : " << pair.f_b.str() << "\n";
    out << "L      : " << pair.l.str() << "\n";
    out << "Lambda : " << pair.lambda_op.str() << "\n";
    out << "Theta  : " << pair.theta.str() << "\n";
    auto entries = spectral_algebra(pair.plane, max_order);
    out << "orders :";
    std::vector<unsigned> orders;
    for (const auto& e : entries) {
        out << " " << e.order;
        orders.push_back(e.order);
    }
    if (!orders.empty()) out << "  (rank " << rank_of(orders) << ")";
    out << "\n";
    return out.str();
}

int cmd_pair(const JobOptions& opt) {
    DarbouxPlane pl = build_plane(load_conditions(opt));
    if (pl.family == ConditionSet::Family::Bessel) {
        auto rep = genericity_check(*pl.bessel);
        if (!rep.generic)
            std::cerr << "warning: genericity heuristic: " << rep.detail
                      << "\n";
    }
    BispectralPair pair = complete_pair(pl);
    if (opt.minimal) {
        auto ml = minimal_L(pl, opt.max_order);
        if (ml)
            std::cerr << "minimal u: " << ml->u.str() << " (operator order "
                      << ml->l_min.ord() << ")\n";
        else
            std::cerr << "minimal u: none up to degree " << opt.max_order
                      << "\n";
    }
    if (opt.format == "latex")
        emit(opt, pair_to_latex(pair));
    else if (opt.format == "text")
        emit(opt, pair_text_summary(pair, opt.max_order));
    else
        emit(opt, pair_to_json(pair));
    return 0;
}

int verify_one(const std::string& label, const BispectralPair& pair,
               const JobOptions& opt, std::ostringstream& out) {
    VerifyReport rep =
        run_verification(pair, opt.k > 8 ? 8 : opt.k, opt.max_order);
    if (opt.rank_only) {
        out << (label.empty() ? "" : label + ": ") << "rank " << rep.rank
            << "\n";
        return rep.rank_matches ? 0 : 3;
    }
    out << (label.empty() ? "" : label + ": ") << report_to_json(rep) << "\n";
    return rep.ok() ? 0 : 3;
}

int cmd_verify(const JobOptions& opt) {
    std::ostringstream out;
    int rc = 0;
    if (opt.all_examples) {
        auto ids = example_ids();
        unsigned threads = std::thread::hardware_concurrency();
        if (const char* env = std::getenv("DARBOUX_THREADS"))
            threads = static_cast<unsigned>(std::max(1, std::atoi(env)));
        threads = std::max(1u, std::min<unsigned>(threads, ids.size()));
        std::vector<std::string> results(ids.size());
        std::vector<int> codes(ids.size(), 0);
        std::atomic<size_t> next{0};
        auto worker = [&] {
            size_t i;
            while ((i = next.fetch_add(1)) < ids.size()) {
                std::ostringstream local;
                try {
                    BispectralPair pair = complete_pair(
                        build_plane(example_conditions(ids[i], {})));
                    codes[i] = verify_one(ids[i], pair, opt, local);
                } catch (const std::exception& e) {
                    local << ids[i] << ": error: " << e.what() << "\n";
                    codes[i] = 2;
                }
                results[i] = local.str();
            }
        };
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
        for (size_t i = 0; i < ids.size(); ++i) {
            out << results[i];
            rc = std::max(rc, codes[i]);
        }
    } else if (!opt.pair_file.empty()) {
        BispectralPair pair = pair_from_json(slurp(opt.pair_file));
        rc = verify_one("", pair, opt, out);
    } else {
        BispectralPair pair = complete_pair(build_plane(load_conditions(opt)));
        rc = verify_one("", pair, opt, out);
    }
    emit(opt, out.str());
    return rc;
}

int cmd_involute(const std::string& which, const JobOptions& opt) {
    DarbouxPlane pl = build_plane(load_conditions(opt));
    DarbouxPlane image;
    std::ostringstream notes;
    if (which == "a") {
        image = involution_a(pl);
    } else if (which == "s") {
        image = involution_s(pl);
    } else if (which == "b") {
        BispectralPair pair = complete_pair(pl);
        image.family = pl.family;
        image.bessel = pl.bessel;
        image.airy = pl.airy;
        image.p = pair.p_b;
        image.g = pair.g_b;
        // one-point parameter laws (the lambda <-> mu exchange)
        const ConditionSet& cs = *pl.conditions;
        if (cs.conditions().size() == 1 &&
            cs.conditions()[0].support == Condition::Support::Point &&
            cs.conditions()[0].coeffs.size() == 2 &&
            cs.conditions()[0].coeffs[0] == Scalar(1)) {
            const auto& c = cs.conditions()[0];
            Scalar lam(c.lambda);
            size_t n0 = 0;
            while (image.g.coeff(n0).is_zero()) ++n0;
            std::vector<Scalar> cc(image.g.coeffs().begin() +
                                       static_cast<long>(n0),
                                   image.g.coeffs().end());
            UniPoly core("z", cc);
            UniPoly t = core.decompress(pl.n(), "t");
            if (t.deg() == 1) {
                Scalar mun = -(t.coeff(0) / t.coeff(1));
                Scalar lamn(1);
                for (unsigned i = 0; i < pl.n(); ++i) lamn *= lam;
                if (pl.family == ConditionSet::Family::Bessel) {
                    Scalar a = c.coeffs[1] / lam;
                    Scalar law = bessel_pbeta(*pl.bessel).eval(-a.inverse());
                    notes << "mu^N = " << mun.str()
                          << "; lambda^N mu^N = " << (lamn * mun).str()
                          << "; P_beta(-1/a) = " << law.str()
                          << (lamn * mun == law ? " [law holds]"
                                                : " [law FAILS]");
                } else {
                    Scalar a = c.coeffs[1];
                    Scalar law = airy_palpha(*pl.airy).eval(-a.inverse());
                    notes << "mu^N = " << mun.str()
                          << "; lambda^N + mu^N = " << (lamn + mun).str()
                          << "; P_alpha'(-1/a) = " << law.str()
                          << (lamn + mun == law ? " [law holds]"
                                                : " [law FAILS]");
                }
            }
        }
    } else {
        throw ParseError("involution must be one of a, s, b");
    }
    std::string text = plane_to_json(image);
    if (!notes.str().empty()) std::cerr << notes.str() << "\n";
    emit(opt, text);
    return 0;
}

int cmd_spectral(const JobOptions& opt) {
    DarbouxPlane pl = build_plane(load_conditions(opt));
    auto entries = spectral_algebra(pl, opt.max_order);
    std::ostringstream out;
    std::vector<unsigned> orders;
    for (const auto& e : entries) {
        out << "order " << e.order << "  u = " << e.u.str() << "\n";
        orders.push_back(e.order);
    }
    if (!orders.empty()) out << "rank " << rank_of(orders) << "\n";
    emit(opt, out.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"polynomial Darboux transformations of Bessel and Airy "
                 "operators: exact bispectral pairs"};
    app.require_subcommand(1);

    JobOptions opt;
    auto* pair = app.add_subcommand("pair", "build the full bispectral pair");
    add_source_options(pair, opt, false);
    pair->add_flag("--minimal", opt.minimal,
                   "also search the minimal-order operator");

    auto* verify = app.add_subcommand("verify", "verify identities and rank");
    add_source_options(verify, opt, true);
    verify->add_flag("--rank-only", opt.rank_only, "print the rank only");
    verify->add_flag("--all-examples", opt.all_examples,
                     "verify the whole built-in corpus");

    std::string which;
    auto* involute = app.add_subcommand("involute", "apply a, s, or b");
    involute->add_option("which", which, "a|s|b")->required();
    add_source_options(involute, opt, false);

    auto* spectral =
        app.add_subcommand("spectral", "enumerate spectral algebra orders");
    add_source_options(spectral, opt, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (pair->parsed()) return cmd_pair(opt);
        if (verify->parsed()) return cmd_verify(opt);
        if (involute->parsed()) return cmd_involute(which, opt);
        if (spectral->parsed()) return cmd_spectral(opt);
    } catch (const IdentityFailed& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
