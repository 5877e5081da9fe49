// Command-line front end: zero-table lifecycle, explicit-formula
// verification, and the desk-scale scan drivers.
//
// Exit codes: 0 success, 2 precondition violation, 3 property/budget
// violation, 4 I/O or parse error.

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zetalab/zetalab.hpp"

namespace fs = std::filesystem;
using namespace zetalab;

namespace {

struct RunConfig {
    std::string cache_path;
    std::string reference_path;
    int reference_skip = 0;
    std::string out_dir = ".";
    unsigned workers = 1;
    std::map<std::string, double> tolerances;

    double tol(const std::string& name, double fallback) const {
        auto it = tolerances.find(name);
        return it == tolerances.end() ? fallback : it->second;
    }
};

ZeroTable load_table(const RunConfig& cfg) {
    if (!cfg.cache_path.empty()) return load_ztab(cfg.cache_path);
    if (!cfg.reference_path.empty()) {
        auto t = import_zeros(cfg.reference_path, cfg.reference_skip);
        verify_table(t);
        return t;
    }
    throw domain_error("no zero table: pass --cache or --reference");
}

void write_table_csv(const ZeroTable& t, const fs::path& path) {
    csv_writer csv(path, "gamma");
    for (double g : t.ordinates) csv.row({fmt17(g)});
}

void write_plot_script(const fs::path& dir, const std::string& name,
                       const std::string& csv_name, const std::string& x,
                       const std::string& y, const std::string& title) {
    std::ofstream out(dir / (name + ".gnuplot"));
    out << "# gnuplot script for " << csv_name << "\n"
        << "set datafile separator ','\n"
        << "set key off\n"
        << "set xlabel '" << x << "'\n"
        << "set ylabel '" << y << "'\n"
        << "set title '" << title << "'\n"
        << "plot '" << csv_name << "' using '" << x << "':'" << y
        << "' with points pointtype 7 pointsize 0.2\n";
}

std::string sign_name(SelbergParams::sign_t s) {
    return s == SelbergParams::plus ? "plus" : "minus";
}

int cmd_find_zeros(const RunConfig& cfg, double from, double to,
                   const std::string& out) {
    FindOptions opt;
    opt.workers = cfg.workers;
    ZeroTable ref;
    if (!cfg.reference_path.empty()) {
        ref = import_zeros(cfg.reference_path, cfg.reference_skip);
        opt.reference = &ref;
    }
    auto table = find_zeros(from, to, opt);
    auto rep = verify_table(table, opt.reference ? &ref : nullptr);
    fs::path cache = fs::path(cfg.out_dir) / out;
    save_ztab(table, cache);
    write_table_csv(table, cache.string() + ".csv");
    std::cout << "zeros found: " << table.size() << "\n"
              << "range: (" << fmt17(from) << ", " << fmt17(to) << "]\n"
              << "verified: " << (table.verified ? "yes" : "no") << "\n"
              << "  corridor: " << (rep.corridor_ok ? "ok" : "out-of-band")
              << "  s1-windows: " << (rep.s1_windows_ok ? "ok" : "violated")
              << "  reference: "
              << (opt.reference
                      ? (rep.reference_match ? "matched" : "MISMATCH")
                      : "none")
              << "\n"
              << "cache: " << cache.string() << "\n";
    if (opt.reference && !rep.reference_match)
        throw property_error("computed ordinates do not match the reference");
    return 0;
}

int cmd_import_zeros(const RunConfig& cfg, const std::string& in, int skip,
                     const std::string& out) {
    auto table = import_zeros(in, skip);
    auto rep = verify_table(table);
    fs::path cache = fs::path(cfg.out_dir) / out;
    save_ztab(table, cache);
    write_table_csv(table, cache.string() + ".csv");
    std::cout << "imported ordinates: " << table.size() << "\n"
              << "height range: (0, " << fmt17(table.t_max) << "]\n"
              << "verified: " << (table.verified ? "yes" : "no")
              << " (corridor " << (rep.corridor_ok ? "ok" : "broken")
              << ", s1-windows " << (rep.s1_windows_ok ? "ok" : "broken")
              << ")\n"
              << "cache: " << cache.string() << "\n";
    return 0;
}

int cmd_verify_ef(const RunConfig& cfg, std::vector<double> ts,
                  std::vector<double> ls, std::vector<double> deltas,
                  const std::string& sign, double delete_zero,
                  const std::string& out) {
    if (ts.empty()) ts = {50, 100, 500, 1000, 5000};
    if (ls.empty()) ls = {1, 2, 5};
    if (deltas.empty()) deltas = {1.0, 1.25, 1.5};
    double t_min_grid = *std::min_element(ts.begin(), ts.end());
    for (double d : deltas)
        if (d < 1.0) throw domain_error("verify-ef: delta >= 1 required");
    for (double L : ls)
        if (L > 2.0 * std::sqrt(t_min_grid))
            throw domain_error("verify-ef: L <= 2 sqrt(t) required");

    auto table = load_table(cfg);
    if (delete_zero > 0.0) {
        auto it = std::lower_bound(table.ordinates.begin(),
                                   table.ordinates.end(), delete_zero);
        if (it == table.ordinates.end()) --it;
        if (it != table.ordinates.begin() &&
            std::abs(*(it - 1) - delete_zero) < std::abs(*it - delete_zero))
            --it;
        std::cout << "fault injection: removed ordinate " << fmt17(*it) << "\n";
        table.ordinates.erase(it);
    }

    double max_delta = *std::max_element(deltas.begin(), deltas.end());
    auto mangoldt = von_mangoldt_sieve(prime_cutoff(max_delta));

    std::vector<SelbergParams::sign_t> signs;
    if (sign == "both" || sign == "plus") signs.push_back(SelbergParams::plus);
    if (sign == "both" || sign == "minus")
        signs.push_back(SelbergParams::minus);
    if (signs.empty())
        throw domain_error("verify-ef: sign must be both|plus|minus");

    fs::path out_path = fs::path(cfg.out_dir) / out;
    csv_writer csv(out_path, ExplicitFormulaReport::csv_header());
    const double budget_max = cfg.tol("ef_budget_max", 1e-2);
    std::size_t rows = 0, violations = 0;
    double worst_ratio = 0.0;
    for (double L : ls)
        for (double d : deltas)
            for (auto s : signs) {
                SelbergParams p{L, d, s};
                auto hat = build_prime_hat(p, mangoldt);
                for (double t : ts) {
                    auto rep = evaluate_formula(table, t, p, mangoldt, &hat);
                    bool ok = std::abs(rep.residual) <= rep.budget &&
                              rep.budget <= budget_max;
                    if (!ok) ++violations;
                    worst_ratio =
                        std::max(worst_ratio, std::abs(rep.residual) /
                                                  std::max(rep.budget, 1e-300));
                    csv.row({fmt17(rep.t), fmt17(L), fmt17(d), sign_name(s),
                             fmt17(rep.zero_side), fmt17(rep.zero_tail_bound),
                             fmt17(rep.boundary), fmt17(rep.arch),
                             fmt17(rep.pi_term), fmt17(rep.prime_side),
                             fmt17(rep.residual), fmt17(rep.budget)});
                    ++rows;
                }
            }
    std::cout << "rows: " << rows << "\n"
              << "violations: " << violations << "\n"
              << "max |residual|/budget: " << fmt17(worst_ratio) << "\n"
              << "csv: " << out_path.string() << "\n";
    if (violations)
        throw property_error(std::to_string(violations) +
                             " explicit-formula rows out of budget");
    return 0;
}

int cmd_scan(const RunConfig& cfg, const std::string& kind,
             std::vector<double> ts, std::vector<double> hs, double from,
             double to, double mult_h) {
    auto table = load_table(cfg);
    fs::path dir(cfg.out_dir);
    if (to <= 0.0) to = table.t_max;
    from = std::max(from, std::max(10.0, table.t_min));
    to = std::min(to, table.t_max);

    if (kind == "theorem1") {
        if (ts.empty()) throw domain_error("scan theorem1: --t required");
        if (hs.empty()) throw domain_error("scan theorem1: --h required");
        auto stats = theorem1_scan(table, ts, hs);
        csv_writer csv(dir / "theorem1.csv", WindowStat::csv_header());
        for (const auto& w : stats)
            csv.row({fmt17(w.t), fmt17(w.h), fmt17(w.count), fmt17(w.main),
                     fmt17(w.deviation), fmt17(w.ratio)});
        write_plot_script(dir, "theorem1", "theorem1.csv", "t", "ratio",
                          "window deviation vs (1/2) log t / loglog t");
        double max_ratio = 0.0;
        for (const auto& w : stats) max_ratio = std::max(max_ratio, w.ratio);
        std::cout << "rows: " << stats.size() << "\n"
                  << "max_ratio: " << fmt17(max_ratio) << "\n";
    } else if (kind == "theorem2") {
        if (ts.empty()) throw domain_error("scan theorem2: --t required");
        csv_writer csv(dir / "theorem2.csv", Theorem2Result::csv_header());
        for (double t : ts) {
            auto r = theorem2_deduce(table, t);
            csv.row({fmt17(t), fmt17(r.h_plus), fmt17(r.s_plus),
                     fmt17(r.h_minus), fmt17(r.s_minus),
                     r.bound_check ? "1" : "0"});
        }
        write_plot_script(dir, "theorem2", "theorem2.csv", "t", "h_plus",
                          "first admissible offset with S <= 1");
        std::cout << "rows: " << ts.size() << "\n";
    } else if (kind == "gaps") {
        csv_writer csv(dir / "gaps.csv", GapStat::csv_header());
        auto summary = gap_scan(table, [&](const GapStat& g) {
            if (g.gamma < from || g.gamma > to) return;
            csv.row({fmt17(g.gamma), fmt17(g.gamma_next), fmt17(g.gap),
                     fmt17(g.bound), fmt17(g.ratio)});
        });
        write_plot_script(dir, "gaps", "gaps.csv", "gamma", "ratio",
                          "gap vs pi / loglog gamma");
        std::ofstream sum(dir / "gaps.summary.txt");
        sum << "gaps: " << summary.count << "\n"
            << "max_ratio: " << fmt17(summary.max_ratio) << "\n"
            << "at_gamma: " << fmt17(summary.at_gamma) << "\n"
            << "max_gap: " << fmt17(summary.max_gap) << "\n";
        std::cout << "gaps: " << summary.count
                  << "\nmax_ratio: " << fmt17(summary.max_ratio)
                  << "\nat_gamma: " << fmt17(summary.at_gamma) << "\n";
    } else if (kind == "s-extrema") {
        csv_writer csv(dir / "s_samples.csv", "t,n_of_t,theta,s,s1");
        auto r = s_extrema_scan(table, from, to, [&](const SSample& s) {
            csv.row({fmt17(s.t), fmt17(s.n_of_t), fmt17(s.theta), fmt17(s.s),
                     fmt17(s.s1)});
        });
        write_plot_script(dir, "s_samples", "s_samples.csv", "t", "s",
                          "S at ordinates (half-jump convention)");
        std::ofstream sum(dir / "s_extrema.summary.txt");
        sum << "sup_s: " << fmt17(r.sup_s) << "\n"
            << "argmax: " << fmt17(r.argmax) << "\n"
            << "inf_s: " << fmt17(r.inf_s) << "\n"
            << "argmin: " << fmt17(r.argmin) << "\n"
            << "max_ratio_to_theorem2: " << fmt17(r.max_ratio) << "\n";
        std::cout << "sup_s: " << fmt17(r.sup_s) << " at " << fmt17(r.argmax)
                  << "\ninf_s: " << fmt17(r.inf_s) << " at " << fmt17(r.argmin)
                  << "\nmax_ratio_to_theorem2: " << fmt17(r.max_ratio) << "\n";
    } else if (kind == "multiplicity") {
        csv_writer csv(dir / "multiplicity.csv", "gamma,h,count");
        int worst = 0;
        std::size_t rows = 0;
        for (double g : table.ordinates) {
            if (g < from || g > to) continue;
            int m = multiplicity_bound(table, g, mult_h);
            double h = mult_h;
            if (h <= 0.0) {
                double ll = std::log(std::log(g));
                h = 1.0 / (ll * ll);
            }
            csv.row({fmt17(g), fmt17(h), std::to_string(m)});
            worst = std::max(worst, m);
            ++rows;
        }
        write_plot_script(dir, "multiplicity", "multiplicity.csv", "gamma",
                          "count", "window multiplicity bound");
        std::ofstream sum(dir / "multiplicity.summary.txt");
        sum << "zeros: " << rows << "\n"
            << "max_count: " << worst << "\n";
        std::cout << "zeros: " << rows << "\nmax_count: " << worst << "\n";
    } else {
        throw domain_error("scan: unknown kind '" + kind + "'");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"desk-scale laboratory for zero counting, the argument "
                 "function, extremal band-limited majorants, and the "
                 "explicit formula"};
    app.require_subcommand(1);
    app.set_config("--config", "",
                   "flat key-value config file (ini-style sections)");

    RunConfig cfg;
    std::vector<std::string> tol_kv;
    app.add_option("--out-dir", cfg.out_dir, "output directory");
    app.add_option("--workers", cfg.workers, "worker thread count")
        ->check(CLI::PositiveNumber);
    app.add_option("--cache", cfg.cache_path, "ZTAB1 zero-table cache");
    app.add_option("--reference", cfg.reference_path,
                   "reference ordinate list (one decimal per line)");
    app.add_option("--skip", cfg.reference_skip,
                   "header lines to skip in --reference");
    app.add_option("--tol", tol_kv, "named tolerance override name=value");

    auto* fz = app.add_subcommand("find-zeros", "locate zeros of Z in a range");
    double from = 10.0, to = 100.0;
    std::string fz_out = "zeros.ztab";
    fz->add_option("--from", from, "lower height")->required();
    fz->add_option("--to", to, "upper height")->required();
    fz->add_option("--out", fz_out, "cache file name");

    auto* iz = app.add_subcommand("import-zeros", "import a text ordinate list");
    std::string iz_in, iz_out = "imported.ztab";
    int iz_skip = 0;
    iz->add_option("--in", iz_in, "input text file")->required();
    iz->add_option("--skip", iz_skip, "header lines to skip");
    iz->add_option("--out", iz_out, "cache file name");

    auto* ef = app.add_subcommand("verify-ef",
                                  "evaluate the explicit formula over a grid");
    std::vector<double> ef_t, ef_l, ef_d;
    std::string ef_sign = "both", ef_out = "explicit_formula.csv";
    double ef_delete = 0.0;
    ef->add_option("--t", ef_t, "heights")->delimiter(',');
    ef->add_option("--L", ef_l, "window half-lengths")->delimiter(',');
    ef->add_option("--delta", ef_d, "band limits")->delimiter(',');
    ef->add_option("--sign", ef_sign, "both|plus|minus");
    ef->add_option("--delete-zero", ef_delete,
                   "fault injection: remove the ordinate nearest this height");
    ef->add_option("--out", ef_out, "CSV file name");

    auto* sc = app.add_subcommand("scan", "run a desk-scale report scan");
    sc->set_help_flag("--help", "print help");  // frees -h for --h below
    std::string sc_kind;
    std::vector<double> sc_t, sc_h;
    double sc_from = 10.0, sc_to = 0.0, sc_mult_h = 0.0;
    sc->add_option("kind", sc_kind,
                   "theorem1|theorem2|gaps|s-extrema|multiplicity")
        ->required();
    sc->add_option("--t", sc_t, "window heights")->delimiter(',');
    sc->add_option("--h", sc_h, "window lengths")->delimiter(',');
    sc->add_option("--from", sc_from, "scan range start");
    sc->add_option("--to", sc_to, "scan range end");
    sc->add_option("--mult-h", sc_mult_h,
                   "fixed multiplicity window (default: adaptive schedule)");

    try {
        app.parse(argc, argv);
        for (const auto& kv : tol_kv) {
            auto eq = kv.find('=');
            if (eq == std::string::npos)
                throw domain_error("--tol expects name=value");
            cfg.tolerances[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
        }
        fs::create_directories(cfg.out_dir);
        if (fz->parsed()) return cmd_find_zeros(cfg, from, to, fz_out);
        if (iz->parsed()) return cmd_import_zeros(cfg, iz_in, iz_skip, iz_out);
        if (ef->parsed())
            return cmd_verify_ef(cfg, ef_t, ef_l, ef_d, ef_sign, ef_delete,
                                 ef_out);
        if (sc->parsed())
            return cmd_scan(cfg, sc_kind, sc_t, sc_h, sc_from, sc_to,
                            sc_mult_h);
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const unresolved_interval_error& e) {
        std::cerr << "error: " << e.what() << "\nunresolved interval: ["
                  << fmt17(e.lo) << ", " << fmt17(e.hi) << "]\n";
        return 3;
    } catch (const domain_error& e) {
        std::cerr << "precondition error: " << e.what() << "\n";
        return 2;
    } catch (const range_error& e) {
        std::cerr << "precondition error: " << e.what() << "\n";
        return 2;
    } catch (const capacity_error& e) {
        std::cerr << "precondition error: " << e.what() << "\n";
        return 2;
    } catch (const property_error& e) {
        std::cerr << "property violation: " << e.what() << "\n";
        return 3;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 4;
    } catch (const io_error& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
}
