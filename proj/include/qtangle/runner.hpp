// runner.hpp — the command implementations behind the CLI: time-series sweeps,
// figure-dataset presets, and oracle-comparison runs, all emitting CSV.
// Output is byte-deterministic for a given configuration: rows are computed
// in parallel but assembled in index order, and no timestamps enter the files.

#pragma once

#include <qtangle/csv.hpp>
#include <qtangle/measures.hpp>
#include <qtangle/model.hpp>
#include <qtangle/oracle.hpp>

#include <atomic>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

namespace qtangle::cli {

struct Grid {
    double t_start = 0.0;
    double t_end = -1.0;  // < 0: choose 2 revival periods of the dominant scale
    int n_points = 200;
};

struct RunConfig {
    std::string command;  // series | figure | oracle-compare
    SystemParams params;
    Grid grid;
    bool deltat_units = false;  // interpret t_start/t_end as (delta t)/pi
    std::string figure_id;      // fig2 | fig3 | fig4 | fig5
    H1Variant h1_variant = H1Variant::corrected;
    bool verbatim = false;
    double tol = 1e-5;
    std::string output_path;
    int n_max = 0;       // 0: default rule
    double dt = 0.0;     // 0: default rule
    int snapshots = 41;  // oracle-compare grid
};

// Plain key=value configuration file: one pair per line, '#' starts a comment,
// blank lines ignored. Keys use the long flag names without the leading dashes
// (g1, delta, alpha-re, t-end, ...). Command-line flags take precedence.
inline std::map<std::string, std::string> read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    auto trim = [](std::string s) {
        const auto a = s.find_first_not_of(" \t\r");
        const auto b = s.find_last_not_of(" \t\r");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config line " + std::to_string(lineno) +
                                     " is not key=value: " + line);
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return kv;
}

namespace detail {

inline void parallel_for(int n, const std::function<void(int)>& fn) {
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (hw == 1 || n < 4) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (unsigned w = 0; w < hw; ++w)
        pool.emplace_back([&] {
            for (int i = next++; i < n; i = next++) fn(i);
        });
    for (auto& th : pool) th.join();
}

inline std::vector<std::string> report_columns() {
    return {"t",
            "neg_qq_c", "neg_q1c_q2", "neg_q2c_q1", "concurrence_qq", "total_entanglement",
            "tangle_c_q1q2", "three_tangle", "monogamy_residual",
            "cf_neg_qq_c", "cf_neg_q1c_q2", "cf_neg_q2c_q1", "cf_concurrence_qq",
            "cf_total_entanglement", "cf_tangle_c_q1q2", "cf_three_tangle",
            "cf_three_tangle_kappa"};
}

inline std::vector<std::string> report_cells(const EntanglementReport& r) {
    return {fmt17(r.t),
            fmt17(r.neg_qq_c), fmt17(r.neg_q1c_q2), fmt17(r.neg_q2c_q1),
            fmt17(r.concurrence_qq), fmt17(r.total_entanglement),
            fmt17(r.tangle_c_q1q2), fmt17(r.three_tangle), fmt17(r.monogamy_residual),
            fmt17(r.cf_neg_qq_c), fmt17(r.cf_neg_q1c_q2), fmt17(r.cf_neg_q2c_q1),
            fmt17(r.cf_concurrence_qq), fmt17(r.cf_total_entanglement),
            fmt17(r.cf_tangle_c_q1q2), fmt17(r.cf_three_tangle),
            fmt17(r.cf_three_tangle_kappa)};
}

inline std::string params_comment(const SystemParams& p) {
    return "g1=" + fmt17(p.g1) + " g2=" + fmt17(p.g2) + " delta=" + fmt17(p.delta) +
           " kappa=" + fmt17(p.kappa) + " alpha_re=" + fmt17(p.alpha0.real()) +
           " alpha_im=" + fmt17(p.alpha0.imag());
}

inline double resolve_t(double value, const RunConfig& cfg) {
    if (!cfg.deltat_units) return value;
    if (cfg.params.delta <= 0.0)
        throw std::invalid_argument("--deltat requires delta > 0");
    return value * std::numbers::pi / cfg.params.delta;
}

inline std::pair<double, double> resolve_window(const RunConfig& cfg) {
    if (cfg.grid.t_start < 0.0) throw std::invalid_argument("t_start must be >= 0");
    double t0 = cfg.grid.t_start;
    double t1 = cfg.grid.t_end;
    if (t1 < 0.0) {
        const double scale = std::max({cfg.params.delta, cfg.params.kappa, 0.05});
        t1 = 4.0 * std::numbers::pi / scale;
    } else {
        t1 = resolve_t(t1, cfg);
        t0 = resolve_t(t0, cfg);
    }
    if (cfg.grid.n_points < 2) throw std::invalid_argument("need at least 2 grid points");
    if (t1 <= t0) throw std::invalid_argument("t_end must exceed t_start");
    return {t0, t1};
}

}  // namespace detail

// ----------------------------------- series ----------------------------------

inline int run_series(const RunConfig& cfg) {
    cfg.params.validate();
    auto [t0, t1] = detail::resolve_window(cfg);
    const int n = cfg.grid.n_points;
    const EvalOptions opt{cfg.h1_variant, cfg.verbatim};

    std::vector<EntanglementReport> reports(n);
    detail::parallel_for(n, [&](int i) {
        const double t = t0 + (t1 - t0) * i / (n - 1);
        reports[i] = evaluate_report(cfg.params, t, opt);
    });

    CsvWriter w(cfg.output_path);
    w.comment("qtangle series schema=1");
    w.comment(detail::params_comment(cfg.params));
    w.comment("h1=" + std::string(cfg.h1_variant == H1Variant::corrected ? "corrected" : "paper") +
              " verbatim=" + (cfg.verbatim ? "1" : "0") + " t_start=" + fmt17(t0) +
              " t_end=" + fmt17(t1) + " points=" + std::to_string(n));
    w.header(detail::report_columns());
    for (const auto& r : reports) w.row(detail::report_cells(r));
    w.close();
    return 0;
}

// ----------------------------------- figure ----------------------------------

struct FigureSeries {
    std::string label;
    SystemParams params;
    double t_end;
};

inline std::vector<FigureSeries> figure_presets(const std::string& figure_id) {
    auto period = [](double delta) { return 4.0 * std::numbers::pi / delta; };
    std::vector<FigureSeries> out;
    if (figure_id == "fig2") {
        for (double d : {0.1, 0.3, 0.5, 1.0})
            out.push_back({"delta=" + fmt17(d), {0.1, 0.1, d, 0.0, 0.0}, period(d)});
    } else if (figure_id == "fig3") {
        for (double d : {0.2, 0.6})
            out.push_back({"delta=" + fmt17(d), {0.1, 0.1, d, 0.0, 0.0}, period(d)});
    } else if (figure_id == "fig4") {
        for (double k : {0.1, 0.001})
            for (double d : {0.1, 0.3, 0.5})
                out.push_back({"delta=" + fmt17(d) + " kappa=" + fmt17(k),
                               {0.1, 0.1, d, k, 0.0}, period(d)});
        out.push_back({"g=0.05 delta=1 kappa=0.4", {0.025, 0.025, 1.0, 0.4, 0.0}, period(1.0)});
        for (double k : {0.5, 0.1, 0.05, 0.0})
            out.push_back({"concurrence kappa=" + fmt17(k), {0.1, 0.1, 0.0, k, 0.0}, 20.0});
    } else if (figure_id == "fig5") {
        for (double k : {0.01, 0.1})
            for (double d : {0.1, 0.5})
                out.push_back({"delta=" + fmt17(d) + " kappa=" + fmt17(k),
                               {0.1, 0.1, d, k, 0.0}, period(d)});
    } else {
        throw std::invalid_argument("unknown figure id: " + figure_id +
                                    " (expected fig2|fig3|fig4|fig5)");
    }
    return out;
}

inline int run_figure(const RunConfig& cfg) {
    const auto presets = figure_presets(cfg.figure_id);
    const int n = cfg.grid.n_points;
    const EvalOptions opt{cfg.h1_variant, cfg.verbatim};

    std::vector<std::vector<EntanglementReport>> all(presets.size(),
                                                     std::vector<EntanglementReport>(n));
    detail::parallel_for(static_cast<int>(presets.size()) * n, [&](int idx) {
        const int si = idx / n, ti = idx % n;
        const double t = presets[si].t_end * ti / (n - 1);
        all[si][ti] = evaluate_report(presets[si].params, t, opt);
    });

    CsvWriter w(cfg.output_path);
    w.comment("qtangle figure schema=1 figure=" + cfg.figure_id);
    w.comment("points_per_series=" + std::to_string(n));
    auto cols = detail::report_columns();
    std::vector<std::string> head = {"series", "g1", "g2", "delta", "kappa"};
    head.insert(head.end(), cols.begin(), cols.end());
    w.header(head);
    for (size_t si = 0; si < presets.size(); ++si) {
        const auto& p = presets[si].params;
        for (const auto& r : all[si]) {
            std::vector<std::string> cells = {"\"" + presets[si].label + "\"", fmt17(p.g1),
                                              fmt17(p.g2), fmt17(p.delta), fmt17(p.kappa)};
            auto rc = detail::report_cells(r);
            cells.insert(cells.end(), rc.begin(), rc.end());
            w.row(cells);
        }
    }
    w.close();
    return 0;
}

// ------------------------------- oracle compare -------------------------------

inline int run_oracle_compare(const RunConfig& cfg, std::ostream& log = std::cout) {
    cfg.params.validate();
    auto [t0, t1] = detail::resolve_window(cfg);
    if (t0 != 0.0) throw std::invalid_argument("oracle-compare starts at t=0");

    oracle::FockConfig fc = oracle::default_config(cfg.params);
    if (cfg.n_max > 0) fc.n_max = cfg.n_max;
    if (cfg.dt > 0.0) fc.dt = cfg.dt;

    const auto rep =
        oracle::compare_closed_form(cfg.params, fc, t1, cfg.snapshots, cfg.h1_variant);

    CsvWriter w(cfg.output_path);
    w.comment("qtangle oracle-compare schema=1");
    w.comment(detail::params_comment(cfg.params));
    w.comment("n_max=" + std::to_string(fc.n_max) + " dt=" + fmt17(fc.dt) +
              " snapshots=" + std::to_string(cfg.snapshots) + " h1=" +
              (cfg.h1_variant == H1Variant::corrected ? "corrected" : "paper"));
    w.comment("dissipator_convention: " + rep.convention.note);
    w.comment("trace_drift=" + fmt17(rep.trace_drift) +
              " hermiticity_drift=" + fmt17(rep.hermiticity_drift));
    w.header({"t", "quantity", "model_value", "oracle_value", "abs_dev"});
    for (const auto& r : rep.rows)
        w.row({fmt17(r.t), r.quantity, fmt17(r.model_value), fmt17(r.oracle_value),
               fmt17(r.abs_dev)});
    w.comment("summary_max_abs_dev=" + fmt17(rep.summary));
    w.close();

    log << "summary_max_abs_dev=" << fmt17(rep.summary) << " tol=" << fmt17(cfg.tol)
        << (rep.summary <= cfg.tol ? " PASS" : " FAIL") << "\n";
    return rep.summary <= cfg.tol ? 0 : 1;
}

}  // namespace qtangle::cli
