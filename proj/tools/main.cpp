// qtangle CLI: closed-form entanglement sweeps, figure datasets, and
// oracle-comparison runs for two driven qubits coupled to a lossy cavity.

#include <CLI11.hpp>

#include <qtangle/runner.hpp>

#include <iostream>
#include <map>
#include <string>

namespace {

struct FlagState {
    qtangle::cli::RunConfig cfg;
    double alpha_re = 0.0;
    double alpha_im = 0.0;
    std::string h1_name = "corrected";
    std::string config_path;
};

void add_common_flags(CLI::App* cmd, FlagState& st) {
    cmd->add_option("--g1", st.cfg.params.g1, "qubit-1 cavity coupling (GHz)");
    cmd->add_option("--g2", st.cfg.params.g2, "qubit-2 cavity coupling (GHz)");
    cmd->add_option("--delta", st.cfg.params.delta, "detuning (GHz)");
    cmd->add_option("--kappa", st.cfg.params.kappa, "cavity decay rate (GHz)");
    cmd->add_option("--alpha-re", st.alpha_re, "initial coherent amplitude, real part");
    cmd->add_option("--alpha-im", st.alpha_im, "initial coherent amplitude, imaginary part");
    cmd->add_option("--t-start", st.cfg.grid.t_start, "grid start (ns)");
    cmd->add_option("--t-end", st.cfg.grid.t_end, "grid end (ns); default 2 revival periods");
    cmd->add_option("--points", st.cfg.grid.n_points, "number of grid points");
    cmd->add_flag("--deltat", st.cfg.deltat_units,
                  "interpret --t-start/--t-end in units of (delta t)/pi");
    cmd->add_option("--h1", st.h1_name, "h1 variant: corrected|paper")
        ->check(CLI::IsMember({"corrected", "paper"}));
    cmd->add_flag("--verbatim", st.cfg.verbatim,
                  "evaluate closed forms with the quoted |chi|^2 instead of the overlap");
    cmd->add_option("--out", st.cfg.output_path, "output CSV path");
    cmd->add_option("--config", st.config_path,
                    "key=value file with the same keys as the long flags; flags override");
}

// Apply config-file values first; CLI11 then overwrites whatever appears on
// the command line.
void apply_config_file(FlagState& st) {
    const auto kv = qtangle::cli::read_config_file(st.config_path);
    auto want_bool = [](const std::string& v) { return v == "1" || v == "true" || v == "yes"; };
    for (const auto& [key, value] : kv) {
        if (key == "g1") st.cfg.params.g1 = std::stod(value);
        else if (key == "g2") st.cfg.params.g2 = std::stod(value);
        else if (key == "delta") st.cfg.params.delta = std::stod(value);
        else if (key == "kappa") st.cfg.params.kappa = std::stod(value);
        else if (key == "alpha-re") st.alpha_re = std::stod(value);
        else if (key == "alpha-im") st.alpha_im = std::stod(value);
        else if (key == "t-start") st.cfg.grid.t_start = std::stod(value);
        else if (key == "t-end") st.cfg.grid.t_end = std::stod(value);
        else if (key == "points") st.cfg.grid.n_points = std::stoi(value);
        else if (key == "deltat") st.cfg.deltat_units = want_bool(value);
        else if (key == "h1") st.h1_name = value;
        else if (key == "verbatim") st.cfg.verbatim = want_bool(value);
        else if (key == "out") st.cfg.output_path = value;
        else if (key == "tol") st.cfg.tol = std::stod(value);
        else if (key == "n-max") st.cfg.n_max = std::stoi(value);
        else if (key == "dt") st.cfg.dt = std::stod(value);
        else if (key == "snapshots") st.cfg.snapshots = std::stoi(value);
        else if (key == "figure") st.cfg.figure_id = value;
        else throw std::runtime_error("unknown config key: " + key);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tripartite entanglement dynamics of two driven qubits in a lossy cavity"};
    app.require_subcommand(1);

    FlagState st;

    // the config file loads before flag parsing so that flags win
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--config") st.config_path = argv[i + 1];
    if (!st.config_path.empty()) {
        try {
            apply_config_file(st);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
    }

    auto* series = app.add_subcommand("series", "closed-form + numeric sweep over a time grid");
    add_common_flags(series, st);

    auto* figure = app.add_subcommand("figure", "reproduce a figure dataset");
    add_common_flags(figure, st);
    figure->add_option("--figure", st.cfg.figure_id, "fig2|fig3|fig4|fig5");

    auto* compare = app.add_subcommand("oracle-compare",
                                       "integrate the master equation and report deviations");
    add_common_flags(compare, st);
    compare->add_option("--tol", st.cfg.tol, "exit nonzero if the summary deviation exceeds this");
    compare->add_option("--n-max", st.cfg.n_max, "Fock truncation override");
    compare->add_option("--dt", st.cfg.dt, "integrator step override (ns)");
    compare->add_option("--snapshots", st.cfg.snapshots, "comparison grid size");

    CLI11_PARSE(app, argc, argv);

    st.cfg.params.alpha0 = qtangle::Complex(st.alpha_re, st.alpha_im);
    if (st.h1_name != "corrected" && st.h1_name != "paper") {
        std::cerr << "error: --h1 must be corrected or paper\n";
        return 2;
    }
    st.cfg.h1_variant =
        st.h1_name == "paper" ? qtangle::H1Variant::paper : qtangle::H1Variant::corrected;
    if (st.cfg.output_path.empty()) {
        std::cerr << "error: --out is required (flag or config file)\n";
        return 2;
    }

    try {
        if (series->parsed()) {
            st.cfg.command = "series";
            return qtangle::cli::run_series(st.cfg);
        }
        if (figure->parsed()) {
            st.cfg.command = "figure";
            if (st.cfg.figure_id.empty()) {
                std::cerr << "error: --figure is required\n";
                return 2;
            }
            return qtangle::cli::run_figure(st.cfg);
        }
        st.cfg.command = "oracle-compare";
        return qtangle::cli::run_oracle_compare(st.cfg);
    } catch (const qtangle::oracle::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const qtangle::oracle::IntegrationError& e) {
        std::cerr << "integration failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
