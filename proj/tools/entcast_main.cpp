#include <CLI11.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "entcast/broadcasting.hpp"
#include "entcast/chsh_oracle.hpp"
#include "entcast/criteria.hpp"
#include "entcast/json_io.hpp"
#include "entcast/protocol_runner.hpp"
#include "entcast/telecloning.hpp"
#include "entcast/verification.hpp"

namespace {

using namespace entcast;

constexpr std::uint64_t kDefaultSeed = 12345;

// All numeric output carries 12 significant digits.
std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag_seed) {
    if (flag_seed) return *flag_seed;
    if (const char* env = std::getenv("ENTCAST_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw Error(Errc::invalid_argument, "ENTCAST_SEED is not an unsigned integer");
        }
    }
    return kDefaultSeed;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) raise(Errc::io_error, "cannot open '" + path + "' for writing");
    out << content;
    if (!out) raise(Errc::io_error, "write to '" + path + "' failed");
}

std::string ppt_line(const DensityOperator& rho) {
    const PptResult r = ppt_separable(rho);
    return std::string(to_string(ppt_verdict(rho))) +
           " (min PT eigenvalue = " + fmt(r.min_eigenvalue) + ")";
}

struct BroadcastArgs {
    double r = 0.0;
    double alpha_abs = 0.0;
    double alpha_phase = 0.0;
    std::optional<std::uint64_t> seed;
    long mc_samples = 0;
    std::string json_out;
    std::string state_out;
    std::string mc_json;
};

int cmd_broadcast(const BroadcastArgs& args) {
    const Reflectivity r(args.r);
    const Complex alpha = std::polar(args.alpha_abs, args.alpha_phase);
    const Complex beta = std::sqrt(std::max(0.0, 1.0 - args.alpha_abs * args.alpha_abs));

    const BroadcastResult res = run_broadcast(alpha, beta, r);
    const BroadcastFidelities closed = broadcast_fidelities(alpha, beta, r);

    ComplexVector psi = ComplexVector::Zero(4);
    psi(0) = alpha;
    psi(3) = beta;
    const double f_a1b1_num = pure_fidelity(res.rho_a1b1.matrix(), psi);
    const double f_cd_num = pure_fidelity(res.rho_cd.matrix(), psi);

    std::cout << "R          = " << fmt(args.r) << "\n";
    std::cout << "|alpha|    = " << fmt(args.alpha_abs) << "  phase = " << fmt(args.alpha_phase)
              << "\n";
    std::cout << "lambda_d   = " << fmt(res.lambda_d) << "\n";
    std::cout << "lambda_s   = " << fmt(res.lambda_s) << "\n";
    std::cout << "F_a1b1     = " << fmt(closed.f_a1b1) << "  (numeric " << fmt(f_a1b1_num)
              << ")\n";
    std::cout << "F_cd       = " << fmt(closed.f_cd) << "  (numeric " << fmt(f_cd_num) << ")\n";
    std::cout << "ppt a1b1   = " << ppt_line(res.rho_a1b1) << "\n";
    std::cout << "ppt cd     = " << ppt_line(res.rho_cd) << "\n";
    std::cout << "ppt a1c    = " << ppt_line(res.rho_a1c) << "\n";
    std::cout << "ppt b1d    = " << ppt_line(res.rho_b1d) << "\n";
    std::cout << "M_a1b1     = " << fmt(chsh_M(res.rho_a1b1)) << "\n";
    std::cout << "M_cd       = " << fmt(chsh_M(res.rho_cd)) << "\n";
    const TeleportationUsefulness na = teleportation_N(res.rho_a1b1);
    const TeleportationUsefulness nc = teleportation_N(res.rho_cd);
    std::cout << "N_a1b1     = " << fmt(na.n) << "  F_max = " << fmt(na.f_max) << "\n";
    std::cout << "N_cd       = " << fmt(nc.n) << "  F_max = " << fmt(nc.f_max) << "\n";

    const bool kept_insep = !ppt_separable(res.rho_a1b1).separable;
    const bool sent_insep = !ppt_separable(res.rho_cd).separable;
    std::string verdict;
    if (std::abs(args.r - 0.5) < 1e-9) {
        verdict = "entanglement swapping limit";
    } else {
        verdict = std::abs(args.r - 1.0 / 3.0) < 1e-9 ? "broadcast: symmetric"
                                                      : "broadcast: asymmetric";
        if (kept_insep && sent_insep) {
            verdict += ", both pairs inseparable";
        } else {
            verdict += ", broadcast condition not met";
        }
    }
    std::cout << "verdict: " << verdict << "\n";

    if (args.mc_samples > 0) {
        const std::uint64_t seed = resolve_seed(args.seed);
        std::vector<TeleportMcReport> reports;
        for (const auto& [tag, rho, n_use] :
             {std::tuple{"a1b1", &res.rho_a1b1, na}, std::tuple{"cd", &res.rho_cd, nc}}) {
            const MonteCarloResult mc =
                monte_carlo_teleportation_fidelity(*rho, args.mc_samples, seed);
            std::cout << "teleport-mc " << tag << ": N = " << fmt(n_use.n)
                      << "  F_max = " << fmt(n_use.f_max) << "  F_mc = " << fmt(mc.mean)
                      << "  stderr = " << fmt(mc.std_error) << "  samples = " << mc.samples
                      << "  seed = " << mc.seed << "\n";
            reports.push_back({std::string("rho_") + tag + " R=" + fmt(args.r) +
                                   " alpha=" + fmt(args.alpha_abs),
                               n_use.n, n_use.f_max, mc});
        }
        if (!args.mc_json.empty()) write_file(args.mc_json, teleport_mc_reports_json(reports));
    }

    if (!args.json_out.empty()) write_file(args.json_out, verdict_report_json(res));
    if (!args.state_out.empty()) write_file(args.state_out, pure_state_to_json(res.phi_d));

    // Closed forms and the protocol must agree; a mismatch means a broken build.
    const double drho =
        std::max({max_abs_diff(res.rho_a1b1.matrix(), closed_form_rho_a1b1(alpha, beta, r).matrix()),
                  max_abs_diff(res.rho_cd.matrix(), closed_form_rho_cd(alpha, beta, r).matrix()),
                  max_abs_diff(res.rho_a1c.matrix(), closed_form_rho_a1c(alpha, beta, r).matrix())});
    const double dfid =
        std::max(std::abs(closed.f_a1b1 - f_a1b1_num), std::abs(closed.f_cd - f_cd_num));
    if (drho > 1e-10 || dfid > 1e-10) {
        std::cerr << "invariant violation: closed forms deviate from the protocol output\n";
        return 1;
    }
    return 0;
}

struct SweepArgs {
    std::vector<double> r_grid;
    std::vector<double> alpha_grid;
    std::vector<double> phase_grid;
    std::string out;
};

int cmd_sweep(const SweepArgs& args) {
    for (double r : args.r_grid) {
        if (r < 0.0 || r > 0.5) {
            throw CLI::ValidationError("--r-grid", "reflectivity outside [0, 0.5]");
        }
    }
    for (double a : args.alpha_grid) {
        if (a < 0.0 || a > 1.0) {
            throw CLI::ValidationError("--alpha-grid", "|alpha| outside [0, 1]");
        }
    }

    std::string csv =
        "R,alpha_abs,alpha_phase,F_a1b1,F_cd,lambda_d,M_a1b1,M_cd,N_a1b1,N_cd,"
        "sep_a1b1,sep_cd,sep_a1c\n";
    for (double R : args.r_grid) {
        const Reflectivity r(R);
        for (double a : args.alpha_grid) {
            for (double phase : args.phase_grid) {
                const Complex alpha = std::polar(a, phase);
                const Complex beta = std::sqrt(std::max(0.0, 1.0 - a * a));
                const BroadcastResult res = run_broadcast(alpha, beta, r);
                const BroadcastFidelities fid = broadcast_fidelities(alpha, beta, r);
                csv += fmt(R) + "," + fmt(a) + "," + fmt(phase) + "," + fmt(fid.f_a1b1) + "," +
                       fmt(fid.f_cd) + "," + fmt(res.lambda_d) + "," +
                       fmt(chsh_M(res.rho_a1b1)) + "," + fmt(chsh_M(res.rho_cd)) + "," +
                       fmt(teleportation_N(res.rho_a1b1).n) + "," +
                       fmt(teleportation_N(res.rho_cd).n) + "," +
                       (ppt_separable(res.rho_a1b1).separable ? "true" : "false") + "," +
                       (ppt_separable(res.rho_cd).separable ? "true" : "false") + "," +
                       (ppt_separable(res.rho_a1c).separable ? "true" : "false") + "\n";
            }
        }
    }

    if (args.out == "-") {
        std::cout << csv;
    } else {
        write_file(args.out, csv);
        std::cout << "wrote " << args.out << "\n";
    }
    return 0;
}

struct TelecloneArgs {
    double p = 0.5;
    double alpha_abs = 0.0;
    double alpha_phase = 0.0;
    bool enumerate = false;
    std::optional<std::uint64_t> seed;
    std::string transcript_out;
    std::string report_out;
};

int cmd_teleclone(const TelecloneArgs& args) {
    const CloneParams params(args.p);
    const Complex alpha = std::polar(args.alpha_abs, args.alpha_phase);
    const Complex beta = std::sqrt(std::max(0.0, 1.0 - args.alpha_abs * args.alpha_abs));

    std::cout << "p = " << fmt(args.p) << "  q = " << fmt(params.q()) << "\n";
    std::cout << "|alpha| = " << fmt(args.alpha_abs) << "  phase = " << fmt(args.alpha_phase)
              << "\n";

    const PureState target = apply_cloner_d4(params, alpha, beta);
    auto print_run = [&](const TelecloningRun& run) {
        std::cout << "outcome: " << to_string(run.outcome.first) << " "
                  << to_string(run.outcome.second)
                  << "   probability = " << fmt(run.probability) << "\n";
        const RecoveryPlan plan = recovery_plan(run.outcome.first, run.outcome.second);
        std::cout << "recovery:";
        for (const auto& op : plan.ops) std::cout << " " << to_string(op);
        const Complex overlap = target.amplitudes().dot(run.receiver_state.amplitudes());
        std::cout << "\nreceiver fidelity to target = " << fmt(std::norm(overlap)) << "\n";
    };

    std::string last_transcript_json;
    if (args.enumerate) {
        for (const auto& run : run_telecloning_all(alpha, beta, params)) {
            print_run(run);
            last_transcript_json = transcript_to_json(run.transcript);
        }
    } else {
        const TelecloningRun run =
            run_telecloning_sampled(alpha, beta, params, resolve_seed(args.seed));
        print_run(run);
        last_transcript_json = transcript_to_json(run.transcript);
    }

    ComplexVector psi = ComplexVector::Zero(4);
    psi(0) = alpha;
    psi(3) = beta;
    const ClonePair clones = output_clones(alpha, beta, params);
    const double f12 = pure_fidelity(clones.b1b2.matrix(), psi);
    const double f34 = pure_fidelity(clones.b3b4.matrix(), psi);
    const double d12 =
        max_abs_diff(clones.b1b2.matrix(), closed_form_rho_b1b2(alpha, beta, params).matrix());
    const double d34 =
        max_abs_diff(clones.b3b4.matrix(), closed_form_rho_b3b4(alpha, beta, params).matrix());
    const bool match = d12 <= 1e-10 && d34 <= 1e-10;
    std::cout << "fidelity_B1B2 = " << fmt(f12) << "  closed_form_match = "
              << (d12 <= 1e-10 ? "true" : "false") << "\n";
    std::cout << "fidelity_B3B4 = " << fmt(f34) << "  closed_form_match = "
              << (d34 <= 1e-10 ? "true" : "false") << "\n";

    const ResourceReport resources = resource_report();
    std::cout << "resources: naive {ebits " << resources.naive.ebits << ", cbits "
              << resources.naive.cbits << "}  telecloning {ebits " << resources.telecloning.ebits
              << ", cbits " << resources.telecloning.cbits << "}\n";

    if (!args.transcript_out.empty()) write_file(args.transcript_out, last_transcript_json);
    if (!args.report_out.empty()) {
        write_file(args.report_out, clone_report_json(args.p, f12, f34, match));
    }
    return match ? 0 : 1;
}

int cmd_verify() {
    const auto results = run_verification();
    std::cout << format_results(results);
    const bool ok = all_passed(results);
    std::cout << (ok ? "all checks passed" : "CHECKS FAILED") << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Conditional entanglement broadcasting and telecloning simulator"};
    app.require_subcommand(1);

    BroadcastArgs broadcast_args;
    CLI::App* broadcast = app.add_subcommand(
        "broadcast", "Run one conditional broadcast and report fidelities and criteria");
    broadcast->add_option("--R", broadcast_args.r, "Beam-splitter reflectivity in [0, 0.5]")
        ->required()
        ->check(CLI::Range(0.0, 0.5));
    broadcast->add_option("--alpha", broadcast_args.alpha_abs, "|alpha| of the input pair")
        ->required()
        ->check(CLI::Range(0.0, 1.0));
    broadcast->add_option("--phase", broadcast_args.alpha_phase, "Phase of alpha in radians");
    std::uint64_t b_seed = 0;
    CLI::Option* b_seed_opt =
        broadcast->add_option("--seed", b_seed, "RNG seed for --mc-samples");
    broadcast->add_option("--mc-samples", broadcast_args.mc_samples,
                          "Validate F_max by Monte-Carlo teleportation with this many samples");
    broadcast->add_option("--json", broadcast_args.json_out, "Write the verdict report JSON here");
    broadcast->add_option("--state-out", broadcast_args.state_out,
                          "Write the coincidence state JSON here");
    broadcast->add_option("--mc-json", broadcast_args.mc_json,
                          "Write the Monte-Carlo teleportation reports JSON here");

    SweepArgs sweep_args;
    sweep_args.r_grid = {0.05, 0.10, 0.15, 0.20, 0.25, 0.30, 0.35, 0.40, 0.45};
    sweep_args.alpha_grid = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99};
    sweep_args.phase_grid = {0.0};
    CLI::App* sweep =
        app.add_subcommand("sweep", "Emit a CSV table of fidelities and criteria over a grid");
    sweep->add_option("--out", sweep_args.out, "Output CSV path ('-' for stdout)")->required();
    sweep->add_option("--r-grid", sweep_args.r_grid, "Reflectivity grid")->delimiter(',');
    sweep->add_option("--alpha-grid", sweep_args.alpha_grid, "|alpha| grid")->delimiter(',');
    sweep->add_option("--phase-grid", sweep_args.phase_grid, "alpha phase grid (radians)")
        ->delimiter(',');

    TelecloneArgs teleclone_args;
    CLI::App* teleclone = app.add_subcommand(
        "teleclone", "Teleclone an entangled pair through the eight-qubit channel");
    teleclone->add_option("--p", teleclone_args.p, "Cloner asymmetry p in [0, 1]")
        ->required()
        ->check(CLI::Range(0.0, 1.0));
    teleclone->add_option("--alpha", teleclone_args.alpha_abs, "|alpha| of the input pair")
        ->required()
        ->check(CLI::Range(0.0, 1.0));
    teleclone->add_option("--phase", teleclone_args.alpha_phase, "Phase of alpha in radians");
    teleclone->add_flag("--enumerate", teleclone_args.enumerate,
                        "Enumerate all eight Bell outcomes instead of sampling one");
    std::uint64_t t_seed = 0;
    CLI::Option* t_seed_opt = teleclone->add_option("--seed", t_seed, "RNG seed");
    teleclone->add_option("--transcript-out", teleclone_args.transcript_out,
                          "Write the protocol transcript JSON here");
    teleclone->add_option("--report-out", teleclone_args.report_out,
                          "Write the clone report JSON here");

    CLI::App* verify =
        app.add_subcommand("verify", "Run the closed-form-vs-numeric check battery");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;  // usage error
    }

    try {
        if (broadcast->parsed()) {
            if (b_seed_opt->count() > 0) broadcast_args.seed = b_seed;
            return cmd_broadcast(broadcast_args);
        }
        if (sweep->parsed()) return cmd_sweep(sweep_args);
        if (teleclone->parsed()) {
            if (t_seed_opt->count() > 0) teleclone_args.seed = t_seed;
            return cmd_teleclone(teleclone_args);
        }
        if (verify->parsed()) return cmd_verify();
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
