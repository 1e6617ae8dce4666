// Command-line front end: one subcommand per library workflow, shared
// option plumbing, deterministic table output in CSV or JSON.
#include "cli_app.hpp"

#include <CLI11.hpp>
#include <Eigen/Core>
#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>

#include "branchon/compare.hpp"
#include "branchon/hamiltonian_series.hpp"
#include "branchon/io.hpp"
#include "branchon/rspt.hpp"
#include "branchon/spectral.hpp"
#include "branchon/transform.hpp"
#include "branchon/type1.hpp"
#include "branchon/type2.hpp"

namespace branchon::cli {

namespace {

// ---------------------------------------------------------------------------
// shared option bundles

struct OutputOpts {
    std::string path;    // empty -> print the table itself
    std::string format = "csv";

    void attach(CLI::App* sub) {
        sub->add_option("--out", path, "output file path (omit to print the table)");
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"csv", "json"}))
            ->capture_default_str();
    }

    void echo(Table& table) const {
        table.add_config("out", path.empty() ? "-" : path);
        table.add_config("format", format);
    }

    // Write to the file when a path was given, otherwise print the table.
    // Returns true when a summary should also go to stdout.
    bool deliver(const Table& table, std::ostream& out) const {
        const std::string text = render(table, format);
        if (path.empty()) {
            out << text;
            return false;
        }
        write_file(path, text);
        return true;
    }
};

struct OscillatorOpts {
    double k = 1.0;
    double lambda = 1.0;

    void attach(CLI::App* sub) {
        sub->add_option("--k", k, "oscillator coupling k")->capture_default_str();
        sub->add_option("--lambda", lambda, "oscillator stiffness lambda")->capture_default_str();
    }

    LienardParamsd params() const { return {k, lambda}; }

    void echo(Table& table) const {
        table.add_config("k", k);
        table.add_config("lambda", lambda);
    }
};

struct IntegrationOpts {
    double x0 = 0.1;
    double v0 = 0.0;
    double t_end = 20.0;
    double tol = 1e-10;
    double max_step = 0.0;
    double blowup_bound = 1e9;

    void attach(CLI::App* sub) {
        sub->add_option("--x0", x0, "initial position")->capture_default_str();
        sub->add_option("--v0", v0, "initial velocity")->capture_default_str();
        sub->add_option("--t_end,--t-end", t_end, "integration end time")->capture_default_str();
        sub->add_option("--tol", tol, "integrator tolerance")->capture_default_str();
        sub->add_option("--max_step,--max-step", max_step,
                        "step-size cap (0 = density default)")
            ->capture_default_str();
        sub->add_option("--blowup_bound,--blowup-bound", blowup_bound,
                        "phase-space bound before declaring blow-up")
            ->capture_default_str();
    }

    IntegrateOptions options() const { return {tol, max_step, blowup_bound}; }

    void echo(Table& table) const {
        table.add_config("x0", x0);
        table.add_config("v0", v0);
        table.add_config("t_end", t_end);
        table.add_config("tol", tol);
        table.add_config("max_step", max_step);
        table.add_config("blowup_bound", blowup_bound);
    }
};

struct QuantumOpts {
    double s = 1.0;
    double lambda = 1.0;
    int n_points = 2000;
    double r_max = 0.0;
    int basis_size = 60;

    void attach(CLI::App* sub) {
        sub->add_option("--s", s, "family scale s (> 0 for the quantum problem)")
            ->capture_default_str();
        sub->add_option("--lambda", lambda, "stiffness lambda")->capture_default_str();
        sub->add_option("--grid.n_points,--grid-points", n_points, "interior grid points")
            ->capture_default_str();
        sub->add_option("--grid.r_max,--r-max", r_max, "grid box size (0 = automatic)")
            ->capture_default_str();
        sub->add_option("--basis.size,--basis-size", basis_size, "truncated basis size")
            ->capture_default_str();
    }

    RadialProblem problem(Branch branch, const std::string& method, bool include_linear) const {
        std::variant<GridSpec, BasisSpec> disc;
        if (method == "grid") {
            disc = GridSpec{n_points, r_max};
        } else {
            disc = BasisSpec{basis_size, 0.0};
        }
        return {TypeIIModeld(s, lambda), branch, disc, include_linear};
    }

    void echo(Table& table, const std::string& method) const {
        table.add_config("s", s);
        table.add_config("lambda", lambda);
        if (method == "grid" || method.empty()) {
            table.add_config("grid.n_points", n_points);
            table.add_config("grid.r_max", r_max);
        }
        if (method == "basis" || method.empty()) {
            table.add_config("basis.size", basis_size);
        }
    }
};

Branch branch_from_flag(const std::string& value) { return parse_branch(value); }

// ---------------------------------------------------------------------------
// table builders

void append_trajectory_columns(Table& table, const Trajectory& traj) {
    table.columns = {"t", "x", "v"};
    for (Eigen::Index i = 0; i < traj.size(); ++i) {
        table.rows.push_back({traj.t[i], traj.x[i], traj.v[i]});
    }
}

Table spectrum_table(const Spectrum& spectrum) {
    Table table;
    table.columns = {"n", "E", "eta", "branch", "method", "conv_est"};
    for (Eigen::Index i = 0; i < spectrum.energies.size(); ++i) {
        table.rows.push_back({static_cast<long>(i), spectrum.energies[i], spectrum.eta[i],
                              to_string(spectrum.branch), spectrum.method,
                              spectrum.convergence[i]});
    }
    return table;
}

// ---------------------------------------------------------------------------
// subcommand wiring

struct SimulateCmd {
    OscillatorOpts osc;
    IntegrationOpts integ;
    OutputOpts output;

    void attach(CLI::App& app, std::ostream& out) {
        auto* sub = app.add_subcommand("simulate", "integrate the oscillator and dump t,x,v");
        osc.attach(sub);
        integ.attach(sub);
        output.attach(sub);
        sub->callback([this, &out] { execute(out); });
    }

    void execute(std::ostream& out) {
        const Trajectory traj =
            integrate(osc.params(), {integ.x0, integ.v0}, integ.t_end, integ.options());
        Table table;
        table.add_config("command", "simulate");
        osc.echo(table);
        integ.echo(table);
        output.echo(table);
        append_trajectory_columns(table, traj);
        if (output.deliver(table, out)) {
            out << "wrote " << traj.size() << " samples to " << output.path << "\n";
        }
    }
};

struct TransformCheckCmd {
    OscillatorOpts osc;
    IntegrationOpts integ;
    OutputOpts output;
    double max_residual = 0.0;  // 0 -> report only

    void attach(CLI::App& app, std::ostream& out) {
        auto* sub = app.add_subcommand(
            "transform-check", "integrate, apply the nonlocal transform, report the "
                               "harmonic residual");
        integ.max_step = 1e-3;  // transform quadrature wants a dense grid
        osc.attach(sub);
        integ.attach(sub);
        output.attach(sub);
        sub->add_option("--max-residual", max_residual,
                        "fail (exit 3) when the residual exceeds this (0 = report only)")
            ->capture_default_str();
        sub->callback([this, &out] { execute(out); });
    }

    void execute(std::ostream& out) {
        const Trajectory traj =
            integrate(osc.params(), {integ.x0, integ.v0}, integ.t_end, integ.options());
        const TransformSeries series = nonlocal_transform(traj, osc.params());
        const double residual = harmonic_residual(series, osc.params());

        Table table;
        table.add_config("command", "transform-check");
        osc.echo(table);
        integ.echo(table);
        output.echo(table);
        table.add_config("max_residual", max_residual);
        table.add_config("harmonic_residual", residual);
        table.add_config("quadrature_error_estimate", series.quadrature_error_estimate);
        table.columns = {"t", "x", "v", "U", "I"};
        for (Eigen::Index i = 0; i < series.t.size(); ++i) {
            table.rows.push_back(
                {series.t[i], series.x[i], series.v[i], series.u[i], series.integral[i]});
        }
        output.deliver(table, out);
        out << "harmonic residual max|U'' + lambda U| / max|U| = " << format_double(residual)
            << "\n";
        if (max_residual > 0.0 && residual > max_residual) {
            std::ostringstream msg;
            msg << "harmonic residual " << residual << " exceeds --max-residual "
                << max_residual;
            throw NotConverged(msg.str());
        }
    }
};

struct HamiltonianCmd {
    OscillatorOpts osc;
    IntegrationOpts integ;
    OutputOpts output;
    std::string family = "oscillator";
    std::string branch_flag = "auto";
    double pole_eps = kDefaultPoleEps;

    void attach(CLI::App& app, std::ostream& out) {
        auto* sub = app.add_subcommand(
            "hamiltonian", "evaluate momentum and branched Hamiltonian along a trajectory");
        osc.attach(sub);
        integ.attach(sub);
        output.attach(sub);
        sub->add_option("--family", family,
                        "Hamiltonian family: oscillator (compact branched form), "
                        "fractional (matched fractional-power family), inverse "
                        "(matched inverse-power family)")
            ->check(CLI::IsMember({"oscillator", "fractional", "inverse"}))
            ->capture_default_str();
        sub->add_option("--branch", branch_flag, "plus, minus, or auto (sign-selected)")
            ->check(CLI::IsMember({"plus", "minus", "auto"}))
            ->capture_default_str();
        sub->add_option("--pole-eps", pole_eps,
                        "distance to the momentum-map pole treated as a crossing")
            ->capture_default_str();
        sub->callback([this, &out] { execute(out); });
    }

    void execute(std::ostream& out) {
        const LienardParamsd params = osc.params();
        const Trajectory traj = integrate(params, {integ.x0, integ.v0}, integ.t_end,
                                          integ.options());
        const BranchPolicy policy = branch_flag == "auto"
                                        ? BranchPolicy{}
                                        : BranchPolicy{branch_from_flag(branch_flag)};
        std::vector<HamiltonianSample> series;
        if (family == "oscillator") {
            series = hamiltonian_series(traj, params, policy, pole_eps);
        } else if (family == "fractional") {
            series = hamiltonian_series(traj, TypeIModeld::matched_to(params), policy, pole_eps);
        } else {
            series = hamiltonian_series(traj, TypeIIModeld::matched_to(params), policy, pole_eps);
        }

        Table table;
        table.add_config("command", "hamiltonian");
        table.add_config("family", family);
        table.add_config("branch", branch_flag);
        osc.echo(table);
        integ.echo(table);
        output.echo(table);
        table.add_config("pole_eps", pole_eps);
        table.columns = {"t", "x", "v", "p", "H", "branch"};
        for (Eigen::Index i = 0; i < traj.size(); ++i) {
            const auto& sample = series[static_cast<std::size_t>(i)];
            table.rows.push_back({traj.t[i], traj.x[i], traj.v[i], sample.p, sample.value,
                                  to_string(sample.branch)});
        }
        output.deliver(table, out);
        out << "relative drift max|H - H0| / |H0| = " << format_double(relative_drift(series))
            << "\n";
    }
};

struct BranchesCmd {
    OutputOpts output;
    std::string family = "oscillator";
    double k = 1.0;
    double lambda = 1.0;
    double s = 1.0;
    double m = 0.0;
    double delta = 1.0;
    double f_a = 0.0;
    double f_b = 1.0;
    double x = 0.0;
    double p_min = 0.0;
    double p_max = 0.0;
    int samples = 101;

    void attach(CLI::App& app, std::ostream& out) {
        auto* sub = app.add_subcommand(
            "branches", "tabulate both velocity branches and both Hamiltonian branches "
                        "over a momentum range");
        output.attach(sub);
        sub->add_option("--family", family, "oscillator, fractional, or inverse")
            ->check(CLI::IsMember({"oscillator", "fractional", "inverse"}))
            ->capture_default_str();
        sub->add_option("--k", k, "oscillator coupling (oscillator family)")
            ->capture_default_str();
        sub->add_option("--lambda", lambda, "stiffness")->capture_default_str();
        sub->add_option("--s", s, "inverse-family scale")->capture_default_str();
        sub->add_option("--m", m, "fractional-family exponent parameter")->capture_default_str();
        sub->add_option("--delta", delta, "fractional-family offset")->capture_default_str();
        sub->add_option("--f-a", f_a, "fractional-family shift f(x) = a x^2 + b: a")
            ->capture_default_str();
        sub->add_option("--f-b", f_b, "fractional-family shift f(x) = a x^2 + b: b")
            ->capture_default_str();
        sub->add_option("--x", x, "position at which to tabulate")->capture_default_str();
        sub->add_option("--p-min", p_min, "momentum range start (0 = family default)")
            ->capture_default_str();
        sub->add_option("--p-max", p_max, "momentum range end (0 = family default)")
            ->capture_default_str();
        sub->add_option("--samples", samples, "number of momentum samples")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        sub->callback([this, &out] { execute(out); });
    }

    void execute(std::ostream& out) {
        double lo = p_min, hi = p_max;
        std::function<VelocityPaird(double)> velocities;
        std::function<std::pair<double, double>(double)> hamiltonians;

        if (family == "oscillator") {
            const LienardParamsd params{k, lambda};
            const double p_star = oscillator_branch_point(params);
            if (lo == 0.0 && hi == 0.0) {
                // approach the branch point from the valid side (velocities
                // diverge at p_star itself, so stop just short of it)
                const double unit = std::max(1.0, std::abs(p_star));
                const double margin = 0.01 * unit;
                if (k > 0) {
                    hi = p_star - margin;
                    lo = hi - 3.0 * unit;
                } else {
                    lo = p_star + margin;
                    hi = lo + 3.0 * unit;
                }
            }
            hamiltonians = [params, this](double p) {
                return std::pair{oscillator_hamiltonian({x, p}, Branch::Plus, params),
                                 oscillator_hamiltonian({x, p}, Branch::Minus, params)};
            };
            velocities = [params, this](double p) {
                // velocity branches via the raw m = 0 member, entered through
                // the momentum shift that links the two pictures
                const TypeIModeld raw = TypeIModeld::for_oscillator(params);
                const double p_family = oscillator_to_family_momentum(p, params);
                if (!(p_family < 0.0)) {
                    throw DomainError("momentum beyond the branch point");
                }
                return type1_velocity_branches(x, p_family, raw);
            };
        } else if (family == "fractional") {
            const TypeIModeld model(m, delta, QuadraticFnd{f_a, f_b});
            if (lo == 0.0 && hi == 0.0) {
                lo = -4.0;
                hi = -0.04;
            }
            velocities = [model, this](double p) { return type1_velocity_branches(x, p, model); };
            hamiltonians = [model, this](double p) {
                return std::pair{type1_hamiltonian({x, p}, Branch::Plus, model),
                                 type1_hamiltonian({x, p}, Branch::Minus, model)};
            };
        } else {
            const TypeIIModeld model(s, lambda);
            if (lo == 0.0 && hi == 0.0) {
                lo = s > 0 ? 0.04 : -4.0;
                hi = s > 0 ? 4.0 : -0.04;
            }
            velocities = [model, this](double p) { return type2_velocity_branches(x, p, model); };
            hamiltonians = [model, this](double p) {
                return std::pair{type2_hamiltonian({x, p}, Branch::Plus, model),
                                 type2_hamiltonian({x, p}, Branch::Minus, model)};
            };
        }
        if (!(hi > lo)) throw ConfigError("momentum range needs p-max > p-min");
        if (samples < 2) throw ConfigError("need at least 2 samples");

        Table table;
        table.add_config("command", "branches");
        table.add_config("family", family);
        if (family == "oscillator") {
            table.add_config("k", k);
            table.add_config("lambda", lambda);
        } else if (family == "fractional") {
            table.add_config("m", m);
            table.add_config("delta", delta);
            table.add_config("f_a", f_a);
            table.add_config("f_b", f_b);
        } else {
            table.add_config("s", s);
            table.add_config("lambda", lambda);
        }
        table.add_config("x", x);
        table.add_config("p_min", lo);
        table.add_config("p_max", hi);
        table.add_config("samples", samples);
        output.echo(table);
        table.columns = {"p", "v_plus", "v_minus", "H_plus", "H_minus"};
        for (int i = 0; i < samples; ++i) {
            const double p = lo + (hi - lo) * i / (samples - 1);
            const VelocityPaird v = velocities(p);
            const auto [h_plus, h_minus] = hamiltonians(p);
            table.rows.push_back({p, v.plus, v.minus, h_plus, h_minus});
        }
        output.deliver(table, out);
    }
};

struct SpectrumCmd {
    QuantumOpts quantum;
    OutputOpts output;
    std::string branch_flag = "both";
    std::string method = "grid";
    int count = 8;
    bool no_linear = false;

    void attach(CLI::App& app, std::ostream& out) {
        auto* sub = app.add_subcommand("spectrum",
                                       "lowest branch levels by direct diagonalisation");
        quantum.attach(sub);
        output.attach(sub);
        sub->add_option("--branch", branch_flag, "plus, minus, or both")
            ->check(CLI::IsMember({"plus", "minus", "both"}))
            ->capture_default_str();
        sub->add_option("--method", method, "discretisation route")
            ->check(CLI::IsMember({"grid", "basis"}))
            ->capture_default_str();
        sub->add_option("--count", count, "number of levels")->capture_default_str();
        sub->add_flag("--no-linear-term", no_linear,
                      "drop the branch-splitting linear term (exactly solvable check)");
        sub->callback([this, &out] { execute(out); });
    }

    void execute(std::ostream& out) {
        Table table;
        table.add_config("command", "spectrum");
        table.add_config("branch", branch_flag);
        table.add_config("method", method);
        table.add_config("count", count);
        table.add_config("include_linear", !no_linear);
        quantum.echo(table, method);
        output.echo(table);
        table.columns = {"n", "E", "eta", "branch", "method", "conv_est"};

        std::vector<Branch> branches;
        if (branch_flag == "both") {
            branches = {Branch::Plus, Branch::Minus};
        } else {
            branches = {branch_from_flag(branch_flag)};
        }
        for (Branch b : branches) {
            const Spectrum spectrum =
                eigenvalues(quantum.problem(b, method, !no_linear), count);
            const Table block = spectrum_table(spectrum);
            table.rows.insert(table.rows.end(), block.rows.begin(), block.rows.end());
        }
        output.deliver(table, out);
        if (!output.path.empty()) {
            out << "wrote " << table.rows.size() << " levels to " << output.path << "\n";
        }
    }
};

struct PerturbCmd {
    QuantumOpts quantum;
    OutputOpts output;
    std::string branch_flag = "plus";
    int level = 0;
    int order = 4;
    int max_basis = 1024;

    void attach(CLI::App& app, std::ostream& out) {
        auto* sub = app.add_subcommand("perturb",
                                       "perturbation-series coefficients and partial sums");
        quantum.attach(sub);
        output.attach(sub);
        sub->add_option("--branch", branch_flag, "plus or minus")
            ->check(CLI::IsMember({"plus", "minus"}))
            ->capture_default_str();
        sub->add_option("--n", level, "level index")->capture_default_str();
        sub->add_option("--order", order, "series order (at most 8)")->capture_default_str();
        sub->add_option("--max-basis", max_basis, "basis-enlargement ceiling")
            ->capture_default_str();
        sub->callback([this, &out] { execute(out); });
    }

    void execute(std::ostream& out) {
        const RadialProblem problem =
            quantum.problem(branch_from_flag(branch_flag), "basis", true);
        RsptOptions options;
        options.max_basis = max_basis;
        const PerturbationSeries series = perturbation_series(problem, level, order, options);

        Table table;
        table.add_config("command", "perturb");
        table.add_config("branch", branch_flag);
        table.add_config("n", level);
        table.add_config("order", order);
        quantum.echo(table, "basis");
        output.echo(table);
        table.add_config("coupling_g", series.coupling);
        table.add_config("basis_size_used", series.basis_size_used);
        if (series.radius_estimate) {
            table.add_config("radius_estimate", *series.radius_estimate);
        } else {
            table.add_config("radius_estimate", "none");
        }
        table.columns = {"m", "coefficient", "partial_sum", "eta_partial"};
        for (int m = 0; m <= series.order(); ++m) {
            table.rows.push_back({static_cast<long>(m), series.coefficients[m],
                                  series.partial_sums[m], series.eta_partial[m]});
        }
        output.deliver(table, out);
        out << "eta(" << level << ", " << branch_flag << ") summed to order " << order << " = "
            << format_double(series.eta(order)) << "\n";
        if (series.radius_estimate) {
            out << "convergence-radius estimate = " << format_double(*series.radius_estimate)
                << " (coupling g = " << format_double(series.coupling) << ")\n";
        } else {
            out << "convergence-radius estimate: pattern too short\n";
        }
    }
};

struct CompareCmd {
    QuantumOpts quantum;
    OutputOpts output;
    int level = 0;
    int order = 4;
    int max_basis = 1024;

    void attach(CLI::App& app, std::ostream& out) {
        auto* sub = app.add_subcommand(
            "compare", "perturbative eta against direct diagonalisation, both branches");
        quantum.attach(sub);
        output.attach(sub);
        sub->add_option("--n", level, "level index")->capture_default_str();
        sub->add_option("--order", order, "series order (at most 8)")->capture_default_str();
        sub->add_option("--max-basis", max_basis, "basis-enlargement ceiling")
            ->capture_default_str();
        sub->callback([this, &out] { execute(out); });
    }

    void execute(std::ostream& out) {
        RsptOptions options;
        options.max_basis = max_basis;

        Table table;
        table.add_config("command", "compare");
        table.add_config("n", level);
        table.add_config("order", order);
        quantum.echo(table, "");
        output.echo(table);
        table.columns = {"n", "branch", "order_used", "eta_series", "eta_diag", "abs_diff"};

        for (Branch b : {Branch::Plus, Branch::Minus}) {
            const RadialProblem problem = quantum.problem(b, "grid", true);
            const EtaReport report = compare_with_diagonalization(problem, level, order, options);
            table.rows.push_back({static_cast<long>(report.level), to_string(report.branch),
                                  static_cast<long>(report.order_used), report.eta_series,
                                  report.eta_diagonalisation, report.abs_diff});
            out << "eta_" << to_string(b) << "(" << level << "): series "
                << format_double(report.eta_series) << "  diag "
                << format_double(report.eta_diagonalisation) << "  |diff| "
                << format_double(report.abs_diff) << "\n";
        }
        const MirrorDecomposition mirror =
            mirror_decomposition(quantum.problem(Branch::Plus, "grid", true), level, order,
                                 options);
        out << "even-order shift: series " << format_double(mirror.even_shift_series)
            << "  diag " << format_double(mirror.even_shift_diag) << "  odd part "
            << format_double(mirror.odd_part_series) << "\n";
        output.deliver(table, out);
    }
};

void apply_thread_cap() {
    const char* raw = std::getenv("BRANCHON_THREADS");
    if (raw == nullptr || *raw == '\0') return;
    char* end = nullptr;
    const long value = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0' || value < 1 || value > 1024) {
        throw ConfigError(std::string("BRANCHON_THREADS must be a small positive integer, got '") +
                          raw + "'");
    }
    Eigen::setNbThreads(static_cast<int>(value));
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"branched-Hamiltonian oscillator toolkit"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value configuration file ([subcommand] sections)");

    SimulateCmd simulate_cmd;
    TransformCheckCmd transform_cmd;
    HamiltonianCmd hamiltonian_cmd;
    BranchesCmd branches_cmd;
    SpectrumCmd spectrum_cmd;
    PerturbCmd perturb_cmd;
    CompareCmd compare_cmd;

    simulate_cmd.attach(app, out);
    transform_cmd.attach(app, out);
    hamiltonian_cmd.attach(app, out);
    branches_cmd.attach(app, out);
    spectrum_cmd.attach(app, out);
    perturb_cmd.attach(app, out);
    compare_cmd.attach(app, out);

    try {
        apply_thread_cap();
        std::reverse(args.begin(), args.end());  // CLI11 consumes a reversed vector
        app.parse(args);
        return 0;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const ConfigError& e) {
        err << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "numerical failure: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace branchon::cli
