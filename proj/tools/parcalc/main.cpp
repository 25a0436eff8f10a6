#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "parcalc/metrics.hpp"
#include "parcalc/problem_spec.hpp"
#include "parcalc/render.hpp"
#include "parcalc/scheduler.hpp"
#include "parcalc/sweep.hpp"

namespace {

using namespace parcalc;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitPreconditionError = 3;

void emit(const std::string& text, const std::optional<std::string>& out_path) {
    if (out_path.has_value()) {
        std::ofstream out(*out_path);
        if (!out) {
            throw ValidationError("cannot write to: " + *out_path);
        }
        out << text;
    } else {
        std::cout << text;
    }
}

bool color_enabled() {
    const char* value = std::getenv("PARCALC_COLOR");
    return value != nullptr && std::string(value) == "1";
}

struct CommonOptions {
    std::string spec_path;
    std::size_t processors = 1;
    std::string scheduler = "level";
    std::size_t n = 1;
    std::string format;
    std::optional<double> tcalc_seconds;
    std::optional<std::string> out_path;
};

ExecutionMatrix schedule_from_options(const Instance& instance, const CommonOptions& opt) {
    const SchedulerKind kind = scheduler_from_name(opt.scheduler);
    return schedule_instance(instance, kind, opt.processors, opt.n);
}

int cmd_analyze(const CommonOptions& opt) {
    const Instance instance = instantiate(load_problem_spec(opt.spec_path));
    const ExecutionMatrix m = schedule_from_options(instance, opt);
    const MetricsReport rep = report(m);
    if (opt.format == "json") {
        emit(report_to_json(rep, opt.tcalc_seconds).dump(2) + "\n", opt.out_path);
    } else {
        RenderOptions render_opt;
        render_opt.color = color_enabled();
        render_opt.tcalc_seconds = opt.tcalc_seconds;
        const std::string title = instance.name + "  [" + opt.scheduler + " schedule]";
        emit(render_report_table(rep, title, render_opt), opt.out_path);
    }
    return kExitOk;
}

int cmd_schedule(const CommonOptions& opt) {
    const Instance instance = instantiate(load_problem_spec(opt.spec_path));
    const ExecutionMatrix m = schedule_from_options(instance, opt);
    if (opt.format == "json") {
        emit(matrix_to_json(m).dump(2) + "\n", opt.out_path);
    } else {
        std::ostringstream out;
        out << instance.name << "  [" << opt.scheduler << " schedule]  r_E=" << m.rows()
            << " c_E=" << m.cols() << " class=" << parcalc::to_string(classify(m)) << "\n"
            << render_grid(m);
        emit(out.str(), opt.out_path);
    }
    return kExitOk;
}

int cmd_generate(const std::string& family, std::int64_t size, const std::string& level,
                 const std::optional<std::string>& out_path) {
    if (family != "reduction") {
        throw ValidationError("unknown generator family '" + family +
                              "' (available: reduction)");
    }
    std::optional<std::size_t> level_index;
    if (level != "full") {
        try {
            level_index = static_cast<std::size_t>(std::stoul(level));
        } catch (const std::exception&) {
            throw ValidationError("level must be a positive integer or 'full', got '" + level +
                                  "'");
        }
    }
    const ProblemSpec spec = make_reduction_spec(size, level_index);
    emit(problem_spec_to_json(spec).dump(2) + "\n", out_path);
    return kExitOk;
}

int cmd_sweep_p(const std::string& spec_path, const std::vector<std::size_t>& processors,
                const std::string& scheduler, const std::optional<std::string>& out_path) {
    const Instance instance = instantiate(load_problem_spec(spec_path));
    const SchedulerKind kind = scheduler_from_name(scheduler);
    const auto rows = sweep_processors(instance, processors, kind);
    emit(sweep_csv(rows), out_path);
    return kExitOk;
}

int cmd_sweep_mu(std::int64_t n, const std::vector<std::string>& coefficient_text,
                 const std::vector<std::int64_t>& mu_values,
                 const std::optional<std::string>& out_path) {
    std::vector<Rational> coefficients;
    coefficients.reserve(coefficient_text.size());
    for (const auto& text : coefficient_text) {
        coefficients.push_back(rational_from_string(text));
    }
    const PolynomialComplexity complexity{std::move(coefficients)};
    emit(mu_csv(sweep_mu(complexity, n, mu_values)), out_path);
    return kExitOk;
}

// Theorem checks evaluated on one concrete instance.
class Checker {
public:
    void check(const std::string& name, bool ok, const std::string& detail = "") {
        out_ << (ok ? "ok   " : "FAIL ") << name;
        if (!detail.empty()) {
            out_ << ": " << detail;
        }
        out_ << '\n';
        ++total_;
        if (!ok) {
            ++failures_;
        }
    }

    int failures() const { return failures_; }
    std::string summary() const {
        return out_.str() + "summary: " + std::to_string(total_) + " checks, " +
               std::to_string(failures_) + " failure(s)\n";
    }

private:
    std::ostringstream out_;
    int total_ = 0;
    int failures_ = 0;
};

bool uniform_beta(const ExecutionMatrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const auto& cell = m.cell(r, c);
            if (cell.has_value() && cell->op.beta_calc() != Rational(1)) {
                return false;
            }
        }
    }
    return true;
}

void verify_schedule(Checker& checker, const std::string& tag, const Instance& instance,
                     const ExecutionMatrix& m, std::size_t r_d) {
    const auto& dag = instance.decomposition.dag();
    const auto exec_report = validate_execution_matrix(m, dag);
    checker.check(tag + " execution-matrix-valid", exec_report.ok(),
                  exec_report.ok() ? "" : exec_report.violations.front().detail);
    checker.check(tag + " row-count-lower-bound", m.rows() >= r_d,
                  "r_E=" + std::to_string(m.rows()) + " r_D=" + std::to_string(r_d));
    checker.check(tag + " cell-conservation", m.non_empty_count() == dag.size());

    const MetricsReport rep = report(m);
    checker.check(tag + " time-split", rep.t == rep.t_seq + rep.t_par);
    checker.check(tag + " speed-up-bound", rep.sp <= rep.sp_ideal,
                  "Sp=" + parcalc::to_string(rep.sp) +
                      " Sp_ideal=" + parcalc::to_string(rep.sp_ideal));
    checker.check(tag + " efficiency-bound", rep.ef <= rep.ef_ideal);
    checker.check(tag + " overhead-bound", rep.oh >= rep.oh_ideal);
    checker.check(tag + " time-lower-bound",
                  rep.t >= Rational(static_cast<std::int64_t>(r_d)) * rep.r_calc_p);
    const AmdahlResult amdahl = amdahl_generalized(m, sequentialize(m));
    checker.check(tag + " generalized-speed-up-law", amdahl.sp == rep.sp,
                  "law=" + parcalc::to_string(amdahl.sp) +
                      " direct=" + parcalc::to_string(rep.sp));
    if (uniform_beta(m)) {
        checker.check(tag + " overhead-equals-sparsity",
                      rep.oh == Rational(static_cast<std::int64_t>(rep.sparsity)),
                      "Oh=" + parcalc::to_string(rep.oh) +
                          " sparsity=" + std::to_string(rep.sparsity));
    }
    if (classify(m) == MatrixClass::PerfectlyParallel) {
        checker.check(tag + " perfectly-parallel-equalities",
                      rep.sp == rep.sp_ideal && rep.oh == rep.oh_ideal &&
                          rep.ef == rep.ef_ideal);
        if (uniform_beta(m)) {
            checker.check(tag + " ideal-time-division",
                          rep.t * Rational(static_cast<std::int64_t>(m.cols())) ==
                              rep.beta_sum);
        }
    }
}

int cmd_verify(const std::string& spec_path, const std::vector<std::size_t>& processors,
               const std::optional<std::string>& out_path) {
    const ProblemSpec spec = load_problem_spec(spec_path);
    Checker checker;

    std::optional<Instance> instance;
    try {
        instance = instantiate(spec);
        checker.check("structural-validation", true);
    } catch (const Error& e) {
        checker.check("structural-validation", false, e.what());
        emit(checker.summary(), out_path);
        return kExitCheckFailed;
    }

    const auto& dag = instance->decomposition.dag();
    const DependencyMatrix m_d = levelize(dag);
    const auto matrix_report = validate_dependency_matrix(m_d, dag);
    checker.check("dependency-matrix-valid", matrix_report.ok(),
                  matrix_report.ok() ? "" : matrix_report.violations.front().detail);
    checker.check("dependency-matrix-conservation", m_d.non_empty_count() == dag.size());
    const std::size_t r_d = dependency_degree(m_d);
    const std::size_t c_d = concurrency_degree(m_d);
    checker.check("degrees", r_d >= 1 && c_d >= 1,
                  "r_D=" + std::to_string(r_d) + " c_D=" + std::to_string(c_d));

    for (const std::size_t p : processors) {
        if (p == 0) {
            throw PreconditionError("processor count 0 in verify list");
        }
        const std::string p_text = "[P=" + std::to_string(p);
        verify_schedule(checker, p_text + " level]", *instance,
                        schedule_level_chunked(instance->algorithm, m_d, p), r_d);
        verify_schedule(checker, p_text + " greedy]", *instance,
                        schedule_greedy_list(instance->algorithm, dag, p), r_d);
        if (is_perfectly_decomposed(m_d) && p > 1 && c_d % p == 0) {
            verify_schedule(checker, p_text + " perfect]", *instance,
                            build_perfectly_parallel(instance->algorithm, m_d, c_d / p), r_d);
        }
    }
    emit(checker.summary(), out_path);
    return checker.failures() == 0 ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"analytical performance model for parallel algorithms"};
    app.require_subcommand(1);

    CommonOptions analyze_opt;
    auto* analyze = app.add_subcommand("analyze", "evaluate every metric of a problem spec");
    analyze->add_option("spec", analyze_opt.spec_path, "problem spec (JSON)")->required();
    analyze->add_option("--P", analyze_opt.processors, "processor count");
    analyze->add_option("--scheduler", analyze_opt.scheduler, "level|greedy|perfect");
    analyze->add_option("--n", analyze_opt.n, "row multiplier for --scheduler perfect");
    analyze->add_option("--format", analyze_opt.format, "table|json");
    double analyze_tcalc = 0.0;
    auto* analyze_tcalc_opt =
        analyze->add_option("--tcalc", analyze_tcalc, "seconds per elementary operation");
    std::string analyze_out;
    auto* analyze_out_opt = analyze->add_option("--out", analyze_out, "write output here");

    CommonOptions schedule_opt;
    auto* schedule = app.add_subcommand("schedule", "map a problem spec onto P processors");
    schedule->add_option("spec", schedule_opt.spec_path, "problem spec (JSON)")->required();
    schedule->add_option("--P", schedule_opt.processors, "processor count");
    schedule->add_option("--scheduler", schedule_opt.scheduler, "level|greedy|perfect");
    schedule->add_option("--n", schedule_opt.n, "row multiplier for --scheduler perfect");
    schedule->add_option("--format", schedule_opt.format, "table|json");
    std::string schedule_out;
    auto* schedule_out_opt = schedule->add_option("--out", schedule_out, "write output here");

    std::string generate_family;
    std::int64_t generate_size = 0;
    std::string generate_level = "full";
    std::string generate_out;
    auto* generate = app.add_subcommand("generate", "emit a problem spec from a generator");
    generate->add_option("family", generate_family, "generator family (reduction)")
        ->required();
    generate->add_option("size", generate_size, "problem input size")->required();
    generate->add_option("--level", generate_level, "refinement level (integer or 'full')");
    auto* generate_out_opt = generate->add_option("--out", generate_out, "write output here");

    std::string sweep_spec;
    std::vector<std::size_t> sweep_processors_list;
    std::string sweep_scheduler = "level";
    std::string sweep_out;
    auto* sweep_p = app.add_subcommand("sweep-p", "tabulate metrics across processor counts");
    sweep_p->add_option("spec", sweep_spec, "problem spec (JSON)")->required();
    sweep_p->add_option("--P", sweep_processors_list, "comma-separated processor counts")
        ->delimiter(',');
    sweep_p->add_option("--scheduler", sweep_scheduler, "level|greedy");
    auto* sweep_out_opt = sweep_p->add_option("--out", sweep_out, "write output here");

    std::int64_t mu_n = 0;
    std::vector<std::string> mu_coeffs;
    std::vector<std::int64_t> mu_values;
    std::string mu_out;
    auto* sweep_mu_cmd =
        app.add_subcommand("sweep-mu", "tabulate polynomial scale-up across chunk counts");
    sweep_mu_cmd->add_option("--N", mu_n, "problem input size")->required();
    sweep_mu_cmd
        ->add_option("--coeffs", mu_coeffs,
                     "polynomial coefficients a0,a1,...,ad (rationals, ascending)")
        ->required()
        ->delimiter(',');
    sweep_mu_cmd->add_option("--mu", mu_values, "comma-separated chunk counts")
        ->required()
        ->delimiter(',');
    auto* mu_out_opt = sweep_mu_cmd->add_option("--out", mu_out, "write output here");

    std::string verify_spec;
    std::vector<std::size_t> verify_processors{1, 2, 4, 8};
    std::string verify_out;
    auto* verify = app.add_subcommand("verify", "run every model check on an instance");
    verify->add_option("spec", verify_spec, "problem spec (JSON)")->required();
    verify->add_option("--P", verify_processors, "comma-separated processor counts")
        ->delimiter(',');
    auto* verify_out_opt = verify->add_option("--out", verify_out, "write output here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);
        }
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (analyze->parsed()) {
            if (analyze_tcalc_opt->count() > 0) {
                analyze_opt.tcalc_seconds = analyze_tcalc;
            }
            if (analyze_out_opt->count() > 0) {
                analyze_opt.out_path = analyze_out;
            }
            return cmd_analyze(analyze_opt);
        }
        if (schedule->parsed()) {
            if (schedule_out_opt->count() > 0) {
                schedule_opt.out_path = schedule_out;
            }
            return cmd_schedule(schedule_opt);
        }
        if (generate->parsed()) {
            std::optional<std::string> out;
            if (generate_out_opt->count() > 0) {
                out = generate_out;
            }
            return cmd_generate(generate_family, generate_size, generate_level, out);
        }
        if (sweep_p->parsed()) {
            std::optional<std::string> out;
            if (sweep_out_opt->count() > 0) {
                out = sweep_out;
            }
            return cmd_sweep_p(sweep_spec, sweep_processors_list, sweep_scheduler, out);
        }
        if (sweep_mu_cmd->parsed()) {
            std::optional<std::string> out;
            if (mu_out_opt->count() > 0) {
                out = mu_out;
            }
            return cmd_sweep_mu(mu_n, mu_coeffs, mu_values, out);
        }
        if (verify->parsed()) {
            std::optional<std::string> out;
            if (verify_out_opt->count() > 0) {
                out = verify_out;
            }
            return cmd_verify(verify_spec, verify_processors, out);
        }
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitPreconditionError;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}
