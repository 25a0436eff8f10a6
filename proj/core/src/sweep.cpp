#include "parcalc/sweep.hpp"

#include <sstream>

#include "parcalc/scheduler.hpp"

namespace parcalc {

SchedulerKind scheduler_from_name(const std::string& name) {
    if (name == "level") {
        return SchedulerKind::Level;
    }
    if (name == "greedy") {
        return SchedulerKind::Greedy;
    }
    if (name == "perfect") {
        return SchedulerKind::Perfect;
    }
    throw ValidationError("unknown scheduler '" + name + "' (expected level|greedy|perfect)");
}

std::string scheduler_name(SchedulerKind kind) {
    switch (kind) {
        case SchedulerKind::Level:
            return "level";
        case SchedulerKind::Greedy:
            return "greedy";
        case SchedulerKind::Perfect:
            return "perfect";
    }
    return "unknown";
}

ExecutionMatrix schedule_instance(const Instance& instance, SchedulerKind kind,
                                  std::size_t processors, std::size_t n) {
    switch (kind) {
        case SchedulerKind::Level:
            return schedule_level_chunked(instance.algorithm,
                                          levelize(instance.decomposition.dag()), processors);
        case SchedulerKind::Greedy:
            return schedule_greedy_list(instance.algorithm, instance.decomposition.dag(),
                                        processors);
        case SchedulerKind::Perfect:
            return build_perfectly_parallel(instance.algorithm,
                                            levelize(instance.decomposition.dag()), n);
    }
    throw PreconditionError("unknown scheduler kind");
}

std::vector<SweepRow> sweep_processors(const Instance& instance,
                                       const std::vector<std::size_t>& processor_counts,
                                       SchedulerKind kind) {
    if (kind == SchedulerKind::Perfect) {
        throw PreconditionError("processor sweeps use the level or greedy scheduler");
    }
    std::vector<SweepRow> rows;
    rows.reserve(processor_counts.size());
    for (const std::size_t p : processor_counts) {
        if (p == 0) {
            throw PreconditionError("processor count 0 in sweep list");
        }
        const ExecutionMatrix m = schedule_instance(instance, kind, p);
        const MetricsReport rep = report(m);
        rows.push_back({p, rep.r_e, rep.t, rep.sp, rep.sp_ideal, rep.ef, rep.q, rep.oh,
                        rep.sparsity});
    }
    return rows;
}

namespace {

void append_rational(std::ostringstream& out, const Rational& value) {
    out << ',' << to_string(value) << ',' << to_decimal(value);
}

}  // namespace

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    out << "P,r_E,T,T_dec,Sp,Sp_dec,Sp_ideal,Sp_ideal_dec,Ef,Ef_dec,Q,Q_dec,Oh,Oh_dec,"
           "sparsity\n";
    for (const auto& row : rows) {
        out << row.p << ',' << row.r_e;
        append_rational(out, row.t);
        append_rational(out, row.sp);
        append_rational(out, row.sp_ideal);
        append_rational(out, row.ef);
        append_rational(out, row.q);
        append_rational(out, row.oh);
        out << ',' << row.sparsity << '\n';
    }
    return out.str();
}

std::vector<MuRow> sweep_mu(const PolynomialComplexity& complexity, std::int64_t n_r,
                            const std::vector<std::int64_t>& mu_values) {
    std::vector<MuRow> rows;
    rows.reserve(mu_values.size());
    for (const std::int64_t mu : mu_values) {
        MuRow row;
        row.mu = mu;
        try {
            const ScaleUpResult result = scale_up_polynomial(complexity, n_r, mu);
            row.valid = true;
            row.xi = result.xi;
            row.scale_up = result.scale_up;
            row.status = "ok";
        } catch (const IndivisibleError&) {
            row.status = "indivisible";
        } catch (const PreconditionError& e) {
            row.status = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string mu_csv(const std::vector<MuRow>& rows) {
    std::ostringstream out;
    out << "mu,xi,xi_dec,scup,scup_dec,status\n";
    for (const auto& row : rows) {
        out << row.mu;
        if (row.valid) {
            append_rational(out, row.xi);
            append_rational(out, row.scale_up);
        } else {
            out << ",,,,";
        }
        std::string status = row.status;
        for (auto& ch : status) {
            if (ch == ',' || ch == '\n') {
                ch = ';';
            }
        }
        out << ',' << status << '\n';
    }
    return out.str();
}

}  // namespace parcalc
