#ifndef PARCALC_SWEEP_HPP_
#define PARCALC_SWEEP_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "parcalc/metrics.hpp"
#include "parcalc/problem_spec.hpp"

namespace parcalc {

enum class SchedulerKind { Level, Greedy, Perfect };

SchedulerKind scheduler_from_name(const std::string& name);
std::string scheduler_name(SchedulerKind kind);

/// Builds the execution matrix of an instance for one processor count.
/// For SchedulerKind::Perfect, `n` is the row multiplier and the processor
/// argument is ignored (P = c_D / n).
ExecutionMatrix schedule_instance(const Instance& instance, SchedulerKind kind,
                                  std::size_t processors, std::size_t n = 1);

/// One row of a processor sweep.
struct SweepRow {
    std::size_t p = 0;
    std::size_t r_e = 0;
    Rational t;
    Rational sp;
    Rational sp_ideal;
    Rational ef;
    Rational q;
    Rational oh;
    std::size_t sparsity = 0;
};

/// Evaluates the instance for every processor count in order. Throws
/// PreconditionError on a zero processor count.
std::vector<SweepRow> sweep_processors(const Instance& instance,
                                       const std::vector<std::size_t>& processor_counts,
                                       SchedulerKind kind);

/// Fixed columns: P,r_E,T,T_dec,Sp,Sp_dec,Sp_ideal,Sp_ideal_dec,Ef,Ef_dec,
/// Q,Q_dec,Oh,Oh_dec,sparsity. Exact values as p/q, decimals with 12
/// significant digits, no quoting.
std::string sweep_csv(const std::vector<SweepRow>& rows);

/// One row of a chunk-count sweep; invalid chunk counts are kept with an
/// explanatory status instead of aborting the sweep.
struct MuRow {
    std::int64_t mu = 0;
    bool valid = false;
    Rational xi;
    Rational scale_up;
    std::string status;  // "ok" or the reason the row is invalid
};

std::vector<MuRow> sweep_mu(const PolynomialComplexity& complexity, std::int64_t n_r,
                            const std::vector<std::int64_t>& mu_values);

/// Fixed columns: mu,xi,xi_dec,scup,scup_dec,status.
std::string mu_csv(const std::vector<MuRow>& rows);

}  // namespace parcalc

#endif  // PARCALC_SWEEP_HPP_
