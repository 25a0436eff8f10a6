#ifndef PARCALC_METRICS_HPP_
#define PARCALC_METRICS_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "parcalc/algorithm.hpp"
#include "parcalc/execution_matrix.hpp"
#include "parcalc/problem.hpp"

namespace parcalc {

/// Every performance quantity of one (algorithm, P, schedule) triple. All
/// times are exact rationals in units of the elementary-operation time; set
/// that unit to seconds externally to get wall-clock figures.
struct MetricsReport {
    std::size_t k = 0;           // operator instances (complexity)
    std::size_t processors = 0;  // c_E
    std::size_t r_e = 0;
    MatrixClass matrix_class = MatrixClass::Sequential;

    std::vector<Rational> beta_row;  // per-row maximum cost coefficient
    Rational beta_me;                // sum of row maxima
    Rational beta_sum;               // sum of all coefficients
    Rational r_calc_p;               // beta_me / r_E, load of the heaviest sub-algorithms
    Rational r_calc_1;               // beta_sum / k, same for the serialized run

    Rational t;      // total execution time (== beta_me)
    Rational t_seq;  // time in rows with exactly one operator
    Rational t_par;  // time in the remaining rows

    Rational sp;        // speed-up over the serialized run
    Rational sp_ideal;  // P * r_calc_1 / r_calc_p
    Rational q;         // cost: processors x time
    Rational oh;        // overhead: q(P) - q(1)
    Rational oh_ideal;  // k * (r_calc_p - r_calc_1)
    Rational ef;        // efficiency: sp / P
    Rational ef_ideal;  // r_calc_1 / r_calc_p

    /// alpha[i] = (rows with exactly i operators) / k, for i in [1, P];
    /// alpha[0] is unused. The row-width fractions of the generalized
    /// speed-up law.
    std::vector<Rational> alpha;

    std::size_t r_seq_rows = 0;
    std::size_t sparsity = 0;  // total idle slots

    std::vector<std::string> warnings;
};

/// Time of one row: the maximum cost coefficient among its operators; an
/// idle slot costs nothing. Throws RowOutOfRange.
Rational row_time(const ExecutionMatrix& m, std::size_t row);

/// Total execution time: the sum of row times (rows are synchronous).
Rational exec_time(const ExecutionMatrix& m);

/// Sum of all cost coefficients; equals exec_time on one processor.
Rational beta_sum(const ExecutionMatrix& m);

struct TimeSplit {
    Rational t_seq;
    Rational t_par;
};

/// Splits the execution time into the single-operator rows (sequential part)
/// and everything else (parallel part); the two always add up to exec_time.
TimeSplit time_split(const ExecutionMatrix& m);

/// beta_me / r_E: mean row bottleneck, a measure of the load imbalance
/// induced by heavy operators.
Rational r_calc(const ExecutionMatrix& m);

/// Complexity ratio k_i / k_j of two algorithms with the same granularity
/// set. Throws GranularityMismatch.
Rational scale_up(const Algorithm& a_i, const Algorithm& a_j);

struct ScaleUpResult {
    Rational xi;
    Rational scale_up;
};

/// Scale-up of a degree-d polynomial-complexity algorithm against mu
/// concatenated similar chunks of size n_r / mu: scale_up = xi * mu^(d-1),
/// which equals poly(n_r) / (mu * poly(n_r / mu)) exactly.
/// Throws IndivisibleError unless mu divides n_r.
ScaleUpResult scale_up_polynomial(const PolynomialComplexity& complexity, std::int64_t n_r,
                                  std::int64_t mu);

/// Speed-up over the serialized run of the same algorithm:
/// beta_sum / beta_me.
Rational speed_up(const ExecutionMatrix& m_p);

/// Speed-up against a reference algorithm of complexity k' from a different
/// decomposition of the same problem: (k' / k) * beta_sum / beta_me.
Rational speed_up_cross(const ExecutionMatrix& m_p, std::size_t k_prime);

/// Same, extracting k' from the reference algorithm and requiring matching
/// granularity sets. Throws GranularityMismatch.
Rational speed_up_cross(const ExecutionMatrix& m_p, const Algorithm& a,
                        const Algorithm& reference);

/// Execution-time ratio of two schedules of one algorithm:
/// exec_time(m_q) / exec_time(m_p).
Rational speed_up_relative(const ExecutionMatrix& m_q, const ExecutionMatrix& m_p);

/// P * r_calc(m_1) / r_calc(m_p): the best speed-up any schedule of the class
/// can reach on P processors. `m_1` must be the single-processor form of the
/// same algorithm.
Rational ideal_speed_up(const ExecutionMatrix& m_p, const ExecutionMatrix& m_1);

struct AmdahlResult {
    /// alpha[i] for i in [1, P]; alpha[0] unused.
    std::vector<Rational> alpha;
    Rational sp;
};

/// The generalized speed-up law: sp = (r_calc_1 / r_calc_p) / sum(alpha_i)
/// with alpha_i the fraction of rows holding exactly i operators. Equal to
/// speed_up(m) by algebraic identity whenever no row is fully idle.
AmdahlResult amdahl_generalized(const ExecutionMatrix& m, const ExecutionMatrix& m_1);

/// The classical two-width special case: for matrices whose rows hold either
/// 1 or P operators, sp = (r1 / rp) / (alpha + (1 - alpha) / P) with
/// alpha = r_seq / k.
Rational amdahl_classical(std::size_t r_seq, std::size_t k, std::size_t processors,
                          const Rational& r_calc_1, const Rational& r_calc_p);

/// Cost: processors x execution time = c_E * beta_me.
Rational cost(const ExecutionMatrix& m);

/// Overhead: cost(m_p) - cost(m_1), the processor time spent beyond useful
/// computation.
Rational overhead(const ExecutionMatrix& m_p, const ExecutionMatrix& m_1);

/// Lower bound on the overhead: k * (r_calc_p - r_calc_1); attained by
/// perfectly parallel schedules.
Rational overhead_ideal(const ExecutionMatrix& m_p, const ExecutionMatrix& m_1);

/// Sparsity degree of the matrix (total idle slots). Under unit-cost
/// operators this equals the overhead exactly; throws NonUniformBeta if any
/// coefficient differs from 1.
Rational overhead_sparsity(const ExecutionMatrix& m);

/// Efficiency: sp / P = beta_sum / (r_E * c_E * r_calc_p).
Rational efficiency(const ExecutionMatrix& m_p, const ExecutionMatrix& m_1);

/// Upper bound on the efficiency: r_calc_1 / r_calc_p.
Rational efficiency_ideal(const ExecutionMatrix& m_p, const ExecutionMatrix& m_1);

/// Evaluates everything at once, internally building the single-processor
/// serialization. Cross-checks the model identities (time split, generalized
/// speed-up law, efficiency = sp / P) before returning and throws
/// InternalIdentityViolation if any fails — that would be a bug here, not bad
/// input. Degenerate all-empty rows are reported as warnings.
MetricsReport report(const ExecutionMatrix& m_p);

}  // namespace parcalc

#endif  // PARCALC_METRICS_HPP_
