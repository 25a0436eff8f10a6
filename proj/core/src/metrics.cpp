#include "parcalc/metrics.hpp"

#include <algorithm>

namespace parcalc {

namespace {

// m_1 must be a single-column matrix scheduling the same operator multiset.
void require_serialization(const ExecutionMatrix& m_p, const ExecutionMatrix& m_1) {
    if (m_1.cols() != 1) {
        throw PreconditionError("the reference matrix must have a single column");
    }
    if (m_1.non_empty_count() != m_p.non_empty_count() || beta_sum(m_1) != beta_sum(m_p)) {
        throw PreconditionError(
            "the reference matrix does not serialize the same algorithm");
    }
}

}  // namespace

Rational row_time(const ExecutionMatrix& m, std::size_t row) {
    if (row >= m.rows()) {
        throw RowOutOfRange("row " + std::to_string(row) + " outside a matrix with " +
                            std::to_string(m.rows()) + " rows");
    }
    Rational max(0);
    for (std::size_t c = 0; c < m.cols(); ++c) {
        const auto& cell = m.cell(row, c);
        if (cell.has_value()) {
            max = std::max(max, cell->op.beta_calc());
        }
    }
    return max;
}

Rational exec_time(const ExecutionMatrix& m) {
    Rational total(0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        total += row_time(m, r);
    }
    return total;
}

Rational beta_sum(const ExecutionMatrix& m) {
    Rational total(0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const auto& cell = m.cell(r, c);
            if (cell.has_value()) {
                total += cell->op.beta_calc();
            }
        }
    }
    return total;
}

TimeSplit time_split(const ExecutionMatrix& m) {
    TimeSplit split{Rational(0), Rational(0)};
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (m.row_width(r) == 1) {
            split.t_seq += row_time(m, r);
        } else {
            split.t_par += row_time(m, r);
        }
    }
    return split;
}

Rational r_calc(const ExecutionMatrix& m) {
    if (m.rows() == 0) {
        throw PreconditionError("cannot evaluate a matrix with no rows");
    }
    return exec_time(m) / Rational(static_cast<std::int64_t>(m.rows()));
}

Rational scale_up(const Algorithm& a_i, const Algorithm& a_j) {
    if (!same_granularity(a_i, a_j)) {
        throw GranularityMismatch(
            "scale-up is only defined for algorithms with the same granularity set");
    }
    return Rational(static_cast<std::int64_t>(complexity(a_i)),
                    static_cast<std::int64_t>(complexity(a_j)));
}

ScaleUpResult scale_up_polynomial(const PolynomialComplexity& complexity, std::int64_t n_r,
                                  std::int64_t mu) {
    if (n_r < 1 || mu < 1 || mu > n_r) {
        throw PreconditionError("chunk count must satisfy 1 <= mu <= input size");
    }
    if (n_r % mu != 0) {
        throw IndivisibleError("chunk count " + std::to_string(mu) +
                               " does not divide the input size " + std::to_string(n_r));
    }
    // xi = sum_i a_i / n_r^(d-i)  over  sum_i a_i * mu^(d-i) / n_r^(d-i).
    const auto& coeffs = complexity.coefficients();
    const std::size_t d = complexity.degree();
    Rational numerator(0);
    Rational denominator(0);
    Rational num_weight(1);  // 1 / n_r^(d-i), built from i = d downwards
    Rational den_weight(1);  // mu^(d-i) / n_r^(d-i)
    for (std::size_t step = 0; step <= d; ++step) {
        const Rational& a = coeffs[d - step];
        numerator += a * num_weight;
        denominator += a * den_weight;
        num_weight /= Rational(n_r);
        den_weight *= Rational(mu, n_r);
    }
    if (denominator == Rational(0)) {
        throw PreconditionError("complexity polynomial vanishes at the chunk size " +
                                std::to_string(n_r / mu));
    }
    ScaleUpResult out;
    out.xi = numerator / denominator;
    Rational mu_power(1);
    for (std::size_t i = 1; i < std::max<std::size_t>(d, 1); ++i) {
        mu_power *= Rational(mu);
    }
    if (d == 0) {
        mu_power = Rational(1, mu);  // mu^(d-1) with d = 0
    }
    out.scale_up = out.xi * mu_power;
    return out;
}

Rational speed_up(const ExecutionMatrix& m_p) {
    return beta_sum(m_p) / exec_time(m_p);
}

Rational speed_up_cross(const ExecutionMatrix& m_p, std::size_t k_prime) {
    const auto k = static_cast<std::int64_t>(m_p.non_empty_count());
    return Rational(static_cast<std::int64_t>(k_prime), k) * speed_up(m_p);
}

Rational speed_up_cross(const ExecutionMatrix& m_p, const Algorithm& a,
                        const Algorithm& reference) {
    if (!same_granularity(a, reference)) {
        throw GranularityMismatch(
            "cross-class speed-up requires matching granularity sets");
    }
    return speed_up_cross(m_p, complexity(reference));
}

Rational speed_up_relative(const ExecutionMatrix& m_q, const ExecutionMatrix& m_p) {
    return exec_time(m_q) / exec_time(m_p);
}

Rational ideal_speed_up(const ExecutionMatrix& m_p, const ExecutionMatrix& m_1) {
    require_serialization(m_p, m_1);
    return Rational(static_cast<std::int64_t>(m_p.cols())) * r_calc(m_1) / r_calc(m_p);
}

AmdahlResult amdahl_generalized(const ExecutionMatrix& m, const ExecutionMatrix& m_1) {
    require_serialization(m, m_1);
    const RowProfile profile = row_profile(m);
    const auto k = static_cast<std::int64_t>(m.non_empty_count());
    AmdahlResult out;
    out.alpha.assign(m.cols() + 1, Rational(0));
    Rational alpha_sum(0);
    for (std::size_t i = 1; i <= m.cols(); ++i) {
        out.alpha[i] = Rational(static_cast<std::int64_t>(profile.r_par[i]), k);
        alpha_sum += out.alpha[i];
    }
    out.sp = (r_calc(m_1) / r_calc(m)) / alpha_sum;
    return out;
}

Rational amdahl_classical(std::size_t r_seq, std::size_t k, std::size_t processors,
                          const Rational& r_calc_1, const Rational& r_calc_p) {
    if (k == 0 || processors == 0) {
        throw PreconditionError("cardinality and processor count must be positive");
    }
    const Rational alpha(static_cast<std::int64_t>(r_seq), static_cast<std::int64_t>(k));
    const Rational p(static_cast<std::int64_t>(processors));
    return (r_calc_1 / r_calc_p) / (alpha + (Rational(1) - alpha) / p);
}

Rational cost(const ExecutionMatrix& m) {
    return Rational(static_cast<std::int64_t>(m.cols())) * exec_time(m);
}

Rational overhead(const ExecutionMatrix& m_p, const ExecutionMatrix& m_1) {
    require_serialization(m_p, m_1);
    return cost(m_p) - cost(m_1);
}

Rational overhead_ideal(const ExecutionMatrix& m_p, const ExecutionMatrix& m_1) {
    require_serialization(m_p, m_1);
    return Rational(static_cast<std::int64_t>(m_p.non_empty_count())) *
           (r_calc(m_p) - r_calc(m_1));
}

Rational overhead_sparsity(const ExecutionMatrix& m) {
    std::size_t sparsity = 0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const auto& cell = m.cell(r, c);
            if (!cell.has_value()) {
                ++sparsity;
            } else if (cell->op.beta_calc() != Rational(1)) {
                throw NonUniformBeta("operator '" + cell->op.op_id() +
                                     "' has cost coefficient " +
                                     to_string(cell->op.beta_calc()) +
                                     "; the sparsity identity needs unit costs");
            }
        }
    }
    return Rational(static_cast<std::int64_t>(sparsity));
}

Rational efficiency(const ExecutionMatrix& m_p, const ExecutionMatrix& m_1) {
    require_serialization(m_p, m_1);
    return speed_up(m_p) / Rational(static_cast<std::int64_t>(m_p.cols()));
}

Rational efficiency_ideal(const ExecutionMatrix& m_p, const ExecutionMatrix& m_1) {
    require_serialization(m_p, m_1);
    return r_calc(m_1) / r_calc(m_p);
}

MetricsReport report(const ExecutionMatrix& m_p) {
    if (m_p.rows() == 0 || m_p.cols() == 0 || m_p.non_empty_count() == 0) {
        throw PreconditionError("cannot report on an empty execution matrix");
    }
    const ExecutionMatrix m_1 = sequentialize(m_p);
    const RowProfile profile = row_profile(m_p);

    MetricsReport rep;
    rep.k = m_p.non_empty_count();
    rep.processors = m_p.cols();
    rep.r_e = m_p.rows();
    rep.matrix_class = classify(m_p);
    for (std::size_t r = 0; r < m_p.rows(); ++r) {
        rep.beta_row.push_back(row_time(m_p, r));
    }
    rep.beta_me = exec_time(m_p);
    rep.beta_sum = beta_sum(m_p);
    rep.r_calc_p = r_calc(m_p);
    rep.r_calc_1 = r_calc(m_1);
    rep.t = rep.beta_me;
    const TimeSplit split = time_split(m_p);
    rep.t_seq = split.t_seq;
    rep.t_par = split.t_par;
    rep.sp = speed_up(m_p);
    rep.sp_ideal = ideal_speed_up(m_p, m_1);
    rep.q = cost(m_p);
    rep.oh = overhead(m_p, m_1);
    rep.oh_ideal = overhead_ideal(m_p, m_1);
    rep.ef = efficiency(m_p, m_1);
    rep.ef_ideal = efficiency_ideal(m_p, m_1);
    const AmdahlResult amdahl = amdahl_generalized(m_p, m_1);
    rep.alpha = amdahl.alpha;
    rep.r_seq_rows = profile.r_seq;
    rep.sparsity = profile.sparsity;

    if (profile.r_par[0] > 0) {
        rep.warnings.push_back(std::to_string(profile.r_par[0]) +
                               " row(s) hold no operator at all");
    }

    // The model's internal identities; a failure here is a bug in this
    // library, not a property of the input.
    if (rep.t != rep.t_seq + rep.t_par) {
        throw InternalIdentityViolation("time split does not add up to the total time");
    }
    if (rep.ef * Rational(static_cast<std::int64_t>(rep.processors)) != rep.sp) {
        throw InternalIdentityViolation("efficiency is not speed-up over processors");
    }
    if (profile.r_par[0] == 0 && amdahl.sp != rep.sp) {
        throw InternalIdentityViolation(
            "generalized speed-up law disagrees with the direct speed-up");
    }
    return rep;
}

}  // namespace parcalc
