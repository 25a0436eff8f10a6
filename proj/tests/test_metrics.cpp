#include "doctest.h"

#include <optional>
#include <random>

#include "parcalc/metrics.hpp"
#include "parcalc/scheduler.hpp"
#include "testutil.hpp"

using namespace parcalc;

namespace {

// Matrix from a grid of optional cost coefficients; ids are synthesized.
ExecutionMatrix beta_matrix(const std::vector<std::vector<std::optional<Rational>>>& grid) {
    std::vector<std::vector<ExecutionMatrix::Cell>> rows;
    std::size_t counter = 0;
    for (const auto& row : grid) {
        std::vector<ExecutionMatrix::Cell> cells;
        for (const auto& beta : row) {
            if (beta.has_value()) {
                const std::string label = "x" + std::to_string(counter);
                cells.push_back(ScheduledOp{ElementId(label), Operator(label, *beta)});
            } else {
                cells.push_back(std::nullopt);
            }
            ++counter;
        }
        rows.push_back(std::move(cells));
    }
    return ExecutionMatrix::from_rows(std::move(rows));
}

ExecutionMatrix reduction_16_at(std::size_t processors) {
    const Algorithm a = testutil::unit_algorithm(generate_reduction(16).levels.back().dag());
    return schedule_level_chunked(a, levelize(a.decomposition().dag()), processors);
}

// The worked 2x2 perfectly parallel example used across the metric tests.
ExecutionMatrix full_2x2() {
    return beta_matrix({{Rational(2), Rational(1)}, {Rational(1), Rational(3)}});
}

}  // namespace

TEST_CASE("row_time takes the per-row maximum, idle slots cost nothing") {
    const ExecutionMatrix m =
        beta_matrix({{Rational(2), Rational(5), std::nullopt},
                     {std::nullopt, std::nullopt, std::nullopt},
                     {Rational(1), Rational(1), Rational(1)}});
    CHECK(row_time(m, 0) == Rational(5));
    CHECK(row_time(m, 1) == Rational(0));
    CHECK(row_time(m, 2) == Rational(1));
    CHECK_THROWS_AS(row_time(m, 3), RowOutOfRange);
}

TEST_CASE("exec_time sums row maxima") {
    const ExecutionMatrix reduction = reduction_16_at(8);
    CHECK(exec_time(reduction) == Rational(4));
    CHECK(exec_time(reduction) == testutil::oracle_total_time(reduction));

    const ExecutionMatrix m = full_2x2();
    CHECK(exec_time(m) == Rational(5));
    CHECK(exec_time(m) == testutil::oracle_total_time(m));

    const ExecutionMatrix serial = reduction_16_at(1);
    CHECK(exec_time(serial) == Rational(15));
}

TEST_CASE("time_split partitions by row width") {
    const TimeSplit reduction = time_split(reduction_16_at(8));
    CHECK(reduction.t_seq == Rational(1));
    CHECK(reduction.t_par == Rational(3));

    const TimeSplit full = time_split(full_2x2());
    CHECK(full.t_seq == Rational(0));
    CHECK(full.t_par == Rational(5));

    const TimeSplit serial = time_split(reduction_16_at(1));
    CHECK(serial.t_seq == Rational(15));
    CHECK(serial.t_par == Rational(0));
}

TEST_CASE("r_calc is the mean row bottleneck") {
    CHECK(r_calc(reduction_16_at(8)) == Rational(1));
    const ExecutionMatrix m = full_2x2();
    CHECK(r_calc(m) == Rational(5, 2));
    CHECK(r_calc(sequentialize(m)) == Rational(7, 4));
}

TEST_CASE("scale_up compares complexities under one granularity set") {
    const Decomposition d15 = generate_reduction(16).levels.back();
    const Algorithm fine = testutil::unit_algorithm(d15.dag());

    // Fourteen pairwise combinations: two independent half-size trees, the
    // concatenated form of solving the same problem chunk by chunk.
    std::vector<Subproblem> parts;
    std::vector<DependencyEdge> deps;
    for (const std::string prefix : {"a", "b"}) {
        for (std::size_t i = 1; i <= 7; ++i) {
            parts.push_back({ElementId(prefix + std::to_string(i)), {"sum", 2}});
            if (i < 4) {
                deps.push_back({ElementId(prefix + std::to_string(i)),
                                ElementId(prefix + std::to_string(2 * i))});
                deps.push_back({ElementId(prefix + std::to_string(i)),
                                ElementId(prefix + std::to_string(2 * i + 1))});
            }
        }
    }
    const Decomposition d14 = decompose({"sum", 16}, std::move(parts), std::move(deps));
    std::map<ElementId, Operator> assignment;
    for (const auto& sub : d14.subproblems()) {
        assignment.emplace(sub.id, Operator("op", Rational(1)));
    }
    const Algorithm coarse = bind_operators(d14, assignment);

    CHECK(scale_up(fine, coarse) == Rational(15, 14));
    CHECK(scale_up(fine, fine) == Rational(1));

    const Algorithm other = bind_operators(
        d14, [&] {
            std::map<ElementId, Operator> heavy;
            for (const auto& sub : d14.subproblems()) {
                heavy.emplace(sub.id, Operator("other", Rational(2)));
            }
            return heavy;
        }());
    CHECK_THROWS_AS(scale_up(fine, other), GranularityMismatch);
}

TEST_CASE("scale_up_polynomial: worked values") {
    const PolynomialComplexity sum_complexity{{Rational(-1), Rational(1)}};  // x - 1
    const ScaleUpResult pairwise = scale_up_polynomial(sum_complexity, 16, 2);
    CHECK(pairwise.xi == Rational(15, 14));
    CHECK(pairwise.scale_up == Rational(15, 14));

    const PolynomialComplexity square{{Rational(0), Rational(0), Rational(1)}};  // x^2
    const ScaleUpResult quad = scale_up_polynomial(square, 16, 4);
    CHECK(quad.xi == Rational(1));
    CHECK(quad.scale_up == Rational(4));

    CHECK(scale_up_polynomial(sum_complexity, 16, 1).scale_up == Rational(1));
    CHECK_THROWS_AS(scale_up_polynomial(sum_complexity, 16, 3), IndivisibleError);
    CHECK_THROWS_AS(scale_up_polynomial(sum_complexity, 16, 16), PreconditionError);
}

TEST_CASE("property: scale_up_polynomial equals the direct complexity ratio") {
    std::mt19937_64 rng(7701);
    std::uniform_int_distribution<int> degree_dist(0, 3);
    std::uniform_int_distribution<std::int64_t> coeff_dist(-3, 5);
    const std::int64_t n = 24;
    for (int round = 0; round < 500; ++round) {
        std::vector<Rational> coeffs;
        const int degree = degree_dist(rng);
        for (int i = 0; i < degree; ++i) {
            coeffs.emplace_back(coeff_dist(rng));
        }
        std::int64_t lead = coeff_dist(rng);
        if (lead == 0) {
            lead = 1;
        }
        coeffs.emplace_back(lead);
        const PolynomialComplexity poly{coeffs};
        for (const std::int64_t mu : {1, 2, 3, 4, 6, 8, 12}) {
            const Rational chunk = poly.evaluate(Rational(n / mu));
            if (chunk == Rational(0)) {
                continue;
            }
            const Rational direct = poly.evaluate(Rational(n)) / (Rational(mu) * chunk);
            const ScaleUpResult result = scale_up_polynomial(poly, n, mu);
            CAPTURE(round);
            CAPTURE(mu);
            REQUIRE(result.scale_up == direct);
        }
    }
}

TEST_CASE("speed_up is serialized time over scheduled time") {
    const ExecutionMatrix reduction = reduction_16_at(8);
    CHECK(speed_up(reduction) == Rational(15, 4));
    CHECK(speed_up(reduction) == testutil::oracle_speed_up(reduction));

    CHECK(speed_up(full_2x2()) == Rational(7, 5));
    CHECK(speed_up(reduction_16_at(1)) == Rational(1));
}

TEST_CASE("speed_up_cross rescales by the reference complexity") {
    const ExecutionMatrix reduction = reduction_16_at(8);
    CHECK(speed_up_cross(reduction, 15) == speed_up(reduction));
    CHECK(speed_up_cross(reduction, 30) == Rational(15, 2));
    // Never beyond (k'/k) * P.
    CHECK(speed_up_cross(reduction, 30) <= Rational(30, 15) * Rational(8));

    const Algorithm a = testutil::unit_algorithm(generate_reduction(16).levels.back().dag());
    const Algorithm other = testutil::unit_algorithm(generate_reduction(8).levels.back().dag());
    CHECK(speed_up_cross(reduction, a, other) == Rational(7, 15) * speed_up(reduction));
}

TEST_CASE("speed_up_relative compares two schedules of one algorithm") {
    CHECK(speed_up_relative(reduction_16_at(2), reduction_16_at(8)) == Rational(2));
    CHECK(speed_up_relative(reduction_16_at(8), reduction_16_at(8)) == Rational(1));
}

TEST_CASE("ideal_speed_up and its bound") {
    const ExecutionMatrix reduction = reduction_16_at(8);
    CHECK(ideal_speed_up(reduction, sequentialize(reduction)) == Rational(8));
    CHECK(speed_up(reduction) <= Rational(8));

    const ExecutionMatrix m = full_2x2();
    CHECK(ideal_speed_up(m, sequentialize(m)) == Rational(7, 5));  // attained: full grid

    const ExecutionMatrix other = reduction_16_at(4);
    CHECK_THROWS_AS(ideal_speed_up(m, sequentialize(other)), PreconditionError);
    CHECK_THROWS_AS(ideal_speed_up(m, other), PreconditionError);
}

TEST_CASE("generalized law: worked values") {
    const ExecutionMatrix reduction = reduction_16_at(8);
    const AmdahlResult ware = amdahl_generalized(reduction, sequentialize(reduction));
    CHECK(ware.alpha[1] == Rational(1, 15));
    CHECK(ware.alpha[2] == Rational(1, 15));
    CHECK(ware.alpha[4] == Rational(1, 15));
    CHECK(ware.alpha[8] == Rational(1, 15));
    CHECK(ware.sp == Rational(15, 4));

    const ExecutionMatrix full = full_2x2();
    const AmdahlResult full_law = amdahl_generalized(full, sequentialize(full));
    CHECK(full_law.alpha[2] == Rational(2, 4));
    CHECK(full_law.alpha[1] == Rational(0));
    CHECK(full_law.sp == speed_up(full));

    const ExecutionMatrix serial = reduction_16_at(1);
    const AmdahlResult serial_law = amdahl_generalized(serial, serial);
    CHECK(serial_law.alpha[1] == Rational(1));
    CHECK(serial_law.sp == Rational(1));
}

TEST_CASE("classical law: spot value and edge fractions") {
    // 15 unit operators, one sequential row, the rest in width-7 rows:
    // r_E = 1 + 14/7 = 3, so the direct ratio is 15/3 = 5.
    const Rational sp = amdahl_classical(1, 15, 7, Rational(1), Rational(1));
    CHECK(sp == Rational(5));

    CHECK(amdahl_classical(0, 10, 4, Rational(3, 2), Rational(2)) ==
          Rational(4) * Rational(3, 2) / Rational(2));
    CHECK(amdahl_classical(10, 10, 4, Rational(3, 2), Rational(2)) ==
          Rational(3, 2) / Rational(2));
}

TEST_CASE("cost multiplies processors by time") {
    CHECK(cost(reduction_16_at(8)) == Rational(32));
    CHECK(cost(reduction_16_at(1)) == Rational(15));  // beta_sum
    CHECK(cost(full_2x2()) == Rational(10));
}

TEST_CASE("overhead against the serialized cost") {
    const ExecutionMatrix reduction = reduction_16_at(8);
    CHECK(overhead(reduction, sequentialize(reduction)) == Rational(17));

    const ExecutionMatrix m = full_2x2();
    CHECK(overhead(m, sequentialize(m)) == Rational(3));
    CHECK(overhead_ideal(m, sequentialize(m)) == Rational(3));  // attained: full grid

    const ExecutionMatrix serial = reduction_16_at(1);
    CHECK(overhead(serial, sequentialize(serial)) == Rational(0));
}

TEST_CASE("overhead equals sparsity under unit costs") {
    CHECK(overhead_sparsity(reduction_16_at(8)) == Rational(17));
    CHECK(overhead_sparsity(reduction_16_at(4)) == Rational(5));

    const ExecutionMatrix uniform_full =
        beta_matrix({{Rational(1), Rational(1)}, {Rational(1), Rational(1)}});
    CHECK(overhead_sparsity(uniform_full) == Rational(0));

    CHECK_THROWS_AS(overhead_sparsity(full_2x2()), NonUniformBeta);

    // The identity itself: sparsity equals the overhead.
    const ExecutionMatrix reduction = reduction_16_at(8);
    CHECK(overhead_sparsity(reduction) == overhead(reduction, sequentialize(reduction)));
}

TEST_CASE("efficiency is speed-up per processor") {
    const ExecutionMatrix reduction = reduction_16_at(8);
    CHECK(efficiency(reduction, sequentialize(reduction)) == Rational(15, 32));

    const ExecutionMatrix m = full_2x2();
    CHECK(efficiency(m, sequentialize(m)) == Rational(7, 10));
    CHECK(efficiency_ideal(m, sequentialize(m)) == Rational(7, 10));  // attained

    const ExecutionMatrix serial = reduction_16_at(1);
    CHECK(efficiency(serial, sequentialize(serial)) == Rational(1));
}

TEST_CASE("report assembles the full picture") {
    SUBCASE("reduction at P=8") {
        const MetricsReport rep = report(reduction_16_at(8));
        CHECK(rep.k == 15);
        CHECK(rep.t == Rational(4));
        CHECK(rep.sp == Rational(15, 4));
        CHECK(rep.ef == Rational(15, 32));
        CHECK(rep.q == Rational(32));
        CHECK(rep.oh == Rational(17));
        CHECK(rep.sparsity == 17);
        CHECK(rep.matrix_class == MatrixClass::Parallel);
        CHECK(rep.warnings.empty());
    }
    SUBCASE("single processor") {
        const MetricsReport rep = report(reduction_16_at(1));
        CHECK(rep.sp == Rational(1));
        CHECK(rep.ef == Rational(1));
        CHECK(rep.oh == Rational(0));
        CHECK(rep.q == rep.t);
    }
    SUBCASE("perfectly parallel 2x2") {
        const MetricsReport rep = report(full_2x2());
        CHECK(rep.t == Rational(5));
        CHECK(rep.sp == Rational(7, 5));
        CHECK(rep.ef == Rational(7, 10));
        CHECK(rep.q == Rational(10));
        CHECK(rep.oh == Rational(3));
        CHECK(rep.oh == rep.oh_ideal);
        CHECK(rep.sp == rep.sp_ideal);
        CHECK(rep.ef == rep.ef_ideal);
    }
    SUBCASE("degenerate all-empty row is warned about") {
        const ExecutionMatrix m = beta_matrix(
            {{Rational(1), Rational(1)}, {std::nullopt, std::nullopt}});
        const MetricsReport rep = report(m);
        CHECK_FALSE(rep.warnings.empty());
    }
}

TEST_CASE("property: the generalized law equals the direct speed-up exactly") {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<std::size_t> rows_dist(1, 8);
    std::uniform_int_distribution<std::size_t> cols_dist(1, 8);
    for (int round = 0; round < 1000; ++round) {
        const ExecutionMatrix m =
            testutil::random_matrix(rng, rows_dist(rng), cols_dist(rng));
        const AmdahlResult ware = amdahl_generalized(m, sequentialize(m));
        CAPTURE(round);
        REQUIRE(ware.sp == speed_up(m));
    }
}

TEST_CASE("property: the classical law matches on {1, P}-width matrices") {
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<std::size_t> rows_dist(1, 8);
    std::uniform_int_distribution<std::size_t> cols_dist(2, 8);
    for (int round = 0; round < 1000; ++round) {
        const ExecutionMatrix m =
            testutil::random_matrix(rng, rows_dist(rng), cols_dist(rng), true);
        const ExecutionMatrix m_1 = sequentialize(m);
        const RowProfile profile = row_profile(m);
        const Rational sp = amdahl_classical(profile.r_seq, m.non_empty_count(), m.cols(),
                                             r_calc(m_1), r_calc(m));
        CAPTURE(round);
        REQUIRE(sp == speed_up(m));
    }
}

TEST_CASE("property: bound chain on randomized matrices") {
    std::mt19937_64 rng(8886);
    std::uniform_int_distribution<std::size_t> rows_dist(1, 8);
    std::uniform_int_distribution<std::size_t> cols_dist(1, 8);
    for (int round = 0; round < 1000; ++round) {
        const ExecutionMatrix m =
            testutil::random_matrix(rng, rows_dist(rng), cols_dist(rng));
        const ExecutionMatrix m_1 = sequentialize(m);
        const auto k = static_cast<std::int64_t>(m.non_empty_count());
        CAPTURE(round);
        REQUIRE(speed_up(m) <= ideal_speed_up(m, m_1));
        REQUIRE(efficiency(m, m_1) <= efficiency_ideal(m, m_1));
        REQUIRE(overhead(m, m_1) >= Rational(k) * (r_calc(m) - r_calc(m_1)));
        REQUIRE(r_calc(m) >= Rational(1));
        REQUIRE(exec_time(m) >= Rational(static_cast<std::int64_t>(m.rows())));
    }
}

TEST_CASE("property: perfectly parallel schedules attain every ideal") {
    std::mt19937_64 rng(5150);
    std::uniform_int_distribution<std::size_t> rows_dist(1, 6);
    std::uniform_int_distribution<std::size_t> cols_dist(2, 8);
    for (int round = 0; round < 400; ++round) {
        const std::size_t rows = rows_dist(rng);
        const std::size_t cols = cols_dist(rng);
        std::vector<std::vector<std::optional<Rational>>> grid(
            rows, std::vector<std::optional<Rational>>(cols));
        for (auto& row : grid) {
            for (auto& cell : row) {
                cell = testutil::random_beta(rng);
            }
        }
        const ExecutionMatrix m = beta_matrix(grid);
        REQUIRE(classify(m) == MatrixClass::PerfectlyParallel);
        const ExecutionMatrix m_1 = sequentialize(m);
        CAPTURE(round);
        REQUIRE(speed_up(m) == ideal_speed_up(m, m_1));
        REQUIRE(overhead(m, m_1) == overhead_ideal(m, m_1));
        REQUIRE(efficiency(m, m_1) == efficiency_ideal(m, m_1));
    }
}

TEST_CASE("property: uniform costs collapse to the counting forms") {
    std::mt19937_64 rng(2222);
    std::uniform_int_distribution<std::size_t> size_dist(1, 40);
    std::uniform_int_distribution<std::size_t> p_dist(1, 10);
    for (int round = 0; round < 300; ++round) {
        const DependencyDag dag = testutil::random_dag(rng, size_dist(rng));
        const Algorithm a = testutil::unit_algorithm(dag);
        const std::size_t p = p_dist(rng);
        const ExecutionMatrix m = schedule_level_chunked(a, levelize(dag), p);
        const MetricsReport rep = report(m);
        const auto k = static_cast<std::int64_t>(rep.k);
        const auto r_e = static_cast<std::int64_t>(rep.r_e);
        CAPTURE(round);
        REQUIRE(rep.sp == Rational(k, r_e));
        REQUIRE(rep.sp_ideal == Rational(static_cast<std::int64_t>(p)));
        REQUIRE(rep.ef_ideal == Rational(1));
        REQUIRE(rep.oh_ideal == Rational(0));
        REQUIRE(rep.oh == Rational(static_cast<std::int64_t>(rep.sparsity)));
    }
}

TEST_CASE("perfectly decomposed problems divide the serial time exactly") {
    // T(P) = (T(1)/P) * (R^P / R^1) on the reshaped full matrix; with unit
    // costs this is T(1)/P on the nose.
    std::mt19937_64 rng(6510);
    for (const std::size_t cols : {4u, 8u}) {
        std::vector<ElementId> elements;
        std::vector<DependencyEdge> edges;
        for (std::size_t r = 0; r < 3; ++r) {
            for (std::size_t c = 0; c < cols; ++c) {
                elements.push_back(testutil::indexed_id("g", r * cols + c));
                if (r > 0) {
                    edges.push_back({testutil::indexed_id("g", r * cols + c),
                                     testutil::indexed_id("g", (r - 1) * cols + c)});
                }
            }
        }
        const DependencyDag dag = build_dag(elements, edges);
        const DependencyMatrix m_d = levelize(dag);
        REQUIRE(is_perfectly_decomposed(m_d));

        for (std::size_t n = 1; n < cols; ++n) {
            if (cols % n != 0) {
                continue;
            }
            const std::size_t p = cols / n;
            const Algorithm weighted = testutil::random_beta_algorithm(rng, dag);
            const ExecutionMatrix m = build_perfectly_parallel(weighted, m_d, n);
            const ExecutionMatrix m_1 = sequentialize(m);
            CHECK(exec_time(m) == exec_time(m_1) / Rational(static_cast<std::int64_t>(p)) *
                                      (r_calc(m) / r_calc(m_1)));

            const Algorithm uniform = testutil::unit_algorithm(dag);
            const ExecutionMatrix mu = build_perfectly_parallel(uniform, m_d, n);
            CHECK(exec_time(mu) ==
                  exec_time(sequentialize(mu)) / Rational(static_cast<std::int64_t>(p)));
        }
    }
}

TEST_CASE("execution time is bounded below by the dependency degree") {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<std::size_t> size_dist(1, 40);
    std::uniform_int_distribution<std::size_t> p_dist(1, 10);
    for (int round = 0; round < 300; ++round) {
        const DependencyDag dag = testutil::random_dag(rng, size_dist(rng));
        const Algorithm a = testutil::random_beta_algorithm(rng, dag);
        const DependencyMatrix m_d = levelize(dag);
        const std::size_t p = p_dist(rng);
        for (const ExecutionMatrix& m :
             {schedule_level_chunked(a, m_d, p), schedule_greedy_list(a, dag, p)}) {
            const auto r_d = static_cast<std::int64_t>(m_d.rows());
            CAPTURE(round);
            REQUIRE(exec_time(m) >= Rational(r_d) * r_calc(m));
        }
    }
}

TEST_CASE("oracle equivalence on small matrices") {
    std::mt19937_64 rng(40);
    std::uniform_int_distribution<std::size_t> dim_dist(1, 4);
    for (int round = 0; round < 500; ++round) {
        const ExecutionMatrix m = testutil::random_matrix(rng, dim_dist(rng), dim_dist(rng));
        CAPTURE(round);
        REQUIRE(exec_time(m) == testutil::oracle_total_time(m));
        REQUIRE(speed_up(m) == testutil::oracle_speed_up(m));
    }
}
