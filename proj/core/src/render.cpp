#include "parcalc/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace parcalc {

namespace {

constexpr const char* kReset = "\033[0m";
constexpr const char* kBold = "\033[1m";
constexpr const char* kDim = "\033[2m";

std::string seconds_string(const Rational& value, double tcalc) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", to_double(value) * tcalc);
    return buf;
}

}  // namespace

std::string render_grid(const ExecutionMatrix& m) {
    std::size_t width = 1;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const auto& cell = m.cell(r, c);
            if (cell.has_value()) {
                width = std::max(width, cell->subproblem.value.size());
            }
        }
    }
    std::ostringstream out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out << "row " << r << " |";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const auto& cell = m.cell(r, c);
            const std::string text = cell.has_value() ? cell->subproblem.value : ".";
            out << ' ' << text << std::string(width - text.size(), ' ');
        }
        out << '\n';
    }
    return out.str();
}

std::string render_dependency_grid(const DependencyMatrix& m) {
    std::size_t width = 1;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const auto& cell = m.cell(r, c);
            if (cell.has_value()) {
                width = std::max(width, cell->value.size());
            }
        }
    }
    std::ostringstream out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out << "row " << r << " |";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const auto& cell = m.cell(r, c);
            const std::string text = cell.has_value() ? cell->value : ".";
            out << ' ' << text << std::string(width - text.size(), ' ');
        }
        out << '\n';
    }
    return out.str();
}

std::string render_report_table(const MetricsReport& rep, const std::string& title,
                                const RenderOptions& options) {
    std::ostringstream out;
    const char* bold = options.color ? kBold : "";
    const char* dim = options.color ? kDim : "";
    const char* reset = options.color ? kReset : "";

    out << bold << title << reset << '\n';
    out << "k=" << rep.k << "  P=" << rep.processors << "  r_E=" << rep.r_e
        << "  class=" << to_string(rep.matrix_class) << '\n';

    auto line = [&](const char* name, const Rational& value, bool time_valued) {
        out << "  " << name;
        for (std::size_t i = std::string(name).size(); i < 12; ++i) {
            out << ' ';
        }
        std::string exact = to_string(value);
        out << exact;
        for (std::size_t i = exact.size(); i < 12; ++i) {
            out << ' ';
        }
        out << dim << to_decimal(value) << reset;
        if (time_valued && options.tcalc_seconds.has_value()) {
            out << "  (" << seconds_string(value, *options.tcalc_seconds) << " s)";
        }
        out << '\n';
    };

    out << bold << "performance metrics" << reset << '\n';
    line("T", rep.t, true);
    line("T_seq", rep.t_seq, true);
    line("T_par", rep.t_par, true);
    line("Sp", rep.sp, false);
    line("Sp_ideal", rep.sp_ideal, false);
    line("Q", rep.q, true);
    line("Oh", rep.oh, true);
    line("Oh_ideal", rep.oh_ideal, true);
    line("Ef", rep.ef, false);
    line("Ef_ideal", rep.ef_ideal, false);

    out << bold << "parameters" << reset << '\n';
    line("beta_ME", rep.beta_me, false);
    line("beta_sum", rep.beta_sum, false);
    line("R_calc(P)", rep.r_calc_p, false);
    line("R_calc(1)", rep.r_calc_1, false);
    out << "  r_seq_rows  " << rep.r_seq_rows << '\n';
    out << "  sparsity    " << rep.sparsity << '\n';
    out << "  alpha      ";
    for (std::size_t i = 1; i < rep.alpha.size(); ++i) {
        if (rep.alpha[i] != Rational(0)) {
            out << " [" << i << "]=" << to_string(rep.alpha[i]);
        }
    }
    out << '\n';
    if (options.tcalc_seconds.has_value()) {
        out << "  tcalc       " << *options.tcalc_seconds << " s per elementary operation\n";
    }
    for (const auto& warning : rep.warnings) {
        out << "  warning: " << warning << '\n';
    }
    return out.str();
}

Json matrix_to_json(const ExecutionMatrix& m) {
    Json j;
    j["r_e"] = m.rows();
    j["c_e"] = m.cols();
    j["k"] = m.non_empty_count();
    j["class"] = to_string(classify(m));
    Json grid = Json::array();
    Json sub_grid = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        Json sub_row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const auto& cell = m.cell(r, c);
            if (cell.has_value()) {
                row.push_back(cell->op.op_id());
                sub_row.push_back(cell->subproblem.value);
            } else {
                row.push_back(nullptr);
                sub_row.push_back(nullptr);
            }
        }
        grid.push_back(std::move(row));
        sub_grid.push_back(std::move(sub_row));
    }
    j["grid"] = std::move(grid);
    j["subproblem_grid"] = std::move(sub_grid);
    return j;
}

Json report_to_json(const MetricsReport& rep, std::optional<double> tcalc_seconds) {
    Json j;
    j["k"] = rep.k;
    j["P"] = rep.processors;
    j["r_e"] = rep.r_e;
    j["class"] = to_string(rep.matrix_class);
    j["T"] = rational_to_json(rep.t);
    j["T_seq"] = rational_to_json(rep.t_seq);
    j["T_par"] = rational_to_json(rep.t_par);
    j["Sp"] = rational_to_json(rep.sp);
    j["Sp_ideal"] = rational_to_json(rep.sp_ideal);
    j["Q"] = rational_to_json(rep.q);
    j["Oh"] = rational_to_json(rep.oh);
    j["Oh_ideal"] = rational_to_json(rep.oh_ideal);
    j["Ef"] = rational_to_json(rep.ef);
    j["Ef_ideal"] = rational_to_json(rep.ef_ideal);
    j["beta_ME"] = rational_to_json(rep.beta_me);
    j["beta_sum"] = rational_to_json(rep.beta_sum);
    j["R_calc_P"] = rational_to_json(rep.r_calc_p);
    j["R_calc_1"] = rational_to_json(rep.r_calc_1);
    Json beta_row = Json::array();
    for (const auto& beta : rep.beta_row) {
        beta_row.push_back(rational_to_json(beta));
    }
    j["beta_row"] = std::move(beta_row);
    Json alpha = Json::object();
    for (std::size_t i = 1; i < rep.alpha.size(); ++i) {
        if (rep.alpha[i] != Rational(0)) {
            alpha[std::to_string(i)] = rational_to_json(rep.alpha[i]);
        }
    }
    j["alpha"] = std::move(alpha);
    j["r_seq_rows"] = rep.r_seq_rows;
    j["sparsity"] = rep.sparsity;
    if (tcalc_seconds.has_value()) {
        j["tcalc_seconds"] = *tcalc_seconds;
        Json seconds;
        seconds["T"] = seconds_string(rep.t, *tcalc_seconds);
        seconds["T_seq"] = seconds_string(rep.t_seq, *tcalc_seconds);
        seconds["T_par"] = seconds_string(rep.t_par, *tcalc_seconds);
        seconds["Q"] = seconds_string(rep.q, *tcalc_seconds);
        seconds["Oh"] = seconds_string(rep.oh, *tcalc_seconds);
        j["seconds"] = std::move(seconds);
    }
    if (!rep.warnings.empty()) {
        j["warnings"] = rep.warnings;
    }
    return j;
}

}  // namespace parcalc
