#ifndef PARCALC_PROBLEM_HPP_
#define PARCALC_PROBLEM_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "parcalc/rational.hpp"

namespace parcalc {

/// A computational problem, identified by the family of its functional
/// relation and its input size.
struct ComputationalProblem {
    std::string family;
    std::int64_t input_size = 1;

    friend auto operator<=>(const ComputationalProblem&,
                            const ComputationalProblem&) = default;
};

/// Two problems are similar when they compute the same functional relation,
/// regardless of input size.
bool is_similar(const ComputationalProblem& p, const ComputationalProblem& q);

/// Polynomial with exact rational coefficients and non-zero leading term,
/// used to model how algorithm complexity grows with input size.
class PolynomialComplexity {
public:
    /// Coefficients in ascending order, a_0 first. The highest coefficient
    /// must be non-zero.
    explicit PolynomialComplexity(std::vector<Rational> ascending_coefficients);

    std::size_t degree() const { return coefficients_.size() - 1; }
    const std::vector<Rational>& coefficients() const { return coefficients_; }
    const Rational& leading() const { return coefficients_.back(); }

    Rational evaluate(const Rational& x) const;

private:
    std::vector<Rational> coefficients_;
};

}  // namespace parcalc

#endif  // PARCALC_PROBLEM_HPP_
