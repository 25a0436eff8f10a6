#include "parcalc/problem.hpp"

#include "parcalc/errors.hpp"

namespace parcalc {

bool is_similar(const ComputationalProblem& p, const ComputationalProblem& q) {
    return p.family == q.family;
}

PolynomialComplexity::PolynomialComplexity(std::vector<Rational> ascending_coefficients)
    : coefficients_(std::move(ascending_coefficients)) {
    if (coefficients_.empty()) {
        throw ValidationError("polynomial needs at least one coefficient");
    }
    if (coefficients_.size() > 1 && coefficients_.back() == Rational(0)) {
        throw ValidationError("leading polynomial coefficient must be non-zero");
    }
}

Rational PolynomialComplexity::evaluate(const Rational& x) const {
    Rational acc(0);
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

}  // namespace parcalc
