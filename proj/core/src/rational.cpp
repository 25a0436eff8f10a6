#include "parcalc/rational.hpp"

#include <cstdio>
#include <stdexcept>

#include "parcalc/errors.hpp"

namespace parcalc {

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) {
        return std::to_string(r.numerator());
    }
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string to_decimal(const Rational& r, int significant_digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", significant_digits, to_double(r));
    return buf;
}

double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

Rational rational_from_string(const std::string& text) {
    try {
        const auto slash = text.find('/');
        if (slash == std::string::npos) {
            std::size_t used = 0;
            const std::int64_t num = std::stoll(text, &used);
            if (used != text.size()) {
                throw ValidationError("invalid rational literal: '" + text + "'");
            }
            return Rational(num);
        }
        std::size_t used_num = 0;
        std::size_t used_den = 0;
        const std::string num_part = text.substr(0, slash);
        const std::string den_part = text.substr(slash + 1);
        const std::int64_t num = std::stoll(num_part, &used_num);
        const std::int64_t den = std::stoll(den_part, &used_den);
        if (used_num != num_part.size() || used_den != den_part.size() || den == 0) {
            throw ValidationError("invalid rational literal: '" + text + "'");
        }
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw ValidationError("invalid rational literal: '" + text + "'");
    } catch (const std::out_of_range&) {
        throw ValidationError("rational literal out of range: '" + text + "'");
    }
}

Json rational_to_json(const Rational& r) {
    Json j;
    j["num"] = r.numerator();
    j["den"] = r.denominator();
    j["dec"] = to_decimal(r);
    return j;
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) {
        return Rational(j.get<std::int64_t>());
    }
    if (j.is_string()) {
        return rational_from_string(j.get<std::string>());
    }
    if (j.is_object() && j.contains("num") && j.contains("den")) {
        if (!j["num"].is_number_integer() || !j["den"].is_number_integer()) {
            throw ValidationError("rational object requires integer num/den");
        }
        const auto den = j["den"].get<std::int64_t>();
        if (den == 0) {
            throw ValidationError("rational denominator must be non-zero");
        }
        return Rational(j["num"].get<std::int64_t>(), den);
    }
    throw ValidationError(
        "expected a rational (integer, \"p/q\" string, or {num, den} object), got: " + j.dump());
}

}  // namespace parcalc
