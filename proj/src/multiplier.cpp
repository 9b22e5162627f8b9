#include "gsqg/multiplier.hpp"

#include <cmath>
#include <stdexcept>

namespace gsqg {

MultiplierSymbol MultiplierSymbol::identity() {
    return MultiplierSymbol([](double) { return 1.0; }, 1.0, "identity");
}

MultiplierSymbol MultiplierSymbol::fractional_power(double sigma) {
    std::optional<double> zero;
    if (sigma > 0.0)
        zero = 0.0;
    else if (sigma == 0.0)
        zero = 1.0;
    return MultiplierSymbol([sigma](double r) { return std::pow(r, sigma); }, zero,
                            "fractional_power(" + std::to_string(sigma) + ")");
}

MultiplierSymbol MultiplierSymbol::log_regularizer(double mu) {
    if (!(mu > 0.5))
        throw std::invalid_argument("log_regularizer requires mu > 1/2");
    return MultiplierSymbol(
        [mu](double r) { return std::pow(std::log(std::numbers::e + r * r), -mu); }, 1.0,
        "log_regularizer(" + std::to_string(mu) + ")");
}

MultiplierSymbol MultiplierSymbol::constitutive(double beta, double mu) {
    if (!(beta > 1.0 && beta < 2.0))
        throw std::invalid_argument("constitutive requires beta in (1, 2)");
    if (!(mu > 0.5))
        throw std::invalid_argument("constitutive requires mu > 1/2");
    return MultiplierSymbol(
        [beta, mu](double r) {
            return std::pow(r, beta - 2.0) * std::pow(std::log(std::numbers::e + r * r), -mu);
        },
        0.0, "constitutive(" + std::to_string(beta) + "," + std::to_string(mu) + ")");
}

MultiplierSymbol MultiplierSymbol::custom(std::function<double(double)> fn,
                                          std::optional<double> zero_mode_value,
                                          std::string name) {
    return MultiplierSymbol(std::move(fn), zero_mode_value, std::move(name));
}

}  // namespace gsqg
