#pragma once

#include <functional>
#include <optional>
#include <string>

namespace gsqg {

/// Radial Fourier symbol m(|xi|). The zero mode is handled separately: some
/// symbols (negative fractional powers) have no finite value at the origin,
/// in which case zero_mode_value() is empty and applying the symbol to a
/// field with nonzero mean is an error.
class MultiplierSymbol {
public:
    static MultiplierSymbol identity();
    /// |xi|^sigma. Zero-mode value: 0 for sigma > 0, 1 for sigma == 0, unset otherwise.
    static MultiplierSymbol fractional_power(double sigma);
    /// ln(e + r^2)^{-mu}, mu > 1/2. Value 1 at r = 0.
    static MultiplierSymbol log_regularizer(double mu);
    /// r^{beta-2} ln(e + r^2)^{-mu} for r > 0 and 0 at r = 0; beta in (1,2), mu > 1/2.
    static MultiplierSymbol constitutive(double beta, double mu);
    static MultiplierSymbol custom(std::function<double(double)> fn,
                                   std::optional<double> zero_mode_value,
                                   std::string name = "custom");

    /// Symbol value at radius r > 0.
    double operator()(double r) const { return fn_(r); }
    std::optional<double> zero_mode_value() const noexcept { return zero_value_; }
    const std::string& name() const noexcept { return name_; }

private:
    MultiplierSymbol(std::function<double(double)> fn, std::optional<double> zero,
                     std::string name)
        : fn_(std::move(fn)), zero_value_(zero), name_(std::move(name)) {}

    std::function<double(double)> fn_;
    std::optional<double> zero_value_;
    std::string name_;
};

}  // namespace gsqg
