#pragma once

// Piecewise scalar functions of time with exact antiderivatives.  Each piece
// is either a polynomial in the local variable x = t - t_start or an
// exponential amp * exp(rate * x).  Used for the rotation coefficient C(t)
// and the degenerate-regime coefficient alpha(t).

#include <optional>
#include <vector>

#include "loewner/errors.hpp"

namespace loewner {

class TimeFunction {
public:
    struct Piece {
        double t_start = 0.0;
        bool exponential = false;
        // polynomial: value = sum coeffs[i] * x^i
        // exponential: value = coeffs[0] * exp(coeffs[1] * x)
        std::vector<double> coeffs;
    };

    TimeFunction() : TimeFunction(constant(0.0)) {}

    explicit TimeFunction(std::vector<Piece> pieces);

    static TimeFunction constant(double c);
    static TimeFunction polynomial(std::vector<double> coeffs); // single piece from t = 0
    static TimeFunction exponential(double amp, double rate);   // amp * e^{rate t} from t = 0

    double operator()(double t) const;

    // Exact integral over [a, b] (a <= b).
    double integral(double a, double b) const;

    // Exact integral over [from, +infinity); nullopt when it diverges.
    std::optional<double> tail_integral(double from) const;

    const std::vector<Piece>& pieces() const { return pieces_; }
    std::vector<double> breakpoints() const; // piece starts after the first

    bool is_zero() const;

private:
    std::size_t piece_index(double t) const;
    double piece_value(std::size_t i, double t) const;
    double piece_integral(std::size_t i, double a, double b) const;

    std::vector<Piece> pieces_;
};

} // namespace loewner
