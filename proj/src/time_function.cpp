#include "loewner/time_function.hpp"

#include <algorithm>
#include <cmath>

namespace loewner {

TimeFunction::TimeFunction(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
    if (pieces_.empty())
        throw DomainError("TimeFunction: needs at least one piece");
    if (pieces_.front().t_start != 0.0)
        throw DomainError("TimeFunction: first piece must start at t = 0");
    for (std::size_t i = 0; i + 1 < pieces_.size(); ++i)
        if (!(pieces_[i].t_start < pieces_[i + 1].t_start))
            throw DomainError("TimeFunction: piece starts must be strictly increasing");
    for (const auto& p : pieces_) {
        if (p.exponential && p.coeffs.size() != 2)
            throw DomainError("TimeFunction: exponential piece needs {amp, rate}");
        if (!p.exponential && p.coeffs.empty())
            throw DomainError("TimeFunction: polynomial piece needs coefficients");
    }
}

TimeFunction TimeFunction::constant(double c) {
    return TimeFunction({Piece{0.0, false, {c}}});
}

TimeFunction TimeFunction::polynomial(std::vector<double> coeffs) {
    return TimeFunction({Piece{0.0, false, std::move(coeffs)}});
}

TimeFunction TimeFunction::exponential(double amp, double rate) {
    return TimeFunction({Piece{0.0, true, {amp, rate}}});
}

std::size_t TimeFunction::piece_index(double t) const {
    std::size_t i = pieces_.size() - 1;
    while (i > 0 && t < pieces_[i].t_start) --i;
    return i;
}

double TimeFunction::piece_value(std::size_t i, double t) const {
    const Piece& p = pieces_[i];
    const double x = t - p.t_start;
    if (p.exponential)
        return p.coeffs[0] * std::exp(p.coeffs[1] * x);
    double v = 0.0;
    for (std::size_t k = p.coeffs.size(); k-- > 0;)
        v = v * x + p.coeffs[k];
    return v;
}

double TimeFunction::operator()(double t) const {
    return piece_value(piece_index(t), t);
}

double TimeFunction::piece_integral(std::size_t i, double a, double b) const {
    const Piece& p = pieces_[i];
    const double xa = a - p.t_start, xb = b - p.t_start;
    if (p.exponential) {
        const double amp = p.coeffs[0], rate = p.coeffs[1];
        if (rate == 0.0) return amp * (xb - xa);
        return amp / rate * (std::exp(rate * xb) - std::exp(rate * xa));
    }
    auto prim = [&](double x) {
        double v = 0.0;
        for (std::size_t k = p.coeffs.size(); k-- > 0;)
            v = v * x + p.coeffs[k] / static_cast<double>(k + 1);
        return v * x;
    };
    return prim(xb) - prim(xa);
}

double TimeFunction::integral(double a, double b) const {
    if (!(a <= b))
        throw DomainError("TimeFunction::integral: need a <= b");
    double total = 0.0;
    std::size_t i = piece_index(a);
    double lo = a;
    while (true) {
        const double hi = (i + 1 < pieces_.size()) ? std::min(b, pieces_[i + 1].t_start) : b;
        total += piece_integral(i, lo, hi);
        if (hi >= b) break;
        lo = hi;
        ++i;
    }
    return total;
}

std::optional<double> TimeFunction::tail_integral(double from) const {
    const std::size_t last = pieces_.size() - 1;
    const double start = std::max(from, pieces_[last].t_start);
    double head = 0.0;
    if (from < start) head = integral(from, start);

    const Piece& p = pieces_[last];
    if (p.exponential) {
        const double amp = p.coeffs[0], rate = p.coeffs[1];
        if (amp == 0.0) return head;
        if (rate >= 0.0) return std::nullopt;
        return head + amp / (-rate) * std::exp(rate * (start - p.t_start));
    }
    for (double c : p.coeffs)
        if (c != 0.0) return std::nullopt;
    return head;
}

std::vector<double> TimeFunction::breakpoints() const {
    std::vector<double> b;
    for (std::size_t i = 1; i < pieces_.size(); ++i)
        b.push_back(pieces_[i].t_start);
    return b;
}

bool TimeFunction::is_zero() const {
    for (const auto& p : pieces_) {
        if (p.exponential) {
            if (p.coeffs[0] != 0.0) return false;
        } else {
            for (double c : p.coeffs)
                if (c != 0.0) return false;
        }
    }
    return true;
}

} // namespace loewner
