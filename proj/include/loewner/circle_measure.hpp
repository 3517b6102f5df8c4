#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "loewner/errors.hpp"

namespace loewner {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

// Finite nonnegative measure on the unit circle: a list of atoms plus a
// rotation-invariant (uniform) component.  Canonical form: angles reduced to
// [0, 2*pi), strictly increasing, zero-weight atoms dropped, coincident
// angles merged.
class CircleMeasure {
public:
    struct Atom {
        double angle;  // in [0, 2*pi)
        double weight; // > 0 in canonical form
    };

    CircleMeasure() = default;

    CircleMeasure(std::vector<Atom> atoms, double uniform_mass)
        : uniform_(uniform_mass) {
        if (!(uniform_mass >= 0.0))
            throw DomainError("CircleMeasure: uniform mass must be >= 0");
        for (auto& a : atoms) {
            if (!(a.weight >= 0.0))
                throw DomainError("CircleMeasure: atom weight must be >= 0");
            if (!std::isfinite(a.angle))
                throw DomainError("CircleMeasure: atom angle must be finite");
            a.angle = std::fmod(a.angle, two_pi);
            if (a.angle < 0.0) a.angle += two_pi;
        }
        std::sort(atoms.begin(), atoms.end(),
                  [](const Atom& x, const Atom& y) { return x.angle < y.angle; });
        for (const auto& a : atoms) {
            if (a.weight == 0.0) continue;
            if (!atoms_.empty() && atoms_.back().angle == a.angle)
                atoms_.back().weight += a.weight;
            else
                atoms_.push_back(a);
        }
    }

    static CircleMeasure uniform(double mass) { return CircleMeasure({}, mass); }
    static CircleMeasure zero() { return CircleMeasure({}, 0.0); }

    const std::vector<Atom>& atoms() const { return atoms_; }
    double uniform_mass() const { return uniform_; }

    double total_mass() const {
        double m = uniform_;
        for (const auto& a : atoms_) m += a.weight;
        return m;
    }

    bool atom_free() const { return atoms_.empty(); }

    // Pushforward under conjugation xi -> 1/xi (angle negation).
    CircleMeasure mirrored() const {
        std::vector<Atom> m;
        m.reserve(atoms_.size());
        for (const auto& a : atoms_)
            m.push_back({a.angle == 0.0 ? 0.0 : two_pi - a.angle, a.weight});
        return CircleMeasure(std::move(m), uniform_);
    }

    CircleMeasure scaled(double factor) const {
        if (!(factor >= 0.0))
            throw DomainError("CircleMeasure: scale factor must be >= 0");
        std::vector<Atom> m = atoms_;
        for (auto& a : m) a.weight *= factor;
        return CircleMeasure(std::move(m), uniform_ * factor);
    }

    friend bool operator==(const CircleMeasure& x, const CircleMeasure& y) {
        if (x.uniform_ != y.uniform_ || x.atoms_.size() != y.atoms_.size())
            return false;
        for (std::size_t i = 0; i < x.atoms_.size(); ++i)
            if (x.atoms_[i].angle != y.atoms_[i].angle ||
                x.atoms_[i].weight != y.atoms_[i].weight)
                return false;
        return true;
    }

private:
    std::vector<Atom> atoms_;
    double uniform_ = 0.0;
};

} // namespace loewner
