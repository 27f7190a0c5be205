#pragma once

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "rankgini/error.hpp"

namespace rankgini {

struct Atom {
    double value = 0.0;
    double probability = 0.0;
};

/// Finite discrete law with strictly increasing support points.
class DiscreteDistribution {
public:
    explicit DiscreteDistribution(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
        if (atoms_.empty()) throw Error(ErrorKind::BadParams, "distribution needs at least one atom");
        long double total = 0.0L;
        long double mean = 0.0L;
        for (std::size_t k = 0; k < atoms_.size(); ++k) {
            const Atom& a = atoms_[k];
            if (!std::isfinite(a.value) || !std::isfinite(a.probability) || !(a.probability > 0.0)) {
                throw Error(ErrorKind::BadParams, "atom " + std::to_string(k) + ": bad value or probability");
            }
            if (k > 0 && !(a.value > atoms_[k - 1].value)) {
                throw Error(ErrorKind::BadParams, "atom values must be strictly increasing");
            }
            total += a.probability;
            mean += static_cast<long double>(a.probability) * a.value;
        }
        if (std::abs(static_cast<double>(total) - 1.0) > 1e-12) {
            throw Error(ErrorKind::BadParams, "atom probabilities must sum to 1");
        }
        if (!(mean > 0.0L)) throw Error(ErrorKind::BadParams, "distribution mean must be positive");
        mean_ = static_cast<double>(mean);
    }

    std::span<const Atom> atoms() const noexcept { return atoms_; }
    double mean() const noexcept { return mean_; }

private:
    std::vector<Atom> atoms_;
    double mean_ = 0.0;
};

/// Three-point claims law with mean 1: 1/2 w.p. 3/8, 1 w.p. 1/2, 5/2 w.p. 1/8.
inline DiscreteDistribution three_point_distribution() {
    return DiscreteDistribution({{0.5, 3.0 / 8.0}, {1.0, 0.5}, {2.5, 1.0 / 8.0}});
}

} // namespace rankgini
