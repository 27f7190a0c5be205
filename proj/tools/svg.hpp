#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rankgini/curves.hpp"

namespace rankgini::cli {

struct ModelCurves {
    std::string name;
    Curve best;
    Curve worst;
    std::optional<Curve> mid;  ///< only with equal weights
    CurveAreas areas;
};

/// Static 800x800 picture: dotted diagonal, Lorenz curve in black, best and
/// worst CAP per model (solid and dashed), the mid CAP when available, and a
/// legend carrying the areas.
std::string render_svg(const Curve& lorenz, double lorenz_area, const std::vector<ModelCurves>& models);

} // namespace rankgini::cli
