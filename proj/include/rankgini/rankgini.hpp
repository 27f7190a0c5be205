#pragma once

#include "rankgini/error.hpp"
#include "rankgini/summation.hpp"
#include "rankgini/core.hpp"
#include "rankgini/ordering.hpp"
#include "rankgini/curves.hpp"
#include "rankgini/gini.hpp"
#include "rankgini/distribution.hpp"
#include "rankgini/oracle.hpp"
#include "rankgini/datagen.hpp"

namespace rankgini {
inline constexpr const char* kVersion = "0.1.0";
}
