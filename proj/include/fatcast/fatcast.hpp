#pragma once

#include "fatcast/bounds.hpp"
#include "fatcast/casting.hpp"
#include "fatcast/clip.hpp"
#include "fatcast/errors.hpp"
#include "fatcast/fatness.hpp"
#include "fatcast/genlab.hpp"
#include "fatcast/geometry.hpp"
#include "fatcast/hull.hpp"
#include "fatcast/off_io.hpp"
#include "fatcast/polyhedron.hpp"
#include "fatcast/rng.hpp"
#include "fatcast/two_cast.hpp"

namespace fatcast {
inline constexpr const char* kVersion = "0.1.0";
}
