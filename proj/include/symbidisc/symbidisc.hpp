#pragma once

// Umbrella header for the symmetrized-bidisc geometry library.

#include "symbidisc/disc.hpp"
#include "symbidisc/distinguished.hpp"
#include "symbidisc/domain.hpp"
#include "symbidisc/extremal.hpp"
#include "symbidisc/geodesic.hpp"
#include "symbidisc/ortho.hpp"
#include "symbidisc/tolerances.hpp"
