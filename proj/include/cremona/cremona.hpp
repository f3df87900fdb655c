// Umbrella header: exact arithmetic, smooth plane cubics, the cubic
// involutions they carry, base-point analysis, the intersection lattice,
// and the free-product certificate machinery.
#ifndef CREMONA_CREMONA_HPP
#define CREMONA_CREMONA_HPP

#include "errors.hpp"
#include "scalars.hpp"
#include "poly.hpp"
#include "form.hpp"
#include "linalg.hpp"
#include "roots.hpp"
#include "elimination.hpp"
#include "config.hpp"
#include "curve.hpp"
#include "maps.hpp"
#include "picard.hpp"

#endif
