#ifndef DCOVER_DCOVER_HPP
#define DCOVER_DCOVER_HPP

// Umbrella header: minimum-area disk covers with multiplicities and center
// separation. Everything lives in namespace dcover and is header-only.

#include "bench.hpp"
#include "bnb.hpp"
#include "candidates.hpp"
#include "cover_model.hpp"
#include "errors.hpp"
#include "geometry.hpp"
#include "heuristic.hpp"
#include "instance.hpp"
#include "lp_io.hpp"
#include "oracle.hpp"
#include "rng.hpp"
#include "solution.hpp"
#include "solver.hpp"
#include "spatial_index.hpp"
#include "svg.hpp"

#endif
