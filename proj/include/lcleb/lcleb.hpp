// Umbrella header.
#pragma once

#include "lcleb/asympt.hpp"
#include "lcleb/chebyshev.hpp"
#include "lcleb/csv.hpp"
#include "lcleb/errors.hpp"
#include "lcleb/interp.hpp"
#include "lcleb/kernels.hpp"
#include "lcleb/lcnodes.hpp"
#include "lcleb/norms.hpp"
#include "lcleb/svg.hpp"
#include "lcleb/util.hpp"
