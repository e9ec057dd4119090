#pragma once

#include "saftwave/approx.hpp"
#include "saftwave/error.hpp"
#include "saftwave/grid.hpp"
#include "saftwave/mra.hpp"
#include "saftwave/params.hpp"
#include "saftwave/quadrature.hpp"
#include "saftwave/sampling.hpp"
#include "saftwave/transform.hpp"
#include "saftwave/wavelets.hpp"
