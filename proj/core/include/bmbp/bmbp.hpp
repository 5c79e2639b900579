#pragma once

#include "bmbp/chebyshev.hpp"
#include "bmbp/common.hpp"
#include "bmbp/interp.hpp"
#include "bmbp/io.hpp"
#include "bmbp/lagrange.hpp"
#include "bmbp/newton.hpp"
#include "bmbp/pencils.hpp"
#include "bmbp/poly.hpp"
#include "bmbp/polycore.hpp"
#include "bmbp/spectral.hpp"
