#pragma once

#include "hpdiv/matrix.hpp"
#include "hpdiv/spectral.hpp"
#include "hpdiv/random.hpp"
#include "hpdiv/entropy.hpp"
#include "hpdiv/divergences.hpp"
#include "hpdiv/quadrature.hpp"
#include "hpdiv/representations.hpp"
#include "hpdiv/cnd.hpp"
#include "hpdiv/suites.hpp"
#include "hpdiv/io.hpp"
