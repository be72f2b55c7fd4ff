#pragma once

#include "loewner/diffusion.hpp"
#include "loewner/error.hpp"
#include "loewner/kappa.hpp"
#include "loewner/loewner_flow.hpp"
#include "loewner/parallel.hpp"
#include "loewner/quadrature.hpp"
#include "loewner/rng.hpp"
#include "loewner/special_fn.hpp"
#include "loewner/stationary.hpp"
#include "loewner/stats.hpp"
#include "loewner/time_change.hpp"
