#pragma once

#include "mahlercf/errors.hpp"
#include "mahlercf/rational.hpp"
#include "mahlercf/polynomial.hpp"
#include "mahlercf/rational_function.hpp"
#include "mahlercf/literal.hpp"
#include "mahlercf/laurent_series.hpp"
#include "mahlercf/contfrac.hpp"
#include "mahlercf/mahler.hpp"
#include "mahlercf/recurrence.hpp"
#include "mahlercf/hankel.hpp"
#include "mahlercf/exponent.hpp"
#include "mahlercf/scan.hpp"
