#pragma once

#include "census.hpp"
#include "classify.hpp"
#include "error.hpp"
#include "invariant.hpp"
#include "io.hpp"
#include "property_star.hpp"
#include "rational.hpp"
#include "taut.hpp"
#include "verify.hpp"
#include "witness.hpp"
