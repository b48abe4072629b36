#pragma once

// Umbrella header. Individual headers are fine too; this one just pulls in
// the whole public surface for quick consumers.

#include "bhzeta/cyclotomic.hpp"
#include "bhzeta/duality.hpp"
#include "bhzeta/errors.hpp"
#include "bhzeta/invertible.hpp"
#include "bhzeta/monodromy.hpp"
#include "bhzeta/numeric.hpp"
#include "bhzeta/serialize.hpp"
#include "bhzeta/survey.hpp"
#include "bhzeta/zeta.hpp"
