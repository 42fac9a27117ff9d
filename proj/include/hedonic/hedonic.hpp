#ifndef HEDONIC_HEDONIC_HPP
#define HEDONIC_HEDONIC_HPP

// Umbrella header for the whole library.

#include "hedonic/dynamics.hpp"
#include "hedonic/error.hpp"
#include "hedonic/flow.hpp"
#include "hedonic/game.hpp"
#include "hedonic/generators.hpp"
#include "hedonic/io.hpp"
#include "hedonic/oracle.hpp"
#include "hedonic/outcome.hpp"
#include "hedonic/partitions.hpp"
#include "hedonic/potential.hpp"
#include "hedonic/rational.hpp"
#include "hedonic/reductions.hpp"
#include "hedonic/rule.hpp"
#include "hedonic/stability.hpp"
#include "hedonic/two_is.hpp"

#endif  // HEDONIC_HEDONIC_HPP
