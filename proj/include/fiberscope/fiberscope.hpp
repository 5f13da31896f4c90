#pragma once

// Umbrella header: the whole library.

#include "fiberscope/alexnorm.hpp"
#include "fiberscope/analysis.hpp"
#include "fiberscope/brown.hpp"
#include "fiberscope/census.hpp"
#include "fiberscope/covers.hpp"
#include "fiberscope/error.hpp"
#include "fiberscope/fibertypes.hpp"
#include "fiberscope/laurent.hpp"
#include "fiberscope/numeric.hpp"
#include "fiberscope/polygon.hpp"
#include "fiberscope/realroots.hpp"
#include "fiberscope/serialize.hpp"
#include "fiberscope/svg.hpp"
#include "fiberscope/words.hpp"
