#pragma once

#include "tverberg/core_arith.hpp"
#include "tverberg/sequences.hpp"
#include "tverberg/dominance.hpp"
#include "tverberg/plines.hpp"
#include "tverberg/ramsey.hpp"
#include "tverberg/partition.hpp"
#include "tverberg/system.hpp"
#include "tverberg/filling.hpp"
#include "tverberg/dominant_filling.hpp"
