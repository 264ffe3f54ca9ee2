#pragma once

// Umbrella header.

#include "cubictsp/constructions.hpp"
#include "cubictsp/error.hpp"
#include "cubictsp/even_factor.hpp"
#include "cubictsp/graph.hpp"
#include "cubictsp/io.hpp"
#include "cubictsp/planarity.hpp"
#include "cubictsp/pole.hpp"
#include "cubictsp/predicates.hpp"
#include "cubictsp/random_cubic.hpp"
#include "cubictsp/tsp.hpp"
#include "cubictsp/verify.hpp"
