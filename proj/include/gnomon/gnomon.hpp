#pragma once

// Umbrella header for the whole library.

#include "gnomon/arith.hpp"
#include "gnomon/factorization.hpp"
#include "gnomon/leg_search.hpp"
#include "gnomon/oracle.hpp"
#include "gnomon/ordering.hpp"
#include "gnomon/progression.hpp"
#include "gnomon/scaling.hpp"
#include "gnomon/triple.hpp"
#include "gnomon/verify.hpp"
