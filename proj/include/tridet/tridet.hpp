#pragma once

// Umbrella header.

#include "tridet/bench.hpp"
#include "tridet/core.hpp"
#include "tridet/errors.hpp"
#include "tridet/exact.hpp"
#include "tridet/factorization.hpp"
#include "tridet/generators.hpp"
#include "tridet/matrix_io.hpp"
#include "tridet/oracle.hpp"
#include "tridet/recurrences.hpp"
#include "tridet/symbolic.hpp"
