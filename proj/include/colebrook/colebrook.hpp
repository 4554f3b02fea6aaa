#pragma once

// Explicit approximations of the Colebrook flow-friction equation through
// the Wright omega function, with a high-precision iterative reference,
// quasi-Monte-Carlo error sweeps and an evaluation-speed benchmark harness.

#include "colebrook/analysis.hpp"
#include "colebrook/corrections.hpp"
#include "colebrook/domain.hpp"
#include "colebrook/evaluate.hpp"
#include "colebrook/io.hpp"
#include "colebrook/method.hpp"
#include "colebrook/reference.hpp"
#include "colebrook/series.hpp"
#include "colebrook/sobol.hpp"
#include "colebrook/types.hpp"
#include "colebrook/wright_omega.hpp"
