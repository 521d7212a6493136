#pragma once

#include "planarflow/types.hpp"
#include "planarflow/embedding.hpp"
#include "planarflow/path.hpp"
#include "planarflow/potential.hpp"
#include "planarflow/flow.hpp"
#include "planarflow/dual_sp.hpp"
#include "planarflow/surgery.hpp"
#include "planarflow/cover_solver.hpp"
#include "planarflow/adaptive_solver.hpp"
#include "planarflow/oracle.hpp"
#include "planarflow/io.hpp"
#include "planarflow/generators.hpp"
