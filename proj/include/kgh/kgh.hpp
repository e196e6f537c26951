#pragma once

#include "kgh/errors.hpp"
#include "kgh/vertex_set.hpp"
#include "kgh/hypergraph.hpp"
#include "kgh/guards.hpp"
#include "kgh/coloring_solver.hpp"
#include "kgh/kneser.hpp"
#include "kgh/defects.hpp"
#include "kgh/alternation.hpp"
#include "kgh/bounds.hpp"
#include "kgh/theorems.hpp"
#include "kgh/families.hpp"
#include "kgh/io.hpp"

namespace kgh {
inline constexpr const char* kVersion = "0.1.0";
}
