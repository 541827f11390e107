#pragma once

#include "strongedge/audit.hpp"
#include "strongedge/coloring.hpp"
#include "strongedge/degeneracy.hpp"
#include "strongedge/edgelist.hpp"
#include "strongedge/exact.hpp"
#include "strongedge/generate.hpp"
#include "strongedge/multigraph.hpp"
#include "strongedge/ordering.hpp"
#include "strongedge/serialize.hpp"
