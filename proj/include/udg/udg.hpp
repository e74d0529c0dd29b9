#pragma once

#include "udg/coloring.hpp"
#include "udg/gosset.hpp"
#include "udg/graph.hpp"
#include "udg/hypercube.hpp"
#include "udg/io.hpp"
#include "udg/mis.hpp"
#include "udg/search.hpp"
#include "udg/table.hpp"
#include "udg/vertex_set.hpp"
