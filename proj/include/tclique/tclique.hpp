#pragma once

// t-clique tensor spectra for small graphs: graph plumbing, the implicit
// clique tensor, spectral radius solvers, the bound chain, and exhaustive
// extremal searches.

#include "tclique/bounds.hpp"
#include "tclique/cliques.hpp"
#include "tclique/graph.hpp"
#include "tclique/search.hpp"
#include "tclique/solver.hpp"
#include "tclique/subgraph.hpp"
#include "tclique/tensor.hpp"
