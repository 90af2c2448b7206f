#pragma once

#include "cliquesplit/bench.hpp"
#include "cliquesplit/chimera.hpp"
#include "cliquesplit/errors.hpp"
#include "cliquesplit/graph.hpp"
#include "cliquesplit/partition.hpp"
#include "cliquesplit/qubo.hpp"
#include "cliquesplit/reduce.hpp"
#include "cliquesplit/rng.hpp"
#include "cliquesplit/solvers.hpp"
#include "cliquesplit/text.hpp"
