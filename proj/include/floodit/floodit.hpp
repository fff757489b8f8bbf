#pragma once

#include "engine.hpp"
#include "extremal.hpp"
#include "formats.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "solvers.hpp"
#include "strategies.hpp"
#include "verify.hpp"
