#pragma once

#include "mvdsp/brute_force.hpp"
#include "mvdsp/color_coding.hpp"
#include "mvdsp/coloring.hpp"
#include "mvdsp/dimacs.hpp"
#include "mvdsp/error.hpp"
#include "mvdsp/generators.hpp"
#include "mvdsp/graph.hpp"
#include "mvdsp/greedy.hpp"
#include "mvdsp/instance.hpp"
#include "mvdsp/io.hpp"
#include "mvdsp/shortest_paths.hpp"
#include "mvdsp/solve.hpp"
#include "mvdsp/solve_report.hpp"
#include "mvdsp/verify.hpp"
#include "mvdsp/weight.hpp"
