#pragma once

#include "relmatch/closure.hpp"
#include "relmatch/match.hpp"
#include "relmatch/nfa.hpp"
#include "relmatch/paths.hpp"
#include "relmatch/product_graph.hpp"
#include "relmatch/quantitative.hpp"
#include "relmatch/regex.hpp"
#include "relmatch/simulation.hpp"
#include "relmatch/subsequence.hpp"
#include "relmatch/supersequence.hpp"
#include "relmatch/transition_index.hpp"
#include "relmatch/types.hpp"
#include "relmatch/universal.hpp"
