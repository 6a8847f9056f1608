#pragma once

#include "steiner/budget.hpp"
#include "steiner/decomposition.hpp"
#include "steiner/eccentricity.hpp"
#include "steiner/families.hpp"
#include "steiner/graph.hpp"
#include "steiner/graph_io.hpp"
#include "steiner/rational.hpp"
#include "steiner/scan.hpp"
#include "steiner/steiner_tree.hpp"
#include "steiner/verify.hpp"
