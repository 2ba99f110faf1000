#pragma once

#include "rwlab/attributed.hpp"
#include "rwlab/conductance.hpp"
#include "rwlab/cover.hpp"
#include "rwlab/edge_list.hpp"
#include "rwlab/enumerate.hpp"
#include "rwlab/error.hpp"
#include "rwlab/experiments.hpp"
#include "rwlab/generators.hpp"
#include "rwlab/graph.hpp"
#include "rwlab/invariance.hpp"
#include "rwlab/mixing.hpp"
#include "rwlab/parallel.hpp"
#include "rwlab/reconstruct.hpp"
#include "rwlab/record.hpp"
#include "rwlab/rng.hpp"
#include "rwlab/walk.hpp"
