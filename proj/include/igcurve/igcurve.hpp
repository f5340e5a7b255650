#pragma once

#include "igcurve/weyl.hpp"
#include "igcurve/indexing.hpp"
#include "igcurve/moment_graph.hpp"
#include "igcurve/curve_nbhd.hpp"
