#pragma once

// Umbrella header: the whole library in one include.

#include "stcube/geometry.hpp"
#include "stcube/time_interval.hpp"
#include "stcube/piecewise.hpp"
#include "stcube/graph.hpp"
#include "stcube/trajectory.hpp"
#include "stcube/stct.hpp"
#include "stcube/interval_tree.hpp"
#include "stcube/segment_index.hpp"

#include "stcube/layout/config.hpp"
#include "stcube/layout/forces.hpp"
#include "stcube/layout/constraints.hpp"
#include "stcube/layout/complexity.hpp"
#include "stcube/layout/engine.hpp"

#include "stcube/metrics/slice.hpp"
#include "stcube/metrics/stress.hpp"
#include "stcube/metrics/movement.hpp"
#include "stcube/metrics/crowding.hpp"
#include "stcube/metrics/scale.hpp"
#include "stcube/metrics/report.hpp"

#include "stcube/io/csv.hpp"
#include "stcube/io/discrete.hpp"
#include "stcube/io/events.hpp"
#include "stcube/io/drawing_json.hpp"
#include "stcube/io/svg.hpp"
#include "stcube/io/write.hpp"

#include "stcube/cli/run.hpp"
