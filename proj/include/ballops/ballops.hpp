#pragma once

// Exact ball-operator geometry for polygonal Minkowski planes.

#include "errors.hpp"
#include "rational.hpp"
#include "geometry.hpp"
#include "norm.hpp"
#include "lp.hpp"
#include "ball_ops.hpp"
#include "arc_hull.hpp"
#include "center_analysis.hpp"
#include "completion.hpp"
#include "oracle.hpp"
#include "random_instances.hpp"
