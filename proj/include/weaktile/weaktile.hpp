#pragma once

#include "weaktile/rational.hpp"
#include "weaktile/interval.hpp"
#include "weaktile/step_function.hpp"
#include "weaktile/measure.hpp"
#include "weaktile/semigroup.hpp"
#include "weaktile/scan.hpp"
#include "weaktile/conditions.hpp"
#include "weaktile/simplex.hpp"
#include "weaktile/periodic.hpp"
#include "weaktile/solver.hpp"
#include "weaktile/bigfloat.hpp"
#include "weaktile/polytope.hpp"
#include "weaktile/fourier.hpp"
#include "weaktile/fejer.hpp"
#include "weaktile/io.hpp"
#include "weaktile/svg.hpp"
