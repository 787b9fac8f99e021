#pragma once

#include "trigather/config.hpp"
#include "trigather/engine.hpp"
#include "trigather/gen.hpp"
#include "trigather/grid.hpp"
#include "trigather/rng.hpp"
#include "trigather/rule.hpp"
#include "trigather/scheduler.hpp"
#include "trigather/search.hpp"
#include "trigather/svg.hpp"
#include "trigather/textio.hpp"
#include "trigather/trace_io.hpp"
