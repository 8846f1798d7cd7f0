#pragma once

#include "qinfo/linalg.hpp"
#include "qinfo/random.hpp"
#include "qinfo/states.hpp"
#include "qinfo/mub.hpp"
#include "qinfo/measure.hpp"
#include "qinfo/invariant.hpp"
#include "qinfo/interferometer.hpp"
#include "qinfo/qstate_io.hpp"
#include "qinfo/format.hpp"
