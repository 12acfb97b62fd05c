#pragma once

#include "fcaerr/bitset.hpp"
#include "fcaerr/bmf.hpp"
#include "fcaerr/closure_system.hpp"
#include "fcaerr/conceptual_error.hpp"
#include "fcaerr/context.hpp"
#include "fcaerr/csv.hpp"
#include "fcaerr/cxt_io.hpp"
#include "fcaerr/dot.hpp"
#include "fcaerr/errors.hpp"
#include "fcaerr/lattice.hpp"
#include "fcaerr/measure_io.hpp"
#include "fcaerr/report.hpp"
#include "fcaerr/scale_measure.hpp"
