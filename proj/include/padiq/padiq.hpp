#pragma once

// Umbrella header: the whole library.

#include "padiq/errors.hpp"
#include "padiq/hensel.hpp"
#include "padiq/oracle.hpp"
#include "padiq/padic.hpp"
#include "padiq/report_json.hpp"
#include "padiq/residue.hpp"
#include "padiq/solver.hpp"
