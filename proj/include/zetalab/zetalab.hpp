#pragma once

#include "zetalab/bounds.hpp"
#include "zetalab/csv.hpp"
#include "zetalab/errors.hpp"
#include "zetalab/explicit_formula.hpp"
#include "zetalab/mangoldt.hpp"
#include "zetalab/numeric.hpp"
#include "zetalab/parallel.hpp"
#include "zetalab/quadrature.hpp"
#include "zetalab/selberg.hpp"
#include "zetalab/special_functions.hpp"
#include "zetalab/zero_search.hpp"
#include "zetalab/zero_table.hpp"
