#pragma once

#include "cayley/budget.hpp"
#include "cayley/census.hpp"
#include "cayley/errors.hpp"
#include "cayley/explicit_graph.hpp"
#include "cayley/finite_field.hpp"
#include "cayley/graph.hpp"
#include "cayley/matrix.hpp"
#include "cayley/matrix_space.hpp"
#include "cayley/report_json.hpp"
