#pragma once

#include "exotica/derivation.hpp"
#include "exotica/diophantine.hpp"
#include "exotica/error.hpp"
#include "exotica/exotic.hpp"
#include "exotica/gauss_rational.hpp"
#include "exotica/grading.hpp"
#include "exotica/json_io.hpp"
#include "exotica/parser.hpp"
#include "exotica/polynomial.hpp"
#include "exotica/singularities.hpp"
#include "exotica/unipoly.hpp"
