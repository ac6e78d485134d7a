#pragma once

// Umbrella header: exact arithmetic, fiber classification and Brauer-class
// ramification analysis for elliptic surfaces y^2 = x(x-p)(x-q) over P^1.

#include "ellram/brauer.hpp"
#include "ellram/elliptic_surface.hpp"
#include "ellram/errors.hpp"
#include "ellram/factorization.hpp"
#include "ellram/parse.hpp"
#include "ellram/place.hpp"
#include "ellram/polynomial.hpp"
#include "ellram/rational.hpp"
#include "ellram/rational_function.hpp"
#include "ellram/report.hpp"
#include "ellram/square_class.hpp"
#include "ellram/tame_symbol.hpp"
