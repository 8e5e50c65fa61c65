#pragma once

#include "landen/cotangent.hpp"
#include "landen/driver.hpp"
#include "landen/errors.hpp"
#include "landen/landen.hpp"
#include "landen/multipoly.hpp"
#include "landen/polynomial.hpp"
#include "landen/quadrature.hpp"
#include "landen/resultant.hpp"
#include "landen/scalars.hpp"
#include "landen/sturm.hpp"
#include "landen/symbolic.hpp"
