#pragma once

// Umbrella header for the core library (no JSON or CLI dependencies).

#include "ncsieve/bivariate.hpp"
#include "ncsieve/configuration.hpp"
#include "ncsieve/cyclotomic.hpp"
#include "ncsieve/dyck.hpp"
#include "ncsieve/errors.hpp"
#include "ncsieve/fibonomial.hpp"
#include "ncsieve/integer.hpp"
#include "ncsieve/polynomial.hpp"
#include "ncsieve/qanalog.hpp"
#include "ncsieve/sieving.hpp"
