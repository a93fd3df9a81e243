#pragma once

#include "hlcesaro/errors.hpp"
#include "hlcesaro/summation.hpp"
#include "hlcesaro/sieve.hpp"
#include "hlcesaro/log_scaled.hpp"
#include "hlcesaro/gamma.hpp"
#include "hlcesaro/quadrature.hpp"
#include "hlcesaro/bessel.hpp"
#include "hlcesaro/zeros.hpp"
#include "hlcesaro/formula.hpp"
#include "hlcesaro/oracles.hpp"
#include "hlcesaro/oracle_suite.hpp"
#include "hlcesaro/report.hpp"
