// twinsieve.hpp
// Everything at once.

#pragma once

#include "twinsieve/config.hpp"
#include "twinsieve/sieve_segment.hpp"
#include "twinsieve/primes.hpp"
#include "twinsieve/legendre.hpp"
#include "twinsieve/exact_ratio.hpp"
#include "twinsieve/ratios.hpp"
#include "twinsieve/bounds.hpp"
#include "twinsieve/conjecture.hpp"
#include "twinsieve/report.hpp"
