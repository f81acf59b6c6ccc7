#ifndef CMREG_CMREG_HPP
#define CMREG_CMREG_HPP

#include "betti.hpp"
#include "cli.hpp"
#include "exact_rank.hpp"
#include "extended_int.hpp"
#include "groebner.hpp"
#include "hilbert.hpp"
#include "io.hpp"
#include "linear_change.hpp"
#include "monomial.hpp"
#include "monomial_ideal.hpp"
#include "polynomial.hpp"
#include "regularity.hpp"
#include "report_json.hpp"
#include "ring.hpp"
#include "scalar.hpp"
#include "version.hpp"

#endif
