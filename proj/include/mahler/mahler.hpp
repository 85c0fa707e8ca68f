#pragma once

#include "errors.hpp"
#include "rational.hpp"
#include "laurent.hpp"
#include "parse.hpp"
#include "roots.hpp"
#include "summation.hpp"
#include "quadrature.hpp"
#include "torus.hpp"
#include "specfun.hpp"
#include "mzv.hpp"
#include "mpolylog.hpp"
#include "hypergeometric.hpp"
#include "series.hpp"
#include "closed_forms.hpp"
#include "tables.hpp"
#include "verifier.hpp"
