#pragma once

#include "divfree/arrangement.hpp"
#include "divfree/context.hpp"
#include "divfree/divisor.hpp"
#include "divfree/freeness.hpp"
#include "divfree/groebner.hpp"
#include "divfree/hilbert.hpp"
#include "divfree/ideal_ops.hpp"
#include "divfree/matrix.hpp"
#include "divfree/module.hpp"
#include "divfree/monomial.hpp"
#include "divfree/parser.hpp"
#include "divfree/polynomial.hpp"
#include "divfree/rational.hpp"
#include "divfree/report.hpp"
#include "divfree/resolution.hpp"
#include "divfree/slice.hpp"
#include "divfree/syzygy_oracle.hpp"
