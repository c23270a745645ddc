#ifndef SHUFGEBRA_HPP
#define SHUFGEBRA_HPP

#include "shufgebra/basis.hpp"
#include "shufgebra/errors.hpp"
#include "shufgebra/linear_algebra.hpp"
#include "shufgebra/monomial.hpp"
#include "shufgebra/parse.hpp"
#include "shufgebra/partition.hpp"
#include "shufgebra/pbw.hpp"
#include "shufgebra/poly_io.hpp"
#include "shufgebra/polynomial.hpp"
#include "shufgebra/rank1.hpp"
#include "shufgebra/report.hpp"
#include "shufgebra/roots.hpp"
#include "shufgebra/scalar.hpp"
#include "shufgebra/shuffle.hpp"
#include "shufgebra/specialization.hpp"
#include "shufgebra/suites.hpp"

#endif // SHUFGEBRA_HPP
