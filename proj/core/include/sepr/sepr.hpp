#pragma once

#include "sepr/certify.hpp"
#include "sepr/error.hpp"
#include "sepr/expr_parser.hpp"
#include "sepr/matrix_io.hpp"
#include "sepr/minors.hpp"
#include "sepr/monomial.hpp"
#include "sepr/orthant.hpp"
#include "sepr/polynomial.hpp"
#include "sepr/rational_point.hpp"
#include "sepr/report.hpp"
#include "sepr/sym_matrix.hpp"
#include "sepr/variable_table.hpp"
#include "sepr/verify.hpp"
