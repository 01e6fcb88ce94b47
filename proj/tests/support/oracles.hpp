#pragma once

#include <vector>

#include "sepr/polynomial.hpp"
#include "sepr/sym_matrix.hpp"

namespace sepr::testing {

/// Leibniz formula: signed sum over permutations of entry products. Branches
/// through zero entries are skipped, which leaves the sum unchanged. Shares
/// no code with the cofactor engine.
Polynomial leibniz_determinant(const SymMatrix& m);

/// Leibniz determinant of the principal submatrix on `indices` (1-based).
Polynomial leibniz_minor(const SymMatrix& m, const std::vector<std::size_t>& indices);

/// Path to the bundled paper12.json.
const char* paper_fixture_path();

}  // namespace sepr::testing
