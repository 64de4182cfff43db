#ifndef ORBITSTAB_LINALG_HPP
#define ORBITSTAB_LINALG_HPP

#include <vector>

#include "orbitstab/field.hpp"

namespace orbitstab {

/// Dense matrix over one FieldSpec, row-major.
using Matrix = std::vector<std::vector<FieldElem>>;

/// Exact basis of the right nullspace of M via Gaussian elimination.
/// Basis vectors are normalized with first nonzero entry = 1; the basis size
/// equals ncols - rank(M).
std::vector<std::vector<FieldElem>> nullspace(const Matrix& M, const FieldSpecPtr& spec, std::size_t ncols);

/// Reduce a set of vectors to reduced row echelon form over the given
/// coordinate order (coordinate 0 treated as most significant). Zero rows are
/// dropped; pivots are scaled to 1 and cleared above and below.
std::vector<std::vector<FieldElem>> row_reduce(std::vector<std::vector<FieldElem>> rows, const FieldSpecPtr& spec);

} // namespace orbitstab

#endif
