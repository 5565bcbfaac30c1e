#pragma once

#include <vector>

#include "mcdg/dgcat.hpp"
#include "mcdg/variety.hpp"

namespace mcdg {

/// Dimension vector of a complex of vector spaces E^0, ..., E^d.
/// Non-negative entries, at least one nonzero.
using DimVec = std::vector<int>;

/// dg-category of complexes with the given dimension vectors as objects:
/// P^i(E,F) = direct sum over j of Hom(E^j, F^{j+i}) with elementary-matrix
/// bases (ordered by step j, then row-major), zero differential, matrix
/// composition, block-identity units. Objects are labeled E0, E1, ...
DGCategory endo_category(const std::vector<DimVec>& vectors, const Field& k);

inline DGCategory endo_category(const DimVec& v, const Field& k) {
    return endo_category(std::vector<DimVec>{v}, k);
}

/// The classical determinantal-style ideal of the variety of complexes for
/// shape v: entries of the consecutive products M_{j+1} M_j of generic
/// matrices, in the same variable order the curvature construction uses
/// (step j, then row-major). Built directly, not through a category.
CurvatureIdeal buchsbaum_eisenbud_ideal(const DimVec& v, const Field& k);

} // namespace mcdg
