#pragma once

#include <map>
#include <string>
#include <vector>

#include "mcdg/dgcat.hpp"

namespace mcdg {

/// Structure constants of the curvature equation at one object:
/// b[i][l] is the f_l-coefficient of d(e_i), a.at({i,j})[l] the
/// f_l-coefficient of e_i . e_j, over the P^1 basis e and P^2 basis f.
struct StructureConstants {
    int r = 0, s = 0;
    std::vector<std::vector<Scalar>> b;
    std::map<std::pair<int, int>, std::vector<Scalar>> a;
};

StructureConstants extract_structure_constants(const DGCategory& P, int obj);

struct LinTerm {
    int i;
    Scalar c;
    bool operator==(const LinTerm&) const = default;
};
/// Quadratic monomial with an ordered variable pair (i, j): the term
/// c * x_i * x_j coming from the composition e_i . e_j. Pairs are not
/// symmetrized.
struct QuadTerm {
    int i, j;
    Scalar c;
    bool operator==(const QuadTerm&) const = default;
};
struct GenPoly {
    std::vector<LinTerm> lin;   // ascending i
    std::vector<QuadTerm> quad; // ascending (i, j)
    bool operator==(const GenPoly&) const = default;
};

/// Generators c_l = sum_i b^i_l x_i + sum_{i,j} a^{ij}_l x_i x_j of the
/// coordinate ring ideal cutting out the Maurer-Cartan locus at one object.
struct CurvatureIdeal {
    Field k = Field::rationals();
    std::string object;
    int r = 0, s = 0;
    std::vector<GenPoly> gens;
};

/// Requires a category over a field.
CurvatureIdeal curvature_ideal(const DGCategory& P, int obj);

/// Evaluate all generators at a point z in B^r, B a ring over the ideal's
/// field (the field itself included, via the width-1 ring).
std::vector<RVec> evaluate_ideal(const CurvatureIdeal& I, const Ring& B,
                                 const std::vector<RVec>& z);
bool is_point(const CurvatureIdeal& I, const Ring& B, const std::vector<RVec>& z);

/// All points of V(I) over a finite ring, by exhaustive evaluation.
/// Refuses search spaces larger than `guard`.
std::vector<std::vector<RVec>> enumerate_points(const CurvatureIdeal& I, const Ring& B,
                                                std::size_t guard = 2'000'000);

/// Points over the ideal's own (finite) field, as plain scalar tuples.
std::vector<std::vector<Scalar>> enumerate_points(const CurvatureIdeal& I,
                                                  std::size_t guard = 2'000'000);

/// Deterministic text form: header with object, r, s, then one generator per
/// line in sparse monomial form (coef*xi, coef*xi*xj).
std::string emit_ideal(const CurvatureIdeal& I);

/// Exact structural equality (same terms in the same order).
bool ideal_equal(const CurvatureIdeal& A, const CurvatureIdeal& B);
/// Equality after normalizing quadratic monomials to sorted variable pairs
/// (coefficients of x_i x_j and x_j x_i combined).
bool ideal_equal_normalized(const CurvatureIdeal& A, const CurvatureIdeal& B);

} // namespace mcdg
