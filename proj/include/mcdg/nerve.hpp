#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "mcdg/simplicial.hpp"
#include "mcdg/variety.hpp"

namespace mcdg {

/// Realized hom simplicial modules of a dg-category: for every ordered object
/// pair (a,b), the truncation of the untwisted hom complex and its
/// realization up to the cap. The category must outlive this cache.
struct DPHoms {
    const DGCategory* A = nullptr;
    int cap = 0;
    int nobj = 0;
    std::vector<TruncatedComplex> tr; // index a*nobj + b
    std::vector<SimplicialModule> dp;

    const TruncatedComplex& trunc(int a, int b) const;
    const SimplicialModule& mod(int a, int b) const;
};

DPHoms dp_homs(const DGCategory& A, int cap);

/// One summand of a nerve level: an (n+1)-tuple of objects with the ranks of
/// the n hom-simplex factors along its spine.
struct NerveTuple {
    std::vector<int> objects;
    std::vector<int> factor_rank;
    bool operator==(const NerveTuple&) const = default;
};

/// The (n,m) level of the bisimplicial nerve, as a disjoint union over object
/// tuples of products of hom levels. n = 0 rows are the object set itself.
struct NerveLevel {
    int n = 0, m = 0;
    std::vector<NerveTuple> tuples;
};

struct NerveSlice {
    int cap = 0;
    int objects = 0;
    std::vector<NerveLevel> levels; // index n*(cap+1) + m, 0 <= n,m <= cap

    const NerveLevel& level(int n, int m) const;
};

/// Structural nerve of the category underlying H, all levels (n,m) with
/// n, m <= cap. Tuples are enumerated lexicographically.
NerveSlice nerve_slice(const DPHoms& H);

/// Number of elements of a level over a finite field.
Int level_cardinality(const Field& k, const NerveLevel& L);

/// A nerve level listed element by element over a finite field with p < 256:
/// per tuple, each element is the concatenation of its factor coordinates as
/// canonical residues. Refuses infinite fields and counts above the guard.
struct MaterializedLevel {
    int n = 0, m = 0;
    std::vector<std::vector<std::vector<std::uint8_t>>> elems; // [tuple][elem][coord]
};

MaterializedLevel materialize_level(const Field& k, const NerveLevel& L,
                                    std::uint64_t guard = 1'000'000);

/// Verifies that the Segal comparison map from level (n,m) to the n-fold
/// fiber product of level (1,m) over level (0,m) is a bijection: structurally
/// always, and over a finite field also by cardinality and by materialized
/// element comparison (within the guard). Returns false on any mismatch,
/// which is how corrupted slices are detected. Requires n >= 2.
bool segal_check(const Field& k, const NerveSlice& S, int n, int m,
                 std::uint64_t guard = 1'000'000);

/// Dimensions and class counts of H^0 of the truncated hom complex of (a,b),
/// with the number of classes invertible up to homotopy, decided by
/// h0_inverse on one representative per class. Class enumeration needs a
/// finite base field.
struct H0Stats {
    int z0 = 0, b0 = 0, h0 = 0;
    Int classes = 0;
    Int invertible = 0;
};

H0Stats h0_stats(const DPHoms& H, int a, int b, std::uint64_t guard = 100'000);

/// Membership in the invertible interior at diagonal level n: every spine
/// factor's vertex cocycle has an invertible H^0 class. Works over any base
/// field. objects has n+1 entries; factors[i] are the coordinates of an
/// n-simplex of the hom realization of (objects[i], objects[i+1]).
bool interior_member(const DPHoms& H, const std::vector<int>& objects,
                     const std::vector<std::vector<Scalar>>& factors);

/// Diagonal level n of the invertible interior, counted over a finite field:
/// per spine factor, invertible classes times the field size to the power
/// (realization rank minus dim H^0).
struct InteriorLevel {
    int n = 0;
    std::vector<NerveTuple> tuples;
    std::vector<Int> count;
    Int total = 0;
};

std::vector<InteriorLevel> interior_diagonal(const DPHoms& H, std::uint64_t guard = 100'000);

/// Value of the deformation prestack at a coefficient ring: extend scalars,
/// enumerate the Maurer-Cartan objects (exhaustively over a finite ring, or
/// from the supplied list), form the twisted category, its nerve, and the
/// invertible interior of the diagonal. Interior counts are filled only over
/// a finite base field (counted = true).
struct PrestackValue {
    std::shared_ptr<DGCategory> category;
    std::vector<MCObject> points;
    DPHoms homs;
    NerveSlice nerve;
    std::vector<InteriorLevel> interior;
    bool counted = false;
};

PrestackValue mc_prestack_value(const DGCategory& P, const Ring& R, int N,
                                const std::vector<Element>* points = nullptr,
                                std::size_t guard = 2'000'000);

} // namespace mcdg
