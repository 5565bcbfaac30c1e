#pragma once

#include <vector>

#include "mcdg/mc.hpp"

namespace mcdg {

/// Chain complex over the base field, homological degrees 0..n (degree j
/// stores what sits in cochain degree -j). boundary[j]: C_j -> C_{j-1} for
/// j >= 1; boundary[0] is an unused placeholder.
struct ChainComplex {
    Field k = Field::rationals();
    std::vector<int> dims;
    std::vector<KMatrix> boundary;

    int dim(int j) const {
        return (j >= 0 && j < static_cast<int>(dims.size())) ? dims[static_cast<std::size_t>(j)]
                                                             : 0;
    }
    /// boundary C_j -> C_{j-1}, a zero matrix when absent.
    KMatrix bnd(int j) const;
};

/// Shape check plus exact boundary-squared check.
void validate_complex(const ChainComplex& C);

/// Truncation tau_{<=0} of a twisted hom complex, flattened over the base
/// field: chain degree j holds P^{-j}(src,dst) (dimension dim * ring width)
/// except degree 0, which is Z^0 = ker d^0 in an explicit kernel basis.
/// z0_inclusion maps Z^0 coordinates into the ambient flat degree-0 space.
struct TruncatedComplex {
    ChainComplex C;
    KMatrix z0_inclusion;
    const DGCategory* P = nullptr;
    Element eta, zeta;
    int src = -1, dst = -1;
};

/// Truncate the twisted hom complex (P^i(E,F), d_{eta,zeta}), E and F being
/// the objects carrying eta and zeta. Both twists must be MC so the complex
/// squares to zero.
TruncatedComplex truncate_hom(const DGCategory& P, const Element& eta, const Element& zeta);

/// Truncate an already-truncated complex: the positive differential is gone,
/// so Z^0 is everything and the operation is idempotent.
TruncatedComplex truncate(const TruncatedComplex& T);

/// Monotone surjection [n] ->> [k] encoded by its merge mask: bit i-1 is set
/// iff eta(i) = eta(i-1), for i = 1..n; popcount(mask) = n - k.
struct Surjection {
    int n = 0;
    int k = 0;
    unsigned mask = 0;
    std::vector<int> values() const;
    bool operator==(const Surjection& o) const = default;
};

/// Every surjection out of [n], ordered by k ascending then mask ascending.
std::vector<Surjection> surjections(int n);

/// Coordinate layout of level n of the realization: one block per
/// surjection [n] ->> [k], of size dim C_k, in surjections(n) order.
struct DPLayout {
    std::vector<Surjection> surj;
    std::vector<int> offset;
    int rank = 0;
    /// index of the block of a given surjection, -1 if absent (dim 0 blocks
    /// are kept, so absence means a foreign surjection).
    int index_of(const Surjection& s) const;
};

DPLayout dp_layout(const ChainComplex& C, int n);

/// Simplicial module over the base field, levels 0..cap, with face and
/// degeneracy matrices. face[n][i]: level n -> n-1 (1 <= n <= cap),
/// degen[n][j]: level n -> n+1 (0 <= n < cap).
struct SimplicialModule {
    Field k = Field::rationals();
    int cap = 0;
    std::vector<int> ranks;
    std::vector<std::vector<KMatrix>> face;
    std::vector<std::vector<KMatrix>> degen;

    int rank(int n) const {
        return (n >= 0 && n <= cap) ? ranks[static_cast<std::size_t>(n)] : 0;
    }
};

/// Exact check of every simplicial identity expressible within the cap;
/// throws mcdg::error naming the first failing identity and level.
void check_simplicial_identities(const SimplicialModule& S);

/// Matrix of the structure map Gamma(C)(alpha): level n -> level m for a
/// monotone alpha: [m] -> [n] given by its value list (size m+1). Blocks
/// follow the epi-mono factorization rule: identity when the mono part is
/// the identity, the boundary when the mono part is the 0th coface, zero
/// otherwise.
KMatrix dp_structure_matrix(const ChainComplex& C, const std::vector<int>& alpha, int n);

/// Inverse Dold-Kan realization: level n = sum over surjections [n] ->> [k]
/// of C_k, with structure maps from dp_structure_matrix. The simplicial
/// identities are checked before returning.
SimplicialModule dold_puppe(const ChainComplex& C, int N);

inline SimplicialModule dold_puppe(const TruncatedComplex& T, int N) {
    return dold_puppe(T.C, N);
}

/// The degeneracy composite S(eta): level k -> level n of a surjection
/// eta: [n] ->> [k], as a product of degeneracy matrices.
KMatrix surjection_matrix(const SimplicialModule& S, const Surjection& eta);

/// Normalized chains: N_0 = level 0, N_j = intersection of ker d_i for
/// i >= 1, with boundary d_0 expressed in the kernel bases.
struct NormalizedChains {
    ChainComplex C;
    std::vector<KMatrix> inclusion;
};

NormalizedChains normalize(const SimplicialModule& S);

/// The coordinate projection onto the identity-surjection summand, checked
/// to be a degreewise isomorphism N(dold_puppe(C, N)) -> C commuting with
/// the boundaries; throws with a witness degree if it is not. One matrix per
/// degree 0..cap.
std::vector<KMatrix> dold_kan_roundtrip_iso(const ChainComplex& C, const SimplicialModule& S,
                                            const NormalizedChains& NS);

/// Composition of realization simplices of twisted hom complexes:
/// an m-simplex over hom(Y,Z) and an m-simplex over hom(X,Y) yield an
/// m-simplex over hom(X,Z). The pair is decomposed in the levelwise tensor
/// module (exact Dold-Kan solve), pushed through the Alexander-Whitney map
/// onto normalized chains, composed in the category, and reassembled per
/// surjection. At level 0 this is exactly the composition of cocycles.
class DPComposer {
  public:
    DPComposer(const DGCategory& P, const Element& etaX, const Element& etaY,
               const Element& etaZ, int cap);

    const TruncatedComplex& left_complex() const { return trYZ_; }
    const TruncatedComplex& right_complex() const { return trXY_; }
    const TruncatedComplex& target_complex() const { return trXZ_; }
    const SimplicialModule& left() const { return A_; }
    const SimplicialModule& right() const { return B_; }
    const SimplicialModule& target() const { return T_; }

    std::vector<Scalar> compose_simplices(const std::vector<Scalar>& sigma,
                                          const std::vector<Scalar>& tau, int m) const;

  private:
    const DGCategory* P_;
    int cap_;
    TruncatedComplex trYZ_, trXY_, trXZ_;
    SimplicialModule A_, B_, T_;
    SimplicialModule tensor_;             // levelwise tensor of A_ and B_
    std::vector<KMatrix> ntensor_;        // normalized-chain inclusions of tensor_
    std::vector<KMatrix> chain_map_;      // chain_map_[q]: N_q(tensor) -> target C_q
    struct LevelSolve {
        std::vector<Surjection> surj;
        std::vector<int> offset;          // column offsets into the solve unknowns
        Solver psi;
    };
    std::vector<LevelSolve> decomp_;      // per level 0..cap
};

} // namespace mcdg
