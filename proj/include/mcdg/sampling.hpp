#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>

#include "mcdg/complexes.hpp"
#include "mcdg/lifting.hpp"
#include "mcdg/simplicial.hpp"

namespace mcdg {

/// Deterministic generator for property runs and the lift subcommand.
struct Rng {
    std::mt19937_64 g;
    explicit Rng(std::uint64_t seed) : g(seed) {}
    std::int64_t uniform(std::int64_t lo, std::int64_t hi); // inclusive bounds
};

/// Uniform residue over F_p; small numerators (|n| <= 4) and denominators
/// (1..3) over Q.
Scalar random_scalar(Rng& rng, const Field& k);
std::vector<Scalar> random_vector(Rng& rng, const Field& k, std::size_t n);
Element random_element(Rng& rng, const DGCategory& P, int src, int dst, int degree);

/// Random point of the variety of complexes on an endo_category object:
/// matrices sampled from the top step down, each with columns in the kernel
/// of its successor, so consecutive products vanish exactly.
Element random_complex_point(Rng& rng, const DGCategory& P, int obj, const DimVec& dims);

/// Uniformly random element of the kernel of the twisted differential at
/// this degree (kernel-basis coordinates sampled).
Element random_twisted_cocycle(Rng& rng, const DGCategory& P, const Element& eta,
                               const Element& zeta, int degree);

/// Random chain complex with len+1 levels, dims in 1..maxdim, and exact
/// boundary-squared-zero (columns sampled inside kernels).
ChainComplex random_chain_complex(Rng& rng, const Field& k, int len, int maxdim);

/// Exact two-sided inverse of a degree-0 endomorphism element, when it has
/// one in the strict (not homotopy) sense.
std::optional<Element> strict_inverse(const DGCategory& P, const Element& g);

/// Random strictly invertible degree-0 endomorphism; falls back to the
/// identity when sampling keeps missing.
Element random_invertible(Rng& rng, const DGCategory& P, int obj, int attempts = 30);

/// A generated lifting problem together with the categories it points into.
struct GeneratedLift {
    std::shared_ptr<DGCategory> PB;
    std::shared_ptr<DGCategory> PmodI;
    LiftProblem prob;
};

/// Random lift problem over the square-zero ring B (dual numbers or the
/// x^3-truncation) on the given object of a field category P:
///  - eta = eta0 + (ideal part) made exactly MC over B; eta0 is the supplied
///    basepoint (a complex point, say) or zero;
///  - zeta_I = a gauge transform of eta mod I by a random invertible degree-0
///    element, hence MC over B/I;
///  - alpha_I = the inverse gauge, perturbed by a random exact term;
///  - a_I, g_I, h_I recovered through h0_inverse.
GeneratedLift random_lift_problem(Rng& rng, const DGCategory& P, const Ring& B, int obj,
                                  const Element* eta0 = nullptr);

} // namespace mcdg
