#pragma once

#include <string>

#include "mcdg/mc.hpp"

namespace mcdg {

/// Square-zero lifting data. PB is the category over B (a ring with
/// square-zero ideal I), PmodI the same category over B/I; eta is an exact
/// MC element over B on object E, zeta_I an MC element over B/I on object F,
/// and (alpha_I, a_I, g_I, h_I) witness that (F, zeta_I) and (E, eta mod I)
/// are isomorphic in H^0: alpha_I: F -> E and a_I: E -> F are closed with
/// alpha_I.a_I = 1 + d(g_I) and a_I.alpha_I = 1 + d(h_I) in B/I.
/// Non-owning: both categories must outlive the problem.
struct LiftProblem {
    const DGCategory* PB = nullptr;
    const DGCategory* PmodI = nullptr;
    int E = 0;
    int F = 0;
    Element eta;
    Element zeta_I;
    Element alpha_I;
    Element a_I;
    Element g_I;
    Element h_I;
};

/// Working state of the lifting engine. All of u, v, phi, gamma, omega, eps,
/// eps_prime, t have coefficients in I; zeta/theta and alpha are the current
/// corrected lift and comparison morphism.
struct LiftState {
    const LiftProblem* prob = nullptr;
    Element zeta, a, alpha, g, h;
    Element u, v;
    Element phi;
    Element gamma, omega;
    Element eps, eps_prime;
    Element t;
    Element theta;
    bool step1_used_fallback = false;
    bool step2_used_fallback = false;
};

/// Apply the coefficientwise quotient map B -> B/I.
Element reduce_element(const DGCategory& PB, const DGCategory& PmodI, const Element& x);
/// Apply the canonical section B/I -> B (ideal coordinates zero).
Element lift_element(const DGCategory& PmodI, const DGCategory& PB, const Element& x);
/// True iff every coefficient lies in the ideal span.
bool element_in_ideal(const DGCategory& PB, const Element& x);

/// Check every stated congruence of the problem data exactly; throws
/// mcdg::error naming the first failure.
void validate_problem(const LiftProblem& prob);

/// Lift zeta_I, alpha_I, a_I, g_I, h_I over B through the canonical section
/// and record the witness defects u = alpha.a - 1 - d_{eta,eta}(g) and
/// v = a.alpha - 1 - d_{zeta,zeta}(h). Verifies u, v have coefficients in I
/// and that all lifts reduce back to the problem data.
LiftState choose_lifts(const LiftProblem& prob);

/// Correct zeta so its curvature vanishes exactly: eps = a.gamma + h.phi,
/// theta = zeta + eps. Falls back to an exact linear solve for eps over the
/// I-supported coefficients when the closed form misses; errors with the
/// residual if both fail. Postcondition: curvature(state.zeta) = 0 and
/// state.zeta = zeta_I mod I.
void step1_fix_curvature(LiftState& state);

/// The linear-solve path of step 1 on its own: solve
/// phi + d_{zeta,zeta}(eps) = 0 for I-supported eps (state.phi must be set).
/// Sets eps and theta; false when the system is infeasible.
bool step1_solve_correction(LiftState& state);

/// The linear-solve path of step 2 on its own: joint solve for I-supported
/// (eps_prime, t) with d_{zeta,zeta}(eps_prime) = 0 and
/// d_{zeta,eta}(t) - alpha.eps_prime = -omega (state.omega must be set).
/// Sets eps_prime, t, theta; false when the system is infeasible.
bool step2_solve_correction(LiftState& state);

/// Correct the comparison morphism: omega = twisted_diff(zeta, eta, alpha),
/// eps_prime = a.omega, t = g.omega, theta = zeta + eps_prime, alpha += t.
/// Maintains curvature(theta) = 0 (d_{zeta,zeta}(eps_prime) = 0 is checked,
/// not assumed) and achieves twisted_diff(theta, eta, alpha) = 0 exactly.
/// Falls back to a joint linear solve for (eps_prime, t); errors with the
/// residual if both fail.
void step2_fix_morphism(LiftState& state);

struct LiftResult {
    Element theta;
    Element alpha;
    LiftState state;
    std::string certificate;
};

/// choose_lifts, step 1, step 2, certificate. The certificate lists every
/// intermediate and the verified identities d(theta) + theta.theta = 0 and
/// d_{theta,eta}(alpha') = 0.
LiftResult lift(const LiftProblem& prob);

} // namespace mcdg
