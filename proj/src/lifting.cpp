#include "mcdg/lifting.hpp"

#include <sstream>

namespace mcdg {

namespace {

/// Flattened column indices whose ring coordinate lies in the ideal.
std::vector<std::size_t> ideal_columns(const Ring& B, std::size_t dim) {
    std::vector<std::size_t> cols;
    std::size_t w = B.width();
    for (std::size_t m = 0; m < dim; ++m)
        for (std::size_t j : B.ideal_indices()) cols.push_back(m * w + j);
    return cols;
}

std::optional<std::vector<Scalar>> solve_on_columns(const Field& k, const KMatrix& A,
                                                    const std::vector<Scalar>& rhs,
                                                    const std::vector<std::size_t>& cols) {
    KMatrix Asel = kmat_select_cols(A, cols);
    Solver s(k, Asel);
    auto x = s.solve(rhs);
    if (!x) return std::nullopt;
    std::vector<Scalar> full(A.cols, Scalar(0));
    for (std::size_t i = 0; i < cols.size(); ++i) full[cols[i]] = (*x)[i];
    return full;
}

std::vector<Scalar> negated(const Field& k, const std::vector<Scalar>& v) {
    std::vector<Scalar> out = v;
    for (Scalar& c : out) c = k.neg(c);
    return out;
}

} // namespace

Element reduce_element(const DGCategory& PB, const DGCategory& PmodI, const Element& x) {
    std::size_t w = PB.ring.width();
    std::size_t dim = w ? x.coeffs.size() / w : 0;
    Element y = zero_element(PmodI, x.src, x.dst, x.degree);
    std::size_t wq = PmodI.ring.width();
    require(y.coeffs.size() == dim * wq, "reduce_element: hom dimensions disagree");
    for (std::size_t m = 0; m < dim; ++m) {
        RVec c(x.coeffs.begin() + static_cast<std::ptrdiff_t>(m * w),
               x.coeffs.begin() + static_cast<std::ptrdiff_t>((m + 1) * w));
        RVec r = PB.ring.reduce_mod_ideal(c);
        std::copy(r.begin(), r.end(), y.coeffs.begin() + static_cast<std::ptrdiff_t>(m * wq));
    }
    return y;
}

Element lift_element(const DGCategory& PmodI, const DGCategory& PB, const Element& x) {
    std::size_t wq = PmodI.ring.width();
    std::size_t dim = wq ? x.coeffs.size() / wq : 0;
    Element y = zero_element(PB, x.src, x.dst, x.degree);
    std::size_t w = PB.ring.width();
    require(y.coeffs.size() == dim * w, "lift_element: hom dimensions disagree");
    for (std::size_t m = 0; m < dim; ++m) {
        RVec c(x.coeffs.begin() + static_cast<std::ptrdiff_t>(m * wq),
               x.coeffs.begin() + static_cast<std::ptrdiff_t>((m + 1) * wq));
        RVec l = PB.ring.lift_section(c);
        std::copy(l.begin(), l.end(), y.coeffs.begin() + static_cast<std::ptrdiff_t>(m * w));
    }
    return y;
}

bool element_in_ideal(const DGCategory& PB, const Element& x) {
    std::size_t w = PB.ring.width();
    for (std::size_t m = 0; m * w < x.coeffs.size(); ++m)
        if (!PB.ring.in_ideal_span(x.coeffs.data() + m * w)) return false;
    return true;
}

void validate_problem(const LiftProblem& prob) {
    require(prob.PB && prob.PmodI, "lift problem: missing category");
    const DGCategory& PB = *prob.PB;
    const DGCategory& PQ = *prob.PmodI;
    require(PQ.ring == PB.ring.quotient(),
            "lift problem: quotient category ring is not B mod I");
    require(prob.eta.src == prob.E && prob.eta.dst == prob.E && prob.eta.degree == 1,
            "lift problem: eta must be a degree-1 endomorphism of E");
    require(prob.zeta_I.src == prob.F && prob.zeta_I.dst == prob.F && prob.zeta_I.degree == 1,
            "lift problem: zeta_I must be a degree-1 endomorphism of F");
    require(prob.alpha_I.src == prob.F && prob.alpha_I.dst == prob.E && prob.alpha_I.degree == 0,
            "lift problem: alpha_I must be a degree-0 morphism F -> E");
    require(prob.a_I.src == prob.E && prob.a_I.dst == prob.F && prob.a_I.degree == 0,
            "lift problem: a_I must be a degree-0 morphism E -> F");
    require(prob.g_I.src == prob.E && prob.g_I.dst == prob.E && prob.g_I.degree == -1,
            "lift problem: g_I must have degree -1 on E");
    require(prob.h_I.src == prob.F && prob.h_I.dst == prob.F && prob.h_I.degree == -1,
            "lift problem: h_I must have degree -1 on F");

    require(is_zero(PB, curvature(PB, prob.eta)),
            "lift problem: eta is not Maurer-Cartan over B");
    require(is_zero(PQ, curvature(PQ, prob.zeta_I)),
            "lift problem: zeta_I is not Maurer-Cartan over B mod I");
    Element eta_I = reduce_element(PB, PQ, prob.eta);
    require(is_zero(PQ, twisted_diff(PQ, prob.zeta_I, eta_I, prob.alpha_I)),
            "lift problem: alpha_I is not closed mod I");
    require(is_zero(PQ, twisted_diff(PQ, eta_I, prob.zeta_I, prob.a_I)),
            "lift problem: a_I is not closed mod I");
    Element lhsE = sub(PQ, compose(PQ, prob.alpha_I, prob.a_I), identity_element(PQ, prob.E));
    require(equal(PQ, lhsE, twisted_diff(PQ, eta_I, eta_I, prob.g_I)),
            "lift problem: alpha_I.a_I differs from 1 + d(g_I) mod I");
    Element lhsF = sub(PQ, compose(PQ, prob.a_I, prob.alpha_I), identity_element(PQ, prob.F));
    require(equal(PQ, lhsF, twisted_diff(PQ, prob.zeta_I, prob.zeta_I, prob.h_I)),
            "lift problem: a_I.alpha_I differs from 1 + d(h_I) mod I");
}

LiftState choose_lifts(const LiftProblem& prob) {
    validate_problem(prob);
    const DGCategory& PB = *prob.PB;
    const DGCategory& PQ = *prob.PmodI;
    LiftState st;
    st.prob = &prob;
    st.zeta = lift_element(PQ, PB, prob.zeta_I);
    st.alpha = lift_element(PQ, PB, prob.alpha_I);
    st.a = lift_element(PQ, PB, prob.a_I);
    st.g = lift_element(PQ, PB, prob.g_I);
    st.h = lift_element(PQ, PB, prob.h_I);

    st.u = sub(PB, sub(PB, compose(PB, st.alpha, st.a), identity_element(PB, prob.E)),
               twisted_diff(PB, prob.eta, prob.eta, st.g));
    st.v = sub(PB, sub(PB, compose(PB, st.a, st.alpha), identity_element(PB, prob.F)),
               twisted_diff(PB, st.zeta, st.zeta, st.h));
    require(element_in_ideal(PB, st.u), "choose_lifts: u has coefficients outside I");
    require(element_in_ideal(PB, st.v), "choose_lifts: v has coefficients outside I");

    require(equal(PQ, reduce_element(PB, PQ, st.zeta), prob.zeta_I) &&
                equal(PQ, reduce_element(PB, PQ, st.alpha), prob.alpha_I) &&
                equal(PQ, reduce_element(PB, PQ, st.a), prob.a_I) &&
                equal(PQ, reduce_element(PB, PQ, st.g), prob.g_I) &&
                equal(PQ, reduce_element(PB, PQ, st.h), prob.h_I),
            "choose_lifts: a lift does not reduce back to the problem data");
    st.theta = st.zeta;
    return st;
}

bool step1_solve_correction(LiftState& state) {
    const LiftProblem& prob = *state.prob;
    const DGCategory& PB = *prob.PB;
    KMatrix A = twisted_diff_kmatrix(PB, state.zeta, state.zeta, 1);
    std::size_t dim1 = static_cast<std::size_t>(PB.dim(prob.F, prob.F, 1));
    auto eps = solve_on_columns(PB.ring.base(), A, negated(PB.ring.base(), state.phi.coeffs),
                                ideal_columns(PB.ring, dim1));
    if (!eps) return false;
    state.eps = zero_element(PB, prob.F, prob.F, 1);
    state.eps.coeffs = std::move(*eps);
    state.theta = add(PB, state.zeta, state.eps);
    return true;
}

void step1_fix_curvature(LiftState& state) {
    const LiftProblem& prob = *state.prob;
    const DGCategory& PB = *prob.PB;
    state.phi = curvature(PB, state.zeta);
    require(element_in_ideal(PB, state.phi),
            "step 1: curvature of the lifted zeta is not supported on I");
    state.gamma = twisted_diff(PB, state.zeta, prob.eta, state.alpha);
    require(element_in_ideal(PB, state.gamma),
            "step 1: the obstruction gamma is not supported on I");

    state.eps = add(PB, compose(PB, state.a, state.gamma), compose(PB, state.h, state.phi));
    state.theta = add(PB, state.zeta, state.eps);
    Element res = curvature(PB, state.theta);
    if (!is_zero(PB, res)) {
        state.step1_used_fallback = true;
        if (!step1_solve_correction(state) ||
            !is_zero(PB, curvature(PB, state.theta)))
            fail("step 1: no curvature-killing correction exists; closed-form residual " +
                 element_to_string(PB, res));
    }

    // I-support sanity: squares of ideal-supported elements vanish
    require(is_zero(PB, compose(PB, state.eps, state.eps)),
            "step 1: eps.eps is nonzero, ideal is not square-zero");
    require(is_zero(PB, compose(PB, state.v, state.phi)),
            "step 1: v.phi is nonzero, ideal is not square-zero");
    require(equal(*prob.PmodI, reduce_element(PB, *prob.PmodI, state.theta), prob.zeta_I),
            "step 1: theta does not reduce to zeta_I");
    state.zeta = state.theta;
}

bool step2_solve_correction(LiftState& state) {
    const LiftProblem& prob = *state.prob;
    const DGCategory& PB = *prob.PB;
    const Field& k = PB.ring.base();
    std::size_t w = PB.ring.width();
    std::size_t dim_e = static_cast<std::size_t>(PB.dim(prob.F, prob.F, 1));
    std::size_t dim_t = static_cast<std::size_t>(PB.dim(prob.F, prob.E, 0));

    // unknowns (eps_prime, t); rows d_{zz}(eps_prime) = 0 and
    // -alpha.eps_prime + d_{zeta,eta}(t) = -omega
    KMatrix Dzz = twisted_diff_kmatrix(PB, state.zeta, state.zeta, 1);
    KMatrix L = postcompose_kmatrix(PB, state.alpha, prob.F, 1);
    KMatrix Dt = twisted_diff_kmatrix(PB, state.zeta, prob.eta, 0);
    std::size_t ne = dim_e * w, nt = dim_t * w;
    KMatrix A(Dzz.rows + L.rows, ne + nt);
    for (std::size_t r = 0; r < Dzz.rows; ++r)
        for (std::size_t c = 0; c < ne; ++c) A.at(r, c) = Dzz.at(r, c);
    for (std::size_t r = 0; r < L.rows; ++r) {
        for (std::size_t c = 0; c < ne; ++c) A.at(Dzz.rows + r, c) = k.neg(L.at(r, c));
        for (std::size_t c = 0; c < nt; ++c) A.at(Dzz.rows + r, ne + c) = Dt.at(r, c);
    }
    std::vector<Scalar> rhs(Dzz.rows + L.rows, Scalar(0));
    for (std::size_t i = 0; i < state.omega.coeffs.size(); ++i)
        rhs[Dzz.rows + i] = k.neg(state.omega.coeffs[i]);

    std::vector<std::size_t> cols = ideal_columns(PB.ring, dim_e);
    for (std::size_t c : ideal_columns(PB.ring, dim_t)) cols.push_back(ne + c);
    auto x = solve_on_columns(k, A, rhs, cols);
    if (!x) return false;
    state.eps_prime = zero_element(PB, prob.F, prob.F, 1);
    state.t = zero_element(PB, prob.F, prob.E, 0);
    for (std::size_t i = 0; i < ne; ++i) state.eps_prime.coeffs[i] = (*x)[i];
    for (std::size_t i = 0; i < nt; ++i) state.t.coeffs[i] = (*x)[ne + i];
    state.theta = add(PB, state.zeta, state.eps_prime);
    return true;
}

void step2_fix_morphism(LiftState& state) {
    const LiftProblem& prob = *state.prob;
    const DGCategory& PB = *prob.PB;
    require(is_zero(PB, curvature(PB, state.zeta)),
            "step 2: zeta must already have zero curvature");
    state.omega = twisted_diff(PB, state.zeta, prob.eta, state.alpha);
    require(element_in_ideal(PB, state.omega),
            "step 2: the obstruction omega is not supported on I");

    state.eps_prime = compose(PB, state.a, state.omega);
    state.t = compose(PB, state.g, state.omega);
    state.theta = add(PB, state.zeta, state.eps_prime);
    Element alpha2 = add(PB, state.alpha, state.t);
    bool ok = is_zero(PB, twisted_diff(PB, state.zeta, state.zeta, state.eps_prime)) &&
              is_zero(PB, curvature(PB, state.theta)) &&
              is_zero(PB, twisted_diff(PB, state.theta, prob.eta, alpha2));
    if (!ok) {
        Element res = twisted_diff(PB, state.theta, prob.eta, alpha2);
        state.step2_used_fallback = true;
        if (!step2_solve_correction(state)) fail(
            "step 2: no closing correction exists; closed-form residual " +
            element_to_string(PB, res));
        alpha2 = add(PB, state.alpha, state.t);
        require(is_zero(PB, twisted_diff(PB, state.zeta, state.zeta, state.eps_prime)),
                "step 2: solved eps_prime fails d_{zeta,zeta}(eps_prime) = 0");
        require(is_zero(PB, curvature(PB, state.theta)),
                "step 2: solved correction breaks curvature(theta) = 0");
        require(is_zero(PB, twisted_diff(PB, state.theta, prob.eta, alpha2)),
                "step 2: solved correction fails to close alpha");
    }

    require(is_zero(PB, compose(PB, state.t, state.eps_prime)),
            "step 2: t.eps_prime is nonzero, ideal is not square-zero");
    require(is_zero(PB, compose(PB, state.u, state.omega)),
            "step 2: u.omega is nonzero, ideal is not square-zero");
    const DGCategory& PQ = *prob.PmodI;
    require(equal(PQ, reduce_element(PB, PQ, state.theta), prob.zeta_I),
            "step 2: theta does not reduce to zeta_I");
    require(equal(PQ, reduce_element(PB, PQ, alpha2), prob.alpha_I),
            "step 2: corrected alpha does not reduce to alpha_I");
    state.zeta = state.theta;
    state.alpha = alpha2;
}

namespace {

void print_field(std::ostringstream& os, const DGCategory& P, const char* name,
                 const Element& x) {
    os << "  " << name << " = " << element_to_string(P, x) << "\n";
}

} // namespace

LiftResult lift(const LiftProblem& prob) {
    const DGCategory& PB = *prob.PB;
    const DGCategory& PQ = *prob.PmodI;
    LiftState st = choose_lifts(prob);
    std::ostringstream os;
    os << "square-zero lift certificate\n";
    os << "ring B = " << PB.ring.name() << " over " << PB.ring.base().name() << "\n";
    os << "ideal I = span{";
    bool first = true;
    for (std::size_t j : PB.ring.ideal_indices()) {
        if (!first) os << ", ";
        os << PB.ring.basis_names()[j];
        first = false;
    }
    os << "}\n";
    os << "object E = " << PB.objects[static_cast<std::size_t>(prob.E)]
       << ", object F = " << PB.objects[static_cast<std::size_t>(prob.F)] << "\n";
    os << "problem data (over B mod I):\n";
    print_field(os, PB, "eta (over B)", prob.eta);
    print_field(os, PQ, "zeta_I", prob.zeta_I);
    print_field(os, PQ, "alpha_I", prob.alpha_I);
    print_field(os, PQ, "a_I", prob.a_I);
    print_field(os, PQ, "g_I", prob.g_I);
    print_field(os, PQ, "h_I", prob.h_I);
    os << "chosen lifts over B:\n";
    print_field(os, PB, "zeta", st.zeta);
    print_field(os, PB, "alpha", st.alpha);
    print_field(os, PB, "a", st.a);
    print_field(os, PB, "g", st.g);
    print_field(os, PB, "h", st.h);
    print_field(os, PB, "u", st.u);
    print_field(os, PB, "v", st.v);

    step1_fix_curvature(st);
    os << "step 1 (curvature repair"
       << (st.step1_used_fallback ? ", linear-solve fallback" : ", closed form eps = a.gamma + h.phi")
       << "):\n";
    print_field(os, PB, "phi", st.phi);
    print_field(os, PB, "gamma", st.gamma);
    print_field(os, PB, "eps", st.eps);
    print_field(os, PB, "theta", st.theta);
    os << "  check: curvature(theta) = 0 exactly\n";
    os << "  check: theta = zeta_I mod I\n";

    step2_fix_morphism(st);
    os << "step 2 (morphism repair"
       << (st.step2_used_fallback ? ", linear-solve fallback" : ", closed form eps' = a.omega, t = g.omega")
       << "):\n";
    print_field(os, PB, "omega", st.omega);
    print_field(os, PB, "eps'", st.eps_prime);
    print_field(os, PB, "t", st.t);
    print_field(os, PB, "theta", st.theta);
    print_field(os, PB, "alpha'", st.alpha);
    os << "  check: d_{zeta,zeta}(eps') = 0 exactly\n";
    os << "  check: alpha' = alpha_I mod I\n";
    os << "verified exactly: d(theta) + theta.theta = 0\n";
    os << "verified exactly: d_{theta,eta}(alpha') = 0\n";

    LiftResult out;
    out.theta = st.theta;
    out.alpha = st.alpha;
    out.state = st;
    out.certificate = os.str();
    return out;
}

} // namespace mcdg
