// The two constructive directions between graded Frobenius algebras and
// Frobenius objects in the double's module category, the eta-induced duality
// map used to build the coproduct, and the entry-exact round trips.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "grpdfrob/error.hpp"
#include "grpdfrob/frobenius.hpp"
#include "grpdfrob/gfa.hpp"
#include "grpdfrob/linalg.hpp"
#include "grpdfrob/rep_cat.hpp"
#include "grpdfrob/report.hpp"
#include "grpdfrob/weak_hopf.hpp"

namespace grpdfrob {

namespace detail {

// Action matrix of the pair <g|x> on a graded carrier:
// u at (y, h) goes to [y = s(x)][h = x^{-1}gx] phi(x) u.
inline Mat induced_pair_action(const Gfa& A, int g, int x) {
    const Groupoid& G = A.groupoid;
    const int d = A.dim();
    Mat out(d, d);
    int sx = G.src(x);
    int want = G.conj_down(x, g);
    for (int j = 0; j < d; ++j) {
        if (A.degree[static_cast<std::size_t>(j)] != std::make_pair(sx, want)) continue;
        Vec img = apply_phi(A, x, Vec::basis_vector(A.carrier, j));
        for (const auto& [r, c] : img.coeffs) out.at(r, j) = c;
    }
    return out;
}

}  // namespace detail

// The form-induced isomorphism A -> A* (same labels, dual role):
// forward sends u_j to the functional eta(u_j, ·).
struct PsiMap {
    LinMap forward;
    LinMap inverse;
};

// Builds psi and its exact inverse, then verifies the graded landing
// property (degree (x,g) lands on duals of degree (x,g^{-1})) and the
// transport equivariance on every carrier basis element.
inline PsiMap psi_map(const Gfa& A) {
    const Groupoid& G = A.groupoid;
    const int d = A.dim();
    Mat psi(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) psi.at(i, j) = A.eta.at(j, i);
    auto inv = mat_inverse(psi);
    if (!inv) throw Error("PsiNotInvertible", "the bilinear form is degenerate");
    PsiMap out{LinMap(A.carrier, A.carrier, psi), LinMap(A.carrier, A.carrier, *inv)};

    for (int j = 0; j < d; ++j) {
        auto [x, g] = A.degree[static_cast<std::size_t>(j)];
        int ginv = G.inverse(g);
        for (int i = 0; i < d; ++i)
            if (!grpdfrob::is_zero(psi.at(i, j)) &&
                A.degree[static_cast<std::size_t>(i)] != std::make_pair(x, ginv))
                throw Error("PsiMapInvariantViolated",
                            "functional of '" + A.carrier->label(j) + "' is supported off the inverse degree");
    }
    for (int x = 0; x < G.num_morphisms(); ++x) {
        for (int g : isotropy(G, G.tgt(x)).elements) {
            Mat rho = detail::induced_pair_action(A, g, x);
            Mat rho_dual =
                detail::induced_pair_action(A, G.conj_down(x, G.inverse(g)), G.inverse(x)).transpose();
            int src_deg = G.conj_down(x, g);
            for (int j = 0; j < d; ++j) {
                if (A.degree[static_cast<std::size_t>(j)] != std::make_pair(G.src(x), src_deg)) continue;
                Vec u = Vec::basis_vector(A.carrier, j);
                Vec lhs = LinMap(A.carrier, A.carrier, psi * rho).apply(u);
                Vec rhs = LinMap(A.carrier, A.carrier, rho_dual * psi).apply(u);
                if (lhs != rhs)
                    throw Error("PsiMapInvariantViolated", "transport equivariance fails at ('" +
                                                               G.morphism_id(g) + "','" + G.morphism_id(x) +
                                                               "','" + A.carrier->label(j) + "')");
            }
        }
    }
    return out;
}

struct InducedModule {
    DrinfeldDouble dd;
    HModule module;
    Bigrading grading;
};

// Every graded Frobenius algebra is a module over the double of its
// groupoid, acting through the grading and the groupoid action.
inline InducedModule gfa_to_module(const Gfa& A) {
    AxiomReport chk = check_gfa(A);
    if (!chk.all_pass())
        throw Error("GfaInvalid", "input fails '" + chk.first_failure()->name + "' at " + chk.first_failure()->witness);
    InducedModule out;
    out.dd = drinfeld_double(A.groupoid);
    out.module.algebra = out.dd.algebra;
    out.module.carrier = A.carrier;
    const DoubleTag& tag = out.dd.tag();
    out.module.action.reserve(static_cast<std::size_t>(out.dd.algebra->dim()));
    for (int b = 0; b < out.dd.algebra->dim(); ++b) {
        auto [g, x] = tag.pair_of_basis[static_cast<std::size_t>(b)];
        out.module.action.push_back(detail::induced_pair_action(A, g, x));
    }
    out.grading.degree = A.degree;
    return out;
}

// Forward direction of the correspondence: assembles the product on the
// truncated square, the unit against the object units, the counit through
// eta, and the coproduct by conjugating the dual of the opposite product
// with psi.
inline FrobeniusObjectData gfa_to_frobenius(const Gfa& A) {
    InducedModule ind = gfa_to_module(A);
    const int d = A.dim();

    ProductModule square = monoidal_product(ind.module, ind.module);
    UnitObject I = unit_object(ind.dd.algebra);
    const int di = I.module.dim();

    Mat amb(d, d * d), amb_op(d, d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                amb.at(k, i * d + j) = A.product_coeff(i, j, k);
                amb_op.at(k, i * d + j) = A.product_coeff(j, i, k);
            }
    LinMap m(square.module.carrier, A.carrier, amb * square.embed.mat);

    LinMap mu(I.module.carrier, A.carrier);
    for (int x = 0; x < di; ++x)
        for (const auto& [i, c] : A.unit.coeffs)
            if (A.degree[static_cast<std::size_t>(i)].first == x) mu.mat.at(i, x) = c;

    LinMap eps(A.carrier, I.module.carrier);
    for (int i = 0; i < d; ++i) {
        Rat v = 0;
        for (const auto& [j, c] : A.unit.coeffs) v += c * A.eta.at(i, j);
        eps.mat.at(A.degree[static_cast<std::size_t>(i)].first, i) = v;
    }

    PsiMap psi = psi_map(A);
    Mat m_op = amb_op * square.embed.mat;  // truncated square -> A
    Mat delta_mat = square.project.mat * detail::kron(psi.inverse.mat, psi.inverse.mat) *
                    square.project.mat.transpose() * m_op.transpose() * psi.forward.mat;
    LinMap delta(A.carrier, square.module.carrier, std::move(delta_mat));

    return make_frobenius_data(ind.dd, ind.module, ind.grading, std::move(m), std::move(mu), std::move(delta),
                               std::move(eps));
}

namespace detail {

// The backward data transformation without the precondition gate; it reads
// only m, mu, eps, the module and its grading (never the coproduct).
inline Gfa frobenius_to_gfa_data(const FrobeniusObjectData& F) {
    const DoubleTag& tag = F.dd.tag();
    const Groupoid& G = tag.groupoid;
    const int d = F.module.dim();

    Gfa A;
    A.groupoid = G;
    A.carrier = F.module.carrier;
    A.degree = F.grading.degree;

    Mat prod_amb = F.m.mat * F.square.project.mat;  // A⊗A -> A through the truncation
    A.product.assign(static_cast<std::size_t>(d) * d * d, Rat(0));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                A.product[(static_cast<std::size_t>(i) * d + j) * d + k] = prod_amb.at(k, i * d + j);

    A.unit = Vec(A.carrier);
    for (int x = 0; x < F.unitors.unit.module.dim(); ++x) {
        Vec col = F.mu.column(x);
        A.unit += col;
    }

    // eps(u) must land in the line of the unit-object basis vector of u's
    // object; the scalar there is the counit-coefficient functional.
    std::vector<Rat> eps_prime(static_cast<std::size_t>(d), Rat(0));
    for (int i = 0; i < d; ++i) {
        int x = A.degree[static_cast<std::size_t>(i)].first;
        for (int y = 0; y < F.unitors.unit.module.dim(); ++y) {
            const Rat& v = F.eps.mat.at(y, i);
            if (y == x)
                eps_prime[static_cast<std::size_t>(i)] = v;
            else if (!grpdfrob::is_zero(v))
                throw Error("InternalError", "counit is not supported on the object component of its argument");
        }
    }
    A.eta = Mat(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Rat s = 0;
            for (int k = 0; k < d; ++k) s += A.product[(static_cast<std::size_t>(i) * d + j) * d + k] *
                                              eps_prime[static_cast<std::size_t>(k)];
            A.eta.at(i, j) = s;
        }

    A.phi = groupoid_action(F.module, F.grading);
    return A;
}

}  // namespace detail

// Backward direction: a Frobenius object passing the algebra, coalgebra,
// Frobenius, and both module conditions induces a graded Frobenius algebra
// on the same carrier.
inline Gfa frobenius_to_gfa(const FrobeniusObjectData& F) {
    std::vector<std::string> failed;
    if (!check_algebra_object(F).all_pass()) failed.push_back("algebra object");
    if (!check_coalgebra_object(F).all_pass()) failed.push_back("coalgebra object");
    if (!check_frobenius_object(F).all_pass()) failed.push_back("frobenius object");
    if (!check_condition1(F)) failed.push_back("condition 1");
    if (!check_condition2(F).all_pass()) failed.push_back("condition 2");
    if (!failed.empty()) {
        std::string msg = "prechecks failed:";
        for (const auto& f : failed) msg += " [" + f + "]";
        throw Error("ConditionsNotMet", msg);
    }
    return detail::frobenius_to_gfa_data(F);
}

namespace detail {

inline void compare_mat(EqualityReport& rep, const std::string& component, const Mat& a, const Mat& b,
                        const std::vector<std::string>& row_labels, const std::vector<std::string>& col_labels) {
    if (a.rows != b.rows || a.cols != b.cols) {
        rep.add(component, "shape", std::to_string(a.rows) + "x" + std::to_string(a.cols),
                std::to_string(b.rows) + "x" + std::to_string(b.cols));
        return;
    }
    for (int r = 0; r < a.rows; ++r)
        for (int c = 0; c < a.cols; ++c)
            if (a.at(r, c) != b.at(r, c))
                rep.add(component, "(" + row_labels[static_cast<std::size_t>(r)] + "," +
                                       col_labels[static_cast<std::size_t>(c)] + ")",
                        rat_str(a.at(r, c)), rat_str(b.at(r, c)));
}

}  // namespace detail

// Forward then backward; the result must coincide with the input entry by
// entry on the same carrier (no isomorphism search).
inline EqualityReport roundtrip_gfa(const Gfa& A) {
    Gfa B = frobenius_to_gfa(gfa_to_frobenius(A));
    EqualityReport rep;
    if (!(A.groupoid == B.groupoid)) rep.add("groupoid", "tables", "input groupoid", "rebuilt groupoid");
    if (!same_basis(A.carrier, B.carrier)) {
        rep.add("carrier", "labels", "input labels", "rebuilt labels");
        return rep;
    }
    const int d = A.dim();
    for (int i = 0; i < d; ++i)
        if (A.degree[static_cast<std::size_t>(i)] != B.degree[static_cast<std::size_t>(i)]) {
            auto fmt = [&](std::pair<int, int> dg) {
                return "(" + A.groupoid.object_name(dg.first) + "," + A.groupoid.morphism_id(dg.second) + ")";
            };
            rep.add("grading", A.carrier->label(i), fmt(A.degree[static_cast<std::size_t>(i)]),
                    fmt(B.degree[static_cast<std::size_t>(i)]));
        }
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                if (A.product_coeff(i, j, k) != B.product_coeff(i, j, k))
                    rep.add("product",
                            "(" + A.carrier->label(i) + "," + A.carrier->label(j) + ")->" + A.carrier->label(k),
                            rat_str(A.product_coeff(i, j, k)), rat_str(B.product_coeff(i, j, k)));
    if (A.unit != B.unit) rep.add("unit", "vector", A.unit.str(), B.unit.str());
    detail::compare_mat(rep, "eta", A.eta, B.eta, A.carrier->labels(), A.carrier->labels());
    for (int m = 0; m < A.groupoid.num_morphisms(); ++m) {
        const LinMap& fa = A.phi.at(m);
        const LinMap& fb = B.phi.at(m);
        detail::compare_mat(rep, "phi[" + A.groupoid.morphism_id(m) + "]", fa.mat, fb.mat, fa.codomain->labels(),
                            fa.domain->labels());
    }
    return rep;
}

// Backward then forward; compares the structure maps componentwise. The
// coproduct comparison is reported alongside the rest (a mismatch there is a
// finding, not an error), so the backward step runs ungated: it never reads
// the coproduct, which lets a perturbed coproduct surface as mismatch
// entries instead of a precheck throw.
inline EqualityReport roundtrip_frobenius(const FrobeniusObjectData& F) {
    Gfa A = detail::frobenius_to_gfa_data(F);
    FrobeniusObjectData F2 = gfa_to_frobenius(A);
    EqualityReport rep;
    if (!same_basis(F.module.carrier, F2.module.carrier)) {
        rep.add("carrier", "labels", "input labels", "rebuilt labels");
        return rep;
    }
    detail::compare_mat(rep, "m", F.m.mat, F2.m.mat, F.m.codomain->labels(), F.m.domain->labels());
    detail::compare_mat(rep, "mu", F.mu.mat, F2.mu.mat, F.mu.codomain->labels(), F.mu.domain->labels());
    detail::compare_mat(rep, "eps", F.eps.mat, F2.eps.mat, F.eps.codomain->labels(), F.eps.domain->labels());
    detail::compare_mat(rep, "delta", F.delta.mat, F2.delta.mat, F.delta.codomain->labels(),
                        F.delta.domain->labels());
    return rep;
}

}  // namespace grpdfrob
