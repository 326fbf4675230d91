// Algebra, coalgebra and Frobenius objects in the module category of a
// Drinfeld double, together with the two module-level conditions that
// characterize the objects inducing graded Frobenius algebras. All laws are
// checked on the truncated tensor carriers; images are verified to stay
// inside the truncated products rather than silently projected.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "grpdfrob/error.hpp"
#include "grpdfrob/linalg.hpp"
#include "grpdfrob/rep_cat.hpp"
#include "grpdfrob/report.hpp"
#include "grpdfrob/weak_hopf.hpp"

namespace grpdfrob {

struct FrobeniusObjectData {
    DrinfeldDouble dd;
    HModule module;
    Bigrading grading;
    ProductModule square;  // module ⊗̂ module
    UnitorData unitors;    // unit object, I⊗̂A, A⊗̂I, and both unitors
    LinMap m;      // square carrier -> carrier
    LinMap mu;     // unit carrier -> carrier
    LinMap delta;  // carrier -> square carrier
    LinMap eps;    // carrier -> unit carrier
};

// Assembles the derived carriers and validates shapes, the module laws, and
// that the stored grading is the idempotent decomposition of the module.
inline FrobeniusObjectData make_frobenius_data(DrinfeldDouble dd, HModule module, Bigrading grading, LinMap m,
                                               LinMap mu, LinMap delta, LinMap eps) {
    if (!module.algebra || !(module.algebra == dd.algebra || *module.algebra == *dd.algebra))
        throw Error("AlgebraMismatch", "module is not over the supplied double");
    AxiomReport mod = check_module(module);
    if (!mod.all_pass())
        throw Error("InvalidModule", "module fails '" + mod.first_failure()->name + "'");
    Decomposition dec = decompose(module);
    if (dec.refined || dec.grading != grading)
        throw Error("GradingMismatch", "supplied grading is not the idempotent decomposition of the module");

    FrobeniusObjectData F;
    F.dd = std::move(dd);
    F.module = std::move(module);
    F.grading = std::move(grading);
    F.square = monoidal_product(F.module, F.module);
    F.unitors = unitors(F.module);
    auto expect = [](const LinMap& f, const BasisPtr& dom, const BasisPtr& cod, const char* what) {
        if (!same_basis(f.domain, dom) || !same_basis(f.codomain, cod))
            throw Error("ShapeMismatch", std::string("map '") + what + "' does not match the derived carriers");
    };
    expect(m, F.square.module.carrier, F.module.carrier, "m");
    expect(mu, F.unitors.unit.module.carrier, F.module.carrier, "mu");
    expect(delta, F.module.carrier, F.square.module.carrier, "delta");
    expect(eps, F.module.carrier, F.unitors.unit.module.carrier, "eps");
    F.m = std::move(m);
    F.mu = std::move(mu);
    F.delta = std::move(delta);
    F.eps = std::move(eps);
    return F;
}

namespace detail {

// Raw Kronecker product (no basis bookkeeping); used for the flat ambient
// computations on plain tensor powers of a module carrier.
inline Mat kron(const Mat& A, const Mat& B) {
    Mat out(A.rows * B.rows, A.cols * B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            const Rat& x = A.at(i, k);
            if (grpdfrob::is_zero(x)) continue;
            for (int j = 0; j < B.rows; ++j)
                for (int l = 0; l < B.cols; ++l) {
                    const Rat& y = B.at(j, l);
                    if (!grpdfrob::is_zero(y)) out.at(i * B.rows + j, k * B.cols + l) = x * y;
                }
        }
    return out;
}

// rho123(1) = (rho⊗rho⊗rho)(Δ⊗id)Δ(1) on the plain triple tensor power.
inline Mat triple_unit_idempotent(const HModule& M) {
    const QuantumGroupoid& H = *M.algebra;
    const int n = H.dim();
    const int d = M.dim();
    Mat out(d * d * d, d * d * d);
    for (const auto& [t, c] : H.delta_unit().coeffs) {
        int a = t / n, b = t % n;
        for (const auto& [a1, a2, c2] : H.comult_basis(a)) {
            const Mat& A = M.action_of(a1);
            const Mat& B = M.action_of(a2);
            const Mat& C = M.action_of(b);
            Rat coeff = c * c2;
            for (int i1 = 0; i1 < d; ++i1)
                for (int j1 = 0; j1 < d; ++j1) {
                    const Rat& x = A.at(i1, j1);
                    if (grpdfrob::is_zero(x)) continue;
                    for (int i2 = 0; i2 < d; ++i2)
                        for (int j2 = 0; j2 < d; ++j2) {
                            const Rat& y = B.at(i2, j2);
                            if (grpdfrob::is_zero(y)) continue;
                            for (int i3 = 0; i3 < d; ++i3)
                                for (int j3 = 0; j3 < d; ++j3) {
                                    const Rat& z = C.at(i3, j3);
                                    if (grpdfrob::is_zero(z)) continue;
                                    out.at((i1 * d + i2) * d + i3, (j1 * d + j2) * d + j3) += coeff * x * y * z;
                                }
                        }
                }
        }
    }
    return out;
}

inline int first_nonlinear_index(const HModule& from, const HModule& to, const LinMap& f) {
    for (int h = 0; h < from.algebra->dim(); ++h)
        if (f.mat * from.action_of(h) != to.action_of(h) * f.mat) return h;
    return -1;
}

}  // namespace detail

inline AxiomReport check_algebra_object(const FrobeniusObjectData& F) {
    AxiomReport rep;
    const int d = F.module.dim();
    Mat Id = Mat::identity(d);
    Mat m_amb = F.m.mat * F.square.project.mat;                    // A⊗A -> A (through the truncation)
    Mat P2 = F.square.embed.mat * F.square.project.mat;            // flat idempotent of A ⊗̂ A

    {
        int bad = detail::first_nonlinear_index(F.square.module, F.module, F.m);
        rep.add("product is a module map", bad < 0, bad < 0 ? "" : F.dd.algebra->basis()->label(bad));
    }
    {
        int bad = detail::first_nonlinear_index(F.unitors.unit.module, F.module, F.mu);
        rep.add("unit morphism is a module map", bad < 0, bad < 0 ? "" : F.dd.algebra->basis()->label(bad));
    }
    {
        Mat E3 = detail::triple_unit_idempotent(F.module);
        Mat X1 = detail::kron(m_amb, Id) * E3;
        Mat X2 = detail::kron(Id, m_amb) * E3;
        bool member = (P2 * X1 == X1) && (P2 * X2 == X2);
        bool equal = m_amb * X1 == m_amb * X2;
        rep.add("product associative on the truncated triple product", member && equal,
                member ? "triple product columns differ" : "image leaves the truncated product");
    }
    {
        Mat lhs_in = detail::kron(F.mu.mat, Id) * F.unitors.left_dom.embed.mat;
        bool member = P2 * lhs_in == lhs_in;
        bool equal = m_amb * lhs_in == F.unitors.left.mat;
        Mat rhs_in = detail::kron(Id, F.mu.mat) * F.unitors.right_dom.embed.mat;
        bool member2 = P2 * rhs_in == rhs_in;
        bool equal2 = m_amb * rhs_in == F.unitors.right.mat;
        rep.add("unit laws against the unitors", member && equal && member2 && equal2,
                (member && member2) ? "unit law columns differ" : "image leaves the truncated product");
    }
    {
        BraidingData c = braiding(F.module, F.module, F.dd.r);
        if (!same_basis(c.source.module.carrier, F.square.module.carrier) ||
            !same_basis(c.target.module.carrier, F.square.module.carrier))
            throw Error("InternalError", "braiding carriers disagree with the stored square");
        rep.add("product commutative under the braiding", F.m.compose(c.map) == F.m, "m∘c != m");
    }
    return rep;
}

inline AxiomReport check_coalgebra_object(const FrobeniusObjectData& F) {
    AxiomReport rep;
    const int d = F.module.dim();
    Mat Id = Mat::identity(d);
    Mat delta_amb = F.square.embed.mat * F.delta.mat;  // A -> A⊗A

    {
        int bad = detail::first_nonlinear_index(F.module, F.square.module, F.delta);
        rep.add("coproduct is a module map", bad < 0, bad < 0 ? "" : F.dd.algebra->basis()->label(bad));
    }
    {
        int bad = detail::first_nonlinear_index(F.module, F.unitors.unit.module, F.eps);
        rep.add("counit is a module map", bad < 0, bad < 0 ? "" : F.dd.algebra->basis()->label(bad));
    }
    {
        Mat E3 = detail::triple_unit_idempotent(F.module);
        Mat X1 = detail::kron(delta_amb, Id) * delta_amb;
        Mat X2 = detail::kron(Id, delta_amb) * delta_amb;
        bool member = (E3 * X1 == X1) && (E3 * X2 == X2);
        rep.add("coproduct coassociative on the truncated triple product", member && X1 == X2,
                member ? "triple product columns differ" : "image leaves the truncated product");
    }
    {
        Mat PL = F.unitors.left_dom.embed.mat * F.unitors.left_dom.project.mat;
        Mat in_l = detail::kron(F.eps.mat, Id) * delta_amb;
        bool member_l = PL * in_l == in_l;
        Mat lhs = F.unitors.left.mat * F.unitors.left_dom.project.mat * in_l;
        Mat PR = F.unitors.right_dom.embed.mat * F.unitors.right_dom.project.mat;
        Mat in_r = detail::kron(Id, F.eps.mat) * delta_amb;
        bool member_r = PR * in_r == in_r;
        Mat rhs = F.unitors.right.mat * F.unitors.right_dom.project.mat * in_r;
        rep.add("counit laws against the unitors", member_l && member_r && lhs == Id && rhs == Id,
                (member_l && member_r) ? "counit law columns differ" : "image leaves the truncated product");
    }
    {
        BraidingData c = braiding(F.module, F.module, F.dd.r);
        rep.add("coproduct co-commutative under the braiding", c.map.compose(F.delta) == F.delta, "c∘Δ != Δ");
    }
    return rep;
}

inline AxiomReport check_frobenius_object(const FrobeniusObjectData& F) {
    AxiomReport rep;
    const int d = F.module.dim();
    Mat Id = Mat::identity(d);
    Mat m_amb = F.m.mat * F.square.project.mat;
    Mat delta_amb = F.square.embed.mat * F.delta.mat;
    Mat P2 = F.square.embed.mat * F.square.project.mat;
    Mat E3 = detail::triple_unit_idempotent(F.module);
    Mat L = delta_amb * m_amb * P2;  // Δ∘m on truncated inputs, flat output

    {
        Mat X = detail::kron(Id, delta_amb) * P2;
        bool member = E3 * X == X;
        Mat Y = detail::kron(m_amb, Id) * X;
        bool member2 = P2 * Y == Y;
        rep.add("frobenius relation (right expansion)", member && member2 && L == Y,
                (member && member2) ? "relation columns differ" : "image leaves the truncated product");
    }
    {
        Mat X = detail::kron(delta_amb, Id) * P2;
        bool member = E3 * X == X;
        Mat Y = detail::kron(Id, m_amb) * X;
        bool member2 = P2 * Y == Y;
        rep.add("frobenius relation (left expansion)", member && member2 && L == Y,
                (member && member2) ? "relation columns differ" : "image leaves the truncated product");
    }
    return rep;
}

// Σ_x Σ_{g loops at x} rho(<g|g>) = id.
inline bool check_condition1(const FrobeniusObjectData& F) {
    const DoubleTag& tag = F.dd.tag();
    const Groupoid& G = tag.groupoid;
    const int d = F.module.dim();
    Mat sum(d, d);
    for (int x = 0; x < G.num_objects(); ++x)
        for (int g : isotropy(G, x).elements) sum = sum + F.module.action_of(tag.basis_index(g, g));
    return sum.is_identity();
}

// Trace identity over all (object, g, h, basis c of the commutator
// component), with left multiplication defined through the truncated square.
inline AxiomReport check_condition2(const FrobeniusObjectData& F) {
    AxiomReport rep;
    const DoubleTag& tag = F.dd.tag();
    const Groupoid& G = tag.groupoid;
    const int d = F.module.dim();
    Mat m_amb = F.m.mat * F.square.project.mat;

    bool ok = true;
    std::string first;
    std::vector<std::string> failures;
    for (int x = 0; x < G.num_objects(); ++x) {
        auto loops = isotropy(G, x).elements;
        for (int g : loops)
            for (int h : loops) {
                int comm = G.commutator(g, h);
                for (int ci = 0; ci < d; ++ci) {
                    if (F.grading.degree[static_cast<std::size_t>(ci)] != std::make_pair(x, comm)) continue;
                    // l_c(v) = m(c ⊗ v); as a matrix, insert c on the left leg.
                    Mat inj(d * d, d);
                    for (int j = 0; j < d; ++j) inj.at(ci * d + j, j) = 1;
                    Mat lc = m_amb * inj;
                    Rat lhs = (lc * F.module.action_of(tag.basis_index(G.conj_up(h, g), h))).trace();
                    Rat rhs = (F.module.action_of(tag.basis_index(h, G.inverse(g))) * lc *
                               F.module.action_of(tag.basis_index(h, G.identity(x))))
                                  .trace();
                    if (lhs != rhs) {
                        std::string wit = "(" + G.object_name(x) + "," + G.morphism_id(g) + "," + G.morphism_id(h) +
                                          "," + F.module.carrier->label(ci) + ")";
                        if (ok) first = wit;
                        ok = false;
                        failures.push_back(wit);
                    }
                }
            }
    }
    rep.add("trace condition on the module", ok, first);
    for (const auto& w : failures) rep.checks.push_back({"trace condition witness", false, w});
    return rep;
}

// The five prechecks a Frobenius object must pass before it induces a graded
// Frobenius algebra; returned as one combined report.
inline AxiomReport frobenius_prechecks(const FrobeniusObjectData& F) {
    AxiomReport all;
    all.merge(check_algebra_object(F));
    all.merge(check_coalgebra_object(F));
    all.merge(check_frobenius_object(F));
    all.add("module action sums to identity over self-paired loops", check_condition1(F), "sum differs from id");
    all.merge(check_condition2(F));
    return all;
}

}  // namespace grpdfrob
