#include <catch2/catch_amalgamated.hpp>

#include "grpdfrob/correspondence.hpp"
#include "grpdfrob/fixtures.hpp"
#include "oracles.hpp"

using namespace grpdfrob;

TEST_CASE("the induced module acts through the grading and the groupoid action") {
    Gfa A = groupoid_ring_gfa(fixture_groupoid("z2"));
    InducedModule ind = gfa_to_module(A);
    REQUIRE(check_module(ind.module).all_pass());
    const DoubleTag& tag = ind.dd.tag();
    const Groupoid& G = tag.groupoid;
    int e = G.find_morphism("e"), g = G.find_morphism("g");

    // <g|g> is the identity on the degree-g line
    const Mat& act = ind.module.action_of(tag.basis_index(g, g));
    int gline = A.carrier->index("g");
    CHECK(act.at(gline, gline) == 1);
    CHECK(act.at(0, 0) == 0);

    // rho(1) = id on every fixture
    for (const auto& name : fixture_names()) {
        InducedModule m = gfa_to_module(groupoid_ring_gfa(fixture_groupoid(name)));
        CHECK(m.module.act(m.dd.algebra->unit()).is_identity());
        Decomposition dec = decompose(m.module);
        CHECK(!dec.refined);
        CHECK(dec.grading == m.grading);
    }
    (void)e;
}

TEST_CASE("the induced action vanishes off the source object component") {
    Gfa A = groupoid_ring_gfa(fixture_groupoid("pair2"));
    InducedModule ind = gfa_to_module(A);
    const DoubleTag& tag = ind.dd.tag();
    const Groupoid& G = tag.groupoid;
    for (int b = 0; b < ind.dd.algebra->dim(); ++b) {
        auto [g, x] = tag.pair_of_basis[static_cast<std::size_t>(b)];
        const Mat& act = ind.module.action_of(b);
        for (int c = 0; c < ind.module.dim(); ++c) {
            if (A.degree[static_cast<std::size_t>(c)].first == G.src(x)) continue;
            for (int r = 0; r < ind.module.dim(); ++r) CHECK(is_zero(act.at(r, c)));
        }
    }
}

TEST_CASE("forward construction on the Z/2 fixture has the frozen structure maps") {
    Gfa A = groupoid_ring_gfa(fixture_groupoid("z2"));
    FrobeniusObjectData F = gfa_to_frobenius(A);
    int e = A.carrier->index("e"), g = A.carrier->index("g");
    const BasisPtr& sq = F.square.module.carrier;

    // Delta(e) = e⊗e + g⊗g and Delta(g) = e⊗g + g⊗e (eta-dual of g is g)
    Vec de = F.delta.column(e);
    Vec expect_e(sq);
    expect_e.add_term(sq->index("(e,e)"), Rat(1));
    expect_e.add_term(sq->index("(g,g)"), Rat(1));
    CHECK(de == expect_e);
    Vec dg = F.delta.column(g);
    Vec expect_g(sq);
    expect_g.add_term(sq->index("(e,g)"), Rat(1));
    expect_g.add_term(sq->index("(g,e)"), Rat(1));
    CHECK(dg == expect_g);

    // eps(e) = 1 on the single object unit, eps(g) = 0
    CHECK(F.eps.mat.at(0, e) == 1);
    CHECK(F.eps.mat.at(0, g) == 0);

    // mu sends the object unit to the algebra unit
    CHECK(F.mu.column(0) == A.unit);
}

TEST_CASE("backward construction inverts the forward one on every fixture") {
    for (const auto& name : fixture_names()) {
        Gfa A = groupoid_ring_gfa(fixture_groupoid(name));
        FrobeniusObjectData F = gfa_to_frobenius(A);
        Gfa B = frobenius_to_gfa(F);
        AxiomReport rep = check_gfa(B);
        INFO(name << ": " << (rep.first_failure() ? rep.first_failure()->name : ""));
        CHECK(rep.all_pass());
        EqualityReport eq = roundtrip_gfa(A);
        INFO(name << " first mismatch: "
                  << (eq.equal() ? "" : eq.mismatches.front().component + " " + eq.mismatches.front().key));
        CHECK(eq.equal());
        CHECK(roundtrip_frobenius(F).equal());
    }
}

TEST_CASE("a frobenius object failing the identity-sum condition is rejected with the failure named") {
    Gfa A = groupoid_ring_gfa(fixture_groupoid("z2"));
    InducedModule ind = gfa_to_module(A);
    FrobeniusObjectData F = gfa_to_frobenius(A);
    const DoubleTag& tag = ind.dd.tag();
    int gidx = tag.groupoid.find_morphism("g");
    HModule twisted = ind.module;
    for (int b = 0; b < ind.dd.algebra->dim(); ++b)
        if (tag.pair_of_basis[static_cast<std::size_t>(b)].second == gidx)
            twisted.action[static_cast<std::size_t>(b)] = twisted.action_of(b) * Rat(-1);
    FrobeniusObjectData F2 = make_frobenius_data(ind.dd, twisted, ind.grading, F.m, F.mu, F.delta, F.eps);
    try {
        frobenius_to_gfa(F2);
        FAIL("expected ConditionsNotMet");
    } catch (const Error& err) {
        CHECK(err.code() == "ConditionsNotMet");
        CHECK(std::string(err.what()).find("condition 1") != std::string::npos);
    }
}

TEST_CASE("a perturbed coproduct shows up as coproduct mismatches only") {
    Gfa A = groupoid_ring_gfa(fixture_groupoid("z2"));
    FrobeniusObjectData F = gfa_to_frobenius(A);
    F.delta.mat.at(0, 0) += 1;
    EqualityReport eq = roundtrip_frobenius(F);
    CHECK(!eq.equal());
    for (const auto& mm : eq.mismatches) CHECK(mm.component == "delta");
}

TEST_CASE("duality map") {
    SECTION("identity matrix on the Z/2 fixture") {
        Gfa A = groupoid_ring_gfa(fixture_groupoid("z2"));
        PsiMap psi = psi_map(A);
        CHECK(psi.forward.mat == Mat::identity(2));
        CHECK(psi.inverse.mat == Mat::identity(2));
    }
    SECTION("two-sided inverse and dual-basis pairing on every fixture") {
        for (const auto& name : fixture_names()) {
            Gfa A = groupoid_ring_gfa(fixture_groupoid(name));
            PsiMap psi = psi_map(A);
            CHECK(psi.forward.mat * psi.inverse.mat == Mat::identity(A.dim()));
            CHECK(psi.inverse.mat * psi.forward.mat == Mat::identity(A.dim()));
            // psi(u_i) is the dual functional of uhat_i = psi^{-1}(u_i^*)
            for (int i = 0; i < A.dim(); ++i) {
                Vec fi = psi.forward.column(i);
                for (int jj = 0; jj < A.dim(); ++jj) {
                    Vec uhat_j = psi.inverse.column(jj);
                    Rat pairing = 0;
                    for (const auto& [k, c] : fi.coeffs) pairing += c * uhat_j.coeff(k);
                    CHECK(pairing == (i == jj ? 1 : 0));
                }
            }
        }
    }
    SECTION("degenerate form is rejected") {
        Gfa A = groupoid_ring_gfa(fixture_groupoid("z2"));
        A.eta.at(1, 0) = 0;
        A.eta.at(1, 1) = 0;
        CHECK_THROWS_AS(psi_map(A), Error);
    }
}

TEST_CASE("the conjugation coproduct agrees with the dual-basis summation oracle") {
    for (const auto& name : fixture_names()) {
        Gfa A = groupoid_ring_gfa(fixture_groupoid(name));
        FrobeniusObjectData F = gfa_to_frobenius(A);
        BasisPtr square_ambient = tensor_basis(A.carrier, A.carrier);
        for (int a = 0; a < A.dim(); ++a) {
            Vec via_psi(square_ambient);
            Vec col = F.delta.column(a);
            Vec amb = F.square.embed.apply(col);
            for (const auto& [t, c] : amb.coeffs) via_psi.add_term(t, c);
            Vec via_oracle = oracles::delta_dual_basis_oracle(A, a, square_ambient);
            INFO(name << " basis " << A.carrier->label(a));
            CHECK(via_psi == via_oracle);
        }
    }
}

TEST_CASE("derived grading facts of the constructed coproduct and counit") {
    for (const auto& name : fixture_names()) {
        Gfa A = groupoid_ring_gfa(fixture_groupoid(name));
        FrobeniusObjectData F = gfa_to_frobenius(A);
        const Groupoid& G = A.groupoid;
        // eps vanishes off the identity degree
        for (int i = 0; i < A.dim(); ++i) {
            auto [x, g] = A.degree[static_cast<std::size_t>(i)];
            if (g != G.identity(x)) CHECK(F.eps.column(i).is_zero());
        }
        // Delta lands in the convolution of degrees
        const BasisPtr& sq = F.square.module.carrier;
        for (int i = 0; i < A.dim(); ++i) {
            auto [x, g] = A.degree[static_cast<std::size_t>(i)];
            Vec amb = F.square.embed.apply(F.delta.column(i));
            for (const auto& [t, c] : amb.coeffs) {
                int l = t / A.dim(), r = t % A.dim();
                auto [xl, gl] = A.degree[static_cast<std::size_t>(l)];
                auto [xr, gr] = A.degree[static_cast<std::size_t>(r)];
                CHECK(xl == x);
                CHECK(xr == x);
                CHECK(G.compose(gl, gr) == g);
            }
        }
        (void)sq;
    }
}
