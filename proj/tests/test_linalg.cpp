#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "grpdfrob/linalg.hpp"

using namespace grpdfrob;

namespace {

Mat from_rows(std::vector<std::vector<int>> rows) {
    Mat m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) m.at(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    return m;
}

LinMap map_of(BasisPtr dom, BasisPtr cod, std::vector<std::vector<int>> rows) {
    return LinMap(std::move(dom), std::move(cod), from_rows(std::move(rows)));
}

// Random invertible matrix: product of unit upper and lower triangular.
Mat random_invertible(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> entry(-3, 3);
    Mat u = Mat::identity(n), l = Mat::identity(n);
    for (int r = 0; r < n; ++r)
        for (int c = r + 1; c < n; ++c) {
            u.at(r, c) = entry(rng);
            l.at(c, r) = entry(rng);
        }
    return l * u;
}

}  // namespace

TEST_CASE("labeled bases reject duplicates and resolve labels") {
    CHECK_THROWS_AS(make_basis({"a", "a"}), Error);
    BasisPtr b = make_basis({"x", "y", "z"});
    CHECK(b->size() == 3);
    CHECK(b->index("y") == 1);
    CHECK(b->find("w") == -1);
    CHECK_THROWS_AS(b->index("w"), Error);
}

TEST_CASE("tensor basis is lexicographic in (left order, right order)") {
    BasisPtr ab = make_basis({"a", "b"});
    BasisPtr c = make_basis({"c"});
    CHECK(tensor_basis(ab, c)->labels() == std::vector<std::string>{"(a,c)", "(b,c)"});
    CHECK(tensor_basis(make_basis({}), c)->size() == 0);
    CHECK(tensor_basis(make_basis({"a"}), make_basis({"a"}))->labels() == std::vector<std::string>{"(a,a)"});
}

TEST_CASE("tensor map is the kronecker product in tensor-basis order") {
    BasisPtr b2 = make_basis({"a", "b"});
    BasisPtr b3 = make_basis({"p", "q", "r"});
    CHECK(tensor_map(LinMap::identity(b2), LinMap::identity(b3)).mat == Mat::identity(6));
    LinMap f = map_of(b2, b2, {{1, 2}, {3, 4}});
    CHECK(tensor_map(f, LinMap::zero(b3, b3)).mat.is_zero());
    BasisPtr b1 = make_basis({"s"});
    LinMap two = map_of(b1, b1, {{2}});
    LinMap three = map_of(b1, b1, {{3}});
    CHECK(tensor_map(two, three).mat == from_rows({{6}}));

    // (f⊗g)∘(f'⊗g') = (f∘f')⊗(g∘g') on random small maps
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> entry(-2, 2);
    for (int trial = 0; trial < 25; ++trial) {
        Mat fm(2, 2), gm(3, 3), fm2(2, 2), gm2(3, 3);
        for (auto* m : {&fm, &gm, &fm2, &gm2})
            for (auto& x : m->a) x = entry(rng);
        LinMap F(b2, b2, fm), G(b3, b3, gm), F2(b2, b2, fm2), G2(b3, b3, gm2);
        CHECK(tensor_map(F, G).compose(tensor_map(F2, G2)) == tensor_map(F.compose(F2), G.compose(G2)));
    }
}

TEST_CASE("dual map transposes and is a contravariant involution") {
    BasisPtr b2 = make_basis({"a", "b"});
    BasisPtr b1 = make_basis({"s"});
    CHECK(dual_map(LinMap::identity(b2)) == LinMap::identity(b2));
    LinMap col = map_of(b1, b2, {{1}, {2}});
    LinMap row = dual_map(col);
    CHECK(row.mat == from_rows({{1, 2}}));
    CHECK(dual_map(dual_map(col)) == col);

    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> entry(-3, 3);
    Mat fm(2, 2), gm(2, 2);
    for (auto* m : {&fm, &gm})
        for (auto& x : m->a) x = entry(rng);
    LinMap f(b2, b2, fm), g(b2, b2, gm);
    CHECK(dual_map(g.compose(f)) == dual_map(f).compose(dual_map(g)));
}

TEST_CASE("image basis of idempotents") {
    BasisPtr b3 = make_basis({"a", "b", "c"});
    SECTION("identity has full image with identity embedding") {
        ImageBasis ib = image_basis(LinMap::identity(b3));
        CHECK(ib.basis->size() == 3);
        CHECK(ib.embedding.mat == Mat::identity(3));
        CHECK(ib.basis->labels() == b3->labels());
    }
    SECTION("zero map has empty image") {
        ImageBasis ib = image_basis(LinMap::zero(b3, b3));
        CHECK(ib.basis->size() == 0);
    }
    SECTION("coordinate projection keeps the pivot labels") {
        BasisPtr b4 = make_basis({"a", "b", "c", "d"});
        LinMap p = map_of(b4, b4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}});
        ImageBasis ib = image_basis(p);
        CHECK(ib.basis->labels() == std::vector<std::string>{"a", "b"});
        CHECK(ib.embedding.mat * ib.projection.mat == p.mat);
        CHECK(ib.projection.mat * ib.embedding.mat == Mat::identity(2));
    }
    SECTION("non-idempotents are rejected") {
        LinMap q = map_of(b3, b3, {{0, 1, 0}, {0, 0, 0}, {0, 0, 1}});
        CHECK_THROWS_AS(image_basis(q), Error);
    }
    SECTION("factorization laws hold for conjugated idempotents") {
        std::mt19937_64 rng(23);
        for (int trial = 0; trial < 20; ++trial) {
            int n = 4;
            Mat u = random_invertible(rng, n);
            Mat uinv = *mat_inverse(u);
            Mat diag(n, n);
            int expected_rank = 0;
            for (int i = 0; i < n; ++i)
                if (rng() % 2) {
                    diag.at(i, i) = 1;
                    ++expected_rank;
                }
            BasisPtr b = make_basis({"e0", "e1", "e2", "e3"});
            LinMap p(b, b, u * diag * uinv);
            ImageBasis ib = image_basis(p);
            CHECK(ib.basis->size() == expected_rank);
            CHECK(ib.embedding.mat * ib.projection.mat == p.mat);
            CHECK(ib.projection.mat * ib.embedding.mat == Mat::identity(expected_rank));
        }
    }
}

TEST_CASE("solve finds preimages exactly") {
    BasisPtr b2 = make_basis({"a", "b"});
    Vec v(b2);
    v.add_term(0, Rat(3));
    v.add_term(1, Rat(-5) / Rat(2));
    CHECK(solve(LinMap::identity(b2), v) == v);

    LinMap twice(b2, b2, Mat::identity(2) * Rat(2));
    Vec half = solve(twice, v);
    Vec expect(b2);
    expect.add_term(0, Rat(3) / Rat(2));
    expect.add_term(1, Rat(-5) / Rat(4));
    CHECK(half == expect);

    LinMap proj = map_of(b2, b2, {{1, 0}, {0, 0}});
    Vec e2 = Vec::basis_vector(b2, 1);
    CHECK_THROWS_AS(solve(proj, e2), Error);
}

TEST_CASE("inverse and rank") {
    BasisPtr b2 = make_basis({"a", "b"});
    LinMap f = map_of(b2, b2, {{1, 1}, {0, 1}});
    CHECK(inverse(f).mat == from_rows({{1, -1}, {0, 1}}));
    CHECK_THROWS_AS(inverse(map_of(b2, b2, {{1, 1}, {1, 1}})), Error);
    CHECK(rank(from_rows({{1, 2}, {2, 4}})) == 1);
    CHECK(rank(Mat::identity(3)) == 3);
    CHECK(rank(Mat(0, 0)) == 0);
}

TEST_CASE("sparse solver agrees with the dense path and reports nullity") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> entry(-2, 2);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 5;
        Mat a(n, n);
        for (auto& x : a.a) x = entry(rng);
        // make a consistent system: rhs = a * x0
        std::vector<Rat> x0(static_cast<std::size_t>(n));
        for (auto& x : x0) x = entry(rng);
        std::vector<Rat> rhs(static_cast<std::size_t>(n), Rat(0));
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) rhs[static_cast<std::size_t>(r)] += a.at(r, c) * x0[static_cast<std::size_t>(c)];
        std::vector<std::map<int, Rat>> rows(static_cast<std::size_t>(n));
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                if (!is_zero(a.at(r, c))) rows[static_cast<std::size_t>(r)][c] = a.at(r, c);
        auto sol = solve_sparse_system(n, rows, rhs);
        REQUIRE(sol.has_value());
        CHECK(sol->rank + sol->nullity == n);
        // the particular solution solves the system
        for (int r = 0; r < n; ++r) {
            Rat s = 0;
            for (int c = 0; c < n; ++c) s += a.at(r, c) * sol->x[static_cast<std::size_t>(c)];
            CHECK(s == rhs[static_cast<std::size_t>(r)]);
        }
    }
    // inconsistent system
    std::vector<std::map<int, Rat>> rows(2);
    rows[0][0] = 1;
    rows[1][0] = 1;
    auto bad = solve_sparse_system(1, rows, {Rat(1), Rat(2)});
    CHECK(!bad.has_value());
}
