// Test-side oracles, kept independent of the implementation paths they
// check, plus deterministic random-structure generators for the
// serialization fuzz suites.
#pragma once

#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "grpdfrob/fixtures.hpp"
#include "grpdfrob/gfa.hpp"
#include "grpdfrob/groupoid.hpp"
#include "grpdfrob/linalg.hpp"
#include "grpdfrob/rep_cat.hpp"
#include "grpdfrob/weak_hopf.hpp"

namespace oracles {

using namespace grpdfrob;

// ---------------------------------------------------------------------------
// Classical finite-group Drinfeld double, written directly from the group
// table: basis pairs (g, x), product (g,x)(h,y) = [x^{-1}gx = h](g, xy),
// fiberwise-grouplike coproduct, counit supported on g = e, antipode
// (g,x) -> (x^{-1}g^{-1}x, x^{-1}). Used to cross-check the one-object
// specialization of the groupoid construction, entry by entry.
struct ClassicalDouble {
    int order = 0;                               // |G|
    std::vector<Rat> mult;                       // dense (n^2)^3 over pair indices p = g*order + x
    std::vector<Rat> comult;
    std::vector<Rat> counit;                     // n^2
    std::vector<std::vector<Rat>> antipode;      // dense columns
    std::vector<Rat> unit;                       // n^2
};

inline ClassicalDouble classical_double(const GroupTable& t) {
    const int n = t.order();
    const int N = n * n;
    const int e = t.identity();
    auto pidx = [n](int g, int x) { return g * n + x; };
    ClassicalDouble D;
    D.order = n;
    const std::size_t Ns = static_cast<std::size_t>(N);
    D.mult.assign(Ns * Ns * Ns, Rat(0));
    D.comult.assign(Ns * Ns * Ns, Rat(0));
    D.counit.assign(Ns, Rat(0));
    D.unit.assign(Ns, Rat(0));
    D.antipode.assign(Ns, std::vector<Rat>(Ns, Rat(0)));
    for (int g = 0; g < n; ++g)
        for (int x = 0; x < n; ++x) {
            const int p = pidx(g, x);
            for (int h = 0; h < n; ++h)
                for (int y = 0; y < n; ++y) {
                    int conj = t.mul(t.mul(t.inverse_of(x), g), x);
                    if (conj == h)
                        D.mult[(static_cast<std::size_t>(p) * Ns + pidx(h, y)) * Ns +
                               static_cast<std::size_t>(pidx(g, t.mul(x, y)))] = 1;
                }
            for (int g1 = 0; g1 < n; ++g1) {
                int g2 = t.mul(t.inverse_of(g1), g);
                D.comult[(static_cast<std::size_t>(p) * Ns + pidx(g1, x)) * Ns +
                         static_cast<std::size_t>(pidx(g2, x))] = 1;
            }
            D.counit[static_cast<std::size_t>(p)] = (g == e) ? 1 : 0;
            int xg = t.inverse_of(x);
            int sg = t.mul(t.mul(xg, t.inverse_of(g)), x);
            D.antipode[static_cast<std::size_t>(p)][static_cast<std::size_t>(pidx(sg, xg))] = 1;
            if (x == e) D.unit[static_cast<std::size_t>(p)] = 1;
        }
    return D;
}

// Maps the one-object double's basis labels onto classical pair indices via
// the group element names, so the two tables can be compared entrywise.
inline std::vector<int> pair_index_of_double_basis(const DrinfeldDouble& dd, const GroupTable& t) {
    const DoubleTag& tag = dd.tag();
    const int n = t.order();
    std::vector<int> out;
    for (const auto& [g, x] : tag.pair_of_basis) {
        int gi = -1, xi = -1;
        for (int k = 0; k < n; ++k) {
            if (t.elements[static_cast<std::size_t>(k)] == tag.groupoid.morphism_id(g)) gi = k;
            if (t.elements[static_cast<std::size_t>(k)] == tag.groupoid.morphism_id(x)) xi = k;
        }
        out.push_back(gi * n + xi);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Dual-basis coproduct summation: for a carrier basis vector u_a of the
// object component at x, Delta(u_a) = sum over l, m in that component of
// eta(u_a, uhat_m * uhat_l) u_l ⊗ u_m, where uhat_i is the eta-dual basis.
// Returns the coproduct column in the plain tensor square of the carrier.
inline Vec delta_dual_basis_oracle(const Gfa& A, int a, const BasisPtr& square_ambient) {
    const int d = A.dim();
    Mat etaT = A.eta.transpose();
    auto inv = mat_inverse(etaT);
    if (!inv) throw Error("PsiNotInvertible", "oracle requires a nondegenerate form");
    // uhat_i solves eta(uhat_i, u_j) = delta_{ij}.
    std::vector<Vec> uhat;
    for (int i = 0; i < d; ++i) {
        Vec v(A.carrier);
        for (int k = 0; k < d; ++k)
            if (!is_zero(inv->at(k, i))) v.add_term(k, inv->at(k, i));
        uhat.push_back(std::move(v));
    }
    const int obj = A.degree[static_cast<std::size_t>(a)].first;
    Vec out(square_ambient);
    Vec ua = Vec::basis_vector(A.carrier, a);
    for (int l = 0; l < d; ++l) {
        if (A.degree[static_cast<std::size_t>(l)].first != obj) continue;
        for (int m = 0; m < d; ++m) {
            if (A.degree[static_cast<std::size_t>(m)].first != obj) continue;
            Rat c = A.form(ua, A.mul(uhat[static_cast<std::size_t>(m)], uhat[static_cast<std::size_t>(l)]));
            if (!is_zero(c)) out.add_term(l * d + m, c);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Brute-force stabilizer of a point under a group action.
inline std::vector<int> stabilizer(const GroupAction& act, int point) {
    std::vector<int> out;
    for (int g = 0; g < act.group.order(); ++g)
        if (act.image[static_cast<std::size_t>(g)][static_cast<std::size_t>(point)] == point) out.push_back(g);
    return out;
}

// ---------------------------------------------------------------------------
// Deterministic random generators (serialization fuzz).

inline Rat random_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-999, 999);
    std::uniform_int_distribution<int> den(1, 99);
    return Rat(num(rng)) / Rat(den(rng));
}

inline BasisPtr random_basis(std::mt19937_64& rng, int max_size = 4) {
    std::uniform_int_distribution<int> size(1, max_size);
    int n = size(rng);
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("b" + std::to_string(i) + "_" + std::to_string(rng() % 1000));
    return make_basis(std::move(labels));
}

inline Vec random_vec(std::mt19937_64& rng, const BasisPtr& basis) {
    Vec v(basis);
    for (int i = 0; i < basis->size(); ++i)
        if (rng() % 2) v.add_term(i, random_rat(rng));
    return v;
}

inline Mat random_mat(std::mt19937_64& rng, int rows, int cols, int density_pct = 50) {
    Mat m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (static_cast<int>(rng() % 100) < density_pct) m.at(r, c) = random_rat(rng);
    return m;
}

inline Groupoid random_groupoid(std::mt19937_64& rng) {
    switch (rng() % 6) {
        case 0: return one_object_groupoid(group_trivial());
        case 1: return one_object_groupoid(group_z2());
        case 2: return one_object_groupoid(group_cyclic(3));
        case 3: return pair_groupoid(static_cast<int>(rng() % 3) + 1);
        case 4: return action_groupoid(z4_swap_action());
        default: return disjoint_union(one_object_groupoid(group_z2()), pair_groupoid(2));
    }
}

// Random structure-constant data over a random basis; not a valid weak Hopf
// algebra, which is irrelevant for serialization round trips.
inline QuantumGroupoid random_quantum_groupoid(std::mt19937_64& rng) {
    BasisPtr basis = random_basis(rng);
    const int n = basis->size();
    const std::size_t ns = static_cast<std::size_t>(n);
    std::vector<Rat> mult(ns * ns * ns), comult(ns * ns * ns), counit(ns);
    for (auto& c : mult)
        if (rng() % 4 == 0) c = random_rat(rng);
    for (auto& c : comult)
        if (rng() % 4 == 0) c = random_rat(rng);
    for (auto& c : counit) c = random_rat(rng);
    Vec unit = random_vec(rng, basis);
    LinMap antipode(basis, basis, random_mat(rng, n, n));
    return QuantumGroupoid(basis, std::move(mult), std::move(unit), std::move(comult), std::move(counit),
                           std::move(antipode));
}

inline Gfa random_gfa_data(std::mt19937_64& rng) {
    Gfa A;
    A.groupoid = random_groupoid(rng);
    const Groupoid& G = A.groupoid;
    std::vector<std::string> labels;
    int d = 0;
    for (int x = 0; x < G.num_objects(); ++x)
        for (int g : isotropy(G, x).elements) {
            int copies = static_cast<int>(rng() % 2) + 1;
            for (int c = 0; c < copies; ++c) {
                labels.push_back("u" + std::to_string(d++));
                A.degree.emplace_back(x, g);
            }
        }
    A.carrier = make_basis(std::move(labels));
    A.product.assign(static_cast<std::size_t>(d) * d * d, Rat(0));
    for (auto& c : A.product)
        if (rng() % 5 == 0) c = random_rat(rng);
    A.unit = random_vec(rng, A.carrier);
    A.eta = random_mat(rng, d, d);
    for (int m = 0; m < G.num_morphisms(); ++m) {
        BasisPtr dom = A.object_basis(G.src(m));
        BasisPtr cod = A.object_basis(G.tgt(m));
        A.phi.emplace(m, LinMap(dom, cod, random_mat(rng, cod->size(), dom->size())));
    }
    return A;
}

inline HModule random_module_data(std::mt19937_64& rng) {
    HModule M;
    M.algebra = std::make_shared<const QuantumGroupoid>(random_quantum_groupoid(rng));
    std::uniform_int_distribution<int> size(0, 3);
    int d = size(rng);
    std::vector<std::string> labels;
    for (int i = 0; i < d; ++i) labels.push_back("v" + std::to_string(i));
    M.carrier = make_basis(std::move(labels));
    for (int h = 0; h < M.algebra->dim(); ++h) M.action.push_back(random_mat(rng, d, d));
    return M;
}

}  // namespace oracles
