// The monoidal category of finite-dimensional left modules over a quantum
// groupoid: truncated tensor product, unit object, unitors, braiding, and the
// Drinfeld-double-specific object/isotropy bigrading with its groupoid action.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grpdfrob/error.hpp"
#include "grpdfrob/linalg.hpp"
#include "grpdfrob/report.hpp"
#include "grpdfrob/weak_hopf.hpp"

namespace grpdfrob {

// A representation: one action matrix per algebra basis element.
struct HModule {
    AlgebraPtr algebra;
    BasisPtr carrier;
    std::vector<Mat> action;

    int dim() const { return carrier->size(); }

    const Mat& action_of(int algebra_basis_index) const {
        return action[static_cast<std::size_t>(algebra_basis_index)];
    }

    Mat act(const Vec& h) const {
        Mat out(carrier->size(), carrier->size());
        for (const auto& [i, c] : h.coeffs) {
            const Mat& a = action_of(i);
            for (std::size_t k = 0; k < a.a.size(); ++k)
                if (!grpdfrob::is_zero(a.a[k])) out.a[k] += c * a.a[k];
        }
        return out;
    }

    LinMap act_map(const Vec& h) const { return LinMap(carrier, carrier, act(h)); }

    bool operator==(const HModule& o) const {
        return same_basis(carrier, o.carrier) && action == o.action &&
               ((algebra == o.algebra) || (algebra && o.algebra && *algebra == *o.algebra));
    }
    bool operator!=(const HModule& o) const { return !(*this == o); }
};

inline AxiomReport check_module(const HModule& M) {
    AxiomReport rep;
    const int n = M.algebra->dim();
    {
        bool ok = static_cast<int>(M.action.size()) == n;
        for (const auto& a : M.action)
            if (a.rows != M.dim() || a.cols != M.dim()) ok = false;
        rep.add("action matrices shaped carrier x carrier", ok, "shape");
        if (!ok) return rep;
    }
    rep.add("action of unit is identity", M.act(M.algebra->unit()).is_identity(), "unit");
    {
        long bad = detail::first_failure(static_cast<long>(n) * n, [&](long idx) {
            int i = static_cast<int>(idx / n), j = static_cast<int>(idx % n);
            return M.action_of(i) * M.action_of(j) == M.act(M.algebra->basis_mul(i, j));
        });
        rep.add("action respects products", bad < 0,
                bad < 0 ? ""
                        : "(" + M.algebra->basis()->label(static_cast<int>(bad / n)) + "," +
                              M.algebra->basis()->label(static_cast<int>(bad % n)) + ")");
    }
    return rep;
}

// Left multiplication on the algebra itself.
inline HModule regular_module(const AlgebraPtr& H) {
    HModule M;
    M.algebra = H;
    M.carrier = H->basis();
    const int n = H->dim();
    M.action.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Mat a(n, n);
        for (int j = 0; j < n; ++j)
            for (const auto& [k, c] : H->mul_basis(i, j)) a.at(k, j) = c;
        M.action.push_back(std::move(a));
    }
    return M;
}

inline HModule zero_module(const AlgebraPtr& H) {
    HModule M;
    M.algebra = H;
    M.carrier = make_basis({});
    M.action.assign(static_cast<std::size_t>(H->dim()), Mat(0, 0));
    return M;
}

// Carrier-label bigrading by (object, isotropy element) for modules over a
// Drinfeld double.
struct Bigrading {
    std::vector<std::pair<int, int>> degree;  // carrier index -> (object, loop morphism)

    std::vector<int> component(int object, int loop) const {
        std::vector<int> out;
        for (int i = 0; i < static_cast<int>(degree.size()); ++i)
            if (degree[static_cast<std::size_t>(i)] == std::make_pair(object, loop)) out.push_back(i);
        return out;
    }

    std::vector<int> object_component(int object) const {
        std::vector<int> out;
        for (int i = 0; i < static_cast<int>(degree.size()); ++i)
            if (degree[static_cast<std::size_t>(i)].first == object) out.push_back(i);
        return out;
    }

    bool operator==(const Bigrading& o) const { return degree == o.degree; }
    bool operator!=(const Bigrading& o) const { return !(*this == o); }
};

struct Decomposition {
    HModule module;  // module in a homogeneous basis (equal to the input when already aligned)
    Bigrading grading;
    LinMap to_homogeneous;    // input carrier -> homogeneous carrier
    LinMap from_homogeneous;  // homogeneous carrier -> input carrier
    bool refined = false;     // true when a change of basis was necessary
};

// Splits the carrier along the commuting idempotents rho(<g|e_x>). If every
// input basis vector is already homogeneous the input basis is kept;
// otherwise the module is re-expressed in a refined basis with the change of
// basis recorded.
inline Decomposition decompose(const HModule& M) {
    if (!M.algebra->double_tag()) throw Error("NotADouble", "decompose requires a module over a Drinfeld double");
    const DoubleTag& tag = *M.algebra->double_tag();
    const Groupoid& G = tag.groupoid;
    const int d = M.dim();

    std::vector<std::pair<int, int>> idempotents;  // (object, loop)
    for (int x = 0; x < G.num_objects(); ++x)
        for (int g : isotropy(G, x).elements) idempotents.emplace_back(x, g);

    // Aligned path: each carrier vector is fixed by exactly one idempotent
    // and killed by the rest.
    Decomposition out;
    out.grading.degree.assign(static_cast<std::size_t>(d), {-1, -1});
    bool aligned = true;
    for (int i = 0; i < d && aligned; ++i) {
        int hits = 0;
        for (const auto& [x, g] : idempotents) {
            const Mat& P = M.action_of(tag.basis_index(g, G.identity(x)));
            bool fixes = true, kills = true;
            for (int r = 0; r < d; ++r) {
                const Rat& v = P.at(r, i);
                if (v != (r == i ? 1 : 0)) fixes = false;
                if (!grpdfrob::is_zero(v)) kills = false;
            }
            if (fixes) {
                ++hits;
                out.grading.degree[static_cast<std::size_t>(i)] = {x, g};
            } else if (!kills) {
                aligned = false;
                break;
            }
        }
        if (hits != 1) aligned = false;
    }
    if (aligned) {
        out.module = M;
        out.to_homogeneous = LinMap::identity(M.carrier);
        out.from_homogeneous = LinMap::identity(M.carrier);
        out.refined = false;
        return out;
    }

    // Refined path: concatenate image bases of the idempotents.
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> degree;
    Mat U(d, 0);
    std::vector<Vec> columns;
    for (const auto& [x, g] : idempotents) {
        LinMap P(M.carrier, M.carrier, M.action_of(tag.basis_index(g, G.identity(x))));
        ImageBasis ib = image_basis(P);
        for (int k = 0; k < ib.basis->size(); ++k) {
            labels.push_back(G.object_name(x) + ":" + G.morphism_id(g) + ":" + std::to_string(k));
            degree.emplace_back(x, g);
            columns.push_back(ib.embedding.column(k));
        }
    }
    if (static_cast<int>(columns.size()) != d)
        throw Error("DecompositionFailed", "idempotent images do not sum to the carrier");
    U = Mat(d, d);
    for (int c = 0; c < d; ++c)
        for (const auto& [r, v] : columns[static_cast<std::size_t>(c)].coeffs) U.at(r, c) = v;
    auto Uinv = mat_inverse(U);
    if (!Uinv) throw Error("DecompositionFailed", "change of basis is singular");

    BasisPtr refined_basis = make_basis(std::move(labels));
    out.module.algebra = M.algebra;
    out.module.carrier = refined_basis;
    out.module.action.reserve(M.action.size());
    for (const Mat& a : M.action) out.module.action.push_back(*Uinv * a * U);
    out.grading.degree = std::move(degree);
    out.to_homogeneous = LinMap(M.carrier, refined_basis, *Uinv);
    out.from_homogeneous = LinMap(refined_basis, M.carrier, U);
    out.refined = true;
    return out;
}

// Sub-bases of the carrier cut out by the object grading.
struct ObjectComponents {
    std::vector<std::vector<int>> indices;  // per object
    std::vector<BasisPtr> basis;            // per object
};

inline ObjectComponents object_components(const HModule& M, const Bigrading& grading) {
    const DoubleTag& tag = *M.algebra->double_tag();
    ObjectComponents oc;
    oc.indices.resize(static_cast<std::size_t>(tag.groupoid.num_objects()));
    for (int i = 0; i < M.dim(); ++i)
        oc.indices[static_cast<std::size_t>(grading.degree[static_cast<std::size_t>(i)].first)].push_back(i);
    for (const auto& idx : oc.indices) {
        std::vector<std::string> labels;
        for (int i : idx) labels.push_back(M.carrier->label(i));
        oc.basis.push_back(make_basis(std::move(labels)));
    }
    return oc;
}

// phi(x) = sum over loops g at t(x) of rho(<g|x>), restricted to the source
// object component; an isomorphism onto the target object component.
inline std::map<int, LinMap> groupoid_action(const HModule& M, const Bigrading& grading) {
    if (!M.algebra->double_tag()) throw Error("NotADouble", "groupoid action requires a Drinfeld double module");
    const DoubleTag& tag = *M.algebra->double_tag();
    const Groupoid& G = tag.groupoid;
    ObjectComponents oc = object_components(M, grading);

    std::map<int, LinMap> phi;
    for (int x = 0; x < G.num_morphisms(); ++x) {
        const int sx = G.src(x), tx = G.tgt(x);
        Mat full(M.dim(), M.dim());
        for (int g : isotropy(G, tx).elements) full = full + M.action_of(tag.basis_index(g, x));
        // The full-carrier sum must be supported on the (target, source)
        // block; anything else means the grading does not match the module.
        const auto& cols = oc.indices[static_cast<std::size_t>(sx)];
        const auto& rowsv = oc.indices[static_cast<std::size_t>(tx)];
        std::vector<int> row_of(static_cast<std::size_t>(M.dim()), -1);
        for (int r = 0; r < static_cast<int>(rowsv.size()); ++r)
            row_of[static_cast<std::size_t>(rowsv[static_cast<std::size_t>(r)])] = r;
        LinMap f(oc.basis[static_cast<std::size_t>(sx)], oc.basis[static_cast<std::size_t>(tx)]);
        for (int r = 0; r < M.dim(); ++r)
            for (int c = 0; c < M.dim(); ++c) {
                const Rat& v = full.at(r, c);
                if (grpdfrob::is_zero(v)) continue;
                bool col_in = grading.degree[static_cast<std::size_t>(c)].first == sx;
                bool row_in = row_of[static_cast<std::size_t>(r)] >= 0;
                if (!col_in)
                    continue;  // action on other object components is checked below
                if (!row_in)
                    throw Error("GradingMismatch", "groupoid action leaves the target component at morphism " +
                                                       G.morphism_id(x));
                int cc = 0;
                for (int k = 0; k < static_cast<int>(cols.size()); ++k)
                    if (cols[static_cast<std::size_t>(k)] == c) cc = k;
                f.mat.at(row_of[static_cast<std::size_t>(r)], cc) = v;
            }
        // Sanity: the sum must kill every non-source component.
        for (int c = 0; c < M.dim(); ++c) {
            if (grading.degree[static_cast<std::size_t>(c)].first == sx) continue;
            for (int r = 0; r < M.dim(); ++r)
                if (!grpdfrob::is_zero(full.at(r, c)))
                    throw Error("GradingMismatch",
                                "groupoid action does not vanish off the source component at morphism " +
                                    G.morphism_id(x));
        }
        phi.emplace(x, std::move(f));
    }
    return phi;
}

// Truncated tensor product: the image of rho12(1) inside the plain tensor
// product, with the compressed action. embed/project realize the subspace.
struct ProductModule {
    HModule module;
    LinMap embed;
    LinMap project;
};

inline Mat coproduct_action(const HModule& M, const HModule& N, const Vec& h) {
    // rho12(h) = (rho_M ⊗ rho_N)∘Δ(h) on the plain tensor product.
    const QuantumGroupoid& H = *M.algebra;
    const int n = H.dim();
    Mat out(M.dim() * N.dim(), M.dim() * N.dim());
    Vec dh = H.delta(h);
    for (const auto& [t, c] : dh.coeffs) {
        int a = t / n, b = t % n;
        const Mat& A = M.action_of(a);
        const Mat& B = N.action_of(b);
        for (int i = 0; i < A.rows; ++i)
            for (int k = 0; k < A.cols; ++k) {
                const Rat& x = A.at(i, k);
                if (grpdfrob::is_zero(x)) continue;
                for (int j = 0; j < B.rows; ++j)
                    for (int l = 0; l < B.cols; ++l) {
                        const Rat& y = B.at(j, l);
                        if (grpdfrob::is_zero(y)) continue;
                        out.at(tensor_index(i, j, B.rows), tensor_index(k, l, B.cols)) += c * x * y;
                    }
            }
    }
    return out;
}

inline ProductModule monoidal_product(const HModule& M, const HModule& N) {
    if (!(M.algebra == N.algebra || *M.algebra == *N.algebra))
        throw Error("AlgebraMismatch", "monoidal product requires modules over the same algebra");
    BasisPtr ambient = tensor_basis(M.carrier, N.carrier);
    LinMap P(ambient, ambient, coproduct_action(M, N, M.algebra->unit()));
    ImageBasis ib = image_basis(P);

    ProductModule out;
    out.module.algebra = M.algebra;
    out.module.carrier = ib.basis;
    out.embed = ib.embedding;
    out.project = ib.projection;
    const int n = M.algebra->dim();
    out.module.action.reserve(static_cast<std::size_t>(n));
    for (int h = 0; h < n; ++h) {
        Mat amb = coproduct_action(M, N, Vec::basis_vector(M.algebra->basis(), h));
        out.module.action.push_back(ib.projection.mat * amb * ib.embedding.mat);
    }

    // Cross-check against the object-graded description when we are over a
    // double: the carrier dimension must be the sum over objects of
    // dim(M^x)·dim(N^x). Disagreement is a hard error.
    if (M.algebra->double_tag()) {
        Decomposition dm = decompose(M);
        Decomposition dn = decompose(N);
        const int nobj = M.algebra->double_tag()->groupoid.num_objects();
        int expected = 0;
        for (int x = 0; x < nobj; ++x)
            expected += static_cast<int>(dm.grading.object_component(x).size()) *
                        static_cast<int>(dn.grading.object_component(x).size());
        if (expected != out.module.dim())
            throw Error("InternalError", "monoidal product dimension disagrees with the graded decomposition");
    }
    return out;
}

// Unit object: the image of the counit-target projection, with action
// sigma(h) z = eps_t(h z). Over a double the canonical carrier {1^x} is used
// and the delta-formula description of the action is asserted.
struct UnitObject {
    HModule module;
    LinMap embed;    // carrier -> algebra basis (as elements of the algebra)
    LinMap project;  // algebra -> carrier coordinates of eps_t
};

inline UnitObject unit_object(const AlgebraPtr& H) {
    LinMap et = counit_target_map(*H);
    UnitObject out;
    out.module.algebra = H;
    const int n = H->dim();

    if (H->double_tag()) {
        const DoubleTag& tag = *H->double_tag();
        const Groupoid& G = tag.groupoid;
        const int nobj = G.num_objects();
        std::vector<std::string> labels;
        std::vector<Vec> ones;
        for (int x = 0; x < nobj; ++x) {
            labels.push_back("1^" + G.object_name(x));
            ones.push_back(double_unit_component(*H, x));
        }
        BasisPtr carrier = make_basis(std::move(labels));
        LinMap embed(carrier, H->basis());
        for (int x = 0; x < nobj; ++x)
            for (const auto& [i, c] : ones[static_cast<std::size_t>(x)].coeffs) embed.mat.at(i, x) = c;
        for (int x = 0; x < nobj; ++x)
            if (et.apply(ones[static_cast<std::size_t>(x)]) != ones[static_cast<std::size_t>(x)])
                throw Error("InternalError", "counit-target map does not fix the object units");
        if (rank(et.mat) != nobj)
            throw Error("InternalError", "counit-target image dimension differs from object count");
        // Coordinates of eps_t(h): the coefficient of <e_x|e_x> identifies
        // the 1^x component; verified exact below.
        LinMap project(H->basis(), carrier);
        for (int h = 0; h < n; ++h) {
            Vec v = et.column(h);
            Vec rebuilt(H->basis());
            for (int x = 0; x < nobj; ++x) {
                int e = G.identity(x);
                Rat lambda = v.coeff(tag.basis_index(e, e));
                project.mat.at(x, h) = lambda;
                rebuilt += lambda * ones[static_cast<std::size_t>(x)];
            }
            if (rebuilt != v) throw Error("InternalError", "counit-target image escapes the span of object units");
        }
        out.embed = embed;
        out.project = project;
        out.module.carrier = carrier;
    } else {
        if ((et.mat * et.mat) != et.mat) throw Error("InternalError", "counit-target map is not idempotent");
        ImageBasis ib = image_basis(et);
        out.embed = ib.embedding;
        out.project = ib.projection;
        out.module.carrier = ib.basis;
    }

    const int d = out.module.carrier->size();
    out.module.action.reserve(static_cast<std::size_t>(n));
    for (int h = 0; h < n; ++h) {
        Mat a(d, d);
        for (int z = 0; z < d; ++z) {
            Vec hz = H->mul(Vec::basis_vector(H->basis(), h), out.embed.column(z));
            Vec col = out.project.apply(et.apply(hz));
            for (const auto& [r, c] : col.coeffs) a.at(r, z) = c;
        }
        out.module.action.push_back(std::move(a));
    }

    if (H->double_tag()) {
        // Assert the closed-form action <h|y> ▷ 1^x = [s(y)=x][h=e_{t(y)}] 1^{s(h)}.
        const DoubleTag& tag = *H->double_tag();
        const Groupoid& G = tag.groupoid;
        for (int b = 0; b < n; ++b) {
            auto [h, y] = tag.pair_of_basis[static_cast<std::size_t>(b)];
            const Mat& a = out.module.action[static_cast<std::size_t>(b)];
            for (int x = 0; x < out.module.dim(); ++x) {
                Vec expect(out.module.carrier);
                if (G.src(y) == x && h == G.identity(G.tgt(y))) expect.add_term(G.src(h), Rat(1));
                for (int r = 0; r < out.module.dim(); ++r)
                    if (a.at(r, x) != expect.coeff(r))
                        throw Error("InternalError", "unit object action differs from its closed form");
            }
        }
    }
    return out;
}

inline bool is_module_map(const HModule& from, const HModule& to, const LinMap& f) {
    if (!same_basis(f.domain, from.carrier) || !same_basis(f.codomain, to.carrier)) return false;
    for (int h = 0; h < from.algebra->dim(); ++h)
        if (f.mat * from.action_of(h) != to.action_of(h) * f.mat) return false;
    return true;
}

// Left and right unitors. Defined on the projected generators
// (l(P(z⊗a)) = rho(z)a, r(P(a⊗z)) = rho(S(z))a); well-definedness of that
// prescription is an exact check here, not an assumption.
struct UnitorData {
    UnitObject unit;
    ProductModule left_dom;   // I ⊗̂ M
    ProductModule right_dom;  // M ⊗̂ I
    LinMap left;
    LinMap right;
};

inline UnitorData unitors(const HModule& M) {
    UnitorData out;
    out.unit = unit_object(M.algebra);
    const HModule& I = out.unit.module;
    out.left_dom = monoidal_product(I, M);
    out.right_dom = monoidal_product(M, I);

    const int di = I.dim(), dm = M.dim();
    Mat T(dm, di * dm);
    for (int z = 0; z < di; ++z) {
        Mat rz = M.act(out.unit.embed.column(z));
        for (int j = 0; j < dm; ++j)
            for (int r = 0; r < dm; ++r) T.at(r, tensor_index(z, j, dm)) = rz.at(r, j);
    }
    Mat P = out.left_dom.embed.mat * out.left_dom.project.mat;
    if (T * P != T) throw Error("UnitorIllDefined", "left unitor prescription is not constant on fibers");
    out.left = LinMap(out.left_dom.module.carrier, M.carrier, T * out.left_dom.embed.mat);

    Mat TS(dm, dm * di);
    for (int z = 0; z < di; ++z) {
        Mat rsz = M.act(M.algebra->antipode().apply(out.unit.embed.column(z)));
        for (int j = 0; j < dm; ++j)
            for (int r = 0; r < dm; ++r) TS.at(r, tensor_index(j, z, di)) = rsz.at(r, j);
    }
    Mat Q = out.right_dom.embed.mat * out.right_dom.project.mat;
    if (TS * Q != TS) throw Error("UnitorIllDefined", "right unitor prescription is not constant on fibers");
    out.right = LinMap(out.right_dom.module.carrier, M.carrier, TS * out.right_dom.embed.mat);
    return out;
}

// Braiding c(m⊗n) = Σ rho_N(R2) n ⊗ rho_M(R1) m, compressed to the truncated
// carriers. H-linearity is verified on construction.
struct BraidingData {
    ProductModule source;  // M ⊗̂ N
    ProductModule target;  // N ⊗̂ M
    LinMap map;
};

inline BraidingData braiding(const HModule& M, const HModule& N, const RMatrix& R) {
    if (!(M.algebra == N.algebra || *M.algebra == *N.algebra))
        throw Error("AlgebraMismatch", "braiding requires modules over the same algebra");
    BraidingData out;
    out.source = monoidal_product(M, N);
    out.target = monoidal_product(N, M);

    const int n = M.algebra->dim();
    const int dm = M.dim(), dn = N.dim();
    Mat amb(dn * dm, dm * dn);
    for (const auto& [t, c] : R.r.coeffs) {
        int u = t / n, v = t % n;
        const Mat& A = M.action_of(u);
        const Mat& B = N.action_of(v);
        for (int i = 0; i < dn; ++i)
            for (int l = 0; l < dn; ++l) {
                const Rat& y = B.at(i, l);
                if (grpdfrob::is_zero(y)) continue;
                for (int j = 0; j < dm; ++j)
                    for (int k = 0; k < dm; ++k) {
                        const Rat& x = A.at(j, k);
                        if (grpdfrob::is_zero(x)) continue;
                        amb.at(tensor_index(i, j, dm), tensor_index(k, l, dn)) += c * y * x;
                    }
            }
    }
    out.map = LinMap(out.source.module.carrier, out.target.module.carrier,
                     out.target.project.mat * amb * out.source.embed.mat);
    if (!is_module_map(out.source.module, out.target.module, out.map))
        throw Error("BraidingNotHLinear", "braiding fails H-linearity; R-matrix data is corrupted");
    return out;
}

// Monoidal product of morphisms: the restriction of f⊗g to the truncated
// carriers.
inline LinMap product_of_maps(const ProductModule& dom, const ProductModule& cod, const LinMap& f, const LinMap& g) {
    return LinMap(dom.module.carrier, cod.module.carrier,
                  cod.project.mat * tensor_map(f, g).mat * dom.embed.mat);
}

// Naturality square c_{M',N'} ∘ (f ⊗̂ g) = (g ⊗̂ f) ∘ c_{M,N} for module maps
// f: M -> M', g: N -> N'.
inline bool check_braiding_naturality(const HModule& M, const HModule& N, const HModule& M2, const HModule& N2,
                                      const LinMap& f, const LinMap& g, const RMatrix& R) {
    if (!is_module_map(M, M2, f) || !is_module_map(N, N2, g)) return false;
    BraidingData c1 = braiding(M, N, R);
    BraidingData c2 = braiding(M2, N2, R);
    LinMap fg = product_of_maps(c1.source, c2.source, f, g);
    LinMap gf = product_of_maps(c1.target, c2.target, g, f);
    return c2.map.compose(fg) == gf.compose(c1.map);
}

}  // namespace grpdfrob
