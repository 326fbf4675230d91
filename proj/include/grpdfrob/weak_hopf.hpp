// Quantum groupoids (weak Hopf algebras) as structure-constant data over Q,
// with exhaustive axiom verification on basis tuples, plus the two
// constructions used everywhere else: the groupoid algebra k[G] and its
// Drinfeld double D(k[G]) with R-matrix.
#pragma once

#include <atomic>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "grpdfrob/error.hpp"
#include "grpdfrob/groupoid.hpp"
#include "grpdfrob/linalg.hpp"
#include "grpdfrob/parallel.hpp"
#include "grpdfrob/report.hpp"

namespace grpdfrob {

// Present when the algebra was built as a Drinfeld double: records which
// groupoid it came from and the (loop, morphism) pair behind each basis label.
struct DoubleTag {
    Groupoid groupoid;
    std::vector<std::pair<int, int>> pair_of_basis;  // basis index -> (loop g, morphism x)
    std::vector<int> basis_of_pair;                  // g * num_morphisms + x -> basis index or -1

    int basis_index(int g, int x) const {
        return basis_of_pair[static_cast<std::size_t>(g) * groupoid.num_morphisms() + x];
    }
    int object_of(int basis) const { return groupoid.tgt(pair_of_basis[static_cast<std::size_t>(basis)].second); }

    bool operator==(const DoubleTag& o) const {
        return groupoid == o.groupoid && pair_of_basis == o.pair_of_basis;
    }
};

// Finite-dimensional (co)algebra with antipode presented by structure
// constants. mult[(i*n+j)*n+k] is the coefficient of b_k in b_i·b_j;
// comult[(i*n+j)*n+k] is the coefficient of b_j⊗b_k in Δ(b_i). Immutable
// after construction; sparse iteration views are built once.
class QuantumGroupoid {
public:
    QuantumGroupoid(BasisPtr basis, std::vector<Rat> mult, Vec unit, std::vector<Rat> comult,
                    std::vector<Rat> counit, LinMap antipode, std::optional<DoubleTag> tag = std::nullopt)
        : basis_(std::move(basis)),
          mult_(std::move(mult)),
          unit_(std::move(unit)),
          comult_(std::move(comult)),
          counit_(std::move(counit)),
          antipode_(std::move(antipode)),
          tag_(std::move(tag)) {
        const std::size_t n = static_cast<std::size_t>(basis_->size());
        if (mult_.size() != n * n * n || comult_.size() != n * n * n || counit_.size() != n)
            throw Error("ShapeMismatch", "structure constant tensors do not match basis size");
        if (!same_basis(unit_.basis, basis_) || !same_basis(antipode_.domain, basis_) ||
            !same_basis(antipode_.codomain, basis_))
            throw Error("BasisMismatch", "unit/antipode bases do not match algebra basis");
        square_ = tensor_basis(basis_, basis_);
        mul_rows_.resize(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    const Rat& c = mult_[(i * n + j) * n + k];
                    if (!grpdfrob::is_zero(c)) mul_rows_[i * n + j].emplace_back(static_cast<int>(k), c);
                }
        comult_rows_.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    const Rat& c = comult_[(i * n + j) * n + k];
                    if (!grpdfrob::is_zero(c)) comult_rows_[i].emplace_back(static_cast<int>(j), static_cast<int>(k), c);
                }
        delta_unit_ = delta(unit_);
        delta_op_unit_ = swap_legs(delta_unit_);
    }

    int dim() const { return basis_->size(); }
    const BasisPtr& basis() const { return basis_; }
    const BasisPtr& square_basis() const { return square_; }
    const Vec& unit() const { return unit_; }
    const LinMap& antipode() const { return antipode_; }
    const std::vector<Rat>& mult_tensor() const { return mult_; }
    const std::vector<Rat>& comult_tensor() const { return comult_; }
    const std::vector<Rat>& counit_tensor() const { return counit_; }
    const std::optional<DoubleTag>& double_tag() const { return tag_; }
    const Vec& delta_unit() const { return delta_unit_; }
    const Vec& delta_op_unit() const { return delta_op_unit_; }

    const std::vector<std::pair<int, Rat>>& mul_basis(int i, int j) const {
        return mul_rows_[static_cast<std::size_t>(i) * dim() + j];
    }
    const std::vector<std::tuple<int, int, Rat>>& comult_basis(int i) const {
        return comult_rows_[static_cast<std::size_t>(i)];
    }

    Rat mult_coeff(int i, int j, int k) const {
        const std::size_t n = static_cast<std::size_t>(dim());
        return mult_[(static_cast<std::size_t>(i) * n + j) * n + k];
    }

    Rat counit_basis(int i) const { return counit_[static_cast<std::size_t>(i)]; }

    Rat counit(const Vec& v) const {
        Rat s = 0;
        for (const auto& [i, c] : v.coeffs) s += c * counit_[static_cast<std::size_t>(i)];
        return s;
    }

    Vec basis_mul(int i, int j) const {
        Vec out(basis_);
        for (const auto& [k, c] : mul_basis(i, j)) out.add_term(k, c);
        return out;
    }

    Vec mul(const Vec& a, const Vec& b) const {
        Vec out(basis_);
        for (const auto& [i, ca] : a.coeffs)
            for (const auto& [j, cb] : b.coeffs)
                for (const auto& [k, c] : mul_basis(i, j)) out.add_term(k, ca * cb * c);
        return out;
    }

    Vec delta(const Vec& v) const {
        Vec out(square_);
        const int n = dim();
        for (const auto& [i, c] : v.coeffs)
            for (const auto& [j, k, d] : comult_basis(i)) out.add_term(tensor_index(j, k, n), c * d);
        return out;
    }

    Vec swap_legs(const Vec& v2) const {
        Vec out(square_);
        const int n = dim();
        for (const auto& [t, c] : v2.coeffs) out.add_term(tensor_index(t % n, t / n, n), c);
        return out;
    }

    Vec delta_op(const Vec& v) const { return swap_legs(delta(v)); }

    Vec antipode_of_basis(int i) const { return antipode_.column(i); }

    // Componentwise product of sparse vectors living on the flat tensor power
    // H^{⊗power} (indices base-dim, leftmost leg most significant).
    Vec tensor_mul(int power, const BasisPtr& flat, const Vec& a, const Vec& b) const {
        Vec out(flat);
        const long n = dim();
        std::vector<int> da(static_cast<std::size_t>(power)), db(static_cast<std::size_t>(power));
        for (const auto& [ia, ca] : a.coeffs)
            for (const auto& [ib, cb] : b.coeffs) {
                long ra = ia, rb = ib;
                for (int l = power - 1; l >= 0; --l) {
                    da[static_cast<std::size_t>(l)] = static_cast<int>(ra % n);
                    db[static_cast<std::size_t>(l)] = static_cast<int>(rb % n);
                    ra /= n;
                    rb /= n;
                }
                std::vector<std::pair<long, Rat>> acc{{0, ca * cb}};
                for (int l = 0; l < power && !acc.empty(); ++l) {
                    const auto& row = mul_basis(da[static_cast<std::size_t>(l)], db[static_cast<std::size_t>(l)]);
                    std::vector<std::pair<long, Rat>> next;
                    next.reserve(acc.size() * row.size());
                    for (const auto& [idx, c] : acc)
                        for (const auto& [k, ck] : row) next.emplace_back(idx * n + k, c * ck);
                    acc = std::move(next);
                }
                for (const auto& [idx, c] : acc) out.add_term(static_cast<int>(idx), c);
            }
        return out;
    }

    Vec square_mul(const Vec& a, const Vec& b) const { return tensor_mul(2, square_, a, b); }

    // Copies with one structure constant replaced; used by the seeded
    // mutation tests.
    QuantumGroupoid with_mult_entry(int i, int j, int k, Rat c) const {
        const std::size_t n = static_cast<std::size_t>(dim());
        std::vector<Rat> m = mult_;
        m[(static_cast<std::size_t>(i) * n + j) * n + k] = std::move(c);
        return QuantumGroupoid(basis_, std::move(m), unit_, comult_, counit_, antipode_, tag_);
    }

    QuantumGroupoid with_comult_entry(int i, int j, int k, Rat c) const {
        const std::size_t n = static_cast<std::size_t>(dim());
        std::vector<Rat> d = comult_;
        d[(static_cast<std::size_t>(i) * n + j) * n + k] = std::move(c);
        return QuantumGroupoid(basis_, mult_, unit_, std::move(d), counit_, antipode_, tag_);
    }

    QuantumGroupoid with_counit_entry(int i, Rat c) const {
        std::vector<Rat> e = counit_;
        e[static_cast<std::size_t>(i)] = std::move(c);
        return QuantumGroupoid(basis_, mult_, unit_, comult_, std::move(e), antipode_, tag_);
    }

    bool operator==(const QuantumGroupoid& o) const {
        bool tags_equal = tag_.has_value() == o.tag_.has_value() && (!tag_ || *tag_ == *o.tag_);
        return tags_equal && same_basis(basis_, o.basis_) && mult_ == o.mult_ && unit_ == o.unit_ &&
               comult_ == o.comult_ && counit_ == o.counit_ && antipode_ == o.antipode_;
    }
    bool operator!=(const QuantumGroupoid& o) const { return !(*this == o); }

private:
    BasisPtr basis_;
    std::vector<Rat> mult_;
    Vec unit_;
    std::vector<Rat> comult_;
    std::vector<Rat> counit_;
    LinMap antipode_;
    std::optional<DoubleTag> tag_;

    BasisPtr square_;
    std::vector<std::vector<std::pair<int, Rat>>> mul_rows_;
    std::vector<std::vector<std::tuple<int, int, Rat>>> comult_rows_;
    Vec delta_unit_;
    Vec delta_op_unit_;
};

using AlgebraPtr = std::shared_ptr<const QuantumGroupoid>;

namespace detail {

// First index in [0, n) where pred fails, or -1 when all pass. Chunks scan
// ascending and the minimum over chunk-local first failures is the global
// first, so the result is deterministic under parallel execution.
template <typename Pred>
long first_failure(long n, Pred&& pred) {
    std::atomic<long> best{n};
    parallel_chunks(n, [&](long b, long e) {
        for (long i = b; i < e; ++i) {
            if (i >= best.load(std::memory_order_relaxed)) return;
            if (!pred(i)) {
                long cur = best.load();
                while (i < cur && !best.compare_exchange_weak(cur, i)) {
                }
                return;
            }
        }
    });
    long r = best.load();
    return r == n ? -1 : r;
}

inline Vec expand_left_leg(const QuantumGroupoid& H, const Vec& v2, const BasisPtr& cube) {
    // (Δ ⊗ id) on a sparse element of H⊗H.
    Vec out(cube);
    const int n = H.dim();
    for (const auto& [t, c] : v2.coeffs) {
        int i = t / n, j = t % n;
        for (const auto& [a, b, d] : H.comult_basis(i)) out.add_term((a * n + b) * n + j, c * d);
    }
    return out;
}

inline Vec expand_right_leg(const QuantumGroupoid& H, const Vec& v2, const BasisPtr& cube) {
    // (id ⊗ Δ) on a sparse element of H⊗H.
    Vec out(cube);
    const int n = H.dim();
    for (const auto& [t, c] : v2.coeffs) {
        int i = t / n, j = t % n;
        for (const auto& [a, b, d] : H.comult_basis(j)) out.add_term((i * n + a) * n + b, c * d);
    }
    return out;
}

}  // namespace detail

// Exhaustive Def-style verification of the weak Hopf axioms on basis tuples
// (bilinearity makes basis tuples equivalent to all of H). One report line
// per axiom with the first witness tuple.
inline AxiomReport check_weak_hopf(const QuantumGroupoid& H) {
    AxiomReport rep;
    const int n = H.dim();
    const long n2 = static_cast<long>(n) * n;
    const long n3 = n2 * n;
    auto lbl = [&](long i) { return H.basis()->label(static_cast<int>(i)); };

    {
        long bad = detail::first_failure(n3, [&](long idx) {
            int i = static_cast<int>(idx / n2), j = static_cast<int>((idx / n) % n), k = static_cast<int>(idx % n);
            Vec left = H.mul(H.basis_mul(i, j), Vec::basis_vector(H.basis(), k));
            Vec right = H.mul(Vec::basis_vector(H.basis(), i), H.basis_mul(j, k));
            return left == right;
        });
        rep.add("algebra: product associative", bad < 0,
                bad < 0 ? "" : "(" + lbl(bad / n2) + "," + lbl((bad / n) % n) + "," + lbl(bad % n) + ")");
    }
    {
        long bad = detail::first_failure(n, [&](long i) {
            Vec e = Vec::basis_vector(H.basis(), static_cast<int>(i));
            return H.mul(H.unit(), e) == e && H.mul(e, H.unit()) == e;
        });
        rep.add("algebra: unit laws", bad < 0, bad < 0 ? "" : lbl(bad));
    }

    BasisPtr cube = tensor_basis(H.square_basis(), H.basis());
    {
        long bad = detail::first_failure(n, [&](long i) {
            Vec d = H.delta(Vec::basis_vector(H.basis(), static_cast<int>(i)));
            return detail::expand_left_leg(H, d, cube) == detail::expand_right_leg(H, d, cube);
        });
        rep.add("coalgebra: coproduct coassociative", bad < 0, bad < 0 ? "" : lbl(bad));
    }
    {
        long bad = detail::first_failure(n, [&](long i) {
            Vec left(H.basis()), right(H.basis());
            for (const auto& [a, b, c] : H.comult_basis(static_cast<int>(i))) {
                left.add_term(b, c * H.counit_basis(a));
                right.add_term(a, c * H.counit_basis(b));
            }
            Vec e = Vec::basis_vector(H.basis(), static_cast<int>(i));
            return left == e && right == e;
        });
        rep.add("coalgebra: counit laws", bad < 0, bad < 0 ? "" : lbl(bad));
    }
    {
        long bad = detail::first_failure(n2, [&](long idx) {
            int i = static_cast<int>(idx / n), j = static_cast<int>(idx % n);
            Vec lhs = H.delta(H.basis_mul(i, j));
            Vec rhs = H.square_mul(H.delta(Vec::basis_vector(H.basis(), i)), H.delta(Vec::basis_vector(H.basis(), j)));
            return lhs == rhs;
        });
        rep.add("compatibility: coproduct multiplicative", bad < 0,
                bad < 0 ? "" : "(" + lbl(bad / n) + "," + lbl(bad % n) + ")");
    }

    // counit of pairwise products, shared by the weak-multiplicativity sweeps
    // and the antipode laws.
    Mat eps_of_product(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rat s = 0;
            for (const auto& [k, c] : H.mul_basis(i, j)) s += c * H.counit_basis(k);
            eps_of_product.at(i, j) = s;
        }
    auto weak_counit_sweep = [&](bool split_12) {
        return detail::first_failure(n3, [&](long idx) {
            int x = static_cast<int>(idx / n2), y = static_cast<int>((idx / n) % n), z = static_cast<int>(idx % n);
            Rat lhs = 0;
            for (const auto& [m, c] : H.mul_basis(x, y)) lhs += c * eps_of_product.at(m, z);
            Rat rhs = 0;
            for (const auto& [a, b, c] : H.comult_basis(y)) {
                if (split_12)
                    rhs += c * eps_of_product.at(x, a) * eps_of_product.at(b, z);
                else
                    rhs += c * eps_of_product.at(x, b) * eps_of_product.at(a, z);
            }
            return lhs == rhs;
        });
    };
    {
        long bad = weak_counit_sweep(true);
        rep.add("compatibility: counit weakly multiplicative (1-2 split)", bad < 0,
                bad < 0 ? "" : "(" + lbl(bad / n2) + "," + lbl((bad / n) % n) + "," + lbl(bad % n) + ")");
        bad = weak_counit_sweep(false);
        rep.add("compatibility: counit weakly multiplicative (2-1 split)", bad < 0,
                bad < 0 ? "" : "(" + lbl(bad / n2) + "," + lbl((bad / n) % n) + "," + lbl(bad % n) + ")");
    }
    {
        const Vec& d1 = H.delta_unit();
        Vec lhs = detail::expand_left_leg(H, d1, cube);
        Vec d12(cube), d23(cube);
        for (const auto& [t, c] : d1.coeffs)
            for (const auto& [k, u] : H.unit().coeffs) {
                d12.add_term(static_cast<int>(t * static_cast<long>(n) + k), c * u);
                d23.add_term(static_cast<int>(static_cast<long>(k) * n2 + t), c * u);
            }
        rep.add("compatibility: unit weakly comultiplicative (ordered)", lhs == H.tensor_mul(3, cube, d12, d23),
                "coproduct of the unit");
        rep.add("compatibility: unit weakly comultiplicative (reversed)", lhs == H.tensor_mul(3, cube, d23, d12),
                "coproduct of the unit");
    }

    {
        long bad = detail::first_failure(n, [&](long x) {
            Vec lhs(H.basis());
            for (const auto& [a, b, c] : H.comult_basis(static_cast<int>(x))) {
                Vec term = H.mul(Vec::basis_vector(H.basis(), a), H.antipode_of_basis(b));
                lhs += c * term;
            }
            Vec rhs(H.basis());
            for (const auto& [t, d] : H.delta_unit().coeffs) {
                int u = t / n, v = t % n;
                rhs.add_term(v, d * eps_of_product.at(u, static_cast<int>(x)));
            }
            return lhs == rhs;
        });
        rep.add("antipode: left cancellation", bad < 0, bad < 0 ? "" : lbl(bad));
    }
    {
        long bad = detail::first_failure(n, [&](long x) {
            Vec lhs(H.basis());
            for (const auto& [a, b, c] : H.comult_basis(static_cast<int>(x))) {
                Vec term = H.mul(H.antipode_of_basis(a), Vec::basis_vector(H.basis(), b));
                lhs += c * term;
            }
            Vec rhs(H.basis());
            for (const auto& [t, d] : H.delta_unit().coeffs) {
                int u = t / n, v = t % n;
                rhs.add_term(u, d * eps_of_product.at(static_cast<int>(x), v));
            }
            return lhs == rhs;
        });
        rep.add("antipode: right cancellation", bad < 0, bad < 0 ? "" : lbl(bad));
    }
    {
        long bad = detail::first_failure(n, [&](long x) {
            Vec lhs(H.basis());
            for (const auto& [a, m, c] : H.comult_basis(static_cast<int>(x)))
                for (const auto& [b, c2, c3] : H.comult_basis(m)) {
                    Vec term = H.mul(H.mul(H.antipode_of_basis(a), Vec::basis_vector(H.basis(), b)),
                                     H.antipode_of_basis(c2));
                    lhs += (c * c3) * term;
                }
            return lhs == H.antipode_of_basis(static_cast<int>(x));
        });
        rep.add("antipode: sandwich identity", bad < 0, bad < 0 ? "" : lbl(bad));
    }
    return rep;
}

enum class HopfClass { Hopf, StrictlyWeak };

struct HopfClassification {
    bool unit_coproduct = false;        // Δ(1) = 1⊗1
    bool counit_multiplicative = false; // ε(xy) = ε(x)ε(y) on all basis pairs
    HopfClass kind = HopfClass::StrictlyWeak;
};

// The two equivalent Hopf criteria are evaluated independently; a structure
// on which they disagree is corrupted and rejected.
inline HopfClassification classify_hopf(const QuantumGroupoid& H) {
    HopfClassification out;
    const int n = H.dim();
    Vec one_one(H.square_basis());
    for (const auto& [i, ci] : H.unit().coeffs)
        for (const auto& [j, cj] : H.unit().coeffs) one_one.add_term(tensor_index(i, j, n), ci * cj);
    out.unit_coproduct = H.delta_unit() == one_one;

    out.counit_multiplicative = true;
    for (int i = 0; i < n && out.counit_multiplicative; ++i)
        for (int j = 0; j < n; ++j) {
            Rat lhs = 0;
            for (const auto& [k, c] : H.mul_basis(i, j)) lhs += c * H.counit_basis(k);
            if (lhs != H.counit_basis(i) * H.counit_basis(j)) {
                out.counit_multiplicative = false;
                break;
            }
        }
    if (out.unit_coproduct != out.counit_multiplicative)
        throw Error("EquivalenceViolated",
                    "unit-coproduct and counit-multiplicativity tests disagree; structure is corrupted");
    out.kind = out.unit_coproduct ? HopfClass::Hopf : HopfClass::StrictlyWeak;
    return out;
}

// h ↦ ε(1_(1)·h)·1_(2); idempotent projection onto the unit-object carrier.
inline LinMap counit_target_map(const QuantumGroupoid& H) {
    const int n = H.dim();
    LinMap f(H.basis(), H.basis());
    for (int h = 0; h < n; ++h) {
        for (const auto& [t, d] : H.delta_unit().coeffs) {
            int u = t / n, v = t % n;
            Rat c = 0;
            for (const auto& [k, ck] : H.mul_basis(u, h)) c += ck * H.counit_basis(k);
            f.mat.at(v, h) += d * c;
        }
    }
    return f;
}

// The groupoid algebra: basis = morphisms, product = composition or zero,
// grouplike coproduct, counit 1 on every morphism, antipode = inversion.
inline QuantumGroupoid groupoid_algebra(const Groupoid& G) {
    AxiomReport v = validate(G);
    if (!v.all_pass())
        throw Error("InvalidGroupoid", "groupoid fails '" + v.first_failure()->name + "' at " + v.first_failure()->witness);
    const int n = G.num_morphisms();
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (int m = 0; m < n; ++m) labels.push_back(G.morphism_id(m));
    BasisPtr basis = make_basis(std::move(labels));

    const std::size_t ns = static_cast<std::size_t>(n);
    std::vector<Rat> mult(ns * ns * ns), comult(ns * ns * ns), counit(ns, Rat(1));
    for (int g = 0; g < n; ++g) {
        for (int h = 0; h < n; ++h) {
            int gh = G.compose(g, h);
            if (gh >= 0) mult[(static_cast<std::size_t>(g) * ns + h) * ns + gh] = 1;
        }
        comult[(static_cast<std::size_t>(g) * ns + g) * ns + g] = 1;
    }
    Vec unit(basis);
    for (int x = 0; x < G.num_objects(); ++x) unit.add_term(G.identity(x), Rat(1));
    LinMap antipode(basis, basis);
    for (int g = 0; g < n; ++g) antipode.mat.at(G.inverse(g), g) = 1;
    return QuantumGroupoid(basis, std::move(mult), std::move(unit), std::move(comult), std::move(counit),
                           std::move(antipode));
}

struct RMatrix {
    Vec r;     // on the square basis of the algebra
    Vec rbar;  // two-sided inverse against Δ(1)/Δop(1)
    int solution_space_dim = 0;  // affine dimension of the Rbar solution set
};

struct DrinfeldDouble {
    AlgebraPtr algebra;
    RMatrix r;

    const DoubleTag& tag() const { return *algebra->double_tag(); }
};

// 1^x = Σ_{g in the isotropy group at x} <g|e_x>.
inline Vec double_unit_component(const QuantumGroupoid& H, int object) {
    const DoubleTag& tag = *H.double_tag();
    Vec out(H.basis());
    int e = tag.groupoid.identity(object);
    for (int g : isotropy(tag.groupoid, object).elements) out.add_term(tag.basis_index(g, e), Rat(1));
    return out;
}

// Drinfeld double of k[G]: basis <g|x> over pairs with g a loop at t(x);
// <g|x>·<h|y> = [x^{-1}gx = h]·<g|xy>; grouplike-by-fibers coproduct; counit
// supported on <e|x>; antipode <g|x> ↦ <x^{-1}g^{-1}x|x^{-1}>. The R-matrix
// is assembled per object and Rbar is solved for exactly inside the corner
// Δ(1)(H⊗H)Δop(1), reporting the dimension of the solution space.
inline DrinfeldDouble drinfeld_double(const Groupoid& G) {
    AxiomReport valid = validate(G);
    if (!valid.all_pass())
        throw Error("InvalidGroupoid",
                    "groupoid fails '" + valid.first_failure()->name + "' at " + valid.first_failure()->witness);

    const int nm = G.num_morphisms();
    std::vector<IsotropyGroup> iso;
    iso.reserve(static_cast<std::size_t>(G.num_objects()));
    for (int x = 0; x < G.num_objects(); ++x) iso.push_back(isotropy(G, x));

    DoubleTag tag;
    tag.groupoid = G;
    tag.basis_of_pair.assign(static_cast<std::size_t>(nm) * nm, -1);
    std::vector<std::string> labels;
    for (int x = 0; x < nm; ++x)
        for (int g : iso[static_cast<std::size_t>(G.tgt(x))].elements) {
            tag.basis_of_pair[static_cast<std::size_t>(g) * nm + x] = static_cast<int>(tag.pair_of_basis.size());
            tag.pair_of_basis.emplace_back(g, x);
            labels.push_back("<" + G.morphism_id(g) + "|" + G.morphism_id(x) + ">");
        }
    BasisPtr basis = make_basis(std::move(labels));
    const int n = basis->size();
    const std::size_t ns = static_cast<std::size_t>(n);

    std::vector<Rat> mult(ns * ns * ns), comult(ns * ns * ns), counit(ns);
    LinMap antipode(basis, basis);
    for (int b1 = 0; b1 < n; ++b1) {
        auto [g, x] = tag.pair_of_basis[static_cast<std::size_t>(b1)];
        for (int b2 = 0; b2 < n; ++b2) {
            auto [h, y] = tag.pair_of_basis[static_cast<std::size_t>(b2)];
            if (G.src(x) != G.tgt(y)) continue;
            if (G.conj_down(x, g) != h) continue;
            int out = tag.basis_index(g, G.compose(x, y));
            mult[(static_cast<std::size_t>(b1) * ns + b2) * ns + static_cast<std::size_t>(out)] = 1;
        }
        for (int g1 : iso[static_cast<std::size_t>(G.tgt(x))].elements) {
            int g2 = G.compose(G.inverse(g1), g);
            int left = tag.basis_index(g1, x);
            int right = tag.basis_index(g2, x);
            comult[(static_cast<std::size_t>(b1) * ns + left) * ns + static_cast<std::size_t>(right)] = 1;
        }
        counit[static_cast<std::size_t>(b1)] = (g == G.identity(G.tgt(x))) ? 1 : 0;
        int sg = tag.basis_index(G.conj_down(x, G.inverse(g)), G.inverse(x));
        antipode.mat.at(sg, b1) = 1;
    }
    Vec unit(basis);
    for (int x = 0; x < G.num_objects(); ++x) {
        int e = G.identity(x);
        for (int g : iso[static_cast<std::size_t>(x)].elements)
            unit.add_term(tag.basis_index(g, e), Rat(1));
    }

    auto algebra = std::make_shared<const QuantumGroupoid>(basis, std::move(mult), std::move(unit), std::move(comult),
                                                           std::move(counit), std::move(antipode), std::move(tag));
    const DoubleTag& T = *algebra->double_tag();

    RMatrix rm;
    rm.r = Vec(algebra->square_basis());
    for (int x = 0; x < G.num_objects(); ++x) {
        int e = G.identity(x);
        for (int g : iso[static_cast<std::size_t>(x)].elements)
            for (int h : iso[static_cast<std::size_t>(x)].elements)
                rm.r.add_term(tensor_index(T.basis_index(g, e), T.basis_index(h, g), n), Rat(1));
    }

    // Basis of the corner subspace W = Δ(1)(H⊗H)Δop(1), by sparse reduction
    // of the projected tensor-basis vectors.
    const QuantumGroupoid& H = *algebra;
    const long n2 = static_cast<long>(n) * n;
    std::vector<Vec> wbasis;
    std::vector<int> wpivot;
    for (long t = 0; t < n2; ++t) {
        Vec v = H.square_mul(H.square_mul(H.delta_unit(), Vec::basis_vector(H.square_basis(), static_cast<int>(t))),
                             H.delta_op_unit());
        for (std::size_t k = 0; k < wbasis.size(); ++k) {
            Rat c = v.coeff(wpivot[k]);
            if (!grpdfrob::is_zero(c)) v -= c * wbasis[k];
        }
        if (v.is_zero()) continue;
        int piv = v.coeffs.begin()->first;
        v *= Rat(1) / v.coeffs.begin()->second;
        for (std::size_t k = 0; k < wbasis.size(); ++k) {
            Rat c = wbasis[k].coeff(piv);
            if (!grpdfrob::is_zero(c)) wbasis[k] -= c * v;
        }
        wbasis.push_back(std::move(v));
        wpivot.push_back(piv);
    }

    const int w = static_cast<int>(wbasis.size());
    std::vector<std::map<int, Rat>> rows(static_cast<std::size_t>(2 * n2));
    std::vector<Rat> rhs(static_cast<std::size_t>(2 * n2), Rat(0));
    for (int c = 0; c < w; ++c) {
        Vec left = H.square_mul(rm.r, wbasis[static_cast<std::size_t>(c)]);
        for (const auto& [t, v] : left.coeffs) rows[static_cast<std::size_t>(t)].emplace(c, v);
        Vec right = H.square_mul(wbasis[static_cast<std::size_t>(c)], rm.r);
        for (const auto& [t, v] : right.coeffs) rows[static_cast<std::size_t>(n2 + t)].emplace(c, v);
    }
    for (const auto& [t, v] : H.delta_op_unit().coeffs) rhs[static_cast<std::size_t>(t)] = v;
    for (const auto& [t, v] : H.delta_unit().coeffs) rhs[static_cast<std::size_t>(n2 + t)] = v;

    auto sol = solve_sparse_system(w, std::move(rows), std::move(rhs));
    if (!sol) throw Error("RbarNotFound", "the linear system for Rbar has no solution");
    rm.rbar = Vec(algebra->square_basis());
    for (int c = 0; c < w; ++c)
        if (!grpdfrob::is_zero(sol->x[static_cast<std::size_t>(c)]))
            rm.rbar += sol->x[static_cast<std::size_t>(c)] * wbasis[static_cast<std::size_t>(c)];
    rm.solution_space_dim = sol->nullity;
    return DrinfeldDouble{std::move(algebra), std::move(rm)};
}

// Def-style quasitriangularity: the intertwining law on every basis element,
// both coproduct factorizations on the triple tensor power, the two-sided
// inverse laws against Δ(1)/Δop(1), and the corner memberships of R and Rbar.
inline AxiomReport check_quasitriangular(const QuantumGroupoid& H, const RMatrix& R) {
    AxiomReport rep;
    const int n = H.dim();
    const long n2 = static_cast<long>(n) * n;
    {
        long bad = detail::first_failure(n, [&](long h) {
            Vec e = Vec::basis_vector(H.basis(), static_cast<int>(h));
            return H.square_mul(H.delta_op(e), R.r) == H.square_mul(R.r, H.delta(e));
        });
        rep.add("R intertwines coproduct and opposite coproduct", bad < 0,
                bad < 0 ? "" : H.basis()->label(static_cast<int>(bad)));
    }
    BasisPtr cube = tensor_basis(H.square_basis(), H.basis());
    Vec r12(cube), r23(cube), r13(cube);
    for (const auto& [t, c] : R.r.coeffs) {
        long i = t / n, j = t % n;
        for (const auto& [k, u] : H.unit().coeffs) {
            r12.add_term(static_cast<int>(t * static_cast<long>(n) + k), c * u);
            r23.add_term(static_cast<int>(static_cast<long>(k) * n2 + t), c * u);
            r13.add_term(static_cast<int>((i * n + k) * n + j), c * u);
        }
    }
    {
        Vec lhs = detail::expand_right_leg(H, R.r, cube);
        rep.add("coproduct on right leg of R factors as R13*R12", lhs == H.tensor_mul(3, cube, r13, r12), "R");
    }
    {
        Vec lhs = detail::expand_left_leg(H, R.r, cube);
        rep.add("coproduct on left leg of R factors as R13*R23", lhs == H.tensor_mul(3, cube, r13, r23), "R");
    }
    rep.add("R*Rbar equals opposite coproduct of the unit", H.square_mul(R.r, R.rbar) == H.delta_op_unit(), "R*Rbar");
    rep.add("Rbar*R equals coproduct of the unit", H.square_mul(R.rbar, R.r) == H.delta_unit(), "Rbar*R");
    rep.add("R lies in its truncated corner",
            H.square_mul(H.square_mul(H.delta_op_unit(), R.r), H.delta_unit()) == R.r, "R");
    rep.add("Rbar lies in its truncated corner",
            H.square_mul(H.square_mul(H.delta_unit(), R.rbar), H.delta_op_unit()) == R.rbar, "Rbar");
    return rep;
}

}  // namespace grpdfrob
