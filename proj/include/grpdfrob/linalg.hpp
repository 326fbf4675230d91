// Labeled-basis exact linear algebra: the computational substrate for the
// algebra/coalgebra/module machinery. Vectors are sparse over a shared
// immutable basis; linear maps are dense rational matrices (codomain x domain).
// Everything is exact; there is no tolerance parameter anywhere.
#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "grpdfrob/error.hpp"
#include "grpdfrob/rational.hpp"

namespace grpdfrob {

class LabeledBasis {
public:
    explicit LabeledBasis(std::vector<std::string> labels) : labels_(std::move(labels)) {
        for (int i = 0; i < static_cast<int>(labels_.size()); ++i) {
            if (!index_.emplace(labels_[i], i).second)
                throw Error("DuplicateLabel", "basis label repeated: '" + labels_[i] + "'");
        }
    }

    int size() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }
    const std::vector<std::string>& labels() const { return labels_; }

    int find(const std::string& l) const {
        auto it = index_.find(l);
        return it == index_.end() ? -1 : it->second;
    }

    int index(const std::string& l) const {
        int i = find(l);
        if (i < 0) throw Error("UnknownLabel", "label not in basis: '" + l + "'");
        return i;
    }

    bool operator==(const LabeledBasis& other) const { return labels_ == other.labels_; }
    bool operator!=(const LabeledBasis& other) const { return !(*this == other); }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
};

using BasisPtr = std::shared_ptr<const LabeledBasis>;

inline BasisPtr make_basis(std::vector<std::string> labels) {
    return std::make_shared<const LabeledBasis>(std::move(labels));
}

inline bool same_basis(const BasisPtr& a, const BasisPtr& b) {
    return a == b || (a && b && *a == *b);
}

// Sparse vector: absent index means coefficient 0; stored coefficients are
// always nonzero, keyed by basis index in canonical order.
struct Vec {
    BasisPtr basis;
    std::map<int, Rat> coeffs;

    Vec() = default;
    explicit Vec(BasisPtr b) : basis(std::move(b)) {}

    static Vec zero(BasisPtr b) { return Vec(std::move(b)); }

    static Vec basis_vector(BasisPtr b, int i) {
        Vec v(std::move(b));
        v.coeffs.emplace(i, Rat(1));
        return v;
    }

    bool is_zero() const { return coeffs.empty(); }

    Rat coeff(int i) const {
        auto it = coeffs.find(i);
        return it == coeffs.end() ? Rat(0) : it->second;
    }

    void add_term(int i, const Rat& c) {
        if (grpdfrob::is_zero(c)) return;
        auto [it, inserted] = coeffs.emplace(i, c);
        if (!inserted) {
            it->second += c;
            if (grpdfrob::is_zero(it->second)) coeffs.erase(it);
        }
    }

    Vec& operator+=(const Vec& other) {
        for (const auto& [i, c] : other.coeffs) add_term(i, c);
        return *this;
    }

    Vec& operator-=(const Vec& other) {
        for (const auto& [i, c] : other.coeffs) add_term(i, -c);
        return *this;
    }

    Vec& operator*=(const Rat& s) {
        if (grpdfrob::is_zero(s)) {
            coeffs.clear();
        } else {
            for (auto& [i, c] : coeffs) c *= s;
        }
        return *this;
    }

    friend Vec operator+(Vec a, const Vec& b) { return a += b; }
    friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
    friend Vec operator*(const Rat& s, Vec v) { return v *= s; }

    bool operator==(const Vec& other) const {
        return same_basis(basis, other.basis) && coeffs == other.coeffs;
    }
    bool operator!=(const Vec& other) const { return !(*this == other); }

    std::string str() const {
        if (coeffs.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [i, c] : coeffs) {
            if (!first) out += " + ";
            first = false;
            if (c != 1) out += rat_str(c) + "*";
            out += basis ? basis->label(i) : std::to_string(i);
        }
        return out;
    }
};

// Dense rational matrix, row-major. Zero-dimensional shapes are legal.
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<Rat> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * static_cast<std::size_t>(c)) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    Rat& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const Rat& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

    bool is_zero() const {
        for (const auto& x : a)
            if (!grpdfrob::is_zero(x)) return false;
        return true;
    }

    bool is_identity() const {
        if (rows != cols) return false;
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c)
                if (at(r, c) != (r == c ? 1 : 0)) return false;
        return true;
    }

    Mat transpose() const {
        Mat t(cols, rows);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    Rat trace() const {
        Rat s = 0;
        for (int i = 0; i < rows && i < cols; ++i) s += at(i, i);
        return s;
    }

    // Skips zero entries of the left factor; the action matrices this library
    // produces are mostly monomial, so this is the hot-path win.
    Mat operator*(const Mat& rhs) const {
        if (cols != rhs.rows) throw Error("ShapeMismatch", "matrix product shape mismatch");
        Mat out(rows, rhs.cols);
        for (int r = 0; r < rows; ++r)
            for (int k = 0; k < cols; ++k) {
                const Rat& x = at(r, k);
                if (grpdfrob::is_zero(x)) continue;
                for (int c = 0; c < rhs.cols; ++c) {
                    const Rat& y = rhs.at(k, c);
                    if (!grpdfrob::is_zero(y)) out.at(r, c) += x * y;
                }
            }
        return out;
    }

    Mat operator+(const Mat& rhs) const {
        if (rows != rhs.rows || cols != rhs.cols) throw Error("ShapeMismatch", "matrix sum shape mismatch");
        Mat out(rows, cols);
        for (std::size_t i = 0; i < a.size(); ++i) out.a[i] = a[i] + rhs.a[i];
        return out;
    }

    Mat operator-(const Mat& rhs) const {
        if (rows != rhs.rows || cols != rhs.cols) throw Error("ShapeMismatch", "matrix difference shape mismatch");
        Mat out(rows, cols);
        for (std::size_t i = 0; i < a.size(); ++i) out.a[i] = a[i] - rhs.a[i];
        return out;
    }

    Mat operator*(const Rat& s) const {
        Mat out(rows, cols);
        for (std::size_t i = 0; i < a.size(); ++i) out.a[i] = a[i] * s;
        return out;
    }

    bool operator==(const Mat& rhs) const { return rows == rhs.rows && cols == rhs.cols && a == rhs.a; }
    bool operator!=(const Mat& rhs) const { return !(*this == rhs); }
};

// Linear map between labeled bases; matrix is codomain x domain.
struct LinMap {
    BasisPtr domain;
    BasisPtr codomain;
    Mat mat;

    LinMap() = default;
    LinMap(BasisPtr dom, BasisPtr cod)
        : domain(std::move(dom)), codomain(std::move(cod)), mat(codomain->size(), domain->size()) {}
    LinMap(BasisPtr dom, BasisPtr cod, Mat m) : domain(std::move(dom)), codomain(std::move(cod)), mat(std::move(m)) {
        if (mat.rows != codomain->size() || mat.cols != domain->size())
            throw Error("ShapeMismatch", "matrix dimensions do not match bases");
    }

    static LinMap identity(BasisPtr b) {
        LinMap f(b, b);
        f.mat = Mat::identity(b->size());
        return f;
    }

    static LinMap zero(BasisPtr dom, BasisPtr cod) { return LinMap(std::move(dom), std::move(cod)); }

    Vec apply(const Vec& v) const {
        if (!same_basis(v.basis, domain)) throw Error("BasisMismatch", "vector basis does not match map domain");
        Vec out(codomain);
        for (const auto& [j, c] : v.coeffs)
            for (int i = 0; i < mat.rows; ++i) {
                const Rat& m = mat.at(i, j);
                if (!grpdfrob::is_zero(m)) out.add_term(i, m * c);
            }
        return out;
    }

    Vec column(int j) const {
        Vec out(codomain);
        for (int i = 0; i < mat.rows; ++i)
            if (!grpdfrob::is_zero(mat.at(i, j))) out.add_term(i, mat.at(i, j));
        return out;
    }

    // this ∘ inner
    LinMap compose(const LinMap& inner) const {
        if (!same_basis(inner.codomain, domain))
            throw Error("BasisMismatch", "composition domain/codomain mismatch");
        return LinMap(inner.domain, codomain, mat * inner.mat);
    }

    bool operator==(const LinMap& rhs) const {
        return same_basis(domain, rhs.domain) && same_basis(codomain, rhs.codomain) && mat == rhs.mat;
    }
    bool operator!=(const LinMap& rhs) const { return !(*this == rhs); }
};

inline std::string pair_label(const std::string& a, const std::string& b) { return "(" + a + "," + b + ")"; }

// Ordered pairs, lexicographic in (left basis order, right basis order).
inline BasisPtr tensor_basis(const BasisPtr& b1, const BasisPtr& b2) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(b1->size()) * static_cast<std::size_t>(b2->size()));
    for (int i = 0; i < b1->size(); ++i)
        for (int j = 0; j < b2->size(); ++j) labels.push_back(pair_label(b1->label(i), b2->label(j)));
    return make_basis(std::move(labels));
}

inline int tensor_index(int i, int j, int size2) { return i * size2 + j; }

// Kronecker product consistent with tensor_basis ordering:
// (f ⊗ g)(u ⊗ v) = f(u) ⊗ g(v).
inline LinMap tensor_map(const LinMap& f, const LinMap& g) {
    BasisPtr dom = tensor_basis(f.domain, g.domain);
    BasisPtr cod = tensor_basis(f.codomain, g.codomain);
    LinMap out(dom, cod);
    for (int fr = 0; fr < f.mat.rows; ++fr)
        for (int fc = 0; fc < f.mat.cols; ++fc) {
            const Rat& x = f.mat.at(fr, fc);
            if (grpdfrob::is_zero(x)) continue;
            for (int gr = 0; gr < g.mat.rows; ++gr)
                for (int gc = 0; gc < g.mat.cols; ++gc) {
                    const Rat& y = g.mat.at(gr, gc);
                    if (grpdfrob::is_zero(y)) continue;
                    out.mat.at(tensor_index(fr, gr, g.mat.rows), tensor_index(fc, gc, g.mat.cols)) = x * y;
                }
        }
    return out;
}

// Dual of f: V -> U is f*: U* -> V*, i.e. the transpose; the dual bases keep
// the same labels (dual role is implicit).
inline LinMap dual_map(const LinMap& f) { return LinMap(f.codomain, f.domain, f.mat.transpose()); }

// Image basis of an idempotent, via exact column reduction with first-nonzero
// pivoting in canonical basis order. If every reduced column is a standard
// basis vector the ambient labels are retained, otherwise labels are
// synthesized as "im0", "im1", ...
struct ImageBasis {
    BasisPtr basis;          // basis of the image subspace
    LinMap embedding;        // image -> ambient
    LinMap projection;       // ambient -> image coordinates; embedding ∘ projection = p
};

inline ImageBasis image_basis(const LinMap& p) {
    if (!same_basis(p.domain, p.codomain)) throw Error("NotEndomorphism", "image_basis requires an endomorphism");
    const int n = p.domain->size();
    if ((p.mat * p.mat) != p.mat) throw Error("NotIdempotent", "image_basis requires an idempotent map");

    std::vector<std::vector<Rat>> cols;  // reduced column echelon vectors
    std::vector<int> pivot_row;
    for (int j = 0; j < n; ++j) {
        std::vector<Rat> v(static_cast<std::size_t>(n));
        for (int r = 0; r < n; ++r) v[static_cast<std::size_t>(r)] = p.mat.at(r, j);
        for (std::size_t k = 0; k < cols.size(); ++k) {
            const Rat& c = v[static_cast<std::size_t>(pivot_row[k])];
            if (grpdfrob::is_zero(c)) continue;
            Rat f = c;
            for (int r = 0; r < n; ++r) v[static_cast<std::size_t>(r)] -= f * cols[k][static_cast<std::size_t>(r)];
        }
        int piv = -1;
        for (int r = 0; r < n; ++r)
            if (!grpdfrob::is_zero(v[static_cast<std::size_t>(r)])) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        Rat inv = Rat(1) / v[static_cast<std::size_t>(piv)];
        for (int r = 0; r < n; ++r) v[static_cast<std::size_t>(r)] *= inv;
        for (std::size_t k = 0; k < cols.size(); ++k) {
            const Rat& c = cols[k][static_cast<std::size_t>(piv)];
            if (grpdfrob::is_zero(c)) continue;
            Rat f = c;
            for (int r = 0; r < n; ++r) cols[k][static_cast<std::size_t>(r)] -= f * v[static_cast<std::size_t>(r)];
        }
        cols.push_back(std::move(v));
        pivot_row.push_back(piv);
    }

    const int rank = static_cast<int>(cols.size());
    bool coordinate_aligned = true;
    for (int k = 0; k < rank && coordinate_aligned; ++k)
        for (int r = 0; r < n; ++r)
            if (cols[static_cast<std::size_t>(k)][static_cast<std::size_t>(r)] != (r == pivot_row[static_cast<std::size_t>(k)] ? 1 : 0)) {
                coordinate_aligned = false;
                break;
            }

    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(rank));
    for (int k = 0; k < rank; ++k)
        labels.push_back(coordinate_aligned ? p.domain->label(pivot_row[static_cast<std::size_t>(k)])
                                            : "im" + std::to_string(k));
    BasisPtr image = make_basis(std::move(labels));

    LinMap emb(image, p.domain);
    for (int k = 0; k < rank; ++k)
        for (int r = 0; r < n; ++r) emb.mat.at(r, k) = cols[static_cast<std::size_t>(k)][static_cast<std::size_t>(r)];

    // The embedding's pivot rows carry the identity, so coordinates of any
    // image vector are read off at the pivot rows; applied to p's columns
    // this gives the factorization p = embedding ∘ projection.
    LinMap proj(p.domain, image);
    for (int k = 0; k < rank; ++k)
        for (int j = 0; j < n; ++j) proj.mat.at(k, j) = p.mat.at(pivot_row[static_cast<std::size_t>(k)], j);

    if (emb.mat * proj.mat != p.mat) throw Error("InternalError", "image factorization failed");
    return ImageBasis{image, std::move(emb), std::move(proj)};
}

namespace detail {

// Row echelon solver used by solve/inverse. Reduces the augmented system in
// place; returns pivot columns.
inline std::vector<int> gauss_jordan(Mat& m, int lhs_cols) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < lhs_cols && row < m.rows; ++col) {
        int pr = -1;
        for (int r = row; r < m.rows; ++r)
            if (!grpdfrob::is_zero(m.at(r, col))) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        if (pr != row)
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(pr, c), m.at(row, c));
        Rat inv = Rat(1) / m.at(row, col);
        for (int c = 0; c < m.cols; ++c) m.at(row, c) *= inv;
        for (int r = 0; r < m.rows; ++r) {
            if (r == row) continue;
            const Rat f = m.at(r, col);
            if (grpdfrob::is_zero(f)) continue;
            for (int c = 0; c < m.cols; ++c) m.at(r, c) -= f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace detail

// Some u with f(u) = v; unique preimage when f is invertible, free variables
// pinned to zero otherwise. Throws NoSolution when v is outside the image.
inline Vec solve(const LinMap& f, const Vec& v) {
    if (!same_basis(v.basis, f.codomain)) throw Error("BasisMismatch", "solve: vector not in map codomain");
    const int rows = f.codomain->size();
    const int cols = f.domain->size();
    Mat aug(rows, cols + 1);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) aug.at(r, c) = f.mat.at(r, c);
    for (const auto& [i, c] : v.coeffs) aug.at(i, cols) = c;

    std::vector<int> pivots = detail::gauss_jordan(aug, cols);
    for (int r = static_cast<int>(pivots.size()); r < rows; ++r)
        if (!grpdfrob::is_zero(aug.at(r, cols)))
            throw Error("NoSolution", "solve: vector is not in the image of the map");

    Vec u(f.domain);
    for (int k = 0; k < static_cast<int>(pivots.size()); ++k) u.add_term(pivots[static_cast<std::size_t>(k)], aug.at(k, cols));
    return u;
}

inline std::optional<Mat> mat_inverse(const Mat& m) {
    if (m.rows != m.cols) return std::nullopt;
    const int n = m.rows;
    Mat aug(n, 2 * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, n + r) = 1;
    }
    std::vector<int> pivots = detail::gauss_jordan(aug, n);
    if (static_cast<int>(pivots.size()) != n) return std::nullopt;
    Mat inv(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) inv.at(r, c) = aug.at(r, n + c);
    return inv;
}

inline LinMap inverse(const LinMap& f) {
    auto inv = mat_inverse(f.mat);
    if (!inv) throw Error("NotInvertible", "linear map is not invertible");
    return LinMap(f.codomain, f.domain, std::move(*inv));
}

inline int rank(const Mat& m) {
    Mat copy = m;
    return static_cast<int>(detail::gauss_jordan(copy, m.cols).size());
}

// Sparse exact linear system Ax = b for the large structured systems that
// arise on tensor squares. Rows hold (column, coefficient) pairs plus a
// right-hand side. Returns the deterministic particular solution (free
// variables zero) and the solution-space dimension, or nullopt when
// inconsistent.
struct SparseSolution {
    std::vector<Rat> x;
    int rank = 0;
    int nullity = 0;
};

inline std::optional<SparseSolution> solve_sparse_system(int ncols, std::vector<std::map<int, Rat>> rows,
                                                         std::vector<Rat> rhs) {
    if (rows.size() != rhs.size()) throw Error("ShapeMismatch", "sparse system: rows/rhs size mismatch");
    std::vector<char> used(rows.size(), 0);
    std::vector<int> pivot_row_of_col(static_cast<std::size_t>(ncols), -1);
    int rk = 0;
    for (int col = 0; col < ncols; ++col) {
        int pr = -1;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (used[r]) continue;
            if (rows[r].count(col)) {
                pr = static_cast<int>(r);
                break;
            }
        }
        if (pr < 0) continue;
        used[static_cast<std::size_t>(pr)] = 1;
        pivot_row_of_col[static_cast<std::size_t>(col)] = pr;
        ++rk;
        Rat inv = Rat(1) / rows[static_cast<std::size_t>(pr)][col];
        for (auto& [c, v] : rows[static_cast<std::size_t>(pr)]) v *= inv;
        rhs[static_cast<std::size_t>(pr)] *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (static_cast<int>(r) == pr) continue;
            auto it = rows[r].find(col);
            if (it == rows[r].end()) continue;
            Rat f = it->second;
            for (const auto& [c, v] : rows[static_cast<std::size_t>(pr)]) {
                auto jt = rows[r].find(c);
                if (jt == rows[r].end()) {
                    Rat delta = -f * v;
                    if (!grpdfrob::is_zero(delta)) rows[r].emplace(c, std::move(delta));
                } else {
                    jt->second -= f * v;
                    if (grpdfrob::is_zero(jt->second)) rows[r].erase(jt);
                }
            }
            rhs[r] -= f * rhs[static_cast<std::size_t>(pr)];
        }
    }
    for (std::size_t r = 0; r < rows.size(); ++r)
        if (!used[r] && rows[r].empty() && !grpdfrob::is_zero(rhs[r])) return std::nullopt;

    SparseSolution sol;
    sol.x.assign(static_cast<std::size_t>(ncols), Rat(0));
    for (int col = 0; col < ncols; ++col) {
        int pr = pivot_row_of_col[static_cast<std::size_t>(col)];
        if (pr >= 0) sol.x[static_cast<std::size_t>(col)] = rhs[static_cast<std::size_t>(pr)];
    }
    sol.rank = rk;
    sol.nullity = ncols - rk;
    return sol;
}

}  // namespace grpdfrob
