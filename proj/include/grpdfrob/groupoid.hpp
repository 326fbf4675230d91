// Finite groupoids as explicit tables: objects, morphisms with source/target,
// a partial composition table (defined exactly on composable pairs),
// identities and inverses. Composition convention: compose(g, h) = g∘h is
// defined iff s(g) = t(h), with s(g∘h) = s(h) and t(g∘h) = t(g).
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "grpdfrob/error.hpp"
#include "grpdfrob/report.hpp"

namespace grpdfrob {

// Finite group as a Cayley table; table[i][j] = index of elements[i]*elements[j].
struct GroupTable {
    std::vector<std::string> elements;
    std::vector<std::vector<int>> table;

    int order() const { return static_cast<int>(elements.size()); }

    int mul(int i, int j) const { return table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

    // Index of the two-sided identity; -1 when there is none.
    int identity() const {
        const int n = order();
        for (int e = 0; e < n; ++e) {
            bool ok = true;
            for (int g = 0; g < n && ok; ++g) ok = mul(e, g) == g && mul(g, e) == g;
            if (ok) return e;
        }
        return -1;
    }

    int inverse_of(int g) const {
        const int e = identity();
        for (int h = 0; h < order(); ++h)
            if (mul(g, h) == e && mul(h, g) == e) return h;
        return -1;
    }
};

// Throws InvalidGroupTable unless the table is a finite group.
inline void validate_group_table(const GroupTable& t) {
    const int n = t.order();
    if (static_cast<int>(t.table.size()) != n) throw Error("InvalidGroupTable", "table row count != order");
    for (const auto& row : t.table) {
        if (static_cast<int>(row.size()) != n) throw Error("InvalidGroupTable", "table column count != order");
        for (int v : row)
            if (v < 0 || v >= n) throw Error("InvalidGroupTable", "table entry out of range");
    }
    if (t.identity() < 0) throw Error("InvalidGroupTable", "no two-sided identity");
    for (int g = 0; g < n; ++g)
        if (t.inverse_of(g) < 0) throw Error("InvalidGroupTable", "element without inverse: " + t.elements[static_cast<std::size_t>(g)]);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (t.mul(t.mul(a, b), c) != t.mul(a, t.mul(b, c)))
                    throw Error("InvalidGroupTable", "associativity fails at (" + t.elements[static_cast<std::size_t>(a)] + "," +
                                                         t.elements[static_cast<std::size_t>(b)] + "," + t.elements[static_cast<std::size_t>(c)] + ")");
}

struct Morphism {
    std::string id;
    int src = -1;
    int tgt = -1;
};

struct Groupoid {
    std::vector<std::string> objects;
    std::vector<Morphism> morphisms;
    std::vector<int> compose_table;       // g*n+h -> g∘h, or -1 when undefined
    std::vector<int> identity_of_object;  // object -> identity morphism
    std::vector<int> inverse_of;          // morphism -> inverse morphism

    int num_objects() const { return static_cast<int>(objects.size()); }
    int num_morphisms() const { return static_cast<int>(morphisms.size()); }

    int src(int m) const { return morphisms[static_cast<std::size_t>(m)].src; }
    int tgt(int m) const { return morphisms[static_cast<std::size_t>(m)].tgt; }
    const std::string& morphism_id(int m) const { return morphisms[static_cast<std::size_t>(m)].id; }
    const std::string& object_name(int x) const { return objects[static_cast<std::size_t>(x)]; }

    int compose(int g, int h) const { return compose_table[static_cast<std::size_t>(g) * num_morphisms() + h]; }
    int identity(int object) const { return identity_of_object[static_cast<std::size_t>(object)]; }
    int inverse(int m) const { return inverse_of[static_cast<std::size_t>(m)]; }

    int find_object(const std::string& name) const {
        for (int i = 0; i < num_objects(); ++i)
            if (objects[static_cast<std::size_t>(i)] == name) return i;
        return -1;
    }

    int find_morphism(const std::string& id) const {
        for (int i = 0; i < num_morphisms(); ++i)
            if (morphisms[static_cast<std::size_t>(i)].id == id) return i;
        return -1;
    }

    // x g x^{-1} for a loop g at s(x); lands in the isotropy group at t(x).
    int conj_up(int x, int g) const { return compose(compose(x, g), inverse(x)); }

    // x^{-1} g x for a loop g at t(x); lands in the isotropy group at s(x).
    int conj_down(int x, int g) const { return compose(compose(inverse(x), g), x); }

    // g h g^{-1} h^{-1} for loops g, h at the same object.
    int commutator(int g, int h) const { return compose(compose(compose(g, h), inverse(g)), inverse(h)); }

    bool operator==(const Groupoid& other) const {
        if (objects != other.objects || compose_table != other.compose_table ||
            identity_of_object != other.identity_of_object || inverse_of != other.inverse_of)
            return false;
        if (morphisms.size() != other.morphisms.size()) return false;
        for (std::size_t i = 0; i < morphisms.size(); ++i)
            if (morphisms[i].id != other.morphisms[i].id || morphisms[i].src != other.morphisms[i].src ||
                morphisms[i].tgt != other.morphisms[i].tgt)
                return false;
        return true;
    }
    bool operator!=(const Groupoid& other) const { return !(*this == other); }
};

// Exhaustive check of all groupoid laws. Failures are report entries with the
// first witness in canonical order, never exceptions.
inline AxiomReport validate(const Groupoid& G) {
    AxiomReport rep;
    const int n = G.num_morphisms();
    const int nobj = G.num_objects();

    bool shape_ok = static_cast<int>(G.compose_table.size()) == n * n &&
                    static_cast<int>(G.identity_of_object.size()) == nobj &&
                    static_cast<int>(G.inverse_of.size()) == n;
    if (shape_ok) {
        for (const auto& m : G.morphisms)
            if (m.src < 0 || m.src >= nobj || m.tgt < 0 || m.tgt >= nobj) shape_ok = false;
        for (int v : G.compose_table)
            if (v < -1 || v >= n) shape_ok = false;
        for (int v : G.identity_of_object)
            if (v < 0 || v >= n) shape_ok = false;
        for (int v : G.inverse_of)
            if (v < 0 || v >= n) shape_ok = false;
    }
    rep.add("table shapes and index ranges", shape_ok, "structure tables malformed");
    if (!shape_ok) return rep;

    {
        bool ok = true;
        std::string wit;
        for (int x = 0; x < nobj && ok; ++x) {
            int e = G.identity(x);
            if (G.src(e) != x || G.tgt(e) != x) {
                ok = false;
                wit = "object " + G.object_name(x) + ", identity " + G.morphism_id(e);
            }
        }
        rep.add("identity endpoints", ok, wit);
    }
    {
        bool ok = true;
        std::string wit;
        for (int g = 0; g < n && ok; ++g) {
            if (G.compose(G.identity(G.tgt(g)), g) != g || G.compose(g, G.identity(G.src(g))) != g) {
                ok = false;
                wit = G.morphism_id(g);
            }
        }
        rep.add("identity laws", ok, wit);
    }
    {
        // Defined exactly on composable pairs.
        bool ok = true;
        std::string wit;
        for (int g = 0; g < n && ok; ++g)
            for (int h = 0; h < n && ok; ++h) {
                bool composable = G.src(g) == G.tgt(h);
                if ((G.compose(g, h) >= 0) != composable) {
                    ok = false;
                    wit = "(" + G.morphism_id(g) + "," + G.morphism_id(h) + ")";
                }
            }
        rep.add("composition defined exactly on composable pairs", ok, wit);
    }
    {
        bool ok = true;
        std::string wit;
        for (int g = 0; g < n && ok; ++g)
            for (int h = 0; h < n && ok; ++h) {
                int gh = G.compose(g, h);
                if (gh < 0) continue;
                if (G.src(gh) != G.src(h) || G.tgt(gh) != G.tgt(g)) {
                    ok = false;
                    wit = "(" + G.morphism_id(g) + "," + G.morphism_id(h) + ")";
                }
            }
        rep.add("composition endpoints", ok, wit);
    }
    {
        bool ok = true;
        std::string wit;
        for (int g = 0; g < n && ok; ++g)
            for (int h = 0; h < n && ok; ++h) {
                if (G.src(g) != G.tgt(h)) continue;
                for (int k = 0; k < n; ++k) {
                    if (G.src(h) != G.tgt(k)) continue;
                    int left = G.compose(G.compose(g, h), k);
                    int right = G.compose(g, G.compose(h, k));
                    if (left != right) {
                        ok = false;
                        wit = "(" + G.morphism_id(g) + "," + G.morphism_id(h) + "," + G.morphism_id(k) + ")";
                        break;
                    }
                }
            }
        rep.add("composition associative", ok, wit);
    }
    {
        bool ok = true;
        std::string wit;
        for (int g = 0; g < n && ok; ++g) {
            int gi = G.inverse(g);
            if (G.src(gi) != G.tgt(g) || G.tgt(gi) != G.src(g) || G.compose(g, gi) != G.identity(G.tgt(g)) ||
                G.compose(gi, g) != G.identity(G.src(g))) {
                ok = false;
                wit = G.morphism_id(g);
            }
        }
        rep.add("inverse laws", ok, wit);
    }
    return rep;
}

struct IsotropyGroup {
    int object = -1;
    std::vector<int> elements;  // loops at the object, in canonical morphism order
};

inline IsotropyGroup isotropy(const Groupoid& G, int object) {
    if (object < 0 || object >= G.num_objects()) throw Error("UnknownObject", "object index out of range");
    IsotropyGroup iso;
    iso.object = object;
    for (int m = 0; m < G.num_morphisms(); ++m)
        if (G.src(m) == object && G.tgt(m) == object) iso.elements.push_back(m);
    return iso;
}

// One object, morphisms = the group elements.
inline Groupoid one_object_groupoid(const GroupTable& table, const std::string& object_name = "*") {
    validate_group_table(table);
    Groupoid G;
    G.objects = {object_name};
    const int n = table.order();
    for (int g = 0; g < n; ++g) G.morphisms.push_back({table.elements[static_cast<std::size_t>(g)], 0, 0});
    G.compose_table.assign(static_cast<std::size_t>(n) * n, -1);
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) G.compose_table[static_cast<std::size_t>(g) * n + h] = table.mul(g, h);
    G.identity_of_object = {table.identity()};
    for (int g = 0; g < n; ++g) G.inverse_of.push_back(table.inverse_of(g));
    return G;
}

// n objects with exactly one morphism between every ordered pair.
// m{i}_{j} : x{j} -> x{i}, so m{i}_{j} ∘ m{j}_{k} = m{i}_{k}.
inline Groupoid pair_groupoid(int n) {
    if (n <= 0) throw Error("InvalidGroupoid", "pair groupoid needs at least one object");
    Groupoid G;
    for (int i = 0; i < n; ++i) G.objects.push_back("x" + std::to_string(i));
    auto midx = [n](int i, int j) { return i * n + j; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            G.morphisms.push_back({"m" + std::to_string(i) + "_" + std::to_string(j), j, i});
    const int nm = n * n;
    G.compose_table.assign(static_cast<std::size_t>(nm) * nm, -1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                G.compose_table[static_cast<std::size_t>(midx(i, j)) * nm + midx(j, k)] = midx(i, k);
    for (int i = 0; i < n; ++i) G.identity_of_object.push_back(midx(i, i));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) G.inverse_of.push_back(0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) G.inverse_of[static_cast<std::size_t>(midx(i, j))] = midx(j, i);
    return G;
}

// Left action of a finite group on a finite set: image[g][p] is g·p.
struct GroupAction {
    GroupTable group;
    int set_size = 0;
    std::vector<std::vector<int>> image;
};

inline void validate_group_action(const GroupAction& act) {
    validate_group_table(act.group);
    const int n = act.group.order();
    if (static_cast<int>(act.image.size()) != n) throw Error("InvalidAction", "action rows != group order");
    for (const auto& row : act.image) {
        if (static_cast<int>(row.size()) != act.set_size) throw Error("InvalidAction", "action row size != set size");
        for (int v : row)
            if (v < 0 || v >= act.set_size) throw Error("InvalidAction", "action image out of range");
    }
    const int e = act.group.identity();
    for (int p = 0; p < act.set_size; ++p)
        if (act.image[static_cast<std::size_t>(e)][static_cast<std::size_t>(p)] != p)
            throw Error("InvalidAction", "identity does not fix point " + std::to_string(p));
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int p = 0; p < act.set_size; ++p)
                if (act.image[static_cast<std::size_t>(act.group.mul(g, h))][static_cast<std::size_t>(p)] !=
                    act.image[static_cast<std::size_t>(g)][static_cast<std::size_t>(act.image[static_cast<std::size_t>(h)][static_cast<std::size_t>(p)])])
                    throw Error("InvalidAction", "not a left action at (g,h,p)=(" + std::to_string(g) + "," +
                                                     std::to_string(h) + "," + std::to_string(p) + ")");
}

// Objects = points; morphism (g, p) : p -> g·p; (g2, g1·p) ∘ (g1, p) = (g2*g1, p).
inline Groupoid action_groupoid(const GroupAction& act) {
    validate_group_action(act);
    Groupoid G;
    const int n = act.group.order();
    const int pts = act.set_size;
    for (int p = 0; p < pts; ++p) G.objects.push_back("s" + std::to_string(p));
    auto midx = [pts](int g, int p) { return g * pts + p; };
    auto apply = [&act](int g, int p) { return act.image[static_cast<std::size_t>(g)][static_cast<std::size_t>(p)]; };
    for (int g = 0; g < n; ++g)
        for (int p = 0; p < pts; ++p)
            G.morphisms.push_back({act.group.elements[static_cast<std::size_t>(g)] + "@s" + std::to_string(p), p, apply(g, p)});
    const int nm = n * pts;
    G.compose_table.assign(static_cast<std::size_t>(nm) * nm, -1);
    for (int g2 = 0; g2 < n; ++g2)
        for (int g1 = 0; g1 < n; ++g1)
            for (int p = 0; p < pts; ++p)
                G.compose_table[static_cast<std::size_t>(midx(g2, apply(g1, p))) * nm + midx(g1, p)] =
                    midx(act.group.mul(g2, g1), p);
    const int e = act.group.identity();
    for (int p = 0; p < pts; ++p) G.identity_of_object.push_back(midx(e, p));
    G.inverse_of.assign(static_cast<std::size_t>(nm), 0);
    for (int g = 0; g < n; ++g)
        for (int p = 0; p < pts; ++p)
            G.inverse_of[static_cast<std::size_t>(midx(g, p))] = midx(act.group.inverse_of(g), apply(g, p));
    return G;
}

// Side-by-side union with relabeled objects/morphisms and no cross morphisms.
inline Groupoid disjoint_union(const Groupoid& A, const Groupoid& B) {
    Groupoid G;
    for (const auto& o : A.objects) G.objects.push_back("u0." + o);
    for (const auto& o : B.objects) G.objects.push_back("u1." + o);
    const int aobj = A.num_objects();
    const int am = A.num_morphisms();
    const int bm = B.num_morphisms();
    for (const auto& m : A.morphisms) G.morphisms.push_back({"u0." + m.id, m.src, m.tgt});
    for (const auto& m : B.morphisms) G.morphisms.push_back({"u1." + m.id, m.src + aobj, m.tgt + aobj});
    const int nm = am + bm;
    G.compose_table.assign(static_cast<std::size_t>(nm) * nm, -1);
    for (int g = 0; g < am; ++g)
        for (int h = 0; h < am; ++h)
            if (A.compose(g, h) >= 0) G.compose_table[static_cast<std::size_t>(g) * nm + h] = A.compose(g, h);
    for (int g = 0; g < bm; ++g)
        for (int h = 0; h < bm; ++h)
            if (B.compose(g, h) >= 0)
                G.compose_table[static_cast<std::size_t>(g + am) * nm + (h + am)] = B.compose(g, h) + am;
    for (int x = 0; x < aobj; ++x) G.identity_of_object.push_back(A.identity(x));
    for (int x = 0; x < B.num_objects(); ++x) G.identity_of_object.push_back(B.identity(x) + am);
    for (int g = 0; g < am; ++g) G.inverse_of.push_back(A.inverse(g));
    for (int g = 0; g < bm; ++g) G.inverse_of.push_back(B.inverse(g) + am);
    return G;
}

}  // namespace grpdfrob
