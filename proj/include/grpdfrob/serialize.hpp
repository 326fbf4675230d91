// Canonical JSON serialization for every data type: deterministic key order,
// sparse triplet lists for structure constants, scalar strings in lowest
// terms. parse(serialize(x)) == x for all types; the writer's byte output is
// stable across runs.
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "grpdfrob/correspondence.hpp"
#include "grpdfrob/error.hpp"
#include "grpdfrob/frobenius.hpp"
#include "grpdfrob/gfa.hpp"
#include "grpdfrob/groupoid.hpp"
#include "grpdfrob/linalg.hpp"
#include "grpdfrob/rep_cat.hpp"
#include "grpdfrob/weak_hopf.hpp"

namespace grpdfrob {

using Json = nlohmann::ordered_json;

inline std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

// FNV-1a 64-bit content digest, as fixed-width hex.
inline std::string content_digest(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

namespace detail {

inline const Json& field(const Json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw Error("ParseError", std::string("missing field '") + key + "'");
    return *it;
}

inline std::string str_field(const Json& j) {
    if (!j.is_string()) throw Error("ParseError", "expected a string");
    return j.get<std::string>();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Groupoid

inline Json groupoid_to_json(const Groupoid& G) {
    Json j;
    j["objects"] = G.objects;
    Json ms = Json::array();
    for (const auto& m : G.morphisms)
        ms.push_back(Json{{"id", m.id}, {"src", G.object_name(m.src)}, {"tgt", G.object_name(m.tgt)}});
    j["morphisms"] = std::move(ms);
    Json ident = Json::object();
    for (int x = 0; x < G.num_objects(); ++x) ident[G.object_name(x)] = G.morphism_id(G.identity(x));
    j["identity"] = std::move(ident);
    Json inv = Json::object();
    for (int m = 0; m < G.num_morphisms(); ++m) inv[G.morphism_id(m)] = G.morphism_id(G.inverse(m));
    j["inverse"] = std::move(inv);
    // Composites derivable from the identity/inverse tables are omitted.
    Json comp = Json::array();
    for (int g = 0; g < G.num_morphisms(); ++g)
        for (int h = 0; h < G.num_morphisms(); ++h) {
            int gh = G.compose(g, h);
            if (gh < 0) continue;
            bool derivable = g == G.identity(G.tgt(h)) || h == G.identity(G.src(g)) ||
                             (h == G.inverse(g) && (gh == G.identity(G.tgt(g)))) ||
                             (g == G.inverse(h) && (gh == G.identity(G.src(h))));
            if (derivable) continue;
            comp.push_back(Json::array({G.morphism_id(g), G.morphism_id(h), G.morphism_id(gh)}));
        }
    j["compose"] = std::move(comp);
    return j;
}

inline Groupoid groupoid_from_json(const Json& j) {
    Groupoid G;
    for (const auto& o : detail::field(j, "objects")) G.objects.push_back(detail::str_field(o));
    for (const auto& m : detail::field(j, "morphisms")) {
        Morphism mm;
        mm.id = detail::str_field(detail::field(m, "id"));
        mm.src = G.find_object(detail::str_field(detail::field(m, "src")));
        mm.tgt = G.find_object(detail::str_field(detail::field(m, "tgt")));
        if (mm.src < 0 || mm.tgt < 0) throw Error("ParseError", "morphism '" + mm.id + "' references unknown object");
        G.morphisms.push_back(std::move(mm));
    }
    const int n = G.num_morphisms();
    auto morph = [&](const Json& v) {
        int m = G.find_morphism(detail::str_field(v));
        if (m < 0) throw Error("ParseError", "unknown morphism id '" + detail::str_field(v) + "'");
        return m;
    };
    G.identity_of_object.assign(static_cast<std::size_t>(G.num_objects()), -1);
    for (const auto& [name, v] : detail::field(j, "identity").items()) {
        int x = G.find_object(name);
        if (x < 0) throw Error("ParseError", "identity entry for unknown object '" + name + "'");
        G.identity_of_object[static_cast<std::size_t>(x)] = morph(v);
    }
    for (int x = 0; x < G.num_objects(); ++x)
        if (G.identity_of_object[static_cast<std::size_t>(x)] < 0)
            throw Error("ParseError", "no identity morphism for object '" + G.object_name(x) + "'");
    G.inverse_of.assign(static_cast<std::size_t>(n), -1);
    for (const auto& [id, v] : detail::field(j, "inverse").items()) {
        int m = G.find_morphism(id);
        if (m < 0) throw Error("ParseError", "inverse entry for unknown morphism '" + id + "'");
        G.inverse_of[static_cast<std::size_t>(m)] = morph(v);
    }
    for (int m = 0; m < n; ++m)
        if (G.inverse_of[static_cast<std::size_t>(m)] < 0)
            throw Error("ParseError", "no inverse for morphism '" + G.morphism_id(m) + "'");
    G.compose_table.assign(static_cast<std::size_t>(n) * n, -1);
    auto set_compose = [&](int g, int h, int gh) {
        int& slot = G.compose_table[static_cast<std::size_t>(g) * n + h];
        if (slot >= 0 && slot != gh)
            throw Error("ParseError", "conflicting composition entries for (" + G.morphism_id(g) + "," +
                                          G.morphism_id(h) + ")");
        slot = gh;
    };
    for (const auto& e : detail::field(j, "compose")) {
        if (!e.is_array() || e.size() != 3) throw Error("ParseError", "composition entry must be [g, h, gh]");
        set_compose(morph(e[0]), morph(e[1]), morph(e[2]));
    }
    // Entries derivable from identities and inverses may be omitted.
    for (int g = 0; g < n; ++g) {
        int es = G.identity_of_object[static_cast<std::size_t>(G.src(g))];
        int et = G.identity_of_object[static_cast<std::size_t>(G.tgt(g))];
        int gi = G.inverse_of[static_cast<std::size_t>(g)];
        if (G.compose_table[static_cast<std::size_t>(g) * n + es] < 0) set_compose(g, es, g);
        if (G.compose_table[static_cast<std::size_t>(et) * n + g] < 0) set_compose(et, g, g);
        if (G.src(gi) == G.tgt(g) && G.compose_table[static_cast<std::size_t>(g) * n + gi] < 0) set_compose(g, gi, et);
        if (G.src(g) == G.tgt(gi) && G.compose_table[static_cast<std::size_t>(gi) * n + g] < 0) set_compose(gi, g, es);
    }
    return G;
}

// ---------------------------------------------------------------------------
// Linear pieces

inline Json vec_to_json(const Vec& v) {
    Json j = Json::object();
    for (const auto& [i, c] : v.coeffs) j[v.basis->label(i)] = rat_str(c);
    return j;
}

inline Vec vec_from_json(const Json& j, const BasisPtr& basis) {
    Vec v(basis);
    if (!j.is_object()) throw Error("ParseError", "vector must be a label->scalar object");
    for (const auto& [label, c] : j.items()) {
        int i = basis->find(label);
        if (i < 0) throw Error("ParseError", "vector entry for unknown label '" + label + "'");
        v.add_term(i, rat_parse(detail::str_field(c)));
    }
    return v;
}

inline Json mat_to_json(const Mat& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows; ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols; ++c) row.push_back(rat_str(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Mat mat_from_json(const Json& j, int rows, int cols) {
    if (!j.is_array() || static_cast<int>(j.size()) != rows) throw Error("ParseError", "matrix row count mismatch");
    Mat m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        const Json& row = j[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw Error("ParseError", "matrix column count mismatch");
        for (int c = 0; c < cols; ++c) m.at(r, c) = rat_parse(detail::str_field(row[static_cast<std::size_t>(c)]));
    }
    return m;
}

// ---------------------------------------------------------------------------
// QuantumGroupoid

inline Json quantum_groupoid_to_json(const QuantumGroupoid& H) {
    Json j;
    j["basis"] = H.basis()->labels();
    const int n = H.dim();
    Json mult = Json::array();
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                // note: iterate rows in (i, a) order so entries are sorted
                const Rat& c = H.mult_tensor()[(static_cast<std::size_t>(i) * n + a) * n + b];
                if (!is_zero(c))
                    mult.push_back(Json::array(
                        {H.basis()->label(i), H.basis()->label(a), H.basis()->label(b), rat_str(c)}));
            }
    j["mult"] = std::move(mult);
    j["unit"] = vec_to_json(H.unit());
    Json comult = Json::array();
    for (int i = 0; i < n; ++i)
        for (const auto& [a, b, c] : H.comult_basis(i))
            comult.push_back(Json::array({H.basis()->label(i), H.basis()->label(a), H.basis()->label(b), rat_str(c)}));
    j["comult"] = std::move(comult);
    Json counit = Json::object();
    for (int i = 0; i < n; ++i)
        if (!is_zero(H.counit_basis(i))) counit[H.basis()->label(i)] = rat_str(H.counit_basis(i));
    j["counit"] = std::move(counit);
    j["antipode"] = mat_to_json(H.antipode().mat);
    if (H.double_tag()) {
        const DoubleTag& tag = *H.double_tag();
        Json dj;
        dj["groupoid"] = groupoid_to_json(tag.groupoid);
        Json pairs = Json::array();
        for (int b = 0; b < n; ++b) {
            auto [g, x] = tag.pair_of_basis[static_cast<std::size_t>(b)];
            pairs.push_back(Json::array(
                {H.basis()->label(b), tag.groupoid.morphism_id(g), tag.groupoid.morphism_id(x)}));
        }
        dj["pairs"] = std::move(pairs);
        j["double"] = std::move(dj);
    }
    return j;
}

inline QuantumGroupoid quantum_groupoid_from_json(const Json& j) {
    std::vector<std::string> labels;
    for (const auto& l : detail::field(j, "basis")) labels.push_back(detail::str_field(l));
    BasisPtr basis = make_basis(std::move(labels));
    const int n = basis->size();
    const std::size_t ns = static_cast<std::size_t>(n);
    auto idx = [&](const Json& v) {
        int i = basis->find(detail::str_field(v));
        if (i < 0) throw Error("ParseError", "unknown basis label '" + detail::str_field(v) + "'");
        return i;
    };
    std::vector<Rat> mult(ns * ns * ns), comult(ns * ns * ns), counit(ns, Rat(0));
    for (const auto& e : detail::field(j, "mult")) {
        if (!e.is_array() || e.size() != 4) throw Error("ParseError", "mult entry must be [i, j, k, c]");
        mult[(static_cast<std::size_t>(idx(e[0])) * ns + idx(e[1])) * ns + idx(e[2])] =
            rat_parse(detail::str_field(e[3]));
    }
    for (const auto& e : detail::field(j, "comult")) {
        if (!e.is_array() || e.size() != 4) throw Error("ParseError", "comult entry must be [i, j, k, c]");
        comult[(static_cast<std::size_t>(idx(e[0])) * ns + idx(e[1])) * ns + idx(e[2])] =
            rat_parse(detail::str_field(e[3]));
    }
    for (const auto& [label, c] : detail::field(j, "counit").items()) {
        int i = basis->find(label);
        if (i < 0) throw Error("ParseError", "counit entry for unknown label '" + label + "'");
        counit[static_cast<std::size_t>(i)] = rat_parse(detail::str_field(c));
    }
    Vec unit = vec_from_json(detail::field(j, "unit"), basis);
    LinMap antipode(basis, basis, mat_from_json(detail::field(j, "antipode"), n, n));
    std::optional<DoubleTag> tag;
    if (j.contains("double")) {
        const Json& dj = j["double"];
        DoubleTag t;
        t.groupoid = groupoid_from_json(detail::field(dj, "groupoid"));
        t.basis_of_pair.assign(static_cast<std::size_t>(t.groupoid.num_morphisms()) * t.groupoid.num_morphisms(), -1);
        t.pair_of_basis.assign(static_cast<std::size_t>(n), {-1, -1});
        const Json& pairs = detail::field(dj, "pairs");
        if (static_cast<int>(pairs.size()) != n) throw Error("ParseError", "double pair table size mismatch");
        for (const auto& e : pairs) {
            if (!e.is_array() || e.size() != 3) throw Error("ParseError", "double pair entry must be [label, g, x]");
            int b = basis->find(detail::str_field(e[0]));
            int g = t.groupoid.find_morphism(detail::str_field(e[1]));
            int x = t.groupoid.find_morphism(detail::str_field(e[2]));
            if (b < 0 || g < 0 || x < 0) throw Error("ParseError", "double pair entry references unknown id");
            t.pair_of_basis[static_cast<std::size_t>(b)] = {g, x};
            t.basis_of_pair[static_cast<std::size_t>(g) * t.groupoid.num_morphisms() + x] = b;
        }
        tag = std::move(t);
    }
    return QuantumGroupoid(basis, std::move(mult), std::move(unit), std::move(comult), std::move(counit),
                           std::move(antipode), std::move(tag));
}

inline Json double_to_json(const DrinfeldDouble& dd) {
    Json j;
    j["algebra"] = quantum_groupoid_to_json(*dd.algebra);
    j["r"] = vec_to_json(dd.r.r);
    j["rbar"] = vec_to_json(dd.r.rbar);
    j["rbar_solution_space_dim"] = dd.r.solution_space_dim;
    return j;
}

// ---------------------------------------------------------------------------
// HModule

inline Json module_to_json(const HModule& M, const Bigrading* grading = nullptr) {
    Json j;
    if (M.algebra->double_tag()) {
        j["algebra"] = Json{{"construction", "drinfeld-double"},
                            {"groupoid", groupoid_to_json(M.algebra->double_tag()->groupoid)}};
    } else {
        j["algebra"] = Json{{"construction", "explicit"}, {"data", quantum_groupoid_to_json(*M.algebra)}};
    }
    j["carrier"] = M.carrier->labels();
    Json act = Json::object();
    for (int h = 0; h < M.algebra->dim(); ++h) act[M.algebra->basis()->label(h)] = mat_to_json(M.action_of(h));
    j["action"] = std::move(act);
    if (grading && M.algebra->double_tag()) {
        const Groupoid& G = M.algebra->double_tag()->groupoid;
        Json gr = Json::object();
        for (int i = 0; i < M.dim(); ++i) {
            auto [x, g] = grading->degree[static_cast<std::size_t>(i)];
            gr[M.carrier->label(i)] = Json::array({G.object_name(x), G.morphism_id(g)});
        }
        j["grading"] = std::move(gr);
    }
    return j;
}

struct LoadedModule {
    AlgebraPtr algebra;
    HModule module;
    std::optional<Bigrading> grading;
    std::optional<DrinfeldDouble> dd;  // present when the algebra block named a double
};

inline LoadedModule module_from_json(const Json& j) {
    LoadedModule out;
    const Json& alg = detail::field(j, "algebra");
    std::string kind = detail::str_field(detail::field(alg, "construction"));
    if (kind == "drinfeld-double") {
        Groupoid G = groupoid_from_json(detail::field(alg, "groupoid"));
        out.dd = drinfeld_double(G);
        out.algebra = out.dd->algebra;
    } else if (kind == "groupoid-algebra") {
        Groupoid G = groupoid_from_json(detail::field(alg, "groupoid"));
        out.algebra = std::make_shared<const QuantumGroupoid>(groupoid_algebra(G));
    } else if (kind == "explicit") {
        out.algebra = std::make_shared<const QuantumGroupoid>(quantum_groupoid_from_json(detail::field(alg, "data")));
    } else {
        throw Error("ParseError", "unknown algebra construction '" + kind + "'");
    }
    std::vector<std::string> labels;
    for (const auto& l : detail::field(j, "carrier")) labels.push_back(detail::str_field(l));
    out.module.algebra = out.algebra;
    out.module.carrier = make_basis(std::move(labels));
    const int d = out.module.dim();
    out.module.action.assign(static_cast<std::size_t>(out.algebra->dim()), Mat(d, d));
    for (const auto& [label, mj] : detail::field(j, "action").items()) {
        int h = out.algebra->basis()->find(label);
        if (h < 0) throw Error("ParseError", "action entry for unknown algebra label '" + label + "'");
        out.module.action[static_cast<std::size_t>(h)] = mat_from_json(mj, d, d);
    }
    if (j.contains("grading")) {
        if (!out.algebra->double_tag()) throw Error("ParseError", "grading block requires a double algebra");
        const Groupoid& G = out.algebra->double_tag()->groupoid;
        Bigrading gr;
        gr.degree.assign(static_cast<std::size_t>(d), {-1, -1});
        for (const auto& [label, e] : j["grading"].items()) {
            int i = out.module.carrier->find(label);
            if (i < 0) throw Error("ParseError", "grading entry for unknown carrier label '" + label + "'");
            if (!e.is_array() || e.size() != 2) throw Error("ParseError", "grading entry must be [object, morphism]");
            int x = G.find_object(detail::str_field(e[0]));
            int g = G.find_morphism(detail::str_field(e[1]));
            if (x < 0 || g < 0) throw Error("ParseError", "grading entry references unknown object/morphism");
            gr.degree[static_cast<std::size_t>(i)] = {x, g};
        }
        for (const auto& dg : gr.degree)
            if (dg.first < 0) throw Error("ParseError", "grading block does not cover the carrier");
        out.grading = std::move(gr);
    }
    return out;
}

// ---------------------------------------------------------------------------
// GFA

inline Json gfa_to_json(const Gfa& A) {
    Json j;
    j["groupoid"] = groupoid_to_json(A.groupoid);
    Json carrier = Json::array();
    for (int i = 0; i < A.dim(); ++i) {
        auto [x, g] = A.degree[static_cast<std::size_t>(i)];
        carrier.push_back(Json{{"label", A.carrier->label(i)},
                               {"object", A.groupoid.object_name(x)},
                               {"degree", A.groupoid.morphism_id(g)}});
    }
    j["carrier"] = std::move(carrier);
    Json prod = Json::array();
    const int d = A.dim();
    for (int i = 0; i < d; ++i)
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) {
                const Rat& c = A.product[(static_cast<std::size_t>(i) * d + a) * d + b];
                if (!is_zero(c))
                    prod.push_back(Json::array(
                        {A.carrier->label(i), A.carrier->label(a), A.carrier->label(b), rat_str(c)}));
            }
    j["product"] = std::move(prod);
    j["unit"] = vec_to_json(A.unit);
    j["eta"] = mat_to_json(A.eta);
    Json phi = Json::object();
    for (const auto& [m, f] : A.phi) phi[A.groupoid.morphism_id(m)] = mat_to_json(f.mat);
    j["phi"] = std::move(phi);
    return j;
}

inline Gfa gfa_from_json(const Json& j) {
    Gfa A;
    A.groupoid = groupoid_from_json(detail::field(j, "groupoid"));
    std::vector<std::string> labels;
    for (const auto& e : detail::field(j, "carrier")) {
        labels.push_back(detail::str_field(detail::field(e, "label")));
        int x = A.groupoid.find_object(detail::str_field(detail::field(e, "object")));
        int g = A.groupoid.find_morphism(detail::str_field(detail::field(e, "degree")));
        if (x < 0 || g < 0) throw Error("ParseError", "carrier entry references unknown object/morphism");
        A.degree.emplace_back(x, g);
    }
    A.carrier = make_basis(std::move(labels));
    const int d = A.dim();
    auto idx = [&](const Json& v) {
        int i = A.carrier->find(detail::str_field(v));
        if (i < 0) throw Error("ParseError", "unknown carrier label '" + detail::str_field(v) + "'");
        return i;
    };
    A.product.assign(static_cast<std::size_t>(d) * d * d, Rat(0));
    for (const auto& e : detail::field(j, "product")) {
        if (!e.is_array() || e.size() != 4) throw Error("ParseError", "product entry must be [i, j, k, c]");
        A.product[(static_cast<std::size_t>(idx(e[0])) * d + idx(e[1])) * d + idx(e[2])] =
            rat_parse(detail::str_field(e[3]));
    }
    A.unit = vec_from_json(detail::field(j, "unit"), A.carrier);
    A.eta = mat_from_json(detail::field(j, "eta"), d, d);
    const Json& phi = detail::field(j, "phi");
    for (int m = 0; m < A.groupoid.num_morphisms(); ++m) {
        auto it = phi.find(A.groupoid.morphism_id(m));
        if (it == phi.end()) throw Error("ParseError", "phi is missing morphism '" + A.groupoid.morphism_id(m) + "'");
        BasisPtr dom = A.object_basis(A.groupoid.src(m));
        BasisPtr cod = A.object_basis(A.groupoid.tgt(m));
        A.phi.emplace(m, LinMap(dom, cod, mat_from_json(*it, cod->size(), dom->size())));
    }
    return A;
}

// ---------------------------------------------------------------------------
// Frobenius object data

inline Json frobenius_to_json(const FrobeniusObjectData& F) {
    Json j;
    j["groupoid"] = groupoid_to_json(F.dd.tag().groupoid);
    Json mod;
    mod["carrier"] = F.module.carrier->labels();
    Json act = Json::object();
    for (int h = 0; h < F.dd.algebra->dim(); ++h)
        act[F.dd.algebra->basis()->label(h)] = mat_to_json(F.module.action_of(h));
    mod["action"] = std::move(act);
    Json gr = Json::object();
    const Groupoid& G = F.dd.tag().groupoid;
    for (int i = 0; i < F.module.dim(); ++i) {
        auto [x, g] = F.grading.degree[static_cast<std::size_t>(i)];
        gr[F.module.carrier->label(i)] = Json::array({G.object_name(x), G.morphism_id(g)});
    }
    mod["grading"] = std::move(gr);
    j["module"] = std::move(mod);
    Json maps;
    maps["m"] = Json{{"domain", F.m.domain->labels()}, {"matrix", mat_to_json(F.m.mat)}};
    maps["mu"] = Json{{"domain", F.mu.domain->labels()}, {"matrix", mat_to_json(F.mu.mat)}};
    maps["delta"] = Json{{"codomain", F.delta.codomain->labels()}, {"matrix", mat_to_json(F.delta.mat)}};
    maps["eps"] = Json{{"codomain", F.eps.codomain->labels()}, {"matrix", mat_to_json(F.eps.mat)}};
    j["maps"] = std::move(maps);
    return j;
}

inline FrobeniusObjectData frobenius_from_json(const Json& j) {
    Groupoid G = groupoid_from_json(detail::field(j, "groupoid"));
    DrinfeldDouble dd = drinfeld_double(G);
    const Json& mod = detail::field(j, "module");

    HModule M;
    M.algebra = dd.algebra;
    std::vector<std::string> labels;
    for (const auto& l : detail::field(mod, "carrier")) labels.push_back(detail::str_field(l));
    M.carrier = make_basis(std::move(labels));
    const int d = M.dim();
    M.action.assign(static_cast<std::size_t>(dd.algebra->dim()), Mat(d, d));
    for (const auto& [label, mj] : detail::field(mod, "action").items()) {
        int h = dd.algebra->basis()->find(label);
        if (h < 0) throw Error("ParseError", "action entry for unknown algebra label '" + label + "'");
        M.action[static_cast<std::size_t>(h)] = mat_from_json(mj, d, d);
    }
    Bigrading grading;
    grading.degree.assign(static_cast<std::size_t>(d), {-1, -1});
    for (const auto& [label, e] : detail::field(mod, "grading").items()) {
        int i = M.carrier->find(label);
        if (i < 0) throw Error("ParseError", "grading entry for unknown carrier label '" + label + "'");
        if (!e.is_array() || e.size() != 2) throw Error("ParseError", "grading entry must be [object, morphism]");
        int x = G.find_object(detail::str_field(e[0]));
        int g = G.find_morphism(detail::str_field(e[1]));
        if (x < 0 || g < 0) throw Error("ParseError", "grading entry references unknown object/morphism");
        grading.degree[static_cast<std::size_t>(i)] = {x, g};
    }
    for (const auto& dg : grading.degree)
        if (dg.first < 0) throw Error("ParseError", "grading block does not cover the carrier");

    // The stated domains/codomains must coincide with the derived carriers.
    ProductModule square = monoidal_product(M, M);
    UnitObject I = unit_object(dd.algebra);
    const Json& maps = detail::field(j, "maps");
    auto check_labels = [](const Json& stated, const BasisPtr& derived, const char* what) {
        std::vector<std::string> s;
        for (const auto& l : stated) s.push_back(detail::str_field(l));
        if (s != derived->labels())
            throw Error("ParseError", std::string("stated basis of '") + what + "' differs from the derived carrier");
    };
    const Json& jm = detail::field(maps, "m");
    const Json& jmu = detail::field(maps, "mu");
    const Json& jdelta = detail::field(maps, "delta");
    const Json& jeps = detail::field(maps, "eps");
    check_labels(detail::field(jm, "domain"), square.module.carrier, "m");
    check_labels(detail::field(jmu, "domain"), I.module.carrier, "mu");
    check_labels(detail::field(jdelta, "codomain"), square.module.carrier, "delta");
    check_labels(detail::field(jeps, "codomain"), I.module.carrier, "eps");
    LinMap m(square.module.carrier, M.carrier,
             mat_from_json(detail::field(jm, "matrix"), d, square.module.dim()));
    LinMap mu(I.module.carrier, M.carrier, mat_from_json(detail::field(jmu, "matrix"), d, I.module.dim()));
    LinMap delta(M.carrier, square.module.carrier,
                 mat_from_json(detail::field(jdelta, "matrix"), square.module.dim(), d));
    LinMap eps(M.carrier, I.module.carrier, mat_from_json(detail::field(jeps, "matrix"), I.module.dim(), d));
    return make_frobenius_data(std::move(dd), std::move(M), std::move(grading), std::move(m), std::move(mu),
                               std::move(delta), std::move(eps));
}

}  // namespace grpdfrob
