// Built-in demonstration groupoids used by the CLI demo command and the test
// suites: one-object groupoids on small groups, pair groupoids, a disjoint
// union, and an action groupoid with nontrivial isotropy transport.
#pragma once

#include <array>
#include <string>
#include <vector>

#include "grpdfrob/error.hpp"
#include "grpdfrob/groupoid.hpp"

namespace grpdfrob {

inline GroupTable group_trivial() { return GroupTable{{"e"}, {{0}}}; }

inline GroupTable group_cyclic(int n) {
    GroupTable t;
    for (int i = 0; i < n; ++i) t.elements.push_back("c" + std::to_string(i));
    t.table.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t.table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i + j) % n;
    return t;
}

inline GroupTable group_z2() {
    GroupTable t = group_cyclic(2);
    t.elements = {"e", "g"};
    return t;
}

// Symmetric group on three letters, as permutations composed left-to-right
// through function application (a·b applies b first).
inline GroupTable group_s3() {
    const std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    GroupTable t;
    t.elements = {"e", "s01", "s02", "s12", "r1", "r2"};
    t.table.assign(6, std::vector<int>(6, -1));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            std::array<int, 3> c{};
            for (int i = 0; i < 3; ++i)
                c[static_cast<std::size_t>(i)] =
                    perms[static_cast<std::size_t>(a)][static_cast<std::size_t>(perms[static_cast<std::size_t>(b)][static_cast<std::size_t>(i)])];
            for (int k = 0; k < 6; ++k)
                if (perms[static_cast<std::size_t>(k)] == c) t.table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = k;
        }
    return t;
}

// Z/4 acting on two points through its generator swapping them; each point
// has stabilizer {c0, c2}.
inline GroupAction z4_swap_action() {
    return GroupAction{group_cyclic(4), 2, {{0, 1}, {1, 0}, {0, 1}, {1, 0}}};
}

inline const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names = {"trivial", "z2", "s3", "pair2", "pair3", "z2-disjoint", "z4-on-2"};
    return names;
}

inline Groupoid fixture_groupoid(const std::string& name) {
    if (name == "trivial") return one_object_groupoid(group_trivial());
    if (name == "z2") return one_object_groupoid(group_z2());
    if (name == "s3") return one_object_groupoid(group_s3());
    if (name == "pair2") return pair_groupoid(2);
    if (name == "pair3") return pair_groupoid(3);
    if (name == "z2-disjoint") {
        Groupoid a = one_object_groupoid(group_z2());
        return disjoint_union(a, a);
    }
    if (name == "z4-on-2") return action_groupoid(z4_swap_action());
    throw Error("UnknownFixture", "no fixture named '" + name + "'");
}

}  // namespace grpdfrob
