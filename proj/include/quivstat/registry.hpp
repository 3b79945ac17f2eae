#pragma once

// Bundled algebras, mirrored by the files in data/algebras.

#include "io.hpp"

#include <map>

namespace quivstat {

inline const std::map<std::string, std::string>& algebra_registry() {
    static const std::map<std::string, std::string> registry{
        {"kronecker", R"(# Kronecker quiver: two arrows from 1 to 2
field p=2
vertices 2
arrow a: 1 -> 2
arrow b: 1 -> 2
)"},
        {"kronecker3", R"(# 3-Kronecker quiver: three arrows from 1 to 2 (wild)
field p=2
vertices 2
arrow a: 1 -> 2
arrow b: 1 -> 2
arrow c: 1 -> 2
)"},
        {"a3", R"(# linear A3: 1 <- 2 <- 3
field p=2
vertices 3
arrow a: 2 -> 1
arrow b: 3 -> 2
)"},
        {"d4", R"(# D4 with subspace orientation; vertex 1 is the centre (a sink)
field p=2
vertices 4
arrow a: 2 -> 1
arrow b: 3 -> 1
arrow c: 4 -> 1
)"},
        {"five_subspace", R"(# five-subspace quiver: arms 2..6 into the centre 1 (wild)
field p=2
vertices 6
arrow a: 2 -> 1
arrow b: 3 -> 1
arrow c: 4 -> 1
arrow d: 5 -> 1
arrow e: 6 -> 1
)"},
        {"remark", R"(# a, b: 1 -> 2 and g: 2 -> 1 with g followed by a or b zero
field p=2
vertices 2
arrow a: 1 -> 2
arrow b: 1 -> 2
arrow g: 2 -> 1
relation a.g
relation b.g
cutoff 3
)"},
        {"nakayama887", R"(# cyclic Nakayama algebra with Kupisch series (8,8,7)
field p=2
vertices 3
arrow alpha: 1 -> 2
arrow beta: 2 -> 3
arrow gamma: 3 -> 1
relation beta.alpha.gamma.beta.alpha.gamma.beta.alpha
relation gamma.beta.alpha.gamma.beta.alpha.gamma
cutoff 8
)"},
        {"loop_star2", R"(# loop l at 1 and arrows from 2 and 3 into 1, all paths of length 2 zero
field p=2
vertices 3
arrow l: 1 -> 1
arrow a1: 2 -> 1
arrow a2: 3 -> 1
relation l.l
relation l.a1
relation l.a2
cutoff 2
)"},
    };
    return registry;
}

/// A registry name or a path to an algebra file.
inline AlgebraFile load_algebra(const std::string& name_or_path) {
    const auto& reg = algebra_registry();
    if (auto it = reg.find(name_or_path); it != reg.end()) return parse_algebra(it->second);
    return parse_algebra(read_file(name_or_path));
}

template <class K>
AlgebraPtr<K> registry_algebra(const std::string& name, Field<K> field) {
    return make_algebra(load_algebra(name).bound_quiver, field);
}

}  // namespace quivstat
