#pragma once

// Quivers, relations and the basis of paths modulo an admissible ideal.
//
// Composition convention: a path is stored as the sequence of arrows in the
// order they are traversed. The written word "a.g" (or "ag") means "g first,
// then a", i.e. composition of functions. With this reading the two-vertex
// example with arrows a,b: 1->2, g: 2->1 and relations ag = bg = 0 keeps the
// paths ga and gb, and the injective I(1) has dimension vector (3,1).

#include "matrix.hpp"

#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <tuple>
#include <vector>

namespace quivstat {

struct Arrow {
    std::string name;
    std::size_t source = 0;
    std::size_t target = 0;
    bool operator==(const Arrow&) const = default;
};

class Quiver {
public:
    Quiver() = default;
    explicit Quiver(std::size_t vertices) : vertices_(vertices) {}

    std::size_t add_arrow(std::string name, std::size_t source, std::size_t target) {
        if (source >= vertices_ || target >= vertices_)
            throw UsageError("arrow '" + name + "' has an endpoint outside 0.." + std::to_string(vertices_ - 1));
        for (const auto& a : arrows_)
            if (a.name == name) throw UsageError("duplicate arrow name '" + name + "'");
        arrows_.push_back({std::move(name), source, target});
        return arrows_.size() - 1;
    }

    std::size_t vertex_count() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const Arrow& arrow(std::size_t i) const { return arrows_.at(i); }

    std::optional<std::size_t> find_arrow(const std::string& name) const {
        for (std::size_t i = 0; i < arrows_.size(); ++i)
            if (arrows_[i].name == name) return i;
        return std::nullopt;
    }

    bool is_acyclic() const {
        // Kahn's algorithm; loops count as cycles.
        std::vector<std::size_t> indeg(vertices_, 0);
        for (const auto& a : arrows_) ++indeg[a.target];
        std::vector<std::size_t> ready;
        for (std::size_t v = 0; v < vertices_; ++v)
            if (indeg[v] == 0) ready.push_back(v);
        std::size_t seen = 0;
        while (!ready.empty()) {
            auto v = ready.back();
            ready.pop_back();
            ++seen;
            for (const auto& a : arrows_)
                if (a.source == v && --indeg[a.target] == 0) ready.push_back(a.target);
        }
        return seen == vertices_;
    }

    /// Length of the longest path; only meaningful for acyclic quivers.
    std::size_t longest_path() const {
        std::vector<std::size_t> best(vertices_, 0);
        for (std::size_t round = 0; round < vertices_; ++round)
            for (const auto& a : arrows_) best[a.target] = std::max(best[a.target], best[a.source] + 1);
        return vertices_ ? *std::max_element(best.begin(), best.end()) : 0;
    }

    bool is_connected() const {
        if (vertices_ == 0) return false;
        std::vector<std::size_t> parent(vertices_);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](std::size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& a : arrows_) parent[find(a.source)] = find(a.target);
        for (std::size_t v = 1; v < vertices_; ++v)
            if (find(v) != find(0)) return false;
        return true;
    }

    bool operator==(const Quiver&) const = default;

private:
    std::size_t vertices_ = 0;
    std::vector<Arrow> arrows_;
};

struct Path {
    std::size_t source = 0;
    std::size_t target = 0;
    std::vector<std::size_t> arrows;  // in traversal order

    std::size_t length() const { return arrows.size(); }
    static Path trivial(std::size_t v) { return {v, v, {}}; }
    auto key() const { return std::tie(source, arrows); }
    bool operator==(const Path&) const = default;
    bool operator<(const Path& o) const { return key() < o.key(); }
};

/// `first` followed by `second`; requires first.target == second.source.
inline Path concat(const Path& first, const Path& second) {
    Path p{first.source, second.target, first.arrows};
    p.arrows.insert(p.arrows.end(), second.arrows.begin(), second.arrows.end());
    return p;
}

/// Builds a path from a word written in composition order ("last applied" leftmost).
inline Path path_from_word(const Quiver& q, const std::vector<std::size_t>& word_left_to_right) {
    if (word_left_to_right.empty()) throw UsageError("empty path word");
    Path p;
    p.arrows.assign(word_left_to_right.rbegin(), word_left_to_right.rend());
    p.source = q.arrow(p.arrows.front()).source;
    p.target = q.arrow(p.arrows.back()).target;
    for (std::size_t i = 1; i < p.arrows.size(); ++i)
        if (q.arrow(p.arrows[i - 1]).target != q.arrow(p.arrows[i]).source)
            throw UsageError("path word is not composable");
    return p;
}

inline std::string path_word(const Quiver& q, const Path& p) {
    if (p.arrows.empty()) return "e" + std::to_string(p.source + 1);
    std::string s;
    for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) s += (s.empty() ? "" : ".") + q.arrow(*it).name;
    return s;
}

/// Integer linear combination of parallel paths.
struct Relation {
    std::vector<std::pair<long long, Path>> terms;
    bool operator==(const Relation&) const = default;
};

struct RelationSet {
    std::vector<Relation> relations;
    /// All paths of this length or longer are zero. 0 means "derive from an acyclic quiver".
    std::size_t cutoff = 0;
    bool operator==(const RelationSet&) const = default;
};

struct BoundQuiver {
    Quiver quiver;
    RelationSet relations;
    bool operator==(const BoundQuiver&) const = default;

    bool is_hereditary_path_algebra() const { return relations.relations.empty() && quiver.is_acyclic(); }
};

/// Every path of length <= max_length, sorted by (source, length, arrows).
inline std::vector<Path> all_paths(const Quiver& q, std::size_t max_length) {
    std::vector<Path> out;
    std::vector<Path> frontier;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) frontier.push_back(Path::trivial(v));
    out = frontier;
    for (std::size_t len = 1; len <= max_length; ++len) {
        std::vector<Path> next;
        for (const auto& p : frontier)
            for (std::size_t a = 0; a < q.arrows().size(); ++a)
                if (q.arrow(a).source == p.target) {
                    Path e = p;
                    e.arrows.push_back(a);
                    e.target = q.arrow(a).target;
                    next.push_back(std::move(e));
                }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end(), [](const Path& a, const Path& b) {
        return std::make_tuple(a.source, a.length(), a.arrows) < std::make_tuple(b.source, b.length(), b.arrows);
    });
    return out;
}

/// The algebra kQ/I with an explicit path basis and normal forms.
template <class K>
class PathAlgebra {
public:
    using Coords = std::vector<std::pair<std::size_t, K>>;  // sparse (basis index, coefficient)

    /// path_basis: length-graded elimination on the span of all paths below the cutoff.
    PathAlgebra(BoundQuiver bq, Field<K> field) : bq_(std::move(bq)), field_(field) {
        const Quiver& q = bq_.quiver;
        auto& rel = bq_.relations;
        if (rel.cutoff == 0) {
            if (!q.is_acyclic()) throw UsageError("a quiver with oriented cycles needs an explicit nilpotency cutoff");
            rel.cutoff = q.longest_path() + 1;
        }
        const std::size_t cutoff = rel.cutoff;
        for (const auto& r : rel.relations) {
            if (r.terms.empty()) throw UsageError("empty relation");
            for (const auto& [c, p] : r.terms) {
                if (p.source != r.terms[0].second.source || p.target != r.terms[0].second.target)
                    throw UsageError("relation is not homogeneous in its endpoints");
                if (p.length() < 2) throw UsageError("relation term of length < 2: ideal would not be admissible");
            }
        }
        paths_ = all_paths(q, cutoff);
        for (std::size_t i = 0; i < paths_.size(); ++i) index_[paths_[i]] = i;

        // Ideal generators u * rho * v, truncated above the cutoff, grouped by endpoint block.
        std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> block_paths;
        for (std::size_t i = 0; i < paths_.size(); ++i) block_paths[{paths_[i].source, paths_[i].target}].push_back(i);
        // Column order inside a block: longer paths first so that the surviving basis is short.
        for (auto& [key, idx] : block_paths)
            std::stable_sort(idx.begin(), idx.end(),
                             [&](std::size_t a, std::size_t b) { return paths_[a].length() > paths_[b].length(); });

        std::map<std::pair<std::size_t, std::size_t>, std::vector<std::vector<K>>> generators;
        for (const auto& r : rel.relations) {
            const std::size_t s = r.terms[0].second.source, t = r.terms[0].second.target;
            std::size_t min_len = cutoff + 1;
            for (const auto& term : r.terms) min_len = std::min(min_len, term.second.length());
            for (const auto& v : paths_) {
                if (v.target != s) continue;
                for (const auto& u : paths_) {
                    if (u.source != t || v.length() + min_len + u.length() > cutoff) continue;
                    auto& cols = block_paths[{v.source, u.target}];
                    std::vector<K> row(cols.size(), field_.zero());
                    bool nonzero = false;
                    for (const auto& [c, term] : r.terms) {
                        Path full = concat(concat(v, term), u);
                        if (full.length() > cutoff) continue;
                        const std::size_t pi = index_.at(full);
                        const std::size_t col = std::find(cols.begin(), cols.end(), pi) - cols.begin();
                        row[col] += field_.from_int(c);
                        nonzero = true;
                    }
                    if (nonzero) generators[{v.source, u.target}].push_back(std::move(row));
                }
            }
        }

        normal_.assign(paths_.size(), {});
        std::vector<std::size_t> basis_paths;
        std::vector<Coords> pending;  // normal forms still referring to path indices
        for (auto& [key, cols] : block_paths) {
            const auto& rows = generators[key];
            Echelon<K> e;
            if (!rows.empty()) {
                Matrix<K> m(field_, rows.size(), cols.size());
                for (std::size_t r = 0; r < rows.size(); ++r)
                    for (std::size_t c = 0; c < cols.size(); ++c) m(r, c) = rows[r][c];
                e = rref(m);
            }
            std::vector<long> pivot_row(cols.size(), -1);
            for (std::size_t r = 0; r < e.pivots.size(); ++r) pivot_row[e.pivots[r]] = static_cast<long>(r);
            for (std::size_t c = 0; c < cols.size(); ++c) {
                const Path& p = paths_[cols[c]];
                if (p.length() == cutoff) {
                    // Admissibility: every path at the cutoff must already lie in the ideal.
                    bool in_ideal = pivot_row[c] >= 0;
                    if (in_ideal)
                        for (std::size_t j = 0; j < cols.size(); ++j)
                            if (j != c && !Field<K>::is_zero(e.reduced(pivot_row[c], j))) in_ideal = false;
                    if (!in_ideal)
                        throw UsageError("ideal not admissible: path " + path_word(q, p) +
                                         " of length " + std::to_string(cutoff) + " does not reduce to zero");
                }
            }
            for (std::size_t c = 0; c < cols.size(); ++c) {
                if (pivot_row[c] >= 0) {
                    Coords nf;
                    for (std::size_t j = 0; j < cols.size(); ++j)
                        if (pivot_row[j] < 0 && !Field<K>::is_zero(e.reduced(pivot_row[c], j)))
                            nf.push_back({cols[j], -e.reduced(pivot_row[c], j)});
                    normal_[cols[c]] = std::move(nf);
                } else {
                    normal_[cols[c]] = {{cols[c], field_.one()}};
                    basis_paths.push_back(cols[c]);
                }
            }
        }
        // Basis order: by source, then length, then target and arrows (the order of paths_).
        std::sort(basis_paths.begin(), basis_paths.end());
        std::map<std::size_t, std::size_t> path_to_basis;
        for (std::size_t b = 0; b < basis_paths.size(); ++b) {
            path_to_basis[basis_paths[b]] = b;
            basis_.push_back(paths_[basis_paths[b]]);
        }
        for (auto& nf : normal_) {
            for (auto& [idx, c] : nf) idx = path_to_basis.at(idx);
            std::sort(nf.begin(), nf.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        }
        for (const auto& p : paths_)
            if (p.length() == cutoff) cutoff_paths_.push_back(p);
    }

    const BoundQuiver& bound_quiver() const { return bq_; }
    const Quiver& quiver() const { return bq_.quiver; }
    const Field<K>& field() const { return field_; }
    std::size_t cutoff() const { return bq_.relations.cutoff; }
    std::size_t dimension() const { return basis_.size(); }
    const std::vector<Path>& basis() const { return basis_; }
    /// Paths of length exactly the cutoff; a representation must kill all of them.
    const std::vector<Path>& cutoff_paths() const { return cutoff_paths_; }

    /// Basis indices of paths i -> j.
    std::vector<std::size_t> basis_between(std::size_t i, std::size_t j) const {
        std::vector<std::size_t> out;
        for (std::size_t b = 0; b < basis_.size(); ++b)
            if (basis_[b].source == i && basis_[b].target == j) out.push_back(b);
        return out;
    }

    /// Normal form of an arbitrary path (zero beyond the cutoff).
    Coords normal_form(const Path& p) const {
        if (p.length() >= cutoff()) return {};
        return normal_.at(index_.at(p));
    }

    /// Product "second after first" of two basis elements, i.e. the path first then second.
    Coords multiply_paths(std::size_t first, std::size_t second) const {
        const Path& a = basis_[first];
        const Path& b = basis_[second];
        if (a.target != b.source) return {};
        return normal_form(concat(a, b));
    }

    /// Dimension of e_j A e_i summed over targets: the length-independent size of P(i).
    std::size_t projective_dimension_vector_total(std::size_t i) const {
        std::size_t n = 0;
        for (const auto& p : basis_) n += (p.source == i);
        return n;
    }

private:
    BoundQuiver bq_;
    Field<K> field_;
    std::vector<Path> paths_;
    std::map<Path, std::size_t> index_;
    std::vector<Coords> normal_;
    std::vector<Path> basis_;
    std::vector<Path> cutoff_paths_;
};

template <class K>
using AlgebraPtr = std::shared_ptr<const PathAlgebra<K>>;

template <class K>
AlgebraPtr<K> make_algebra(BoundQuiver bq, Field<K> field) {
    return std::make_shared<const PathAlgebra<K>>(std::move(bq), field);
}

}  // namespace quivstat
