#pragma once

// Bounded kernel/cokernel closure of add M, relative simples and the
// ab-projectivity test.

#include "analysis.hpp"

#include <map>
#include <set>

namespace quivstat {

/// Hom spaces are enumerated in full while p^dim stays below this; larger ones are sampled.
inline constexpr std::uint64_t closure_enumeration_cap = std::uint64_t{1} << 12;

struct ClosureBudget {
    std::size_t dim_cap = 0;       // 0: 4 * dim M
    std::size_t iter_cap = 8;
    std::size_t max_summands = 3;  // summands in source and target together
};

template <class K>
struct ClosureState {
    Rep<K> module;
    std::vector<Rep<K>> generators;  // pairwise non-isomorphic indecomposables
    std::vector<std::size_t> born;   // pass in which each generator appeared (0 = summand of M)
    std::size_t generation_index = 0;
    ClosureBudget budget;
    bool stable = false;
    bool sampled = false;    // some Hom space was sampled rather than enumerated
    bool undecided = false;  // some decomposition or isomorphism test was undecided
};

namespace detail {

inline std::string structural_key_dims(const std::vector<std::size_t>& dims) {
    std::string s;
    for (auto d : dims) s += std::to_string(d) + ",";
    return s;
}

/// Exact textual fingerprint: equal keys mean equal representations.
template <class K>
std::string structural_key(const Rep<K>& x) {
    std::string s = structural_key_dims(x->dims());
    for (const auto& m : x->maps()) s += "|" + m.to_string();
    return s;
}

/// Multisets of generator indices with 1..max_size elements.
inline std::vector<std::vector<std::size_t>> multisets(std::size_t n, std::size_t max_size) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (!cur.empty()) out.push_back(cur);
        if (cur.size() == max_size) return;
        for (std::size_t i = start; i < n; ++i) {
            cur.push_back(i);
            rec(i);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

template <class K>
Rep<K> sum_of(const AlgebraPtr<K>& alg, const std::vector<Rep<K>>& gens, const std::vector<std::size_t>& idx) {
    std::vector<Rep<K>> parts;
    for (auto i : idx) parts.push_back(gens[i]);
    return parts.size() == 1 ? parts[0] : direct_sum(alg, parts).sum;
}

/// Visits the elements of a Hom space: every element when small enough,
/// otherwise the basis and random combinations. Returns false if sampled.
template <class K, class Fn>
bool for_each_morphism(const HomSpace<K>& h, Rng& rng, Fn&& visit) {
    const Field<K>& f = h.source()->field();
    if constexpr (Field<K>::finite) {
        if (bounded_power(f.size(), h.dim(), closure_enumeration_cap)) {
            for_each_vector(f, h.dim(), [&](const std::vector<Zp>& c) { return !visit(h.combine(c)); });
            return true;
        }
    }
    for (const auto& b : h.basis())
        if (visit(b)) return false;
    for (std::size_t t = 0; t < sampling_budget; ++t) {
        std::vector<K> c(h.dim());
        for (auto& x : c) x = f.random(rng);
        if (visit(h.combine(c))) return false;
    }
    return false;
}

/// Source/target multiset pairs within the summand and dimension caps.
template <class K, class Fn>
void for_each_sum_pair(const ClosureState<K>& st, std::size_t skip_below, Fn&& visit) {
    const auto& gens = st.generators;
    const auto sets = multisets(gens.size(), st.budget.max_summands - 1);
    std::vector<std::size_t> dims;
    for (const auto& s : sets) {
        std::size_t d = 0;
        for (auto i : s) d += gens[i]->total_dim();
        dims.push_back(d);
    }
    for (std::size_t a = 0; a < sets.size(); ++a) {
        if (dims[a] > st.budget.dim_cap) continue;
        for (std::size_t b = 0; b < sets.size(); ++b) {
            if (sets[a].size() + sets[b].size() > st.budget.max_summands || dims[b] > st.budget.dim_cap) continue;
            const std::size_t top = std::max(sets[a].back(), sets[b].back());
            if (top < skip_below) continue;
            visit(sets[a], sets[b]);
        }
    }
}

}  // namespace detail

/// ab_0 = add M; pass n adds the indecomposable summands of kernels and
/// cokernels of maps between sums of ab_(n-1) generators. Only pairs involving
/// a generator from the previous pass are rescanned.
template <class K>
ClosureState<K> ab_closure(const Rep<K>& m, Rng& rng, ClosureBudget budget = {}) {
    ClosureState<K> st;
    st.module = m;
    if (budget.dim_cap == 0) budget.dim_cap = 4 * m->total_dim();
    if (budget.max_summands < 2) throw UsageError("ab_closure needs at least two summands per pair");
    st.budget = budget;
    const auto d = decompose(m, rng);
    if (d.certified != Verdict::yes) st.undecided = true;
    for (const auto& s : d.summands) {
        st.generators.push_back(s.module);
        st.born.push_back(0);
    }
    const auto alg = m->algebra();
    std::set<std::string> seen;
    std::size_t previous = 0;
    for (std::size_t pass = 1; pass <= budget.iter_cap; ++pass) {
        std::vector<Rep<K>> fresh;
        bool pass_sampled = false;
        auto absorb = [&](const Rep<K>& x) {
            if (x->is_zero() || !seen.insert(detail::structural_key(x)).second) return;
            const auto dx = decompose(x, rng);
            if (dx.certified != Verdict::yes) st.undecided = true;
            for (const auto& s : dx.summands) {
                bool known = false;
                for (const auto* list : {&st.generators, &fresh})
                    for (const auto& g : *list) {
                        if (known) break;
                        const auto iso = are_isomorphic(s.module, g, rng);
                        if (iso.verdict == Verdict::undecided) st.undecided = true;
                        known = iso.verdict == Verdict::yes;
                    }
                if (!known) fresh.push_back(s.module);
            }
        };
        const std::size_t count = st.generators.size();
        detail::for_each_sum_pair(st, previous, [&](const auto& src, const auto& dst) {
            const HomSpace<K> h(detail::sum_of(alg, st.generators, src), detail::sum_of(alg, st.generators, dst));
            const bool full = detail::for_each_morphism(h, rng, [&](const Morphism<K>& f) {
                absorb(kernel(f).first);
                absorb(cokernel(f).first);
                return false;
            });
            if (!full) pass_sampled = true;
        });
        st.generation_index = pass;
        previous = count;
        if (pass_sampled) st.sampled = true;
        if (fresh.empty()) {
            st.stable = !st.sampled;
            return st;
        }
        for (auto& x : fresh) {
            st.generators.push_back(std::move(x));
            st.born.push_back(pass);
        }
    }
    return st;
}

// ---------------------------------------------------------------------------
// Relative simples

template <class K>
struct RelativeSimples {
    std::vector<Rep<K>> simples;
    bool orthogonal = false;    // Hom both ways zero between distinct simples
    bool bricks = false;
    bool within_length = false;  // count <= composition length of M
    Verdict decided = Verdict::yes;
};

namespace detail {

/// Every nonzero element of Hom(x, y) satisfies pred; no if a counterexample exists.
template <class K, class Pred>
Verdict all_nonzero(const HomSpace<K>& h, Pred&& pred) {
    if (h.dim() == 0) return Verdict::yes;
    if constexpr (Field<K>::finite) {
        if (bounded_power(h.source()->field().size(), h.dim(), enumeration_cap)) {
            bool ok = true;
            for_each_vector(h.source()->field(), h.dim(), [&](const std::vector<Zp>& c) {
                const auto f = h.combine(c);
                if (!f.is_zero() && !pred(f)) ok = false;
                return ok;
            });
            return ok ? Verdict::yes : Verdict::no;
        }
    }
    for (const auto& f : h.basis())
        if (!pred(f)) return Verdict::no;
    return Verdict::undecided;
}

}  // namespace detail

/// Generators S such that every nonzero map from a generator into S is onto
/// and every nonzero map out of S into a generator is injective: S has no
/// proper nonzero subobject or quotient inside the closure.
template <class K>
RelativeSimples<K> relative_simples(const ClosureState<K>& st, Rng& rng) {
    if (!st.stable) throw UsageError("relative_simples needs a stable closure");
    RelativeSimples<K> out;
    for (const auto& s : st.generators) {
        Verdict simple = Verdict::yes;
        for (const auto& g : st.generators) {
            const auto in = detail::all_nonzero(HomSpace<K>(g, s), [](const Morphism<K>& f) { return f.is_surjective(); });
            const auto outv = detail::all_nonzero(HomSpace<K>(s, g), [](const Morphism<K>& f) { return f.is_injective(); });
            if (in == Verdict::no || outv == Verdict::no) {
                simple = Verdict::no;
                break;
            }
            if (in == Verdict::undecided || outv == Verdict::undecided) simple = Verdict::undecided;
        }
        if (simple == Verdict::undecided) out.decided = Verdict::undecided;
        if (simple == Verdict::yes) out.simples.push_back(s);
    }
    out.orthogonal = true;
    out.bricks = true;
    for (std::size_t i = 0; i < out.simples.size(); ++i) {
        if (is_brick(out.simples[i], rng) != Verdict::yes) out.bricks = false;
        for (std::size_t j = 0; j < out.simples.size(); ++j)
            if (i != j && hom_dim(out.simples[i], out.simples[j]) != 0) out.orthogonal = false;
    }
    out.within_length = out.simples.size() <= st.module->total_dim();
    return out;
}

/// Loewy length of x relative to the given simples: iterate x -> x / trace of the simples.
template <class K>
std::size_t relative_loewy_length(const Rep<K>& x, const std::vector<Rep<K>>& simples) {
    Rep<K> cur = x;
    std::size_t length = 0;
    while (!cur->is_zero()) {
        std::vector<Matrix<K>> trace;
        for (std::size_t v = 0; v < cur->vertex_count(); ++v) trace.emplace_back(cur->field(), cur->dim(v), 0);
        for (const auto& s : simples) {
            const HomSpace<K> h(s, cur);
            for (const auto& f : h.basis())
                for (std::size_t v = 0; v < cur->vertex_count(); ++v) trace[v] = hstack(trace[v], f.map(v));
        }
        for (auto& t : trace) t = column_space(t);
        if (total_columns(trace) == 0) throw UsageError("module has no relative socle: not in the closure");
        cur = quotient_representation(cur, trace).first;
        ++length;
    }
    return length;
}

// ---------------------------------------------------------------------------
// ab-projectivity

template <class K>
struct AbProjectivity {
    Verdict projective = Verdict::undecided;  // yes only within the scanned budget
    bool within_budget = true;                // every epi in scope was enumerated
    std::optional<Morphism<K>> counterexample;  // epi g with Hom(M, g) not onto
};

template <class K>
AbProjectivity<K> is_ab_projective(const Rep<K>& m, const ClosureState<K>& st, Rng& rng) {
    if (!st.stable) throw UsageError("is_ab_projective needs a stable closure");
    AbProjectivity<K> out;
    const auto alg = m->algebra();
    bool failed = false;
    detail::for_each_sum_pair(st, 0, [&](const auto& src, const auto& dst) {
        if (failed) return;
        const Rep<K> a = detail::sum_of(alg, st.generators, src), b = detail::sum_of(alg, st.generators, dst);
        for (std::size_t v = 0; v < a->vertex_count(); ++v)
            if (a->dim(v) < b->dim(v)) return;
        const HomSpace<K> h(a, b);
        const HomSpace<K> ma(m, a), mb(m, b);
        if (mb.dim() == 0) return;
        const bool full = detail::for_each_morphism(h, rng, [&](const Morphism<K>& g) {
            if (!g.is_surjective()) return false;
            if (rank(hom_map(ma, mb, g)) == mb.dim()) return false;
            out.counterexample = g;
            failed = true;
            return true;
        });
        if (!full && !failed) out.within_budget = false;
    });
    out.projective = failed ? Verdict::no : (out.within_budget ? Verdict::yes : Verdict::undecided);
    return out;
}

// ---------------------------------------------------------------------------
// Closure of add M itself

template <class K>
struct CokernelEscape {
    std::optional<Morphism<K>> map;  // between sums of summands of M
    std::optional<Rep<K>> summand;   // indecomposable summand of its cokernel outside add M
    Verdict closed = Verdict::undecided;
};

/// Searches maps between sums of the summand types of M for a cokernel with a
/// summand not in add M.
template <class K>
CokernelEscape<K> add_cokernel_escape(const Rep<K>& m, Rng& rng, std::size_t max_summands = 3) {
    ClosureState<K> st;
    st.module = m;
    st.budget = {4 * m->total_dim(), 1, max_summands};
    const auto d = decompose(m, rng);
    for (const auto& s : d.summands) st.generators.push_back(s.module);
    CokernelEscape<K> out;
    bool complete = d.certified == Verdict::yes;
    detail::for_each_sum_pair(st, 0, [&](const auto& src, const auto& dst) {
        if (out.map) return;
        const HomSpace<K> h(detail::sum_of(m->algebra(), st.generators, src),
                            detail::sum_of(m->algebra(), st.generators, dst));
        const bool full = detail::for_each_morphism(h, rng, [&](const Morphism<K>& f) {
            const auto dc = decompose(cokernel(f).first, rng);
            for (const auto& s : dc.summands) {
                bool inside = false;
                for (const auto& g : st.generators) {
                    const auto iso = are_isomorphic(s.module, g, rng);
                    if (iso.verdict == Verdict::undecided) complete = false;
                    if (iso.verdict == Verdict::yes) inside = true;
                }
                if (!inside) {
                    out.map = f;
                    out.summand = s.module;
                    return true;
                }
            }
            return false;
        });
        if (!full) complete = false;
    });
    out.closed = out.map ? Verdict::no : (complete ? Verdict::yes : Verdict::undecided);
    return out;
}

}  // namespace quivstat
