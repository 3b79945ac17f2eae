#pragma once

// Representations of a bound quiver, morphisms between them, Hom spaces and
// the kernel/cokernel/image constructions.

#include "quiver.hpp"

#include <memory>
#include <numeric>

namespace quivstat {

template <class K>
class Representation {
public:
    Representation(AlgebraPtr<K> algebra, std::vector<std::size_t> dims, std::vector<Matrix<K>> maps)
        : algebra_(std::move(algebra)), dims_(std::move(dims)), maps_(std::move(maps)) {
        const Quiver& q = algebra_->quiver();
        if (dims_.size() != q.vertex_count()) throw UsageError("dimension vector length differs from vertex count");
        if (maps_.size() != q.arrows().size()) throw UsageError("one matrix per arrow expected");
        for (std::size_t a = 0; a < maps_.size(); ++a) {
            const auto& arr = q.arrow(a);
            if (maps_[a].rows() != dims_[arr.target] || maps_[a].cols() != dims_[arr.source])
                throw UsageError("matrix of arrow '" + arr.name + "' has the wrong shape");
        }
        validate();
    }

    static Representation zero(AlgebraPtr<K> algebra) {
        const Quiver& q = algebra->quiver();
        std::vector<Matrix<K>> maps;
        for (std::size_t a = 0; a < q.arrows().size(); ++a) maps.emplace_back(algebra->field(), 0, 0);
        return Representation(algebra, std::vector<std::size_t>(q.vertex_count(), 0), std::move(maps));
    }

    const AlgebraPtr<K>& algebra() const { return algebra_; }
    const Field<K>& field() const { return algebra_->field(); }
    const Quiver& quiver() const { return algebra_->quiver(); }
    std::size_t vertex_count() const { return dims_.size(); }
    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t dim(std::size_t v) const { return dims_.at(v); }
    std::size_t total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0}); }
    const std::vector<Matrix<K>>& maps() const { return maps_; }
    const Matrix<K>& map(std::size_t a) const { return maps_.at(a); }
    bool is_zero() const { return total_dim() == 0; }

    /// Offset of vertex v in the concatenated total space.
    std::size_t offset(std::size_t v) const {
        return std::accumulate(dims_.begin(), dims_.begin() + static_cast<long>(v), std::size_t{0});
    }

    Matrix<K> path_action(const Path& p) const {
        Matrix<K> m = Matrix<K>::identity(field(), dims_[p.source]);
        for (auto a : p.arrows) m = maps_[a] * m;
        return m;
    }

    /// Throws UsageError unless every relation and every path at the cutoff acts as zero.
    void validate() const {
        const auto& bq = algebra_->bound_quiver();
        for (const auto& r : bq.relations.relations) {
            const auto& first = r.terms.front().second;
            Matrix<K> sum(field(), dims_[first.target], dims_[first.source]);
            for (const auto& [c, p] : r.terms) sum += field().from_int(c) * path_action(p);
            if (!sum.is_zero())
                throw UsageError("representation violates relation starting with " + path_word(quiver(), first));
        }
        for (const auto& p : algebra_->cutoff_paths())
            if (!path_action(p).is_zero())
                throw UsageError("representation does not kill path " + path_word(quiver(), p));
    }

    friend bool operator==(const Representation& a, const Representation& b) {
        return a.dims_ == b.dims_ && a.maps_ == b.maps_;
    }

private:
    AlgebraPtr<K> algebra_;
    std::vector<std::size_t> dims_;
    std::vector<Matrix<K>> maps_;
};

template <class K>
using Rep = std::shared_ptr<const Representation<K>>;

template <class K>
Rep<K> make_rep(AlgebraPtr<K> algebra, std::vector<std::size_t> dims, std::vector<Matrix<K>> maps) {
    return std::make_shared<const Representation<K>>(std::move(algebra), std::move(dims), std::move(maps));
}

template <class K>
Rep<K> zero_rep(AlgebraPtr<K> algebra) {
    return std::make_shared<const Representation<K>>(Representation<K>::zero(std::move(algebra)));
}

template <class K>
bool same_algebra(const AlgebraPtr<K>& a, const AlgebraPtr<K>& b) {
    return a == b || (a->bound_quiver() == b->bound_quiver() && a->field() == b->field());
}

template <class K>
void require_same_algebra(const Rep<K>& x, const Rep<K>& y) {
    if (!same_algebra(x->algebra(), y->algebra()))
        throw UsageError("representations belong to different algebras");
}

template <class K>
class Morphism {
public:
    Morphism() = default;
    Morphism(Rep<K> source, Rep<K> target, std::vector<Matrix<K>> maps)
        : source_(std::move(source)), target_(std::move(target)), maps_(std::move(maps)) {
        require_same_algebra(source_, target_);
        if (maps_.size() != source_->vertex_count()) throw UsageError("one matrix per vertex expected");
        for (std::size_t v = 0; v < maps_.size(); ++v)
            if (maps_[v].rows() != target_->dim(v) || maps_[v].cols() != source_->dim(v))
                throw UsageError("vertex map has the wrong shape");
    }

    static Morphism zero(Rep<K> x, Rep<K> y) {
        std::vector<Matrix<K>> maps;
        for (std::size_t v = 0; v < x->vertex_count(); ++v) maps.emplace_back(x->field(), y->dim(v), x->dim(v));
        return Morphism(std::move(x), std::move(y), std::move(maps));
    }
    static Morphism identity(Rep<K> x) {
        std::vector<Matrix<K>> maps;
        for (std::size_t v = 0; v < x->vertex_count(); ++v) maps.push_back(Matrix<K>::identity(x->field(), x->dim(v)));
        return Morphism(x, x, std::move(maps));
    }

    const Rep<K>& source() const { return source_; }
    const Rep<K>& target() const { return target_; }
    const std::vector<Matrix<K>>& maps() const { return maps_; }
    const Matrix<K>& map(std::size_t v) const { return maps_.at(v); }
    const Field<K>& field() const { return source_->field(); }

    bool commutes() const {
        const Quiver& q = source_->quiver();
        for (std::size_t a = 0; a < q.arrows().size(); ++a) {
            const auto& arr = q.arrow(a);
            if (!(maps_[arr.target] * source_->map(a) == target_->map(a) * maps_[arr.source])) return false;
        }
        return true;
    }

    bool is_zero() const {
        return std::all_of(maps_.begin(), maps_.end(), [](const Matrix<K>& m) { return m.is_zero(); });
    }
    std::size_t rank() const {
        std::size_t r = 0;
        for (const auto& m : maps_) r += quivstat::rank(m);
        return r;
    }
    bool is_injective() const { return rank() == source_->total_dim(); }
    bool is_surjective() const { return rank() == target_->total_dim(); }
    bool is_isomorphism() const { return is_injective() && is_surjective(); }

    /// Block-diagonal matrix of the whole map on total spaces.
    Matrix<K> total() const { return block_diagonal(field(), maps_); }

    /// Entries flattened vertex-major, row-major within each vertex.
    std::vector<K> flatten() const {
        std::vector<K> out;
        for (const auto& m : maps_) out.insert(out.end(), m.data().begin(), m.data().end());
        return out;
    }

    friend Morphism operator+(const Morphism& f, const Morphism& g) {
        std::vector<Matrix<K>> maps;
        for (std::size_t v = 0; v < f.maps_.size(); ++v) maps.push_back(f.maps_[v] + g.maps_[v]);
        return Morphism(f.source_, f.target_, std::move(maps));
    }
    friend Morphism operator-(const Morphism& f, const Morphism& g) {
        std::vector<Matrix<K>> maps;
        for (std::size_t v = 0; v < f.maps_.size(); ++v) maps.push_back(f.maps_[v] - g.maps_[v]);
        return Morphism(f.source_, f.target_, std::move(maps));
    }
    friend Morphism operator*(const K& s, const Morphism& f) {
        std::vector<Matrix<K>> maps;
        for (const auto& m : f.maps_) maps.push_back(s * m);
        return Morphism(f.source_, f.target_, std::move(maps));
    }

    /// Composition g * f = "f first, then g".
    friend Morphism operator*(const Morphism& g, const Morphism& f) {
        if (f.target_->dims() != g.source_->dims()) throw UsageError("composition of non-composable morphisms");
        std::vector<Matrix<K>> maps;
        for (std::size_t v = 0; v < f.maps_.size(); ++v) maps.push_back(g.maps_[v] * f.maps_[v]);
        return Morphism(f.source_, g.target_, std::move(maps));
    }

    std::optional<Morphism> inverse() const {
        std::vector<Matrix<K>> maps;
        for (const auto& m : maps_) {
            auto inv = quivstat::inverse(m);
            if (!inv) return std::nullopt;
            maps.push_back(std::move(*inv));
        }
        return Morphism(target_, source_, std::move(maps));
    }

private:
    Rep<K> source_;
    Rep<K> target_;
    std::vector<Matrix<K>> maps_;
};

/// Morphism from a flattened coefficient vector (layout of Morphism::flatten).
template <class K>
Morphism<K> unflatten(const Rep<K>& x, const Rep<K>& y, const std::vector<K>& flat) {
    std::vector<Matrix<K>> maps;
    std::size_t k = 0;
    for (std::size_t v = 0; v < x->vertex_count(); ++v) {
        Matrix<K> m(x->field(), y->dim(v), x->dim(v));
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = flat[k++];
        maps.push_back(std::move(m));
    }
    return Morphism<K>(x, y, std::move(maps));
}

template <class K>
class HomSpace {
public:
    HomSpace(Rep<K> x, Rep<K> y) : x_(std::move(x)), y_(std::move(y)) {
        require_same_algebra(x_, y_);
        const Quiver& q = x_->quiver();
        const Field<K>& f = x_->field();
        std::vector<std::size_t> off(q.vertex_count() + 1, 0);
        for (std::size_t v = 0; v < q.vertex_count(); ++v) off[v + 1] = off[v] + y_->dim(v) * x_->dim(v);
        const std::size_t unknowns = off.back();
        std::size_t equations = 0;
        for (const auto& a : q.arrows()) equations += y_->dim(a.target) * x_->dim(a.source);
        // Y_a f_s - f_t X_a = 0 for every arrow a: s -> t
        Matrix<K> system(f, equations, unknowns);
        std::size_t row = 0;
        for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
            const auto& a = q.arrow(ai);
            const auto& xa = x_->map(ai);
            const auto& ya = y_->map(ai);
            const std::size_t xs = x_->dim(a.source), xt = x_->dim(a.target), yt = y_->dim(a.target),
                              ys = y_->dim(a.source);
            for (std::size_t r = 0; r < yt; ++r)
                for (std::size_t c = 0; c < xs; ++c, ++row) {
                    for (std::size_t k = 0; k < ys; ++k) system(row, off[a.source] + k * xs + c) += ya(r, k);
                    for (std::size_t k = 0; k < xt; ++k) system(row, off[a.target] + r * xt + k) -= xa(k, c);
                }
        }
        coords_ = equations ? kernel(system) : Matrix<K>::identity(f, unknowns);
        for (std::size_t j = 0; j < coords_.cols(); ++j) basis_.push_back(unflatten(x_, y_, coords_.col(j)));
    }

    const Rep<K>& source() const { return x_; }
    const Rep<K>& target() const { return y_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Morphism<K>>& basis() const { return basis_; }
    const Morphism<K>& operator[](std::size_t i) const { return basis_.at(i); }
    /// unknowns x dim matrix whose columns are the flattened basis morphisms.
    const Matrix<K>& coordinate_matrix() const { return coords_; }

    Morphism<K> combine(const std::vector<K>& c) const {
        return unflatten(x_, y_, (coords_ * Matrix<K>::column(x_->field(), c)).col(0));
    }

    /// Coordinates of g in the basis; g must lie in the space.
    std::vector<K> coordinates(const Morphism<K>& g) const {
        if (!extractor_) extractor_ = basis_.empty() ? Matrix<K>(x_->field(), 0, coords_.rows()) : left_inverse(coords_);
        const auto col = Matrix<K>::column(x_->field(), g.flatten());
        auto c = *extractor_ * col;
        if (!(coords_ * c == col)) throw UsageError("morphism does not lie in this Hom space");
        return c.col(0);
    }

private:
    Rep<K> x_, y_;
    Matrix<K> coords_;
    std::vector<Morphism<K>> basis_;
    mutable std::optional<Matrix<K>> extractor_;
};

template <class K>
HomSpace<K> hom(const Rep<K>& x, const Rep<K>& y) {
    return HomSpace<K>(x, y);
}

template <class K>
std::size_t hom_dim(const Rep<K>& x, const Rep<K>& y) {
    return HomSpace<K>(x, y).dim();
}

// ---------------------------------------------------------------------------
// Sub- and quotient representations

/// Subrepresentation spanned by the columns of U[v] (independent, invariant under all arrows).
template <class K>
std::pair<Rep<K>, Morphism<K>> subrepresentation(const Rep<K>& x, const std::vector<Matrix<K>>& u) {
    const Quiver& q = x->quiver();
    std::vector<Matrix<K>> left;
    std::vector<std::size_t> dims;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
        dims.push_back(u[v].cols());
        left.push_back(u[v].cols() ? left_inverse(u[v]) : Matrix<K>(x->field(), 0, x->dim(v)));
    }
    std::vector<Matrix<K>> maps;
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        const auto& arr = q.arrow(a);
        Matrix<K> m = left[arr.target] * x->map(a) * u[arr.source];
        if (!(u[arr.target] * m == x->map(a) * u[arr.source]))
            throw InternalError("subspace is not invariant under arrow '" + arr.name + "'");
        maps.push_back(std::move(m));
    }
    auto sub = make_rep(x->algebra(), dims, std::move(maps));
    return {sub, Morphism<K>(sub, x, u)};
}

/// Quotient X / U with the projection.
template <class K>
std::pair<Rep<K>, Morphism<K>> quotient_representation(const Rep<K>& x, const std::vector<Matrix<K>>& u) {
    const Quiver& q = x->quiver();
    std::vector<Matrix<K>> proj, lifts;
    std::vector<std::size_t> dims;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
        const Matrix<K> c = complement_basis(u[v]);
        const Matrix<K> full = hstack(u[v], c);
        const Matrix<K> inv = *inverse(full);
        proj.push_back(inv.block(u[v].cols(), 0, c.cols(), x->dim(v)));
        lifts.push_back(c);
        dims.push_back(c.cols());
    }
    std::vector<Matrix<K>> maps;
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        const auto& arr = q.arrow(a);
        maps.push_back(proj[arr.target] * x->map(a) * lifts[arr.source]);
    }
    auto quot = make_rep(x->algebra(), dims, std::move(maps));
    Morphism<K> pi(x, quot, proj);
    if (!pi.commutes()) throw InternalError("quotient by a non-invariant subspace");
    return {quot, pi};
}

template <class K>
std::pair<Rep<K>, Morphism<K>> kernel(const Morphism<K>& f) {
    std::vector<Matrix<K>> u;
    for (const auto& m : f.maps()) u.push_back(kernel(m));
    return subrepresentation(f.source(), u);
}

template <class K>
std::vector<Matrix<K>> image_subspaces(const Morphism<K>& f) {
    std::vector<Matrix<K>> u;
    for (const auto& m : f.maps()) u.push_back(column_space(m));
    return u;
}

template <class K>
std::pair<Rep<K>, Morphism<K>> cokernel(const Morphism<K>& f) {
    return quotient_representation(f.target(), image_subspaces(f));
}

template <class K>
struct ImageFactorization {
    Rep<K> image;
    Morphism<K> epi;   // source -> image
    Morphism<K> mono;  // image -> target
};

template <class K>
ImageFactorization<K> image(const Morphism<K>& f) {
    auto u = image_subspaces(f);
    auto [im, mono] = subrepresentation(f.target(), u);
    std::vector<Matrix<K>> epi;
    for (std::size_t v = 0; v < u.size(); ++v)
        epi.push_back(u[v].cols() ? left_inverse(u[v]) * f.map(v) : Matrix<K>(f.field(), 0, f.source()->dim(v)));
    return {im, Morphism<K>(f.source(), im, epi), mono};
}

// ---------------------------------------------------------------------------
// Direct sums

template <class K>
struct DirectSum {
    Rep<K> sum;
    std::vector<Morphism<K>> injections;
    std::vector<Morphism<K>> projections;
};

template <class K>
DirectSum<K> direct_sum(const AlgebraPtr<K>& algebra, const std::vector<Rep<K>>& parts) {
    const Quiver& q = algebra->quiver();
    const Field<K>& f = algebra->field();
    for (const auto& p : parts)
        if (!same_algebra(p->algebra(), algebra)) throw UsageError("direct sum of representations over different algebras");
    std::vector<std::size_t> dims(q.vertex_count(), 0);
    for (const auto& p : parts)
        for (std::size_t v = 0; v < dims.size(); ++v) dims[v] += p->dim(v);
    std::vector<Matrix<K>> maps;
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        std::vector<Matrix<K>> blocks;
        for (const auto& p : parts) blocks.push_back(p->map(a));
        maps.push_back(block_diagonal(f, blocks));
    }
    DirectSum<K> out{make_rep(algebra, dims, std::move(maps)), {}, {}};
    std::vector<std::size_t> off(q.vertex_count(), 0);
    for (const auto& p : parts) {
        std::vector<Matrix<K>> inj, proj;
        for (std::size_t v = 0; v < dims.size(); ++v) {
            Matrix<K> i(f, dims[v], p->dim(v));
            for (std::size_t k = 0; k < p->dim(v); ++k) i(off[v] + k, k) = f.one();
            proj.push_back(i.transpose());
            inj.push_back(std::move(i));
            off[v] += p->dim(v);
        }
        out.injections.emplace_back(p, out.sum, std::move(inj));
        out.projections.emplace_back(out.sum, p, std::move(proj));
    }
    return out;
}

template <class K>
Rep<K> power(const Rep<K>& x, std::size_t n) {
    return direct_sum(x->algebra(), std::vector<Rep<K>>(n, x)).sum;
}

/// The morphism X_1 + ... + X_n -> Y whose restriction to X_i is fs[i].
template <class K>
Morphism<K> row_morphism(const DirectSum<K>& sum, const std::vector<Morphism<K>>& fs, const Rep<K>& y) {
    Morphism<K> out = Morphism<K>::zero(sum.sum, y);
    for (std::size_t i = 0; i < fs.size(); ++i) out = out + fs[i] * sum.projections[i];
    return out;
}

/// The morphism Y -> X_1 + ... + X_n with components fs[i].
template <class K>
Morphism<K> column_morphism(const DirectSum<K>& sum, const std::vector<Morphism<K>>& fs, const Rep<K>& y) {
    Morphism<K> out = Morphism<K>::zero(y, sum.sum);
    for (std::size_t i = 0; i < fs.size(); ++i) out = out + sum.injections[i] * fs[i];
    return out;
}

// ---------------------------------------------------------------------------
// Standard representations

template <class K>
Rep<K> simple(const AlgebraPtr<K>& algebra, std::size_t i) {
    const Quiver& q = algebra->quiver();
    if (i >= q.vertex_count()) throw UsageError("vertex out of range");
    std::vector<std::size_t> dims(q.vertex_count(), 0);
    dims[i] = 1;
    std::vector<Matrix<K>> maps;
    for (const auto& a : q.arrows()) maps.emplace_back(algebra->field(), dims[a.target], dims[a.source]);
    return make_rep(algebra, dims, std::move(maps));
}

/// P(i): paths starting at i, arrows acting by composition on the left.
template <class K>
Rep<K> projective(const AlgebraPtr<K>& algebra, std::size_t i) {
    const Quiver& q = algebra->quiver();
    if (i >= q.vertex_count()) throw UsageError("vertex out of range");
    std::vector<std::vector<std::size_t>> at(q.vertex_count());
    std::vector<std::size_t> dims;
    for (std::size_t j = 0; j < q.vertex_count(); ++j) {
        at[j] = algebra->basis_between(i, j);
        dims.push_back(at[j].size());
    }
    std::vector<Matrix<K>> maps;
    for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
        const auto& a = q.arrow(ai);
        Matrix<K> m(algebra->field(), dims[a.target], dims[a.source]);
        for (std::size_t c = 0; c < at[a.source].size(); ++c) {
            Path p = concat(algebra->basis()[at[a.source][c]], Path{a.source, a.target, {ai}});
            for (const auto& [b, coeff] : algebra->normal_form(p)) {
                const auto r = std::find(at[a.target].begin(), at[a.target].end(), b) - at[a.target].begin();
                m(r, c) += coeff;
            }
        }
        maps.push_back(std::move(m));
    }
    return make_rep(algebra, dims, std::move(maps));
}

/// I(i): the dual of the paths ending at i, with (a.phi)(p) = phi(p after a).
template <class K>
Rep<K> injective(const AlgebraPtr<K>& algebra, std::size_t i) {
    const Quiver& q = algebra->quiver();
    if (i >= q.vertex_count()) throw UsageError("vertex out of range");
    std::vector<std::vector<std::size_t>> at(q.vertex_count());
    std::vector<std::size_t> dims;
    for (std::size_t j = 0; j < q.vertex_count(); ++j) {
        at[j] = algebra->basis_between(j, i);
        dims.push_back(at[j].size());
    }
    std::vector<Matrix<K>> maps;
    for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
        const auto& a = q.arrow(ai);
        Matrix<K> m(algebra->field(), dims[a.target], dims[a.source]);
        for (std::size_t r = 0; r < at[a.target].size(); ++r) {
            Path p = concat(Path{a.source, a.target, {ai}}, algebra->basis()[at[a.target][r]]);
            for (const auto& [b, coeff] : algebra->normal_form(p)) {
                const auto c = std::find(at[a.source].begin(), at[a.source].end(), b) - at[a.source].begin();
                m(r, c) += coeff;
            }
        }
        maps.push_back(std::move(m));
    }
    return make_rep(algebra, dims, std::move(maps));
}

// ---------------------------------------------------------------------------
// Radical series, top and socle

/// J.U: the span of the images of U under all arrows.
template <class K>
std::vector<Matrix<K>> radical_of_subspaces(const Rep<K>& x, const std::vector<Matrix<K>>& u) {
    const Quiver& q = x->quiver();
    std::vector<Matrix<K>> spans;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) spans.emplace_back(x->field(), x->dim(v), 0);
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        const auto& arr = q.arrow(a);
        spans[arr.target] = hstack(spans[arr.target], x->map(a) * u[arr.source]);
    }
    for (auto& s : spans) s = column_space(s);
    return spans;
}

template <class K>
std::vector<Matrix<K>> whole_space(const Rep<K>& x) {
    std::vector<Matrix<K>> u;
    for (std::size_t v = 0; v < x->vertex_count(); ++v) u.push_back(Matrix<K>::identity(x->field(), x->dim(v)));
    return u;
}

template <class K>
std::size_t total_columns(const std::vector<Matrix<K>>& u) {
    std::size_t n = 0;
    for (const auto& m : u) n += m.cols();
    return n;
}

/// J^k X for k = 0, 1, ... until zero (the last entry is the zero subspace).
template <class K>
std::vector<std::vector<Matrix<K>>> radical_series(const Rep<K>& x) {
    std::vector<std::vector<Matrix<K>>> series{whole_space(x)};
    while (total_columns(series.back()) > 0) series.push_back(radical_of_subspaces(x, series.back()));
    return series;
}

template <class K>
std::size_t loewy_length(const Rep<K>& x) {
    return radical_series(x).size() - 1;
}

/// Multiplicity of each simple in the top X / JX.
template <class K>
std::vector<std::size_t> top_multiplicities(const Rep<K>& x) {
    auto j = radical_of_subspaces(x, whole_space(x));
    std::vector<std::size_t> m;
    for (std::size_t v = 0; v < x->vertex_count(); ++v) m.push_back(x->dim(v) - j[v].cols());
    return m;
}

/// soc X: vectors killed by every arrow.
template <class K>
std::vector<Matrix<K>> socle_subspaces(const Rep<K>& x) {
    const Quiver& q = x->quiver();
    std::vector<Matrix<K>> out;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
        Matrix<K> stacked(x->field(), 0, x->dim(v));
        for (std::size_t a = 0; a < q.arrows().size(); ++a)
            if (q.arrow(a).source == v) stacked = vstack(stacked, x->map(a));
        out.push_back(kernel(stacked));
    }
    return out;
}

/// Submodule generated by the given vectors (one matrix of generators per vertex).
template <class K>
std::vector<Matrix<K>> generated_subspaces(const Rep<K>& x, std::vector<Matrix<K>> gens) {
    for (auto& g : gens) g = column_space(g);
    while (true) {
        auto more = radical_of_subspaces(x, gens);
        bool grew = false;
        for (std::size_t v = 0; v < gens.size(); ++v) {
            auto joined = column_space(hstack(gens[v], more[v]));
            if (joined.cols() > gens[v].cols()) grew = true;
            gens[v] = std::move(joined);
        }
        if (!grew) return gens;
    }
}

// ---------------------------------------------------------------------------
// Projective cover and Ext^1

template <class K>
struct ProjectiveCover {
    Rep<K> cover;
    Morphism<K> epi;
};

template <class K>
ProjectiveCover<K> projective_cover(const Rep<K>& x) {
    const auto& alg = x->algebra();
    const Quiver& q = x->quiver();
    auto j = radical_of_subspaces(x, whole_space(x));
    std::vector<Rep<K>> parts;
    std::vector<std::pair<std::size_t, std::vector<K>>> tops;  // (vertex, lifted top vector)
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
        const Matrix<K> c = complement_basis(j[v]);
        for (std::size_t k = 0; k < c.cols(); ++k) {
            parts.push_back(projective(alg, v));
            tops.push_back({v, c.col(k)});
        }
    }
    auto sum = direct_sum(alg, parts);
    std::vector<Morphism<K>> comps;
    for (std::size_t t = 0; t < parts.size(); ++t) {
        const auto [v, vec] = tops[t];
        const Matrix<K> xv = Matrix<K>::column(x->field(), vec);
        std::vector<Matrix<K>> maps;
        for (std::size_t w = 0; w < q.vertex_count(); ++w) {
            Matrix<K> m(x->field(), x->dim(w), parts[t]->dim(w));
            const auto paths = alg->basis_between(v, w);
            for (std::size_t c = 0; c < paths.size(); ++c) m.set_block(0, c, x->path_action(alg->basis()[paths[c]]) * xv);
            maps.push_back(std::move(m));
        }
        comps.emplace_back(parts[t], x, std::move(maps));
    }
    Morphism<K> epi = row_morphism(sum, comps, x);
    if (!epi.commutes() || !epi.is_surjective()) throw InternalError("projective cover map is not an epimorphism");
    return {sum.sum, epi};
}

/// dim Ext^1(X, Y) from 0 -> Omega -> P -> X -> 0:
/// Ext^1 = coker(Hom(P,Y) -> Hom(Omega,Y)), so its dimension is
/// dim Hom(Omega,Y) - dim Hom(P,Y) + dim Hom(X,Y).
template <class K>
std::size_t ext1_dim(const Rep<K>& x, const Rep<K>& y) {
    require_same_algebra(x, y);
    auto pc = projective_cover(x);
    auto [omega, incl] = kernel(pc.epi);
    return hom_dim(omega, y) + hom_dim(x, y) - hom_dim(pc.cover, y);
}

// ---------------------------------------------------------------------------
// Random constructions (tests, generic modules)

template <class K>
Matrix<K> random_matrix(const Field<K>& f, std::size_t rows, std::size_t cols, Rng& rng) {
    Matrix<K> m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = f.random(rng);
    return m;
}

template <class K>
Matrix<K> random_invertible(const Field<K>& f, std::size_t n, Rng& rng) {
    while (true) {
        Matrix<K> m = random_matrix(f, n, n, rng);
        if (is_invertible(m)) return m;
    }
}

/// Random representation of a quiver without relations.
template <class K>
Rep<K> random_representation(const AlgebraPtr<K>& algebra, const std::vector<std::size_t>& dims, Rng& rng) {
    if (!algebra->bound_quiver().relations.relations.empty())
        throw UsageError("random representations are only drawn for algebras without relations");
    std::vector<Matrix<K>> maps;
    for (const auto& a : algebra->quiver().arrows())
        maps.push_back(random_matrix(algebra->field(), dims[a.target], dims[a.source], rng));
    return make_rep(algebra, dims, std::move(maps));
}

/// An isomorphic copy of X under a random change of basis, with the isomorphism X -> copy.
template <class K>
std::pair<Rep<K>, Morphism<K>> random_base_change(const Rep<K>& x, Rng& rng) {
    const Quiver& q = x->quiver();
    std::vector<Matrix<K>> g, ginv;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
        g.push_back(random_invertible(x->field(), x->dim(v), rng));
        ginv.push_back(*inverse(g.back()));
    }
    std::vector<Matrix<K>> maps;
    for (std::size_t a = 0; a < q.arrows().size(); ++a)
        maps.push_back(g[q.arrow(a).target] * x->map(a) * ginv[q.arrow(a).source]);
    auto y = make_rep(x->algebra(), x->dims(), std::move(maps));
    return {y, Morphism<K>(x, y, g)};
}

}  // namespace quivstat
