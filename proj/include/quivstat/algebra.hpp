#pragma once

// Finite-dimensional associative algebras given by structure constants:
// endomorphism algebras, the Jacobson radical, locality, and modules over
// such an algebra.

#include "representation.hpp"

namespace quivstat {

/// Three-valued answer for searches that may run out of budget.
enum class Verdict { no, yes, undecided };

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::no: return "no";
        case Verdict::yes: return "yes";
        case Verdict::undecided: return "undecided";
    }
    return "?";
}

inline Verdict verdict_of(bool b) { return b ? Verdict::yes : Verdict::no; }

/// Enumeration cap for exhaustive searches over F_p.
inline constexpr std::uint64_t enumeration_cap = std::uint64_t{1} << 16;
/// Random trials before falling back to enumeration.
inline constexpr std::size_t sampling_budget = 256;

template <class K>
class FiniteDimAlgebra {
public:
    /// left[i] is the matrix of left multiplication by basis element i.
    FiniteDimAlgebra(Field<K> field, std::vector<Matrix<K>> left, std::vector<K> unit)
        : field_(field), left_(std::move(left)), unit_(std::move(unit)) {
        const std::size_t n = left_.size();
        if (unit_.size() != n) throw UsageError("unit has the wrong length");
        for (const auto& m : left_)
            if (m.rows() != n || m.cols() != n) throw UsageError("structure constants have the wrong shape");
    }

    const Field<K>& field() const { return field_; }
    std::size_t dimension() const { return left_.size(); }
    const std::vector<Matrix<K>>& left_matrices() const { return left_; }
    const std::vector<K>& unit() const { return unit_; }

    Matrix<K> unit_vector() const { return Matrix<K>::column(field_, unit_); }
    Matrix<K> basis_vector(std::size_t i) const {
        Matrix<K> v(field_, dimension(), 1);
        v(i, 0) = field_.one();
        return v;
    }

    /// Matrix of y -> x y for a column vector x.
    Matrix<K> left_mult(const Matrix<K>& x) const {
        Matrix<K> m(field_, dimension(), dimension());
        for (std::size_t i = 0; i < dimension(); ++i)
            if (!Field<K>::is_zero(x(i, 0))) m += x(i, 0) * left_[i];
        return m;
    }
    /// Matrix of y -> y x.
    Matrix<K> right_mult(const Matrix<K>& x) const {
        Matrix<K> m(field_, dimension(), dimension());
        for (std::size_t i = 0; i < dimension(); ++i) m.set_block(0, i, left_[i] * x);
        return m;
    }
    Matrix<K> multiply(const Matrix<K>& x, const Matrix<K>& y) const { return left_mult(x) * y; }

    bool is_unit_element(const Matrix<K>& x) const { return is_invertible(left_mult(x)); }

    /// Associativity on basis triples and the unit law on basis elements.
    bool check_axioms() const {
        const std::size_t n = dimension();
        const Matrix<K> one = left_mult(unit_vector());
        if (!(one == Matrix<K>::identity(field_, n))) return false;
        for (std::size_t i = 0; i < n; ++i) {
            if (!(right_mult(unit_vector()) * basis_vector(i) == basis_vector(i))) return false;
            for (std::size_t j = 0; j < n; ++j) {
                const Matrix<K> ij = left_[i] * basis_vector(j);
                // (e_i e_j) e_k = e_i (e_j e_k) for all k  <=>  L_{e_i e_j} = L_i L_j
                if (!(left_mult(ij) == left_[i] * left_[j])) return false;
            }
        }
        return true;
    }

    /// Span of all products x y with x in the span of U, y in the span of V (columns).
    Matrix<K> product_span(const Matrix<K>& u, const Matrix<K>& v) const {
        Matrix<K> out(field_, dimension(), 0);
        for (std::size_t i = 0; i < u.cols(); ++i) {
            const Matrix<K> l = left_mult(u.block(0, i, dimension(), 1));
            out = hstack(out, l * v);
        }
        return column_space(out);
    }

    /// Left ideal generated by the columns of U.
    Matrix<K> left_ideal(const Matrix<K>& u) const {
        Matrix<K> all = Matrix<K>::identity(field_, dimension());
        return column_space(hstack(u, product_span(all, u)));
    }

    /// Smallest k with I^k = 0, or nullopt if I is not nilpotent.
    std::optional<std::size_t> nilpotency_index(const Matrix<K>& ideal) const {
        Matrix<K> p = column_space(ideal);
        std::size_t k = 1;
        while (p.cols() > 0) {
            if (k > dimension() + 1) return std::nullopt;
            Matrix<K> next = product_span(p, ideal);
            if (next.cols() == p.cols()) return std::nullopt;
            p = std::move(next);
            ++k;
        }
        return k - (ideal.cols() > 0 ? 0 : 1);
    }

private:
    Field<K> field_;
    std::vector<Matrix<K>> left_;
    std::vector<K> unit_;
};

template <class K>
using AlgebraRef = std::shared_ptr<const FiniteDimAlgebra<K>>;

/// End(X)^op together with the morphisms realising its basis.
/// Product convention: c . d = d o c (apply c first).
template <class K>
struct EndAlgebra {
    Rep<K> module;
    std::shared_ptr<const HomSpace<K>> hom;
    AlgebraRef<K> algebra;

    Morphism<K> element(const Matrix<K>& coords) const { return hom->combine(coords.col(0)); }
    Matrix<K> coordinates(const Morphism<K>& f) const { return Matrix<K>::column(module->field(), hom->coordinates(f)); }
};

template <class K>
EndAlgebra<K> end_algebra(const Rep<K>& x) {
    auto h = std::make_shared<const HomSpace<K>>(x, x);
    const std::size_t n = h->dim();
    const Field<K>& f = x->field();
    std::vector<Matrix<K>> left;
    for (std::size_t i = 0; i < n; ++i) {
        Matrix<K> l(f, n, n);
        for (std::size_t j = 0; j < n; ++j) {
            const auto c = h->coordinates((*h)[j] * (*h)[i]);
            for (std::size_t k = 0; k < n; ++k) l(k, j) = c[k];
        }
        left.push_back(std::move(l));
    }
    auto unit = n ? h->coordinates(Morphism<K>::identity(x)) : std::vector<K>{};
    return {x, h, std::make_shared<const FiniteDimAlgebra<K>>(f, std::move(left), std::move(unit))};
}

// ---------------------------------------------------------------------------
// Radical

namespace detail {

template <class K>
Matrix<K> trace_form_kernel(const FiniteDimAlgebra<K>& a) {
    const std::size_t n = a.dimension();
    Matrix<K> t(a.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Matrix<K> p = a.left_matrices()[i] * a.left_matrices()[j];
            K tr = a.field().zero();
            for (std::size_t k = 0; k < n; ++k) tr += p(k, k);
            t(i, j) = tr;
        }
    return kernel(t);
}

}  // namespace detail

/// Jacobson radical as a column basis in algebra coordinates.
/// Over Q this is the kernel of the trace form. Over F_p the trace-form kernel
/// T contains the radical; when T is itself nilpotent it is the radical,
/// otherwise the elements x of T with A.x nilpotent are enumerated.
template <class K>
Matrix<K> radical(const FiniteDimAlgebra<K>& a) {
    const std::size_t n = a.dimension();
    if (n == 0) return Matrix<K>(a.field(), 0, 0);
    const Matrix<K> t = detail::trace_form_kernel(a);
    if constexpr (!Field<K>::finite) {
        if (!a.nilpotency_index(t)) throw InternalError("trace-form kernel is not nilpotent over Q");
        return t;
    } else {
        if (t.cols() == 0 || a.nilpotency_index(t)) return t;
        if (!bounded_power(a.field().size(), t.cols(), enumeration_cap))
            throw CapExceeded("radical: enumeration of " + std::to_string(a.field().p) + "^" +
                              std::to_string(t.cols()) + " elements exceeds the cap; try the rationals");
        Matrix<K> rad(a.field(), n, 0);
        for_each_vector(a.field(), t.cols(), [&](const std::vector<Zp>& c) {
            const Matrix<K> x = t * Matrix<K>::column(a.field(), c);
            if (x.is_zero() || rank(hstack(rad, x)) == rad.cols()) return true;
            if (a.nilpotency_index(a.left_ideal(x))) rad = hstack(rad, x);
            return true;
        });
        if (!a.nilpotency_index(rad)) throw InternalError("enumerated radical is not nilpotent");
        return rad;
    }
}

/// rad^k for k = 0, 1, ... down to zero.
template <class K>
std::vector<Matrix<K>> radical_powers(const FiniteDimAlgebra<K>& a, const Matrix<K>& rad) {
    std::vector<Matrix<K>> out{Matrix<K>::identity(a.field(), a.dimension())};
    Matrix<K> p = rad;
    out.push_back(p);
    while (p.cols() > 0) {
        p = a.product_span(p, rad);
        out.push_back(p);
    }
    return out;
}

struct LocalityResult {
    Verdict local = Verdict::undecided;
    std::size_t radical_dim = 0;
    std::size_t quotient_dim = 0;  // dim A / rad
};

/// Whether A / rad A is a division algebra.
template <class K>
LocalityResult is_local(const FiniteDimAlgebra<K>& a, const Matrix<K>& rad, Rng& rng) {
    LocalityResult r;
    const std::size_t n = a.dimension();
    r.radical_dim = rad.cols();
    r.quotient_dim = n - rad.cols();
    if (n == 0) {
        r.local = Verdict::no;
        return r;
    }
    if (r.quotient_dim == 1) {
        r.local = Verdict::yes;
        return r;
    }
    // A/rad: complement coordinates, with left multiplication reduced modulo rad.
    const Matrix<K> comp = complement_basis(rad);
    const Matrix<K> change = *inverse(hstack(rad, comp));
    const Matrix<K> proj = change.block(rad.cols(), 0, comp.cols(), n);
    auto is_nonunit_nonzero = [&](const Matrix<K>& qcoords) {
        if (qcoords.is_zero()) return false;
        const Matrix<K> x = comp * qcoords;
        const Matrix<K> lq = proj * a.left_mult(x) * comp;
        return rank(lq) < r.quotient_dim;
    };
    const Field<K>& f = a.field();
    for (std::size_t i = 0; i < comp.cols(); ++i) {
        Matrix<K> e(f, comp.cols(), 1);
        e(i, 0) = f.one();
        if (is_nonunit_nonzero(e)) {
            r.local = Verdict::no;
            return r;
        }
    }
    for (std::size_t trial = 0; trial < sampling_budget; ++trial) {
        Matrix<K> e(f, comp.cols(), 1);
        for (std::size_t i = 0; i < comp.cols(); ++i) e(i, 0) = f.random(rng);
        if (is_nonunit_nonzero(e)) {
            r.local = Verdict::no;
            return r;
        }
    }
    if constexpr (Field<K>::finite) {
        if (bounded_power(f.size(), comp.cols(), enumeration_cap)) {
            bool found = false;
            for_each_vector(f, comp.cols(), [&](const std::vector<Zp>& c) {
                found = is_nonunit_nonzero(Matrix<K>::column(f, c));
                return !found;
            });
            r.local = verdict_of(!found);
        }
    }
    return r;
}

template <class K>
LocalityResult is_local(const FiniteDimAlgebra<K>& a, Rng& rng) {
    return is_local(a, radical(a), rng);
}

template <class K>
Verdict is_indecomposable(const Rep<K>& x, Rng& rng) {
    if (x->is_zero()) return Verdict::no;
    return is_local(*end_algebra(x).algebra, rng).local;
}

/// A brick: End X is a division algebra, i.e. local with zero radical.
template <class K>
Verdict is_brick(const Rep<K>& x, Rng& rng) {
    if (x->is_zero()) return Verdict::no;
    const auto e = end_algebra(x);
    const auto rad = radical(*e.algebra);
    if (rad.cols() > 0) return Verdict::no;
    return is_local(*e.algebra, rad, rng).local;
}

struct LocalNakayamaResult {
    Verdict local_nakayama = Verdict::undecided;
    std::size_t length = 0;  // Loewy length of A
};

/// A local algebra is Nakayama iff dim rad/rad^2 <= dim A/rad (one simple, one layer each).
template <class K>
LocalNakayamaResult is_local_nakayama(const FiniteDimAlgebra<K>& a, Rng& rng) {
    LocalNakayamaResult out;
    const Matrix<K> rad = radical(a);
    const auto loc = is_local(a, rad, rng);
    if (loc.local != Verdict::yes) {
        out.local_nakayama = loc.local;
        return out;
    }
    const auto powers = radical_powers(a, rad);
    out.length = powers.size() - 1;
    const std::size_t top = powers[1].cols() - (powers.size() > 2 ? powers[2].cols() : 0);
    out.local_nakayama = verdict_of(top <= loc.quotient_dim);
    return out;
}

// ---------------------------------------------------------------------------
// Modules over a finite-dimensional algebra

template <class K>
class GammaModule {
public:
    GammaModule(AlgebraRef<K> gamma, std::size_t dim, std::vector<Matrix<K>> action)
        : gamma_(std::move(gamma)), dim_(dim), action_(std::move(action)) {
        if (action_.size() != gamma_->dimension()) throw UsageError("one action matrix per algebra basis element expected");
        for (const auto& m : action_)
            if (m.rows() != dim_ || m.cols() != dim_) throw UsageError("action matrix has the wrong shape");
    }

    const AlgebraRef<K>& gamma() const { return gamma_; }
    std::size_t dim() const { return dim_; }
    const std::vector<Matrix<K>>& action() const { return action_; }
    const Field<K>& field() const { return gamma_->field(); }

    Matrix<K> act(const Matrix<K>& g) const {
        Matrix<K> m(field(), dim_, dim_);
        for (std::size_t i = 0; i < action_.size(); ++i)
            if (!Field<K>::is_zero(g(i, 0))) m += g(i, 0) * action_[i];
        return m;
    }

    /// Module axioms on basis pairs: rho(e_i) rho(e_j) = rho(e_i e_j), rho(1) = id.
    bool check_axioms() const {
        if (!(act(gamma_->unit_vector()) == Matrix<K>::identity(field(), dim_))) return false;
        for (std::size_t i = 0; i < action_.size(); ++i)
            for (std::size_t j = 0; j < action_.size(); ++j)
                if (!(action_[i] * action_[j] == act(gamma_->left_matrices()[i] * gamma_->basis_vector(j)))) return false;
        return true;
    }

private:
    AlgebraRef<K> gamma_;
    std::size_t dim_;
    std::vector<Matrix<K>> action_;
};

template <class K>
GammaModule<K> regular_module(const AlgebraRef<K>& gamma) {
    return GammaModule<K>(gamma, gamma->dimension(), gamma->left_matrices());
}

/// Quotient of a Gamma-module by an invariant subspace spanned by the columns of U.
template <class K>
GammaModule<K> quotient_module(const GammaModule<K>& x, const Matrix<K>& u) {
    const Matrix<K> c = complement_basis(u);
    const Matrix<K> inv = *inverse(hstack(u, c));
    const Matrix<K> proj = inv.block(u.cols(), 0, c.cols(), x.dim());
    std::vector<Matrix<K>> action;
    for (const auto& m : x.action()) {
        if (!(proj * m * u).is_zero()) throw UsageError("quotient by a non-invariant subspace");
        action.push_back(proj * m * c);
    }
    return GammaModule<K>(x.gamma(), c.cols(), std::move(action));
}

/// Gamma / I for a left ideal I given by columns.
template <class K>
GammaModule<K> quotient_of_regular(const AlgebraRef<K>& gamma, const Matrix<K>& ideal) {
    return quotient_module(regular_module(gamma), ideal);
}

/// Gamma-linear maps X -> Y as a column basis of flattened (row-major) matrices.
template <class K>
Matrix<K> gamma_hom_basis(const GammaModule<K>& x, const GammaModule<K>& y) {
    const std::size_t dx = x.dim(), dy = y.dim(), n = x.action().size();
    Matrix<K> system(x.field(), n * dy * dx, dy * dx);
    std::size_t row = 0;
    for (std::size_t g = 0; g < n; ++g) {
        const auto& ax = x.action()[g];
        const auto& ay = y.action()[g];
        // ay f - f ax = 0
        for (std::size_t r = 0; r < dy; ++r)
            for (std::size_t c = 0; c < dx; ++c, ++row) {
                for (std::size_t k = 0; k < dy; ++k) system(row, k * dx + c) += ay(r, k);
                for (std::size_t k = 0; k < dx; ++k) system(row, r * dx + k) -= ax(k, c);
            }
    }
    return n ? kernel(system) : Matrix<K>::identity(x.field(), dy * dx);
}

}  // namespace quivstat
