#pragma once

// Exact scalar fields: the rationals and prime fields F_p (p < 2^16).

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace quivstat {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a caller violates a documented precondition (shape, range, algebra mismatch).
class UsageError : public Error {
public:
    using Error::Error;
};

/// Raised when two independently computed answers disagree. Always a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

/// Raised when an exhaustive search would exceed its enumeration cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

struct FieldSpec {
    enum class Kind { rationals, prime_field };
    Kind kind = Kind::prime_field;
    std::uint32_t characteristic = 2;

    static FieldSpec rationals() { return {Kind::rationals, 0}; }
    static FieldSpec prime(std::uint32_t p) {
        if (p >= (1u << 16) || !is_prime(p))
            throw UsageError("field characteristic must be a prime below 65536, got " + std::to_string(p));
        return {Kind::prime_field, p};
    }

    bool is_finite() const { return kind == Kind::prime_field; }
    std::string to_string() const {
        return kind == Kind::rationals ? "q" : "p=" + std::to_string(characteristic);
    }
    bool operator==(const FieldSpec&) const = default;
};

using Rational = boost::multiprecision::cpp_rational;

/// Residue modulo a runtime prime. The modulus travels with the value.
class Zp {
public:
    Zp() = default;
    Zp(std::uint32_t value, std::uint32_t p) : v_(value % p), p_(p) {}

    std::uint32_t value() const { return v_; }
    std::uint32_t modulus() const { return p_; }

    friend Zp operator+(Zp a, Zp b) {
        const std::uint32_t p = a.p_ ? a.p_ : b.p_;
        std::uint32_t s = a.v_ + b.v_;
        if (s >= p) s -= p;
        return raw(s, p);
    }
    friend Zp operator-(Zp a, Zp b) {
        const std::uint32_t p = a.p_ ? a.p_ : b.p_;
        return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + p - b.v_, p);
    }
    friend Zp operator*(Zp a, Zp b) {
        const std::uint32_t p = a.p_ ? a.p_ : b.p_;
        return raw(static_cast<std::uint32_t>((std::uint64_t{a.v_} * b.v_) % p), p);
    }
    Zp operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }
    Zp& operator+=(Zp o) { return *this = *this + o; }
    Zp& operator-=(Zp o) { return *this = *this - o; }
    Zp& operator*=(Zp o) { return *this = *this * o; }

    Zp inverse() const {
        if (v_ == 0) throw UsageError("division by zero in F_p");
        // Fermat: a^(p-2)
        std::uint64_t result = 1, base = v_, e = p_ - 2;
        while (e) {
            if (e & 1) result = result * base % p_;
            base = base * base % p_;
            e >>= 1;
        }
        return raw(static_cast<std::uint32_t>(result), p_);
    }
    friend Zp operator/(Zp a, Zp b) { return a * b.inverse(); }

    bool is_zero() const { return v_ == 0; }
    friend bool operator==(Zp a, Zp b) { return a.v_ == b.v_; }

private:
    static Zp raw(std::uint32_t v, std::uint32_t p) {
        Zp z;
        z.v_ = v;
        z.p_ = p;
        return z;
    }
    std::uint32_t v_ = 0;
    std::uint32_t p_ = 0;
};

template <class K>
struct Field;

template <>
struct Field<Rational> {
    FieldSpec spec() const { return FieldSpec::rationals(); }
    Rational zero() const { return 0; }
    Rational one() const { return 1; }
    Rational from_int(long long n) const { return n; }
    static bool is_zero(const Rational& x) { return x == 0; }
    static Rational inv(const Rational& x) {
        if (x == 0) throw UsageError("division by zero in Q");
        return 1 / x;
    }
    static std::string to_string(const Rational& x) {
        if (denominator(x) == 1) return numerator(x).str();
        return numerator(x).str() + "/" + denominator(x).str();
    }
    static constexpr bool finite = false;
    /// Small integers centred at zero; sampling over Q never claims completeness.
    template <class Rng>
    Rational random(Rng& rng) const {
        return static_cast<long long>(rng() % 7) - 3;
    }
    bool operator==(const Field&) const = default;
};

template <>
struct Field<Zp> {
    std::uint32_t p = 2;

    FieldSpec spec() const { return {FieldSpec::Kind::prime_field, p}; }
    Zp zero() const { return Zp(0, p); }
    Zp one() const { return Zp(1, p); }
    Zp from_int(long long n) const {
        long long r = n % static_cast<long long>(p);
        if (r < 0) r += p;
        return Zp(static_cast<std::uint32_t>(r), p);
    }
    static bool is_zero(const Zp& x) { return x.is_zero(); }
    static Zp inv(const Zp& x) { return x.inverse(); }
    static std::string to_string(const Zp& x) { return std::to_string(x.value()); }
    static constexpr bool finite = true;
    std::uint64_t size() const { return p; }
    Zp element(std::uint64_t index) const { return Zp(static_cast<std::uint32_t>(index), p); }
    template <class Rng>
    Zp random(Rng& rng) const {
        return Zp(static_cast<std::uint32_t>(rng() % p), p);
    }
    bool operator==(const Field&) const = default;
};

using Rng = std::mt19937_64;

/// Iterates over every coefficient vector of length `dim` over a finite field
/// (p^dim vectors, lexicographic with the first coordinate fastest).
template <class Fn>
void for_each_vector(const Field<Zp>& field, std::size_t dim, Fn&& fn) {
    std::vector<Zp> v(dim, field.zero());
    while (true) {
        if (!fn(static_cast<const std::vector<Zp>&>(v))) return;
        std::size_t i = 0;
        for (; i < dim; ++i) {
            std::uint32_t next = v[i].value() + 1;
            if (next < field.p) {
                v[i] = Zp(next, field.p);
                break;
            }
            v[i] = field.zero();
        }
        if (i == dim) return;
    }
}

/// p^dim if it does not exceed `cap`, otherwise 0.
inline std::uint64_t bounded_power(std::uint64_t p, std::size_t dim, std::uint64_t cap) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < dim; ++i) {
        if (total > cap / p) return 0;
        total *= p;
    }
    return total <= cap ? total : 0;
}

}  // namespace quivstat
