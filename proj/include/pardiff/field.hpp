#ifndef PARDIFF_FIELD_HPP
#define PARDIFF_FIELD_HPP

#include <compare>
#include <cstdint>
#include <string>

#include "pardiff/rational.hpp"

namespace pardiff {

enum class FieldKind : std::uint8_t {
    Q,          // the rationals
    GaussQ,     // Q(i),      theta = i,  theta^2 = -1
    EisensteinQ,// Q(zeta),   theta = zeta, zeta^2 + zeta + 1 = 0
    ImagQuadQ,  // Q(sqrt-D), theta = sqrt(-D), D squarefree > 0
};

/// Coefficient field descriptor. All scalars and polynomials carry one;
/// mixing fields is an error, never a silent promotion.
struct Field {
    FieldKind kind = FieldKind::Q;
    unsigned d = 0; // only for ImagQuadQ

    static Field rationals() { return {FieldKind::Q, 0}; }
    static Field gauss() { return {FieldKind::GaussQ, 0}; }
    static Field eisenstein() { return {FieldKind::EisensteinQ, 0}; }
    static Field imag_quad(unsigned d);

    bool operator==(const Field&) const = default;

    // theta^2 = t1*theta + t2
    Rational theta_sq_lin() const;   // t1
    Rational theta_sq_const() const; // t2

    std::string generator_symbol() const; // "i", "w", "s"
    std::string name() const;             // "Q", "Q(i)", ...
};

void require_same_field(const Field& a, const Field& b, const char* where);

/// Element a + b*theta of the declared field, exact.
/// For kind Q the theta part is always zero.
class Scalar {
public:
    Scalar() = default;
    explicit Scalar(Field f) : field_(f) {}
    Scalar(Field f, Rational a) : field_(f), a_(std::move(a)) {}
    Scalar(Field f, Rational a, Rational b);

    static Scalar from_int(Field f, long v) { return Scalar(f, Rational(v)); }
    /// The field generator theta; invalid over Q.
    static Scalar generator(Field f);

    const Field& field() const { return field_; }
    const Rational& rat_part() const { return a_; }
    const Rational& theta_part() const { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_one() const { return a_ == 1 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar conjugate() const;
    /// norm(a+b*theta) = (a+b*theta)(a+b*conj(theta)); rational, >= 0, = 0 iff zero.
    Rational norm() const;
    Scalar inverse() const;
    Scalar pow(long e) const;

    /// Exact square root within the field, if one exists.
    std::optional<Scalar> sqrt_in_field() const;

    /// Multiplicative order if this is a root of unity (searched up to 12).
    std::optional<int> root_of_unity_order() const;

    /// Total order used only for canonical/deterministic output.
    std::strong_ordering order_key(const Scalar& o) const;

    std::size_t height_bits() const;

private:
    Field field_{};
    Rational a_{0};
    Rational b_{0};
};

Scalar operator*(const Rational& c, const Scalar& s);

/// Re-embed a rational-coefficient scalar into a larger field.
Scalar lift_scalar(const Scalar& s, const Field& target);

} // namespace pardiff

#endif
