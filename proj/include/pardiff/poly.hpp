#ifndef PARDIFF_POLY_HPP
#define PARDIFF_POLY_HPP

#include <compare>
#include <initializer_list>
#include <utility>
#include <vector>

#include "pardiff/field.hpp"

namespace pardiff {

/// Dense univariate polynomial over a fixed coefficient field,
/// coefficients lowest degree first. The zero polynomial has no
/// coefficients and degree -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(Field f) : field_(f) {}
    Poly(Field f, std::vector<Scalar> coeffs);
    /// Constant polynomial.
    Poly(Field f, const Rational& c);

    static Poly zero(Field f) { return Poly(f); }
    static Poly one(Field f) { return constant(f, Rational(1)); }
    static Poly constant(Field f, const Rational& c) { return Poly(f, c); }
    static Poly constant(const Scalar& c);
    /// The monomial c * z^n.
    static Poly monomial(const Scalar& c, int n);
    /// z over the given field.
    static Poly variable(Field f) { return monomial(Scalar(f, Rational(1)), 1); }
    static Poly from_ints(Field f, std::initializer_list<long> lowest_first);

    const Field& field() const { return field_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    const Scalar& leading() const;
    /// Coefficient of z^i (zero scalar beyond the degree).
    Scalar coeff(int i) const;
    const std::vector<Scalar>& coeffs() const { return c_; }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Scalar& s) const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly pow(int e) const;
    Poly derivative() const;
    Scalar evaluate(const Scalar& x) const;
    Poly monic() const;
    /// Coefficients reversed as z^n * p(1/z) for the declared degree n >= degree().
    Poly reversed(int declared_degree) const;
    /// p(c*z) for a scalar c.
    Poly scale_argument(const Scalar& c) const;
    /// p(z + c).
    Poly shift_argument(const Scalar& c) const;

    std::size_t height_bits() const;

    /// Total order for canonical output: degree first, then coefficients
    /// from the leading one down.
    std::strong_ordering order_key(const Poly& o) const;

private:
    void trim();
    Field field_{};
    std::vector<Scalar> c_;
};

Poly operator*(const Scalar& s, const Poly& p);

/// Quotient and remainder; the divisor must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den);
/// Exact division; throws internal_error on a nonzero remainder.
Poly exact_div(const Poly& num, const Poly& den);
bool divides(const Poly& d, const Poly& p);

/// Monic greatest common divisor (Euclid). gcd(0,0) = 0.
Poly poly_gcd(const Poly& p, const Poly& q);

/// Monic product of the distinct irreducible factors of p.
Poly squarefree_part(const Poly& p);

/// Yun decomposition: pairwise coprime monic squarefree factors with their
/// multiplicities, so p = lc * prod f_i^{m_i}. Multiplicities strictly increase.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p);

/// Multiplicity of the linear factor (z - x) in p.
int root_multiplicity(const Poly& p, const Scalar& x);

/// sum_i coeffs[i] * num^i * den^(declared_degree - i); the numerator of
/// p(num/den) cleared by den^declared_degree.
Poly compose_homogeneous(const Poly& p, const Poly& num, const Poly& den, int declared_degree);

/// Re-embed a polynomial over Q into a larger field.
Poly lift_poly(const Poly& p, const Field& target);

} // namespace pardiff

#endif
