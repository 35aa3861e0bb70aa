#include "pardiff/field.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace pardiff {

std::optional<Integer> integer_sqrt_exact(const Integer& n) {
    if (n < 0) return std::nullopt;
    Integer s = boost::multiprecision::sqrt(n);
    if (s * s == n) return s;
    return std::nullopt;
}

std::optional<Rational> rational_sqrt_exact(const Rational& r) {
    if (r < 0) return std::nullopt;
    auto sn = integer_sqrt_exact(numerator(r));
    auto sd = integer_sqrt_exact(denominator(r));
    if (!sn || !sd) return std::nullopt;
    return Rational(*sn, *sd);
}

Rational rational_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0 && e < 0) throw internal_error("rational_pow: zero base, negative exponent");
    Rational b = e < 0 ? Rational(denominator(base), numerator(base)) : base;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    Rational acc(1);
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

std::string rational_to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

std::size_t rational_bits(const Rational& r) {
    auto n = numerator(r);
    auto d = denominator(r);
    if (n < 0) n = -n;
    std::size_t bn = n == 0 ? 1 : boost::multiprecision::msb(n) + 1;
    std::size_t bd = boost::multiprecision::msb(d) + 1;
    return bn > bd ? bn : bd;
}

Field Field::imag_quad(unsigned d) {
    if (d == 0) throw std::invalid_argument("imag_quad: D must be positive");
    for (unsigned p = 2; p * p <= d; ++p)
        if (d % (p * p) == 0) throw std::invalid_argument("imag_quad: D must be squarefree");
    return {FieldKind::ImagQuadQ, d};
}

Rational Field::theta_sq_lin() const {
    return kind == FieldKind::EisensteinQ ? Rational(-1) : Rational(0);
}

Rational Field::theta_sq_const() const {
    switch (kind) {
        case FieldKind::Q: return Rational(0);
        case FieldKind::GaussQ: return Rational(-1);
        case FieldKind::EisensteinQ: return Rational(-1);
        case FieldKind::ImagQuadQ: return Rational(-static_cast<long>(d));
    }
    return Rational(0);
}

std::string Field::generator_symbol() const {
    switch (kind) {
        case FieldKind::Q: return "";
        case FieldKind::GaussQ: return "i";
        case FieldKind::EisensteinQ: return "w";
        case FieldKind::ImagQuadQ: return "s";
    }
    return "";
}

std::string Field::name() const {
    switch (kind) {
        case FieldKind::Q: return "Q";
        case FieldKind::GaussQ: return "Q(i)";
        case FieldKind::EisensteinQ: return "Q(w)";
        case FieldKind::ImagQuadQ: return "Q(sqrt-" + std::to_string(d) + ")";
    }
    return "?";
}

void require_same_field(const Field& a, const Field& b, const char* where) {
    if (!(a == b))
        throw field_mismatch_error(std::string(where) + ": field mismatch (" + a.name() +
                                   " vs " + b.name() + ")");
}

Scalar::Scalar(Field f, Rational a, Rational b) : field_(f), a_(std::move(a)), b_(std::move(b)) {
    if (field_.kind == FieldKind::Q && b_ != 0)
        throw field_mismatch_error("Scalar: nonzero theta part over Q");
}

Scalar Scalar::generator(Field f) {
    if (f.kind == FieldKind::Q)
        throw field_mismatch_error("Scalar::generator: Q has no generator");
    return Scalar(f, Rational(0), Rational(1));
}

Scalar Scalar::operator-() const { return Scalar(field_, -a_, -b_); }

Scalar Scalar::operator+(const Scalar& o) const {
    require_same_field(field_, o.field_, "Scalar+");
    return Scalar(field_, a_ + o.a_, b_ + o.b_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    require_same_field(field_, o.field_, "Scalar-");
    return Scalar(field_, a_ - o.a_, b_ - o.b_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    require_same_field(field_, o.field_, "Scalar*");
    // (a + b t)(c + d t) = ac + bd t^2 + (ad + bc) t,  t^2 = t1 t + t2
    Rational cross = a_ * o.b_ + b_ * o.a_;
    Rational bd = b_ * o.b_;
    return Scalar(field_, a_ * o.a_ + bd * field_.theta_sq_const(),
                  cross + bd * field_.theta_sq_lin());
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
    require_same_field(field_, o.field_, "Scalar==");
    return a_ == o.a_ && b_ == o.b_;
}

Scalar Scalar::conjugate() const {
    // conj(theta) = t1 - theta, so conj(a + b theta) = (a + b t1) - b theta.
    return Scalar(field_, a_ + b_ * field_.theta_sq_lin(), -b_);
}

Rational Scalar::norm() const {
    Scalar n = *this * conjugate();
    if (n.b_ != 0) throw internal_error("Scalar::norm: nonrational norm");
    return n.a_;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("Scalar::inverse: zero");
    Rational n = norm();
    Scalar c = conjugate();
    return Scalar(field_, c.a_ / n, c.b_ / n);
}

Scalar Scalar::pow(long e) const {
    Scalar base = e < 0 ? inverse() : *this;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    Scalar acc(field_, Rational(1));
    while (n) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

std::optional<Scalar> Scalar::sqrt_in_field() const {
    if (is_zero()) return Scalar(field_);
    // Solve (u + v theta)^2 = a + b theta with theta^2 = t1 theta + t2:
    //   u^2 + t2 v^2 = a,   v (2u + t1 v) = b.
    const Rational t1 = field_.theta_sq_lin();
    const Rational t2 = field_.theta_sq_const();
    if (b_ == 0) {
        if (auto u = rational_sqrt_exact(a_)) return Scalar(field_, *u);
        if (field_.kind != FieldKind::Q) {
            // v != 0, u = -t1 v / 2:  v^2 (t1^2/4 + t2) = a
            Rational den = t1 * t1 / 4 + t2;
            if (den != 0) {
                if (auto v = rational_sqrt_exact(a_ / den))
                    return Scalar(field_, -t1 * *v / 2, *v);
            }
        }
        return std::nullopt;
    }
    // b != 0: eliminate u: (t1^2 + 4 t2) v^4 - 2 (t1 b + 2a) v^2 + b^2 = 0.
    Rational A = t1 * t1 + 4 * t2;
    Rational B = -2 * (t1 * b_ + 2 * a_);
    Rational C = b_ * b_;
    if (A == 0) return std::nullopt; // cannot happen for the supported fields
    Rational disc = B * B - 4 * A * C;
    auto sd = rational_sqrt_exact(disc);
    if (!sd) return std::nullopt;
    for (int sign : {1, -1}) {
        Rational t = (-B + sign * *sd) / (2 * A); // candidate v^2
        auto v = rational_sqrt_exact(t);
        if (!v || *v == 0) continue;
        Rational u = (b_ / *v - t1 * *v) / 2;
        Scalar cand(field_, u, *v);
        if (cand * cand == *this) return cand;
    }
    return std::nullopt;
}

std::optional<int> Scalar::root_of_unity_order() const {
    Scalar one(field_, Rational(1));
    Scalar p = *this;
    for (int n = 1; n <= 12; ++n) {
        if (p == one) return n;
        p = p * *this;
    }
    return std::nullopt;
}

std::strong_ordering Scalar::order_key(const Scalar& o) const {
    if (a_ < o.a_) return std::strong_ordering::less;
    if (a_ > o.a_) return std::strong_ordering::greater;
    if (b_ < o.b_) return std::strong_ordering::less;
    if (b_ > o.b_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::size_t Scalar::height_bits() const {
    std::size_t x = rational_bits(a_), y = rational_bits(b_);
    return x > y ? x : y;
}

Scalar operator*(const Rational& c, const Scalar& s) {
    return Scalar(s.field(), c * s.rat_part(), c * s.theta_part());
}

Scalar lift_scalar(const Scalar& s, const Field& target) {
    if (s.field() == target) return s;
    if (s.field().kind != FieldKind::Q || !s.is_rational())
        throw field_mismatch_error("lift_scalar: only Q -> extension lifts are supported");
    return Scalar(target, s.rat_part());
}

} // namespace pardiff
