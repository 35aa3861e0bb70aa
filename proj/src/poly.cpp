#include "pardiff/poly.hpp"

#include <algorithm>

namespace pardiff {

Poly::Poly(Field f, std::vector<Scalar> coeffs) : field_(f), c_(std::move(coeffs)) {
    for (const auto& s : c_) require_same_field(field_, s.field(), "Poly");
    trim();
}

Poly::Poly(Field f, const Rational& c) : field_(f) {
    if (c != 0) c_.push_back(Scalar(f, c));
}

Poly Poly::constant(const Scalar& c) {
    Poly p(c.field());
    if (!c.is_zero()) p.c_.push_back(c);
    return p;
}

Poly Poly::monomial(const Scalar& c, int n) {
    Poly p(c.field());
    if (!c.is_zero()) {
        p.c_.assign(static_cast<std::size_t>(n) + 1, Scalar(c.field()));
        p.c_.back() = c;
    }
    return p;
}

Poly Poly::from_ints(Field f, std::initializer_list<long> lowest_first) {
    std::vector<Scalar> v;
    v.reserve(lowest_first.size());
    for (long x : lowest_first) v.push_back(Scalar(f, Rational(x)));
    return Poly(f, std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Scalar& Poly::leading() const {
    if (c_.empty()) throw internal_error("Poly::leading on zero polynomial");
    return c_.back();
}

Scalar Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Scalar(field_);
    return c_[static_cast<std::size_t>(i)];
}

Poly Poly::operator-() const {
    Poly r(field_);
    r.c_.reserve(c_.size());
    for (const auto& s : c_) r.c_.push_back(-s);
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    require_same_field(field_, o.field_, "Poly+");
    Poly r(field_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), Scalar(field_));
    for (std::size_t i = 0; i < r.c_.size(); ++i) {
        Scalar s(field_);
        if (i < c_.size()) s += c_[i];
        if (i < o.c_.size()) s += o.c_[i];
        r.c_[i] = s;
    }
    r.trim();
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    require_same_field(field_, o.field_, "Poly*");
    if (is_zero() || o.is_zero()) return Poly(field_);
    Poly r(field_);
    r.c_.assign(c_.size() + o.c_.size() - 1, Scalar(field_));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r.c_[i + j] += c_[i] * o.c_[j];
    }
    r.trim();
    return r;
}

Poly Poly::operator*(const Scalar& s) const {
    require_same_field(field_, s.field(), "Poly*scalar");
    if (s.is_zero()) return Poly(field_);
    Poly r(field_);
    r.c_.reserve(c_.size());
    for (const auto& x : c_) r.c_.push_back(x * s);
    return r;
}

bool Poly::operator==(const Poly& o) const {
    require_same_field(field_, o.field_, "Poly==");
    return c_ == o.c_;
}

Poly Poly::pow(int e) const {
    if (e < 0) throw internal_error("Poly::pow: negative exponent");
    Poly acc = Poly::one(field_);
    Poly base = *this;
    unsigned n = static_cast<unsigned>(e);
    while (n) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

Poly Poly::derivative() const {
    Poly r(field_);
    if (c_.size() <= 1) return r;
    r.c_.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        r.c_.push_back(Rational(static_cast<long>(i)) * c_[i]);
    r.trim();
    return r;
}

Scalar Poly::evaluate(const Scalar& x) const {
    require_same_field(field_, x.field(), "Poly::evaluate");
    Scalar acc(field_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    if (is_monic()) return *this;
    return *this * leading().inverse();
}

Poly Poly::reversed(int declared_degree) const {
    if (declared_degree < degree()) throw internal_error("Poly::reversed: degree too small");
    std::vector<Scalar> v(static_cast<std::size_t>(declared_degree) + 1, Scalar(field_));
    for (std::size_t i = 0; i < c_.size(); ++i)
        v[static_cast<std::size_t>(declared_degree) - i] = c_[i];
    return Poly(field_, std::move(v));
}

Poly Poly::scale_argument(const Scalar& c) const {
    Poly r(field_);
    Scalar p(field_, Rational(1));
    r.c_.reserve(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        r.c_.push_back(c_[i] * p);
        p = p * c;
    }
    r.trim();
    return r;
}

Poly Poly::shift_argument(const Scalar& c) const {
    // Horner on p(z+c) = ... treating z+c as the argument.
    Poly zc = Poly::variable(field_) + Poly::constant(c);
    Poly acc(field_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * zc + Poly::constant(*it);
    return acc;
}

std::size_t Poly::height_bits() const {
    std::size_t m = 1;
    for (const auto& s : c_) m = std::max(m, s.height_bits());
    return m;
}

std::strong_ordering Poly::order_key(const Poly& o) const {
    if (degree() != o.degree()) return degree() <=> o.degree();
    for (int i = degree(); i >= 0; --i) {
        auto c = coeff(i).order_key(o.coeff(i));
        if (c != std::strong_ordering::equal) return c;
    }
    return std::strong_ordering::equal;
}

Poly operator*(const Scalar& s, const Poly& p) { return p * s; }

std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den) {
    require_same_field(num.field(), den.field(), "divmod");
    if (den.is_zero()) throw std::domain_error("divmod: zero divisor");
    Poly q(num.field());
    Poly r = num;
    const Scalar lead_inv = den.leading().inverse();
    while (!r.is_zero() && r.degree() >= den.degree()) {
        Scalar c = r.leading() * lead_inv;
        int shift = r.degree() - den.degree();
        Poly t = Poly::monomial(c, shift);
        q = q + t;
        r = r - t * den;
    }
    return {q, r};
}

Poly exact_div(const Poly& num, const Poly& den) {
    auto [q, r] = divmod(num, den);
    if (!r.is_zero()) throw internal_error("exact_div: nonzero remainder");
    return q;
}

bool divides(const Poly& d, const Poly& p) {
    if (d.is_zero()) return p.is_zero();
    return divmod(p, d).second.is_zero();
}

Poly poly_gcd(const Poly& p, const Poly& q) {
    require_same_field(p.field(), q.field(), "poly_gcd");
    Poly a = p, b = q;
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly squarefree_part(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("squarefree_part: zero polynomial");
    if (p.degree() == 0) return Poly::one(p.field());
    Poly g = poly_gcd(p, p.derivative());
    return exact_div(p, g).monic();
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
    // Yun's algorithm; valid in characteristic zero.
    std::vector<std::pair<Poly, int>> out;
    if (p.is_zero()) throw std::domain_error("squarefree_decomposition: zero polynomial");
    if (p.degree() == 0) return out;
    Poly pm = p.monic();
    Poly g = poly_gcd(pm, pm.derivative());
    Poly c = exact_div(pm, g);
    Poly d = exact_div(pm.derivative(), g) - c.derivative();
    int i = 1;
    while (!c.is_constant()) {
        Poly a = poly_gcd(c, d);
        if (a.degree() > 0) out.emplace_back(a, i);
        c = exact_div(c, a);
        d = exact_div(d, a) - c.derivative();
        ++i;
    }
    return out;
}

int root_multiplicity(const Poly& p, const Scalar& x) {
    if (p.is_zero()) throw std::domain_error("root_multiplicity: zero polynomial");
    Poly lin = Poly::variable(p.field()) - Poly::constant(x);
    int m = 0;
    Poly r = p;
    while (true) {
        auto [q, rem] = divmod(r, lin);
        if (!rem.is_zero()) return m;
        r = q;
        ++m;
    }
}

Poly compose_homogeneous(const Poly& p, const Poly& num, const Poly& den, int declared_degree) {
    require_same_field(p.field(), num.field(), "compose_homogeneous");
    require_same_field(p.field(), den.field(), "compose_homogeneous");
    if (declared_degree < p.degree())
        throw internal_error("compose_homogeneous: declared degree too small");
    // Horner in num/den: result = sum p_i num^i den^(D-i).
    Poly acc(p.field());
    Poly den_pow = Poly::one(p.field());
    for (int i = declared_degree; i >= 0; --i) {
        acc = acc * num;
        Scalar ci = p.coeff(i);
        if (!ci.is_zero()) acc = acc + den_pow * ci;
        if (i > 0) den_pow = den_pow * den;
    }
    return acc;
}

Poly lift_poly(const Poly& p, const Field& target) {
    if (p.field() == target) return p;
    std::vector<Scalar> v;
    v.reserve(p.coeffs().size());
    for (const auto& s : p.coeffs()) v.push_back(lift_scalar(s, target));
    return Poly(target, std::move(v));
}

} // namespace pardiff
