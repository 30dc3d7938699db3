#include "smf/quadfield.hpp"

#include <sstream>

namespace smf {

namespace {

bool is_perfect_square(const Int& n) {
    if (n < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

} // namespace

QuadField::QuadField(Int b, Int c) : b_(std::move(b)), c_(std::move(c)) {
    if (is_perfect_square(discriminant()))
        throw Error("QuadField: x^2 - " + b_.get_str() + "*x - " + c_.get_str() +
                    " is reducible over Q");
}

std::string QuadField::str() const {
    std::ostringstream os;
    os << "x^2";
    if (b_ >= 0)
        os << " - " << b_.get_str();
    else
        os << " + " << Int(-b_).get_str();
    os << "*x";
    if (c_ >= 0)
        os << " - " << c_.get_str();
    else
        os << " + " << Int(-c_).get_str();
    return os.str();
}

FieldElem::FieldElem(Rat u, Rat v, FieldPtr field)
    : field_(std::move(field)), u_(std::move(u)), v_(std::move(v)) {
    if (!field_ && v_ != 0) throw Error("FieldElem: rational element with v != 0");
    if (field_ && v_ == 0) field_ = nullptr; // rational values stay rational
}

FieldPtr common_field(const FieldPtr& x, const FieldPtr& y) {
    if (!x) return y;
    if (!y) return x;
    if (!same_field(x, y))
        throw RingMismatch("elements of distinct quadratic fields: " + x->str() +
                           " vs " + y->str());
    return x;
}

FieldElem FieldElem::promoted(const FieldPtr& field) const {
    (void)common_field(field_, field); // compatibility check only
    return *this;
}

FieldElem FieldElem::operator-() const {
    FieldElem r = *this;
    r.u_ = -r.u_;
    r.v_ = -r.v_;
    return r;
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
    field_ = common_field(field_, o.field_);
    u_ += o.u_;
    v_ += o.v_;
    if (v_ == 0) field_ = nullptr;
    return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
    field_ = common_field(field_, o.field_);
    u_ -= o.u_;
    v_ -= o.v_;
    if (v_ == 0) field_ = nullptr;
    return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& o) {
    field_ = common_field(field_, o.field_);
    if (v_ == 0 && o.v_ == 0) {
        u_ *= o.u_;
        field_ = nullptr;
        return *this;
    }
    // (u1 + v1 a)(u2 + v2 a) with a^2 = b a + c
    const Rat b(field_->b()), c(field_->c());
    Rat cross = u_ * o.v_ + v_ * o.u_ + v_ * o.v_ * b;
    Rat plain = u_ * o.u_ + v_ * o.v_ * c;
    u_ = plain;
    v_ = cross;
    if (v_ == 0) field_ = nullptr;
    return *this;
}

FieldElem FieldElem::conj() const {
    if (is_rational()) return *this;
    // a -> b - a
    return FieldElem(u_ + v_ * Rat(field_->b()), -v_, field_);
}

Rat FieldElem::norm() const {
    if (is_rational()) return u_ * u_;
    const Rat b(field_->b()), c(field_->c());
    return u_ * u_ + b * u_ * v_ - c * v_ * v_;
}

FieldElem FieldElem::inverse() const {
    if (is_zero()) throw Error("FieldElem: division by zero");
    if (is_rational()) return FieldElem(Rat(1) / u_);
    FieldElem cj = conj();
    Rat n = norm();
    return FieldElem(cj.u_ / n, cj.v_ / n, field_);
}

FieldElem& FieldElem::operator/=(const FieldElem& o) { return *this *= o.inverse(); }

bool FieldElem::operator==(const FieldElem& o) const {
    if (u_ != o.u_ || v_ != o.v_) return false;
    if (v_ == 0) return true;
    return same_field(field_, o.field_);
}

std::string FieldElem::str() const {
    if (is_rational()) return rat_str(u_);
    return rat_str(u_) + " + " + rat_str(v_) + "*a";
}

FieldElem operator+(FieldElem x, const FieldElem& y) { return x += y; }
FieldElem operator-(FieldElem x, const FieldElem& y) { return x -= y; }
FieldElem operator*(FieldElem x, const FieldElem& y) { return x *= y; }
FieldElem operator/(FieldElem x, const FieldElem& y) { return x /= y; }

FieldElem pow_elem(const FieldElem& base, unsigned long e) {
    FieldElem r(1);
    FieldElem b = base;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

FieldElem parse_field_elem(const std::string& s, const FieldPtr& field) {
    const auto pos_star = s.find("*a");
    if (pos_star == std::string::npos) return FieldElem(parse_rat(s));
    if (!field) throw ParseError("quadratic element without a field: '" + s + "'");
    // split "<u> + <v>*a" / "<u> - <v>*a" on the last sign separator
    std::string body = s.substr(0, pos_star);
    size_t sep = body.rfind(" + ");
    bool neg = false;
    size_t sep_m = body.rfind(" - ");
    if (sep_m != std::string::npos && (sep == std::string::npos || sep_m > sep)) {
        sep = sep_m;
        neg = true;
    }
    if (sep == std::string::npos) throw ParseError("bad field element: '" + s + "'");
    Rat u = parse_rat(body.substr(0, sep));
    Rat v = parse_rat(body.substr(sep + 3));
    if (neg) v = -v;
    return FieldElem(u, v, field);
}

} // namespace smf
