#pragma once

#include <memory>
#include <string>
#include <utility>

#include "smf/rational.hpp"

namespace smf {

// Real or imaginary quadratic field Q[a]/(a^2 - b*a - c).
// The defining polynomial must be irreducible over Q, i.e. b^2 + 4c is
// not a perfect square.
class QuadField {
  public:
    QuadField(Int b, Int c);

    const Int& b() const { return b_; }
    const Int& c() const { return c_; }
    Int discriminant() const { return b_ * b_ + 4 * c_; }

    bool operator==(const QuadField& o) const { return b_ == o.b_ && c_ == o.c_; }

    // "x^2 - b*x - c" with signs folded into the constants.
    std::string str() const;

  private:
    Int b_, c_;
};

using FieldPtr = std::shared_ptr<const QuadField>;

inline FieldPtr make_quad_field(Int b, Int c) {
    return std::make_shared<const QuadField>(std::move(b), std::move(c));
}

inline bool same_field(const FieldPtr& x, const FieldPtr& y) {
    if (x == y) return true;
    if (!x || !y) return false;
    return *x == *y;
}

// Element u + v*a of Q (field == nullptr, v == 0) or of a quadratic field.
class FieldElem {
  public:
    FieldElem() : u_(0), v_(0) {}
    FieldElem(const Rat& u) : u_(u), v_(0) {}                    // NOLINT(google-explicit-constructor)
    FieldElem(long u) : u_(u), v_(0) {}                          // NOLINT(google-explicit-constructor)
    FieldElem(const Int& u) : u_(Rat(u)), v_(0) {}               // NOLINT(google-explicit-constructor)
    FieldElem(Rat u, Rat v, FieldPtr field);

    const Rat& u() const { return u_; }
    const Rat& v() const { return v_; }
    const FieldPtr& field() const { return field_; }

    bool is_rational() const { return field_ == nullptr; }
    bool is_zero() const { return u_ == 0 && v_ == 0; }
    bool is_integral() const {
        return u_.get_den() == 1 && v_.get_den() == 1;
    }

    // Reinterpret in a (possibly larger) coefficient field.
    FieldElem promoted(const FieldPtr& field) const;

    FieldElem operator-() const;
    FieldElem& operator+=(const FieldElem& o);
    FieldElem& operator-=(const FieldElem& o);
    FieldElem& operator*=(const FieldElem& o);
    FieldElem& operator/=(const FieldElem& o);

    // Image under a -> b - a, the nontrivial field automorphism.
    FieldElem conj() const;
    // x * conj(x) = u^2 + b*u*v - c*v^2, always rational.
    Rat norm() const;
    FieldElem inverse() const;

    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    // "n/d" for rationals, "u + v*a" otherwise.
    std::string str() const;

  private:
    FieldPtr field_; // nullptr means Q
    Rat u_, v_;
};

FieldElem operator+(FieldElem x, const FieldElem& y);
FieldElem operator-(FieldElem x, const FieldElem& y);
FieldElem operator*(FieldElem x, const FieldElem& y);
FieldElem operator/(FieldElem x, const FieldElem& y);

// Common coefficient field of two elements; throws RingMismatch for two
// distinct quadratic fields.
FieldPtr common_field(const FieldPtr& x, const FieldPtr& y);

FieldElem pow_elem(const FieldElem& base, unsigned long e);

// Parses "n/d", "u + v*a" or "u - v*a" (the exact output of str()).
FieldElem parse_field_elem(const std::string& s, const FieldPtr& field);

} // namespace smf
