#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "smf/quadfield.hpp"

namespace smf {

// Value of a normalized additive valuation; +infinity only at zero.
class Valuation {
  public:
    static Valuation infinite() { return Valuation(true, 0); }
    static Valuation finite(long v) { return Valuation(false, v); }

    bool is_infinite() const { return inf_; }
    long value() const {
        if (inf_) throw Error("Valuation: value() of +infinity");
        return v_;
    }

    bool operator==(const Valuation& o) const {
        return inf_ == o.inf_ && (inf_ || v_ == o.v_);
    }
    bool operator<(const Valuation& o) const {
        if (inf_) return false;
        if (o.inf_) return true;
        return v_ < o.v_;
    }
    bool operator>=(long bound) const { return inf_ || v_ >= bound; }

    friend Valuation min(const Valuation& x, const Valuation& y) {
        return x < y ? x : y;
    }
    friend Valuation operator+(const Valuation& x, const Valuation& y) {
        if (x.inf_ || y.inf_) return infinite();
        return finite(x.v_ + y.v_);
    }

    std::string str() const { return inf_ ? "+inf" : std::to_string(v_); }

  private:
    Valuation(bool inf, long v) : inf_(inf), v_(v) {}
    bool inf_;
    long v_;
};

// Unramified prime ideal of Q or of a quadratic field: (p) itself, a split
// ideal (p, a - r0), or the inert ideal (p).
class PrimeIdeal {
  public:
    enum class Kind { Rational, Split, Inert };

    static PrimeIdeal rational(Int p);
    static PrimeIdeal split(FieldPtr field, Int p, Int r0);
    static PrimeIdeal inert(FieldPtr field, Int p);

    Kind kind() const { return kind_; }
    const FieldPtr& field() const { return field_; }
    const Int& p() const { return p_; }
    const Int& r0() const {
        if (kind_ != Kind::Split) throw Error("PrimeIdeal: r0 on non-split ideal");
        return r0_;
    }

    // Root of x^2 - b*x - c modulo p^m lifting r0 (split only).
    Int hensel_root(unsigned m) const;

    // Normalized valuation of an element of the ideal's field (rationals
    // are accepted for quadratic ideals as well).
    Valuation val(const FieldElem& x) const;

    // Canonical representative of x in [0, p^m) under the embedding that
    // sends a to hensel_root(m).  Requires val(x) >= 0; inert ideals of a
    // quadratic field have no such embedding.
    Int residue_mod(unsigned m, const FieldElem& x) const;

    // "(p)" or "(p, a - r0)"
    std::string str() const;

  private:
    struct LiftMemo {
        std::mutex mu;
        std::map<unsigned, Int> lifts;
    };

    PrimeIdeal(Kind kind, FieldPtr field, Int p, Int r0)
        : kind_(kind), field_(std::move(field)), p_(std::move(p)), r0_(std::move(r0)),
          memo_(std::make_shared<LiftMemo>()) {}

    // valuation of u + v*a with integral u, v, not both zero
    long integral_val(const Int& u, const Int& v) const;
    // embedding of u + v*a into Z/p^m, integral coordinates
    Int integral_residue(unsigned m, const Int& u, const Int& v) const;

    Kind kind_;
    FieldPtr field_;
    Int p_;
    Int r0_;
    std::shared_ptr<LiftMemo> memo_; // shared by copies of the same ideal
};

// Prime ideals of K (or of Q when field is null) above an unramified
// rational prime p; throws RamifiedPrime when p divides b^2 + 4c.
std::vector<PrimeIdeal> prime_ideals_above(const FieldPtr& field, const Int& p);

// Square root of a modulo an odd prime p (a a quadratic residue).
Int sqrt_mod_prime(const Int& a, const Int& p);

} // namespace smf
