#pragma once

#include <map>
#include <string>

#include "smf/index2.hpp"
#include "smf/qseries.hpp"

namespace smf {

// Truncated Fourier expansion of a degree-2 Siegel modular form of even
// weight: sparse table over the canonical indices of a box, absent keys
// meaning zero.
class FExp2 {
  public:
    FExp2(int weight, int boxD, FieldPtr ring = nullptr);

    int weight() const { return weight_; }
    int box() const { return box_; }
    const FieldPtr& ring() const { return ring_; }
    const std::map<IndexT, FieldElem>& coeffs() const { return a_; }

    // a(T); T may be given with r < 0 or outside the box (outside reads
    // are an error, not silently zero)
    const FieldElem& coeff(const IndexT& T) const;
    FieldElem coeff_or_zero(const IndexT& T) const;
    void set_coeff(const IndexT& T, FieldElem value);

    bool in_box(const IndexT& T) const { return Box{box_}.contains(T); }
    bool is_zero() const;

    FExp2 truncated(int boxD) const;
    FExp2 promoted(const FieldPtr& ring) const;

    FExp2& operator+=(const FExp2& o);
    FExp2& operator-=(const FExp2& o);
    FExp2 operator-() const;
    FExp2 scaled(const FieldElem& s) const;

    friend FExp2 operator+(FExp2 x, const FExp2& y) { return x += y; }
    friend FExp2 operator-(FExp2 x, const FExp2& y) { return x -= y; }
    // convolution product; weights add, box is the componentwise min
    friend FExp2 operator*(const FExp2& x, const FExp2& y);

    bool operator==(const FExp2& o) const;

    // Siegel Phi-operator image: a(j) = a((j,0,0)); precision = box D.
    QSeries phi() const;

    // a(m,r,n) == a(n,r,m) over the whole table
    void check_symmetry(const std::string& where) const;

    // "genus=2 weight=k ring=R box=D" + "m,r,n: value" lines in
    // enumeration order, zeros omitted.
    std::string to_text() const;
    std::string to_json() const;

  private:
    int weight_;
    int box_;
    FieldPtr ring_;
    std::map<IndexT, FieldElem> a_;
    static const FieldElem zero_;
};

FExp2 fexp2_pow(const FExp2& base, unsigned e);

FExp2 parse_fexp2_text(const std::string& text);

} // namespace smf
