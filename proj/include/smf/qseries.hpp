#pragma once

#include <string>
#include <vector>

#include "smf/quadfield.hpp"

namespace smf {

// Truncated q-expansion sum_{n=0}^{prec} a(n) q^n of an even-weight
// modular form for SL_2(Z).
class QSeries {
  public:
    QSeries(int weight, int prec, FieldPtr ring = nullptr);

    int weight() const { return weight_; }
    int prec() const { return prec_; }
    const FieldPtr& ring() const { return ring_; }

    const FieldElem& coeff(int n) const;
    void set_coeff(int n, FieldElem value);

    bool is_zero() const;

    QSeries truncated(int prec) const;

    QSeries& operator+=(const QSeries& o);
    QSeries& operator-=(const QSeries& o);
    QSeries operator-() const;
    // scalar multiple; promotes the coefficient ring if needed
    QSeries scaled(const FieldElem& s) const;

    friend QSeries operator+(QSeries x, const QSeries& y) { return x += y; }
    friend QSeries operator-(QSeries x, const QSeries& y) { return x -= y; }
    // truncated Cauchy product; weights add, precision is the min
    friend QSeries operator*(const QSeries& x, const QSeries& y);

    bool operator==(const QSeries& o) const;

    // "genus=1 weight=k ring=R prec=N" followed by "n: coeff" lines,
    // zero coefficients omitted.
    std::string to_text() const;
    std::string to_json() const;

  private:
    int weight_;
    int prec_;
    FieldPtr ring_;
    std::vector<FieldElem> c_;
};

QSeries qseries_pow(const QSeries& base, unsigned e);

std::string ring_token(const FieldPtr& ring);
FieldPtr parse_ring_token(const std::string& token);
QSeries parse_qseries_text(const std::string& text);

} // namespace smf
