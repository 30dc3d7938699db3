#include "smf/qseries.hpp"

#include <sstream>

namespace smf {

QSeries::QSeries(int weight, int prec, FieldPtr ring)
    : weight_(weight), prec_(prec), ring_(std::move(ring)), c_(prec + 1) {
    if (prec < 0) throw Error("QSeries: negative precision");
}

const FieldElem& QSeries::coeff(int n) const {
    if (n < 0 || n > prec_) throw Error("QSeries::coeff: index out of range");
    return c_[n];
}

void QSeries::set_coeff(int n, FieldElem value) {
    if (n < 0 || n > prec_) throw Error("QSeries::set_coeff: index out of range");
    ring_ = common_field(ring_, value.field());
    c_[n] = std::move(value);
}

bool QSeries::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

QSeries QSeries::truncated(int prec) const {
    if (prec > prec_) throw Error("QSeries::truncated: cannot extend precision");
    QSeries r(weight_, prec, ring_);
    for (int n = 0; n <= prec; ++n) r.c_[n] = c_[n];
    return r;
}

QSeries& QSeries::operator+=(const QSeries& o) {
    if (weight_ != o.weight_)
        throw WeightMismatch("QSeries add: weight " + std::to_string(weight_) +
                             " vs " + std::to_string(o.weight_));
    ring_ = common_field(ring_, o.ring_);
    if (o.prec_ < prec_) {
        prec_ = o.prec_;
        c_.resize(prec_ + 1);
    }
    for (int n = 0; n <= prec_; ++n) c_[n] += o.c_[n];
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) { return *this += -o; }

QSeries QSeries::operator-() const {
    QSeries r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

QSeries QSeries::scaled(const FieldElem& s) const {
    QSeries r(weight_, prec_, common_field(ring_, s.field()));
    for (int n = 0; n <= prec_; ++n) r.c_[n] = c_[n] * s;
    return r;
}

QSeries operator*(const QSeries& x, const QSeries& y) {
    QSeries r(x.weight_ + y.weight_, std::min(x.prec_, y.prec_),
              common_field(x.ring_, y.ring_));
    for (int i = 0; i <= r.prec_; ++i) {
        if (x.c_[i].is_zero()) continue;
        for (int j = 0; i + j <= r.prec_; ++j) {
            if (y.c_[j].is_zero()) continue;
            r.c_[i + j] += x.c_[i] * y.c_[j];
        }
    }
    return r;
}

bool QSeries::operator==(const QSeries& o) const {
    if (weight_ != o.weight_ || prec_ != o.prec_) return false;
    for (int n = 0; n <= prec_; ++n)
        if (c_[n] != o.c_[n]) return false;
    return true;
}

QSeries qseries_pow(const QSeries& base, unsigned e) {
    if (e == 0) {
        QSeries r(0, base.prec(), base.ring());
        r.set_coeff(0, FieldElem(1));
        return r;
    }
    QSeries r = base;
    for (unsigned i = 1; i < e; ++i) r = r * base;
    return r;
}

std::string ring_token(const FieldPtr& ring) {
    if (!ring) return "Q";
    // compact, whitespace-free form of the defining polynomial
    return "x^2-" + ring->b().get_str() + "*x-" + ring->c().get_str();
}

FieldPtr parse_ring_token(const std::string& token) {
    if (token == "Q") return nullptr;
    if (token.rfind("x^2-", 0) != 0) throw ParseError("bad ring token: " + token);
    auto star = token.find("*x-", 4);
    if (star == std::string::npos) throw ParseError("bad ring token: " + token);
    Int b(token.substr(4, star - 4));
    Int c(token.substr(star + 3));
    return make_quad_field(b, c);
}

std::string QSeries::to_text() const {
    std::ostringstream os;
    os << "genus=1 weight=" << weight_ << " ring=" << ring_token(ring_)
       << " prec=" << prec_ << "\n";
    for (int n = 0; n <= prec_; ++n)
        if (!c_[n].is_zero()) os << n << ": " << c_[n].str() << "\n";
    return os.str();
}

std::string QSeries::to_json() const {
    std::ostringstream os;
    os << "{\"genus\":1,\"weight\":" << weight_ << ",\"ring\":\"" << ring_token(ring_)
       << "\",\"prec\":" << prec_ << ",\"coeffs\":{";
    bool first = true;
    for (int n = 0; n <= prec_; ++n) {
        if (c_[n].is_zero()) continue;
        if (!first) os << ",";
        first = false;
        os << "\"" << n << "\":\"" << c_[n].str() << "\"";
    }
    os << "}}";
    return os.str();
}

QSeries parse_qseries_text(const std::string& text) {
    std::istringstream is(text);
    std::string head;
    if (!std::getline(is, head)) throw ParseError("empty q-series");
    int weight = 0, prec = -1;
    std::string ring = "Q";
    {
        std::istringstream hs(head);
        std::string tok;
        while (hs >> tok) {
            auto eq = tok.find('=');
            if (eq == std::string::npos) throw ParseError("bad header token: " + tok);
            std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
            if (key == "weight") weight = std::stoi(val);
            else if (key == "prec") prec = std::stoi(val);
            else if (key == "ring") ring = val;
            else if (key != "genus") throw ParseError("bad header key: " + key);
        }
    }
    if (prec < 0) throw ParseError("q-series header without prec");
    FieldPtr field = parse_ring_token(ring);
    QSeries out(weight, prec, field);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) throw ParseError("bad coefficient line: " + line);
        int n = std::stoi(line.substr(0, colon));
        out.set_coeff(n, parse_field_elem(line.substr(colon + 2), field));
    }
    return out;
}

} // namespace smf
