#include "smf/fexp2.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace smf {

const FieldElem FExp2::zero_{};

std::vector<IndexT> enumerate_box(int D) {
    if (D < 0) throw Error("enumerate_box: negative bound");
    std::vector<IndexT> out;
    for (int n = 0; n <= D; ++n)
        for (int m = 0; m <= D; ++m)
            for (int r = 0; 1L * r * r <= 4L * m * n; ++r)
                out.push_back({m, r, n});
    return out;
}

std::vector<IndexT> enumerate_box_signed(int D) {
    std::vector<IndexT> out;
    for (const IndexT& T : enumerate_box(D)) {
        out.push_back(T);
        if (T.r > 0) out.push_back({T.m, -T.r, T.n});
    }
    return out;
}

FExp2::FExp2(int weight, int boxD, FieldPtr ring)
    : weight_(weight), box_(boxD), ring_(std::move(ring)) {
    if (boxD < 0) throw Error("FExp2: negative box");
}

const FieldElem& FExp2::coeff(const IndexT& T) const {
    const IndexT c = T.canonical();
    if (!in_box(c)) throw Error("FExp2::coeff: " + T.str() + " outside box");
    auto it = a_.find(c);
    return it == a_.end() ? zero_ : it->second;
}

FieldElem FExp2::coeff_or_zero(const IndexT& T) const {
    const IndexT c = T.canonical();
    if (!c.is_psd()) return FieldElem(0);
    return coeff(c);
}

void FExp2::set_coeff(const IndexT& T, FieldElem value) {
    const IndexT c = T.canonical();
    if (!in_box(c)) throw Error("FExp2::set_coeff: " + T.str() + " outside box");
    ring_ = common_field(ring_, value.field());
    if (value.is_zero())
        a_.erase(c);
    else
        a_[c] = std::move(value);
}

bool FExp2::is_zero() const { return a_.empty(); }

FExp2 FExp2::truncated(int boxD) const {
    if (boxD > box_) throw Error("FExp2::truncated: cannot extend box");
    FExp2 r(weight_, boxD, ring_);
    for (const auto& [T, v] : a_)
        if (r.in_box(T)) r.a_[T] = v;
    return r;
}

FExp2 FExp2::promoted(const FieldPtr& ring) const {
    FExp2 r = *this;
    r.ring_ = common_field(ring_, ring);
    return r;
}

FExp2& FExp2::operator+=(const FExp2& o) {
    if (weight_ != o.weight_)
        throw WeightMismatch("FExp2 add: weight " + std::to_string(weight_) + " vs " +
                             std::to_string(o.weight_));
    ring_ = common_field(ring_, o.ring_);
    if (o.box_ < box_) *this = truncated(o.box_);
    for (const auto& [T, v] : o.a_) {
        if (!in_box(T)) continue;
        FieldElem sum = coeff(T) + v;
        set_coeff(T, std::move(sum));
    }
    return *this;
}

FExp2& FExp2::operator-=(const FExp2& o) { return *this += o.scaled(FieldElem(-1)); }

FExp2 FExp2::operator-() const { return scaled(FieldElem(-1)); }

FExp2 FExp2::scaled(const FieldElem& s) const {
    FExp2 r(weight_, box_, common_field(ring_, s.field()));
    if (s.is_zero()) return r;
    for (const auto& [T, v] : a_) r.set_coeff(T, v * s);
    return r;
}

FExp2 operator*(const FExp2& x, const FExp2& y) {
    FExp2 r(x.weight_ + y.weight_, std::min(x.box_, y.box_),
            common_field(x.ring_, y.ring_));
    const int D = r.box_;
    // signed supports; only sums with r >= 0 are accumulated, the rest
    // follow by symmetry
    std::map<IndexT, FieldElem> acc;
    for (const auto& [T1, v1] : x.a_) {
        for (int sign = 0; sign < (T1.r > 0 ? 2 : 1); ++sign) {
            const IndexT S1{T1.m, sign ? -T1.r : T1.r, T1.n};
            if (S1.m > D || S1.n > D) continue;
            for (const auto& [T2, v2] : y.a_) {
                for (int sign2 = 0; sign2 < (T2.r > 0 ? 2 : 1); ++sign2) {
                    const IndexT S2{T2.m, sign2 ? -T2.r : T2.r, T2.n};
                    const IndexT T = S1 + S2;
                    if (T.r < 0 || T.m > D || T.n > D) continue;
                    acc[T] += v1 * v2;
                }
            }
        }
    }
    for (auto& [T, v] : acc)
        if (!v.is_zero()) r.set_coeff(T, std::move(v));
    r.check_symmetry("mul");
    return r;
}

bool FExp2::operator==(const FExp2& o) const {
    return weight_ == o.weight_ && box_ == o.box_ && a_ == o.a_;
}

QSeries FExp2::phi() const {
    QSeries f(weight_, box_, ring_);
    for (int j = 0; j <= box_; ++j) f.set_coeff(j, coeff({j, 0, 0}));
    return f;
}

void FExp2::check_symmetry(const std::string& where) const {
    for (const auto& [T, v] : a_)
        if (coeff(T.transposed()) != v)
            throw Error("coefficient symmetry violated after " + where + " at " +
                        T.str());
}

std::string FExp2::to_text() const {
    std::ostringstream os;
    os << "genus=2 weight=" << weight_ << " ring=" << ring_token(ring_)
       << " box=" << box_ << "\n";
    for (const auto& [T, v] : a_)
        os << T.m << "," << T.r << "," << T.n << ": " << v.str() << "\n";
    return os.str();
}

std::string FExp2::to_json() const {
    std::ostringstream os;
    os << "{\"genus\":2,\"weight\":" << weight_ << ",\"ring\":\"" << ring_token(ring_)
       << "\",\"box\":" << box_ << ",\"coeffs\":{";
    bool first = true;
    for (const auto& [T, v] : a_) {
        if (!first) os << ",";
        first = false;
        os << "\"" << T.m << "," << T.r << "," << T.n << "\":\"" << v.str() << "\"";
    }
    os << "}}";
    return os.str();
}

FExp2 parse_fexp2_text(const std::string& text) {
    std::istringstream is(text);
    std::string head;
    if (!std::getline(is, head)) throw ParseError("empty expansion");
    int weight = 0, boxD = -1;
    std::string ring = "Q";
    {
        std::istringstream hs(head);
        std::string tok;
        while (hs >> tok) {
            auto eq = tok.find('=');
            if (eq == std::string::npos) throw ParseError("bad header token: " + tok);
            std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
            if (key == "weight") weight = std::stoi(val);
            else if (key == "box") boxD = std::stoi(val);
            else if (key == "ring") ring = val;
            else if (key != "genus") throw ParseError("bad header key: " + key);
        }
    }
    if (boxD < 0) throw ParseError("expansion header without box");
    FieldPtr field = parse_ring_token(ring);
    FExp2 out(weight, boxD, field);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) throw ParseError("bad coefficient line: " + line);
        IndexT T{};
        if (std::sscanf(line.substr(0, colon).c_str(), "%d,%d,%d", &T.m, &T.r, &T.n) != 3)
            throw ParseError("bad index: " + line);
        out.set_coeff(T, parse_field_elem(line.substr(colon + 2), field));
    }
    return out;
}

FExp2 fexp2_pow(const FExp2& base, unsigned e) {
    if (e == 0) {
        FExp2 r(0, base.box(), base.ring());
        r.set_coeff({0, 0, 0}, FieldElem(1));
        return r;
    }
    FExp2 r = base;
    for (unsigned i = 1; i < e; ++i) r = r * base;
    return r;
}

} // namespace smf
