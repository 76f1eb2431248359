#include "vis/tripoly.hpp"

#include <algorithm>
#include <sstream>

namespace vis {

void TriPoly::add_term(const Key& k, const Rational& a) {
    if (a == 0) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, a);
    } else {
        it->second += a;
        if (it->second == 0) terms_.erase(it);
    }
}

TriPoly TriPoly::term(int i, int j, int k, const Rational& a) {
    TriPoly p;
    p.add_term({i, j, k}, a);
    return p;
}

int TriPoly::total_degree() const {
    int d = -1;
    for (const auto& [k, v] : terms_) d = std::max(d, k[0] + k[1] + k[2]);
    return d;
}

bool TriPoly::is_homogeneous(int deg) const {
    for (const auto& [k, v] : terms_)
        if (k[0] + k[1] + k[2] != deg) return false;
    return true;
}

Rational TriPoly::coeff(int i, int j, int k) const {
    auto it = terms_.find({i, j, k});
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational TriPoly::eval(const Rational& X, const Rational& Y, const Rational& Z) const {
    Rational acc(0);
    for (const auto& [k, v] : terms_) {
        Rational t = v;
        for (int i = 0; i < k[0]; ++i) t *= X;
        for (int i = 0; i < k[1]; ++i) t *= Y;
        for (int i = 0; i < k[2]; ++i) t *= Z;
        acc += t;
    }
    return acc;
}

TriPoly TriPoly::partial(int var) const {
    TriPoly out;
    for (const auto& [k, v] : terms_) {
        if (k[var] == 0) continue;
        Key nk = k;
        nk[var] -= 1;
        out.add_term(nk, v * Rational(k[var]));
    }
    return out;
}

TriPoly TriPoly::subst(const TriPoly& sx, const TriPoly& sy, const TriPoly& sz) const {
    TriPoly out;
    for (const auto& [k, v] : terms_) {
        TriPoly t = TriPoly::term(0, 0, 0, v);
        for (int i = 0; i < k[0]; ++i) t = t * sx;
        for (int i = 0; i < k[1]; ++i) t = t * sy;
        for (int i = 0; i < k[2]; ++i) t = t * sz;
        out = out + t;
    }
    return out;
}

static BiPoly dehom(const std::map<TriPoly::Key, Rational>& terms, int a, int b) {
    BiPoly out;
    for (const auto& [k, v] : terms) out = out + BiPoly::term(k[a], k[b], v);
    return out;
}

BiPoly TriPoly::dehom_z() const { return dehom(terms_, 0, 1); }
BiPoly TriPoly::dehom_y() const { return dehom(terms_, 0, 2); }
BiPoly TriPoly::dehom_x() const { return dehom(terms_, 1, 2); }

TriPoly operator+(const TriPoly& a, const TriPoly& b) {
    TriPoly out = a;
    for (const auto& [k, v] : b.terms_) out.add_term(k, v);
    return out;
}

TriPoly operator-(const TriPoly& a, const TriPoly& b) { return a + b * Rational(-1); }

TriPoly operator*(const TriPoly& a, const TriPoly& b) {
    TriPoly out;
    for (const auto& [ka, va] : a.terms_)
        for (const auto& [kb, vb] : b.terms_)
            out.add_term({ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]}, va * vb);
    return out;
}

TriPoly TriPoly::operator*(const Rational& s) const {
    TriPoly out;
    if (s == 0) return out;
    for (const auto& [k, v] : terms_) out.terms_.emplace(k, v * s);
    return out;
}

std::optional<TriPoly> TriPoly::divide_exact(const TriPoly& num, const TriPoly& den) {
    if (den.is_zero()) return std::nullopt;
    TriPoly rem = num, quot;
    auto lead = [](const TriPoly& p) { return std::prev(p.terms_.end()); };
    auto dl = lead(den);
    while (!rem.is_zero()) {
        auto rl = lead(rem);
        Key e;
        for (int i = 0; i < 3; ++i) {
            e[i] = rl->first[i] - dl->first[i];
            if (e[i] < 0) return std::nullopt;
        }
        Rational c = rl->second / dl->second;
        TriPoly t = TriPoly::term(e[0], e[1], e[2], c);
        quot = quot + t;
        rem = rem - t * den;
    }
    return quot;
}

TriPoly TriPoly::primitive() const {
    if (is_zero()) return *this;
    Integer den(1);
    for (const auto& [k, v] : terms_) den = lcm(den, v.get_den());
    Integer content(0);
    for (const auto& [k, v] : terms_) {
        Integer scaled = v.get_num() * (den / v.get_den());
        content = ::gcd(content, scaled);
    }
    if (content == 0) content = 1;
    Rational scale(den, content);
    scale.canonicalize();
    TriPoly out = *this * scale;
    if (sign(std::prev(out.terms_.end())->second) < 0) out = out * Rational(-1);
    return out;
}

bool TriPoly::proportional(const TriPoly& a, const TriPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.primitive() == b.primitive();
}

std::string TriPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [k, v] = *it;
        if (!first) os << (sign(v) > 0 ? " + " : " - ");
        else if (sign(v) < 0) os << "-";
        Rational mag = abs(Rational(v));
        bool has_var = k[0] + k[1] + k[2] > 0;
        if (mag != 1 || !has_var) os << to_string(mag);
        const char* names[3] = {"X", "Y", "Z"};
        for (int vi = 0; vi < 3; ++vi)
            for (int p = 0; p < k[vi]; ++p) os << names[vi];
        first = false;
    }
    return os.str();
}

}  // namespace vis
