#include "vis/bipoly.hpp"

#include <algorithm>
#include <sstream>

namespace vis {

void BiPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

BiPoly BiPoly::term(int dx, int dy, const Rational& a) {
    if (a == 0) return BiPoly();
    std::vector<UniPoly> c(dy + 1);
    c[dy] = UniPoly::monomial(dx, a);
    return BiPoly(std::move(c));
}

int BiPoly::degree_x() const {
    int d = -1;
    for (const auto& p : c_) d = std::max(d, p.degree());
    return d;
}

int BiPoly::total_degree() const {
    int d = -1;
    for (int j = 0; j < static_cast<int>(c_.size()); ++j)
        if (!c_[j].is_zero()) d = std::max(d, j + c_[j].degree());
    return d;
}

Rational BiPoly::eval(const Rational& x, const Rational& y) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * y + it->eval(x);
    return acc;
}

UniPoly BiPoly::eval_x(const Rational& x) const {
    std::vector<Rational> c(c_.size());
    for (size_t j = 0; j < c_.size(); ++j) c[j] = c_[j].eval(x);
    return UniPoly(std::move(c));
}

UniPoly BiPoly::eval_y(const Rational& y) const {
    UniPoly acc;
    Rational yp(1);
    for (size_t j = 0; j < c_.size(); ++j) {
        acc = acc + c_[j] * yp;
        yp *= y;
    }
    return acc;
}

BiPoly BiPoly::dx() const {
    std::vector<UniPoly> c(c_.size());
    for (size_t j = 0; j < c_.size(); ++j) c[j] = c_[j].derivative();
    return BiPoly(std::move(c));
}

BiPoly BiPoly::dy() const {
    if (c_.size() <= 1) return BiPoly();
    std::vector<UniPoly> c(c_.size() - 1);
    for (size_t j = 1; j < c_.size(); ++j)
        c[j - 1] = c_[j] * Rational(static_cast<long>(j));
    return BiPoly(std::move(c));
}

BiPoly BiPoly::swap_xy() const {
    int dx_max = degree_x();
    std::vector<UniPoly> out;
    if (dx_max < 0) return BiPoly();
    out.resize(dx_max + 1);
    for (int i = 0; i <= dx_max; ++i) {
        std::vector<Rational> row(c_.size(), Rational(0));
        for (size_t j = 0; j < c_.size(); ++j)
            if (c_[j].degree() >= i) row[j] = c_[j][i];
        out[i] = UniPoly(std::move(row));
    }
    return BiPoly(std::move(out));
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    std::vector<UniPoly> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t j = 0; j < c.size(); ++j) {
        if (j < a.c_.size()) c[j] = c[j] + a.c_[j];
        if (j < b.c_.size()) c[j] = c[j] + b.c_[j];
    }
    return BiPoly(std::move(c));
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + b * Rational(-1); }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() || b.is_zero()) return BiPoly();
    std::vector<UniPoly> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    return BiPoly(std::move(c));
}

BiPoly BiPoly::operator*(const Rational& s) const {
    std::vector<UniPoly> c(c_.size());
    for (size_t j = 0; j < c_.size(); ++j) c[j] = c_[j] * s;
    return BiPoly(std::move(c));
}

std::string BiPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int j = degree_y(); j >= 0; --j) {
        if (c_[j].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << c_[j].str() << ")";
        if (j >= 1) {
            os << "*y";
            if (j > 1) os << "^" << j;
        }
        first = false;
    }
    return os.str();
}

UniPoly resultant_y(const BiPoly& f, const BiPoly& g) {
    int m = f.degree_y(), n = g.degree_y();
    if (m <= 0 && n <= 0) throw BothConstantInY();
    if (f.is_zero() || g.is_zero()) return UniPoly();
    // Res(f, g) with deg_y g = 0: g(x)^deg_y(f).
    if (n <= 0) {
        UniPoly r = UniPoly::constant(Rational(1));
        for (int i = 0; i < m; ++i) r = r * g.coeff_y(0);
        return r;
    }
    if (m <= 0) {
        UniPoly r = UniPoly::constant(Rational(1));
        for (int i = 0; i < n; ++i) r = r * f.coeff_y(0);
        return r;
    }
    int size = m + n;
    std::vector<std::vector<UniPoly>> a(size, std::vector<UniPoly>(size));
    for (int r = 0; r < n; ++r)  // n rows of f coefficients
        for (int j = 0; j <= m; ++j) a[r][r + j] = f.coeff_y(m - j);
    for (int r = 0; r < m; ++r)  // m rows of g coefficients
        for (int j = 0; j <= n; ++j) a[n + r][r + j] = g.coeff_y(n - j);

    // Bareiss fraction-free elimination; every division below is exact.
    int sign_flips = 0;
    UniPoly prev = UniPoly::constant(Rational(1));
    for (int k = 0; k < size - 1; ++k) {
        if (a[k][k].is_zero()) {
            int p = -1;
            for (int i = k + 1; i < size; ++i)
                if (!a[i][k].is_zero()) {
                    p = i;
                    break;
                }
            if (p < 0) return UniPoly();  // singular: resultant is 0
            std::swap(a[k], a[p]);
            ++sign_flips;
        }
        for (int i = k + 1; i < size; ++i) {
            for (int j = k + 1; j < size; ++j)
                a[i][j] = UniPoly::div_exact(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
            a[i][k] = UniPoly();
        }
        prev = a[k][k];
    }
    UniPoly det = a[size - 1][size - 1];
    if (sign_flips % 2 == 1) det = det.negate();
    return det;
}

}  // namespace vis
