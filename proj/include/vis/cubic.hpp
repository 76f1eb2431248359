#pragma once

#include <array>

#include "vis/system2.hpp"
#include "vis/tripoly.hpp"

namespace vis {

struct NotACubic : std::runtime_error {
    NotACubic() : std::runtime_error("expected a nonzero homogeneous form of degree 3") {}
};
struct NotIrreducible : std::runtime_error {
    explicit NotIrreducible(const std::string& w) : std::runtime_error(w) {}
};
struct NoGenericShear : std::runtime_error {
    NoGenericShear() : std::runtime_error("no shear in {0,1,2,3} moves [0:1:0] off the curve") {}
};

// Nonzero homogeneous cubic form in (X, Y, Z), stored with cleared
// denominators and primitive integer content.
class HomogeneousCubic {
  public:
    explicit HomogeneousCubic(const TriPoly& p);
    // Coefficients in the order X3, X2Y, X2Z, XY2, XYZ, XZ2, Y3, Y2Z, YZ2, Z3.
    static HomogeneousCubic from_coeffs(const std::array<Rational, 10>& c);
    static const std::array<TriPoly::Key, 10>& coeff_order();

    const TriPoly& form() const { return f_; }
    Rational coeff(int i, int j, int k) const { return f_.coeff(i, j, k); }
    // Affine section f(x, y) = F(x, y, 1).
    BiPoly affine() const { return f_.dehom_z(); }

    bool operator==(const HomogeneousCubic& o) const { return f_ == o.f_; }

  private:
    TriPoly f_;
};

// Determinant of the 3x3 second-derivative matrix of the stored primitive
// representative; degree 3 or the zero form. Under variable scaling
// (X,Y,Z) -> (aX,bY,cZ) the result scales by (abc)^2 after substitution.
TriPoly hessian(const HomogeneousCubic& F);

enum class CubicTag { Irreducible, LineConic, ThreeLines, Unclassified };

struct CubicClassification {
    CubicTag tag;
    std::vector<TriPoly> lines;  // 1 line for LineConic, 3 for ThreeLines
    TriPoly conic;               // LineConic only
    std::string reason;          // Unclassified only
};

// Exact factorization over the rationals; rational linear factors are found
// by rational root search on restrictions and verified by exact division.
// Cubics with no rational linear factor are Irreducible unless the real
// singular locus betrays a union of conjugate real lines (two or more real
// singular points, or a rational triple point), which is Unclassified.
CubicClassification classify(const HomogeneousCubic& F);

struct ShearResult {
    Rational lambda;          // substitution X -> X + lambda*Y
    HomogeneousCubic sheared;  // point map: (x, y) -> (x - lambda*y, y)
};

// Smallest lambda in {0,1,2,3} making the Y^3 coefficient nonzero, so the
// sheared curve avoids [0:1:0] and every affine vertical line meets it in
// at most 3 points counted by a degree-3 section.
ShearResult shear_to_generic(const HomogeneousCubic& F);

// A certified point of the real curve: affine with algebraic coordinates,
// or a point at infinity given by its direction [dir : 1 : 0] (or [1:0:0]).
struct AlgebraicPoint {
    AlgReal x, y;
    bool at_infinity = false;
    bool dir_horizontal = false;  // direction [1:0:0]
    AlgReal dir;                  // direction [dir:1:0] when not horizontal

    std::string str() const;
};

bool same_point(const AlgebraicPoint& a, const AlgebraicPoint& b);

enum class Chart { Standard, Sheared };

struct ExceptionalSet {
    std::vector<AlgebraicPoint> e_sing, e_inf, e_vt, e_fl;
    Chart chart = Chart::Standard;

    std::vector<AlgebraicPoint> all_affine() const;
    int total() const {
        return static_cast<int>(e_sing.size() + e_inf.size() + e_vt.size() + e_fl.size());
    }
};

// Real singular points of the projective curve (affine chart plus the line
// at infinity). At most 1 for an irreducible cubic.
std::vector<AlgebraicPoint> singular_points(const HomogeneousCubic& F);

// The four exceptional subsets of an irreducible cubic: singular points,
// points at infinity, vertical tangencies (F_Y = 0) and affine smooth real
// flexes (Hessian = 0). Hard cardinality assertions: |e_sing| <= 1,
// |e_inf| <= 3, |e_vt| <= 6, |e_fl| <= 3. Chart::Sheared requires a
// nonzero Y^3 coefficient.
ExceptionalSet exceptional_set(const HomogeneousCubic& F, Chart chart);

}  // namespace vis
