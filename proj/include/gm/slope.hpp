#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <tuple>

#include "gm/error.hpp"

namespace gm {

// 2x2 integer matrix acting on column vectors in (fiber, section) coordinates.
struct Mat2 {
    std::int64_t a = 1, b = 0; // row 0
    std::int64_t c = 0, d = 1; // row 1

    std::int64_t det() const { return a * d - b * c; }

    // Inverse of a determinant +-1 matrix is again integral.
    Mat2 inverse() const {
        std::int64_t det_val = det();
        if (det_val != 1 && det_val != -1)
            fail("gluing-not-unimodular", "matrix is not invertible over the integers");
        // adj / det == adj * det when det is +-1
        return Mat2{det_val * d, det_val * -b, det_val * -c, det_val * a};
    }

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return Mat2{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                    x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }

    friend bool operator==(const Mat2& x, const Mat2& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
};

// Isotopy class of an essential simple closed curve on a boundary torus:
// fiber_coeff * (fiber) + section_coeff * (section), stored primitive and
// sign-normalized so each class has one representative.
class Slope {
public:
    Slope() = default;

    Slope(std::int64_t fiber_coeff, std::int64_t section_coeff) {
        if (fiber_coeff == 0 && section_coeff == 0)
            fail("zero-slope", "(0,0) is not a slope");
        std::int64_t g = std::gcd(fiber_coeff < 0 ? -fiber_coeff : fiber_coeff,
                                  section_coeff < 0 ? -section_coeff : section_coeff);
        a_ = fiber_coeff / g;
        b_ = section_coeff / g;
        if (b_ < 0 || (b_ == 0 && a_ < 0)) { a_ = -a_; b_ = -b_; }
    }

    static Slope fiber() { return Slope(1, 0); }
    static Slope section() { return Slope(0, 1); }

    std::int64_t fiber_coeff() const { return a_; }
    std::int64_t section_coeff() const { return b_; }

    friend bool operator==(const Slope& s, const Slope& t) { return s.a_ == t.a_ && s.b_ == t.b_; }
    friend bool operator!=(const Slope& s, const Slope& t) { return !(s == t); }
    friend bool operator<(const Slope& s, const Slope& t) {
        return std::tie(s.a_, s.b_) < std::tie(t.a_, t.b_);
    }

    std::string str() const { return "(" + std::to_string(a_) + "," + std::to_string(b_) + ")"; }
    friend std::ostream& operator<<(std::ostream& os, const Slope& s) { return os << s.str(); }

private:
    std::int64_t a_ = 1;
    std::int64_t b_ = 0;
};

// Image of a slope under an identification of boundary tori.
inline Slope transport_slope(const Mat2& gl, const Slope& s) {
    return Slope(gl.a * s.fiber_coeff() + gl.b * s.section_coeff(),
                 gl.c * s.fiber_coeff() + gl.d * s.section_coeff());
}

// Geometric intersection number of two slopes on the torus.
inline std::int64_t intersection_number(const Slope& s, const Slope& t) {
    std::int64_t x = s.fiber_coeff() * t.section_coeff() - s.section_coeff() * t.fiber_coeff();
    return x < 0 ? -x : x;
}

} // namespace gm
