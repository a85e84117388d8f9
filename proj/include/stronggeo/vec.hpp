#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "stronggeo/errors.hpp"
#include "stronggeo/rational.hpp"

namespace stronggeo {

// Dense rational vector. The dimension is fixed by the configuration that
// owns it; the zero vector is a legal value (degenerate hyperplane-vectors).
class Vec {
  public:
    Vec() = default;
    explicit Vec(std::size_t dim) : c_(dim) {}
    Vec(std::initializer_list<Rational> c) : c_(c) {}
    explicit Vec(std::vector<Rational> c) : c_(std::move(c)) {}

    std::size_t size() const { return c_.size(); }
    Rational& operator[](std::size_t i) { return c_[i]; }
    const Rational& operator[](std::size_t i) const { return c_[i]; }

    auto begin() const { return c_.begin(); }
    auto end() const { return c_.end(); }

    bool operator==(const Vec& o) const = default;

    bool is_zero() const {
        for (const auto& x : c_)
            if (x != 0) return false;
        return true;
    }

  private:
    std::vector<Rational> c_;
};

inline void require_same_dim(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector dimensions differ");
}

inline Rational dot(const Vec& a, const Vec& b) {
    require_same_dim(a, b);
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Vec operator-(const Vec& a, const Vec& b) {
    require_same_dim(a, b);
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec operator+(const Vec& a, const Vec& b) {
    require_same_dim(a, b);
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec operator*(const Rational& s, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

inline Vec operator-(const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

// Classic cross product in R^3.
inline Vec cross3(const Vec& a, const Vec& b) {
    if (a.size() != 3 || b.size() != 3) throw DimensionMismatch("cross3 needs 3-vectors");
    return Vec{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

}  // namespace stronggeo
