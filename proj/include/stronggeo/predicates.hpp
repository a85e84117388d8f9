#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "stronggeo/errors.hpp"
#include "stronggeo/rational.hpp"
#include "stronggeo/vec.hpp"

namespace stronggeo {

namespace detail {

// Fraction-free Gaussian elimination (Bareiss). Destroys m, returns det.
// Every division is exact by construction, so only integers appear.
inline Integer bareiss_det(std::vector<std::vector<Integer>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && m[pivot][k] == 0) ++pivot;
            if (pivot == n) return 0;
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : Integer(-m[n - 1][n - 1]);
}

}  // namespace detail

// Exact determinant of a square matrix given by rows. Denominators are
// cleared row by row (positive factors, recorded), then Bareiss runs over
// integers; bit growth stays polynomial.
inline Rational det_exact(std::span<const Vec> rows) {
    const std::size_t n = rows.size();
    for (const Vec& r : rows)
        if (r.size() != n) throw DimensionMismatch("determinant needs a square matrix");
    if (n == 0) return 1;
    std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
    Integer scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < n; ++j) l = lcm(l, denominator(rows[i][j]));
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = numerator(rows[i][j]) * (l / denominator(rows[i][j]));
        scale *= l;
    }
    return Rational(detail::bareiss_det(m), scale);
}

inline Rational det_exact(const std::vector<Vec>& rows) {
    return det_exact(std::span<const Vec>(rows));
}

inline Sign det_sign(std::span<const Vec> rows) { return sign_of(det_exact(rows)); }

inline Sign det_sign(const std::vector<Vec>& rows) {
    return det_sign(std::span<const Vec>(rows));
}

// Generalized cross product of d vectors in R^{d+1}: the unique N with
// <N, v> = det(x_1, ..., x_d, v) for all v. Hence N is orthogonal to every
// x_i and det(x_1, ..., x_d, N) = |N|^2 > 0 when the tuple is independent;
// dependent tuples give the zero vector. N is a cofactor vector, not
// normalized: every downstream consumer only needs signs.
inline Vec hyperplane_vector(std::span<const Vec> xs) {
    const std::size_t d = xs.size();
    const std::size_t ambient = d + 1;
    for (const Vec& x : xs)
        if (x.size() != ambient)
            throw DimensionMismatch("hyperplane_vector needs d vectors in R^{d+1}");
    Vec n(ambient);
    std::vector<Vec> minor(d, Vec(d));
    for (std::size_t col = 0; col < ambient; ++col) {
        for (std::size_t i = 0; i < d; ++i) {
            std::size_t out = 0;
            for (std::size_t j = 0; j < ambient; ++j) {
                if (j == col) continue;
                minor[i][out++] = xs[i][j];
            }
        }
        Rational m = det_exact(minor);
        n[col] = ((d + col) % 2 == 0) ? m : -m;
    }
    return n;
}

inline Vec hyperplane_vector(const std::vector<Vec>& xs) {
    return hyperplane_vector(std::span<const Vec>(xs));
}

// Orthogonal projection onto omega^perp together with an ordered basis
// (b_1, ..., b_{d-1}) chosen so that det(omega, b_1, ..., b_{d-1}) > 0.
// coords() expresses a projected vector in that basis; signs of determinants
// of such coordinate vectors equal the signs taken in any positively
// oriented orthonormal basis of omega^perp, which is all downstream users
// need.
class OrientedProjection {
  public:
    explicit OrientedProjection(Vec omega) : omega_(std::move(omega)) {
        if (omega_.is_zero()) throw ZeroWitness("projection witness must be nonzero");
        const std::size_t d = omega_.size();
        omega_norm2_ = dot(omega_, omega_);

        // Drop the coordinate with the largest |omega_i| and project the
        // remaining standard basis vectors.
        std::size_t drop = 0;
        Rational best = 0;
        for (std::size_t i = 0; i < d; ++i) {
            Rational a = omega_[i] < 0 ? Rational(-omega_[i]) : omega_[i];
            if (a > best) {
                best = a;
                drop = i;
            }
        }
        for (std::size_t i = 0; i < d; ++i) {
            if (i == drop) continue;
            Vec e(d);
            e[i] = 1;
            basis_.push_back(project(e));
        }
        std::vector<Vec> frame;
        frame.push_back(omega_);
        for (const Vec& b : basis_) frame.push_back(b);
        Sign s = det_sign(frame);
        if (s == Sign::zero) throw Error("internal: projection basis degenerate");
        if (s == Sign::negative) {
            if (basis_.size() >= 2)
                std::swap(basis_[0], basis_[1]);
            else
                basis_[0] = -basis_[0];
        }
    }

    const Vec& omega() const { return omega_; }
    const std::vector<Vec>& basis() const { return basis_; }

    Vec project(const Vec& x) const {
        require_same_dim(x, omega_);
        Rational t = dot(x, omega_) / omega_norm2_;
        Vec r(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - t * omega_[i];
        return r;
    }

    // Coordinates of project(x) in the oriented basis, as a vector in
    // R^{d-1}. Solved exactly; the system is consistent by construction.
    Vec coords(const Vec& x) const {
        Vec p = project(x);
        const std::size_t d = omega_.size();
        const std::size_t m = basis_.size();
        // Augmented system [B | p] over the rationals, columns are basis
        // vectors.
        std::vector<std::vector<Rational>> a(d, std::vector<Rational>(m + 1));
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < m; ++j) a[i][j] = basis_[j][i];
            a[i][m] = p[i];
        }
        std::vector<std::size_t> pivot_row(m);
        std::size_t row = 0;
        for (std::size_t col = 0; col < m; ++col) {
            std::size_t pr = row;
            while (pr < d && a[pr][col] == 0) ++pr;
            if (pr == d) throw Error("internal: projection basis not independent");
            std::swap(a[row], a[pr]);
            for (std::size_t i = 0; i < d; ++i) {
                if (i == row || a[i][col] == 0) continue;
                Rational f = a[i][col] / a[row][col];
                for (std::size_t j = col; j <= m; ++j) a[i][j] -= f * a[row][j];
            }
            pivot_row[col] = row;
            ++row;
        }
        Vec c(m);
        for (std::size_t col = 0; col < m; ++col)
            c[col] = a[pivot_row[col]][m] / a[pivot_row[col]][col];
        return c;
    }

  private:
    Vec omega_;
    Rational omega_norm2_;
    std::vector<Vec> basis_;
};

inline OrientedProjection oriented_projection_basis(const Vec& omega) {
    return OrientedProjection(omega);
}

}  // namespace stronggeo
