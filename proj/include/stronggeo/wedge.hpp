#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "stronggeo/chirotope.hpp"
#include "stronggeo/errors.hpp"
#include "stronggeo/point_config.hpp"
#include "stronggeo/predicates.hpp"
#include "stronggeo/rng.hpp"

namespace stronggeo {

// Ground elements of the wedge are strictly increasing (D-1)-tuples of base
// labels, ordered lexicographically; element k of the wedge ground set is
// the k-th tuple in that order.

// All hyperplane-vectors of a linear configuration in R^D. Dependent tuples
// keep their slot as zero vectors (loops), so ground sets stay aligned
// across configurations with equal n.
class WedgeFamily {
  public:
    explicit WedgeFamily(PointConfig homogenized) : config_(std::move(homogenized)) {
        if (config_.mode != ConfigMode::linear)
            throw Error("internal: wedge family needs a linear configuration");
        const int ambient = config_.dim;
        tuple_size_ = ambient - 1;
        const int n = config_.size();
        if (n < tuple_size_) throw TooFewPoints("too few points for a wedge family");
        std::vector<int> t = first_combination(tuple_size_);
        std::vector<Vec> rows(static_cast<std::size_t>(tuple_size_));
        do {
            for (int i = 0; i < tuple_size_; ++i)
                rows[static_cast<std::size_t>(i)] =
                    config_.points[static_cast<std::size_t>(t[static_cast<std::size_t>(i)])];
            alphas_.push_back(hyperplane_vector(rows));
        } while (next_combination(t, n));
    }

    const PointConfig& config() const { return config_; }
    int tuple_size() const { return tuple_size_; }
    int base_size() const { return config_.size(); }
    std::uint64_t size() const { return alphas_.size(); }

    const Vec& alpha(std::uint64_t element) const { return alphas_[element]; }

    const Vec& alpha_of(std::span<const int> sorted_tuple) const {
        return alphas_[rank_of_sorted(sorted_tuple, base_size())];
    }

    bool is_loop(std::uint64_t element) const { return alphas_[element].is_zero(); }

  private:
    PointConfig config_;
    int tuple_size_ = 0;
    std::vector<Vec> alphas_;
};

// chi_wedge(I_1, ..., I_D) = sign det(alpha(I_1), ..., alpha(I_D)). Storage
// of all signs is C(C(n,d), d+1) which explodes quickly, so signs are
// materialized lazily with memoization; small ground sets (<= eager_bound
// elements) are filled eagerly.
class WedgeChirotope {
  public:
    explicit WedgeChirotope(std::shared_ptr<const WedgeFamily> family,
                            std::uint64_t eager_bound = 20)
        : family_(std::move(family)) {
        rank_ = family_->tuple_size() + 1;
        eager_ = family_->size() <= eager_bound;
        if (eager_) {
            std::vector<int> t = first_combination(rank_);
            const int m = static_cast<int>(family_->size());
            dense_.reserve(binom(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(rank_)));
            do {
                dense_.push_back(static_cast<signed char>(to_int(compute(t))));
            } while (next_combination(t, m));
        }
    }

    int rank() const { return rank_; }
    std::uint64_t ground_size() const { return family_->size(); }
    const WedgeFamily& family() const { return *family_; }
    bool eager() const { return eager_; }

    Sign at_sorted(std::span<const int> elements) const {
        if (eager_) return sign_from_int(dense_[rank_of_sorted(elements, static_cast<int>(family_->size()))]);
        std::uint64_t key = 0;
        for (int e : elements) key = key * family_->size() + static_cast<std::uint64_t>(e);
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = cache_.find(key);
            if (it != cache_.end()) return sign_from_int(it->second);
        }
        Sign s = compute(std::vector<int>(elements.begin(), elements.end()));
        {
            std::lock_guard<std::mutex> lock(mu_);
            cache_.emplace(key, static_cast<signed char>(to_int(s)));
        }
        return s;
    }

    Sign lookup(std::span<const int> elements) const {
        if (static_cast<int>(elements.size()) != rank_) throw Error("wedge lookup arity mismatch");
        std::vector<int> t(elements.begin(), elements.end());
        for (int e : t)
            if (e < 0 || static_cast<std::uint64_t>(e) >= family_->size())
                throw MissingWedgeEntry("wedge element out of range");
        Sign parity = sort_with_parity(t);
        if (parity == Sign::zero) return Sign::zero;
        return parity * at_sorted(t);
    }

    Sign lookup(std::initializer_list<int> elements) const {
        return lookup(std::span<const int>(elements.begin(), elements.size()));
    }

  private:
    Sign compute(std::span<const int> sorted_elements) const {
        std::vector<Vec> rows;
        rows.reserve(sorted_elements.size());
        for (int e : sorted_elements) {
            if (family_->is_loop(static_cast<std::uint64_t>(e))) return Sign::zero;
            rows.push_back(family_->alpha(static_cast<std::uint64_t>(e)));
        }
        return det_sign(rows);
    }

    std::shared_ptr<const WedgeFamily> family_;
    int rank_ = 0;
    bool eager_ = false;
    std::vector<signed char> dense_;
    mutable std::mutex mu_;
    mutable std::unordered_map<std::uint64_t, signed char> cache_;
};

inline WedgeFamily wedge_family(const PointConfig& x) { return WedgeFamily(homogenize(x)); }

inline WedgeChirotope wedge_chirotope(const PointConfig& x, std::uint64_t eager_bound = 20) {
    return WedgeChirotope(std::make_shared<WedgeFamily>(homogenize(x)), eager_bound);
}

// The pair (base chirotope, wedge chirotope) of a configuration; affine
// configurations are homogenized first, so both components have rank d+1.
struct StrongGeometry {
    ConfigMode mode;
    PointConfig homogenized;
    Chirotope base;
    WedgeChirotope wedge;

    int n() const { return homogenized.size(); }
    int base_rank() const { return base.rank(); }
};

inline StrongGeometry strong_geometry(const PointConfig& x, std::uint64_t eager_bound = 20) {
    PointConfig h = homogenize(x);
    Chirotope base = linear_chirotope(h);
    auto family = std::make_shared<WedgeFamily>(h);
    return StrongGeometry{x.mode, std::move(h), std::move(base), WedgeChirotope(std::move(family), eager_bound)};
}

// ---------------------------------------------------------------------------
// Witnessed wedge: the rank-d wedge of the configuration translated by
// -omega. Ground elements are increasing pairs of the surviving labels.

struct WitnessedWedge {
    Chirotope chi;            // rank 3, over C(m,2) pair elements
    std::vector<int> labels;  // dense label -> original label

    int pair_element(int a, int b) const {
        // a, b are original labels, a != b
        auto pos = [&](int lab) {
            auto it = std::lower_bound(labels.begin(), labels.end(), lab);
            if (it == labels.end() || *it != lab) throw UnknownLabel("label not in witnessed ground set");
            return static_cast<int>(it - labels.begin());
        };
        int i = pos(a), j = pos(b);
        if (i > j) std::swap(i, j);
        std::array<int, 2> t{i, j};
        return static_cast<int>(rank_of_sorted(t, static_cast<int>(labels.size())));
    }

    // chi_{Lambda,w}((a1,b1),(a2,b2),(a3,b3)) with ordered pairs: swapping a
    // pair's endpoints negates its hyperplane-vector.
    Sign lookup_pairs(std::pair<int, int> p1, std::pair<int, int> p2, std::pair<int, int> p3) const {
        Sign flip = Sign::positive;
        auto element = [&](std::pair<int, int> p) {
            if (p.first > p.second) {
                flip = -flip;
                std::swap(p.first, p.second);
            }
            return pair_element(p.first, p.second);
        };
        int e1 = element(p1), e2 = element(p2), e3 = element(p3);
        return flip * chi.lookup({e1, e2, e3});
    }
};

// Translation route: vectors x_i - x_omega in R^3, alpha of a pair is the
// classic cross product, chi is the rank-3 determinant sign map.
inline WitnessedWedge witnessed_wedge_chirotope(const PointConfig& x, int omega) {
    if (x.mode != ConfigMode::affine || x.dim != 3)
        throw Error("witnessed wedge expects an affine configuration in R^3");
    if (omega < 0 || omega >= x.size()) throw UnknownLabel("witness label out of range");
    std::vector<int> labels;
    std::vector<Vec> translated;
    for (int i = 0; i < x.size(); ++i) {
        if (i == omega) continue;
        labels.push_back(i);
        translated.push_back(x.points[static_cast<std::size_t>(i)] - x.points[static_cast<std::size_t>(omega)]);
    }
    PointConfig lin = make_config(ConfigMode::linear, 3, std::move(translated));
    WedgeChirotope w = wedge_chirotope(lin, /*eager_bound=*/1u << 16);
    const int m = static_cast<int>(w.ground_size());
    std::vector<signed char> signs;
    signs.reserve(binom(static_cast<std::uint64_t>(m), 3));
    std::vector<int> t = first_combination(3);
    do {
        signs.push_back(static_cast<signed char>(to_int(w.at_sorted(t))));
    } while (next_combination(t, m));
    return WitnessedWedge{Chirotope(3, m, std::move(signs)), std::move(labels)};
}

// Orthogonal-projection route: homogenize, project onto in(omega)^perp with
// the orientation convention, take coordinates in the oriented basis, then
// the wedge of that linear R^3 configuration. Equal to the translation
// route: a positive isomorphism preserves the strong geometry.
inline WitnessedWedge witnessed_wedge_by_projection(const PointConfig& x, int omega) {
    if (x.mode != ConfigMode::affine || x.dim != 3)
        throw Error("witnessed wedge expects an affine configuration in R^3");
    if (omega < 0 || omega >= x.size()) throw UnknownLabel("witness label out of range");
    PointConfig h = homogenize(x);
    OrientedProjection proj(h.points[static_cast<std::size_t>(omega)]);
    std::vector<int> labels;
    std::vector<Vec> coords;
    for (int i = 0; i < h.size(); ++i) {
        if (i == omega) continue;
        labels.push_back(i);
        coords.push_back(proj.coords(h.points[static_cast<std::size_t>(i)]));
    }
    PointConfig lin = make_config(ConfigMode::linear, 3, std::move(coords));
    WedgeChirotope w = wedge_chirotope(lin, /*eager_bound=*/1u << 16);
    const int m = static_cast<int>(w.ground_size());
    std::vector<signed char> signs;
    signs.reserve(binom(static_cast<std::uint64_t>(m), 3));
    std::vector<int> t = first_combination(3);
    do {
        signs.push_back(static_cast<signed char>(to_int(w.at_sorted(t))));
    } while (next_combination(t, m));
    return WitnessedWedge{Chirotope(3, m, std::move(signs)), std::move(labels)};
}

// ---------------------------------------------------------------------------
// chi_wedge(I1, I2, I3, J) = chi_{Lambda,w}(a1,a2,a3) * chi(w, J) with
// I_k = (w, a_k) and w the witness label. Solving for the witnessed sign
// lets the knot pipeline read witnessed wedge data out of the big wedge
// chirotope without touching coordinates.

// Witnessed wedge sign of three ordered pairs (labels != witness), extracted
// from the strong geometry. witness must be label 0 (the knot convention).
inline Sign witnessed_wedge_sign_from_wedge(const StrongGeometry& sg, std::pair<int, int> p1,
                                            std::pair<int, int> p2, std::pair<int, int> p3) {
    const int n = sg.n();
    Sign flip = Sign::positive;
    auto element = [&](std::pair<int, int> p) {
        if (p.first == 0 || p.second == 0 || p.first == p.second)
            throw Error("witnessed pair must avoid the witness label");
        if (p.first > p.second) {
            flip = -flip;
            std::swap(p.first, p.second);
        }
        std::array<int, 3> t{0, p.first, p.second};
        return static_cast<int>(rank_of_sorted(t, n));
    };
    int e1 = element(p1), e2 = element(p2), e3 = element(p3);
    // any J with chi(0, J) != 0 works; take the first
    std::vector<int> j = first_combination(3);
    for (auto& v : j) ++v;  // labels >= 1
    for (;;) {
        std::array<int, 4> full{0, j[0], j[1], j[2]};
        Sign cj = sg.base.lookup(full);
        if (cj != Sign::zero) {
            int ej = static_cast<int>(rank_of_sorted(j, n));
            Sign w = sg.wedge.lookup({e1, e2, e3, ej});
            return flip * (w * cj);
        }
        // advance to the next triple of labels >= 1
        std::vector<int> shifted{j[0] - 1, j[1] - 1, j[2] - 1};
        if (!next_combination(shifted, n - 1))
            throw NonGenericShadow("no spanning triple away from the witness");
        for (int i = 0; i < 3; ++i) j[static_cast<std::size_t>(i)] = shifted[static_cast<std::size_t>(i)] + 1;
    }
}

// ---------------------------------------------------------------------------
// Identity verification. Reports carry the first few violations as text.

struct VerifyReport {
    std::uint64_t checks = 0;
    std::uint64_t violations = 0;
    std::vector<std::string> details;

    void violation(std::string d) {
        ++violations;
        if (details.size() < 8) details.push_back(std::move(d));
    }
    bool ok() const { return violations == 0; }
};

// Rank 3: chi_wedge((a,b),(a,c),(x,y)) = chi(a,b,c) * chi(a,x,y) for planar
// affine configurations, all label choices (repeats included: both sides
// vanish together).
inline VerifyReport verify_rank3_identity(const PointConfig& x, std::uint64_t sample_limit = 0,
                                          std::uint64_t seed = 1) {
    if (x.mode != ConfigMode::affine || x.dim != 2)
        throw Error("rank-3 identity expects an affine planar configuration");
    VerifyReport rep;
    PointConfig h = homogenize(x);
    Chirotope chi = linear_chirotope(h);
    const int n = x.size();
    auto alpha = [&](int i, int j) {
        return cross3(h.points[static_cast<std::size_t>(i)], h.points[static_cast<std::size_t>(j)]);
    };
    auto check = [&](int a, int b, int c, int p, int q) {
        ++rep.checks;
        std::vector<Vec> rows{alpha(a, b), alpha(a, c), alpha(p, q)};
        Sign lhs = det_sign(rows);
        Sign rhs = chi.lookup({a, b, c}) * chi.lookup({a, p, q});
        if (lhs != rhs)
            rep.violation("a=" + std::to_string(a) + " b=" + std::to_string(b) + " c=" +
                          std::to_string(c) + " x=" + std::to_string(p) + " y=" + std::to_string(q));
    };
    std::uint64_t total = 1;
    for (int i = 0; i < 5; ++i) total *= static_cast<std::uint64_t>(n);
    if (sample_limit == 0 || total <= sample_limit) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    for (int p = 0; p < n; ++p)
                        for (int q = 0; q < n; ++q) check(a, b, c, p, q);
    } else {
        SplitMix64 rng(seed);
        for (std::uint64_t s = 0; s < sample_limit; ++s) {
            int a = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            int b = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            int c = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            int p = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            int q = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            check(a, b, c, p, q);
        }
    }
    return rep;
}

// Dimension reduction: for omega != 0 and tuples x_{i,j} (i = 1..d-1,
// j = 1..d-2), y_1..y_{d-1} in R^d,
//   det(alpha(w,x_{1,.}), ..., alpha(w,x_{d-1,.}), alpha(y_1..y_{d-1}))
//     = dtilde(atilde(x_{1,.}), ..., atilde(x_{d-1,.}))
//       * det(w, y_1, ..., y_{d-1})
// where the tilde functions live in the oriented omega^perp. Moving omega
// across the remaining d-1 arguments twice costs (-1)^{d-1} each time, so
// the two transposition factors cancel for every d.
inline VerifyReport verify_linwit_theorem(int d, std::uint64_t trials, std::uint64_t seed = 1) {
    if (d < 3) throw Error("dimension-reduction identity needs d >= 3");
    VerifyReport rep;
    SplitMix64 rng(seed);
    const std::size_t dim = static_cast<std::size_t>(d);
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        Vec omega = rng.nonzero_vec(dim, 6, 3);
        std::vector<std::vector<Vec>> xs(static_cast<std::size_t>(d - 1));
        for (auto& row : xs) {
            row.resize(static_cast<std::size_t>(d - 2));
            for (auto& v : row) v = rng.vec(dim, 6, 3);
        }
        std::vector<Vec> ys(static_cast<std::size_t>(d - 1));
        for (auto& v : ys) v = rng.vec(dim, 6, 3);

        std::vector<Vec> lhs_rows;
        for (const auto& row : xs) {
            std::vector<Vec> args;
            args.push_back(omega);
            for (const Vec& v : row) args.push_back(v);
            lhs_rows.push_back(hyperplane_vector(args));
        }
        lhs_rows.push_back(hyperplane_vector(ys));
        Sign lhs = det_sign(lhs_rows);

        OrientedProjection proj(omega);
        std::vector<Vec> tilde_rows;
        for (const auto& row : xs) {
            std::vector<Vec> cs;
            for (const Vec& v : row) cs.push_back(proj.coords(v));
            tilde_rows.push_back(hyperplane_vector(cs));
        }
        Sign dtilde = det_sign(tilde_rows);
        std::vector<Vec> wy;
        wy.push_back(omega);
        for (const Vec& v : ys) wy.push_back(v);
        Sign rhs = det_sign(wy) * dtilde;

        ++rep.checks;
        if (lhs != rhs) rep.violation("trial " + std::to_string(trial));
    }
    return rep;
}

// Recovers the rank-4 base chirotope from wedge data alone:
// chi(x,a,b,c) = chi_wedge((x,a,b),(x,a,c),(x,b,c),(a,b,c)).
inline Chirotope recover_base_from_wedge(const StrongGeometry& sg) {
    if (sg.base_rank() != 4) throw Error("base recovery expects a rank-4 strong geometry");
    const int n = sg.n();
    if (n < 4) throw TooFewPoints("rank-4 recovery needs at least 4 points");
    std::vector<signed char> signs;
    signs.reserve(binom(static_cast<std::uint64_t>(n), 4));
    std::vector<int> t = first_combination(4);
    do {
        int x = t[0], a = t[1], b = t[2], c = t[3];
        std::array<int, 3> i1{x, a, b}, i2{x, a, c}, i3{x, b, c}, j{a, b, c};
        int e1 = static_cast<int>(rank_of_sorted(i1, n));
        int e2 = static_cast<int>(rank_of_sorted(i2, n));
        int e3 = static_cast<int>(rank_of_sorted(i3, n));
        int e4 = static_cast<int>(rank_of_sorted(j, n));
        signs.push_back(static_cast<signed char>(to_int(sg.wedge.lookup({e1, e2, e3, e4}))));
    } while (next_combination(t, n));
    return Chirotope(4, n, std::move(signs));
}

inline std::uint64_t count_recovery_mismatches(const StrongGeometry& sg) {
    Chirotope rec = recover_base_from_wedge(sg);
    std::uint64_t bad = 0;
    const auto& a = rec.raw_signs();
    const auto& b = sg.base.raw_signs();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) ++bad;
    return bad;
}

// ---------------------------------------------------------------------------
// Strong-geometry comparison under a base-label bijection. "Agree" means
// sign-for-sign equality of both components; the induced map on wedge
// elements picks up the parity of sorting each image tuple.

struct CompareVerdict {
    bool isomorphic = false;
    std::vector<int> bijection;  // label in A -> label in B
    std::string witness;         // first disagreement if any
};

namespace detail {

inline bool base_agrees(const Chirotope& a, const Chirotope& b, const std::vector<int>& pi,
                        std::string* witness) {
    const int r = a.rank();
    const int n = a.ground_size();
    std::vector<int> t = first_combination(r);
    std::vector<int> img(static_cast<std::size_t>(r));
    do {
        for (int i = 0; i < r; ++i) img[static_cast<std::size_t>(i)] = pi[static_cast<std::size_t>(t[static_cast<std::size_t>(i)])];
        if (b.lookup(img) != a.at_sorted(t)) {
            if (witness) {
                *witness = "base tuple (";
                for (int i = 0; i < r; ++i) *witness += (i ? "," : "") + std::to_string(t[static_cast<std::size_t>(i)]);
                *witness += ")";
            }
            return false;
        }
    } while (next_combination(t, n));
    return true;
}

inline bool wedge_agrees(const StrongGeometry& a, const StrongGeometry& b,
                         const std::vector<int>& pi, std::string* witness) {
    const int n = a.n();
    const int d = a.wedge.family().tuple_size();
    const int rank = a.wedge.rank();
    const std::uint64_t m = a.wedge.ground_size();
    // image of each wedge element, with the sorting parity of the mapped tuple
    std::vector<int> image(static_cast<std::size_t>(m));
    std::vector<signed char> twist(static_cast<std::size_t>(m));
    {
        std::vector<int> t = first_combination(d);
        std::uint64_t e = 0;
        std::vector<int> img(static_cast<std::size_t>(d));
        do {
            for (int i = 0; i < d; ++i) img[static_cast<std::size_t>(i)] = pi[static_cast<std::size_t>(t[static_cast<std::size_t>(i)])];
            std::vector<int> sorted = img;
            Sign parity = sort_with_parity(sorted);
            image[e] = static_cast<int>(rank_of_sorted(sorted, n));
            twist[e] = static_cast<signed char>(to_int(parity));
            ++e;
        } while (next_combination(t, n));
    }
    std::vector<int> t = first_combination(rank);
    std::vector<int> img(static_cast<std::size_t>(rank));
    do {
        Sign tw = Sign::positive;
        for (int i = 0; i < rank; ++i) {
            int e = t[static_cast<std::size_t>(i)];
            img[static_cast<std::size_t>(i)] = image[static_cast<std::size_t>(e)];
            tw = tw * sign_from_int(twist[static_cast<std::size_t>(e)]);
        }
        Sign lhs = a.wedge.at_sorted(t);
        Sign rhs = tw * b.wedge.lookup(img);
        if (lhs != rhs) {
            if (witness) {
                *witness = "wedge tuple (";
                for (int i = 0; i < rank; ++i) *witness += (i ? ";" : "") + std::to_string(t[static_cast<std::size_t>(i)]);
                *witness += ")";
            }
            return false;
        }
    } while (next_combination(t, static_cast<int>(m)));
    return true;
}

}  // namespace detail

inline CompareVerdict compare_strong_geometries(const StrongGeometry& a, const StrongGeometry& b,
                                                const std::optional<std::vector<int>>& bijection,
                                                int search_bound = 9) {
    if (a.n() != b.n() || a.base_rank() != b.base_rank())
        throw Error("strong geometries have different shape");
    const int n = a.n();
    CompareVerdict v;
    if (bijection) {
        if (static_cast<int>(bijection->size()) != n) throw Error("bijection has wrong size");
        v.bijection = *bijection;
        v.isomorphic = detail::base_agrees(a.base, b.base, v.bijection, &v.witness) &&
                       detail::wedge_agrees(a, b, v.bijection, &v.witness);
        return v;
    }
    if (n > search_bound)
        throw SearchTooLarge("refusing isomorphism search over more than " +
                             std::to_string(search_bound) + " labels");
    // backtracking over label images, pruned by base-chirotope agreement on
    // tuples fully inside the assigned prefix
    std::vector<int> pi(static_cast<std::size_t>(n), -1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    const int r = a.base.rank();
    std::vector<int> t(static_cast<std::size_t>(r));
    auto prefix_ok = [&](int assigned) {
        if (assigned < r) return true;
        // tuples whose max label is exactly assigned-1
        std::vector<int> rest = first_combination(r - 1);
        std::vector<int> img(static_cast<std::size_t>(r));
        do {
            for (int i = 0; i < r - 1; ++i) t[static_cast<std::size_t>(i)] = rest[static_cast<std::size_t>(i)];
            t[static_cast<std::size_t>(r) - 1] = assigned - 1;
            for (int i = 0; i < r; ++i) img[static_cast<std::size_t>(i)] = pi[static_cast<std::size_t>(t[static_cast<std::size_t>(i)])];
            if (b.base.lookup(img) != a.base.at_sorted(t)) return false;
        } while (next_combination(rest, assigned - 1));
        return true;
    };
    std::vector<int> best;
    auto rec = [&](auto&& self, int next) -> bool {
        if (next == n) {
            std::string w;
            if (detail::wedge_agrees(a, b, pi, &w)) {
                best = pi;
                return true;
            }
            return false;
        }
        for (int cand = 0; cand < n; ++cand) {
            if (used[static_cast<std::size_t>(cand)]) continue;
            pi[static_cast<std::size_t>(next)] = cand;
            used[static_cast<std::size_t>(cand)] = true;
            if (prefix_ok(next + 1) && self(self, next + 1)) return true;
            used[static_cast<std::size_t>(cand)] = false;
            pi[static_cast<std::size_t>(next)] = -1;
        }
        return false;
    };
    if (rec(rec, 0)) {
        v.isomorphic = true;
        v.bijection = best;
    } else {
        v.witness = "no base-label bijection matches both chirotopes";
    }
    return v;
}

// Parity behavior under negation and positive scaling: wedge chirotopes of X
// and -X coincide; base chirotopes pick up (-1)^d.
inline VerifyReport verify_parity_corollary(int d, std::uint64_t trials, std::uint64_t seed = 1) {
    if (d < 3) throw Error("parity check needs d >= 3");
    VerifyReport rep;
    SplitMix64 rng(seed);
    const int n = d + 2;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        std::vector<Vec> pts, neg, scaled;
        for (int i = 0; i < n; ++i) {
            Vec v = rng.vec(static_cast<std::size_t>(d), 6, 3);
            neg.push_back(-v);
            scaled.push_back(Rational(3, 2) * v);
            pts.push_back(std::move(v));
        }
        StrongGeometry sx = strong_geometry(make_config(ConfigMode::linear, d, pts));
        StrongGeometry sn = strong_geometry(make_config(ConfigMode::linear, d, neg));
        StrongGeometry ss = strong_geometry(make_config(ConfigMode::linear, d, scaled));

        ++rep.checks;
        bool ok = true;
        const auto& bx = sx.base.raw_signs();
        const auto& bn = sn.base.raw_signs();
        const auto& bs = ss.base.raw_signs();
        int factor = (d % 2 == 0) ? 1 : -1;
        for (std::size_t i = 0; i < bx.size() && ok; ++i) {
            if (bn[i] != factor * bx[i]) ok = false;
            if (bs[i] != bx[i]) ok = false;
        }
        // wedge equality, exhaustive (n is small here)
        const std::uint64_t m = sx.wedge.ground_size();
        std::vector<int> t = first_combination(sx.wedge.rank());
        do {
            if (sx.wedge.at_sorted(t) != sn.wedge.at_sorted(t)) ok = false;
            if (sx.wedge.at_sorted(t) != ss.wedge.at_sorted(t)) ok = false;
        } while (ok && next_combination(t, static_cast<int>(m)));
        if (!ok) rep.violation("trial " + std::to_string(trial));
    }
    return rep;
}

}  // namespace stronggeo
