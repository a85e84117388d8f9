#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stronggeo/errors.hpp"
#include "stronggeo/point_config.hpp"
#include "stronggeo/predicates.hpp"
#include "stronggeo/rational.hpp"
#include "stronggeo/rng.hpp"

namespace stronggeo {

inline std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

// Lexicographic rank of a strictly increasing k-tuple over 0..n-1.
inline std::uint64_t rank_of_sorted(std::span<const int> t, int n) {
    const int k = static_cast<int>(t.size());
    std::uint64_t r = 0;
    int prev = -1;
    for (int i = 0; i < k; ++i) {
        for (int c = prev + 1; c < t[static_cast<std::size_t>(i)]; ++c)
            r += binom(static_cast<std::uint64_t>(n - 1 - c), static_cast<std::uint64_t>(k - 1 - i));
        prev = t[static_cast<std::size_t>(i)];
    }
    return r;
}

// Advances a strictly increasing k-tuple over 0..n-1 in lexicographic order.
// Returns false when the last tuple was already reached.
inline bool next_combination(std::vector<int>& t, int n) {
    const int k = static_cast<int>(t.size());
    for (int i = k - 1; i >= 0; --i) {
        if (t[static_cast<std::size_t>(i)] < n - k + i) {
            ++t[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                t[static_cast<std::size_t>(j)] = t[static_cast<std::size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

inline std::vector<int> first_combination(int k) {
    std::vector<int> t(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) t[static_cast<std::size_t>(i)] = i;
    return t;
}

// Sorts tuple in place, returns the permutation parity, or zero for repeats.
// Small tuples, insertion sort.
inline Sign sort_with_parity(std::vector<int>& t) {
    int swaps = 0;
    for (std::size_t i = 1; i < t.size(); ++i) {
        int v = t[i];
        std::size_t j = i;
        while (j > 0 && t[j - 1] > v) {
            t[j] = t[j - 1];
            --j;
            ++swaps;
        }
        t[j] = v;
    }
    for (std::size_t i = 1; i < t.size(); ++i)
        if (t[i] == t[i - 1]) return Sign::zero;
    return (swaps % 2 == 0) ? Sign::positive : Sign::negative;
}

// Alternating sign map on r-tuples of 0..n-1. Signs are stored only for
// strictly increasing tuples; every other order is derived by permutation
// parity at lookup, repeated labels give 0.
class Chirotope {
  public:
    Chirotope(int rank, int n, std::vector<signed char> signs)
        : rank_(rank), n_(n), signs_(std::move(signs)) {
        if (signs_.size() != binom(static_cast<std::uint64_t>(n_), static_cast<std::uint64_t>(rank_)))
            throw Error("internal: chirotope sign table has wrong size");
    }

    int rank() const { return rank_; }
    int ground_size() const { return n_; }

    Sign at_sorted(std::span<const int> t) const {
        return sign_from_int(signs_[rank_of_sorted(t, n_)]);
    }

    Sign lookup(std::span<const int> tuple) const {
        if (static_cast<int>(tuple.size()) != rank_)
            throw Error("chirotope lookup arity mismatch");
        std::vector<int> t(tuple.begin(), tuple.end());
        for (int x : t)
            if (x < 0 || x >= n_) throw UnknownLabel("label out of range: " + std::to_string(x));
        Sign parity = sort_with_parity(t);
        if (parity == Sign::zero) return Sign::zero;
        return parity * at_sorted(t);
    }

    Sign lookup(std::initializer_list<int> tuple) const {
        return lookup(std::span<const int>(tuple.begin(), tuple.size()));
    }

    const std::vector<signed char>& raw_signs() const { return signs_; }

  private:
    int rank_;
    int n_;
    std::vector<signed char> signs_;
};

inline Chirotope linear_chirotope(const PointConfig& x) {
    if (x.mode != ConfigMode::linear) throw Error("linear_chirotope needs a linear configuration");
    const int d = x.dim;
    const int n = x.size();
    if (n < d) throw TooFewPoints("need at least d vectors for a rank-d chirotope");
    std::vector<signed char> signs;
    signs.reserve(binom(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(d)));
    std::vector<int> t = first_combination(d);
    std::vector<Vec> rows(static_cast<std::size_t>(d));
    do {
        for (int i = 0; i < d; ++i) rows[static_cast<std::size_t>(i)] = x.points[static_cast<std::size_t>(t[static_cast<std::size_t>(i)])];
        signs.push_back(static_cast<signed char>(to_int(det_sign(rows))));
    } while (next_combination(t, n));
    return Chirotope(d, n, std::move(signs));
}

inline Chirotope affine_chirotope(const PointConfig& x) {
    if (x.mode != ConfigMode::affine) throw Error("affine_chirotope needs an affine configuration");
    return linear_chirotope(homogenize(x));
}

inline Chirotope chirotope_of(const PointConfig& x) {
    return x.mode == ConfigMode::affine ? affine_chirotope(x) : linear_chirotope(x);
}

// Rank-d chirotope on ground set labels \ {omega}, chi_w(t) = chi(omega, t).
// Element k of the dense chirotope is labels()[k] in the original config.
struct WitnessChirotope {
    Chirotope chi;
    std::vector<int> labels;  // dense index -> original label

    Sign lookup_original(std::span<const int> original) const {
        std::vector<int> t;
        t.reserve(original.size());
        for (int lab : original) {
            auto it = std::lower_bound(labels.begin(), labels.end(), lab);
            if (it == labels.end() || *it != lab) throw UnknownLabel("label not in witness ground set");
            t.push_back(static_cast<int>(it - labels.begin()));
        }
        return chi.lookup(t);
    }

    Sign lookup_original(std::initializer_list<int> original) const {
        return lookup_original(std::span<const int>(original.begin(), original.size()));
    }
};

inline WitnessChirotope witness_chirotope(const PointConfig& x, int omega) {
    if (x.mode != ConfigMode::affine) throw Error("witness_chirotope needs an affine configuration");
    if (omega < 0 || omega >= x.size()) throw UnknownLabel("witness label out of range");
    Chirotope aff = affine_chirotope(x);
    const int d = x.dim;
    const int m = x.size() - 1;
    if (m < d) throw TooFewPoints("not enough points besides the witness");
    std::vector<int> labels;
    labels.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < x.size(); ++i)
        if (i != omega) labels.push_back(i);
    std::vector<signed char> signs;
    signs.reserve(binom(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(d)));
    std::vector<int> t = first_combination(d);
    std::vector<int> full(static_cast<std::size_t>(d) + 1);
    do {
        full[0] = omega;
        for (int i = 0; i < d; ++i) full[static_cast<std::size_t>(i) + 1] = labels[static_cast<std::size_t>(t[static_cast<std::size_t>(i)])];
        signs.push_back(static_cast<signed char>(to_int(aff.lookup(full))));
    } while (next_combination(t, m));
    return WitnessChirotope{Chirotope(d, m, std::move(signs)), std::move(labels)};
}

// Minimal Radon partition. Stored with the smallest participating label in
// the positive part; zero-coefficient labels are excluded.
struct SignedCircuit {
    std::vector<int> positive;
    std::vector<int> negative;

    bool operator==(const SignedCircuit&) const = default;
};

inline SignedCircuit circuit_of(const Chirotope& chi, std::span<const int> support) {
    const int r = chi.rank();
    if (static_cast<int>(support.size()) != r + 1)
        throw Error("circuit support must have rank+1 labels");
    std::vector<int> s(support.begin(), support.end());
    std::sort(s.begin(), s.end());
    SignedCircuit c;
    std::vector<int> sub(static_cast<std::size_t>(r));
    for (int k = 0; k <= r; ++k) {
        std::size_t out = 0;
        for (int i = 0; i <= r; ++i)
            if (i != k) sub[out++] = s[static_cast<std::size_t>(i)];
        Sign cof = chi.at_sorted(sub);
        if (k % 2 != 0) cof = -cof;
        if (cof == Sign::positive)
            c.positive.push_back(s[static_cast<std::size_t>(k)]);
        else if (cof == Sign::negative)
            c.negative.push_back(s[static_cast<std::size_t>(k)]);
    }
    if (c.positive.empty() && c.negative.empty())
        throw DegenerateSupport("all circuit cofactors vanish on the given support");
    int min_pos = c.positive.empty() ? chi.ground_size() : c.positive.front();
    int min_neg = c.negative.empty() ? chi.ground_size() : c.negative.front();
    if (min_neg < min_pos) std::swap(c.positive, c.negative);
    return c;
}

inline SignedCircuit circuit_of(const PointConfig& x, std::span<const int> support) {
    return circuit_of(chirotope_of(x), support);
}

inline bool general_position(const Chirotope& chi) {
    for (signed char s : chi.raw_signs())
        if (s == 0) return false;
    return true;
}

struct AxiomReport {
    bool ch0 = false;
    bool ch3 = false;
    bool exhaustive = false;
    std::uint64_t instances = 0;
    std::string witness;  // set on a CH3 failure

    bool pass() const { return ch0 && ch3; }
};

namespace detail {

// One CH3 instance: pivot-ordered tuples i = (i1, rest...), j sorted.
inline bool ch3_instance(const Chirotope& chi, std::span<const int> i_tuple,
                         std::span<const int> j_tuple) {
    const int r = chi.rank();
    Sign lhs = chi.lookup(i_tuple) * chi.lookup(j_tuple);
    if (lhs != Sign::negative) return true;
    std::vector<int> a(static_cast<std::size_t>(r)), b(j_tuple.begin(), j_tuple.end());
    for (int k = 0; k < r; ++k) {
        a[0] = j_tuple[static_cast<std::size_t>(k)];
        for (int m = 1; m < r; ++m) a[static_cast<std::size_t>(m)] = i_tuple[static_cast<std::size_t>(m)];
        b[static_cast<std::size_t>(k)] = i_tuple[0];
        Sign term = chi.lookup(a) * chi.lookup(b);
        b[static_cast<std::size_t>(k)] = j_tuple[static_cast<std::size_t>(k)];
        if (term == Sign::negative) return true;  // hypothesis fails, instance vacuous
    }
    return false;
}

}  // namespace detail

// CH0 plus CH3 over pivot rotations of increasing tuples; CH1 holds by
// construction (only increasing tuples are stored). Exhaustive below the
// pair limit, seeded sampling above it. Axiom checking is a diagnostic, not
// a hot path.
inline AxiomReport check_axioms(const Chirotope& chi, std::uint64_t exhaustive_limit = 1000000,
                                std::uint64_t seed = 1) {
    AxiomReport rep;
    for (signed char s : chi.raw_signs()) {
        if (s != 0) {
            rep.ch0 = true;
            break;
        }
    }
    const int r = chi.rank();
    const int n = chi.ground_size();
    const std::uint64_t count = binom(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(r));
    rep.exhaustive = count * count <= exhaustive_limit;
    rep.ch3 = true;

    auto unrank = [&](std::uint64_t rank) {
        std::vector<int> t(static_cast<std::size_t>(r));
        int c = 0;
        for (int i = 0; i < r; ++i) {
            for (;;) {
                std::uint64_t block = binom(static_cast<std::uint64_t>(n - 1 - c), static_cast<std::uint64_t>(r - 1 - i));
                if (rank < block) break;
                rank -= block;
                ++c;
            }
            t[static_cast<std::size_t>(i)] = c++;
        }
        return t;
    };

    auto run_pair = [&](const std::vector<int>& iset, const std::vector<int>& jset) -> bool {
        std::vector<int> it(iset);
        for (int pivot = 0; pivot < r; ++pivot) {
            // rotate pivot to the front, rest stays sorted
            it.clear();
            it.push_back(iset[static_cast<std::size_t>(pivot)]);
            for (int m = 0; m < r; ++m)
                if (m != pivot) it.push_back(iset[static_cast<std::size_t>(m)]);
            ++rep.instances;
            if (!detail::ch3_instance(chi, it, jset)) {
                rep.ch3 = false;
                rep.witness = "i=(";
                for (std::size_t q = 0; q < it.size(); ++q) rep.witness += (q ? "," : "") + std::to_string(it[q]);
                rep.witness += ") j=(";
                for (std::size_t q = 0; q < jset.size(); ++q) rep.witness += (q ? "," : "") + std::to_string(jset[q]);
                rep.witness += ")";
                return false;
            }
        }
        return true;
    };

    if (rep.exhaustive) {
        std::vector<int> iset = first_combination(r);
        do {
            std::vector<int> jset = first_combination(r);
            do {
                if (!run_pair(iset, jset)) return rep;
            } while (next_combination(jset, n));
        } while (next_combination(iset, n));
    } else {
        SplitMix64 rng(seed);
        for (std::uint64_t s = 0; s < exhaustive_limit; ++s) {
            std::vector<int> iset = unrank(rng.below(count));
            std::vector<int> jset = unrank(rng.below(count));
            if (!run_pair(iset, jset)) return rep;
        }
    }
    return rep;
}

}  // namespace stronggeo
