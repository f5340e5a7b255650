#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace igcurve {

// Parameters of IG(k, 2n+1) inside IG(k, 2n+2). Letters 1..2n+2, with
// bar(i) = 2n+3-i, so the type C order is plain integer order.
struct SpaceParams {
    int k = 1;
    int n = 1;

    constexpr int rank() const { return n + 1; }
    constexpr int letters() const { return 2 * n + 2; }
    constexpr int bar(int v) const { return 2 * n + 3 - v; }
    constexpr bool is_barred(int v) const { return v > n + 1; }
    constexpr int abs_value(int v) const { return is_barred(v) ? bar(v) : v; }
    constexpr bool lagrangian() const { return k == n + 1; }

    // dim IG(k, 2n+1) and dim IG(k, 2n+2)
    constexpr int dim_odd() const { return k * (2 * n + 1 - k) - k * (k - 1) / 2; }
    constexpr int dim_even() const { return k * (2 * n + 2 - k) - k * (k - 1) / 2; }

    void validate() const {
        if (n < 1) throw std::invalid_argument("n must be at least 1");
        if (k < 1 || k > n + 1) throw std::invalid_argument("k must satisfy 1 <= k <= n+1");
    }

    friend constexpr bool operator==(const SpaceParams&, const SpaceParams&) = default;
    friend constexpr auto operator<=>(const SpaceParams&, const SpaceParams&) = default;
};

inline std::string space_name(const SpaceParams& s) {
    return "IG(" + std::to_string(s.k) + "," + std::to_string(2 * s.n + 1) + ")";
}

using Word = std::vector<int>;

// Element of the hyperoctahedral group of rank r, stored by its window
// w(1), ..., w(r) over the letters 1..2r.
class SignedPermutation {
public:
    SignedPermutation() = default;

    explicit SignedPermutation(std::vector<int> window) : w_(std::move(window)) {
        const int r = rank();
        if (r < 1) throw std::invalid_argument("signed permutation needs rank >= 1");
        std::vector<bool> seen(r + 1, false);
        for (int v : w_) {
            if (v < 1 || v > 2 * r) throw std::invalid_argument("window value out of range");
            const int a = v > r ? 2 * r + 1 - v : v;
            if (seen[a]) throw std::invalid_argument("window repeats a value or contains v and bar(v)");
            seen[a] = true;
        }
    }

    static SignedPermutation identity(int rank) {
        std::vector<int> w(rank);
        for (int i = 0; i < rank; ++i) w[i] = i + 1;
        return SignedPermutation(std::move(w));
    }

    int rank() const { return static_cast<int>(w_.size()); }
    int bar(int v) const { return 2 * rank() + 1 - v; }

    // w(i) for any letter i in 1..2r.
    int operator()(int i) const { return i <= rank() ? w_[i - 1] : bar(w_[bar(i) - 1]); }

    std::span<const int> window() const { return w_; }
    const std::vector<int>& values() const { return w_; }

    bool is_identity() const {
        for (int i = 0; i < rank(); ++i)
            if (w_[i] != i + 1) return false;
        return true;
    }

    // Right multiplication by s_i: acts on positions.
    SignedPermutation times_simple(int i) const {
        check_index(i);
        SignedPermutation out = *this;
        if (i < rank())
            std::swap(out.w_[i - 1], out.w_[i]);
        else
            out.w_[i - 1] = bar(out.w_[i - 1]);
        return out;
    }

    // Right descent at i, equivalently l(w s_i) < l(w).
    bool has_descent(int i) const {
        check_index(i);
        if (i < rank()) return w_[i - 1] > w_[i];
        return w_[i - 1] > rank();
    }

    friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
    friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

private:
    void check_index(int i) const {
        if (i < 1 || i > rank()) throw std::invalid_argument("simple reflection index out of range");
    }

    std::vector<int> w_;
};

// (a * b)(i) = a(b(i))
inline SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch");
    std::vector<int> w(a.rank());
    for (int i = 1; i <= a.rank(); ++i) w[i - 1] = a(b(i));
    return SignedPermutation(std::move(w));
}

inline SignedPermutation inverse(const SignedPermutation& a) {
    std::vector<int> w(a.rank());
    for (int i = 1; i <= 2 * a.rank(); ++i)
        if (a(i) <= a.rank()) w[a(i) - 1] = i;
    return SignedPermutation(std::move(w));
}

inline SignedPermutation simple_reflection(const SpaceParams& space, int i) {
    if (i < 1 || i > space.rank()) throw std::invalid_argument("simple reflection index out of range");
    return SignedPermutation::identity(space.rank()).times_simple(i);
}

inline int length(const SignedPermutation& w) {
    const int r = w.rank();
    const auto win = w.window();
    int inv = 0;
    for (int i = 0; i < r; ++i)
        for (int j = i; j < r; ++j) {
            if (j > i && win[i] > win[j]) ++inv;
            if (win[i] + win[j] > 2 * r + 1) ++inv;
        }
    return inv;
}

// Greedy descent; applying the returned word to the identity gives w.
inline Word reduced_word(SignedPermutation w) {
    Word peeled;
    while (!w.is_identity()) {
        for (int i = 1; i <= w.rank(); ++i)
            if (w.has_descent(i)) {
                w = w.times_simple(i);
                peeled.push_back(i);
                break;
            }
    }
    std::reverse(peeled.begin(), peeled.end());
    return peeled;
}

inline SignedPermutation apply_word(SignedPermutation w, const Word& word) {
    for (int i : word) w = w.times_simple(i);
    return w;
}

inline SignedPermutation hecke_mul(SignedPermutation w, const Word& word) {
    for (int i : word)
        if (!w.has_descent(i)) w = w.times_simple(i);
    return w;
}

inline SignedPermutation hecke_mul(const SignedPermutation& w, const SignedPermutation& u) {
    return hecke_mul(w, reduced_word(u));
}

// ---------------------------------------------------------------------------
// Positive roots.

enum class RootKind { TiMinusTj, TiPlusTj, TwoTi };
enum class RootClass { Parabolic, DegreeOne, DegreeTwo };

struct PositiveRoot {
    RootKind kind = RootKind::TwoTi;
    int i = 1;
    int j = 0;  // unused for TwoTi

    friend bool operator==(const PositiveRoot&, const PositiveRoot&) = default;
    friend auto operator<=>(const PositiveRoot&, const PositiveRoot&) = default;
};

inline std::string to_string(const PositiveRoot& a) {
    const std::string ti = "t" + std::to_string(a.i);
    switch (a.kind) {
        case RootKind::TiMinusTj: return ti + "-t" + std::to_string(a.j);
        case RootKind::TiPlusTj: return ti + "+t" + std::to_string(a.j);
        case RootKind::TwoTi: return "2" + ti;
    }
    return {};
}

inline RootClass classify_root(const PositiveRoot& a, int k) {
    switch (a.kind) {
        case RootKind::TwoTi: return a.i <= k ? RootClass::DegreeOne : RootClass::Parabolic;
        case RootKind::TiMinusTj: return (a.i <= k && k < a.j) ? RootClass::DegreeOne : RootClass::Parabolic;
        case RootKind::TiPlusTj:
            if (a.j <= k) return RootClass::DegreeTwo;
            if (a.i <= k) return RootClass::DegreeOne;
            return RootClass::Parabolic;
    }
    return RootClass::Parabolic;
}

inline std::vector<PositiveRoot> positive_roots(int rank) {
    std::vector<PositiveRoot> out;
    for (int i = 1; i <= rank; ++i) {
        for (int j = i + 1; j <= rank; ++j) {
            out.push_back({RootKind::TiMinusTj, i, j});
            out.push_back({RootKind::TiPlusTj, i, j});
        }
        out.push_back({RootKind::TwoTi, i, 0});
    }
    return out;
}

inline std::vector<PositiveRoot> roots_outside_parabolic(const SpaceParams& space) {
    std::vector<PositiveRoot> out;
    for (const auto& a : positive_roots(space.rank()))
        if (classify_root(a, space.k) != RootClass::Parabolic) out.push_back(a);
    return out;
}

inline SignedPermutation reflection(const PositiveRoot& a, int rank) {
    std::vector<int> w(rank);
    for (int p = 0; p < rank; ++p) w[p] = p + 1;
    const int top = 2 * rank + 1;
    switch (a.kind) {
        case RootKind::TiMinusTj: std::swap(w[a.i - 1], w[a.j - 1]); break;
        case RootKind::TiPlusTj:
            w[a.i - 1] = top - a.j;
            w[a.j - 1] = top - a.i;
            break;
        case RootKind::TwoTi: w[a.i - 1] = top - a.i; break;
    }
    return SignedPermutation(std::move(w));
}

// ---------------------------------------------------------------------------
// Cosets of the maximal parabolic P_k.

struct CosetRep {
    SpaceParams space;
    std::vector<int> window;  // strictly increasing, isotropic, size k

    bool contains(int v) const { return std::binary_search(window.begin(), window.end(), v); }
    bool is_odd() const { return !contains(space.letters()); }
    bool in_closed_orbit() const { return !window.empty() && window.front() == 1; }
    bool in_open_orbit() const { return is_odd() && !contains(1); }

    void validate() const {
        space.validate();
        if (static_cast<int>(window.size()) != space.k) throw std::invalid_argument("window must have k entries");
        for (std::size_t i = 0; i < window.size(); ++i) {
            if (window[i] < 1 || window[i] > space.letters()) throw std::invalid_argument("window value out of range");
            if (i > 0 && window[i - 1] >= window[i]) throw std::invalid_argument("window must be strictly increasing");
            if (contains(space.bar(window[i]))) throw std::invalid_argument("window is not isotropic");
        }
    }

    friend bool operator==(const CosetRep&, const CosetRep&) = default;
    friend auto operator<=>(const CosetRep&, const CosetRep&) = default;
};

inline CosetRep make_coset(const SpaceParams& space, std::vector<int> window) {
    std::sort(window.begin(), window.end());
    CosetRep c{space, std::move(window)};
    c.validate();
    return c;
}

inline CosetRep identity_coset(const SpaceParams& space) {
    std::vector<int> w(space.k);
    for (int i = 0; i < space.k; ++i) w[i] = i + 1;
    return CosetRep{space, std::move(w)};
}

inline CosetRep coset_rep(const SignedPermutation& w, int k) {
    if (k < 1 || k > w.rank()) throw std::invalid_argument("k out of range");
    std::vector<int> win(w.values().begin(), w.values().begin() + k);
    std::sort(win.begin(), win.end());
    return CosetRep{SpaceParams{k, w.rank() - 1}, std::move(win)};
}

// Minimal-length representative: the window followed by the missing
// absolute values in increasing order.
inline SignedPermutation min_rep(const CosetRep& c) {
    const int r = c.space.rank();
    std::vector<bool> used(r + 1, false);
    for (int v : c.window) used[c.space.abs_value(v)] = true;
    std::vector<int> w = c.window;
    for (int a = 1; a <= r; ++a)
        if (!used[a]) w.push_back(a);
    return SignedPermutation(std::move(w));
}

inline int length(const CosetRep& c) { return length(min_rep(c)); }

// ---------------------------------------------------------------------------
// The elements O°(1), O_Y(1), O_Z(1) as words.

inline Word ocirc_word(const SpaceParams& s) {
    Word w;
    for (int i = 1; i <= s.rank(); ++i) w.push_back(i);
    for (int i = s.rank() - 1; i >= 1; --i) w.push_back(i);
    return w;
}

inline Word oy_word(const SpaceParams& s) {
    if (s.lagrangian()) throw std::invalid_argument("O_Y is undefined for k = n+1");
    Word w;
    for (int i = 1; i < s.k; ++i) w.push_back(i);
    for (int i = s.k + 1; i <= s.rank(); ++i) w.push_back(i);
    for (int i = s.rank() - 1; i >= 1; --i) w.push_back(i);
    return w;
}

inline Word oz_word(const SpaceParams& s) {
    Word w;
    for (int i = 2; i <= s.rank(); ++i) w.push_back(i);
    for (int i = s.rank() - 1; i >= 2; --i) w.push_back(i);
    return w;
}

// Always multiplies by s_k; otherwise Hecke.
inline SignedPermutation modified_hecke_mul(SignedPermutation w, const Word& word, int k) {
    if (k < 1 || k > w.rank()) throw std::invalid_argument("k out of range");
    for (int p = 0; p < k; ++p)
        if (w.values()[p] == 1) throw std::invalid_argument("modified Hecke product needs an open-orbit element");
    for (int i : word)
        if (i == k || !w.has_descent(i)) w = w.times_simple(i);
    return w;
}

enum class Step { OY, OZ, Ocirc };

inline const char* to_string(Step s) {
    switch (s) {
        case Step::OY: return "OY";
        case Step::OZ: return "OZ";
        case Step::Ocirc: return "Ocirc";
    }
    return "";
}

inline void check_step_orbit(const CosetRep& w, Step which) {
    if (!w.is_odd()) throw std::invalid_argument("window contains bar(1); not a class of the odd space");
    if (which == Step::Ocirc) {
        if (w.contains(1)) throw std::invalid_argument("Ocirc step needs a window avoiding 1");
    } else if (!w.in_closed_orbit()) {
        throw std::invalid_argument(std::string(to_string(which)) + " step needs w(1) = 1");
    }
    if (which != Step::OZ && w.space.lagrangian())
        throw std::invalid_argument(std::string(to_string(which)) + " step is undefined for k = n+1");
}

// Hecke-product definition of a single step.
inline CosetRep hecke_step(const CosetRep& w, Step which) {
    check_step_orbit(w, which);
    const auto& s = w.space;
    switch (which) {
        case Step::OY: return coset_rep(hecke_mul(min_rep(w), oy_word(s)), s.k);
        case Step::OZ: return coset_rep(hecke_mul(min_rep(w), oz_word(s)), s.k);
        case Step::Ocirc: return coset_rep(modified_hecke_mul(min_rep(w), ocirc_word(s), s.k), s.k);
    }
    return w;
}

// Explicit window form of a single step: drop one entry and insert bar(j),
// j the least of 2..n+1 absent from the kept entries' absolute values.
inline CosetRep one_step_neighbor(const CosetRep& w, Step which) {
    check_step_orbit(w, which);
    const auto& s = w.space;
    std::vector<int> kept = w.window;
    if (which == Step::OZ) {
        if (s.k == 1) return w;
        kept.erase(kept.begin() + 1);
    } else {
        kept.erase(kept.begin());
    }
    std::vector<bool> used(s.rank() + 1, false);
    const std::size_t skip = which == Step::OZ ? 1 : 0;
    for (std::size_t p = skip; p < kept.size(); ++p) used[s.abs_value(kept[p])] = true;
    int j = 2;
    while (used[j]) ++j;
    kept.push_back(s.bar(j));
    std::sort(kept.begin(), kept.end());
    return CosetRep{s, std::move(kept)};
}

inline CosetRep iterate_neighbor(CosetRep w, Step which, int d) {
    if (d < 0) throw std::invalid_argument("d must be nonnegative");
    if (d == 0) return w;
    w = one_step_neighbor(w, which);
    const Step rest = which == Step::OY ? Step::Ocirc : which;
    for (int i = 1; i < d; ++i) w = one_step_neighbor(w, rest);
    return w;
}

// ---------------------------------------------------------------------------
// Phi maps onto IG(k,2n) and IG(k-1,2n). In the integer encoding both just
// subtract 1 from every kept letter.

enum class Orbit { Y, Z };

inline const char* to_string(Orbit o) { return o == Orbit::Y ? "Y" : "Z"; }

inline CosetRep phi_map(const CosetRep& w, Orbit direction) {
    const auto& s = w.space;
    if (s.n < 2) throw std::invalid_argument("phi map needs n >= 2");
    if (!w.is_odd()) throw std::invalid_argument("phi map needs an odd-space class");
    std::vector<int> out;
    if (direction == Orbit::Y) {
        if (w.contains(1)) throw std::invalid_argument("phi_Y needs a window avoiding 1");
        if (s.lagrangian()) throw std::invalid_argument("phi_Y is undefined for k = n+1");
        for (int v : w.window) out.push_back(v - 1);
        return CosetRep{SpaceParams{s.k, s.n - 1}, std::move(out)};
    }
    if (!w.in_closed_orbit()) throw std::invalid_argument("phi_Z needs w(1) = 1");
    if (s.k < 2) throw std::invalid_argument("phi_Z needs k >= 2");
    for (std::size_t p = 1; p < w.window.size(); ++p) out.push_back(w.window[p] - 1);
    return CosetRep{SpaceParams{s.k - 1, s.n - 1}, std::move(out)};
}

inline Word psi_word(const SpaceParams& s, const Word& small) {
    Word out;
    for (int i : small) {
        if (i < s.k) {
            out.push_back(i);
        } else if (i == s.k) {
            out.insert(out.end(), {s.k, s.k + 1, s.k});
        } else {
            out.push_back(i + 1);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Signed rendering: bar(i) <-> -i.

inline int to_signed(const SpaceParams& s, int v) { return s.is_barred(v) ? -s.bar(v) : v; }

inline int from_signed(const SpaceParams& s, int x) {
    if (x == 0 || x > s.rank() || -x > s.rank()) throw std::invalid_argument("signed value out of range");
    return x > 0 ? x : s.bar(-x);
}

inline std::vector<int> signed_window(const CosetRep& c) {
    std::vector<int> out;
    for (int v : c.window) out.push_back(to_signed(c.space, v));
    return out;
}

inline std::string format_window(const CosetRep& c) {
    std::string s;
    for (int x : signed_window(c)) {
        if (!s.empty()) s += ",";
        s += std::to_string(x);
    }
    return s;
}

inline std::ostream& operator<<(std::ostream& out, const CosetRep& c) { return out << "(" << format_window(c) << ")"; }

inline CosetRep coset_from_signed(const SpaceParams& s, const std::vector<int>& xs) {
    s.validate();
    std::vector<int> w;
    for (int x : xs) w.push_back(from_signed(s, x));
    return make_coset(s, std::move(w));
}

}  // namespace igcurve
