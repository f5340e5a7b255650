#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "igcurve/weyl.hpp"

namespace igcurve {

// Even partitions index IG(k,2n+2); odd ones index IG(k,2n+1) and differ by
// the shift 1^k.
enum class Variant { Even, Odd };

struct BCPartition {
    std::vector<int> parts;  // weakly decreasing, trailing zeros trimmed
    Variant variant = Variant::Odd;

    int part(int j) const { return j >= 1 && j <= static_cast<int>(parts.size()) ? parts[j - 1] : 0; }
    int length() const { return static_cast<int>(parts.size()); }

    friend bool operator==(const BCPartition&, const BCPartition&) = default;
};

struct BKTPartition {
    std::vector<int> parts;  // fixed length k
    Variant variant = Variant::Odd;

    int part(int j) const { return parts.at(j - 1); }
    int size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

    friend bool operator==(const BKTPartition&, const BKTPartition&) = default;
};

using Word01 = std::vector<int>;

inline std::string to_string(const Word01& w) {
    std::string s;
    for (int b : w) s.push_back(b ? '1' : '0');
    return s;
}

inline Word01 word01_from_string(const std::string& s) {
    Word01 w;
    for (char c : s) {
        if (c != '0' && c != '1') throw std::invalid_argument("01-word may only contain 0 and 1");
        w.push_back(c == '1');
    }
    return w;
}

namespace detail {

inline std::vector<int> trim(std::vector<int> p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

inline std::vector<int> padded(const std::vector<int>& p, int k) {
    std::vector<int> out(p);
    out.resize(k, 0);
    return out;
}

}  // namespace detail

// mu inside the k x (2n+2-k) box. Walks from the northeast corner.
inline Word01 encode_01(const SpaceParams& s, const std::vector<int>& mu) {
    const int width = s.letters() - s.k;
    if (static_cast<int>(mu.size()) > s.k) throw std::invalid_argument("partition has more than k parts");
    Word01 w;
    int x = width;
    for (int r = 0; r < s.k; ++r) {
        const int m = r < static_cast<int>(mu.size()) ? mu[r] : 0;
        if (m > x || m < 0) throw std::invalid_argument("partition does not fit the box or is not decreasing");
        for (; x > m; --x) w.push_back(0);
        w.push_back(1);
    }
    for (; x > 0; --x) w.push_back(0);
    return w;
}

inline std::vector<int> decode_01(const SpaceParams& s, const Word01& w) {
    if (static_cast<int>(w.size()) != s.letters()) throw std::invalid_argument("01-word must have 2n+2 letters");
    if (std::count(w.begin(), w.end(), 1) != s.k) throw std::invalid_argument("01-word must have exactly k ones");
    std::vector<int> mu;
    int x = s.letters() - s.k;
    for (int b : w) {
        if (b)
            mu.push_back(x);
        else
            --x;
    }
    return mu;
}

// The 01-word of a coset is the indicator of its window.
inline Word01 word_of(const CosetRep& c) {
    Word01 w(c.space.letters(), 0);
    for (int v : c.window) w[v - 1] = 1;
    return w;
}

inline BCPartition weyl_to_bc(const CosetRep& c, Variant variant = Variant::Odd) {
    c.validate();
    std::vector<int> mu = decode_01(c.space, word_of(c));
    if (variant == Variant::Odd) {
        if (!c.is_odd()) throw std::invalid_argument("window contains bar(1); no odd BC partition");
        for (int& m : mu) --m;
    }
    return BCPartition{detail::trim(std::move(mu)), variant};
}

inline std::vector<int> even_parts(const SpaceParams& s, const BCPartition& p) {
    std::vector<int> mu = detail::padded(p.parts, s.k);
    if (p.variant == Variant::Odd)
        for (int& m : mu) ++m;
    return mu;
}

inline CosetRep bc_to_weyl(const SpaceParams& s, const BCPartition& p) {
    s.validate();
    if (p.length() > s.k) throw std::invalid_argument("BC partition has more than k parts");
    for (int j = 1; j <= p.length(); ++j) {
        if (p.part(j) < 0) throw std::invalid_argument("BC partition has a negative part");
        if (j > 1 && p.part(j) > p.part(j - 1)) throw std::invalid_argument("BC partition is not weakly decreasing");
    }
    const Word01 w = encode_01(s, even_parts(s, p));
    std::vector<int> win;
    for (int i = 1; i <= s.letters(); ++i)
        if (w[i - 1]) win.push_back(i);
    CosetRep c{s, std::move(win)};
    for (int v : c.window)
        if (c.contains(s.bar(v))) throw std::invalid_argument("partition is not in BC(k,2n+2)");
    return c;
}

inline bool is_valid_bc(const SpaceParams& s, const BCPartition& p) {
    try {
        bc_to_weyl(s, p);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

// ---------------------------------------------------------------------------
// BKT partitions. Odd variant alpha, even variant beta = alpha + 1^k.

inline BKTPartition weyl_to_bkt(const CosetRep& c, Variant variant = Variant::Odd) {
    c.validate();
    const auto& s = c.space;
    if (variant == Variant::Odd && !c.is_odd()) throw std::invalid_argument("window contains bar(1); no odd BKT partition");
    const int top = 2 * s.n + 3;
    std::vector<int> beta(s.k);
    for (int j = 0; j < s.k; ++j) {
        int b = top - s.k - c.window[j];
        for (int i = 0; i < j; ++i)
            if (c.window[i] + c.window[j] > top) ++b;
        beta[j] = variant == Variant::Odd ? b - 1 : b;
    }
    return BKTPartition{std::move(beta), variant};
}

inline std::vector<int> bkt_beta(const BKTPartition& a) {
    std::vector<int> beta = a.parts;
    if (a.variant == Variant::Odd)
        for (int& b : beta) ++b;
    return beta;
}

inline void validate_bkt(const SpaceParams& s, const BKTPartition& a) {
    s.validate();
    if (static_cast<int>(a.parts.size()) != s.k) throw std::invalid_argument("BKT partition must have exactly k entries");
    const std::vector<int> beta = bkt_beta(a);
    for (int j = 0; j < s.k; ++j) {
        if (beta[j] < 0 || beta[j] > s.letters() - s.k) throw std::invalid_argument("BKT entry out of range");
        if (j > 0 && beta[j] > beta[j - 1]) throw std::invalid_argument("BKT partition is not weakly decreasing");
        if (j + 1 < s.k && beta[j] > s.n + 1 - s.k && beta[j] == beta[j + 1])
            throw std::invalid_argument("BKT partition is not (n-k)-strict");
    }
    if (a.variant == Variant::Odd && a.parts.back() == -1 && a.parts.front() != 2 * s.n + 1 - s.k)
        throw std::invalid_argument("BKT entry -1 requires first part 2n+1-k");
}

inline CosetRep bkt_to_weyl(const SpaceParams& s, const BKTPartition& a) {
    validate_bkt(s, a);
    const std::vector<int> beta = bkt_beta(a);
    const int top = 2 * s.n + 3;
    std::vector<int> win(s.k);
    for (int j = 0; j < s.k; ++j) {
        int v = top - s.k - beta[j];
        for (int i = 0; i < j; ++i)
            if (beta[i] + beta[j] <= 2 * (s.n + 1 - s.k) + j - i) ++v;
        win[j] = v;
    }
    CosetRep c{s, std::move(win)};
    c.validate();
    if (weyl_to_bkt(c, a.variant) != a) throw std::invalid_argument("not a BKT partition of this space");
    return c;
}

inline bool is_valid_bkt(const SpaceParams& s, const BKTPartition& a) {
    try {
        bkt_to_weyl(s, a);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

inline int codim(const CosetRep& c) { return c.space.dim_odd() - length(c); }

// ---------------------------------------------------------------------------
// Steps on partitions.

inline int wingtip_m(const SpaceParams& s, const BCPartition& p) {
    const Word01 d = encode_01(s, even_parts(s, p));
    const int len = s.letters();
    int m = 0;
    while (m < len && d[m] != d[len - 1 - m]) ++m;
    return m;
}

namespace detail {

inline void require_closed(const SpaceParams& s, int first, int expect, Step which) {
    const bool closed = first == expect;
    if (which == Step::Ocirc && closed) throw std::invalid_argument("Ocirc step needs an open-orbit partition");
    if (which != Step::Ocirc && !closed)
        throw std::invalid_argument(std::string(to_string(which)) + " step needs a closed-orbit partition");
    if (which != Step::OZ && s.lagrangian())
        throw std::invalid_argument(std::string(to_string(which)) + " step is undefined for k = n+1");
}

}  // namespace detail

inline BCPartition bc_step(const SpaceParams& s, const BCPartition& p, Step which) {
    if (p.variant != Variant::Odd) throw std::invalid_argument("steps act on odd-variant partitions");
    bc_to_weyl(s, p);
    detail::require_closed(s, p.part(1), 2 * s.n + 1 - s.k, which);
    const std::vector<int> lam = detail::padded(p.parts, s.k);
    std::vector<int> out;
    switch (which) {
        case Step::Ocirc:
            for (int j = 1; j < s.k; ++j) out.push_back(std::max(lam[j] - 1, 0));
            break;
        case Step::OZ:
            out.push_back(lam[0]);
            for (int j = 2; j < s.k; ++j) out.push_back(std::max(lam[j] - 1, 0));
            break;
        case Step::OY: {
            const Word01 d = encode_01(s, even_parts(s, p));
            const int m = wingtip_m(s, p);
            const int pos = s.bar(m);  // 1-based letter position
            int ones = 0, zeros = 0;
            for (int q = 1; q < pos; ++q) (d[q - 1] ? ones : zeros)++;
            if (d[pos - 1]) {
                const int i = ones + 1;
                for (int j = 2; j < i; ++j) out.push_back(lam[j - 1] - 1);
                out.push_back(lam[i - 1]);
                out.push_back(lam[i - 1]);
                for (int j = i + 1; j <= s.k; ++j) out.push_back(lam[j - 1]);
            } else {
                const int i = ones;
                const int col = s.letters() - s.k - zeros - 1;
                for (int j = 2; j <= i; ++j) out.push_back(lam[j - 1] - 1);
                out.push_back(col);
                for (int j = i + 1; j <= s.k; ++j) out.push_back(lam[j - 1]);
            }
            out.resize(s.k);
            break;
        }
    }
    return BCPartition{detail::trim(std::move(out)), Variant::Odd};
}

// l_i(alpha) = max{ j : alpha_j > i }, 0 if none.
inline int bkt_ell(const std::vector<int>& a, int i) {
    int j = 0;
    for (int q = 0; q < static_cast<int>(a.size()); ++q)
        if (a[q] > i) j = q + 1;
    return j;
}

inline BKTPartition bkt_step(const SpaceParams& s, const BKTPartition& a, Step which) {
    if (a.variant != Variant::Odd) throw std::invalid_argument("steps act on odd-variant partitions");
    validate_bkt(s, a);
    detail::require_closed(s, a.part(1), 2 * s.n + 1 - s.k, which);
    const int k = s.k;
    const std::vector<int>& al = a.parts;
    auto at = [&](int j) { return al[j - 1]; };
    std::vector<int> out;
    switch (which) {
        case Step::Ocirc: {
            int cut = 0;
            for (int j = 2; j <= k && !cut; ++j)
                if (at(1) + at(j) <= 2 * (s.n - k) + j - 1) cut = j;
            for (int j = 2; j <= k; ++j) out.push_back(cut && j >= cut ? at(j) - 1 : at(j));
            out.push_back(0);
            for (int& x : out) x = std::max(x, 0);
            break;
        }
        case Step::OZ: {
            if (k == 1) return a;
            int cut = 0;
            for (int j = 3; j <= k && !cut; ++j)
                if (at(2) + at(j) <= 2 * (s.n - k) + j - 2) cut = j;
            out.push_back(at(1));
            for (int j = 3; j <= k; ++j) out.push_back(cut && j >= cut ? at(j) - 1 : at(j));
            out.push_back(-1);
            for (int& x : out) x = std::max(x, -1);
            break;
        }
        case Step::OY: {
            const int l = bkt_ell(al, -1);
            for (int j = 2; j <= l; ++j) out.push_back(at(j));
            out.resize(k, 0);
            break;
        }
    }
    return BKTPartition{std::move(out), Variant::Odd};
}

inline BCPartition iterate_step(const SpaceParams& s, BCPartition p, Step which, int d) {
    if (d < 0) throw std::invalid_argument("d must be nonnegative");
    if (d == 0) return p;
    p = bc_step(s, p, which);
    const Step rest = which == Step::OY ? Step::Ocirc : which;
    for (int i = 1; i < d; ++i) p = bc_step(s, p, rest);
    return p;
}

inline BKTPartition iterate_step(const SpaceParams& s, BKTPartition a, Step which, int d) {
    if (d < 0) throw std::invalid_argument("d must be nonnegative");
    if (d == 0) return a;
    a = bkt_step(s, a, which);
    const Step rest = which == Step::OY ? Step::Ocirc : which;
    for (int i = 1; i < d; ++i) a = bkt_step(s, a, rest);
    return a;
}

// ---------------------------------------------------------------------------
// Comp sets.

namespace detail {

inline void require_comp_input(const SpaceParams& s, int first, int d) {
    if (d < 1) throw std::invalid_argument("Comp sets are defined for d >= 1");
    if (s.lagrangian()) throw std::invalid_argument("Comp sets are undefined for k = n+1");
    if (first != 2 * s.n + 1 - s.k) throw std::invalid_argument("Comp membership needs a closed-orbit class");
}

}  // namespace detail

// Rows j > 2 whose BC part is positive, read off the BKT side. Entries
// alpha_j >= 0 always count; alpha_j = -1 counts when some 2 <= i < j has
// beta_i > 2(n+1-k) + j - i.
inline int bkt_tail_rows(const SpaceParams& s, const BKTPartition& a) {
    const std::vector<int> beta = bkt_beta(a);
    int rows = 0;
    for (int j = 3; j <= s.k; ++j) {
        bool counted = beta[j - 1] > 0;
        for (int i = 2; i < j && !counted; ++i)
            if (beta[i - 1] > 2 * (s.n + 1 - s.k) + j - i) counted = true;
        rows += counted;
    }
    return rows;
}

inline bool comp_member(const SpaceParams& s, const BCPartition& p, int d) {
    bc_to_weyl(s, p);
    detail::require_comp_input(s, p.part(1), d);
    int ell = 0;
    for (int j = d + 2; j <= p.length(); ++j)
        if (p.part(j) > d - 1) ++ell;
    return p.part(d + 1) - ell - d == 2 * (s.n + 1 - s.k);
}

inline bool comp_member(const SpaceParams& s, const BKTPartition& a, int d) {
    validate_bkt(s, a);
    detail::require_comp_input(s, a.part(1), d);
    if (s.k < 2) return false;
    const BKTPartition z = iterate_step(s, a, Step::OZ, d - 1);
    return z.part(2) - bkt_tail_rows(s, z) == 2 * (s.n + 1 - s.k);
}

// ---------------------------------------------------------------------------
// Bruhat order: u <= v iff the (even) BC diagram of u contains that of v.

inline bool bruhat_leq(const CosetRep& u, const CosetRep& v) {
    if (u.space != v.space) throw std::invalid_argument("cannot compare classes of different spaces");
    const Word01 wu = word_of(u), wv = word_of(v);
    // Diagram containment via prefix counts of ones.
    int cu = 0, cv = 0;
    for (std::size_t i = 0; i < wu.size(); ++i) {
        cu += wu[i];
        cv += wv[i];
        if (cu < cv) return false;
    }
    return true;
}

}  // namespace igcurve
