#pragma once

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "igcurve/indexing.hpp"
#include "igcurve/moment_graph.hpp"
#include "igcurve/weyl.hpp"

namespace igcurve {

enum class Indexation { Weyl, BC, BKT };

inline const char* to_string(Indexation i) {
    switch (i) {
        case Indexation::Weyl: return "weyl";
        case Indexation::BC: return "bc";
        case Indexation::BKT: return "bkt";
    }
    return "";
}

// A Schubert class of IG(k,2n+1) as given by the caller.
struct SchubertId {
    SpaceParams space;
    Indexation indexation = Indexation::Weyl;
    std::vector<int> value;  // signed window, BC parts, or BKT parts
};

inline CosetRep resolve(const SchubertId& id) {
    id.space.validate();
    CosetRep c;
    switch (id.indexation) {
        case Indexation::Weyl: c = coset_from_signed(id.space, id.value); break;
        case Indexation::BC: c = bc_to_weyl(id.space, BCPartition{detail::trim(id.value), Variant::Odd}); break;
        case Indexation::BKT: c = bkt_to_weyl(id.space, BKTPartition{id.value, Variant::Odd}); break;
    }
    if (!c.is_odd()) throw std::invalid_argument("window contains bar(1); not a class of the odd space");
    return c;
}

struct Component {
    CosetRep weyl;
    BCPartition bc;
    BKTPartition bkt;
    Orbit orbit = Orbit::Y;
};

inline Component make_component(const CosetRep& c) {
    return Component{c, weyl_to_bc(c), weyl_to_bkt(c), c.in_closed_orbit() ? Orbit::Z : Orbit::Y};
}

enum class Method { Formula, Oracle };

inline const char* to_string(Method m) { return m == Method::Formula ? "formula" : "oracle"; }

struct NeighborhoodResult {
    SchubertId input;
    int d = 0;
    std::vector<Component> components;
    Method method = Method::Formula;

    std::vector<CosetRep> cosets() const {
        std::vector<CosetRep> out;
        for (const auto& c : components) out.push_back(c.weyl);
        std::sort(out.begin(), out.end());
        return out;
    }
};

// d-fold Hecke power of s_{2t_1} applied to the Schubert point of IG(k,2n+2).
inline CosetRep even_zd(const SpaceParams& space, int d) {
    space.validate();
    if (d < 0) throw std::invalid_argument("d must be nonnegative");
    auto z = SignedPermutation::identity(space.rank());
    for (int i = 0; i < d; ++i) z = hecke_mul(z, ocirc_word(space));
    return coset_rep(z, space.k);
}

// Gamma_d of an even Schubert variety: X(w . z_d).
inline CosetRep even_nbhd(const CosetRep& w, int d) {
    if (d < 0) throw std::invalid_argument("d must be nonnegative");
    auto z = min_rep(w);
    for (int i = 0; i < d; ++i) z = hecke_mul(z, ocirc_word(w.space));
    return coset_rep(z, w.space.k);
}

class ContainmentFailure : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// The two closed-orbit candidates w.O_Y(d) and w.O_Z(d).
struct ClosedCandidates {
    CosetRep y;
    CosetRep z;
};

inline ClosedCandidates closed_candidates(const CosetRep& w, int d) {
    return ClosedCandidates{iterate_neighbor(w, Step::OY, d), iterate_neighbor(w, Step::OZ, d)};
}

inline std::vector<CosetRep> nbhd_formula_cosets(const CosetRep& w, int d) {
    w.validate();
    if (!w.is_odd()) throw std::invalid_argument("window contains bar(1); not a class of the odd space");
    if (d < 0) throw std::invalid_argument("d must be nonnegative");
    const auto& s = w.space;
    if (d == 0) return {w};
    if (s.lagrangian()) return {iterate_neighbor(w, Step::OZ, d)};
    if (!w.in_closed_orbit()) return {iterate_neighbor(w, Step::Ocirc, d)};
    const auto [y, z] = closed_candidates(w, d);
    if (comp_member(s, weyl_to_bc(w), d)) {
        std::vector<CosetRep> out{y, z};
        std::sort(out.begin(), out.end());
        return out;
    }
    if (!bruhat_leq(z, y))
        throw ContainmentFailure("O_Z candidate is not contained in the O_Y candidate outside Comp");
    return {y};
}

inline NeighborhoodResult nbhd_formula(const SchubertId& id, int d) {
    NeighborhoodResult r{id, d, {}, Method::Formula};
    for (const auto& c : nbhd_formula_cosets(resolve(id), d)) r.components.push_back(make_component(c));
    return r;
}

inline NeighborhoodResult nbhd_oracle(const SchubertId& id, int d, std::uint64_t max_vertices = 200000) {
    if (d < 0) throw std::invalid_argument("d must be nonnegative");
    const CosetRep w = resolve(id);
    const MomentGraph g(id.space, Flavor::Odd, max_vertices);
    NeighborhoodResult r{id, d, {}, Method::Oracle};
    for (const auto& c : oracle_nbhd(g, w, d)) r.components.push_back(make_component(c));
    return r;
}

// ---------------------------------------------------------------------------
// Exhaustive comparison of the formulas with the oracle.

struct SweepReport {
    SpaceParams space;
    int dmax = 0;
    long classes = 0;
    long cases = 0;
    long checks = 0;
    std::vector<std::string> mismatches;

    bool clean() const { return mismatches.empty(); }
};

namespace detail {

inline std::string describe(const CosetRep& c) { return "(" + format_window(c) + ")"; }

inline std::string describe(const std::vector<CosetRep>& cs) {
    std::string s = "{";
    for (std::size_t i = 0; i < cs.size(); ++i) s += (i ? " " : "") + describe(cs[i]);
    return s + "}";
}

struct CaseLog {
    long checks = 0;
    std::vector<std::string> bad;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) bad.push_back(what);
    }
};

inline void sweep_class(const MomentGraph& g, const CosetRep& w, int dmax, CaseLog& log) {
    const auto& s = g.space();
    const std::string tag = describe(w);
    const bool closed = w.in_closed_orbit() && !s.lagrangian();
    for (int d = 0; d <= dmax; ++d) {
        const std::string at = tag + " d=" + std::to_string(d);
        std::vector<CosetRep> formula;
        try {
            formula = nbhd_formula_cosets(w, d);
        } catch (const std::exception& e) {
            log.expect(false, at + ": formula threw: " + e.what());
            continue;
        }
        const auto oracle = oracle_nbhd(g, w, d);
        log.expect(formula == oracle, at + ": formula " + describe(formula) + " vs oracle " + describe(oracle));
        if (!closed || d == 0) continue;

        const BCPartition lam = weyl_to_bc(w);
        const BKTPartition alpha = weyl_to_bkt(w);
        const bool comp_bc = comp_member(s, lam, d);
        const bool comp_bkt = comp_member(s, alpha, d);
        log.expect((oracle.size() == 2) == comp_bc, at + ": oracle component count disagrees with Comp_BC");
        log.expect(comp_bc == comp_bkt, at + ": Comp_BC and Comp_BKT disagree");

        const CosetRep y = iterate_neighbor(w, Step::OY, d);
        const BCPartition lam_y = iterate_step(s, lam, Step::OY, d);
        const BKTPartition alpha_y = iterate_step(s, alpha, Step::OY, d);
        log.expect(weyl_to_bc(y) == lam_y, at + ": BC O_Y(d) disagrees with the Weyl recursion");
        log.expect(weyl_to_bkt(y) == alpha_y, at + ": BKT O_Y(d) disagrees with the Weyl recursion");
        for (int d1 = 0; d1 <= d - 1; ++d1) {
            const int d2 = d - 1 - d1;
            const std::string split = at + " d1=" + std::to_string(d1);
            const CosetRep yz =
                iterate_neighbor(one_step_neighbor(iterate_neighbor(w, Step::OZ, d1), Step::OY), Step::Ocirc, d2);
            log.expect(yz == y, split + ": square factorization differs");
            const auto lz = iterate_step(s, iterate_step(s, lam, Step::OZ, d1), Step::OY, 1);
            log.expect(iterate_step(s, lz, Step::Ocirc, d2) == lam_y, split + ": BC greedy factorization differs");
            const auto az = iterate_step(s, iterate_step(s, alpha, Step::OZ, d1), Step::OY, 1);
            log.expect(iterate_step(s, az, Step::Ocirc, d2) == alpha_y, split + ": BKT greedy factorization differs");
        }
        for (int d1 = 1; d1 < d; ++d1) {
            const std::string split = at + " d1=" + std::to_string(d1);
            log.expect(comp_bc == comp_member(s, iterate_step(s, lam, Step::OZ, d1), d - d1),
                       split + ": Comp_BC additivity fails");
            log.expect(comp_bkt == comp_member(s, iterate_step(s, alpha, Step::OZ, d1), d - d1),
                       split + ": Comp_BKT additivity fails");
        }
    }
}

}  // namespace detail

inline SweepReport verify_sweep(const SpaceParams& space, int dmax, int jobs = 1, std::uint64_t max_vertices = 200000) {
    if (dmax < 0) throw std::invalid_argument("dmax must be nonnegative");
    const MomentGraph g(space, Flavor::Odd, max_vertices);
    SweepReport report{space, dmax, g.size(), static_cast<long>(g.size()) * (dmax + 1), 0, {}};
    std::vector<detail::CaseLog> logs(g.size());
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int u = next++; u < g.size(); u = next++) detail::sweep_class(g, g.vertex(u), dmax, logs[u]);
    };
    const int n_threads = std::max(1, std::min(jobs, g.size()));
    std::vector<std::thread> pool;
    for (int t = 1; t < n_threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (const auto& log : logs) {
        report.checks += log.checks;
        report.mismatches.insert(report.mismatches.end(), log.bad.begin(), log.bad.end());
    }
    return report;
}

}  // namespace igcurve
