#include "sis/invariance.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sis {

std::vector<std::size_t> InvarianceContext::block(std::size_t sigma_pos) const {
    std::vector<std::size_t> out;
    for (std::size_t gamma = 0; gamma < block_of.size(); ++gamma) {
        if (block_of[gamma] == sigma_pos) out.push_back(gamma);
    }
    return out;
}

std::size_t InvarianceContext::sigma_position(const Element& sigma) const {
    const Group& g = base.group;
    if (!g.is_valid(sigma)) throw std::invalid_argument("sigma " + to_string(sigma) + " is not a group element");
    const auto pos = n_section.find_rep(g.index(sigma));
    if (pos == Transversal::npos) {
        throw std::invalid_argument("sigma " + to_string(sigma) + " is not in the section of H*/M*");
    }
    return pos;
}

InvarianceContext refine_context(const FiberContext& base, const Subgroup& m) {
    const Group& g = base.group;
    if (!(m.parent() == g)) throw std::invalid_argument("refine_context: M lives in a different group");
    if (!base.k.is_subset_of(m)) throw std::invalid_argument("refine_context: M does not contain H");

    Subgroup mstar = annihilator(g, m);
    if (!mstar.is_subset_of(base.kstar)) throw InconsistencyError("M* is not contained in H*");
    Transversal n_section = transversal(base.kstar, mstar);
    Transversal d_section = transversal(g, mstar);

    // B_sigma as a literal union of translates of Omega + sigma.
    std::vector<std::size_t> block_of(g.order(), Transversal::npos);
    for (std::size_t s = 0; s < n_section.size(); ++s) {
        const auto sigma = n_section.reps()[s];
        for (auto omega : base.section.reps()) {
            for (auto mst : mstar.elements()) {
                const auto gamma = g.add(g.add(omega, sigma), mst);
                if (block_of[gamma] != Transversal::npos) throw InconsistencyError("B_sigma sets overlap");
                block_of[gamma] = s;
            }
        }
    }
    if (std::find(block_of.begin(), block_of.end(), Transversal::npos) != block_of.end()) {
        throw InconsistencyError("B_sigma sets do not cover Gamma");
    }
    return InvarianceContext{base, m, std::move(mstar), std::move(n_section), std::move(d_section),
                             std::move(block_of)};
}

Spectrum cutoff(const InvarianceContext& ictx, const Spectrum& f, std::size_t sigma_pos) {
    if (sigma_pos >= ictx.block_count()) throw std::invalid_argument("cutoff: sigma position out of range");
    auto out = f;
    for (std::size_t gamma = 0; gamma < out.values.size(); ++gamma) {
        if (ictx.block_of[gamma] != sigma_pos) out.values[gamma] = 0.0;
    }
    return out;
}

Signal cutoff(const InvarianceContext& ictx, const Signal& f, const Element& sigma) {
    return idft(cutoff(ictx, chop(dft(f)), ictx.sigma_position(sigma)));
}

int OmegaRanks::rank_sum() const {
    int acc = 0;
    for (const auto& s : sigma_ranks) acc += s.rank;
    return acc;
}

namespace {

std::vector<std::vector<Spectrum>> cutoffs_by_sigma(const InvarianceContext& ictx, const std::vector<Spectrum>& phi) {
    std::vector<std::vector<Spectrum>> out(ictx.block_count());
    for (std::size_t s = 0; s < ictx.block_count(); ++s) {
        out[s].reserve(phi.size());
        for (const auto& f : phi) out[s].push_back(cutoff(ictx, f, s));
    }
    return out;
}

std::vector<OmegaRanks> rank_table(const InvarianceContext& ictx, const std::vector<Spectrum>& phi,
                                   const std::vector<std::vector<Spectrum>>& cut, double tol_rel) {
    const Group& g = ictx.base.group;
    const auto total = dim_function(ictx.base, phi, tol_rel);
    std::vector<std::vector<int>> per_sigma;
    per_sigma.reserve(cut.size());
    for (const auto& c : cut) per_sigma.push_back(dim_function(ictx.base, c, tol_rel));

    std::vector<OmegaRanks> table(ictx.base.section_size());
    for (std::size_t w = 0; w < table.size(); ++w) {
        table[w].omega = g.element(ictx.base.section.reps()[w]);
        table[w].rank_total = total[w];
        for (std::size_t s = 0; s < cut.size(); ++s) {
            table[w].sigma_ranks.push_back({g.element(ictx.n_section.reps()[s]), per_sigma[s][w]});
        }
    }
    return table;
}

}  // namespace

InvarianceReport is_invariant_rank(const InvarianceContext& ictx, const std::vector<Spectrum>& phi, double tol_rel) {
    InvarianceReport report;
    report.per_omega = rank_table(ictx, phi, cutoffs_by_sigma(ictx, phi), tol_rel);
    report.verdict = std::all_of(report.per_omega.begin(), report.per_omega.end(),
                                 [](const OmegaRanks& r) { return r.rank_total == r.rank_sum(); });
    return report;
}

InvarianceReport is_invariant_rank(const InvarianceContext& ictx, const std::vector<Signal>& phi, double tol_rel) {
    return is_invariant_rank(ictx, spectra_of(phi), tol_rel);
}

InvarianceReport is_invariant_subspace(const InvarianceContext& ictx, const std::vector<Spectrum>& phi,
                                       double tol_rel) {
    const Group& g = ictx.base.group;
    const auto cut = cutoffs_by_sigma(ictx, phi);
    InvarianceReport report;
    report.per_omega = rank_table(ictx, phi, cut, tol_rel);
    for (std::size_t i = 0; i < phi.size(); ++i) {
        for (std::size_t s = 0; s < cut.size(); ++s) {
            const auto mr = fiber_membership(ictx.base, phi, cut[s][i], tol_rel);
            for (std::size_t w = 0; w < mr.residuals.size(); ++w) {
                if (mr.residuals[w] > tol_rel) {
                    report.failures.push_back({i, g.element(ictx.n_section.reps()[s]),
                                               g.element(ictx.base.section.reps()[w]), mr.residuals[w]});
                }
            }
        }
    }
    report.verdict = report.failures.empty();
    return report;
}

InvarianceReport is_invariant_subspace(const InvarianceContext& ictx, const std::vector<Signal>& phi,
                                       double tol_rel) {
    return is_invariant_subspace(ictx, spectra_of(phi), tol_rel);
}

Spectrum modulate(const Spectrum& f, std::size_t x) {
    const Group& g = f.group;
    const auto minus_x = g.neg(x);
    auto out = f;
    for (std::size_t gamma = 0; gamma < out.values.size(); ++gamma) out.values[gamma] *= g.character(minus_x, gamma);
    return out;
}

Subgroup invariance_set(const FiberContext& base, const std::vector<Spectrum>& phi, double tol_rel) {
    const Group& g = base.group;
    std::vector<std::size_t> members;
    for (std::size_t x = 0; x < g.order(); ++x) {
        const bool keeps = std::all_of(phi.begin(), phi.end(), [&](const Spectrum& f) {
            return fiber_membership(base, phi, modulate(f, x), tol_rel).member;
        });
        if (keeps) members.push_back(x);
    }
    if (!is_subgroup(g, members)) {
        throw InconsistencyError("invariance set is not a subgroup; check the tolerance");
    }
    Subgroup out = subgroup_from_elements(g, std::move(members));
    if (!base.k.is_subset_of(out)) throw InconsistencyError("invariance set does not contain H; check the tolerance");
    return out;
}

Subgroup invariance_set(const FiberContext& base, const std::vector<Signal>& phi, double tol_rel) {
    return invariance_set(base, spectra_of(phi), tol_rel);
}

TransferFunction transfer_function(const FiberContext& mctx, const Spectrum& f, const Spectrum& g) {
    const Group& grp = mctx.group;
    if (!(f.group == grp) || !(g.group == grp)) throw std::invalid_argument("transfer_function: group mismatch");
    const auto ff = fiberize(mctx, f);
    const auto gf = fiberize(mctx, g);

    // Fibers of f below this norm are treated as exact zeros (rounding noise).
    const double max_norm = ff.columns.colwise().norm().maxCoeff();
    const double zero_floor = 1e-12 * max_norm;

    TransferFunction out;
    out.eta.assign(mctx.section_size(), Complex{});
    for (std::size_t d = 0; d < mctx.section_size(); ++d) {
        const auto fd = ff.fiber(d);
        const double n2 = fd.squaredNorm();
        if (std::sqrt(n2) <= zero_floor) continue;
        // <T g(d), T f(d)> / ||T f(d)||^2; the K* point mass cancels.
        out.eta[d] = fd.dot(gf.fiber(d)) / n2;
    }
    out.extended.assign(grp.order(), Complex{});
    double err2 = 0.0;
    for (std::size_t gamma = 0; gamma < grp.order(); ++gamma) {
        out.extended[gamma] = out.eta[mctx.section.rep_position(gamma)];
        err2 += std::norm(g.values[gamma] - out.extended[gamma] * f.values[gamma]);
    }
    out.residual = std::sqrt(err2 / static_cast<double>(grp.order()));
    return out;
}

TransferFunction transfer_function(const FiberContext& mctx, const Signal& f, const Signal& g) {
    return transfer_function(mctx, chop(dft(f)), chop(dft(g)));
}

std::vector<Complex> periodized_character(const InvarianceContext& ictx, const Element& m, const Element& sigma) {
    const Group& g = ictx.base.group;
    if (!g.is_valid(m) || !ictx.m.contains(m)) throw std::invalid_argument("periodized_character: m is not in M");
    const auto sigma_idx = g.index(sigma);
    ictx.sigma_position(sigma);
    const auto m_idx = g.index(m);
    std::vector<Complex> out(g.order());
    for (std::size_t gamma = 0; gamma < g.order(); ++gamma) {
        const auto omega = ictx.base.section.reps()[ictx.base.section.rep_position(gamma)];
        out[gamma] = g.character(m_idx, g.add(omega, sigma_idx));
    }
    return out;
}

Spectrum exactly_invariant_spectrum(const InvarianceContext& ictx) {
    // 0 is always the first representative of N.
    return Spectrum::indicator(ictx.base.group, ictx.block(0));
}

Signal construct_exactly_invariant(const Group& g, const Subgroup& h, const Subgroup& m) {
    const auto ictx = refine_context(make_fiber_context(g, h), m);
    return idft(exactly_invariant_spectrum(ictx));
}

namespace {

std::vector<char> support_mask(const Spectrum& f, double tol_rel) {
    double peak = 0.0;
    for (const auto& v : f.values) peak = std::max(peak, std::abs(v));
    std::vector<char> mask(f.values.size(), 0);
    if (peak == 0.0) return mask;
    for (std::size_t i = 0; i < mask.size(); ++i) mask[i] = std::abs(f.values[i]) > tol_rel * peak ? 1 : 0;
    return mask;
}

}  // namespace

SupportReport support_report(const InvarianceContext& ictx, const std::vector<Spectrum>& phi, double tol_rel) {
    SupportReport r;
    const auto ell = phi.size();
    const auto dims = dim_function(ictx.base, phi, tol_rel);
    r.omega_count = ictx.base.section_size();
    r.e_sizes.assign(ell + 1, 0);
    for (auto d : dims) r.e_sizes.at(static_cast<std::size_t>(d)) += 1;
    for (std::size_t j = 0; j <= ell; ++j) r.weighted_dimension += j * r.e_sizes[j];
    r.section_bound = r.omega_count * ell;
    r.bound_holds = r.weighted_dimension <= r.section_bound;

    std::vector<char> union_support(ictx.base.group.order(), 0);
    for (const auto& f : phi) {
        const auto mask = support_mask(f, tol_rel);
        std::size_t in_section = 0;
        for (auto delta : ictx.d_section.reps()) in_section += mask[delta] ? 1 : 0;
        const auto total = static_cast<std::size_t>(std::count(mask.begin(), mask.end(), 1));
        r.support_in_section.push_back(in_section);
        r.support_total.push_back(total);
        if (in_section > r.weighted_dimension) r.bound_holds = false;
        for (std::size_t i = 0; i < mask.size(); ++i) union_support[i] |= mask[i];
    }

    if (ictx.m.is_whole_group()) {
        std::vector<std::size_t> e;
        for (std::size_t i = 0; i < union_support.size(); ++i) {
            if (union_support[i]) e.push_back(i);
        }
        r.wiener_set = std::move(e);
        r.full_support_bound_holds = std::all_of(r.support_total.begin(), r.support_total.end(),
                                                 [&](std::size_t s) { return s <= r.weighted_dimension; });
    }
    return r;
}

SupportReport support_report(const InvarianceContext& ictx, const std::vector<Signal>& phi, double tol_rel) {
    return support_report(ictx, spectra_of(phi), tol_rel);
}

}  // namespace sis
