// Extra invariance of H-invariant spaces S = S_H(Phi).
//
// Given H <= M <= G, the section Omega of Gamma/H* and the section N of
// H*/M* (both canonical, 0 in each), the sets
//     B_sigma = Omega + sigma + M*,   sigma in N,
// partition Gamma into M*-periodic pieces. S is M-invariant exactly when
// every cut-off phi^sigma (spectrum masked to B_sigma) stays in S, which on
// the fiber side is the rank identity
//     rank G_Phi(omega) = sum_sigma rank G_{Phi^sigma}(omega)   for all omega.

#ifndef SIS_INVARIANCE_HPP
#define SIS_INVARIANCE_HPP

#include <optional>
#include <vector>

#include "sis/errors.hpp"
#include "sis/fibering.hpp"
#include "sis/group.hpp"
#include "sis/spectral.hpp"

namespace sis {

struct InvarianceContext {
    FiberContext base;
    Subgroup m;
    Subgroup mstar;
    /// Section N of H*/M*.
    Transversal n_section;
    /// Section D of Gamma/M*.
    Transversal d_section;
    /// block_of[gamma] = position in n_section.reps() of the B_sigma holding gamma.
    std::vector<std::size_t> block_of;

    std::size_t block_count() const { return n_section.size(); }
    /// Elements of B_sigma for the sigma at `sigma_pos`, increasing.
    std::vector<std::size_t> block(std::size_t sigma_pos) const;
    /// Throws std::invalid_argument when sigma is not in N.
    std::size_t sigma_position(const Element& sigma) const;
};

/// Throws std::invalid_argument unless H <= M; throws InconsistencyError if
/// the B_sigma fail to partition Gamma.
InvarianceContext refine_context(const FiberContext& base, const Subgroup& m);

Signal cutoff(const InvarianceContext& ictx, const Signal& f, const Element& sigma);
Spectrum cutoff(const InvarianceContext& ictx, const Spectrum& f, std::size_t sigma_pos);

struct SigmaRank {
    Element sigma;
    int rank = 0;
};

struct OmegaRanks {
    Element omega;
    int rank_total = 0;
    std::vector<SigmaRank> sigma_ranks;

    int rank_sum() const;
};

struct MembershipFailure {
    std::size_t generator = 0;
    Element sigma;
    Element omega;
    double residual = 0.0;
};

struct InvarianceReport {
    bool verdict = true;
    std::vector<OmegaRanks> per_omega;
    std::vector<MembershipFailure> failures;
    std::optional<Subgroup> invariance_set;
};

/// Rank criterion. The verdict is true iff the rank identity holds at every omega.
InvarianceReport is_invariant_rank(const InvarianceContext& ictx, const std::vector<Spectrum>& phi,
                                   double tol_rel = kDefaultTolerance);
InvarianceReport is_invariant_rank(const InvarianceContext& ictx, const std::vector<Signal>& phi,
                                   double tol_rel = kDefaultTolerance);

/// Cut-off membership criterion. The verdict is true iff every phi^sigma
/// has its H-fibers inside the fiber spaces of S; failures list every
/// (generator, sigma, omega) that misses. per_omega is filled as well.
InvarianceReport is_invariant_subspace(const InvarianceContext& ictx, const std::vector<Spectrum>& phi,
                                       double tol_rel = kDefaultTolerance);
InvarianceReport is_invariant_subspace(const InvarianceContext& ictx, const std::vector<Signal>& phi,
                                       double tol_rel = kDefaultTolerance);

/// { x in G : t_x phi in S for all phi }. Throws InconsistencyError if the
/// result is not a subgroup containing H.
Subgroup invariance_set(const FiberContext& base, const std::vector<Spectrum>& phi,
                        double tol_rel = kDefaultTolerance);
Subgroup invariance_set(const FiberContext& base, const std::vector<Signal>& phi,
                        double tol_rel = kDefaultTolerance);

struct TransferFunction {
    /// eta on the section of Gamma/M*, in section order; 0 where the fiber of f vanishes.
    std::vector<Complex> eta;
    /// M*-periodic extension of eta to Gamma.
    std::vector<Complex> extended;
    /// ||g - (eta f^)^vee||_{L^2(G)}.
    double residual = 0.0;
};

/// `mctx` is the fiber context of (G, M); the result certifies g in S_M(f)
/// iff the residual vanishes.
TransferFunction transfer_function(const FiberContext& mctx, const Spectrum& f, const Spectrum& g);
TransferFunction transfer_function(const FiberContext& mctx, const Signal& f, const Signal& g);

/// H*-periodic l_m with l_m(omega + h*) = (m, omega + sigma); agrees with
/// (m, .) on B_sigma. Throws std::invalid_argument when m is not in M or
/// sigma is not in N.
std::vector<Complex> periodized_character(const InvarianceContext& ictx, const Element& m, const Element& sigma);

/// phi with spectrum chi_{B_0}; S_H(phi) has invariance set exactly M.
Signal construct_exactly_invariant(const Group& g, const Subgroup& h, const Subgroup& m);
Spectrum exactly_invariant_spectrum(const InvarianceContext& ictx);

struct SupportReport {
    /// |E_j| for j = 0..l, E_j = { omega in Omega : dim_S(omega) = j }.
    std::vector<std::size_t> e_sizes;
    /// |supp phi^_i intersect D| for each generator, D the section of Gamma/M*.
    std::vector<std::size_t> support_in_section;
    /// |supp phi^_i| over all of Gamma.
    std::vector<std::size_t> support_total;
    /// sum_j j |E_j|.
    std::size_t weighted_dimension = 0;
    /// |Omega| * l.
    std::size_t section_bound = 0;
    std::size_t omega_count = 0;
    /// Both inequalities of the support bound hold for every generator.
    bool bound_holds = true;
    /// When M = G: the set E with S = { f : supp f^ within E }.
    std::optional<std::vector<std::size_t>> wiener_set;
    /// When M = G (so D = Gamma): |supp phi^_i| <= sum_j j |E_j| for every
    /// generator, which for a single generator is |supp phi^| <= |Omega|.
    std::optional<bool> full_support_bound_holds;
};

SupportReport support_report(const InvarianceContext& ictx, const std::vector<Spectrum>& phi,
                             double tol_rel = kDefaultTolerance);
SupportReport support_report(const InvarianceContext& ictx, const std::vector<Signal>& phi,
                             double tol_rel = kDefaultTolerance);

/// Spectrum of t_x f, computed as (-x, .) f^.
Spectrum modulate(const Spectrum& f, std::size_t x);

}  // namespace sis

#endif  // SIS_INVARIANCE_HPP
