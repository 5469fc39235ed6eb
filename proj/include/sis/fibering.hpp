// Fiberization T_K of L^2(G) over a subgroup K, Gramians, dimension
// functions and fiber-space membership.
//
// For a subgroup K with annihilator K* and the canonical section Omega of
// Gamma / K*, the K-fiber of f at omega in Omega is the vector
//     (f^(omega + k*))_{k* in K*},   K* listed in increasing order.
// With the measure convention of spectral.hpp, m_{K*}({0}) = 1/|G|.

#ifndef SIS_FIBERING_HPP
#define SIS_FIBERING_HPP

#include <Eigen/Dense>

#include <vector>

#include "sis/group.hpp"
#include "sis/spectral.hpp"

namespace sis {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr double kDefaultTolerance = 1e-9;

struct FiberContext {
    Group group;
    Subgroup k;
    Subgroup kstar;
    /// Section of Gamma / K*.
    Transversal section;

    std::size_t fiber_length() const { return kstar.order(); }
    std::size_t section_size() const { return section.size(); }
    /// Weight of a single point of K*, 1/|G|.
    double point_mass() const { return 1.0 / static_cast<double>(group.order()); }
    /// Flat index of omega_pos-th section rep plus j-th element of K*.
    std::size_t frequency(std::size_t omega_pos, std::size_t j) const {
        return group.add(section.reps()[omega_pos], kstar.elements()[j]);
    }
};

FiberContext make_fiber_context(const Group& g, const Subgroup& k);

/// Column c holds the fiber at section.reps()[c].
struct FiberMatrix {
    FiberContext context;
    ComplexMatrix columns;

    ComplexVector fiber(std::size_t omega_pos) const { return columns.col(static_cast<Eigen::Index>(omega_pos)); }
    /// Norm in L^2(Omega, l^2(K*)); equals ||f||^2 / |G|.
    double norm_squared() const;
};

FiberMatrix fiberize(const FiberContext& ctx, const Signal& f);
FiberMatrix fiberize(const FiberContext& ctx, const Spectrum& F);

struct Gramian {
    Element omega;
    ComplexMatrix matrix;
};

/// Throws std::invalid_argument when omega is not a section representative
/// or Phi is empty.
Gramian gramian(const FiberContext& ctx, const std::vector<Signal>& phi, const Element& omega);

/// Fibers of every generator at one section position, one column each.
ComplexMatrix fiber_columns(const FiberContext& ctx, const std::vector<Spectrum>& phi, std::size_t omega_pos);
/// Scaled Gram matrix of fiber_columns at one section position.
ComplexMatrix gramian_at(const FiberContext& ctx, const std::vector<Spectrum>& phi, std::size_t omega_pos);

/// Count of singular values above tol_rel * (largest singular value).
int numerical_rank(const ComplexMatrix& mat, double tol_rel = kDefaultTolerance);

/// dim_V(omega) for every section representative, in section order.
std::vector<int> dim_function(const FiberContext& ctx, const std::vector<Signal>& phi,
                              double tol_rel = kDefaultTolerance);
std::vector<int> dim_function(const FiberContext& ctx, const std::vector<Spectrum>& phi,
                              double tol_rel = kDefaultTolerance);

struct MembershipResult {
    bool member = true;
    /// Relative least-squares residual per section position (0 for zero fibers).
    std::vector<double> residuals;
};

/// Least-squares residual of `target` against the column span of `basis`,
/// relative to the norm of `target`. Zero targets give 0.
double relative_residual(const ComplexMatrix& basis, const ComplexVector& target, double tol_rel);

MembershipResult fiber_membership(const FiberContext& ctx, const std::vector<Signal>& phi, const Signal& g,
                                  double tol_rel = kDefaultTolerance);
MembershipResult fiber_membership(const FiberContext& ctx, const std::vector<Spectrum>& phi, const Spectrum& g,
                                  double tol_rel = kDefaultTolerance);

/// dft of each signal with rounding residue chopped (see chop()).
std::vector<Spectrum> spectra_of(const std::vector<Signal>& signals);

}  // namespace sis

#endif  // SIS_FIBERING_HPP
