// Brute-force ground truth in the full |G|-dimensional signal space.
//
// Nothing here goes through fibers, Gramians or Eigen: spans are built from
// explicit translates and tested with a modified Gram-Schmidt process (with
// one reorthogonalization pass). Only group.hpp and spectral.hpp are shared
// with the fiber-side code.

#ifndef SIS_ORACLE_HPP
#define SIS_ORACLE_HPP

#include <vector>

#include "sis/errors.hpp"
#include "sis/group.hpp"
#include "sis/spectral.hpp"

namespace sis::oracle {

inline constexpr double kDefaultTolerance = 1e-9;

/// Time-domain vectors of E_K(Phi) = { t_k phi : phi in Phi, k in K }.
struct SpanBasis {
    Group group;
    std::vector<std::vector<Complex>> columns;
};

SpanBasis make_span_basis(const Group& g, const Subgroup& k, const std::vector<Signal>& phi);

/// Orthonormal basis grown one vector at a time.
class OrthonormalSet {
public:
    /// Vectors with norm <= zero_floor are treated as 0.
    explicit OrthonormalSet(std::size_t dim, double zero_floor = 0.0) : dim_(dim), zero_floor_(zero_floor) {}

    /// Adds the component of v orthogonal to the current span when it is
    /// larger than tol_rel * ||v||. Returns whether the span grew.
    bool add(const std::vector<Complex>& v, double tol_rel);
    /// ||v - P v|| / ||v||, 0 for (numerically) zero v.
    double relative_residual(const std::vector<Complex>& v) const;
    std::size_t size() const { return basis_.size(); }

private:
    std::vector<Complex> orthogonal_part(const std::vector<Complex>& v) const;

    std::size_t dim_;
    double zero_floor_;
    std::vector<std::vector<Complex>> basis_;
};

/// Gram-Schmidt over the columns; the zero floor is 1e-12 times the largest
/// column norm.
OrthonormalSet orthonormalize(const SpanBasis& basis, double tol_rel = kDefaultTolerance);

double brute_span_residual(const SpanBasis& basis, const Signal& g, double tol_rel = kDefaultTolerance);
bool brute_span_membership(const SpanBasis& basis, const Signal& g, double tol_rel = kDefaultTolerance);

/// { x : t_x phi in S_H(Phi) for all phi }; throws InconsistencyError when
/// the raw set is not already a subgroup.
Subgroup brute_invariance_set(const Group& g, const Subgroup& h, const std::vector<Signal>& phi,
                              double tol_rel = kDefaultTolerance);

struct DecompositionCheck {
    /// Every cut-off phi^sigma lies in S_H(Phi).
    bool holds = true;
    std::size_t dim_s = 0;
    /// sum_sigma dim span E_H(Phi^sigma).
    std::size_t dim_sum = 0;
    double worst_residual = 0.0;
};

/// Dense containment test U_sigma within S for every sigma, with B_sigma
/// derived from coset arithmetic alone.
DecompositionCheck brute_decomposition_check(const Group& g, const Subgroup& h, const Subgroup& m,
                                             const std::vector<Signal>& phi, double tol_rel = kDefaultTolerance);

}  // namespace sis::oracle

#endif  // SIS_ORACLE_HPP
