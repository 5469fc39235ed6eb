#include "sis/fibering.hpp"

#include <stdexcept>

namespace sis {

FiberContext make_fiber_context(const Group& g, const Subgroup& k) {
    if (!(k.parent() == g)) throw std::invalid_argument("fiber context: subgroup lives in a different group");
    Subgroup kstar = annihilator(g, k);
    Transversal section = transversal(g, kstar);
    return FiberContext{g, k, std::move(kstar), std::move(section)};
}

// Fiber entries carry the K* point mass, section points carry the m_Gamma
// point mass; both are 1/|G|.
double FiberMatrix::norm_squared() const {
    return columns.squaredNorm() * context.point_mass() * context.point_mass();
}

FiberMatrix fiberize(const FiberContext& ctx, const Spectrum& F) {
    if (!(F.group == ctx.group)) throw std::invalid_argument("fiberize: spectrum lives on a different group");
    const auto len = static_cast<Eigen::Index>(ctx.fiber_length());
    const auto cols = static_cast<Eigen::Index>(ctx.section_size());
    ComplexMatrix m(len, cols);
    for (Eigen::Index c = 0; c < cols; ++c) {
        for (Eigen::Index j = 0; j < len; ++j) {
            m(j, c) = F.values[ctx.frequency(static_cast<std::size_t>(c), static_cast<std::size_t>(j))];
        }
    }
    return FiberMatrix{ctx, std::move(m)};
}

FiberMatrix fiberize(const FiberContext& ctx, const Signal& f) { return fiberize(ctx, dft(f)); }

ComplexMatrix fiber_columns(const FiberContext& ctx, const std::vector<Spectrum>& phi, std::size_t omega_pos) {
    const auto len = static_cast<Eigen::Index>(ctx.fiber_length());
    ComplexMatrix m(len, static_cast<Eigen::Index>(phi.size()));
    for (std::size_t i = 0; i < phi.size(); ++i) {
        for (Eigen::Index j = 0; j < len; ++j) {
            m(j, static_cast<Eigen::Index>(i)) = phi[i].values[ctx.frequency(omega_pos, static_cast<std::size_t>(j))];
        }
    }
    return m;
}

ComplexMatrix gramian_at(const FiberContext& ctx, const std::vector<Spectrum>& phi, std::size_t omega_pos) {
    const ComplexMatrix cols = fiber_columns(ctx, phi, omega_pos);
    // [G]_{ij} = m_{K*}({0}) <fiber_i, fiber_j>, linear in the first slot.
    return (cols.transpose() * cols.conjugate()) * ctx.point_mass();
}

Gramian gramian(const FiberContext& ctx, const std::vector<Signal>& phi, const Element& omega) {
    if (phi.empty()) throw std::invalid_argument("gramian: generator list is empty");
    const auto pos = ctx.section.find_rep(ctx.group.index(omega));
    if (pos == Transversal::npos) {
        throw std::invalid_argument("gramian: " + to_string(omega) + " is not a section representative");
    }
    return Gramian{omega, gramian_at(ctx, spectra_of(phi), pos)};
}

int numerical_rank(const ComplexMatrix& mat, double tol_rel) {
    if (mat.size() == 0) return 0;
    Eigen::JacobiSVD<ComplexMatrix> svd(mat);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) == 0.0) return 0;
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > tol_rel * sv(0)) ++rank;
    }
    return rank;
}

std::vector<int> dim_function(const FiberContext& ctx, const std::vector<Spectrum>& phi, double tol_rel) {
    std::vector<int> dims(ctx.section_size(), 0);
    if (phi.empty()) return dims;
    for (std::size_t w = 0; w < ctx.section_size(); ++w) dims[w] = numerical_rank(gramian_at(ctx, phi, w), tol_rel);
    return dims;
}

std::vector<int> dim_function(const FiberContext& ctx, const std::vector<Signal>& phi, double tol_rel) {
    return dim_function(ctx, spectra_of(phi), tol_rel);
}

double relative_residual(const ComplexMatrix& basis, const ComplexVector& target, double tol_rel) {
    const double tnorm = target.norm();
    if (tnorm == 0.0) return 0.0;
    if (basis.cols() == 0) return 1.0;
    Eigen::JacobiSVD<ComplexMatrix> svd(basis, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) == 0.0) return 1.0;
    // Project onto the left singular vectors that carry numerical rank.
    ComplexVector projected = ComplexVector::Zero(target.size());
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) <= tol_rel * sv(0)) break;
        const auto u = svd.matrixU().col(i);
        projected += u * u.dot(target);
    }
    return (target - projected).norm() / tnorm;
}

MembershipResult fiber_membership(const FiberContext& ctx, const std::vector<Spectrum>& phi, const Spectrum& g,
                                  double tol_rel) {
    MembershipResult out;
    out.residuals.assign(ctx.section_size(), 0.0);
    for (std::size_t w = 0; w < ctx.section_size(); ++w) {
        ComplexVector target(static_cast<Eigen::Index>(ctx.fiber_length()));
        for (std::size_t j = 0; j < ctx.fiber_length(); ++j) {
            target(static_cast<Eigen::Index>(j)) = g.values[ctx.frequency(w, j)];
        }
        out.residuals[w] = relative_residual(fiber_columns(ctx, phi, w), target, tol_rel);
        if (out.residuals[w] > tol_rel) out.member = false;
    }
    return out;
}

MembershipResult fiber_membership(const FiberContext& ctx, const std::vector<Signal>& phi, const Signal& g,
                                  double tol_rel) {
    return fiber_membership(ctx, spectra_of(phi), chop(dft(g)), tol_rel);
}

std::vector<Spectrum> spectra_of(const std::vector<Signal>& signals) {
    std::vector<Spectrum> out;
    out.reserve(signals.size());
    for (const auto& s : signals) out.push_back(chop(dft(s)));
    return out;
}

}  // namespace sis
