#include "sis/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sis::oracle {

namespace {

double norm(const std::vector<Complex>& v) {
    double acc = 0.0;
    for (const auto& x : v) acc += std::norm(x);
    return std::sqrt(acc);
}

// <u, v> = sum conj(u_i) v_i
Complex inner(const std::vector<Complex>& u, const std::vector<Complex>& v) {
    Complex acc{};
    for (std::size_t i = 0; i < u.size(); ++i) acc += std::conj(u[i]) * v[i];
    return acc;
}

}  // namespace

SpanBasis make_span_basis(const Group& g, const Subgroup& k, const std::vector<Signal>& phi) {
    SpanBasis out{g, {}};
    out.columns.reserve(phi.size() * k.order());
    for (const auto& f : phi) {
        if (!(f.group == g)) throw std::invalid_argument("span basis: generator lives on a different group");
        for (auto x : k.elements()) out.columns.push_back(translate(f, x).values);
    }
    return out;
}

std::vector<Complex> OrthonormalSet::orthogonal_part(const std::vector<Complex>& v) const {
    auto r = v;
    for (int pass = 0; pass < 2; ++pass) {
        for (const auto& q : basis_) {
            const Complex c = inner(q, r);
            for (std::size_t i = 0; i < dim_; ++i) r[i] -= c * q[i];
        }
    }
    return r;
}

bool OrthonormalSet::add(const std::vector<Complex>& v, double tol_rel) {
    if (v.size() != dim_) throw std::invalid_argument("orthonormal set: dimension mismatch");
    const double vn = norm(v);
    if (vn <= zero_floor_ || vn == 0.0) return false;
    auto r = orthogonal_part(v);
    const double rn = norm(r);
    if (rn <= tol_rel * vn) return false;
    for (auto& x : r) x /= rn;
    basis_.push_back(std::move(r));
    return true;
}

double OrthonormalSet::relative_residual(const std::vector<Complex>& v) const {
    if (v.size() != dim_) throw std::invalid_argument("orthonormal set: dimension mismatch");
    const double vn = norm(v);
    if (vn <= zero_floor_ || vn == 0.0) return 0.0;
    return norm(orthogonal_part(v)) / vn;
}

OrthonormalSet orthonormalize(const SpanBasis& basis, double tol_rel) {
    double scale = 0.0;
    for (const auto& c : basis.columns) scale = std::max(scale, norm(c));
    OrthonormalSet q(basis.group.order(), 1e-12 * scale);
    for (const auto& c : basis.columns) q.add(c, tol_rel);
    return q;
}

double brute_span_residual(const SpanBasis& basis, const Signal& g, double tol_rel) {
    if (!(g.group == basis.group)) throw std::invalid_argument("span membership: group mismatch");
    return orthonormalize(basis, tol_rel).relative_residual(g.values);
}

bool brute_span_membership(const SpanBasis& basis, const Signal& g, double tol_rel) {
    return brute_span_residual(basis, g, tol_rel) <= tol_rel;
}

Subgroup brute_invariance_set(const Group& g, const Subgroup& h, const std::vector<Signal>& phi, double tol_rel) {
    const auto q = orthonormalize(make_span_basis(g, h, phi), tol_rel);
    std::vector<std::size_t> raw;
    for (std::size_t x = 0; x < g.order(); ++x) {
        const bool keeps = std::all_of(phi.begin(), phi.end(), [&](const Signal& f) {
            return q.relative_residual(translate(f, x).values) <= tol_rel;
        });
        if (keeps) raw.push_back(x);
    }
    std::vector<Element> gens;
    for (auto x : raw) gens.push_back(g.element(x));
    Subgroup closed = subgroup_closure(g, gens);
    if (closed.elements() != raw) throw InconsistencyError("brute invariance set is not closed under addition");
    return subgroup_from_elements(g, std::move(raw));
}

DecompositionCheck brute_decomposition_check(const Group& g, const Subgroup& h, const Subgroup& m,
                                             const std::vector<Signal>& phi, double tol_rel) {
    if (!h.is_subset_of(m)) throw std::invalid_argument("decomposition check: M does not contain H");
    const Subgroup hstar = annihilator(g, h);
    const Subgroup mstar = annihilator(g, m);
    const Transversal omega = transversal(g, hstar);
    const Transversal sigmas = transversal(hstar, mstar);

    // gamma = omega + h*, and h* = sigma + m*: gamma lies in B_sigma.
    std::vector<std::size_t> block_of(g.order());
    for (std::size_t gamma = 0; gamma < g.order(); ++gamma) {
        const auto rep = omega.reps()[omega.rep_position(gamma)];
        block_of[gamma] = sigmas.rep_position(g.sub(gamma, rep));
    }

    const auto q = orthonormalize(make_span_basis(g, h, phi), tol_rel);
    DecompositionCheck out;
    out.dim_s = q.size();
    for (std::size_t s = 0; s < sigmas.size(); ++s) {
        std::vector<Signal> cut;
        for (const auto& f : phi) {
            auto spec = chop(dft(f));
            for (std::size_t gamma = 0; gamma < g.order(); ++gamma) {
                if (block_of[gamma] != s) spec.values[gamma] = 0.0;
            }
            cut.push_back(idft(spec));
        }
        out.dim_sum += orthonormalize(make_span_basis(g, h, cut), tol_rel).size();
        for (const auto& c : cut) {
            for (auto x : h.elements()) {
                const double r = q.relative_residual(translate(c, x).values);
                out.worst_residual = std::max(out.worst_residual, r);
                if (r > tol_rel) out.holds = false;
            }
        }
    }
    // With every U_sigma inside S the sum is direct and exhausts S.
    if (out.dim_s != out.dim_sum) out.holds = false;
    return out;
}

}  // namespace sis::oracle
