// Helpers shared by the unit and acceptance suites.

#ifndef SIS_TEST_SUPPORT_HPP
#define SIS_TEST_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "sis/group.hpp"
#include "sis/invariance.hpp"
#include "sis/spectral.hpp"

namespace sis::testing {

inline Element el(std::initializer_list<std::int64_t> c) { return Element{std::vector<std::int64_t>(c)}; }

inline std::vector<std::size_t> idx(std::initializer_list<std::size_t> c) { return {c}; }

inline double max_abs_diff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

inline double max_abs(const std::vector<Complex>& a) {
    double d = 0.0;
    for (const auto& v : a) d = std::max(d, std::abs(v));
    return d;
}

/// Z_8, H = {0,4}, phi^ = chi_{0,1,4,5}.
struct RunningExample {
    Group g{{8}};
    Subgroup h = subgroup_closure(g, {el({4})});
    Subgroup m = subgroup_closure(g, {el({2})});
    Spectrum phi_hat = Spectrum::indicator(g, {0, 1, 4, 5});
    Signal phi = idft(phi_hat);
};

inline Signal random_signal(const Group& g, std::mt19937_64& rng) {
    std::normal_distribution<double> nd;
    std::vector<Complex> v(g.order());
    for (auto& x : v) x = {nd(rng), nd(rng)};
    return Signal(g, std::move(v));
}

/// Small-integer spectrum with the given fraction of nonzero entries.
inline Spectrum random_integer_spectrum(const Group& g, double density, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_int_distribution<int> val(-3, 3);
    std::vector<Complex> v(g.order());
    for (auto& x : v) {
        if (u(rng) >= density) continue;
        int re = 0;
        while (re == 0) re = val(rng);
        x = {static_cast<double>(re), static_cast<double>(val(rng))};
    }
    return Spectrum(g, std::move(v));
}

inline Subgroup random_subgroup(const Group& g, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
    std::uniform_int_distribution<int> count(0, 2);
    std::vector<Element> gens;
    for (int i = count(rng); i > 0; --i) gens.push_back(g.element(pick(rng)));
    return subgroup_closure(g, gens);
}

/// The groups named for the randomized equivalence criteria.
inline std::vector<Group> randomized_test_groups() {
    std::vector<Group> out;
    for (std::int64_t n = 1; n <= 24; ++n) out.emplace_back(std::vector<std::int64_t>{n});
    out.emplace_back(std::vector<std::int64_t>{2, 4});
    out.emplace_back(std::vector<std::int64_t>{2, 2, 2});
    out.emplace_back(std::vector<std::int64_t>{3, 9});
    return out;
}

struct RandomInstance {
    Group g;
    Subgroup h;
    Subgroup m;
    std::vector<Spectrum> spectra;
    std::vector<Signal> signals;
    bool masked = false;
};

/// Random (G, H, M >= H, Phi). With `masked` each generator is restricted to
/// one random B_sigma, which makes S_H(Phi) M-invariant.
inline RandomInstance random_instance(std::mt19937_64& rng) {
    static const auto groups = randomized_test_groups();
    std::uniform_int_distribution<std::size_t> gpick(0, groups.size() - 1);
    const Group g = groups[gpick(rng)];
    const Subgroup h = random_subgroup(g, rng);
    const auto above = subgroups_between(g, h);
    std::uniform_int_distribution<std::size_t> mpick(0, above.size() - 1);
    const Subgroup m = above[mpick(rng)];

    std::uniform_int_distribution<int> ell(1, 3);
    std::uniform_real_distribution<double> dens(0.25, 0.75);
    std::bernoulli_distribution coin(0.5);
    const bool masked = coin(rng);
    const auto ictx = refine_context(make_fiber_context(g, h), m);
    std::uniform_int_distribution<std::size_t> spick(0, ictx.block_count() - 1);

    std::vector<Spectrum> spectra;
    for (int i = ell(rng); i > 0; --i) {
        auto s = random_integer_spectrum(g, dens(rng), rng);
        if (masked) s = cutoff(ictx, s, spick(rng));
        spectra.push_back(std::move(s));
    }
    std::vector<Signal> signals;
    for (const auto& s : spectra) signals.push_back(idft(s));
    return RandomInstance{g, h, m, std::move(spectra), std::move(signals), masked};
}

}  // namespace sis::testing

#endif  // SIS_TEST_SUPPORT_HPP
