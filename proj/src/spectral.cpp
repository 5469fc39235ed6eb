#include "sis/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sis {

namespace {

void check_length(const Group& g, std::size_t n, const char* what) {
    if (n != g.order()) {
        throw std::invalid_argument(std::string(what) + " has " + std::to_string(n) + " values, group order is " +
                                    std::to_string(g.order()));
    }
}

// roots[p] = exp(2 pi i p / exponent)
std::vector<Complex> unit_roots(const Group& g) {
    const auto n = g.exponent();
    std::vector<Complex> roots(static_cast<std::size_t>(n));
    roots[0] = {1.0, 0.0};
    for (std::int64_t p = 1; p < n; ++p) {
        roots[static_cast<std::size_t>(p)] =
            std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(p) / static_cast<double>(n));
    }
    return roots;
}

}  // namespace

Signal::Signal(Group g, std::vector<Complex> v) : group(std::move(g)), values(std::move(v)) {
    check_length(group, values.size(), "signal");
}

Signal Signal::zero(const Group& g) { return Signal(g, std::vector<Complex>(g.order())); }

Signal Signal::delta(const Group& g, std::size_t at) {
    auto s = zero(g);
    s.values.at(at) = 1.0;
    return s;
}

Spectrum::Spectrum(Group g, std::vector<Complex> v) : group(std::move(g)), values(std::move(v)) {
    check_length(group, values.size(), "spectrum");
}

Spectrum Spectrum::zero(const Group& g) { return Spectrum(g, std::vector<Complex>(g.order())); }

Spectrum Spectrum::indicator(const Group& g, const std::vector<std::size_t>& support) {
    auto s = zero(g);
    for (auto i : support) s.values.at(i) = 1.0;
    return s;
}

Spectrum dft(const Signal& f) {
    const Group& g = f.group;
    const auto roots = unit_roots(g);
    const auto e = static_cast<std::size_t>(g.exponent());
    std::vector<Complex> out(g.order());
    for (std::size_t gamma = 0; gamma < g.order(); ++gamma) {
        Complex acc{};
        for (std::size_t x = 0; x < g.order(); ++x) {
            if (f.values[x] == Complex{}) continue;
            const auto p = static_cast<std::size_t>(g.pairing_phase(x, gamma));
            acc += f.values[x] * roots[(e - p) % e];
        }
        out[gamma] = acc;
    }
    return Spectrum(g, std::move(out));
}

Signal idft(const Spectrum& F) {
    const Group& g = F.group;
    const auto roots = unit_roots(g);
    const double scale = 1.0 / static_cast<double>(g.order());
    std::vector<Complex> out(g.order());
    for (std::size_t x = 0; x < g.order(); ++x) {
        Complex acc{};
        for (std::size_t gamma = 0; gamma < g.order(); ++gamma) {
            if (F.values[gamma] == Complex{}) continue;
            acc += F.values[gamma] * roots[static_cast<std::size_t>(g.pairing_phase(x, gamma))];
        }
        out[x] = acc * scale;
    }
    return Signal(g, std::move(out));
}

Signal translate(const Signal& f, std::size_t y) {
    const Group& g = f.group;
    if (y >= g.order()) throw std::out_of_range("translate: shift index out of range");
    std::vector<Complex> out(g.order());
    for (std::size_t x = 0; x < g.order(); ++x) out[g.add(x, y)] = f.values[x];
    return Signal(g, std::move(out));
}

Signal translate(const Signal& f, const Element& y) { return translate(f, f.group.index(y)); }

double norm_squared(const Signal& f) {
    double acc = 0.0;
    for (const auto& v : f.values) acc += std::norm(v);
    return acc;
}

double norm_squared(const Spectrum& F) {
    double acc = 0.0;
    for (const auto& v : F.values) acc += std::norm(v);
    return acc / static_cast<double>(F.group.order());
}

Spectrum chop(const Spectrum& F, double rel) {
    double peak = 0.0;
    for (const auto& v : F.values) peak = std::max(peak, std::abs(v));
    auto out = F;
    for (auto& v : out.values) {
        if (std::abs(v) <= rel * peak) v = 0.0;
    }
    return out;
}

Spectrum multiply(const Spectrum& F, const std::vector<Complex>& mask) {
    check_length(F.group, mask.size(), "mask");
    auto out = F;
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] *= mask[i];
    return out;
}

}  // namespace sis
