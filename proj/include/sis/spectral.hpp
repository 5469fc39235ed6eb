// Fourier analysis on a finite abelian group.
//
// Normalization: m_G is counting measure and m_Gamma is counting measure
// divided by |G|, so
//     dft(f)(gamma)  = sum_x f(x) conj((x, gamma))
//     idft(F)(x)     = (1/|G|) sum_gamma F(gamma) (x, gamma)
// and Plancherel reads (1/|G|) sum |F|^2 = sum |f|^2.

#ifndef SIS_SPECTRAL_HPP
#define SIS_SPECTRAL_HPP

#include <vector>

#include "sis/group.hpp"

namespace sis {

/// A function on G, indexed by flat element index.
struct Signal {
    Group group;
    std::vector<Complex> values;

    Signal(Group g, std::vector<Complex> v);
    static Signal zero(const Group& g);
    static Signal delta(const Group& g, std::size_t at);
};

/// A function on the dual group (identified with G), indexed like Signal.
struct Spectrum {
    Group group;
    std::vector<Complex> values;

    Spectrum(Group g, std::vector<Complex> v);
    static Spectrum zero(const Group& g);
    /// Characteristic function of a set of flat indices.
    static Spectrum indicator(const Group& g, const std::vector<std::size_t>& support);
};

Spectrum dft(const Signal& f);
Signal idft(const Spectrum& F);

/// (t_y f)(x) = f(x - y).
Signal translate(const Signal& f, const Element& y);
Signal translate(const Signal& f, std::size_t y);

/// Sum of |f(x)|^2 with counting measure.
double norm_squared(const Signal& f);
/// Sum of |F(gamma)|^2 weighted by 1/|G|.
double norm_squared(const Spectrum& F);

/// Sets entries with |F(gamma)| <= rel * max|F| to exact zero. Removes the
/// rounding residue a transform leaves where the true value is 0.
Spectrum chop(const Spectrum& F, double rel = 1e-12);

/// Pointwise product F * mask.
Spectrum multiply(const Spectrum& F, const std::vector<Complex>& mask);

}  // namespace sis

#endif  // SIS_SPECTRAL_HPP
