#pragma once

#include <cstdint>
#include <vector>

namespace symprod {

enum class FractalFamily { weierstrass, weierstrass_phase, xiao_zhou };

/// Truncated lacunary series with fractal graphs.
///
///   weierstrass:        sum_{n=0}^{K} a^n cos(2 pi b^n x)
///   weierstrass_phase:  sum_{n=0}^{K} a^n cos(2 pi (b^n x + theta_n))
///   xiao_zhou:          sum_{n=1}^{K} a^{n^alpha} phi(a^{-n^beta} x),
///                       phi the even 1-periodic triangle wave with phi(x) = 2x on [0, 1/2]
class FractalFunction {
public:
    static FractalFunction weierstrass(double a, double b, int terms);
    static FractalFunction weierstrass_phase(double a, double b, int terms, std::vector<double> phases);
    /// Phases theta_0..theta_K drawn i.i.d. uniform on [0, 1) from the seeded stream.
    static FractalFunction weierstrass_phase(double a, double b, int terms, std::uint64_t seed);
    static FractalFunction xiao_zhou(double a, double alpha, double beta, int terms);

    double operator()(double x) const;

    FractalFamily family() const { return family_; }
    int terms() const { return terms_; }
    double a() const { return a_; }
    double b() const { return b_; }
    const std::vector<double>& phases() const { return phases_; }

    /// Bound on |f - f_infinity| from the dropped tail (geometric families).
    double truncation_bound() const;
    /// Sum of term amplitudes: |f| <= sup_bound() (f in [0, sup_bound()] for xiao_zhou).
    double sup_bound() const;
    /// Box dimension of the Weierstrass graph, 2 + log a / log b.
    double graph_dimension() const;
    /// True when f(x + 1) = f(x) (integer b for the Weierstrass families).
    bool is_periodic() const;

private:
    FractalFamily family_ = FractalFamily::weierstrass;
    double a_ = 0.5;
    double b_ = 3.0;
    double alpha_ = 0.0;
    double beta_ = 0.0;
    int terms_ = 0;
    std::vector<double> phases_;
    std::vector<double> amplitudes_;
    std::vector<double> frequencies_;
};

double triangle_wave(double x);

}  // namespace symprod
