#include "symprod/fractal_function.hpp"

#include "symprod/core.hpp"
#include "symprod/random.hpp"

#include <cmath>

namespace symprod {

namespace {

void check_weierstrass(double a, double b, int terms)
{
    if (!(a > 0.0 && a < 1.0)) throw InvalidArgument("Weierstrass parameter a must lie in (0, 1)");
    if (!(b > 1.0)) throw InvalidArgument("Weierstrass parameter b must exceed 1");
    if (terms < 0) throw InvalidArgument("term count must be non-negative");
}

double frac(double x) { return x - std::floor(x); }

}  // namespace

double triangle_wave(double x)
{
    const double y = frac(x);
    return y <= 0.5 ? 2.0 * y : 2.0 * (1.0 - y);
}

FractalFunction FractalFunction::weierstrass(double a, double b, int terms)
{
    check_weierstrass(a, b, terms);
    FractalFunction f;
    f.family_ = FractalFamily::weierstrass;
    f.a_ = a;
    f.b_ = b;
    f.terms_ = terms;
    f.phases_.assign(terms + 1, 0.0);
    for (int n = 0; n <= terms; ++n) {
        f.amplitudes_.push_back(std::pow(a, n));
        f.frequencies_.push_back(std::pow(b, n));
    }
    return f;
}

FractalFunction FractalFunction::weierstrass_phase(double a, double b, int terms, std::vector<double> phases)
{
    if (phases.size() != static_cast<std::size_t>(terms) + 1)
        throw InvalidArgument("phase-shifted Weierstrass needs terms + 1 phases");
    for (double p : phases)
        if (!(p >= 0.0 && p < 1.0)) throw InvalidArgument("phases must lie in [0, 1)");
    FractalFunction f = weierstrass(a, b, terms);
    f.family_ = FractalFamily::weierstrass_phase;
    f.phases_ = std::move(phases);
    return f;
}

FractalFunction FractalFunction::weierstrass_phase(double a, double b, int terms, std::uint64_t seed)
{
    RandomStream rng(seed, 0x9a5e);
    std::vector<double> phases(static_cast<std::size_t>(std::max(terms, 0)) + 1);
    for (double& p : phases) p = rng.uniform();
    return weierstrass_phase(a, b, terms, std::move(phases));
}

FractalFunction FractalFunction::xiao_zhou(double a, double alpha, double beta, int terms)
{
    if (!(a > 0.0 && a < 1.0)) throw InvalidArgument("Xiao-Zhou parameter a must lie in (0, 1)");
    if (!(alpha > 1.0 && beta > alpha)) throw InvalidArgument("Xiao-Zhou parameters need 1 < alpha < beta");
    if (terms < 1) throw InvalidArgument("Xiao-Zhou series needs at least one term");
    FractalFunction f;
    f.family_ = FractalFamily::xiao_zhou;
    f.a_ = a;
    f.alpha_ = alpha;
    f.beta_ = beta;
    f.terms_ = terms;
    for (int n = 1; n <= terms; ++n) {
        f.amplitudes_.push_back(std::pow(a, std::pow(n, alpha)));
        f.frequencies_.push_back(std::pow(a, -std::pow(n, beta)));
    }
    return f;
}

double FractalFunction::operator()(double x) const
{
    double sum = 0.0;
    if (family_ == FractalFamily::xiao_zhou) {
        for (std::size_t n = 0; n < amplitudes_.size(); ++n)
            sum += amplitudes_[n] * triangle_wave(frequencies_[n] * x);
        return sum;
    }
    // Reduce b^n x modulo 1 before the cosine; terms with frac() precision loss
    // have amplitude below the double resolution of the sum anyway.
    for (std::size_t n = 0; n < amplitudes_.size(); ++n)
        sum += amplitudes_[n] * std::cos(kTwoPi * frac(frequencies_[n] * x + phases_[n]));
    return sum;
}

double FractalFunction::truncation_bound() const
{
    if (family_ == FractalFamily::xiao_zhou) {
        const double next = std::pow(a_, std::pow(terms_ + 1, alpha_));
        return next / (1.0 - a_);
    }
    return std::pow(a_, terms_ + 1) / (1.0 - a_);
}

double FractalFunction::sup_bound() const
{
    double s = 0.0;
    for (double v : amplitudes_) s += v;
    return s;
}

double FractalFunction::graph_dimension() const
{
    if (family_ == FractalFamily::xiao_zhou) return 2.0;
    return 2.0 + std::log(a_) / std::log(b_);
}

bool FractalFunction::is_periodic() const
{
    if (family_ == FractalFamily::xiao_zhou) return false;
    return b_ == std::floor(b_);
}

}  // namespace symprod
