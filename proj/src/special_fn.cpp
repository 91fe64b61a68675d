#include "spdkern/special_fn.hpp"

#include <cmath>

namespace spdkern {

namespace {

constexpr double kDomainSlack = 1e-14;

double clamp_domain(double t, const char* who) {
    if (t < -1.0 - kDomainSlack || t > 1.0 + kDomainSlack)
        throw error(std::string(who) + ": argument " + std::to_string(t) + " outside [-1, 1]");
    if (t > 1.0) return 1.0;
    if (t < -1.0) return -1.0;
    return t;
}

}  // namespace

JacobiParams make_jacobi(double alpha, double beta) {
    if (!(alpha > -1.0) || !(beta > -1.0))
        throw error("make_jacobi: alpha and beta must both exceed -1");
    return JacobiParams{alpha, beta};
}

double jacobi_eval(const JacobiParams& p, int degree, double t) {
    if (degree < 0) throw error("jacobi_eval: negative degree");
    t = clamp_domain(t, "jacobi_eval");
    const double a = p.alpha, b = p.beta, ab = a + b;
    double pm2 = 1.0;
    if (degree == 0) return pm2;
    double pm1 = 0.5 * ((ab + 2.0) * t + (a - b));
    // Three-term recurrence. The leading factor 2n(n+a+b)(2n+a+b-2) is
    // positive for n >= 2 whenever a, b > -1, so no denominator vanishes.
    for (int n = 2; n <= degree; ++n) {
        const double c1 = 2.0 * n * (n + ab) * (2.0 * n + ab - 2.0);
        const double c2 = (2.0 * n + ab - 1.0) * (a * a - b * b);
        const double c3 = (2.0 * n + ab - 1.0) * (2.0 * n + ab) * (2.0 * n + ab - 2.0);
        const double c4 = 2.0 * (n + a - 1.0) * (n + b - 1.0) * (2.0 * n + ab);
        const double pn = ((c3 * t + c2) * pm1 - c4 * pm2) / c1;
        pm2 = pm1;
        pm1 = pn;
    }
    if (!std::isfinite(pm1))
        throw error("jacobi_eval: overflow at degree " + std::to_string(degree) +
                    " (alpha=" + std::to_string(a) + ", beta=" + std::to_string(b) + ")");
    return pm1;
}

std::vector<double> jacobi_eval_range(const JacobiParams& p, int max_degree, double t) {
    if (max_degree < 0) throw error("jacobi_eval_range: negative degree");
    t = clamp_domain(t, "jacobi_eval_range");
    std::vector<double> out(static_cast<size_t>(max_degree) + 1);
    const double a = p.alpha, b = p.beta, ab = a + b;
    out[0] = 1.0;
    if (max_degree == 0) return out;
    out[1] = 0.5 * ((ab + 2.0) * t + (a - b));
    for (int n = 2; n <= max_degree; ++n) {
        const double c1 = 2.0 * n * (n + ab) * (2.0 * n + ab - 2.0);
        const double c2 = (2.0 * n + ab - 1.0) * (a * a - b * b);
        const double c3 = (2.0 * n + ab - 1.0) * (2.0 * n + ab) * (2.0 * n + ab - 2.0);
        const double c4 = 2.0 * (n + a - 1.0) * (n + b - 1.0) * (2.0 * n + ab);
        out[n] = ((c3 * t + c2) * out[n - 1] - c4 * out[n - 2]) / c1;
    }
    if (!std::isfinite(out[max_degree]))
        throw error("jacobi_eval_range: overflow at degree " + std::to_string(max_degree));
    return out;
}

double jacobi_at_one(const JacobiParams& p, int degree) {
    if (degree < 0) throw error("jacobi_at_one: negative degree");
    // All Gamma arguments are positive for alpha > -1.
    const long double a = p.alpha;
    const long double v = std::exp(std::lgamma(static_cast<long double>(degree) + a + 1.0L) -
                                   std::lgamma(static_cast<long double>(degree) + 1.0L) -
                                   std::lgamma(a + 1.0L));
    return static_cast<double>(v);
}

double addition_coefficient(const JacobiParams& p, int k) {
    if (k < 0) throw error("addition_coefficient: negative level");
    // c_0 = 1 identically: (a+b+1) Gamma(a+b+1) = Gamma(a+b+2) cancels even in
    // the a+b -> -1 limit where the Gamma factors individually blow up.
    if (k == 0) return 1.0;
    const long double a = p.alpha, b = p.beta;
    const long double kk = static_cast<long double>(k);
    // For k >= 1 every lgamma argument below is positive (a, b > -1).
    const long double lg = std::lgamma(b + 1.0L) + std::log(2.0L * kk + a + b + 1.0L) +
                           std::lgamma(kk + a + b + 1.0L) - std::lgamma(a + b + 2.0L) -
                           std::lgamma(kk + b + 1.0L);
    const long double v = std::exp(lg);
    if (!std::isfinite(static_cast<double>(v)))
        throw error("addition_coefficient: overflow at level " + std::to_string(k));
    return static_cast<double>(v);
}

std::complex<double> circle_basis(long long k, double theta) {
    return std::polar(1.0, static_cast<double>(k) * theta);
}

std::complex<double> sphere2_harmonic(int k, int m, const std::array<double, 3>& p) {
    if (k < 0 || std::abs(m) > k)
        throw error("sphere2_harmonic: need |m| <= k, got k=" + std::to_string(k) +
                    " m=" + std::to_string(m));
    const double nrm = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
    if (std::abs(nrm - 1.0) > 1e-12)
        throw error("sphere2_harmonic: point not on the unit sphere (|p| = " +
                    std::to_string(nrm) + ")");
    const int mm = std::abs(m);
    const double x = p[2] / nrm;
    const double s = std::sqrt(std::max(0.0, 1.0 - x * x));
    // Fully normalized associated Legendre recurrence: with probability-measure
    // normalization Q_{0,0} = 1 and sum_m |Y_{k,m}|^2 = 2k+1. Stays O(sqrt(2k+1))
    // throughout, so no overflow for any practical degree.
    double qmm = 1.0;
    for (int i = 1; i <= mm; ++i) qmm *= -s * std::sqrt((2.0 * i + 1.0) / (2.0 * i));
    double q = qmm;
    if (k > mm) {
        double qlm1 = qmm;
        double ql = x * std::sqrt(2.0 * mm + 3.0) * qmm;
        for (int l = mm + 2; l <= k; ++l) {
            const double den = static_cast<double>(l) * l - static_cast<double>(mm) * mm;
            const double al = std::sqrt((4.0 * l * l - 1.0) / den);
            const double bl = std::sqrt((2.0 * l + 1.0) * (l - 1.0 - mm) * (l - 1.0 + mm) /
                                        ((2.0 * l - 3.0) * den));
            const double next = al * x * ql - bl * qlm1;
            qlm1 = ql;
            ql = next;
        }
        q = ql;
    }
    const double phi = std::atan2(p[1], p[0]);
    std::complex<double> y = q * std::polar(1.0, mm * phi);
    if (m < 0) {
        y = std::conj(y);
        if (mm % 2 != 0) y = -y;
    }
    return y;
}

}  // namespace spdkern
