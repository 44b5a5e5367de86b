#include "epdiff/special.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace epdiff {

double gamma_fn(double x) {
    if (!(x > 0.0))
        throw std::invalid_argument("gamma_fn: argument must be positive, got " +
                                    std::to_string(x));
    return std::tgamma(x);
}

namespace {

constexpr double kOrderMax = 6.0;
constexpr double kZMin = 1e-6;
constexpr double kZMax = 60.0;
constexpr double kEps = 1e-16;
constexpr int kMaxIter = 20000;

// Power-series coefficients of 1/Gamma(x) = sum_k c_k x^k (Abramowitz &
// Stegun 6.1.34), enough terms for full double precision on |x| <= 1/2.
constexpr double kInvGamma[] = {
    1.0000000000000000e+00,  5.7721566490153286e-01, -6.5587807152025388e-01,
    -4.2002635034095236e-02, 1.6653861138229149e-01, -4.2197734555544337e-02,
    -9.6219715278769736e-03, 7.2189432466630995e-03, -1.1651675918590651e-03,
    -2.1524167411495097e-04, 1.2805028238811619e-04, -2.0134854780788239e-05,
    -1.2504934821426707e-06, 1.1330272319816959e-06, -2.0563384169776071e-07,
    6.1160951044814158e-09,  5.0020076444692229e-09, -1.1812745704870201e-09,
    1.0434267116911005e-10,  7.7822634399050712e-12, -3.6968056186422057e-12,
    5.1003702874544760e-13,  -2.0583260535665067e-14, -5.3481225394230180e-15,
    1.2267786282382608e-15,  -1.1812593016974588e-16,
};

// gam1 = (1/Gamma(1-mu) - 1/Gamma(1+mu)) / (2 mu) and
// gam2 = (1/Gamma(1-mu) + 1/Gamma(1+mu)) / 2, evaluated from the series so
// small mu loses no precision. Requires |mu| <= 1/2.
void temme_gammas(double mu, double& gam1, double& gam2, double& gampl, double& gammi) {
    const double x2 = mu * mu;
    gam1 = 0.0;
    gam2 = 0.0;
    double p = 1.0;
    for (int j = 0; 2 * j < static_cast<int>(sizeof(kInvGamma) / sizeof(double)); ++j) {
        gam2 += kInvGamma[2 * j] * p; // coefficient of x^{2j} in 1/Gamma(1+x)
        if (2 * j + 1 < static_cast<int>(sizeof(kInvGamma) / sizeof(double)))
            gam1 -= kInvGamma[2 * j + 1] * p; // minus coefficient of x^{2j+1}
        p *= x2;
    }
    gampl = gam2 - mu * gam1; // 1/Gamma(1+mu)
    gammi = gam2 + mu * gam1; // 1/Gamma(1-mu)
}

// Temme's series for K_mu, K_{mu+1} at z <= 2, |mu| <= 1/2.
void bessel_k_small(double mu, double z, double& kmu, double& kmu1) {
    const double x1 = 0.5 * z;
    const double pimu = std::numbers::pi * mu;
    const double fact = (std::fabs(pimu) < kEps) ? 1.0 : pimu / std::sin(pimu);
    double d = -std::log(x1);
    double e = mu * d;
    const double fact2 = (std::fabs(e) < kEps) ? 1.0 : std::sinh(e) / e;
    double gam1, gam2, gampl, gammi;
    temme_gammas(mu, gam1, gam2, gampl, gammi);
    double ff = fact * (gam1 * std::cosh(e) + gam2 * fact2 * d);
    double sum = ff;
    e = std::exp(e);
    double p = 0.5 * e / gampl;
    double q = 0.5 / (e * gammi);
    double c = 1.0;
    d = x1 * x1;
    double sum1 = p;
    for (int i = 1; i <= kMaxIter; ++i) {
        ff = (i * ff + p + q) / (i * i - mu * mu);
        c *= d / i;
        p /= (i - mu);
        q /= (i + mu);
        const double del = c * ff;
        sum += del;
        sum1 += c * (p - i * ff);
        if (std::fabs(del) < std::fabs(sum) * kEps) break;
    }
    kmu = sum;
    kmu1 = sum1 * (2.0 / z);
}

// Thompson-Barnett continued fraction (CF2) for K_mu, K_{mu+1} at z > 2.
void bessel_k_large(double mu, double z, double& kmu, double& kmu1) {
    double b = 2.0 * (1.0 + z);
    double d = 1.0 / b;
    double h = d, delh = d;
    double q1 = 0.0, q2 = 1.0;
    const double a1 = 0.25 - mu * mu;
    double q = a1, c = a1, a = -a1;
    double s = 1.0 + q * delh;
    for (int i = 2; i <= kMaxIter; ++i) {
        a -= 2.0 * (i - 1);
        c = -a * c / i;
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::fabs(dels / s) < kEps) break;
    }
    h = a1 * h;
    kmu = std::sqrt(std::numbers::pi / (2.0 * z)) * std::exp(-z) / s;
    kmu1 = kmu * (mu + z + 0.5 - h) / z;
}

} // namespace

double bessel_k(double order, double z) {
    const double a = std::fabs(order);
    if (a > kOrderMax)
        throw std::invalid_argument("bessel_k: |order| must be <= 6, got " +
                                    std::to_string(order));
    if (!(z >= kZMin && z <= kZMax))
        throw std::invalid_argument("bessel_k: z must lie in [1e-6, 60], got " +
                                    std::to_string(z));

    const int nl = static_cast<int>(a + 0.5);
    const double mu = a - nl; // |mu| <= 1/2
    double kmu, kmu1;
    if (z <= 2.0)
        bessel_k_small(mu, z, kmu, kmu1);
    else
        bessel_k_large(mu, z, kmu, kmu1);
    for (int i = 0; i < nl; ++i) {
        const double knext = (mu + i + 1) * (2.0 / z) * kmu1 + kmu;
        kmu = kmu1;
        kmu1 = knext;
    }
    return kmu;
}

} // namespace epdiff
