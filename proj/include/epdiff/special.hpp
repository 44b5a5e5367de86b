#pragma once

namespace epdiff {

/// Gamma function for positive arguments. Throws on x <= 0.
double gamma_fn(double x);

/// Modified Bessel function of the second kind K_order(z) for real order.
/// Supported envelope: |order| <= 6, 1e-6 <= z <= 60 (throws outside).
/// Even in the order, K_{-a} = K_a.
double bessel_k(double order, double z);

} // namespace epdiff
