#ifndef SURFACE_LAB_LEGENDRE_NUMERICS_HPP
#define SURFACE_LAB_LEGENDRE_NUMERICS_HPP

// Weierstrass p for the lattice <1, tau> and the Legendre function
// L = M o p, the Moebius transform of p with L(0) = 1, L(1/2) = -1,
// L(tau/2) = a, L((1 + tau)/2) = -a.

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace surface_lab {

using Complex = std::complex<double>;

struct Tolerance {
  double eps = 1e-9;
  std::size_t samples = 100;
  std::uint64_t seed = 0;

  void validate() const;  // throws InvalidArgument unless eps > 0
  /// Relative cutoff for the q-series, tied to eps so that residuals follow
  /// the requested tolerance.
  double series_cutoff() const;
};

inline constexpr double kFullPrecisionCutoff = 1e-18;

/// Theta-quotient form:
///   p(z) = e_1 + (pi theta_3 theta_4 theta_2(pi z) / theta_1(pi z))^2,
/// nome q = exp(i pi tau). Throws PoleAtLatticePoint on the lattice.
Complex weierstrass_p(Complex z, Complex tau, double cutoff = kFullPrecisionCutoff);

/// Row-summed form:
///   p(z) = sum_n pi^2 csc^2(pi (z + n tau)) - pi^2/3 - 2 sum_{n>=1} pi^2 csc^2(pi n tau).
Complex weierstrass_p_series(Complex z, Complex tau, double cutoff = kFullPrecisionCutoff);

/// p'(z) = -2 pi^3 sum_n cot(pi (z + n tau)) csc^2(pi (z + n tau)).
Complex weierstrass_p_prime(Complex z, Complex tau, double cutoff = kFullPrecisionCutoff);

/// e_1 = p(1/2), e_2 = p(tau/2), e_3 = p((1 + tau)/2) from theta constants.
std::array<Complex, 3> half_period_values(Complex tau, double cutoff = kFullPrecisionCutoff);

/// Representative of z mod <1, tau> with |Re| <= 1/2 and |Im| <= Im(tau)/2.
Complex reduce_to_cell(Complex z, Complex tau);

struct EllipticParams {
  Complex tau;
  std::array<Complex, 3> e;       // e_1, e_2, e_3
  std::array<Complex, 4> mobius;  // L = (p0 P + p1) / (p2 P + p3), P = weierstrass p
  Complex a;
  Complex b;
  double cutoff = kFullPrecisionCutoff;

  Complex legendre(Complex z) const;             // 1 on the lattice
  Complex legendre_derivative(Complex z) const;  // analytic: M'(p) p'
};

/// Solves M(oo) = 1, M(e_1) = -1, M(e_2) = -M(e_3) for M; the two solutions
/// exchange a and 1/a, and the one with |a| >= 1 (then Re a >= 0) is kept.
/// Throws InvalidArgument for Im tau <= 0 and DegenerateModulus when the
/// half-period values collide at working precision.
EllipticParams legendre_params(Complex tau, const Tolerance& tol = {});

struct ResidualItem {
  std::string name;
  double worst = 0.0;   // worst residual over the sample set
  double threshold = 0.0;
  bool pass = false;
};

struct IdentityReport {
  Complex tau;
  Complex a;
  Complex b;
  Complex quadratic_constant;  // mean of L'^2 / ((L^2 - 1)(L^2 - a^2))
  std::string derivative_method;
  std::vector<ResidualItem> items;

  bool all_pass() const;
  double worst_ratio() const;  // max worst/threshold
};

/// `samples` points z = x + y tau, (x, y) uniform in [0,1)^2 from a seeded
/// mt19937_64, rejecting points within 0.05 of the quarter-period grid
/// (lattice points, half-periods and the zeros and poles of L).
std::vector<Complex> sample_points(Complex tau, const Tolerance& tol);

IdentityReport verify_identities(const EllipticParams& params, const Tolerance& tol);

struct PencilConstantReport {
  Complex A;          // a_1 a_2 a_3
  Complex b_product;  // b_1 b_2 b_3
  std::vector<ResidualItem> items;

  bool all_pass() const;
};

/// A = a_1 a_2 a_3 for three moduli, with (b_1 b_2 b_3)^2 = A, the two-curve
/// identity L_1(z + tau_1/2) L_2(w + tau_2/2) = a_1 a_2 / (L_1(z) L_2(w)),
/// and L(tau/4 + 1/2) = -b on each curve.
PencilConstantReport invariant_pencil_constant(const std::array<Complex, 3>& taus,
                                               const Tolerance& tol = {});

}  // namespace surface_lab

#endif  // SURFACE_LAB_LEGENDRE_NUMERICS_HPP
