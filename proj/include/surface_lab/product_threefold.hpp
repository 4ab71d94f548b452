#ifndef SURFACE_LAB_PRODUCT_THREEFOLD_HPP
#define SURFACE_LAB_PRODUCT_THREEFOLD_HPP

// Numerical invariants of the Inoue surface S = X / G computed on the
// threefold W = E_1 x E_2 x D (D of genus 5) that contains X as a divisor.

#include <array>
#include <cstddef>
#include <vector>

namespace surface_lab {

/// a_1 F_1 + a_2 F_2 + a_3 F_3, with F_i the fibre of the projection of W
/// onto the other two factors: F_1 F_2 F_3 = 1, and any product with a
/// repeated index vanishes.
struct MultiClass {
  std::array<long, 3> a{};
};

long triple_product(const MultiClass& x, const MultiClass& y, const MultiClass& z);

/// Multidegrees on W.
inline constexpr MultiClass kCanonicalW{{0, 0, 8}};   // K_W = pullback of K_D
inline constexpr MultiClass kInoueDivisor{{2, 2, 4}}; // class of X in W
inline constexpr long kInoueGroupOrder = 32;          // |G| = 2^5

MultiClass operator+(const MultiClass& x, const MultiClass& y);

/// K_X^2 = (K_W + X)^2 . X.
long k_hat_squared();

/// K_S^2 = K_X^2 / |G|; throws NonIntegral unless the division is exact.
long ks_squared(long group_order = kInoueGroupOrder);

struct CurveCohomology {
  long h0 = 0;
  long h1 = 0;
  friend bool operator==(const CurveCohomology&, const CurveCohomology&) = default;
};

/// h^0, h^1 of a line bundle of the given degree on a genus-g curve, in the
/// regimes Riemann-Roch decides: d > 2g-2, d < 0, d = 0 (taken to be the
/// trivial bundle) and d = 2g-2 (taken to be the canonical bundle).
/// Throws AmbiguousCase for 0 < d < 2g-2.
CurveCohomology curve_h(long genus, long degree);

/// One line bundle per factor of a product of curves.
struct FactorData {
  std::vector<long> genus;
  std::vector<long> degrees;
};

/// Factor genera of W and the line-bundle degrees of K_W and K_W + X.
FactorData canonical_factors();
FactorData adjoint_factors();

/// h^0..h^k of the exterior tensor product, by the Kunneth formula.
std::vector<long> kunneth_h(const FactorData& factors);

struct AdjunctionReport {
  long k_hat_squared;
  long ks_squared;
  std::vector<long> h_canonical;  // h^i(W, K_W)
  std::vector<long> h_adjoint;    // h^i(W, K_W + X)
  long pg_hat;                    // p_g(X)
  long q_hat;                     // q(X) = h^2(W, K_W)
  long chi_hat;                   // chi(O_X)
  long chi_omega_hat;             // chi(K_W + X) - chi(K_W)
  long chi_s;                     // chi(O_S) = chi(O_X) / |G|
};

/// Long exact sequence of 0 -> O_W(K_W) -> O_W(K_W + X) -> omega_X -> 0.
AdjunctionReport adjunction_chain();

}  // namespace surface_lab

#endif  // SURFACE_LAB_PRODUCT_THREEFOLD_HPP
