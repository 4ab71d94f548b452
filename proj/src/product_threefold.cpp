#include "surface_lab/product_threefold.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "surface_lab/errors.hpp"

namespace surface_lab {

long triple_product(const MultiClass& x, const MultiClass& y, const MultiClass& z) {
  // Only the terms F_i F_j F_k with {i, j, k} = {1, 2, 3} survive.
  std::array<int, 3> p{0, 1, 2};
  long total = 0;
  do {
    total += x.a[p[0]] * y.a[p[1]] * z.a[p[2]];
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

MultiClass operator+(const MultiClass& x, const MultiClass& y) {
  return MultiClass{{x.a[0] + y.a[0], x.a[1] + y.a[1], x.a[2] + y.a[2]}};
}

long k_hat_squared() {
  const MultiClass adjoint = kCanonicalW + kInoueDivisor;
  return triple_product(adjoint, adjoint, kInoueDivisor);
}

long ks_squared(long group_order) {
  if (group_order <= 0) throw InvalidArgument("ks_squared: group order must be positive");
  const long k2 = k_hat_squared();
  if (k2 % group_order != 0)
    throw NonIntegral("K^2 = " + std::to_string(k2) + " is not divisible by |G| = " +
                      std::to_string(group_order));
  return k2 / group_order;
}

CurveCohomology curve_h(long genus, long degree) {
  if (genus < 0) throw InvalidArgument("curve_h: negative genus");
  const long canonical = 2 * genus - 2;
  if (degree > canonical) return {degree - genus + 1, 0};
  if (degree < 0) return {0, genus - 1 - degree};
  if (degree == 0) return {1, genus};
  if (degree == canonical) return {genus, 1};
  throw AmbiguousCase("curve_h: degree " + std::to_string(degree) + " on genus " +
                      std::to_string(genus) + " is special");
}

FactorData canonical_factors() { return {{1, 1, 5}, {0, 0, 8}}; }

// O(2[0]) on each elliptic factor; K_D plus the degree-4 restriction of the
// bidegree (2,2) class to D (D . E_i = 2 on each side).
FactorData adjoint_factors() { return {{1, 1, 5}, {2, 2, 12}}; }

std::vector<long> kunneth_h(const FactorData& factors) {
  if (factors.genus.size() != factors.degrees.size())
    throw InvalidArgument("kunneth_h: genus/degree length mismatch");
  std::vector<long> total{1};
  for (std::size_t f = 0; f < factors.genus.size(); ++f) {
    const CurveCohomology c = curve_h(factors.genus[f], factors.degrees[f]);
    std::vector<long> next(total.size() + 1, 0);
    for (std::size_t i = 0; i < total.size(); ++i) {
      next[i] += total[i] * c.h0;
      next[i + 1] += total[i] * c.h1;
    }
    total = std::move(next);
  }
  return total;
}

namespace {

long euler_characteristic(const std::vector<long>& h) {
  long chi = 0;
  for (std::size_t i = 0; i < h.size(); ++i) chi += (i % 2 == 0 ? 1 : -1) * h[i];
  return chi;
}

}  // namespace

AdjunctionReport adjunction_chain() {
  AdjunctionReport r{};
  r.k_hat_squared = k_hat_squared();
  r.ks_squared = ks_squared();
  r.h_canonical = kunneth_h(canonical_factors());
  r.h_adjoint = kunneth_h(adjoint_factors());

  const auto& hk = r.h_canonical;
  const auto& ha = r.h_adjoint;
  // The sequence 0 -> H^0(K_W) -> H^0(K_W+X) -> H^0(omega_X) -> H^1(K_W) ->
  // H^1(K_W+X) needs H^1(K_W+X) = 0 to be short; likewise H^1(omega_X) =
  // H^2(K_W) needs H^1 = H^2 = 0 for K_W + X.
  if (ha[1] != 0 || ha[2] != 0)
    throw Error("adjunction_chain: higher cohomology of K_W + X does not vanish");
  r.pg_hat = ha[0] - hk[0] + hk[1];
  r.q_hat = hk[2];
  r.chi_hat = 1 + r.pg_hat - r.q_hat;
  r.chi_omega_hat = euler_characteristic(ha) - euler_characteristic(hk);
  if (r.chi_hat % kInoueGroupOrder != 0)
    throw NonIntegral("chi(O_X) is not divisible by |G|");
  r.chi_s = r.chi_hat / kInoueGroupOrder;
  return r;
}

}  // namespace surface_lab
