#include "surface_lab/legendre_numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "surface_lab/errors.hpp"

namespace surface_lab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};
constexpr int kMaxTerms = 100000;

void require_upper_half_plane(Complex tau) {
  if (!(tau.imag() > 0.0)) throw InvalidArgument("modulus must have positive imaginary part");
}

// exp(i pi tau k) for real k.
Complex nome_power(Complex tau, double k) { return std::exp(kI * kPi * tau * k); }

bool negligible(Complex term, Complex sum, double cutoff) {
  return std::abs(term) <= cutoff * std::max(1.0, std::abs(sum));
}

struct Thetas {
  Complex t1, t2, t3, t4;
};

Thetas thetas(Complex v, Complex tau, double cutoff) {
  Thetas t{0.0, 0.0, 1.0, 1.0};
  for (int n = 0; n < kMaxTerms; ++n) {
    const double h = n + 0.5;
    const Complex qh = nome_power(tau, h * h);
    const double sgn = n % 2 == 0 ? 1.0 : -1.0;
    const Complex d1 = 2.0 * sgn * qh * std::sin((2.0 * n + 1.0) * v);
    const Complex d2 = 2.0 * qh * std::cos((2.0 * n + 1.0) * v);
    Complex d3 = 0.0, d4 = 0.0;
    if (n >= 1) {
      const Complex qn = nome_power(tau, static_cast<double>(n) * n);
      d3 = 2.0 * qn * std::cos(2.0 * n * v);
      d4 = sgn * d3;
    }
    t.t1 += d1;
    t.t2 += d2;
    t.t3 += d3;
    t.t4 += d4;
    if (n >= 1 && negligible(d1, t.t1, cutoff) && negligible(d2, t.t2, cutoff) &&
        negligible(d3, t.t3, cutoff) && negligible(d4, t.t4, cutoff))
      return t;
  }
  throw Error("theta series did not converge");
}

// pi^2 csc^2(pi u) and pi^3 cot(pi u) csc^2(pi u) through x = exp(2 pi i u),
// taken in the half plane where |x| <= 1.
struct Trig {
  Complex csc2;
  Complex cot_csc2;
};

Trig trig(Complex u) {
  const bool flip = u.imag() < 0.0;
  const Complex w = flip ? -u : u;
  const Complex x = std::exp(2.0 * kPi * kI * w);
  const Complex one_minus = 1.0 - x;
  const Complex csc2 = -4.0 * x / (one_minus * one_minus);
  const Complex cot = kI * (x + 1.0) / (x - 1.0);
  Trig t{kPi * kPi * csc2, kPi * kPi * kPi * cot * csc2};
  if (flip) t.cot_csc2 = -t.cot_csc2;
  return t;
}

Complex reduce_checked(Complex z, Complex tau) {
  require_upper_half_plane(tau);
  const Complex r = reduce_to_cell(z, tau);
  if (r == Complex{}) throw PoleAtLatticePoint("weierstrass p has a pole on the lattice");
  return r;
}

double rel(Complex x, Complex y) {
  return std::abs(x - y) / std::max({1.0, std::abs(x), std::abs(y)});
}

ResidualItem item(std::string name, double worst, double threshold) {
  return {std::move(name), worst, threshold, worst < threshold};
}

}  // namespace

void Tolerance::validate() const {
  if (!(eps > 0.0)) throw InvalidArgument("tolerance eps must be positive");
}

double Tolerance::series_cutoff() const { return std::max(eps * 1e-3, kFullPrecisionCutoff); }

Complex reduce_to_cell(Complex z, Complex tau) {
  const double n = std::round(z.imag() / tau.imag());
  z -= n * tau;
  z -= std::round(z.real());
  return z;
}

std::array<Complex, 3> half_period_values(Complex tau, double cutoff) {
  require_upper_half_plane(tau);
  const Thetas t = thetas(0.0, tau, cutoff);
  const Complex t2 = std::pow(t.t2, 4), t3 = std::pow(t.t3, 4), t4 = std::pow(t.t4, 4);
  const double c = kPi * kPi / 3.0;
  return {c * (t3 + t4), -c * (t2 + t3), c * (t2 - t4)};
}

Complex weierstrass_p(Complex z, Complex tau, double cutoff) {
  z = reduce_checked(z, tau);
  const Thetas c = thetas(0.0, tau, cutoff);
  const Thetas t = thetas(kPi * z, tau, cutoff);
  if (t.t1 == Complex{}) throw PoleAtLatticePoint("weierstrass p has a pole on the lattice");
  const Complex e1 = kPi * kPi / 3.0 * (std::pow(c.t3, 4) + std::pow(c.t4, 4));
  const Complex root = kPi * c.t3 * c.t4 * t.t2 / t.t1;
  return e1 + root * root;
}

Complex weierstrass_p_series(Complex z, Complex tau, double cutoff) {
  z = reduce_checked(z, tau);
  Complex sum = trig(z).csc2 - kPi * kPi / 3.0;
  for (int n = 1; n < kMaxTerms; ++n) {
    const Complex row = trig(z + double(n) * tau).csc2 + trig(z - double(n) * tau).csc2 -
                        2.0 * trig(double(n) * tau).csc2;
    sum += row;
    if (negligible(row, sum, cutoff)) return sum;
  }
  throw Error("weierstrass_p_series did not converge");
}

Complex weierstrass_p_prime(Complex z, Complex tau, double cutoff) {
  z = reduce_checked(z, tau);
  Complex sum = -2.0 * trig(z).cot_csc2;
  for (int n = 1; n < kMaxTerms; ++n) {
    const Complex row =
        -2.0 * (trig(z + double(n) * tau).cot_csc2 + trig(z - double(n) * tau).cot_csc2);
    sum += row;
    if (negligible(row, sum, cutoff)) return sum;
  }
  throw Error("weierstrass_p_prime did not converge");
}

Complex EllipticParams::legendre(Complex z) const {
  if (reduce_to_cell(z, tau) == Complex{}) return mobius[0] / mobius[2];
  const Complex p = weierstrass_p(z, tau, cutoff);
  return (mobius[0] * p + mobius[1]) / (mobius[2] * p + mobius[3]);
}

Complex EllipticParams::legendre_derivative(Complex z) const {
  const Complex p = weierstrass_p(z, tau, cutoff);
  const Complex den = mobius[2] * p + mobius[3];
  const Complex det = mobius[0] * mobius[3] - mobius[1] * mobius[2];
  return det * weierstrass_p_prime(z, tau, cutoff) / (den * den);
}

EllipticParams legendre_params(Complex tau, const Tolerance& tol) {
  require_upper_half_plane(tau);
  tol.validate();
  EllipticParams p;
  p.tau = tau;
  p.cutoff = tol.series_cutoff();
  p.e = half_period_values(tau, p.cutoff);
  const auto& e = p.e;

  const double scale = std::max({std::abs(e[0]), std::abs(e[1]), std::abs(e[2])});
  const double floor = 1e-12 * scale;
  if (std::abs(e[0] - e[1]) <= floor || std::abs(e[0] - e[2]) <= floor ||
      std::abs(e[1] - e[2]) <= floor)
    throw DegenerateModulus("half-period values coincide");

  // M(w) = (w - e1 - s) / (w - e1 + s) with s^2 = (e2 - e1)(e3 - e1).
  const Complex r = std::sqrt((e[0] - e[1]) * (e[0] - e[2]));
  auto a_for = [&](double sigma) { return (e[1] - e[0] - sigma * r) / (e[1] - e[0] + sigma * r); };
  auto preferred = [](Complex x) {
    const double m = std::abs(x);
    if (std::abs(m - 1.0) > 1e-12) return m > 1.0;
    if (x.real() != 0.0 && std::abs(x.real()) > 1e-12) return x.real() > 0.0;
    return x.imag() >= 0.0;  // 1/a = conj(a) on the unit circle
  };
  const double sigma = preferred(a_for(1.0)) ? 1.0 : -1.0;
  const Complex s = sigma * r;
  p.mobius = {1.0, -e[0] - s, 1.0, -e[0] + s};
  p.a = a_for(sigma);
  if (!std::isfinite(std::abs(p.a)) || std::abs(p.a) < 1e-300)
    throw DegenerateModulus("Moebius constraints are singular");
  p.b = p.legendre(tau / 4.0);
  return p;
}

std::vector<Complex> sample_points(Complex tau, const Tolerance& tol) {
  require_upper_half_plane(tau);
  std::mt19937_64 rng(tol.seed);
  auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  std::vector<Complex> out;
  out.reserve(tol.samples);
  while (out.size() < tol.samples) {
    const double x = uniform(), y = uniform();
    const double dx = 4.0 * x - std::round(4.0 * x);
    const double dy = 4.0 * y - std::round(4.0 * y);
    if (std::abs(Complex(dx) + dy * tau) / 4.0 < 0.05) continue;
    out.push_back(x + y * tau);
  }
  return out;
}

bool IdentityReport::all_pass() const {
  return std::all_of(items.begin(), items.end(), [](const ResidualItem& i) { return i.pass; });
}

double IdentityReport::worst_ratio() const {
  double w = 0.0;
  for (const auto& i : items) w = std::max(w, i.worst / i.threshold);
  return w;
}

IdentityReport verify_identities(const EllipticParams& params, const Tolerance& tol) {
  tol.validate();
  const Complex tau = params.tau;
  const Complex a = params.a;
  const double eps = tol.eps;
  const double cut = params.cutoff;
  const auto zs = sample_points(tau, tol);

  IdentityReport rep;
  rep.tau = tau;
  rep.a = a;
  rep.b = params.b;
  rep.derivative_method = "central difference, h = eps^(1/3)";

  double p_even = 0, p_period = 0, p_agree = 0;
  double l_even = 0, l_one = 0, l_tau = 0, l_half = 0, l_shift = 0;
  std::vector<Complex> ratios;
  for (Complex z : zs) {
    const Complex p = weierstrass_p(z, tau, cut);
    p_even = std::max(p_even, rel(weierstrass_p(-z, tau, cut), p));
    p_period = std::max({p_period, rel(weierstrass_p(z + 1.0, tau, cut), p),
                         rel(weierstrass_p(z + tau, tau, cut), p)});
    p_agree = std::max(p_agree, rel(weierstrass_p_series(z, tau, cut), p));

    const Complex L = params.legendre(z);
    l_even = std::max(l_even, rel(params.legendre(-z), L));
    l_one = std::max(l_one, rel(params.legendre(z + 1.0), L));
    l_tau = std::max(l_tau, rel(params.legendre(z + tau), L));
    l_half = std::max(l_half, rel(params.legendre(z + 0.5), -L));
    l_shift = std::max(l_shift, rel(params.legendre(z + tau / 2.0) * L, a));

    const Complex dL = params.legendre_derivative(z);
    ratios.push_back(dL * dL / ((L * L - 1.0) * (L * L - a * a)));
  }

  const auto& e = params.e;
  const Complex halves[3] = {0.5, tau / 2.0, (1.0 + tau) / 2.0};
  for (std::size_t i = 0; i < 3; ++i)
    p_agree = std::max(p_agree, rel(weierstrass_p_series(halves[i], tau, cut), e[i]));

  rep.items.push_back(item("p(-z) = p(z)", p_even, eps));
  rep.items.push_back(item("p(z+1) = p(z+tau) = p(z)", p_period, eps));
  const double e_scale = std::max({std::abs(e[0]), std::abs(e[1]), std::abs(e[2])});
  rep.items.push_back(item("e1 + e2 + e3 = 0", std::abs(e[0] + e[1] + e[2]) / e_scale, eps));
  rep.items.push_back(item("theta and row-sum evaluators agree", p_agree, eps));

  const double delta = 0.01 * std::sqrt(eps);
  rep.items.push_back(item("L(z) -> 1 as z -> 0", rel(params.legendre(Complex(delta, delta)), 1.0), eps));
  rep.items.push_back(item("L(1/2) = -1", rel(params.legendre(0.5), -1.0), eps));
  rep.items.push_back(item("L(tau/2) = a", rel(params.legendre(tau / 2.0), a), eps));
  rep.items.push_back(item("L((1+tau)/2) = -a", rel(params.legendre((1.0 + tau) / 2.0), -a), eps));
  rep.items.push_back(item("b^2 = a", rel(params.b * params.b, a), eps));

  rep.items.push_back(item("L(-z) = L(z)", l_even, eps));
  rep.items.push_back(item("L(z+1) = L(z)", l_one, eps));
  rep.items.push_back(item("L(z+tau) = L(z)", l_tau, eps));
  rep.items.push_back(item("L(z+1/2) = -L(z)", l_half, eps));
  rep.items.push_back(item("L(z+tau/2) L(z) = a", l_shift, eps));

  const double h = std::cbrt(eps);
  double deriv = 0.0;
  for (Complex hp : {Complex(0.0), halves[0], halves[1], halves[2]})
    deriv = std::max(deriv, std::abs((params.legendre(hp + h) - params.legendre(hp - h)) / (2.0 * h)));
  rep.items.push_back(item("L'(half-periods) = 0", deriv, 1e-6));

  Complex mean = 0.0;
  for (Complex r : ratios) mean += r;
  mean /= static_cast<double>(ratios.size());
  double var = 0.0;
  for (Complex r : ratios) var += std::norm(r - mean);
  const double sd = std::sqrt(var / static_cast<double>(ratios.size()));
  rep.quadratic_constant = mean;
  rep.items.push_back(item("L'^2 / ((L^2-1)(L^2-a^2)) constant", sd / std::abs(mean), eps));
  return rep;
}

bool PencilConstantReport::all_pass() const {
  return std::all_of(items.begin(), items.end(), [](const ResidualItem& i) { return i.pass; });
}

PencilConstantReport invariant_pencil_constant(const std::array<Complex, 3>& taus,
                                               const Tolerance& tol) {
  tol.validate();
  std::array<EllipticParams, 3> p;
  for (std::size_t i = 0; i < 3; ++i) p[i] = legendre_params(taus[i], tol);

  PencilConstantReport rep;
  rep.A = p[0].a * p[1].a * p[2].a;
  rep.b_product = p[0].b * p[1].b * p[2].b;
  rep.items.push_back(item("(b1 b2 b3)^2 = a1 a2 a3", rel(rep.b_product * rep.b_product, rep.A), tol.eps));

  for (std::size_t i = 0; i < 3; ++i)
    rep.items.push_back(item("L" + std::to_string(i + 1) + "(tau/4 + 1/2) = -b" + std::to_string(i + 1),
                             rel(p[i].legendre(taus[i] / 4.0 + 0.5), -p[i].b), tol.eps));

  std::array<std::vector<Complex>, 3> zs;
  for (std::size_t i = 0; i < 3; ++i) {
    Tolerance t = tol;
    t.seed = tol.seed + i;
    zs[i] = sample_points(taus[i], t);
  }
  double two = 0.0, three = 0.0;
  for (std::size_t k = 0; k < tol.samples; ++k) {
    std::array<Complex, 3> L, shifted;
    for (std::size_t i = 0; i < 3; ++i) {
      L[i] = p[i].legendre(zs[i][k]);
      shifted[i] = p[i].legendre(zs[i][k] + taus[i] / 2.0);
    }
    two = std::max(two, rel(shifted[0] * shifted[1], p[0].a * p[1].a / (L[0] * L[1])));
    three = std::max(three, rel(shifted[0] * shifted[1] * shifted[2], rep.A / (L[0] * L[1] * L[2])));
  }
  rep.items.push_back(item("L1(z+tau1/2) L2(w+tau2/2) = a1 a2 / (L1(z) L2(w))", two, tol.eps));
  rep.items.push_back(item("prod Li(zi+taui/2) = a1 a2 a3 / prod Li(zi)", three, tol.eps));
  return rep;
}

}  // namespace surface_lab
