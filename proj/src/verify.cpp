#include "surface_lab/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "surface_lab/affine_groups.hpp"
#include "surface_lab/character_calculus.hpp"
#include "surface_lab/errors.hpp"
#include "surface_lab/integer_algebra.hpp"
#include "surface_lab/orbifold_covers.hpp"
#include "surface_lab/picard_lattice.hpp"
#include "surface_lab/product_threefold.hpp"

namespace surface_lab {

std::string to_string(Status s) {
  switch (s) {
    case Status::kPass: return "pass";
    case Status::kFail: return "fail";
    case Status::kSkipped: return "skipped";
  }
  return "fail";
}

std::vector<Complex> default_taus() {
  return {Complex(0.0, 1.0), Complex(0.5, 1.5), Complex(0.0, 2.0), Complex(1.0 / 3.0, 5.0 / 3.0)};
}

void RunConfig::validate() const {
  if (!(eps > 0.0)) throw InvalidArgument("eps must be positive");
  if (checks.empty()) throw InvalidArgument("no checks requested");
  if (samples == 0) throw InvalidArgument("samples must be positive");
  for (Complex t : taus)
    if (!(t.imag() > 0.0)) throw InvalidArgument("tau must have positive imaginary part");
}

std::vector<Complex> RunConfig::effective_taus() const {
  if (!taus.empty()) return taus;
  return default_taus ? surface_lab::default_taus() : std::vector<Complex>{};
}

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

template <typename T>
std::string tuple_string(const std::vector<T>& v) {
  std::vector<std::string> parts;
  for (const auto& x : v) parts.push_back(std::to_string(x));
  return "(" + join(parts, ", ") + ")";
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

std::string shortest(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string complex_string(Complex z, int digits = 12) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.*g%+.*gi", digits, z.real() == 0.0 ? 0.0 : z.real(), digits,
                z.imag() == 0.0 ? 0.0 : z.imag());
  return buf;
}

// Lattice vector in the basis e_k, tau_k e_k, e.g. "-tau2 e2 - tau4 e4".
std::string lattice_string(const LatticeVector& v) {
  const std::size_t n = v.size() / 2;
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const long c = v.coords[i];
    if (c == 0) continue;
    const std::size_t k = i % n + 1;
    const std::string sym = i < n ? "e" + std::to_string(k)
                                  : "tau" + std::to_string(k) + " e" + std::to_string(k);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (std::abs(c) != 1) out += std::to_string(std::abs(c)) + " ";
    out += sym;
  }
  return out.empty() ? "0" : out;
}

std::string mask_string(std::uint32_t mask) {
  std::string out;
  for (std::size_t i = 0; i < 32; ++i)
    if (mask & (1u << i)) out += "g" + std::to_string(i + 1);
  return out.empty() ? "1" : out;
}

struct Context {
  const RunConfig& config;
  std::vector<Complex> taus;
  Tolerance tol;
};

struct Outcome {
  bool pass;
  std::string expected;
  std::string actual;
};

struct Check {
  CheckInfo info;
  std::function<Outcome(const Context&)> body;
};

Outcome equal_strings(const std::string& expected, const std::string& actual) {
  return {expected == actual, expected, actual};
}

Outcome check_homology(const Context&) {
  const FinAbGroup expected = FinAbGroup::from_invariants(0, {2, 2, 2, 2, 4});
  const FinAbGroup actual = abelianize_extension(inoue_generators());
  return {actual == expected, expected.to_string(), actual.to_string()};
}

Outcome check_commutators(const Context&) {
  // Basis order e1..e4 | tau1 e1..tau4 e4.
  const std::map<std::pair<int, int>, std::vector<long>> table = {
      {{1, 2}, {0, 1, 0, 0, 0, 0, 0, 0}},   {{1, 3}, {-1, 0, 0, 0, 0, 0, 0, 0}},
      {{1, 4}, {0, 0, 0, 0, 0, 0, 0, 0}},   {{1, 5}, {0, 0, 0, 0, -1, 0, 0, 0}},
      {{2, 3}, {0, 0, 1, 0, 0, 0, 0, 0}},   {{2, 4}, {0, 0, 1, 1, 0, 0, 0, 0}},
      {{2, 5}, {0, 0, 0, 0, 0, -1, 0, -1}}, {{3, 4}, {0, 0, 1, 1, 0, 0, 0, 0}},
      {{3, 5}, {0, 0, 0, 0, 0, 0, -1, -1}}, {{4, 5}, {0, 0, 0, 0, 0, 0, -1, -1}},
  };
  const ExtensionData data = inoue_generators();
  std::vector<std::string> expected, actual;
  bool pass = true;
  for (const auto& [ij, coords] : table) {
    const LatticeVector want{coords};
    const LatticeVector got = commutator(data.generators[ij.first - 1], data.generators[ij.second - 1]);
    const std::string label = "[g" + std::to_string(ij.first) + ",g" + std::to_string(ij.second) + "] = ";
    expected.push_back(label + lattice_string(want));
    actual.push_back(label + lattice_string(got));
    pass = pass && got == want;
  }
  return {pass, join(expected, "; "), join(actual, "; ")};
}

Outcome check_sign_condition(const Context&) {
  const ExtensionData data = inoue_generators();
  const std::uint32_t witnesses[4] = {0b00101, 0b00011, 0b01000, 0b01000};
  std::vector<std::string> names;
  bool pass = check_sign_condition(data);
  for (std::size_t k = 0; k < 4; ++k) {
    const AffineElement g = generator_product(data, witnesses[k]);
    const bool negates = g.signs[k] == -1;
    names.push_back(mask_string(witnesses[k]) + (negates ? "" : "(fails)"));
    pass = pass && negates;
  }
  const std::string prefix = "every e_k and tau_k e_k negated; witnesses ";
  return {pass, prefix + "g1g3, g1g2, g4, g4",
          check_sign_condition(data) ? prefix + join(names, ", ") : "condition fails"};
}

Outcome check_hurwitz(const Context&) {
  const long g = cover_genus(maximal_cover(5));
  std::vector<std::string> sols;
  for (const auto& s : hurwitz_base_solutions(5, 4))
    sols.push_back("(" + std::to_string(s.base_genus) + ", " + std::to_string(s.branch_points) + ")");
  std::string none5 = hurwitz_base_solutions(5, 5).empty() ? "none" : "some";
  return equal_strings("genus 5; (h, m) for (Z/2)^4: (0, 5); for (Z/2)^5: none",
                       "genus " + std::to_string(g) + "; (h, m) for (Z/2)^4: " + join(sols, ", ") +
                           "; for (Z/2)^5: " + none5);
}

std::string histogram_string(const SubgroupHistogram& h) {
  std::vector<std::string> parts;
  for (const auto& [key, count] : h)
    parts.push_back("(" + std::to_string(key.first) + " images, genus " + std::to_string(key.second) +
                    "): " + std::to_string(count));
  return join(parts, ", ");
}

Outcome check_subgroups(const Context&) {
  const BranchedCoverData c = maximal_cover(5);
  const SubgroupHistogram expected{{{1, 1}, 5}, {{3, 0}, 10}};
  const SubgroupHistogram actual = classify_corank1_subgroups(c);
  return {actual == expected && corank1_subgroups(4).size() == 15,
          "15 subgroups; " + histogram_string(expected),
          std::to_string(corank1_subgroups(4).size()) + " subgroups; " + histogram_string(actual)};
}

Outcome check_fixed_points(const Context&) {
  const BranchedCoverData c = maximal_cover(5);
  std::map<long, long, std::greater<>> counts;  // fixed points -> number of involutions
  bool pass = true;
  for (F2Vector g = 1; g < 16; ++g) {
    const long f = fixed_point_count(c, g);
    ++counts[f];
    const bool image = std::find(c.branch_images.begin(), c.branch_images.end(), g) != c.branch_images.end();
    pass = pass && f == (image ? 8 : 0);
  }
  std::vector<std::string> parts;
  for (const auto& [f, n] : counts) parts.push_back(std::to_string(n) + " with " + std::to_string(f));
  return {pass, "5 with 8, 10 with 0", join(parts, ", ")};
}

Outcome check_orbifold_bound(const Context&) {
  const ExtensionData data = inoue_generators();
  const FinAbGroup orb = orbifold_abelianization(5);
  const long bound = homology_order_bound();
  const auto order = abelianize_extension(data).order();
  const std::size_t rank = commutator_subspan_rank(data, 0, {0, 1, 4, 5});
  std::ostringstream actual;
  actual << "T(2,2,2,2,2)^ab = " << orb.to_string() << "; bound " << bound << "; |H1| = "
         << (order ? order->get_str() : "inf") << "; rank 3-span " << rank;
  return equal_strings("T(2,2,2,2,2)^ab = (Z/2)^4; bound 64; |H1| = 64; rank 3-span 3", actual.str());
}

Outcome check_k2_hat(const Context&) {
  return equal_strings("224", std::to_string(k_hat_squared()));
}

Outcome check_ks2(const Context&) { return equal_strings("7", std::to_string(ks_squared())); }

Outcome check_pg(const Context&) { return equal_strings("38", std::to_string(adjunction_chain().pg_hat)); }

Outcome check_chi32(const Context&) {
  const AdjunctionReport r = adjunction_chain();
  return equal_strings("chi(O_X) = 32; chi(O_S) = 1",
                       "chi(O_X) = " + std::to_string(r.chi_hat) + "; chi(O_S) = " + std::to_string(r.chi_s));
}

Outcome check_kunneth(const Context&) {
  const AdjunctionReport r = adjunction_chain();
  return equal_strings("h(K_W) = (5, 11, 7, 1); h(K_W + X) = (32, 0, 0, 0)",
                       "h(K_W) = " + tuple_string(r.h_canonical) +
                           "; h(K_W + X) = " + tuple_string(r.h_adjoint));
}

Outcome check_q(const Context&) {
  return equal_strings("G: 0; <g2..g5>: 1; trivial: 7",
                       "G: " + std::to_string(one_forms_invariants()) +
                           "; <g2..g5>: " + std::to_string(one_forms_invariants({2, 4, 8, 16})) +
                           "; trivial: " + std::to_string(one_forms_invariants({})));
}

Outcome report_outcome(const Report& r) {
  const std::string total = std::to_string(r.items.size());
  if (r.all_pass()) return {true, total + " relations hold", total + " relations hold"};
  std::vector<std::string> bad;
  for (const auto& f : r.failures()) bad.push_back(f.name + ": " + f.actual + " != " + f.expected);
  return {false, total + " relations hold", join(bad, "; ")};
}

Outcome check_picard(const Context&) { return report_outcome(verify_configuration(catalog())); }

Outcome check_ranks(const Context&) {
  const ThetaReport t = theta_cohomology_report();
  const ConfigCatalog c = catalog();
  const std::size_t third = rank_of_span({c.conics[0], c.sides[0], c.sides[1], c.sides[2], c.sides[3],
                                          DivisorClass::exceptional(2)});
  return equal_strings("(5, 6, 6)", tuple_string(std::vector<std::size_t>{
                                        t.bounds[0].log_rank, t.bounds[1].log_rank, third}));
}

Outcome check_chi_omega(const Context&) {
  return equal_strings("-4", std::to_string(theta_cohomology_report().chi_omega_twisted));
}

Outcome check_chi_restricted(const Context&) {
  return equal_strings("0", std::to_string(theta_cohomology_report().chi_restricted));
}

Outcome check_theta_bounds(const Context&) {
  const ThetaReport t = theta_cohomology_report();
  return equal_strings("(2, 3, 3)", tuple_string(std::vector<long>{t.bounds[0].bound, t.bounds[1].bound,
                                                                   t.bounds[2].bound}));
}

Outcome check_theta(const Context&) {
  const ThetaReport t = theta_cohomology_report();
  const std::string actual = "h1 = " + std::to_string(t.h1) + ", h2 = " + std::to_string(t.h2) +
                             " (chi = " + std::to_string(t.chi_theta) + ")";
  const Outcome o = equal_strings("h1 = 4, h2 = 8 (chi = 4)", actual);
  return {o.pass && t.all_pass(), o.expected, o.actual};
}

Outcome check_bidouble(const Context&) {
  const BidoubleInvariants b = bidouble_invariants(catalog());
  return equal_strings("(2K+D)^2 = -1; contracted 8; K^2 = 7; chi = 1",
                       "(2K+D)^2 = " + std::to_string(b.k_squared_cover) + "; contracted " +
                           std::to_string(b.contracted_curves) + "; K^2 = " +
                           std::to_string(b.k_squared_minimal) + "; chi = " + std::to_string(b.chi_structure));
}

std::string graded_string(const GradedSpace& g) {
  std::vector<std::string> parts;
  for (const auto& [chi, m] : g.components) parts.push_back(chi.to_string() + ":" + std::to_string(m));
  return join(parts, " ");
}

Outcome check_characters(const Context&) {
  const ExtensionData pencil = product_pencil_group();
  const GradedSpace v12 = tensor({section_space(pencil, 0, {0, 1, 2}), section_space(pencil, 1, {0, 1, 2})});
  const long inv12 = invariant_dim(v12, {1, 2, 4});

  const ExtensionData inoue = inoue_generators();
  const std::vector<std::size_t> h{0, 1, 2, 3};
  const GradedSpace v123 = tensor({section_space(inoue, 0, h), section_space(inoue, 1, h), section_space(inoue, 2, h)});
  const long inv123 = invariant_dim(v123, {1, 2, 4, 8});
  return equal_strings("dim (V1 x V2)^H = 2; V1 x V2 x V3 = --++:2 -+-+:2 +--+:2 ++++:2; invariant 2",
                       "dim (V1 x V2)^H = " + std::to_string(inv12) + "; V1 x V2 x V3 = " +
                           graded_string(v123) + "; invariant " + std::to_string(inv123));
}

std::array<Complex, 3> three_taus(const Context& ctx) {
  return {ctx.taus[0], ctx.taus[1 % ctx.taus.size()], ctx.taus[2 % ctx.taus.size()]};
}

Outcome check_pencil(const Context& ctx) {
  const PencilConstantReport r = invariant_pencil_constant(three_taus(ctx), ctx.tol);
  const long count = pencil_invariant_count(r.A);
  const auto [c1, c2] = pencil_fixed_points(r.A);
  const Complex b = r.b_product;
  const double scale = std::max(1.0, std::abs(b));
  const double match = std::min(std::max(std::abs(c1 - b), std::abs(c2 + b)),
                                std::max(std::abs(c1 + b), std::abs(c2 - b))) / scale;
  const bool pass = count == 2 && match < ctx.tol.eps;
  return {pass, "2 invariant members, c = +-b1 b2 b3",
          std::to_string(count) + " invariant members, |c -+ b1 b2 b3| = " + sci(match) +
              " (A = " + complex_string(r.A) + ")"};
}

Outcome residual_outcome(const std::vector<ResidualItem>& items, const std::string& expected,
                         const std::string& suffix) {
  double worst = 0.0;
  std::string worst_name;
  std::vector<std::string> bad;
  for (const auto& i : items) {
    if (i.worst / i.threshold >= worst) {
      worst = i.worst / i.threshold;
      worst_name = i.name;
    }
    if (!i.pass) bad.push_back(i.name + " " + sci(i.worst));
  }
  std::string actual = bad.empty() ? "all residuals below tolerance" : "failed: " + join(bad, "; ");
  actual += "; worst residual/threshold " + sci(worst) + " (" + worst_name + ")" + suffix;
  return {bad.empty(), expected, actual};
}

Outcome check_legendre(const Context& ctx) {
  std::vector<ResidualItem> all;
  std::vector<std::string> constants;
  for (Complex tau : ctx.taus) {
    const EllipticParams p = legendre_params(tau, ctx.tol);
    const IdentityReport r = verify_identities(p, ctx.tol);
    for (auto item : r.items) {
      item.name = "tau=" + format_tau(tau) + ": " + item.name;
      all.push_back(item);
    }
    constants.push_back("a=" + complex_string(p.a, 10) + " ratio=" + complex_string(r.quadratic_constant, 10));
  }
  return residual_outcome(all, "all residuals below tolerance",
                          "; derivative by central difference; " + join(constants, ", "));
}

Outcome check_weierstrass(const Context& ctx) {
  std::vector<ResidualItem> all;
  for (Complex tau : ctx.taus) {
    const IdentityReport r = verify_identities(legendre_params(tau, ctx.tol), ctx.tol);
    for (const auto& item : r.items)
      if (item.name.rfind("p(", 0) == 0 || item.name.rfind("e1", 0) == 0 ||
          item.name.rfind("theta", 0) == 0)
        all.push_back(item);
  }
  return residual_outcome(all, "all residuals below tolerance", "");
}

Outcome check_pencil_constant(const Context& ctx) {
  const PencilConstantReport r = invariant_pencil_constant(three_taus(ctx), ctx.tol);
  return residual_outcome(r.items, "all residuals below tolerance", "");
}

const std::vector<Check>& registry() {
  static const std::vector<Check> checks = [] {
    std::vector<Check> c = {
        {{"homology_h1", "H1(S, Z) of the Inoue surface is Z/4 + (Z/2)^4", false}, check_homology},
        {{"commutator_table", "commutators of the lifts gamma_i as lattice vectors", false}, check_commutators},
        {{"sign_condition", "every lattice basis vector is negated by conjugation", false}, check_sign_condition},
        {{"hurwitz_genus5", "maximal (Z/2)^4 cover branched in 5 points has genus 5", false}, check_hurwitz},
        {{"subgroup_classification", "corank-1 subgroups of (Z/2)^4 and their quotient genera", false}, check_subgroups},
        {{"fixed_points_8", "each e_i has 8 fixed points on D, other involutions none", false}, check_fixed_points},
        {{"orbifold_bound_64", "|H1| is at most 2 |(Z/2)^5| = 64 and attains it", false}, check_orbifold_bound},
        {{"k2_hat_224", "K^2 of the hypersurface X is 224 = 7 * 32", false}, check_k2_hat},
        {{"ks2_7", "K_S^2 = 7", false}, check_ks2},
        {{"pg_38", "p_g(X) = 38", false}, check_pg},
        {{"chi_32", "chi(O_X) = 32, hence chi(O_S) = 1", false}, check_chi32},
        {{"kunneth_list", "cohomology of K_W and K_W + X by Kunneth", false}, check_kunneth},
        {{"q_S_zero", "no G-invariant holomorphic one-forms, so q(S) = 0", false}, check_q},
        {{"picard_config", "relations of the four-nodal cubic configuration", false}, check_picard},
        {{"independence_ranks", "ranks of the logarithmic curve classes", false}, check_ranks},
        {{"chi_omega_minus4", "chi(Omega^1_Y(K_Y)) = -4", false}, check_chi_omega},
        {{"chi_restricted_zero", "chi of K_Y restricted to the branch divisors is 0", false}, check_chi_restricted},
        {{"theta_bounds_233", "bounds for the three character summands of h2(Theta)", false}, check_theta_bounds},
        {{"theta_h1_4_h2_8", "h1(Theta_S) = 4 and h2(Theta_S) = 8", false}, check_theta},
        {{"bidouble_invariants", "the bidouble cover of Y has K^2 = 7 and chi = 1", false}, check_bidouble},
        {{"character_decomposition", "sign-character decompositions of the section spaces", false}, check_characters},
        {{"pencil_two_invariants", "exactly two G-invariant members of the pencil", true}, check_pencil},
        {{"legendre_identities", "functional equations of the Legendre function L", true}, check_legendre},
        {{"weierstrass_cross_check", "two p evaluators agree; e1 + e2 + e3 = 0", true}, check_weierstrass},
        {{"invariant_pencil_constant", "(b1 b2 b3)^2 = a1 a2 a3 and the shifted products", true}, check_pencil_constant},
    };
    std::sort(c.begin(), c.end(), [](const Check& x, const Check& y) { return x.info.name < y.info.name; });
    return c;
  }();
  return checks;
}

}  // namespace

std::vector<CheckInfo> list_checks() {
  std::vector<CheckInfo> out;
  for (const auto& c : registry()) out.push_back(c.info);
  return out;
}

std::vector<CheckResult> run(const RunConfig& config) {
  config.validate();
  std::set<std::string> wanted;
  for (const auto& name : config.checks) {
    if (name == "all") {
      for (const auto& c : registry()) wanted.insert(c.info.name);
      continue;
    }
    const bool known = std::any_of(registry().begin(), registry().end(),
                                   [&](const Check& c) { return c.info.name == name; });
    if (!known) throw UnknownCheck("unknown check '" + name + "' (see --list)");
    wanted.insert(name);
  }

  const Context ctx{config, config.effective_taus(), config.tolerance()};
  std::vector<CheckResult> results;
  for (const auto& check : registry()) {
    if (!wanted.count(check.info.name)) continue;
    CheckResult r;
    r.name = check.info.name;
    r.anchor = check.info.anchor;
    if (check.info.numeric && ctx.taus.empty()) {
      r.status = Status::kSkipped;
      r.actual = "no modulus supplied";
      results.push_back(r);
      continue;
    }
    const auto start = std::chrono::steady_clock::now();
    try {
      const Outcome o = check.body(ctx);
      r.status = o.pass ? Status::kPass : Status::kFail;
      r.expected = o.expected;
      r.actual = o.actual;
    } catch (const std::exception& e) {
      r.status = Status::kFail;
      r.actual = std::string("error: ") + e.what();
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    results.push_back(r);
  }
  return results;
}

int exit_code(const std::vector<CheckResult>& results) {
  return std::any_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.status == Status::kFail; })
             ? 1
             : 0;
}

std::string render_text(const std::vector<CheckResult>& results) {
  std::ostringstream os;
  std::size_t width = 0;
  for (const auto& r : results) width = std::max(width, r.name.size());
  std::size_t pass = 0, fail = 0, skipped = 0;
  for (const auto& r : results) {
    std::string tag = r.status == Status::kPass ? "PASS" : r.status == Status::kFail ? "FAIL" : "SKIP";
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.1f ms", r.elapsed_ms);
    os << tag << "  " << r.name << std::string(width - r.name.size(), ' ') << "  " << ms << "\n";
    if (!r.expected.empty()) os << "      expected: " << r.expected << "\n";
    os << "      actual:   " << r.actual << "\n";
    (r.status == Status::kPass ? pass : r.status == Status::kFail ? fail : skipped) += 1;
  }
  os << pass << " passed, " << fail << " failed, " << skipped << " skipped\n";
  return os.str();
}

std::string render_json(const RunConfig& config, const std::vector<CheckResult>& results) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = 1;
  nlohmann::ordered_json cfg;
  cfg["checks"] = config.checks;
  std::vector<std::string> taus;
  for (Complex t : config.effective_taus()) taus.push_back(format_tau(t));
  cfg["taus"] = taus;
  cfg["eps"] = config.eps;
  cfg["samples"] = config.samples;
  cfg["seed"] = config.seed;
  doc["config"] = cfg;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    nlohmann::ordered_json j;
    j["name"] = r.name;
    j["status"] = to_string(r.status);
    j["expected"] = r.expected;
    j["actual"] = r.actual;
    j["anchor"] = r.anchor;
    if (config.timing) j["elapsed_ms"] = r.elapsed_ms;
    arr.push_back(j);
  }
  doc["results"] = arr;
  return doc.dump(2) + "\n";
}

namespace {

double parse_real(const std::string& s, const std::string& whole) {
  auto parse_plain = [&](const std::string& t) {
    double v = 0.0;
    const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || res.ec != std::errc{} || res.ptr != t.data() + t.size())
      throw InvalidArgument("malformed modulus '" + whole + "'");
    return v;
  };
  const auto slash = s.find('/');
  if (slash == std::string::npos) return parse_plain(s);
  const double den = parse_plain(s.substr(slash + 1));
  if (den == 0.0) throw InvalidArgument("malformed modulus '" + whole + "'");
  return parse_plain(s.substr(0, slash)) / den;
}

}  // namespace

Complex parse_tau(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  if (s.empty() || (s.back() != 'i' && s.back() != 'j')) throw InvalidArgument("malformed modulus '" + text + "'");
  s.pop_back();
  // The imaginary part starts at the last sign that is not an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;)
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  std::string re = split == std::string::npos ? "" : s.substr(0, split);
  std::string im = split == std::string::npos ? s : s.substr(split);
  if (!im.empty() && im[0] == '+') im.erase(0, 1);
  double imag = 1.0;
  if (im == "-")
    imag = -1.0;
  else if (!im.empty())
    imag = parse_real(im, text);
  const double real = re.empty() ? 0.0 : parse_real(re, text);
  return {real, imag};
}

std::string format_tau(Complex tau) {
  const std::string im = shortest(tau.imag());
  return shortest(tau.real()) + (im[0] == '-' ? "" : "+") + im + "i";
}

}  // namespace surface_lab
