#include "surface_lab/picard_lattice.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <sstream>
#include <utility>

#include "surface_lab/errors.hpp"
#include "surface_lab/integer_algebra.hpp"
#include "surface_lab/product_threefold.hpp"

namespace surface_lab {

DivisorClass DivisorClass::line() { return DivisorClass{1, {}}; }

DivisorClass DivisorClass::exceptional(std::size_t i) {
  if (i < 1 || i > 6) throw InvalidArgument("DivisorClass::exceptional: index must be 1..6");
  DivisorClass e;
  e.m[i - 1] = 1;
  return e;
}

DivisorClass DivisorClass::canonical() { return DivisorClass{-3, {1, 1, 1, 1, 1, 1}}; }

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
  d += o.d;
  for (std::size_t i = 0; i < 6; ++i) m[i] += o.m[i];
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) {
  d -= o.d;
  for (std::size_t i = 0; i < 6; ++i) m[i] -= o.m[i];
  return *this;
}

DivisorClass operator*(long k, const DivisorClass& a) {
  DivisorClass out = a;
  out.d *= k;
  for (auto& v : out.m) v *= k;
  return out;
}

std::string DivisorClass::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto term = [&](long c, const std::string& sym) {
    if (c == 0) return;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    if (std::abs(c) != 1) os << std::abs(c);
    os << sym;
    first = false;
  };
  term(d, "L");
  for (std::size_t i = 0; i < 6; ++i) term(m[i], "E" + std::to_string(i + 1));
  return first ? "0" : os.str();
}

long intersect(const DivisorClass& a, const DivisorClass& b) {
  long v = a.d * b.d;
  for (std::size_t i = 0; i < 6; ++i) v -= a.m[i] * b.m[i];
  return v;
}

namespace {

DivisorClass L() { return DivisorClass::line(); }
DivisorClass E(std::size_t i) { return DivisorClass::exceptional(i); }

// Strict transform of a plane curve of degree `deg` through the listed vertices.
DivisorClass through(long deg, std::initializer_list<std::size_t> points) {
  DivisorClass c = deg * L();
  for (std::size_t p : points) c -= E(p);
  return c;
}

}  // namespace

ConfigCatalog catalog() {
  ConfigCatalog c;
  // Sides P1P2 (through P5), P2P3 (P6), P3P4 (P5), P4P1 (P6).
  c.sides = {through(1, {1, 2, 5}), through(1, {2, 3, 6}), through(1, {3, 4, 5}),
             through(1, {4, 1, 6})};
  // Diagonals P1P3, P2P4, P5P6.
  c.diagonals = {through(1, {1, 3}), through(1, {2, 4}), through(1, {5, 6})};
  // Conics through the four vertices off Delta_i.
  c.conics = {through(2, {2, 4, 5, 6}), through(2, {1, 3, 5, 6}), through(2, {1, 2, 3, 4})};
  c.canonical = DivisorClass::canonical();
  const DivisorClass& K = c.canonical;
  c.characters = {-K + c.conics[0] - E(4), -2 * K - E(5) - E(6), -K + L() - E(1) - E(2) - E(3)};

  const auto& S = c.sides;
  const auto& Dl = c.diagonals;
  const auto& f = c.conics;
  c.branch[0] = {{"Delta1", Dl[0], 0}, {"f2", f[1], 0}, {"S1", S[0], 0}, {"S2", S[1], 0}};
  c.branch[1] = {{"Delta2", Dl[1], 0}, {"f3", f[2], 0}};
  c.branch[2] = {{"Delta3", Dl[2], 0}, {"f1", f[0], 0}, {"f1'", f[0], 0},
                 {"S3", S[2], 0},      {"S4", S[3], 0}};
  return c;
}

std::vector<Curve> ConfigCatalog::curves() const {
  std::vector<Curve> out;
  for (std::size_t i = 0; i < 4; ++i) out.push_back({"S" + std::to_string(i + 1), sides[i], 0});
  for (std::size_t i = 0; i < 3; ++i)
    out.push_back({"Delta" + std::to_string(i + 1), diagonals[i], 0});
  for (std::size_t i = 0; i < 3; ++i) out.push_back({"f" + std::to_string(i + 1), conics[i], 0});
  for (std::size_t i = 1; i <= 6; ++i) out.push_back({"E" + std::to_string(i), E(i), 0});
  return out;
}

DivisorClass ConfigCatalog::total(const std::vector<Curve>& components) {
  DivisorClass sum;
  for (const auto& c : components) sum += c.cls;
  return sum;
}

bool Report::all_pass() const {
  return std::all_of(items.begin(), items.end(), [](const CheckItem& i) { return i.pass; });
}

std::vector<CheckItem> Report::failures() const {
  std::vector<CheckItem> out;
  std::copy_if(items.begin(), items.end(), std::back_inserter(out),
               [](const CheckItem& i) { return !i.pass; });
  return out;
}

void Report::add(std::string name, long expected, long actual) {
  items.push_back({std::move(name), std::to_string(expected), std::to_string(actual),
                   expected == actual});
}

void Report::add(std::string name, const DivisorClass& expected, const DivisorClass& actual) {
  items.push_back({std::move(name), expected.to_string(), actual.to_string(), expected == actual});
}

void Report::add_bool(std::string name, bool ok, std::string detail) {
  items.push_back({std::move(name), "true", ok ? "true" : "false (" + detail + ")", ok});
}

Report verify_configuration(const ConfigCatalog& c) {
  Report r;
  const auto& S = c.sides;
  const auto& Dl = c.diagonals;
  const auto& f = c.conics;
  const DivisorClass& K = c.canonical;
  auto idx = [](const char* p, std::size_t i) { return std::string(p) + std::to_string(i + 1); };

  for (std::size_t i = 0; i < 3; ++i)
    r.add(idx("Delta", i) + " + " + idx("f", i) + " = -K", -K, Dl[i] + f[i]);

  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) r.add(idx("S", i) + "." + idx("S", j), 0, intersect(S[i], S[j]));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      r.add(idx("S", i) + "." + idx("Delta", j), 0, intersect(S[i], Dl[j]));
      r.add(idx("S", i) + "." + idx("f", j), 0, intersect(S[i], f[j]));
    }
  for (std::size_t i = 0; i < 3; ++i) {
    r.add(idx("f", i) + "^2", 0, intersect(f[i], f[i]));
    for (std::size_t j = 0; j < 3; ++j) {
      r.add(idx("Delta", i) + "." + idx("f", j), i == j ? 2 : 0, intersect(Dl[i], f[j]));
      if (i < j) r.add(idx("f", i) + "." + idx("f", j), 2, intersect(f[i], f[j]));
    }
  }

  r.add("S1 + S4 - S2 - S3 = -2E1 + 2E3", -2 * E(1) + 2 * E(3), S[0] + S[3] - S[1] - S[2]);

  r.add("K + L1 = f1 - E4", f[0] - E(4), K + c.characters[0]);
  r.add("K + L2 = -K - E5 - E6", -K - E(5) - E(6), K + c.characters[1]);
  r.add("K + L3 = L - E1 - E2 - E3", L() - E(1) - E(2) - E(3), K + c.characters[2]);
  r.add("K + L2 + Delta2 = S1 + S2 + S3 + S4 + E1 + E3", S[0] + S[1] + S[2] + S[3] + E(1) + E(3),
        K + c.characters[1] + Dl[1]);
  r.add("K + L3 + Delta3 = S1 + S2 + E2", S[0] + S[1] + E(2), K + c.characters[2] + Dl[2]);

  // Bidouble cover data: 2 L_i = D_j + D_k.
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t j = (i + 1) % 3, k = (i + 2) % 3;
    r.add("2L" + std::to_string(i + 1) + " = D" + std::to_string(j + 1) + " + D" +
              std::to_string(k + 1),
          ConfigCatalog::total(c.branch[j]) + ConfigCatalog::total(c.branch[k]),
          2 * c.characters[i]);
  }
  // The branch divisors are disjoint unions of their components.
  for (std::size_t b = 0; b < 3; ++b)
    for (std::size_t i = 0; i < c.branch[b].size(); ++i)
      for (std::size_t j = i + 1; j < c.branch[b].size(); ++j)
        r.add("D" + std::to_string(b + 1) + ": " + c.branch[b][i].name + "." + c.branch[b][j].name,
              0, intersect(c.branch[b][i].cls, c.branch[b][j].cls));

  r.add("(2Delta2 - E5 - E6).Delta2", -2, intersect(2 * Dl[1] - E(5) - E(6), Dl[1]));
  r.add("(K + 2Delta2 + (K + L2)).Delta2", -2,
        intersect(K + 2 * Dl[1] + (K + c.characters[1]), Dl[1]));
  r.add("(K + 2Delta3 + (K + L3)).Delta3", -2,
        intersect(K + 2 * Dl[2] + (K + c.characters[2]), Dl[2]));

  r.add("(Delta1 + f2 + S1 + S2 + f1 - E4).f1", 3,
        intersect(Dl[0] + f[1] + S[0] + S[1] + f[0] - E(4), f[0]));
  const DivisorClass case2 = f[2] + S[0] + S[1] + S[2] + S[3] + E(1) + E(3);
  r.add("E1.(f3 + S1 + S2 + S3 + S4 + E1 + E3)", 2, intersect(E(1), case2));
  r.add("E3.(f3 + S1 + S2 + S3 + S4 + E1 + E3)", 2, intersect(E(3), case2));
  r.add("E2.(f1 + f1' + S1 + S2 + S3 + S4 + E2)", 3,
        intersect(E(2), 2 * f[0] + S[0] + S[1] + S[2] + S[3] + E(2)));

  for (const auto& curve : c.curves())
    r.add("adjunction " + curve.name, 2 * curve.genus - 2,
          intersect(curve.cls, curve.cls) + intersect(K, curve.cls));
  return r;
}

std::size_t rank_of_span(const std::vector<DivisorClass>& classes) {
  IntMatrix m(0, 7);
  for (const auto& c : classes) {
    std::vector<long> row{c.d};
    row.insert(row.end(), c.m.begin(), c.m.end());
    m.append_row(row);
  }
  return rank_rational(m);
}

std::pair<std::size_t, std::size_t> signature(const std::vector<DivisorClass>& classes) {
  const std::size_t k = classes.size();
  std::vector<std::vector<mpq_class>> g(k, std::vector<mpq_class>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) g[i][j] = intersect(classes[i], classes[j]);

  std::size_t pos = 0, neg = 0;
  for (std::size_t t = 0; t < k; ++t) {
    std::size_t p = t;
    while (p < k && g[p][p] == 0) ++p;
    if (p == k) {
      // Zero diagonal: a nonzero g[t][j] lets us replace e_t by e_t + e_j.
      std::size_t a = k, b = k;
      for (std::size_t i = t; i < k && a == k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
          if (g[i][j] != 0) {
            a = i;
            b = j;
            break;
          }
      if (a == k) break;  // remaining block is zero
      for (std::size_t j = 0; j < k; ++j) g[a][j] += g[b][j];
      for (std::size_t i = 0; i < k; ++i) g[i][a] += g[i][b];
      p = a;
    }
    std::swap(g[t], g[p]);
    for (auto& row : g) std::swap(row[t], row[p]);
    const mpq_class pivot = g[t][t];
    (pivot > 0 ? pos : neg) += 1;
    for (std::size_t i = t + 1; i < k; ++i) {
      if (g[i][t] == 0) continue;
      const mpq_class factor = g[i][t] / pivot;
      for (std::size_t j = t; j < k; ++j) g[i][j] -= factor * g[t][j];
      for (std::size_t j = t; j < k; ++j) g[j][i] = g[i][j];
    }
  }
  return {pos, neg};
}

long chi_bundle_hrr(long rank, const DivisorClass& c1, long c2) {
  const DivisorClass K = DivisorClass::canonical();
  // 12 chi = rank (K^2 + e) - 6 c1.K + 6 (c1^2 - 2 c2)
  const long twelve_chi = rank * (intersect(K, K) + kEulerNumberY) - 6 * intersect(c1, K) +
                          6 * (intersect(c1, c1) - 2 * c2);
  if (twelve_chi % 12 != 0) throw NonIntegral("chi_bundle_hrr: Euler characteristic is not integral");
  return twelve_chi / 12;
}

BundleChern cotangent_twisted(const DivisorClass& twist) {
  const DivisorClass K = DivisorClass::canonical();
  return {2, K + 2 * twist, kEulerNumberY + intersect(K, twist) + intersect(twist, twist)};
}

long chi_restricted_twist(const DivisorClass& component, long genus, const DivisorClass& twist) {
  return intersect(twist, component) + 1 - genus;
}

BidoubleInvariants bidouble_invariants(const ConfigCatalog& c) {
  const DivisorClass& K = c.canonical;
  DivisorClass branch_total;
  for (const auto& b : c.branch) branch_total += ConfigCatalog::total(b);

  BidoubleInvariants inv{};
  const DivisorClass half_canonical = 2 * K + branch_total;  // 2 K_cover = pi^*(2K + D)
  inv.k_squared_cover = intersect(half_canonical, half_canonical);

  // A (-2)-curve in D_j meeting neither other branch divisor has unramified
  // double cover preimage in the intermediate cover: two disjoint (-1)-curves.
  for (std::size_t j = 0; j < 3; ++j) {
    const DivisorClass others =
        ConfigCatalog::total(c.branch[(j + 1) % 3]) + ConfigCatalog::total(c.branch[(j + 2) % 3]);
    for (const auto& comp : c.branch[j])
      if (comp.genus == 0 && intersect(comp.cls, comp.cls) == -2 && intersect(comp.cls, others) == 0)
        inv.contracted_curves += 2;
  }
  inv.k_squared_minimal = inv.k_squared_cover + inv.contracted_curves;

  long twice_sum = 0;
  for (const auto& ch : c.characters) twice_sum += intersect(ch, ch + K);
  if (twice_sum % 2 != 0) throw NonIntegral("bidouble_invariants: chi is not integral");
  inv.chi_structure = 4 * kChiStructureY + twice_sum / 2;
  return inv;
}

namespace {

CharacterBound make_bound(std::string label, std::vector<Curve> log_curves,
                          std::vector<Curve> twist_curves, const DivisorClass& twist) {
  CharacterBound b;
  b.label = std::move(label);
  b.log_curves = std::move(log_curves);
  b.twist_curves = std::move(twist_curves);

  std::vector<DivisorClass> classes;
  for (const auto& c : b.log_curves) classes.push_back(c.cls);
  b.log_rank = rank_of_span(classes);
  // H^0(Omega^1_Y) = 0, so h^0 of the log sheaf is the kernel of the Chern
  // class map on the components.
  b.bound = static_cast<long>(b.log_curves.size()) - static_cast<long>(b.log_rank);

  DivisorClass rest = twist;
  for (const auto& c : b.log_curves) {
    const bool is_twist = std::any_of(b.twist_curves.begin(), b.twist_curves.end(),
                                      [&](const Curve& t) { return t.name == c.name; });
    if (!is_twist) rest += c.cls;
  }
  for (const auto& t : b.twist_curves) {
    const long deg = intersect(rest, t.cls);
    b.twist_degrees.push_back(deg);
    b.bound += std::max(0L, deg - 1);  // h^0(P^1, Omega^1(deg)) = h^0(O(deg - 2))
  }
  return b;
}

}  // namespace

ThetaReport theta_cohomology_report() {
  const ConfigCatalog c = catalog();
  ThetaReport t;
  Report& r = t.checks;

  const Report config = verify_configuration(c);
  r.add_bool("configuration", config.all_pass(),
             config.all_pass() ? "" : config.failures().front().name);

  const DivisorClass& K = c.canonical;
  const BundleChern omega = cotangent_twisted(K);
  t.chi_omega_twisted = chi_bundle_hrr(omega.rank, omega.c1, omega.c2);
  r.add("chi(Omega^1_Y(K_Y))", -4, t.chi_omega_twisted);

  std::array<long, 3> sections{};
  std::array<long, 3> components{};
  std::vector<DivisorClass> sectioned;
  for (std::size_t i = 0; i < 3; ++i) {
    for (const auto& comp : c.branch[i]) {
      t.chi_restricted += chi_restricted_twist(comp.cls, comp.genus, K);
      const long h0 = std::max(0L, intersect(K, comp.cls) + 1 - comp.genus);
      sections[i] += h0;
      if (h0 > 0) sectioned.push_back(comp.cls);
    }
    components[i] = static_cast<long>(c.branch[i].size());
  }
  r.add("chi(+ O_Di(K_Y))", 0, t.chi_restricted);
  r.add("h0(O_D1(K_Y))", 2, sections[0]);
  r.add("h0(O_D2(K_Y))", 0, sections[1]);
  r.add("h0(O_D3(K_Y))", 2, sections[2]);
  r.add("h0(O_D1)", 4, components[0]);
  r.add("h0(O_D2)", 2, components[1]);
  r.add("h0(O_D3)", 5, components[2]);

  const long total_sections = sections[0] + sections[1] + sections[2];
  const long section_rank = static_cast<long>(rank_of_span(sectioned));
  r.add("rank <S1, S2, S3, S4>", 4, section_rank);
  t.invariant_h2 = total_sections - section_rank;
  t.invariant_h1 = -(t.chi_omega_twisted + t.chi_restricted);
  r.add("h2(Theta)^inv", 0, t.invariant_h2);
  r.add("h1(Theta)^inv", 4, t.invariant_h1);

  const auto& S = c.sides;
  const auto& Dl = c.diagonals;
  const auto& f = c.conics;
  auto curve = [](const char* name, const DivisorClass& cls) { return Curve{name, cls, 0}; };
  const Curve S1 = curve("S1", S[0]), S2 = curve("S2", S[1]), S3 = curve("S3", S[2]),
              S4 = curve("S4", S[3]);
  const Curve f1 = curve("f1", f[0]), f1p = curve("f1'", f[0]), f2 = curve("f2", f[1]),
              f3 = curve("f3", f[2]);
  const Curve E1 = curve("E1", E(1)), E2 = curve("E2", E(2)), E3 = curve("E3", E(3));

  t.bounds[0] = make_bound("chi1", {curve("Delta1", Dl[0]), f2, S1, S2, f1}, {f1}, f[0] - E(4));
  t.bounds[1] = make_bound("chi2", {f3, S1, S2, S3, S4, E1, E3}, {E1, E3}, E(1) + E(3));
  t.bounds[2] = make_bound("chi3", {f1, f1p, S1, S2, S3, S4, E2}, {E2}, E(2));

  r.add("rank <Delta1, f2, S1, S2, f1>", 5, static_cast<long>(t.bounds[0].log_rank));
  r.add("rank <f3, S1..S4, E1, E3>", 6, static_cast<long>(t.bounds[1].log_rank));
  r.add("rank <f1, S1..S4, E2>", 6, rank_of_span({f[0], S[0], S[1], S[2], S[3], E(2)}));
  r.add("bound chi1", 2, t.bounds[0].bound);
  r.add("bound chi2", 3, t.bounds[1].bound);
  r.add("bound chi3", 3, t.bounds[2].bound);

  const AdjunctionReport adj = adjunction_chain();
  t.ks_squared = adj.ks_squared;
  t.chi_structure = adj.chi_s;
  const BidoubleInvariants bid = bidouble_invariants(c);
  r.add("K_S^2 (bidouble model)", t.ks_squared, bid.k_squared_minimal);
  r.add("chi(O_S) (bidouble model)", t.chi_structure, bid.chi_structure);

  t.chi_theta = 2 * t.ks_squared - 10 * t.chi_structure;
  r.add("chi(Theta_S)", 4, t.chi_theta);

  t.h2_upper = t.invariant_h2 + t.bounds[0].bound + t.bounds[1].bound + t.bounds[2].bound;
  r.add("h2(Theta) upper bound", 8, t.h2_upper);
  // h1 = h2 - chi <= h2_upper - chi, and h1 >= h1^inv.
  const long h1_upper = t.h2_upper - t.chi_theta;
  const bool squeezed = h1_upper == t.invariant_h1;
  r.add_bool("h1 bounds coincide", squeezed,
             "h1 in [" + std::to_string(t.invariant_h1) + ", " + std::to_string(h1_upper) + "]");
  if (squeezed) {
    t.h1 = t.invariant_h1;
    t.h2 = t.h1 + t.chi_theta;
  }
  r.add("h1(Theta_S)", 4, t.h1);
  r.add("h2(Theta_S)", 8, t.h2);
  return t;
}

}  // namespace surface_lab
