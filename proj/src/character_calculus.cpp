#include "surface_lab/character_calculus.hpp"

#include <algorithm>
#include <numeric>

#include "surface_lab/errors.hpp"

namespace surface_lab {

SignCharacter SignCharacter::trivial(std::size_t k) { return SignCharacter{std::vector<int>(k, 1)}; }

bool SignCharacter::is_trivial() const {
  return std::all_of(signs.begin(), signs.end(), [](int s) { return s == 1; });
}

int SignCharacter::value(std::uint32_t mask) const {
  int v = 1;
  for (std::size_t i = 0; i < signs.size(); ++i)
    if (mask & (1u << i)) v *= signs[i];
  return v;
}

bool SignCharacter::trivial_on(const std::vector<std::uint32_t>& subgroup_gens) const {
  return std::all_of(subgroup_gens.begin(), subgroup_gens.end(),
                     [&](std::uint32_t m) { return value(m) == 1; });
}

SignCharacter operator*(const SignCharacter& a, const SignCharacter& b) {
  if (a.size() != b.size()) throw InvalidArgument("SignCharacter: generator count mismatch");
  SignCharacter out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out.signs[i] *= b.signs[i];
  return out;
}

std::string SignCharacter::to_string() const {
  std::string s;
  for (int v : signs) s += v > 0 ? '+' : '-';
  return s;
}

GradedSpace GradedSpace::trivial(std::size_t k) {
  GradedSpace g;
  g.generators = k;
  g.add(SignCharacter::trivial(k));
  return g;
}

void GradedSpace::add(const SignCharacter& chi, long multiplicity) {
  if (chi.size() != generators) throw InvalidArgument("GradedSpace: generator count mismatch");
  if (multiplicity < 0) throw InvalidArgument("GradedSpace: negative multiplicity");
  if (multiplicity == 0) return;
  components[chi] += multiplicity;
}

long GradedSpace::dimension() const {
  return std::accumulate(components.begin(), components.end(), 0L,
                         [](long acc, const auto& kv) { return acc + kv.second; });
}

long GradedSpace::multiplicity(const SignCharacter& chi) const {
  const auto it = components.find(chi);
  return it == components.end() ? 0 : it->second;
}

std::vector<CoordinateAction> coordinate_actions(const ExtensionData& data, std::size_t k) {
  data.validate();
  if (k >= data.n) throw InvalidArgument("coordinate_actions: coordinate out of range");
  std::vector<CoordinateAction> out;
  for (const auto& g : data.generators)
    out.push_back({g.signs[k], g.half_trans[k], g.half_trans[data.n + k]});
  return out;
}

SignCharacter character_of_basis(const std::vector<CoordinateAction>& actions) {
  SignCharacter chi;
  for (const auto& a : actions) {
    if (a.half_tau % 2 != 0)
      throw UnsupportedTranslation("character_of_basis: tau/2 translation does not preserve <L>");
    chi.signs.push_back(a.half_e % 2 != 0 ? -1 : 1);
  }
  return chi;
}

GradedSpace section_space(const std::vector<CoordinateAction>& actions) {
  GradedSpace v = GradedSpace::trivial(actions.size());
  v.add(character_of_basis(actions));
  return v;
}

GradedSpace section_space(const ExtensionData& data, std::size_t k,
                          const std::vector<std::size_t>& generator_indices) {
  const auto all = coordinate_actions(data, k);
  std::vector<CoordinateAction> chosen;
  for (std::size_t i : generator_indices) {
    if (i >= all.size()) throw InvalidArgument("section_space: generator index out of range");
    chosen.push_back(all[i]);
  }
  return section_space(chosen);
}

GradedSpace tensor(const std::vector<GradedSpace>& spaces) {
  if (spaces.empty()) throw InvalidArgument("tensor: empty list");
  GradedSpace acc = spaces.front();
  for (std::size_t s = 1; s < spaces.size(); ++s) {
    if (spaces[s].generators != acc.generators)
      throw InvalidArgument("tensor: generator count mismatch");
    GradedSpace next;
    next.generators = acc.generators;
    for (const auto& [a, ma] : acc.components)
      for (const auto& [b, mb] : spaces[s].components) next.add(a * b, ma * mb);
    acc = std::move(next);
  }
  return acc;
}

long invariant_dim(const GradedSpace& space, const std::vector<std::uint32_t>& subgroup_gens) {
  long total = 0;
  for (const auto& [chi, mult] : space.components)
    if (chi.trivial_on(subgroup_gens)) total += mult;
  return total;
}

ExtensionData product_pencil_group(bool with_tau_generator) {
  ExtensionData data;
  data.n = 2;
  data.generators = {
      {{-1, 1}, {0, 0, 0, 0}},
      {{1, -1}, {0, 0, 0, 0}},
      {{1, 1}, {1, 1, 0, 0}},
  };
  if (with_tau_generator) data.generators.push_back({{1, 1}, {0, 0, 1, 1}});
  return data;
}

namespace {

// Fixed locus of z -> sign z + t on E, described by the values of L on it.
enum class Locus {
  kNone,         // free translation
  kWhole,        // identity on this factor
  kHalfPeriods,  // L in {+-1, +-a}
  kZeroInfinity, // L in {0, oo}: the points +-1/4 + {0, tau/2}
  kPlusMinusB,   // L in {+-b}: tau/4 + half-periods
  kPlusMinusIB,  // L in {+-ib}, since L((1+tau)/4)^2 = -a
};

Locus fixed_locus(int sign, long half_e, long half_tau) {
  const bool te = half_e % 2 != 0;
  const bool tt = half_tau % 2 != 0;
  if (sign == 1) return (te || tt) ? Locus::kNone : Locus::kWhole;
  if (!te && !tt) return Locus::kHalfPeriods;
  if (te && !tt) return Locus::kZeroInfinity;
  if (!te && tt) return Locus::kPlusMinusB;
  return Locus::kPlusMinusIB;
}

// Whether the product of the two fixed loci meets L_3 L_4 = b_3 b_4 for
// generic moduli. A whole factor meets it over every value of the other
// coordinate; otherwise the value sets must multiply to b_3 b_4.
bool meets_curve(Locus a, Locus b) {
  if (a == Locus::kNone || b == Locus::kNone) return false;
  if (a == Locus::kWhole || b == Locus::kWhole) return true;
  return a == b && a != Locus::kHalfPeriods;
}

constexpr std::size_t kCurveCoords[2] = {2, 3};

}  // namespace

GenusFiveFactor genus_five_factor() {
  const ExtensionData data = inoue_generators();
  const std::uint32_t group = 1u << data.generators.size();
  GenusFiveFactor out;

  for (std::uint32_t m = 1; m < group; ++m) {
    const AffineElement g = generator_product(data, m);
    const bool trivial = std::all_of(std::begin(kCurveCoords), std::end(kCurveCoords), [&](std::size_t k) {
      return fixed_locus(g.signs[k], g.half_trans[k], g.half_trans[data.n + k]) == Locus::kWhole;
    });
    if (trivial) out.kernel |= m;
  }
  if (out.kernel != 1u)
    throw Error("genus_five_factor: expected g_1 to be the only element acting trivially on D");

  out.cover.n = data.generators.size() - 1;
  for (std::uint32_t m = 2; m < group; m += 2) {  // masks without g_1 represent the quotient
    const AffineElement g = generator_product(data, m);
    const Locus a = fixed_locus(g.signs[2], g.half_trans[2], g.half_trans[data.n + 2]);
    const Locus b = fixed_locus(g.signs[3], g.half_trans[3], g.half_trans[data.n + 3]);
    if (meets_curve(a, b)) out.cover.branch_images.push_back(m >> 1);
  }
  out.cover.validate();
  return out;
}

GradedSpace one_forms_space() {
  const ExtensionData data = inoue_generators();
  const std::size_t k = data.generators.size();
  GradedSpace space;
  space.generators = k;

  for (std::size_t coord : {0u, 1u}) {
    SignCharacter chi;
    for (const auto& g : data.generators) chi.signs.push_back(g.signs[coord]);
    space.add(chi);
  }

  const GenusFiveFactor d = genus_five_factor();
  for (F2Vector u = 1; u < (F2Vector{1} << d.cover.n); ++u) {
    SignCharacter chi{{1}};  // g_1 acts trivially on D
    for (std::size_t j = 0; j < d.cover.n; ++j) chi.signs.push_back((u >> j) & 1u ? -1 : 1);
    space.add(chi, form_multiplicity(d.cover, u));
  }
  return space;
}

long one_forms_invariants(const std::vector<std::uint32_t>& subgroup_gens) {
  return invariant_dim(one_forms_space(), subgroup_gens);
}

std::pair<std::complex<double>, std::complex<double>> pencil_fixed_points(std::complex<double> A) {
  if (A == std::complex<double>{}) throw ZeroParameter("pencil: A = 0 gives a degenerate involution");
  const std::complex<double> r = std::sqrt(A);
  return {r, -r};
}

long pencil_invariant_count(std::complex<double> A) {
  const auto [c1, c2] = pencil_fixed_points(A);
  // c = 0 and c = oo are swapped by c -> A / c, so only finite nonzero roots count.
  return c1 == c2 ? 1 : 2;
}

}  // namespace surface_lab
