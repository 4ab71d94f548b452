#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <random>

#include "surface_lab/character_calculus.hpp"
#include "surface_lab/errors.hpp"

using namespace surface_lab;

namespace {

SignCharacter chi(const std::string& s) {
  SignCharacter c;
  for (char x : s) c.signs.push_back(x == '+' ? 1 : -1);
  return c;
}

const std::vector<std::size_t> kH{0, 1, 2, 3};  // g1..g4

GradedSpace random_space(std::mt19937_64& rng, std::size_t k) {
  GradedSpace g;
  g.generators = k;
  std::uniform_int_distribution<std::uint32_t> mask(0, (1u << k) - 1);
  std::uniform_int_distribution<long> mult(0, 3);
  for (int i = 0; i < 3; ++i) {
    SignCharacter c;
    const std::uint32_t m = mask(rng);
    for (std::size_t j = 0; j < k; ++j) c.signs.push_back(m & (1u << j) ? -1 : 1);
    g.add(c, mult(rng));
  }
  return g;
}

}  // namespace

TEST_CASE("characters of the Legendre section on each factor") {
  const ExtensionData g = inoue_generators();
  const auto coord1 = coordinate_actions(g, 0);
  CHECK(character_of_basis({coord1[0]}) == chi("-"));  // -z + 1/2
  CHECK(character_of_basis({coord1[3]}) == chi("+"));  // identity
  CHECK(section_space(g, 0, kH).multiplicity(chi("-+-+")) == 1);
  CHECK(section_space(g, 1, kH).multiplicity(chi("--++")) == 1);
  CHECK(section_space(g, 2, kH).multiplicity(chi("+--+")) == 1);
  CHECK(section_space(g, 3, kH).multiplicity(chi("+--+")) == 1);
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(section_space(g, k, kH).multiplicity(chi("++++")) == 1);
    CHECK(section_space(g, k, kH).dimension() == 2);
  }
}

TEST_CASE("a tau/2 translation does not act linearly") {
  const ExtensionData g = inoue_generators();
  CHECK_THROWS_AS(character_of_basis(coordinate_actions(g, 0)), UnsupportedTranslation);
  CHECK_THROWS_AS(section_space(product_pencil_group(true), 0, {0, 1, 2, 3}), UnsupportedTranslation);
  CHECK_THROWS_AS(character_of_basis({{1, 1, 1}}), UnsupportedTranslation);
}

TEST_CASE("four-summand decomposition") {
  const ExtensionData g = inoue_generators();
  const GradedSpace v = tensor({section_space(g, 0, kH), section_space(g, 1, kH), section_space(g, 2, kH)});
  CHECK(v.dimension() == 8);
  CHECK(v.components.size() == 4);
  for (const char* c : {"++++", "+--+", "--++", "-+-+"}) CHECK(v.multiplicity(chi(c)) == 2);
  CHECK(invariant_dim(v, {1, 2, 4, 8}) == 2);
  CHECK(invariant_dim(v, {}) == 8);
}

TEST_CASE("invariant pencil on a product of two elliptic curves") {
  const ExtensionData h = product_pencil_group();
  const GradedSpace v1 = section_space(h, 0, {0, 1, 2});
  const GradedSpace v2 = section_space(h, 1, {0, 1, 2});
  CHECK(v1.multiplicity(chi("+++")) == 1);
  CHECK(v1.multiplicity(chi("++-")) == 1);
  const GradedSpace v = tensor({v1, v2});
  CHECK(invariant_dim(v, {1, 2, 4}) == 2);
  CHECK(invariant_dim(v, {}) == 4);
  CHECK(v.multiplicity(chi("+++")) == 2);
}

TEST_CASE("tensor and invariant properties") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 100; ++t) {
    const GradedSpace a = random_space(rng, 4), b = random_space(rng, 4);
    const GradedSpace ab = tensor({a, b});
    CHECK(ab.dimension() == a.dimension() * b.dimension());
    CHECK(tensor({a, GradedSpace::trivial(4)}).components == a.components);
    CHECK(tensor({b, a}).components == ab.components);
    // A larger subgroup has fewer invariants.
    CHECK(invariant_dim(ab, {1, 2, 4, 8}) <= invariant_dim(ab, {1, 2}));
    CHECK(invariant_dim(ab, {1, 2}) <= invariant_dim(ab, {1}));
    CHECK(invariant_dim(ab, {1}) <= invariant_dim(ab, {}));
    // Redundant generators change nothing.
    CHECK(invariant_dim(ab, {1, 2}) == invariant_dim(ab, {1, 2, 3}));
  }
  CHECK_THROWS_AS(tensor({}), InvalidArgument);
  CHECK_THROWS_AS(tensor({GradedSpace::trivial(2), GradedSpace::trivial(3)}), InvalidArgument);
  CHECK(chi("+-") * chi("--") == chi("-+"));
  CHECK(chi("+-").value(3) == -1);
  CHECK(chi("--").value(3) == 1);
}

TEST_CASE("the genus-5 factor as a cover of the line") {
  const GenusFiveFactor d = genus_five_factor();
  CHECK(d.kernel == 1u);  // only g1 acts trivially
  CHECK(d.cover.n == 4);
  CHECK(d.cover.branch_images.size() == 5);
  CHECK(cover_genus(d.cover) == 5);
  // Bits of the quotient: g2, g3, g4, g5. Images g3, g2g3, g2g3g4, g3g5, g4g5.
  CHECK(d.cover.branch_images == std::vector<F2Vector>{0b0010, 0b0011, 0b0111, 0b1010, 0b1100});
  // Every element with fixed points has 8 of them.
  for (F2Vector e : d.cover.branch_images) CHECK(fixed_point_count(d.cover, e) == 8);
}

TEST_CASE("invariant holomorphic one-forms") {
  const GradedSpace forms = one_forms_space();
  CHECK(forms.dimension() == 7);
  CHECK(one_forms_invariants() == 0);
  CHECK(one_forms_invariants({2, 4, 8, 16}) == 1);
  CHECK(one_forms_invariants({}) == 7);
  // Forms on D invariant under g1 are all of H^0(Omega^1_D); with dz_2 that is 6.
  CHECK(one_forms_invariants({1}) == 6);
  // dz_1, dz_2 and the five D-characters are seven distinct nontrivial characters.
  CHECK(forms.components.size() == 7);
  for (const auto& [c, m] : forms.components) {
    CHECK(m == 1);
    CHECK_FALSE(c.is_trivial());
  }
}

TEST_CASE("invariant members of the pencil") {
  CHECK(pencil_invariant_count({2.0, 0.0}) == 2);
  CHECK(pencil_invariant_count({-3.0, 4.0}) == 2);
  const auto [c1, c2] = pencil_fixed_points({-3.0, 4.0});
  CHECK(std::abs(c1 * c1 - std::complex<double>(-3.0, 4.0)) < 1e-12);
  CHECK(std::abs(c1 + c2) < 1e-15);
  CHECK_THROWS_AS(pencil_invariant_count({0.0, 0.0}), ZeroParameter);
}
