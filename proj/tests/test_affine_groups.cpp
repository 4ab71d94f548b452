#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "surface_lab/affine_groups.hpp"
#include "surface_lab/errors.hpp"

using namespace surface_lab;

namespace {

LatticeVector lv(std::vector<long> c) { return LatticeVector{std::move(c)}; }

// Adds an arbitrary lattice vector to every translation: another set of lifts
// of the same group elements.
ExtensionData perturbed(const ExtensionData& d, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> shift(-3, 3);
  ExtensionData out = d;
  for (auto& g : out.generators)
    for (auto& t : g.half_trans) t += 2 * shift(rng);
  return out;
}

}  // namespace

TEST_CASE("commutator table of the lifts") {
  const auto g = inoue_generators().generators;
  auto c = [&](int i, int j) { return commutator(g[i - 1], g[j - 1]); };
  CHECK(c(1, 2) == lv({0, 1, 0, 0, 0, 0, 0, 0}));
  CHECK(c(1, 3) == lv({-1, 0, 0, 0, 0, 0, 0, 0}));
  CHECK(c(1, 4) == lv({0, 0, 0, 0, 0, 0, 0, 0}));
  CHECK(c(1, 5) == lv({0, 0, 0, 0, -1, 0, 0, 0}));
  CHECK(c(2, 3) == lv({0, 0, 1, 0, 0, 0, 0, 0}));
  CHECK(c(2, 4) == lv({0, 0, 1, 1, 0, 0, 0, 0}));
  CHECK(c(2, 5) == lv({0, 0, 0, 0, 0, -1, 0, -1}));
  CHECK(c(3, 4) == lv({0, 0, 1, 1, 0, 0, 0, 0}));
  CHECK(c(3, 5) == lv({0, 0, 0, 0, 0, 0, -1, -1}));
  CHECK(c(4, 5) == lv({0, 0, 0, 0, 0, 0, -1, -1}));
}

TEST_CASE("commutators and squares agree with explicit composition") {
  const ExtensionData data = inoue_generators();
  const auto composed = oracle::composed_relations(data);
  const auto& g = data.generators;
  std::size_t k = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    CHECK(square_translation(g[i]) == composed.squares[i]);
    for (std::size_t j = i + 1; j < g.size(); ++j) CHECK(commutator(g[i], g[j]) == composed.commutators[k++]);
  }
  CHECK(square_translation(g[0]) == lv({0, 1, 0, 0, 0, 0, 0, 0}));
  CHECK(square_translation(g[3]).is_zero());
  CHECK(square_translation(g[4]) == lv({0, 0, 0, 0, 1, 1, 1, 1}));
}

TEST_CASE("group law") {
  const auto g = inoue_generators().generators;
  const AffineElement id = AffineElement::identity(4);
  for (const auto& x : g) {
    CHECK(x.compose(x.inverse()) == id);
    CHECK(x.inverse().compose(x) == id);
    for (const auto& y : g)
      for (const auto& z : g) CHECK(x.compose(y).compose(z) == x.compose(y.compose(z)));
  }
  CHECK(AffineElement::translation(lv({1, 0, 0, 0, 0, 0, 0, 1})).is_translation());
  CHECK_FALSE(g[0].is_translation());
  CHECK_THROWS_AS(g[0].lattice_translation(), NotInLattice);
}

TEST_CASE("sign condition") {
  const ExtensionData data = inoue_generators();
  CHECK(check_sign_condition(data));
  const std::uint32_t witnesses[4] = {0b00101, 0b00011, 0b01000, 0b01000};  // g1g3, g1g2, g4, g4
  for (std::size_t k = 0; k < 4; ++k) CHECK(generator_product(data, witnesses[k]).signs[k] == -1);
  for (const auto& w : sign_condition_witnesses(data)) CHECK(w.has_value());

  ExtensionData translation{1, {{{1}, {1, 0}}}};
  CHECK_FALSE(check_sign_condition(translation));
  ExtensionData negation{1, {{{-1}, {0, 0}}}};
  CHECK(check_sign_condition(negation));
}

TEST_CASE("abelianization of the Inoue extension") {
  const ExtensionData data = inoue_generators();
  const IntMatrix rel = abelianization_relations(data);
  CHECK(rel.cols() == 13);
  const FinAbGroup h1 = abelianize_extension(data);
  CHECK(h1 == FinAbGroup::from_invariants(0, {2, 2, 2, 2, 4}));
  CHECK(h1.to_string() == "Z/4 ⊕ (Z/2)^4");
}

TEST_CASE("abelianization agrees with homomorphism counts") {
  // |Hom(A, Z/M)| = prod gcd(d_i, M) pins the invariant factors of a finite
  // 2-group: 32 homs to Z/2 means five factors, 1 hom to Z/3 excludes free
  // and 3-torsion, 64 to both Z/4 and Z/8 leaves only (2,2,2,2,4).
  const ExtensionData data = inoue_generators();
  CHECK(oracle::count_homs(data, 2) == 32);
  CHECK(oracle::count_homs(data, 3) == 1);
  CHECK(oracle::count_homs(data, 4) == 64);
  CHECK(oracle::count_homs(data, 8) == 64);
}

TEST_CASE("abelianization is independent of the chosen lifts") {
  std::mt19937_64 rng(2024);
  const FinAbGroup expected = abelianize_extension(inoue_generators());
  for (int t = 0; t < 50; ++t) CHECK(abelianize_extension(perturbed(inoue_generators(), rng)) == expected);
}

TEST_CASE("small extensions") {
  // z -> -z on Z + Z tau: Z/2 + (Z/2)^2.
  ExtensionData dihedral{1, {{{-1}, {0, 0}}}};
  CHECK(*abelianize_extension(dihedral).order() == 8);
  // Translation by half a period refines the lattice: Z^2.
  ExtensionData half{1, {{{1}, {1, 0}}}};
  CHECK(abelianize_extension(half) == FinAbGroup::from_cyclic(2, {}));
}

TEST_CASE("commutator subspan rank") {
  const ExtensionData data = inoue_generators();
  CHECK(commutator_subspan_rank(data, 0, {0, 1, 4, 5}) == 3);
  CHECK(commutator_subspan_rank(data, 0, {0, 1, 2, 3, 4, 5, 6, 7}) == 3);
}

TEST_CASE("invalid extension data") {
  ExtensionData bad{2, {{{1, 2}, {0, 0, 0, 0}}}};
  CHECK_THROWS_AS(bad.validate(), InvalidArgument);
  ExtensionData ragged{2, {{{1, 1}, {0, 0}}}};
  CHECK_THROWS_AS(ragged.validate(), InvalidArgument);
}
