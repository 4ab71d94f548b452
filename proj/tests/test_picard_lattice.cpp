#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "surface_lab/errors.hpp"
#include "surface_lab/picard_lattice.hpp"

using namespace surface_lab;

namespace {

DivisorClass L() { return DivisorClass::line(); }
DivisorClass E(std::size_t i) { return DivisorClass::exceptional(i); }

}  // namespace

TEST_CASE("intersection form") {
  const DivisorClass K = DivisorClass::canonical();
  CHECK(intersect(K, K) == 3);
  CHECK(intersect(L(), L()) == 1);
  for (std::size_t i = 1; i <= 6; ++i) {
    CHECK(intersect(E(i), E(i)) == -1);
    CHECK(intersect(K, E(i)) == -1);
  }
  std::vector<DivisorClass> basis{L()};
  for (std::size_t i = 1; i <= 6; ++i) basis.push_back(E(i));
  CHECK(signature(basis) == std::pair<std::size_t, std::size_t>{1, 6});
  CHECK_THROWS_AS(DivisorClass::exceptional(0), InvalidArgument);
  CHECK_THROWS_AS(DivisorClass::exceptional(7), InvalidArgument);
  CHECK((2 * L() - E(1)).to_string() == "2L - E1");
  CHECK(DivisorClass{}.to_string() == "0");
}

TEST_CASE("configuration relations") {
  const Report r = verify_configuration(catalog());
  for (const auto& f : r.failures()) FAIL_CHECK(f.name << ": expected " << f.expected << ", got " << f.actual);
  CHECK(r.all_pass());
  CHECK(r.items.size() > 60);
}

TEST_CASE("adjunction for every catalog curve") {
  const DivisorClass K = DivisorClass::canonical();
  for (const auto& c : catalog().curves())
    CHECK_MESSAGE(intersect(c.cls, c.cls) + intersect(K, c.cls) == 2 * c.genus - 2, c.name);
  for (const auto& b : catalog().branch)
    for (const auto& c : b) CHECK(intersect(c.cls, c.cls) + intersect(K, c.cls) == -2);
}

TEST_CASE("sides are (-2)-curves, the other lines and conics have the expected squares") {
  const ConfigCatalog c = catalog();
  for (const auto& s : c.sides) CHECK(intersect(s, s) == -2);
  for (const auto& d : c.diagonals) CHECK(intersect(d, d) == -1);
  for (const auto& f : c.conics) CHECK(intersect(f, f) == 0);
  CHECK(intersect(c.diagonals[1], c.diagonals[1]) == -1);
  CHECK(intersect(2 * c.diagonals[1] - E(5) - E(6), c.diagonals[1]) == -2);
}

TEST_CASE("ranks of logarithmic curve sets") {
  const ConfigCatalog c = catalog();
  const auto& S = c.sides;
  CHECK(rank_of_span({c.diagonals[0], c.conics[1], S[0], S[1], c.conics[0]}) == 5);
  CHECK(rank_of_span({c.conics[2], S[0], S[1], S[2], S[3], E(1), E(3)}) == 6);
  CHECK(rank_of_span({c.conics[0], S[0], S[1], S[2], S[3], E(2)}) == 6);
  CHECK(rank_of_span({S[0], S[1], S[2], S[3]}) == 4);
  std::vector<DivisorClass> all;
  for (const auto& k : c.curves()) all.push_back(k.cls);
  CHECK(rank_of_span(all) == 7);
  CHECK(rank_of_span({}) == 0);
  // The sides span a negative definite lattice.
  CHECK(signature({S[0], S[1], S[2], S[3]}) == std::pair<std::size_t, std::size_t>{0, 4});
  CHECK(signature({c.conics[0], c.conics[1]}) == std::pair<std::size_t, std::size_t>{1, 1});
}

TEST_CASE("Riemann-Roch on Y") {
  const DivisorClass K = DivisorClass::canonical();
  CHECK(chi_bundle_hrr(1, DivisorClass{}, 0) == 1);
  CHECK(chi_bundle_hrr(1, L(), 0) == 3);
  CHECK(chi_bundle_hrr(1, -K, 0) == 4);
  const BundleChern omega = cotangent_twisted(DivisorClass{});
  CHECK(chi_bundle_hrr(omega.rank, omega.c1, omega.c2) == -7);
  const BundleChern twisted = cotangent_twisted(K);
  CHECK(twisted.c2 == 9 + 3 + 3);
  CHECK(chi_bundle_hrr(twisted.rank, twisted.c1, twisted.c2) == -4);
  // Serre duality: chi(O(D)) = chi(O(K - D)) for line bundles.
  for (const auto& d : {L(), E(1), 2 * L() - E(1) - E(2), -K + E(3)})
    CHECK(chi_bundle_hrr(1, d, 0) == chi_bundle_hrr(1, K - d, 0));
}

TEST_CASE("restricted Euler characteristics") {
  const ConfigCatalog c = catalog();
  const DivisorClass K = c.canonical;
  CHECK(chi_restricted_twist(c.diagonals[0], 0, K) == 0);
  CHECK(chi_restricted_twist(c.conics[0], 0, K) == -1);
  CHECK(chi_restricted_twist(c.sides[0], 0, K) == 1);
  long total = 0;
  for (const auto& b : c.branch)
    for (const auto& comp : b) total += chi_restricted_twist(comp.cls, comp.genus, K);
  CHECK(total == 0);
}

TEST_CASE("h1 and h2 of the tangent sheaf") {
  const ThetaReport t = theta_cohomology_report();
  for (const auto& f : t.checks.failures()) FAIL_CHECK(f.name << ": expected " << f.expected << ", got " << f.actual);
  CHECK(t.chi_omega_twisted == -4);
  CHECK(t.chi_restricted == 0);
  CHECK(t.invariant_h1 == 4);
  CHECK(t.invariant_h2 == 0);
  CHECK(t.bounds[0].bound == 2);
  CHECK(t.bounds[1].bound == 3);
  CHECK(t.bounds[2].bound == 3);
  CHECK(t.bounds[0].twist_degrees == std::vector<long>{3});
  CHECK(t.bounds[1].twist_degrees == std::vector<long>{2, 2});
  CHECK(t.bounds[2].twist_degrees == std::vector<long>{3});
  CHECK(t.chi_theta == 4);
  CHECK(t.h2_upper == 8);
  CHECK(t.h1 == 4);
  CHECK(t.h2 == 8);
  CHECK(t.all_pass());
}

TEST_CASE("bidouble cover invariants") {
  const BidoubleInvariants b = bidouble_invariants(catalog());
  CHECK(b.k_squared_cover == -1);
  CHECK(b.contracted_curves == 8);
  CHECK(b.k_squared_minimal == 7);
  CHECK(b.chi_structure == 1);
}
