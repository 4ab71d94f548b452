#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <set>

#include "surface_lab/errors.hpp"
#include "surface_lab/orbifold_covers.hpp"

using namespace surface_lab;

namespace {

// All subgroups of F_2^n, as sorted element sets, by closing up one vector
// at a time.
std::set<std::vector<F2Vector>> all_subgroups(std::size_t n) {
  std::set<std::vector<F2Vector>> out{{0}};
  std::vector<std::vector<F2Vector>> queue{{0}};
  while (!queue.empty()) {
    const auto s = queue.back();
    queue.pop_back();
    for (F2Vector v = 1; v < (F2Vector{1} << n); ++v) {
      if (std::binary_search(s.begin(), s.end(), v)) continue;
      auto gens = s;
      gens.push_back(v);
      auto next = Subgroup::spanned_by(gens).elements();
      if (out.insert(next).second) queue.push_back(next);
    }
  }
  return out;
}

long euler_count_genus(const BranchedCoverData& c, const std::vector<F2Vector>& h) {
  // Euler characteristic of D/H from the orbifold point count: the degree
  // |G/H| cover of the line has |G/H| / 2 points over each branch point whose
  // image is outside H, and |G/H| points over the others.
  const long deg = static_cast<long>(c.group_order() / h.size());
  long e = 2 * deg;
  for (F2Vector b : c.branch_images) {
    const bool inside = std::find(h.begin(), h.end(), b) != h.end();
    e -= inside ? 0 : deg / 2;
  }
  return 1 - e / 2;
}

}  // namespace

TEST_CASE("genus of maximal covers") {
  CHECK(cover_genus(maximal_cover(5)) == 5);
  CHECK(cover_genus(maximal_cover(3)) == 0);
  CHECK(cover_genus(maximal_cover(4)) == 1);
  for (std::size_t m = 3; m <= 9; ++m) {
    const long g = cover_genus(maximal_cover(m));
    CHECK(2 * (2 * g - 2) == (1L << (m - 1)) * (static_cast<long>(m) - 4));
  }
}

TEST_CASE("corank-1 subgroups of the genus-5 cover") {
  const BranchedCoverData c = maximal_cover(5);
  CHECK(corank1_subgroups(4).size() == 15);
  const SubgroupHistogram h = classify_corank1_subgroups(c);
  CHECK(h == SubgroupHistogram{{{1, 1}, 5}, {{3, 0}, 10}});
}

TEST_CASE("fixed points of involutions") {
  const BranchedCoverData c = maximal_cover(5);
  long total = 0;
  for (F2Vector g = 1; g < 16; ++g) {
    const bool image = std::find(c.branch_images.begin(), c.branch_images.end(), g) != c.branch_images.end();
    CHECK(fixed_point_count(c, g) == (image ? 8 : 0));
    total += fixed_point_count(c, g);
  }
  CHECK(total == 40);
  CHECK_THROWS_AS(fixed_point_count(c, 0), IdentityElement);
}

TEST_CASE("quotient genus agrees with an Euler characteristic count for every subgroup") {
  for (std::size_t m : {4u, 5u, 6u}) {
    const BranchedCoverData c = maximal_cover(m);
    for (const auto& elems : all_subgroups(c.n)) {
      const Subgroup h = Subgroup::spanned_by(elems);
      CHECK(quotient_genus(c, h) == euler_count_genus(c, elems));
    }
  }
}

TEST_CASE("Chevalley-Weil multiplicities sum to the quotient genus") {
  // Invariant one-forms of D under H are the forms on D/H, so the
  // multiplicities of characters trivial on H add up to g(D/H).
  const BranchedCoverData c = maximal_cover(5);
  for (const auto& elems : all_subgroups(c.n)) {
    long forms = 0;
    for (F2Vector u = 1; u < 16; ++u) {
      const bool trivial_on_h = std::all_of(elems.begin(), elems.end(), [&](F2Vector h) {
        return std::popcount(u & h) % 2 == 0;
      });
      if (trivial_on_h) forms += form_multiplicity(c, u);
    }
    CHECK(forms == quotient_genus(c, Subgroup::spanned_by(elems)));
  }
  long all = 0;
  for (F2Vector u = 0; u < 16; ++u) all += form_multiplicity(c, u);
  CHECK(all == 5);
}

TEST_CASE("orbifold group abelianization and homology bound") {
  for (std::size_t m = 3; m <= 7; ++m) {
    const FinAbGroup a = orbifold_abelianization(m);
    CHECK(a.free_rank() == 0);
    CHECK(a.torsion().size() == m - 1);
    CHECK(*a.order() == (1L << (m - 1)));
  }
  CHECK(homology_order_bound() == 64);
  CHECK(homology_bound_check());
}

TEST_CASE("Hurwitz solutions for a genus-5 curve") {
  CHECK(hurwitz_base_solutions(5, 4) == std::vector<HurwitzSolution>{{0, 5}});
  CHECK(hurwitz_base_solutions(5, 5).empty());
  // Exhaustive check against the formula for small genera.
  for (long g = 0; g <= 9; ++g)
    for (std::size_t n = 1; n <= 4; ++n)
      for (const auto& s : hurwitz_base_solutions(g, n)) {
        CHECK(2 * (2 * g - 2) == (1L << n) * (4 * s.base_genus - 4 + static_cast<long>(s.branch_points)));
        CHECK(s.branch_points != 1);
      }
}

TEST_CASE("invalid branch data") {
  BranchedCoverData bad;
  bad.n = 2;
  bad.branch_images = {1, 2};  // does not sum to zero
  CHECK_THROWS_AS(bad.validate(), InvalidArgument);
  bad.branch_images = {1, 1};  // does not generate
  CHECK_THROWS_AS(bad.validate(), InvalidArgument);
  bad.branch_images = {1, 0, 1};
  CHECK_THROWS_AS(bad.validate(), InvalidArgument);
  CHECK_THROWS_AS(maximal_cover(1), InvalidArgument);
  CHECK_THROWS_AS(Subgroup::kernel_of(0, 4), InvalidArgument);
}

TEST_CASE("covers with repeated branch images") {
  BranchedCoverData c;
  c.n = 2;
  c.branch_images = {1, 1, 2, 2, 3, 3};
  CHECK(cover_genus(c) == 3);
  c.branch_images = {1, 2, 3};
  CHECK(cover_genus(c) == 0);
  CHECK(fixed_point_count(c, 1) == 2);
}
