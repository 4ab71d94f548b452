#ifndef SURFACE_LAB_ORBIFOLD_COVERS_HPP
#define SURFACE_LAB_ORBIFOLD_COVERS_HPP

// Galois covers of the projective line with group G = (Z/2)^n, described by
// the images e_1..e_m in G of loops around the branch points. Group elements
// are F_2-vectors packed into the low n bits of a word.

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "surface_lab/affine_groups.hpp"
#include "surface_lab/integer_algebra.hpp"

namespace surface_lab {

using F2Vector = std::uint32_t;

struct BranchedCoverData {
  std::size_t n = 0;
  std::vector<F2Vector> branch_images;

  std::size_t group_order() const { return std::size_t{1} << n; }
  std::size_t branch_count() const { return branch_images.size(); }

  /// Throws InvalidArgument unless every e_i is nonzero, sum e_i = 0 and the
  /// e_i generate G.
  void validate() const;
};

/// The maximal (Z/2)^{m-1} cover branched at m points: e_i = i-th basis
/// vector for i < m and e_m = e_1 + ... + e_{m-1}.
BranchedCoverData maximal_cover(std::size_t m);

/// Rank of the span of `vectors` over F_2.
std::size_t f2_rank(const std::vector<F2Vector>& vectors);

struct Subgroup {
  std::vector<F2Vector> basis;

  std::size_t dim() const { return basis.size(); }
  bool contains(F2Vector v) const;
  /// All 2^dim elements.
  std::vector<F2Vector> elements() const;

  /// Reduces an arbitrary generating list to an independent basis.
  static Subgroup spanned_by(const std::vector<F2Vector>& generators);
  /// Kernel of the functional v -> <u, v> on F_2^n (u != 0).
  static Subgroup kernel_of(F2Vector u, std::size_t n);
};

long cover_genus(const BranchedCoverData& c);

/// Genus of D/H, computed as the G/H cover of the line with branch images
/// the classes of e_i modulo H.
long quotient_genus(const BranchedCoverData& c, const Subgroup& h);

long fixed_point_count(const BranchedCoverData& c, F2Vector g);

/// All index-2 subgroups, one per nonzero functional.
std::vector<Subgroup> corank1_subgroups(std::size_t n);

/// Key: (number of branch images contained in H, genus of D/H).
using SubgroupHistogram = std::map<std::pair<std::size_t, long>, std::size_t>;
SubgroupHistogram classify_corank1_subgroups(const BranchedCoverData& c);

/// Abelianization of <x_1..x_m | x_1 x_2 ... x_m, x_i^2>.
FinAbGroup orbifold_abelianization(std::size_t m);

/// 2 * |(orbifold abelianization for 5 points) + Z/2|, the upper bound for
/// |H_1(S, Z)|.
long homology_order_bound();

/// True iff the bound equals |abelianize_extension(data)|.
bool homology_bound_check(const ExtensionData& data);
bool homology_bound_check();

/// Multiplicity of the character v -> (-1)^{<u, v>} of G in the space of
/// holomorphic 1-forms of the cover (Chevalley-Weil for branch stabilizers
/// of order 2): 0 for u = 0, else k/2 - 1 where k counts the e_i with
/// <u, e_i> = 1.
long form_multiplicity(const BranchedCoverData& c, F2Vector u);

/// Possible base data (h, m) for a (Z/2)^n Galois cover of total genus g:
/// solutions of 2g - 2 = 2^n (2h - 2 + m/2) that an abelian cover can
/// realize (the branch images must sum to zero and, together with the
/// 2h handle images, generate G).
struct HurwitzSolution {
  long base_genus;
  std::size_t branch_points;
  friend bool operator==(const HurwitzSolution&, const HurwitzSolution&) = default;
};
std::vector<HurwitzSolution> hurwitz_base_solutions(long genus, std::size_t n);

}  // namespace surface_lab

#endif  // SURFACE_LAB_ORBIFOLD_COVERS_HPP
