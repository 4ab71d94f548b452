#ifndef SURFACE_LAB_CHARACTER_CALCULUS_HPP
#define SURFACE_LAB_CHARACTER_CALCULUS_HPP

// Sign characters of elementary abelian 2-groups acting on spaces of
// sections. A character is the list of its values (+-1) on an ordered list of
// group generators; a subgroup element is a bit mask over that list.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "surface_lab/affine_groups.hpp"
#include "surface_lab/orbifold_covers.hpp"

namespace surface_lab {

struct SignCharacter {
  std::vector<int> signs;

  static SignCharacter trivial(std::size_t k);

  std::size_t size() const { return signs.size(); }
  bool is_trivial() const;
  /// Value on the product of the generators selected by `mask`.
  int value(std::uint32_t mask) const;
  bool trivial_on(const std::vector<std::uint32_t>& subgroup_gens) const;

  friend SignCharacter operator*(const SignCharacter& a, const SignCharacter& b);
  friend auto operator<=>(const SignCharacter&, const SignCharacter&) = default;
  friend bool operator==(const SignCharacter&, const SignCharacter&) = default;

  /// "+-+-" style string, one symbol per generator.
  std::string to_string() const;
};

struct GradedSpace {
  std::size_t generators = 0;
  std::map<SignCharacter, long> components;  // character -> multiplicity

  static GradedSpace trivial(std::size_t k);  // C with trivial action
  void add(const SignCharacter& chi, long multiplicity = 1);
  long dimension() const;
  long multiplicity(const SignCharacter& chi) const;
};

/// z -> sign * z + (half_e + half_tau * tau) / 2 on one elliptic coordinate.
struct CoordinateAction {
  int sign = 1;
  long half_e = 0;
  long half_tau = 0;
};

/// Actions of every generator of `data` on coordinate k (0-based).
std::vector<CoordinateAction> coordinate_actions(const ExtensionData& data, std::size_t k);

/// Eigenvalues of the Legendre section L under each action: L is even and
/// changes sign under z -> z + 1/2. Throws UnsupportedTranslation for a
/// tau/2 component, which moves L to a / L instead of a multiple of L.
SignCharacter character_of_basis(const std::vector<CoordinateAction>& actions);

/// H^0(E, O(2[0])) = <1, L> graded by the given actions.
GradedSpace section_space(const std::vector<CoordinateAction>& actions);

/// Same, for coordinate k of `data` restricted to the listed generators.
GradedSpace section_space(const ExtensionData& data, std::size_t k,
                          const std::vector<std::size_t>& generator_indices);

GradedSpace tensor(const std::vector<GradedSpace>& spaces);

/// Total multiplicity of the characters trivial on every subgroup generator.
long invariant_dim(const GradedSpace& space, const std::vector<std::uint32_t>& subgroup_gens);

/// The group acting on E_1 x E_2 with basis (gamma_1, 0), (0, gamma_1),
/// (gamma_2, gamma_2), where gamma_1 = -z and gamma_2 = z + 1/2. With
/// `with_tau_generator` the element (gamma_3, gamma_3), gamma_3 = z + tau/2,
/// is appended.
ExtensionData product_pencil_group(bool with_tau_generator = false);

/// The genus-5 factor D = {L_3(z_3) L_4(z_4) = b_3 b_4} of the Inoue data,
/// as a (Z/2)^4 cover of the line. g_1 acts trivially on D; the quotient is
/// identified with F_2^4 through the images of g_2..g_5 (bit j-2 = g_j).
struct GenusFiveFactor {
  std::uint32_t kernel = 0;  // mask over g_1..g_5 of the elements acting trivially
  BranchedCoverData cover;   // branch images as F_2^4 vectors
};

/// Derived from the actions of g_1..g_5 on (z_3, z_4): an element has fixed
/// points on D iff it is not the identity and its fixed loci on the two
/// factors meet the curve L_3 L_4 = b_3 b_4 for generic moduli.
GenusFiveFactor genus_five_factor();

/// The G-representation H^0(Omega^1) of E_1 x E_2 x D on 7 dimensions:
/// dz_1, dz_2 and the Chevalley-Weil decomposition of H^0(Omega^1_D).
/// Characters are indexed by g_1..g_5.
GradedSpace one_forms_space();

/// Invariant one-forms under the subgroup generated by the masks (bit i =
/// g_{i+1}); the default is all of G.
long one_forms_invariants(const std::vector<std::uint32_t>& subgroup_gens = {1, 2, 4, 8, 16});

/// Fixed points +-sqrt(A) of c -> A / c on the parameter line of the pencil
/// L_1 L_2 L_3 = c. Throws ZeroParameter for A = 0.
std::pair<std::complex<double>, std::complex<double>> pencil_fixed_points(std::complex<double> A);
long pencil_invariant_count(std::complex<double> A);

}  // namespace surface_lab

#endif  // SURFACE_LAB_CHARACTER_CALCULUS_HPP
