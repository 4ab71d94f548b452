#ifndef SURFACE_LAB_AFFINE_GROUPS_HPP
#define SURFACE_LAB_AFFINE_GROUPS_HPP

// Affine transformations of C^n with diagonal +-1 linear part that normalize
// the product lattice Lambda = Z e_1 + ... + Z e_n + Z tau_1 e_1 + ... + Z tau_n e_n.
//
// The tau_k are formal: a lattice vector is an integer vector of length 2n in
// the basis (e_1, ..., e_n, tau_1 e_1, ..., tau_n e_n). Translations of group
// elements live in (1/2) Lambda and are stored doubled ("half coordinates"),
// so lattice membership is a parity test and no rationals are needed.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "surface_lab/integer_algebra.hpp"

namespace surface_lab {

struct LatticeVector {
  std::vector<long> coords;

  std::size_t size() const { return coords.size(); }
  bool is_zero() const;
  LatticeVector operator-() const;
  friend LatticeVector operator+(const LatticeVector& a, const LatticeVector& b);
  friend bool operator==(const LatticeVector& a, const LatticeVector& b) = default;

  std::string to_string() const;
};

/// z -> signs * z + half_trans / 2, coordinate-wise. signs[k] also acts on the
/// tau_k e_k component of the translation.
struct AffineElement {
  std::vector<int> signs;       // length n, entries +-1
  std::vector<long> half_trans;  // length 2n

  static AffineElement identity(std::size_t n);
  static AffineElement translation(const LatticeVector& v);

  std::size_t dim() const { return signs.size(); }

  /// (*this) o other
  AffineElement compose(const AffineElement& other) const;
  AffineElement inverse() const;

  bool is_translation() const;
  /// Translation part as a lattice vector; throws NotInLattice when a half
  /// coordinate is odd.
  LatticeVector lattice_translation() const;

  friend bool operator==(const AffineElement& a, const AffineElement& b) = default;
};

/// The lifts gamma_1..gamma_k of generators of G, together with the lattice
/// they normalize (rank 2n).
struct ExtensionData {
  std::size_t n = 0;
  std::vector<AffineElement> generators;

  std::size_t lattice_rank() const { return 2 * n; }
  void validate() const;
};

/// The five involutions g_1..g_5 of E_1 x E_2 x E_3 x E_4 defining Inoue
/// surfaces with K^2 = 7:
///   g1 = (-z1 + 1/2, z2 + 1/2, z3, z4)
///   g2 = (z1, -z2 + 1/2, z3 + 1/2, -z4 + 1/2)
///   g3 = (z1 + 1/2, z2, -z3 + 1/2, -z4 + 1/2)
///   g4 = (z1, z2, -z3, -z4)
///   g5 = (z1 + tau1/2, z2 + tau2/2, z3 + tau3/2, z4 + tau4/2)
ExtensionData inoue_generators();

/// g h g^-1 h^-1 = (eps_g - 1) t_h - (eps_h - 1) t_g as a lattice vector.
LatticeVector commutator(const AffineElement& g, const AffineElement& h);

/// g^2 = (eps_g + 1) t_g as a lattice vector.
LatticeVector square_translation(const AffineElement& g);

/// Product of the generators selected by the bits of `mask` (bit i = gamma_{i+1}).
AffineElement generator_product(const ExtensionData& data, std::uint32_t mask);

/// For each complex coordinate k, a generator subset whose product has sign
/// -1 on coordinate k (so it negates both e_k and tau_k e_k), or nullopt.
std::vector<std::optional<std::uint32_t>> sign_condition_witnesses(const ExtensionData& data);

/// Every lattice basis vector is negated by conjugation with some group
/// element.
bool check_sign_condition(const ExtensionData& data);

/// Relation matrix of the abelianization on the generators
/// (gamma_1..gamma_k, lambda_1..lambda_2n): commutator rows, square rows
/// 2 gamma_i - s_i, and conjugation rows (eps_i - 1) lambda_j.
IntMatrix abelianization_relations(const ExtensionData& data);

FinAbGroup abelianize_extension(const ExtensionData& data);

/// Mod-2 rank of {[gamma_pivot, gamma_i] : i != pivot} projected onto the
/// given lattice coordinates.
std::size_t commutator_subspan_rank(const ExtensionData& data, std::size_t pivot,
                                    const std::vector<std::size_t>& coord_subset);

}  // namespace surface_lab

#endif  // SURFACE_LAB_AFFINE_GROUPS_HPP
