#ifndef SURFACE_LAB_PICARD_LATTICE_HPP
#define SURFACE_LAB_PICARD_LATTICE_HPP

// Intersection theory on Y, the projective plane blown up in the six vertices
// P_1..P_6 of a complete quadrilateral (Y is the minimal resolution of the
// four-nodal cubic surface). Pic(Y) = Z L + Z E_1 + ... + Z E_6 with
// L^2 = 1, E_i^2 = -1 and all other products zero.
//
// Vertex labelling: P_5 = P_1P_2 n P_3P_4 and P_6 = P_1P_4 n P_2P_3.

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace surface_lab {

struct DivisorClass {
  long d = 0;                 // coefficient of L
  std::array<long, 6> m{};    // coefficients of E_1..E_6

  static DivisorClass line();
  static DivisorClass exceptional(std::size_t i);  // 1-based: E_1..E_6
  static DivisorClass canonical();                 // K_Y = -3L + sum E_i

  DivisorClass& operator+=(const DivisorClass& o);
  DivisorClass& operator-=(const DivisorClass& o);
  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator-(const DivisorClass& a) { return DivisorClass{} - a; }
  friend DivisorClass operator*(long k, const DivisorClass& a);
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

  std::string to_string() const;
};

long intersect(const DivisorClass& a, const DivisorClass& b);

inline constexpr long kEulerNumberY = 9;   // e(P^2) = 3, each blow-up adds 1
inline constexpr long kChiStructureY = 1;  // rational surface

/// A reduced curve on Y with its genus.
struct Curve {
  std::string name;
  DivisorClass cls;
  long genus = 0;
};

struct ConfigCatalog {
  std::array<DivisorClass, 4> sides;       // S_1..S_4, the (-2)-curves
  std::array<DivisorClass, 3> diagonals;   // Delta_1..Delta_3
  std::array<DivisorClass, 3> conics;      // f_1..f_3, residual conic pencils
  DivisorClass canonical;                  // K_Y
  std::array<DivisorClass, 3> characters;  // first Chern classes of the character sheaves L_1..L_3
  std::array<std::vector<Curve>, 3> branch; // components of the branch divisors D_1..D_3

  /// Every named curve class (S, Delta, f, E) with genus 0.
  std::vector<Curve> curves() const;
  static DivisorClass total(const std::vector<Curve>& components);
};

ConfigCatalog catalog();

struct CheckItem {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct Report {
  std::vector<CheckItem> items;

  bool all_pass() const;
  std::vector<CheckItem> failures() const;
  void add(std::string name, long expected, long actual);
  void add(std::string name, const DivisorClass& expected, const DivisorClass& actual);
  void add_bool(std::string name, bool ok, std::string detail = {});
};

/// Linear equivalences, intersection numbers and disjointness statements of
/// the four-nodal cubic configuration and the bidouble cover built on it.
Report verify_configuration(const ConfigCatalog& c);

std::size_t rank_of_span(const std::vector<DivisorClass>& classes);

/// Signature (positive, negative) of the intersection form restricted to the
/// span of `classes`, by rational diagonalization of the Gram matrix.
std::pair<std::size_t, std::size_t> signature(const std::vector<DivisorClass>& classes);

/// Hirzebruch-Riemann-Roch on Y:
///   chi = rank (K^2 + e) / 12 - c1.K / 2 + (c1^2 - 2 c2) / 2.
/// Throws NonIntegral if the result is not an integer.
long chi_bundle_hrr(long rank, const DivisorClass& c1, long c2);

struct BundleChern {
  long rank;
  DivisorClass c1;
  long c2;
};

/// Chern data of Omega^1_Y (A): rank 2, c1 = K + 2A, c2 = e + K.A + A^2.
BundleChern cotangent_twisted(const DivisorClass& twist);

/// Riemann-Roch on a smooth component C: chi(O_C(twist)) = twist.C + 1 - g.
long chi_restricted_twist(const DivisorClass& component, long genus, const DivisorClass& twist);

/// Bound for one character summand of h^2(Theta): a logarithmic sheaf along
/// `log_curves`, twisted by the rational curves in `twist_curves`.
/// bound = (#log_curves - rank of their classes) + sum over twist curves of
/// h^0(P^1, O(d - 2)) = d - 1, where d is the degree of the restriction.
struct CharacterBound {
  std::string label;
  std::vector<Curve> log_curves;
  std::vector<Curve> twist_curves;
  std::vector<long> twist_degrees;
  std::size_t log_rank = 0;
  long bound = 0;
};

struct ThetaReport {
  long chi_omega_twisted = 0;    // chi(Omega^1_Y(K_Y))
  long chi_restricted = 0;       // chi(+ O_{D_i}(K_Y))
  long invariant_h1 = 0;         // invariant part of h^1(Theta)
  long invariant_h2 = 0;         // invariant part of h^2(Theta)
  std::array<CharacterBound, 3> bounds;
  long ks_squared = 0;
  long chi_structure = 0;
  long chi_theta = 0;            // 2 K^2 - 10 chi
  long h2_upper = 0;
  long h1 = 0;
  long h2 = 0;
  Report checks;                 // every arithmetic input, itemized

  bool all_pass() const { return checks.all_pass(); }
};

/// Assembles the h^1(Theta) = 4, h^2(Theta) = 8 computation from its
/// arithmetic inputs. K_S^2 and chi(O_S) are taken from the product model
/// (product_threefold) and cross-checked against the bidouble cover.
ThetaReport theta_cohomology_report();

/// K^2 and chi(O) of the minimal model of the bidouble cover of Y branched
/// on D_1 + D_2 + D_3: K^2 = (2K_Y + D)^2 + (number of contracted
/// (-1)-curves), chi = 4 chi(O_Y) + sum L_i.(L_i + K_Y) / 2.
struct BidoubleInvariants {
  long k_squared_cover;
  long contracted_curves;
  long k_squared_minimal;
  long chi_structure;
};
BidoubleInvariants bidouble_invariants(const ConfigCatalog& c);

}  // namespace surface_lab

#endif  // SURFACE_LAB_PICARD_LATTICE_HPP
