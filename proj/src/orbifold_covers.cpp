#include "surface_lab/orbifold_covers.hpp"

#include <algorithm>
#include <bit>

#include "surface_lab/errors.hpp"

namespace surface_lab {

namespace {

int pairing(F2Vector u, F2Vector v) { return std::popcount(u & v) & 1; }

// Reduced echelon basis: each vector has a distinct leading bit.
std::vector<F2Vector> echelon(const std::vector<F2Vector>& vectors) {
  std::vector<F2Vector> basis;
  for (F2Vector v : vectors) {
    for (F2Vector b : basis)
      if (v & std::bit_floor(b)) v ^= b;
    if (v == 0) continue;
    for (F2Vector& b : basis)
      if (b & std::bit_floor(v)) b ^= v;
    basis.push_back(v);
    std::sort(basis.begin(), basis.end(), std::greater<>());
  }
  return basis;
}

// 2g - 2 = d (-2 + k/2) for a degree-d cover of the line with k ramified
// branch points of order 2.
long genus_from_hurwitz(long degree, long ramified) {
  const long twice_chi = degree * (ramified - 4);  // 2 (2g - 2)
  if (twice_chi % 4 != 0) throw NonIntegralGenus("Hurwitz: 2g-2 is not an even integer");
  const long g = twice_chi / 4 + 1;
  if (g < 0) throw NonIntegralGenus("Hurwitz: negative genus");
  return g;
}

}  // namespace

std::size_t f2_rank(const std::vector<F2Vector>& vectors) { return echelon(vectors).size(); }

void BranchedCoverData::validate() const {
  if (n > 30) throw InvalidArgument("BranchedCoverData: rank too large");
  const F2Vector mask = static_cast<F2Vector>(group_order() - 1);
  F2Vector sum = 0;
  for (F2Vector e : branch_images) {
    if (e == 0 || (e & ~mask) != 0)
      throw InvalidArgument("BranchedCoverData: branch images must be nonzero elements of G");
    sum ^= e;
  }
  if (sum != 0) throw InvalidArgument("BranchedCoverData: branch images must sum to zero");
  if (f2_rank(branch_images) != n)
    throw InvalidArgument("BranchedCoverData: branch images must generate G");
}

BranchedCoverData maximal_cover(std::size_t m) {
  if (m < 2) throw InvalidArgument("maximal_cover: need at least two branch points");
  BranchedCoverData c;
  c.n = m - 1;
  F2Vector last = 0;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    c.branch_images.push_back(F2Vector{1} << i);
    last ^= F2Vector{1} << i;
  }
  c.branch_images.push_back(last);
  return c;
}

bool Subgroup::contains(F2Vector v) const {
  for (F2Vector b : echelon(basis))
    if (v & std::bit_floor(b)) v ^= b;
  return v == 0;
}

std::vector<F2Vector> Subgroup::elements() const {
  std::vector<F2Vector> out;
  for (std::uint32_t m = 0; m < (1u << basis.size()); ++m) {
    F2Vector v = 0;
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (m & (1u << i)) v ^= basis[i];
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup Subgroup::spanned_by(const std::vector<F2Vector>& generators) {
  return Subgroup{echelon(generators)};
}

Subgroup Subgroup::kernel_of(F2Vector u, std::size_t n) {
  if (u == 0) throw InvalidArgument("Subgroup::kernel_of: zero functional");
  std::vector<F2Vector> gens;
  for (F2Vector v = 1; v < (F2Vector{1} << n); ++v)
    if (pairing(u, v) == 0) gens.push_back(v);
  return spanned_by(gens);
}

long cover_genus(const BranchedCoverData& c) {
  c.validate();
  return genus_from_hurwitz(static_cast<long>(c.group_order()),
                            static_cast<long>(c.branch_count()));
}

long quotient_genus(const BranchedCoverData& c, const Subgroup& h) {
  c.validate();
  if (std::any_of(h.basis.begin(), h.basis.end(),
                  [&](F2Vector b) { return b >= c.group_order(); }))
    throw InvalidArgument("quotient_genus: subgroup is not contained in G");
  const std::size_t dim_h = f2_rank(h.basis);
  const long degree = 1L << (c.n - dim_h);
  // Branch points whose image dies in G/H are unramified in D/H -> P^1.
  const long ramified = std::count_if(c.branch_images.begin(), c.branch_images.end(),
                                      [&](F2Vector e) { return !h.contains(e); });
  return genus_from_hurwitz(degree, ramified);
}

long fixed_point_count(const BranchedCoverData& c, F2Vector g) {
  c.validate();
  if (g == 0) throw IdentityElement("fixed_point_count: the identity fixes every point");
  const long per_fibre = static_cast<long>(c.group_order() / 2);
  return per_fibre * std::count(c.branch_images.begin(), c.branch_images.end(), g);
}

std::vector<Subgroup> corank1_subgroups(std::size_t n) {
  std::vector<Subgroup> out;
  for (F2Vector u = 1; u < (F2Vector{1} << n); ++u) out.push_back(Subgroup::kernel_of(u, n));
  return out;
}

SubgroupHistogram classify_corank1_subgroups(const BranchedCoverData& c) {
  c.validate();
  SubgroupHistogram hist;
  for (const Subgroup& h : corank1_subgroups(c.n)) {
    const std::size_t inside = std::count_if(c.branch_images.begin(), c.branch_images.end(),
                                             [&](F2Vector e) { return h.contains(e); });
    ++hist[{inside, quotient_genus(c, h)}];
  }
  return hist;
}

FinAbGroup orbifold_abelianization(std::size_t m) {
  if (m < 3) throw InvalidArgument("orbifold_abelianization: need m >= 3");
  IntMatrix rel(0, m);
  rel.append_row(std::vector<long>(m, 1));
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<long> row(m, 0);
    row[i] = 2;
    rel.append_row(row);
  }
  return cokernel(rel);
}

long homology_order_bound() {
  const FinAbGroup pi = orbifold_abelianization(5).direct_sum(FinAbGroup::from_cyclic(0, {2}));
  return 2 * pi.order()->get_si();
}

bool homology_bound_check(const ExtensionData& data) {
  const auto order = abelianize_extension(data).order();
  return order && *order == homology_order_bound();
}

bool homology_bound_check() { return homology_bound_check(inoue_generators()); }

long form_multiplicity(const BranchedCoverData& c, F2Vector u) {
  c.validate();
  if (u == 0) return 0;
  const long k = std::count_if(c.branch_images.begin(), c.branch_images.end(),
                               [&](F2Vector e) { return pairing(u, e) == 1; });
  return std::max(0L, k / 2 - 1);
}

std::vector<HurwitzSolution> hurwitz_base_solutions(long genus, std::size_t n) {
  std::vector<HurwitzSolution> out;
  if (genus < 0 || n > 30) return out;
  // 2 (2g - 2) = 2^n (4h - 4 + m)
  const long lhs = 2 * (2 * genus - 2);
  const long order = 1L << n;
  if (lhs % order != 0) return out;
  const long x = lhs / order;
  for (long h = 0; 4 * h - 4 <= x; ++h) {
    const long m = x - 4 * h + 4;
    if (m == 1) continue;  // a single nonzero image cannot sum to zero
    const long generators = 2 * h + std::max(0L, m - 1);
    if (generators < static_cast<long>(n)) continue;
    if (n > 0 && h == 0 && m == 0) continue;
    out.push_back({h, static_cast<std::size_t>(m)});
  }
  return out;
}

}  // namespace surface_lab
