#include "surface_lab/affine_groups.hpp"

#include <algorithm>
#include <sstream>

#include "surface_lab/errors.hpp"

namespace surface_lab {

bool LatticeVector::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](long v) { return v == 0; });
}

LatticeVector LatticeVector::operator-() const {
  LatticeVector out = *this;
  for (auto& v : out.coords) v = -v;
  return out;
}

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
  if (a.size() != b.size()) throw InvalidArgument("LatticeVector: length mismatch");
  LatticeVector out = a;
  for (std::size_t i = 0; i < b.size(); ++i) out.coords[i] += b.coords[i];
  return out;
}

std::string LatticeVector::to_string() const {
  std::ostringstream os;
  const std::size_t n = coords.size() / 2;
  os << '(';
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i == n) os << " |";
    os << (i == 0 || i == n ? " " : ", ") << coords[i];
  }
  os << " )";
  return os.str();
}

AffineElement AffineElement::identity(std::size_t n) {
  return AffineElement{std::vector<int>(n, 1), std::vector<long>(2 * n, 0)};
}

AffineElement AffineElement::translation(const LatticeVector& v) {
  AffineElement g = identity(v.size() / 2);
  for (std::size_t i = 0; i < v.size(); ++i) g.half_trans[i] = 2 * v.coords[i];
  return g;
}

AffineElement AffineElement::compose(const AffineElement& other) const {
  const std::size_t n = dim();
  if (other.dim() != n) throw InvalidArgument("AffineElement::compose: dimension mismatch");
  // g(h(z)) = eps_g eps_h z + eps_g t_h + t_g
  AffineElement out = identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.signs[k] = signs[k] * other.signs[k];
    out.half_trans[k] = signs[k] * other.half_trans[k] + half_trans[k];
    out.half_trans[n + k] = signs[k] * other.half_trans[n + k] + half_trans[n + k];
  }
  return out;
}

AffineElement AffineElement::inverse() const {
  // z -> eps (z - t)
  AffineElement out = *this;
  const std::size_t n = dim();
  for (std::size_t k = 0; k < n; ++k) {
    out.half_trans[k] = -signs[k] * half_trans[k];
    out.half_trans[n + k] = -signs[k] * half_trans[n + k];
  }
  return out;
}

bool AffineElement::is_translation() const {
  return std::all_of(signs.begin(), signs.end(), [](int s) { return s == 1; });
}

namespace {

LatticeVector halve(const std::vector<long>& doubled, const char* what) {
  LatticeVector v;
  v.coords.reserve(doubled.size());
  for (long x : doubled) {
    if (x % 2 != 0) throw NotInLattice(std::string(what) + ": odd half-coordinate");
    v.coords.push_back(x / 2);
  }
  return v;
}

}  // namespace

LatticeVector AffineElement::lattice_translation() const {
  return halve(half_trans, "translation");
}

void ExtensionData::validate() const {
  for (const auto& g : generators) {
    if (g.signs.size() != n || g.half_trans.size() != 2 * n)
      throw InvalidArgument("ExtensionData: generator has the wrong dimension");
    for (int s : g.signs)
      if (s != 1 && s != -1) throw InvalidArgument("ExtensionData: signs must be +-1");
  }
}

ExtensionData inoue_generators() {
  ExtensionData data;
  data.n = 4;
  //            signs            half translation (e1..e4 | tau1 e1..tau4 e4)
  data.generators = {
      {{-1, 1, 1, 1}, {1, 1, 0, 0, 0, 0, 0, 0}},
      {{1, -1, 1, -1}, {0, 1, 1, 1, 0, 0, 0, 0}},
      {{1, 1, -1, -1}, {1, 0, 1, 1, 0, 0, 0, 0}},
      {{1, 1, -1, -1}, {0, 0, 0, 0, 0, 0, 0, 0}},
      {{1, 1, 1, 1}, {0, 0, 0, 0, 1, 1, 1, 1}},
  };
  return data;
}

LatticeVector commutator(const AffineElement& g, const AffineElement& h) {
  const std::size_t n = g.dim();
  if (h.dim() != n) throw InvalidArgument("commutator: dimension mismatch");
  std::vector<long> doubled(2 * n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t part : {k, n + k})
      doubled[part] = (g.signs[k] - 1) * h.half_trans[part] - (h.signs[k] - 1) * g.half_trans[part];
  return halve(doubled, "commutator");
}

LatticeVector square_translation(const AffineElement& g) {
  const std::size_t n = g.dim();
  std::vector<long> doubled(2 * n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t part : {k, n + k}) doubled[part] = (g.signs[k] + 1) * g.half_trans[part];
  return halve(doubled, "square");
}

AffineElement generator_product(const ExtensionData& data, std::uint32_t mask) {
  AffineElement out = AffineElement::identity(data.n);
  for (std::size_t i = 0; i < data.generators.size(); ++i)
    if (mask & (1u << i)) out = out.compose(data.generators[i]);
  return out;
}

std::vector<std::optional<std::uint32_t>> sign_condition_witnesses(const ExtensionData& data) {
  data.validate();
  std::vector<std::optional<std::uint32_t>> witness(data.n);
  const std::uint32_t subsets = 1u << data.generators.size();
  // Smallest subsets first, so the witnesses are as short as possible.
  std::vector<std::uint32_t> order(subsets);
  for (std::uint32_t m = 0; m < subsets; ++m) order[m] = m;
  std::stable_sort(order.begin(), order.end(), [](std::uint32_t a, std::uint32_t b) {
    return __builtin_popcount(a) < __builtin_popcount(b);
  });
  for (std::uint32_t mask : order) {
    const AffineElement g = generator_product(data, mask);
    for (std::size_t k = 0; k < data.n; ++k)
      if (!witness[k] && g.signs[k] == -1) witness[k] = mask;
  }
  return witness;
}

bool check_sign_condition(const ExtensionData& data) {
  const auto w = sign_condition_witnesses(data);
  return std::all_of(w.begin(), w.end(), [](const auto& m) { return m.has_value(); });
}

IntMatrix abelianization_relations(const ExtensionData& data) {
  data.validate();
  const std::size_t k = data.generators.size();
  const std::size_t rank = data.lattice_rank();
  IntMatrix rel(0, k + rank);

  auto lattice_row = [&](const LatticeVector& v) {
    std::vector<long> row(k + rank, 0);
    for (std::size_t j = 0; j < rank; ++j) row[k + j] = v.coords[j];
    return row;
  };

  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      rel.append_row(lattice_row(commutator(data.generators[i], data.generators[j])));

  for (std::size_t i = 0; i < k; ++i) {
    std::vector<long> row = lattice_row(-square_translation(data.generators[i]));
    row[i] = 2;
    rel.append_row(row);
  }

  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < rank; ++j) {
      std::vector<long> row(k + rank, 0);
      row[k + j] = data.generators[i].signs[j % data.n] - 1;
      rel.append_row(row);
    }
  return rel;
}

FinAbGroup abelianize_extension(const ExtensionData& data) {
  return cokernel(abelianization_relations(data));
}

std::size_t commutator_subspan_rank(const ExtensionData& data, std::size_t pivot,
                                    const std::vector<std::size_t>& coord_subset) {
  data.validate();
  if (pivot >= data.generators.size()) throw InvalidArgument("commutator_subspan_rank: bad pivot");
  IntMatrix rows(0, coord_subset.size());
  for (std::size_t i = 0; i < data.generators.size(); ++i) {
    if (i == pivot) continue;
    const LatticeVector c = commutator(data.generators[pivot], data.generators[i]);
    std::vector<long> row;
    for (std::size_t idx : coord_subset) {
      if (idx >= c.size()) throw InvalidArgument("commutator_subspan_rank: bad coordinate");
      row.push_back(c.coords[idx]);
    }
    rows.append_row(row);
  }
  return rank_mod2(rows);
}

}  // namespace surface_lab
