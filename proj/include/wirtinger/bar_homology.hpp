#ifndef WIRTINGER_BAR_HOMOLOGY_HPP
#define WIRTINGER_BAR_HOMOLOGY_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "wirtinger/group_model.hpp"
#include "wirtinger/intlinalg.hpp"

namespace wirtinger {

/// Finitely supported integer combination of normalized bar symbols
/// [g_1|...|g_K]. Terms with a zero coefficient are never stored; symbols with
/// an identity slot are dropped by the model-aware constructors below.
template <std::size_t K>
class BarChain {
 public:
  using Symbol = std::array<ElementId, K>;

  BarChain() = default;

  [[nodiscard]] const std::map<Symbol, std::int64_t>& terms() const { return terms_; }
  [[nodiscard]] bool empty() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }

  [[nodiscard]] std::int64_t coefficient(const Symbol& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? 0 : it->second;
  }

  /// Adds c * s; the caller guarantees s has no identity slot.
  void add_raw(const Symbol& s, std::int64_t c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(s, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Adds c * s, or nothing when some slot is the identity of m.
  void add(const FiniteGroupModel& m, const Symbol& s, std::int64_t c = 1) {
    for (auto g : s)
      if (g == m.identity()) return;
    add_raw(s, c);
  }

  BarChain& operator+=(const BarChain& o) {
    for (const auto& [s, c] : o.terms_) add_raw(s, c);
    return *this;
  }
  BarChain& operator-=(const BarChain& o) {
    for (const auto& [s, c] : o.terms_) add_raw(s, -c);
    return *this;
  }
  friend BarChain operator+(BarChain a, const BarChain& b) { return a += b; }
  friend BarChain operator-(BarChain a, const BarChain& b) { return a -= b; }
  friend BarChain operator*(std::int64_t k, const BarChain& a) {
    BarChain out;
    for (const auto& [s, c] : a.terms_) out.add_raw(s, k * c);
    return out;
  }
  friend bool operator==(const BarChain&, const BarChain&) = default;

 private:
  std::map<Symbol, std::int64_t> terms_;
};

using BarChain1 = BarChain<1>;
using BarChain2 = BarChain<2>;
using BarChain3 = BarChain<3>;

/// d[g|h] = [h] - [gh] + [g]
inline BarChain1 boundary2(const FiniteGroupModel& m, const BarChain2& c) {
  BarChain1 out;
  for (const auto& [s, k] : c.terms()) {
    const auto [g, h] = s;
    out.add(m, {h}, k);
    out.add(m, {m.mul(g, h)}, -k);
    out.add(m, {g}, k);
  }
  return out;
}

/// d[g|h|k] = [h|k] - [gh|k] + [g|hk] - [g|h]
inline BarChain2 boundary3(const FiniteGroupModel& m, const BarChain3& c) {
  BarChain2 out;
  for (const auto& [s, coeff] : c.terms()) {
    const auto [g, h, k] = s;
    out.add(m, {h, k}, coeff);
    out.add(m, {m.mul(g, h), k}, -coeff);
    out.add(m, {g, m.mul(h, k)}, coeff);
    out.add(m, {g, h}, -coeff);
  }
  return out;
}

/// [a|g] - [g|a], normalized.
inline BarChain2 zeta_chain(const FiniteGroupModel& m, ElementId a, ElementId g) {
  BarChain2 out;
  out.add(m, {a, g}, 1);
  out.add(m, {g, a}, -1);
  return out;
}

/// Lexicographic indexing of normalized bar symbols by element id.
class BarBasis {
 public:
  explicit BarBasis(const FiniteGroupModel& m) : slot_(m.order(), -1) {
    for (ElementId g = 0; g < m.order(); ++g)
      if (g != m.identity()) {
        slot_[g] = static_cast<std::int64_t>(elements_.size());
        elements_.push_back(g);
      }
  }

  /// Number of non-identity elements.
  [[nodiscard]] std::size_t width() const { return elements_.size(); }
  [[nodiscard]] std::size_t dim(std::size_t k) const {
    std::size_t d = 1;
    for (std::size_t i = 0; i < k; ++i) d *= width();
    return d;
  }

  template <std::size_t K>
  [[nodiscard]] std::size_t index(const std::array<ElementId, K>& s) const {
    std::size_t idx = 0;
    for (auto g : s) {
      if (slot_[g] < 0) throw std::invalid_argument("BarBasis: identity slot");
      idx = idx * width() + static_cast<std::size_t>(slot_[g]);
    }
    return idx;
  }

  template <std::size_t K>
  [[nodiscard]] std::array<ElementId, K> symbol(std::size_t idx) const {
    std::array<ElementId, K> s{};
    for (std::size_t i = K; i-- > 0;) {
      s[i] = elements_[idx % width()];
      idx /= width();
    }
    return s;
  }

  template <std::size_t K>
  [[nodiscard]] SparseRow to_vector(const BarChain<K>& c) const {
    SparseRow v;
    for (const auto& [s, k] : c.terms()) v.emplace_back(index(s), BigInt(k));
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
  }

  template <std::size_t K>
  [[nodiscard]] BarChain<K> from_vector(const SparseRow& v) const {
    BarChain<K> c;
    for (const auto& [i, k] : v) c.add_raw(symbol<K>(i), static_cast<std::int64_t>(k));
    return c;
  }

 private:
  std::vector<std::int64_t> slot_;
  std::vector<ElementId> elements_;
};

/// Matrix of d2 : C2 -> C1 (rows C1, columns C2).
inline IntMatrix boundary2_matrix(const FiniteGroupModel& m, const BarBasis& basis) {
  const std::size_t n2 = basis.dim(2);
  std::vector<SparseRow> cols(n2);
  for (std::size_t j = 0; j < n2; ++j) {
    BarChain2 c;
    c.add_raw(basis.symbol<2>(j), 1);
    cols[j] = basis.to_vector(boundary2(m, c));
  }
  return IntMatrix::from_rows(basis.dim(1), std::move(cols)).transpose();
}

/// Matrix of d3 : C3 -> C2 (rows C2, columns C3).
inline IntMatrix boundary3_matrix(const FiniteGroupModel& m, const BarBasis& basis) {
  const std::size_t n3 = basis.dim(3);
  std::vector<SparseRow> cols(n3);
  for (std::size_t j = 0; j < n3; ++j) {
    BarChain3 c;
    c.add_raw(basis.symbol<3>(j), 1);
    cols[j] = basis.to_vector(boundary3(m, c));
  }
  return IntMatrix::from_rows(basis.dim(2), std::move(cols)).transpose();
}

/// A 2-chain whose boundary is nonzero, returned instead of a class.
struct NotACycle {
  BarChain1 boundary;
};

/// Coordinates in H2 = (+) Z/d_i, each reduced into [0, d_i).
using H2Class = std::vector<BigInt>;

inline constexpr std::size_t kDefaultH2Ceiling = 24;

/// H2(G; Z) = ker d2 / im d3 from the normalized bar complex.
///
/// With U d3 V = D, a cycle c has class coordinates (U c)_i mod d_i over the
/// invariant factors d_i > 1; the coordinates past rank(d3) vanish on cycles
/// because ker d2 / im d3 is finite.
class H2Data {
 public:
  H2Data() = default;

  [[nodiscard]] const std::vector<BigInt>& invariant_factors() const { return factors_; }
  [[nodiscard]] const std::vector<SparseRow>& cycle_basis() const { return cycle_basis_; }
  [[nodiscard]] const FiniteGroupModel& model() const { return model_; }
  [[nodiscard]] std::size_t chain_rank(std::size_t k) const { return basis_.dim(k); }
  [[nodiscard]] std::size_t boundary_rank2() const { return rank2_; }
  [[nodiscard]] std::size_t boundary_rank3() const { return rank3_; }

  [[nodiscard]] bool trivial() const { return factors_.empty(); }

  /// |H2| = product of invariant factors.
  [[nodiscard]] BigInt order() const {
    BigInt o = 1;
    for (const auto& d : factors_) o *= d;
    return o;
  }

  [[nodiscard]] std::variant<H2Class, NotACycle> class_of_cycle(const BarChain2& c) const {
    auto b = boundary2(model_, c);
    if (!b.empty()) return NotACycle{std::move(b)};
    const SparseRow v = basis_.to_vector(c);
    auto dot = [&](const SparseRow& row) {
      BigInt s = 0;
      auto a = row.begin();
      auto b2 = v.begin();
      while (a != row.end() && b2 != v.end()) {
        if (a->first < b2->first)
          ++a;
        else if (b2->first < a->first)
          ++b2;
        else {
          s += a->second * b2->second;
          ++a;
          ++b2;
        }
      }
      return s;
    };
    for (const auto& row : free_rows_)
      if (dot(row) != 0) throw std::logic_error("class_of_cycle: cycle has a free coordinate");
    H2Class out;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      BigInt x = dot(torsion_rows_[i]) % factors_[i];
      if (x < 0) x += factors_[i];
      out.push_back(std::move(x));
    }
    return out;
  }

  friend H2Data h2_finite(const FiniteGroupModel& m, std::size_t ceiling);

 private:
  FiniteGroupModel model_;
  BarBasis basis_{FiniteGroupModel(1, {0})};
  std::vector<BigInt> factors_;
  std::vector<SparseRow> torsion_rows_;
  std::vector<SparseRow> free_rows_;
  std::vector<SparseRow> cycle_basis_;
  std::size_t rank2_ = 0;
  std::size_t rank3_ = 0;
};

/// Throws std::length_error when m.order() exceeds `ceiling`.
inline H2Data h2_finite(const FiniteGroupModel& m, std::size_t ceiling = kDefaultH2Ceiling) {
  if (m.order() > ceiling)
    throw std::length_error("h2_finite: group order " + std::to_string(m.order()) +
                            " exceeds the ceiling " + std::to_string(ceiling));
  H2Data h;
  h.model_ = m;
  h.basis_ = BarBasis(m);
  if (h.basis_.width() == 0) return h;

  const IntMatrix d2 = boundary2_matrix(m, h.basis_);
  const auto snf2 = smith_normal_form(d2, {false, true});
  h.rank2_ = snf2.rank();
  {
    const IntMatrix vt = snf2.V.transpose();
    for (std::size_t j = h.rank2_; j < d2.cols(); ++j) h.cycle_basis_.push_back(vt.row(j));
  }

  const IntMatrix d3 = boundary3_matrix(m, h.basis_);
  const auto snf3 = smith_normal_form(d3, {true, false});
  h.rank3_ = snf3.rank();
  if (h.rank3_ + h.rank2_ != h.basis_.dim(2))
    throw std::logic_error("h2_finite: H2 has positive free rank for a finite group");
  for (std::size_t i = 0; i < h.rank3_; ++i) {
    if (snf3.invariant_factors[i] > 1) {
      h.factors_.push_back(snf3.invariant_factors[i]);
      h.torsion_rows_.push_back(snf3.U.row(i));
    }
  }
  for (std::size_t i = h.rank3_; i < h.basis_.dim(2); ++i) h.free_rows_.push_back(snf3.U.row(i));
  return h;
}

/// Sum of two classes in (+) Z/d_i.
inline H2Class add_classes(const H2Data& h, const H2Class& a, const H2Class& b) {
  H2Class out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = (a[i] + b[i]) % h.invariant_factors()[i];
  return out;
}

/// Order of the subgroup of H2 generated by `classes`.
inline BigInt subgroup_order(const H2Data& h, const std::vector<H2Class>& classes) {
  const auto& d = h.invariant_factors();
  const std::size_t k = d.size();
  if (k == 0) return 1;
  // lattice spanned by the classes and d_i e_i; |H2 / S| = |Z^k / L|
  IntMatrix L(classes.size() + k, k);
  for (std::size_t r = 0; r < classes.size(); ++r)
    for (std::size_t i = 0; i < k; ++i)
      if (classes[r][i] != 0) L.set(r, i, classes[r][i]);
  for (std::size_t i = 0; i < k; ++i) L.set(classes.size() + i, i, d[i]);
  const auto snf = smith_normal_form(L, {false, false});
  BigInt index = 1;
  for (const auto& f : snf.invariant_factors) index *= f;
  return h.order() / index;
}

/// {g : g a = a g}, sorted.
inline std::vector<ElementId> centralizer(const FiniteGroupModel& m, ElementId a) {
  std::vector<ElementId> out;
  for (ElementId g = 0; g < m.order(); ++g)
    if (m.mul(g, a) == m.mul(a, g)) out.push_back(g);
  return out;
}

/// Subgroup generated by all commutators, sorted.
inline std::vector<ElementId> commutator_subgroup(const FiniteGroupModel& m) {
  std::vector<char> is_comm(m.order(), 0);
  for (ElementId a = 0; a < m.order(); ++a)
    for (ElementId b = 0; b < m.order(); ++b) is_comm[m.commutator(a, b)] = 1;
  std::vector<ElementId> gens;
  for (ElementId g = 0; g < m.order(); ++g)
    if (is_comm[g]) gens.push_back(g);
  return generated_subgroup(m, gens);
}

}  // namespace wirtinger

#endif  // WIRTINGER_BAR_HOMOLOGY_HPP
