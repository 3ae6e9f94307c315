#ifndef WIRTINGER_ABELIANIZATION_HPP
#define WIRTINGER_ABELIANIZATION_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "wirtinger/intlinalg.hpp"
#include "wirtinger/presentation.hpp"
#include "wirtinger/words.hpp"

namespace wirtinger {

/// One row per relator: its exponent vector.
inline IntMatrix relation_matrix(const Presentation& p) {
  const std::size_t n = p.num_generators();
  IntMatrix m(p.relators().size(), n);
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    const auto e = exponent_vector(p.relators()[i], n);
    for (std::size_t j = 0; j < n; ++j)
      if (e[j] != 0) m.set(i, j, BigInt(e[j]));
  }
  return m;
}

/// Coordinates of an element of G_ab = Z^rank + (+) Z/t_i.
struct AbelianCoordinates {
  IntVector free;     // length rank
  IntVector torsion;  // reduced into [0, t_i)

  friend bool operator==(const AbelianCoordinates&, const AbelianCoordinates&) = default;
};

/// G_ab = Z^n / rowspace(R). For U R V = D, the exponent vector e has
/// coordinates e V; entries with d_i = 1 vanish, d_i > 1 give torsion and the
/// trailing n - r entries are free.
struct AbelianizationData {
  std::size_t num_generators = 0;
  std::size_t rank = 0;
  std::vector<BigInt> torsion;
  IntMatrix relations;
  SNFResult snf;

  [[nodiscard]] AbelianCoordinates project(const std::vector<std::int64_t>& exponents) const {
    if (exponents.size() != num_generators)
      throw std::invalid_argument("AbelianizationData::project: dimension mismatch");
    IntVector e(exponents.begin(), exponents.end());
    const IntVector y = snf.V.left_multiply(e);
    AbelianCoordinates c;
    const std::size_t r = snf.rank();
    for (std::size_t i = 0; i < r; ++i) {
      const BigInt& d = snf.invariant_factors[i];
      if (d == 1) continue;
      BigInt v = y[i] % d;
      if (v < 0) v += d;
      c.torsion.push_back(std::move(v));
    }
    for (std::size_t i = r; i < num_generators; ++i) c.free.push_back(y[i]);
    return c;
  }

  [[nodiscard]] AbelianCoordinates project(const Word& w) const {
    return project(exponent_vector(w, num_generators));
  }
};

inline AbelianizationData abelianize(const Presentation& p) {
  AbelianizationData a;
  a.num_generators = p.num_generators();
  a.relations = relation_matrix(p);
  a.snf = smith_normal_form(a.relations);
  a.rank = a.num_generators - a.snf.rank();
  for (const auto& d : a.snf.invariant_factors)
    if (d > 1) a.torsion.push_back(d);
  return a;
}

inline bool is_free_abelian(const AbelianizationData& a) { return a.torsion.empty(); }

/// Whether the classes of B in G_ab ~ Z^rank are Z-linearly independent.
/// Throws std::logic_error when G_ab has torsion.
inline bool classes_linearly_independent(const AbelianizationData& a, const std::vector<Word>& B) {
  if (!is_free_abelian(a))
    throw std::logic_error("classes_linearly_independent: abelianization has torsion");
  IntMatrix m(B.size(), a.rank);
  for (std::size_t i = 0; i < B.size(); ++i) {
    const auto c = a.project(B[i]);
    for (std::size_t j = 0; j < a.rank; ++j)
      if (c.free[j] != 0) m.set(i, j, c.free[j]);
  }
  return rank(m) == B.size();
}

/// Integer-valued homomorphism G -> Z given by a coefficient per generator.
struct DualFunctional {
  std::vector<std::int64_t> coeffs;

  friend bool operator==(const DualFunctional&, const DualFunctional&) = default;
};

inline std::int64_t eval_functional(const DualFunctional& f, const Word& w) {
  std::int64_t s = 0;
  for (const auto& l : w.letters()) s += f.coeffs.at(l.gen.index) * l.exp;
  return s;
}

/// The functionals eps_b (b in B) with eps_b(b') = delta, each killing every
/// relator. Empty optional when the B-classes do not span a direct summand.
/// Requires free abelian G_ab and independent classes (std::logic_error otherwise).
inline std::optional<std::vector<DualFunctional>> dual_functionals(const AbelianizationData& a,
                                                                   const std::vector<Word>& B) {
  if (!classes_linearly_independent(a, B))
    throw std::logic_error("dual_functionals: classes of B are not linearly independent");
  const std::size_t n = a.num_generators;
  const IntMatrix& R = a.relations;
  const std::size_t m = R.rows();
  IntMatrix sys(m + B.size(), n);
  for (std::size_t i = 0; i < m; ++i)
    for (const auto& [j, v] : R.row(i)) sys.set(i, j, v);
  for (std::size_t k = 0; k < B.size(); ++k) {
    const auto e = exponent_vector(B[k], n);
    for (std::size_t j = 0; j < n; ++j)
      if (e[j] != 0) sys.set(m + k, j, BigInt(e[j]));
  }
  std::vector<DualFunctional> out;
  for (std::size_t k = 0; k < B.size(); ++k) {
    IntVector rhs(m + B.size());
    rhs[m + k] = 1;
    auto x = solve_integer_system(sys, rhs);
    if (!x) return std::nullopt;
    DualFunctional f;
    for (const auto& v : *x) f.coeffs.push_back(static_cast<std::int64_t>(v));
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace wirtinger

#endif  // WIRTINGER_ABELIANIZATION_HPP
