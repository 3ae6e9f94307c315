#ifndef WIRTINGER_GROUP_MODEL_HPP
#define WIRTINGER_GROUP_MODEL_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "wirtinger/presentation.hpp"
#include "wirtinger/words.hpp"

namespace wirtinger {

using ElementId = std::uint32_t;

/// A finite group given by its full multiplication table.
///
/// Generator images are optional; when present they are indexed like the
/// generators of the presentation the model was built from.
class FiniteGroupModel {
 public:
  FiniteGroupModel() = default;

  /// Checks that `table` is an order x order Latin square with a two-sided
  /// identity. Associativity is not checked here; see verify_group_axioms.
  FiniteGroupModel(std::size_t order, std::vector<ElementId> table,
                   std::vector<std::string> gen_names = {}, std::vector<ElementId> gen_images = {},
                   std::string name = {})
      : order_(order),
        mul_(std::move(table)),
        gen_names_(std::move(gen_names)),
        gen_images_(std::move(gen_images)),
        name_(std::move(name)) {
    if (order_ == 0) throw std::invalid_argument("FiniteGroupModel: order must be positive");
    if (mul_.size() != order_ * order_)
      throw std::invalid_argument("FiniteGroupModel: table is not order x order");
    for (auto v : mul_)
      if (v >= order_) throw std::invalid_argument("FiniteGroupModel: element id out of range");
    if (gen_names_.size() != gen_images_.size())
      throw std::invalid_argument("FiniteGroupModel: generator names and images differ in length");
    for (auto g : gen_images_)
      if (g >= order_) throw std::invalid_argument("FiniteGroupModel: generator image out of range");

    std::optional<ElementId> e;
    for (ElementId x = 0; x < order_ && !e; ++x) {
      bool ok = true;
      for (ElementId y = 0; y < order_ && ok; ++y) ok = mul(x, y) == y && mul(y, x) == y;
      if (ok) e = x;
    }
    if (!e) throw std::invalid_argument("FiniteGroupModel: no identity element");
    identity_ = *e;

    std::vector<char> seen(order_);
    for (ElementId x = 0; x < order_; ++x) {
      std::fill(seen.begin(), seen.end(), 0);
      for (ElementId y = 0; y < order_; ++y) {
        const auto v = mul(x, y);
        if (seen[v]) throw std::invalid_argument("FiniteGroupModel: table is not a Latin square");
        seen[v] = 1;
      }
    }
    inv_.assign(order_, 0);
    for (ElementId x = 0; x < order_; ++x)
      for (ElementId y = 0; y < order_; ++y)
        if (mul(x, y) == identity_) inv_[x] = y;
    for (ElementId x = 0; x < order_; ++x)
      if (mul(inv_[x], x) != identity_)
        throw std::invalid_argument("FiniteGroupModel: left and right inverses differ");
  }

  [[nodiscard]] std::size_t order() const { return order_; }
  [[nodiscard]] ElementId identity() const { return identity_; }
  [[nodiscard]] ElementId mul(ElementId a, ElementId b) const { return mul_[a * order_ + b]; }
  [[nodiscard]] ElementId inverse(ElementId a) const { return inv_[a]; }
  [[nodiscard]] bool has_gen_images() const { return !gen_images_.empty(); }
  [[nodiscard]] const std::vector<std::string>& gen_names() const { return gen_names_; }
  [[nodiscard]] const std::vector<ElementId>& gen_images() const { return gen_images_; }
  [[nodiscard]] const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  [[nodiscard]] ElementId power(ElementId a, std::int64_t n) const {
    ElementId base = n >= 0 ? a : inverse(a);
    std::uint64_t k = n >= 0 ? static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(-(n + 1)) + 1;
    ElementId acc = identity_;
    while (k) {
      if (k & 1U) acc = mul(acc, base);
      base = mul(base, base);
      k >>= 1U;
    }
    return acc;
  }

  [[nodiscard]] std::size_t element_order(ElementId a) const {
    std::size_t n = 1;
    for (ElementId x = a; x != identity_; x = mul(x, a)) ++n;
    return n;
  }

  [[nodiscard]] ElementId commutator(ElementId a, ElementId b) const {
    return mul(mul(a, b), mul(inverse(a), inverse(b)));
  }

  [[nodiscard]] bool is_abelian() const {
    for (ElementId a = 0; a < order_; ++a)
      for (ElementId b = a + 1; b < order_; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

 private:
  std::size_t order_ = 0;
  std::vector<ElementId> mul_;
  ElementId identity_ = 0;
  std::vector<ElementId> inv_;
  std::vector<std::string> gen_names_;
  std::vector<ElementId> gen_images_;
  std::string name_;
};

/// Homomorphic image of w; throws std::logic_error when the model has no
/// generator images.
inline ElementId eval_word(const FiniteGroupModel& m, const Word& w) {
  if (!m.has_gen_images()) throw std::logic_error("eval_word: model has no generator images");
  ElementId acc = m.identity();
  for (const auto& l : w.letters()) {
    if (l.gen.index >= m.gen_images().size())
      throw std::out_of_range("eval_word: generator index out of range");
    acc = m.mul(acc, m.power(m.gen_images()[l.gen.index], l.exp));
  }
  return acc;
}

/// True iff every relator of p evaluates to the identity under the model's
/// generator images, matched to p's generators by position and name.
inline bool satisfies_relators(const FiniteGroupModel& m, const Presentation& p) {
  if (!m.has_gen_images() || m.gen_names() != p.generator_names()) return false;
  return std::all_of(p.relators().begin(), p.relators().end(),
                     [&](const Word& r) { return eval_word(m, r) == m.identity(); });
}

/// Associativity check: exhaustive up to `exhaustive_limit`, otherwise
/// `samples` random triples from a fixed seed.
inline bool verify_group_axioms(const FiniteGroupModel& m, std::size_t exhaustive_limit = 64,
                                std::size_t samples = 200000) {
  const auto n = static_cast<ElementId>(m.order());
  auto assoc = [&](ElementId a, ElementId b, ElementId c) {
    return m.mul(m.mul(a, b), c) == m.mul(a, m.mul(b, c));
  };
  if (m.order() <= exhaustive_limit) {
    for (ElementId a = 0; a < n; ++a)
      for (ElementId b = 0; b < n; ++b)
        for (ElementId c = 0; c < n; ++c)
          if (!assoc(a, b, c)) return false;
    return true;
  }
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<ElementId> pick(0, n - 1);
  for (std::size_t s = 0; s < samples; ++s)
    if (!assoc(pick(rng), pick(rng), pick(rng))) return false;
  return true;
}

/// .gmod JSON: {"order":n, "mul":[[...]], "gens":{"x":id,...}}
inline nlohmann::ordered_json model_to_json(const FiniteGroupModel& m) {
  nlohmann::ordered_json j;
  j["order"] = m.order();
  auto rows = nlohmann::ordered_json::array();
  for (ElementId a = 0; a < m.order(); ++a) {
    auto row = nlohmann::ordered_json::array();
    for (ElementId b = 0; b < m.order(); ++b) row.push_back(m.mul(a, b));
    rows.push_back(std::move(row));
  }
  j["mul"] = std::move(rows);
  auto gens = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < m.gen_names().size(); ++i) gens[m.gen_names()[i]] = m.gen_images()[i];
  j["gens"] = std::move(gens);
  return j;
}

inline FiniteGroupModel model_from_json(const nlohmann::ordered_json& j, std::string name = {}) {
  const auto order = j.at("order").get<std::size_t>();
  std::vector<ElementId> table;
  table.reserve(order * order);
  const auto& rows = j.at("mul");
  if (rows.size() != order) throw std::invalid_argument("gmod: 'mul' must have 'order' rows");
  for (const auto& row : rows) {
    if (row.size() != order) throw std::invalid_argument("gmod: 'mul' row has wrong length");
    for (const auto& v : row) table.push_back(v.get<ElementId>());
  }
  std::vector<std::string> names;
  std::vector<ElementId> images;
  if (j.contains("gens"))
    for (const auto& [k, v] : j.at("gens").items()) {
      names.push_back(k);
      images.push_back(v.get<ElementId>());
    }
  FiniteGroupModel m(order, std::move(table), std::move(names), std::move(images), std::move(name));
  if (!verify_group_axioms(m)) throw std::invalid_argument("gmod: multiplication is not associative");
  return m;
}

/// Closure of a set of elements under multiplication (a subgroup, since the
/// group is finite). Returned sorted.
inline std::vector<ElementId> generated_subgroup(const FiniteGroupModel& m,
                                                 const std::vector<ElementId>& gens) {
  std::vector<char> in(m.order(), 0);
  std::vector<ElementId> elems{m.identity()};
  in[m.identity()] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (auto g : gens) {
      const auto x = m.mul(elems[i], g);
      if (!in[x]) {
        in[x] = 1;
        elems.push_back(x);
      }
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

}  // namespace wirtinger

#endif  // WIRTINGER_GROUP_MODEL_HPP
