#ifndef WIRTINGER_COSET_ENUMERATION_HPP
#define WIRTINGER_COSET_ENUMERATION_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "wirtinger/group_model.hpp"
#include "wirtinger/presentation.hpp"
#include "wirtinger/words.hpp"

namespace wirtinger {

/// Coset table: column 2g is generator g, column 2g+1 its inverse.
/// Entries are coset indices or -1; coset 0 is the subgroup itself.
struct CosetTable {
  std::vector<std::string> gen_names;
  std::size_t num_cosets = 0;
  std::vector<std::int32_t> entries;  // num_cosets * num_columns()
  bool complete = false;
  bool over_trivial_subgroup = false;

  [[nodiscard]] std::size_t num_columns() const { return 2 * gen_names.size(); }
  [[nodiscard]] std::int32_t at(std::size_t coset, std::size_t column) const {
    return entries[coset * num_columns() + column];
  }
  [[nodiscard]] static std::size_t column(GeneratorId g, bool inverse) {
    return 2 * static_cast<std::size_t>(g.index) + (inverse ? 1 : 0);
  }
  /// Coset reached from `coset` by reading w; -1 if the trace hits a gap.
  [[nodiscard]] std::int32_t trace(std::size_t coset, const Word& w) const {
    auto c = static_cast<std::int32_t>(coset);
    for (const auto& l : w.unit_letters()) {
      c = at(static_cast<std::size_t>(c), column(l.gen, l.exp < 0));
      if (c < 0) return -1;
    }
    return c;
  }
};

/// Raised in place of a table when the coset budget is exhausted.
struct CosetOverflow {
  std::size_t max_cosets = 0;
  std::size_t cosets_defined = 0;
};

/// Consistency scan: inverse symmetry everywhere and, for a complete table,
/// every relator closes at every coset.
inline bool coset_table_consistent(const CosetTable& t, const Presentation& p) {
  const std::size_t cols = t.num_columns();
  for (std::size_t c = 0; c < t.num_cosets; ++c)
    for (std::size_t x = 0; x < cols; ++x) {
      const auto d = t.at(c, x);
      if (d < 0) {
        if (t.complete) return false;
        continue;
      }
      if (static_cast<std::size_t>(d) >= t.num_cosets) return false;
      if (t.at(static_cast<std::size_t>(d), x ^ 1U) != static_cast<std::int32_t>(c)) return false;
    }
  if (!t.complete) return true;
  for (std::size_t c = 0; c < t.num_cosets; ++c)
    for (const auto& r : p.relators())
      if (t.trace(c, r) != static_cast<std::int32_t>(c)) return false;
  return true;
}

namespace detail {

/// HLT enumeration with union-find coincidence handling.
class CosetEnumerator {
 public:
  CosetEnumerator(const Presentation& p, const std::vector<Word>& subgroup, std::size_t max_cosets)
      : cols_(2 * p.num_generators()), max_(max_cosets) {
    for (const auto& r : p.relators())
      if (!r.empty()) rels_.push_back(columns_of(r));
    for (const auto& w : subgroup)
      if (!w.empty()) subgroup_.push_back(columns_of(w));
  }

  /// True on completion, false on overflow.
  bool run() {
    new_coset();
    bool lookahead_used = false;
    auto recover = [&]() {
      if (lookahead_used) return false;
      lookahead_used = true;
      lookahead();
      return live_ < max_;
    };
    for (std::size_t i = 0; i < subgroup_.size(); ++i)
      if (!scan_and_fill(0, subgroup_[i])) {
        if (!recover()) return false;
        --i;
      }
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      bool retry = true;
      while (retry) {
        retry = false;
        if (!alive(c)) break;
        for (const auto& r : rels_) {
          if (!scan_and_fill(c, r)) {
            if (!recover()) return false;
            retry = true;
            break;
          }
          if (!alive(c)) break;
        }
        if (retry || !alive(c)) continue;
        for (std::size_t x = 0; x < cols_; ++x) {
          if (entry(c, x) >= 0) continue;
          if (!define(c, x)) {
            if (!recover()) return false;
            retry = true;
            break;
          }
        }
      }
    }
    return true;
  }

  [[nodiscard]] std::size_t defined() const { return parent_.size(); }

  /// Live cosets renumbered in breadth-first order over columns.
  [[nodiscard]] CosetTable standardized(std::vector<std::string> names, bool trivial_subgroup) const {
    std::vector<std::int32_t> renum(parent_.size(), -1);
    std::vector<std::size_t> order{0};
    renum[0] = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
      for (std::size_t x = 0; x < cols_; ++x) {
        const auto d = static_cast<std::size_t>(entry(order[i], x));
        if (renum[d] < 0) {
          renum[d] = static_cast<std::int32_t>(order.size());
          order.push_back(d);
        }
      }
    CosetTable t;
    t.gen_names = std::move(names);
    t.num_cosets = order.size();
    t.entries.resize(order.size() * cols_);
    for (std::size_t i = 0; i < order.size(); ++i)
      for (std::size_t x = 0; x < cols_; ++x)
        t.entries[i * cols_ + x] = renum[static_cast<std::size_t>(entry(order[i], x))];
    t.complete = true;
    t.over_trivial_subgroup = trivial_subgroup;
    return t;
  }

 private:
  std::vector<std::size_t> columns_of(const Word& w) const {
    std::vector<std::size_t> out;
    for (const auto& l : w.unit_letters()) out.push_back(CosetTable::column(l.gen, l.exp < 0));
    return out;
  }

  [[nodiscard]] bool alive(std::size_t c) const { return parent_[c] == c; }
  [[nodiscard]] std::int32_t entry(std::size_t c, std::size_t x) const { return table_[c * cols_ + x]; }
  void set(std::size_t c, std::size_t x, std::int32_t v) { table_[c * cols_ + x] = v; }

  bool new_coset() {
    if (live_ >= max_) return false;
    parent_.push_back(parent_.size());
    table_.resize(table_.size() + cols_, -1);
    ++live_;
    return true;
  }

  bool define(std::size_t c, std::size_t x) {
    if (!new_coset()) return false;
    const auto d = static_cast<std::int32_t>(parent_.size() - 1);
    set(c, x, d);
    set(static_cast<std::size_t>(d), x ^ 1U, static_cast<std::int32_t>(c));
    return true;
  }

  std::size_t rep(std::size_t k) {
    std::size_t root = k;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[k] != root) {
      const auto next = parent_[k];
      parent_[k] = root;
      k = next;
    }
    return root;
  }

  void merge(std::size_t k, std::size_t l, std::vector<std::size_t>& queue) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (l < k) std::swap(k, l);
    parent_[l] = k;
    --live_;
    queue.push_back(l);
  }

  void coincidence(std::size_t a, std::size_t b) {
    std::vector<std::size_t> queue;
    merge(a, b, queue);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const std::size_t e = queue[i];
      for (std::size_t x = 0; x < cols_; ++x) {
        const auto fv = entry(e, x);
        if (fv < 0) continue;
        const auto f = static_cast<std::size_t>(fv);
        set(f, x ^ 1U, -1);
        const auto e1 = rep(e);
        const auto f1 = rep(f);
        if (entry(e1, x) >= 0) {
          merge(f1, static_cast<std::size_t>(entry(e1, x)), queue);
        } else if (entry(f1, x ^ 1U) >= 0) {
          merge(e1, static_cast<std::size_t>(entry(f1, x ^ 1U)), queue);
        } else {
          set(e1, x, static_cast<std::int32_t>(f1));
          set(f1, x ^ 1U, static_cast<std::int32_t>(e1));
        }
      }
    }
  }

  /// Scans w at c, defining cosets as needed when `fill`. False on overflow.
  bool scan(std::size_t c, const std::vector<std::size_t>& w, bool fill) {
    if (w.empty()) return true;
    std::size_t f = c;
    std::size_t b = c;
    std::size_t i = 0;
    std::size_t j = w.size();  // one past the last unscanned letter
    while (true) {
      while (i < j && entry(f, w[i]) >= 0) f = static_cast<std::size_t>(entry(f, w[i++]));
      if (i == j) {
        if (f != b) coincidence(f, b);
        return true;
      }
      while (j > i && entry(b, w[j - 1] ^ 1U) >= 0)
        b = static_cast<std::size_t>(entry(b, w[--j] ^ 1U));
      if (j == i) {
        coincidence(f, b);
        return true;
      }
      if (j == i + 1) {
        set(f, w[i], static_cast<std::int32_t>(b));
        set(b, w[i] ^ 1U, static_cast<std::int32_t>(f));
        return true;
      }
      if (!fill) return true;
      if (!define(f, w[i])) return false;
    }
  }

  bool scan_and_fill(std::size_t c, const std::vector<std::size_t>& w) { return scan(c, w, true); }

  void lookahead() {
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      for (const auto& r : rels_) {
        if (!alive(c)) break;
        scan(c, r, false);
      }
    }
    for (const auto& s : subgroup_) scan(0, s, false);
  }

  std::size_t cols_;
  std::size_t max_;
  std::vector<std::vector<std::size_t>> rels_;
  std::vector<std::vector<std::size_t>> subgroup_;
  std::vector<std::int32_t> table_;
  std::vector<std::size_t> parent_;
  std::size_t live_ = 0;
};

}  // namespace detail

/// Todd-Coxeter (HLT, one lookahead pass on overflow) for the cosets of
/// <subgroup_gens> in the group presented by p.
inline std::variant<CosetTable, CosetOverflow> todd_coxeter(const Presentation& p,
                                                            const std::vector<Word>& subgroup_gens,
                                                            std::size_t max_cosets) {
  if (max_cosets < 1) throw std::invalid_argument("todd_coxeter: max_cosets must be >= 1");
  detail::CosetEnumerator e(p, subgroup_gens, max_cosets);
  if (!e.run()) return CosetOverflow{max_cosets, e.defined()};
  bool trivial = true;
  for (const auto& w : subgroup_gens) trivial = trivial && w.empty();
  return e.standardized(p.generator_names(), trivial);
}

/// The regular representation read off a complete table over the trivial
/// subgroup: element d is coset d, and d * e is d traced along a word for e.
inline FiniteGroupModel model_from_coset_table(const CosetTable& t, std::string name = {}) {
  if (!t.complete) throw std::invalid_argument("model_from_coset_table: table is incomplete");
  if (!t.over_trivial_subgroup)
    throw std::invalid_argument("model_from_coset_table: table is not over the trivial subgroup");
  const std::size_t n = t.num_cosets;
  const std::size_t cols = t.num_columns();
  // spanning tree: parent coset and column for every coset but 0
  std::vector<std::int64_t> tree_parent(n, -1);
  std::vector<std::size_t> tree_col(n, 0);
  std::vector<std::size_t> bfs{0};
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  for (std::size_t i = 0; i < bfs.size(); ++i)
    for (std::size_t x = 0; x < cols; ++x) {
      const auto d = static_cast<std::size_t>(t.at(bfs[i], x));
      if (!seen[d]) {
        seen[d] = 1;
        tree_parent[d] = static_cast<std::int64_t>(bfs[i]);
        tree_col[d] = x;
        bfs.push_back(d);
      }
    }
  std::vector<ElementId> table(n * n);
  for (std::size_t d = 0; d < n; ++d) table[d * n] = static_cast<ElementId>(d);
  for (std::size_t k = 1; k < bfs.size(); ++k) {
    const std::size_t e = bfs[k];
    const auto par = static_cast<std::size_t>(tree_parent[e]);
    for (std::size_t d = 0; d < n; ++d)
      table[d * n + e] = static_cast<ElementId>(t.at(table[d * n + par], tree_col[e]));
  }
  std::vector<ElementId> images;
  for (std::size_t g = 0; g < t.gen_names.size(); ++g)
    images.push_back(static_cast<ElementId>(t.at(0, 2 * g)));
  return FiniteGroupModel(n, std::move(table), t.gen_names, std::move(images), std::move(name));
}

}  // namespace wirtinger

#endif  // WIRTINGER_COSET_ENUMERATION_HPP
