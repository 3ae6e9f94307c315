#ifndef WIRTINGER_PROVE_EQUAL_HPP
#define WIRTINGER_PROVE_EQUAL_HPP

#include <algorithm>
#include <set>
#include <string>
#include <unordered_set>
#include <variant>
#include <vector>

#include "wirtinger/group_model.hpp"
#include "wirtinger/presentation.hpp"
#include "wirtinger/words.hpp"

namespace wirtinger {

struct Proven {
  std::size_t depth = 0;  // number of relator insertions used
};
struct Disproven {
  std::string witness;  // name of the separating quotient
};
struct Unknown {};

using EqVerdict = std::variant<Proven, Disproven, Unknown>;

/// Every cyclic rotation of every relator and of its inverse, cyclically
/// reduced, deduplicated, in a fixed order.
inline std::vector<Word> relator_moves(const Presentation& p) {
  std::vector<Word> moves;
  std::set<Word> seen;
  for (const auto& r : p.relators()) {
    const Word core = cyclic_reduce(r).core;
    if (core.empty()) continue;
    for (const Word& base : {core, inv(core)})
      for (auto& rot : cyclic_rotations(base))
        if (seen.insert(rot).second) moves.push_back(std::move(rot));
  }
  return moves;
}

/// Bounded search for u = v in the group presented by p.
///
/// Proven when u v^-1 reaches the identity after at most `depth` relator
/// insertions (breadth-first; states are reduced words). Disproven when some
/// quotient satisfying p's relators separates u and v. Otherwise Unknown.
inline EqVerdict prove_equal(const Presentation& p, const Word& u, const Word& v, std::size_t depth,
                             const std::vector<FiniteGroupModel>& quotients = {}) {
  const Word target = mul(u, inv(v));
  if (target.empty()) return Proven{0};
  for (const auto& q : quotients) {
    if (!satisfies_relators(q, p)) continue;
    if (eval_word(q, u) != eval_word(q, v)) return Disproven{q.name()};
  }
  const auto moves = relator_moves(p);
  if (moves.empty()) return Unknown{};
  std::size_t max_len = 0;
  std::vector<std::vector<Letter>> move_units;
  for (const auto& m : moves) {
    move_units.push_back(m.unit_letters());
    max_len = std::max(max_len, move_units.back().size());
  }

  // one insertion shortens a word by at most max_len letters
  std::unordered_set<Word> visited{target};
  std::vector<Word> frontier{target};
  for (std::size_t level = 1; level <= depth && !frontier.empty(); ++level) {
    const std::size_t remaining = depth - level;
    std::vector<Word> next;
    for (const auto& w : frontier) {
      const auto units = w.unit_letters();
      for (std::size_t pos = 0; pos <= units.size(); ++pos) {
        for (const auto& mu : move_units) {
          std::vector<Letter> raw;
          raw.reserve(units.size() + mu.size());
          raw.insert(raw.end(), units.begin(), units.begin() + static_cast<std::ptrdiff_t>(pos));
          raw.insert(raw.end(), mu.begin(), mu.end());
          raw.insert(raw.end(), units.begin() + static_cast<std::ptrdiff_t>(pos), units.end());
          Word nw(raw);
          if (nw.empty()) return Proven{level};
          if (nw.length() > remaining * max_len) continue;
          if (visited.insert(nw).second) next.push_back(std::move(nw));
        }
      }
    }
    frontier = std::move(next);
  }
  return Unknown{};
}

}  // namespace wirtinger

#endif  // WIRTINGER_PROVE_EQUAL_HPP
