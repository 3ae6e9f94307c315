#ifndef WIRTINGER_WIRTINGER_FORM_HPP
#define WIRTINGER_WIRTINGER_FORM_HPP

#include <numeric>
#include <string>
#include <variant>
#include <vector>

#include "wirtinger/presentation.hpp"
#include "wirtinger/words.hpp"

namespace wirtinger {

/// Relator x_beta^-1 x_alpha x_beta x_gamma^-1, i.e. x_beta^-1 x_alpha x_beta = x_gamma.
struct WirtingerTriple {
  GeneratorId alpha;
  GeneratorId beta;
  GeneratorId gamma;

  friend bool operator==(const WirtingerTriple&, const WirtingerTriple&) = default;
};

struct WirtingerData {
  std::vector<WirtingerTriple> triples;  // one per relator
};

struct WirtingerRejection {
  std::size_t relator_index = 0;
  std::string reason;
};

inline Word wirtinger_relator(const WirtingerTriple& t) {
  return Word{{t.beta, -1}, {t.alpha, 1}, {t.beta, 1}, {t.gamma, -1}};
}

/// Reads a triple off a single relator, or returns nothing if no cyclic
/// rotation of the relator or its inverse has the literal conjugation form.
inline std::optional<WirtingerTriple> match_wirtinger_relator(const Word& relator) {
  for (const Word& candidate : {relator, inv(relator)}) {
    const auto core = cyclic_reduce(candidate).core;
    const auto units = core.unit_letters();
    if (units.size() != 4) continue;
    for (std::size_t s = 0; s < 4; ++s) {
      const Letter& l0 = units[s];
      const Letter& l1 = units[(s + 1) % 4];
      const Letter& l2 = units[(s + 2) % 4];
      const Letter& l3 = units[(s + 3) % 4];
      if (l0.exp == -1 && l1.exp == 1 && l2.exp == 1 && l3.exp == -1 && l0.gen == l2.gen)
        return WirtingerTriple{l1.gen, l0.gen, l3.gen};
    }
  }
  return std::nullopt;
}

/// One triple per relator, or the first relator that fails the pattern.
inline std::variant<WirtingerData, WirtingerRejection> validate_wirtinger(const Presentation& p) {
  WirtingerData data;
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    const Word& r = p.relators()[i];
    if (auto t = match_wirtinger_relator(r)) {
      data.triples.push_back(*t);
      continue;
    }
    const auto len = cyclic_reduce(r).core.length();
    std::string why;
    if (len == 0)
      why = "relator is trivial in the free group";
    else if (len != 4)
      why = "cyclically reduced length " + std::to_string(len) + " (conjugation form has length 4)";
    else
      why = "no cyclic rotation of the relator or its inverse has the form b^-1 a b c^-1";
    return WirtingerRejection{i, "relator " + std::to_string(i + 1) + " '" + format_word(r, p) +
                                     "': " + why};
  }
  return data;
}

/// Labelled oriented graph: a node per generator, an edge alpha -> gamma labelled beta per triple.
struct LogGraph {
  struct Edge {
    GeneratorId from;   // alpha
    GeneratorId to;     // gamma
    GeneratorId label;  // beta
  };
  std::size_t num_nodes = 0;
  std::vector<Edge> edges;
};

inline LogGraph log_graph(const Presentation& p, const WirtingerData& w) {
  LogGraph g;
  g.num_nodes = p.num_generators();
  for (const auto& t : w.triples) g.edges.push_back({t.alpha, t.gamma, t.beta});
  return g;
}

/// Connectivity of the underlying undirected graph.
inline bool is_irreducible(const LogGraph& g) {
  std::vector<std::size_t> parent(g.num_nodes);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = g.num_nodes;
  for (const auto& e : g.edges) {
    const auto a = find(e.from.index);
    const auto b = find(e.to.index);
    if (a != b) {
      parent[std::max(a, b)] = std::min(a, b);
      --components;
    }
  }
  return components <= 1;
}

}  // namespace wirtinger

#endif  // WIRTINGER_WIRTINGER_FORM_HPP
