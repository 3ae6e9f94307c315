#ifndef WIRTINGER_QUOTIENT_HPP
#define WIRTINGER_QUOTIENT_HPP

#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wirtinger/group_model.hpp"
#include "wirtinger/presentation.hpp"

namespace wirtinger {

/// Permutation of {0, ..., degree-1} acting on the right.
using Permutation = std::vector<std::uint32_t>;

/// Parses cycle notation over points 1..n, e.g. "(1 2)(3 4 5)" or "()".
/// The result has degree max(n, largest point mentioned).
inline Permutation parse_cycles(std::string_view text, std::size_t degree = 0) {
  std::vector<std::vector<std::uint32_t>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("cycle notation: expected '('");
    ++i;
    std::vector<std::uint32_t> cyc;
    while (true) {
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i >= text.size()) throw std::invalid_argument("cycle notation: unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) throw std::invalid_argument("cycle notation: expected a point");
      const auto pt = std::stoul(std::string(text.substr(start, i - start)));
      if (pt == 0) throw std::invalid_argument("cycle notation: points are 1-based");
      cyc.push_back(static_cast<std::uint32_t>(pt - 1));
      degree = std::max<std::size_t>(degree, pt);
    }
    cycles.push_back(std::move(cyc));
    skip_ws();
  }
  Permutation p(degree);
  for (std::size_t k = 0; k < degree; ++k) p[k] = static_cast<std::uint32_t>(k);
  std::vector<char> moved(degree, 0);
  for (const auto& cyc : cycles)
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      if (moved[cyc[k]]) throw std::invalid_argument("cycle notation: cycles are not disjoint");
      moved[cyc[k]] = 1;
      p[cyc[k]] = cyc[(k + 1) % cyc.size()];
    }
  return p;
}

/// Finite group generated by permutations, as a model whose element ids
/// follow breadth-first discovery from the identity. Throws
/// std::length_error past `max_order`.
inline FiniteGroupModel model_from_permutations(const std::vector<std::string>& names,
                                                std::vector<Permutation> gens,
                                                std::size_t max_order = 10000,
                                                std::string name = {}) {
  std::size_t degree = 0;
  for (const auto& g : gens) degree = std::max(degree, g.size());
  for (auto& g : gens)
    for (std::size_t k = g.size(); k < degree; ++k) g.push_back(static_cast<std::uint32_t>(k));
  auto compose = [](const Permutation& a, const Permutation& b) {
    Permutation c(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) c[k] = b[a[k]];
    return c;
  };
  Permutation id(degree);
  for (std::size_t k = 0; k < degree; ++k) id[k] = static_cast<std::uint32_t>(k);
  std::map<Permutation, ElementId> index{{id, 0}};
  std::vector<Permutation> elems{id};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : gens) {
      auto x = compose(elems[i], g);
      if (index.count(x)) continue;
      if (elems.size() >= max_order)
        throw std::length_error("permutation group exceeds order cap " + std::to_string(max_order));
      index.emplace(x, static_cast<ElementId>(elems.size()));
      elems.push_back(std::move(x));
    }
  const std::size_t n = elems.size();
  std::vector<ElementId> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = index.at(compose(elems[a], elems[b]));
  std::vector<ElementId> images;
  for (const auto& g : gens) images.push_back(index.at(g));
  return FiniteGroupModel(n, std::move(table), names, std::move(images), std::move(name));
}

/// A finite quotient named by a .quot file.
struct QuotientSpec {
  Presentation presentation;
  FiniteGroupModel model;
};

/// Parses .quot text:
///   presentation: <path to .wpres, relative to base_dir>
///   name: <label>                       (optional)
///   map: <gen> -> <cycle notation>      (one per generator)
/// Relators are checked to map to the identity permutation.
inline QuotientSpec parse_quotient(std::string_view text, const std::filesystem::path& base_dir,
                                   std::string default_name = "quotient",
                                   std::size_t max_order = 10000) {
  std::optional<Presentation> pres;
  std::string name = std::move(default_name);
  std::map<std::string, std::string> maps;
  std::vector<std::string> map_order;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  auto trim = [](std::string s) {
    const auto a = s.find_first_not_of(" \t\r");
    const auto b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto h = line.find('#'); h != std::string::npos) line.resize(h);
    line = trim(line);
    if (line.empty()) continue;
    if (line.rfind("presentation:", 0) == 0) {
      const auto path = base_dir / trim(line.substr(13));
      std::ifstream f(path);
      if (!f) throw ParseError("cannot open presentation '" + path.string() + "'", line_no, 1);
      std::stringstream ss;
      ss << f.rdbuf();
      pres = parse_presentation(ss.str());
    } else if (line.rfind("name:", 0) == 0) {
      name = trim(line.substr(5));
    } else if (line.rfind("map:", 0) == 0) {
      const auto rest = line.substr(4);
      const auto arrow = rest.find("->");
      if (arrow == std::string::npos) throw ParseError("expected '->' in map line", line_no, 1);
      auto gen = trim(rest.substr(0, arrow));
      if (maps.count(gen)) throw ParseError("duplicate map for '" + gen + "'", line_no, 1);
      maps[gen] = trim(rest.substr(arrow + 2));
      map_order.push_back(gen);
    } else {
      throw ParseError("unrecognised line", line_no, 1);
    }
  }
  if (!pres) throw ParseError("missing 'presentation:' line", line_no, 1);
  std::vector<Permutation> perms;
  for (const auto& g : pres->generator_names()) {
    auto it = maps.find(g);
    if (it == maps.end()) throw std::invalid_argument("quotient: no map for generator '" + g + "'");
    perms.push_back(parse_cycles(it->second));
  }
  for (const auto& g : map_order)
    if (!pres->find(g)) throw std::invalid_argument("quotient: map for undeclared generator '" + g + "'");
  auto model = model_from_permutations(pres->generator_names(), std::move(perms), max_order, name);
  for (std::size_t i = 0; i < pres->relators().size(); ++i)
    if (eval_word(model, pres->relators()[i]) != model.identity())
      throw std::invalid_argument("quotient '" + name + "': relator " + std::to_string(i + 1) +
                                  " does not map to the identity");
  return QuotientSpec{std::move(*pres), std::move(model)};
}

inline QuotientSpec load_quotient(const std::filesystem::path& path, std::size_t max_order = 10000) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_quotient(ss.str(), path.parent_path(), path.stem().string(), max_order);
}

}  // namespace wirtinger

#endif  // WIRTINGER_QUOTIENT_HPP
