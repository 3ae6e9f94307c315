#ifndef WIRTINGER_KUZMIN_HPP
#define WIRTINGER_KUZMIN_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"
#include "wirtinger/abelianization.hpp"
#include "wirtinger/bar_homology.hpp"
#include "wirtinger/coset_enumeration.hpp"
#include "wirtinger/group_model.hpp"
#include "wirtinger/presentation.hpp"
#include "wirtinger/words.hpp"

namespace wirtinger {

/// prod_i [a_i, b_i] in the free group.
struct CommutatorList {
  std::vector<std::pair<Word, Word>> pairs;

  [[nodiscard]] Word product() const {
    Word w;
    for (const auto& [a, b] : pairs) w = mul(w, commutator(a, b));
    return w;
  }
};

/// [a, g], the free-group representative of zeta'(g).
inline Word zeta_prime(const Word& a, const Word& g) { return commutator(a, g); }

/// prod over pairs of [a, g_a].
inline Word zeta_prime(const std::vector<std::pair<Word, Word>>& pairs) {
  return CommutatorList{pairs}.product();
}

struct PsiResult {
  BarChain2 chain;
  ElementId product;  // I_n; the chain is a cycle iff this is the identity
};

/// psi on element pairs (a_i, b_i) of m:
///   sum_i [I_{i-1}|a_i] + [I_{i-1}a_i|b_i] - [I_{i-1}a_i b_i a_i^-1|a_i] - [I_i|b_i]
/// with I_i = [a_1,b_1]...[a_i,b_i].
inline PsiResult psi_chain(const FiniteGroupModel& m,
                           const std::vector<std::pair<ElementId, ElementId>>& pairs) {
  PsiResult out{{}, m.identity()};
  ElementId prev = m.identity();
  for (const auto& [a, b] : pairs) {
    const ElementId pa = m.mul(prev, a);
    const ElementId pab = m.mul(pa, b);
    const ElementId next = m.mul(prev, m.commutator(a, b));
    out.chain.add(m, {prev, a}, 1);
    out.chain.add(m, {pa, b}, 1);
    out.chain.add(m, {m.mul(pab, m.inverse(a)), a}, -1);
    out.chain.add(m, {next, b}, -1);
    prev = next;
  }
  out.product = prev;
  return out;
}

/// psi of a commutator list, through the model's generator images.
inline PsiResult psi_chain(const FiniteGroupModel& m, const CommutatorList& cl) {
  std::vector<std::pair<ElementId, ElementId>> images;
  for (const auto& [a, b] : cl.pairs) images.emplace_back(eval_word(m, a), eval_word(m, b));
  return psi_chain(m, images);
}

/// Set-theoretic section G -> F: rep[g] is a word evaluating to g, and the
/// identity is represented by the empty word.
struct Section {
  std::vector<Word> rep;
};

inline bool is_section(const FiniteGroupModel& m, const Section& s) {
  if (s.rep.size() != m.order() || !s.rep[m.identity()].empty()) return false;
  for (ElementId g = 0; g < m.order(); ++g)
    if (eval_word(m, s.rep[g]) != g) return false;
  return true;
}

/// Shortest words, breadth-first over letters x_0, x_0^-1, x_1, ... appended
/// on the right; first discovery wins.
inline Section canonical_section(const FiniteGroupModel& m) {
  if (!m.has_gen_images()) throw std::logic_error("canonical_section: model has no generator images");
  Section s;
  s.rep.assign(m.order(), Word{});
  std::vector<char> seen(m.order(), 0);
  std::vector<ElementId> queue{m.identity()};
  seen[m.identity()] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const ElementId g = queue[i];
    for (std::uint32_t k = 0; k < m.gen_images().size(); ++k)
      for (std::int64_t e : {1, -1}) {
        const ElementId x = m.gen_images()[k];
        const ElementId h = m.mul(g, e > 0 ? x : m.inverse(x));
        if (seen[h]) continue;
        seen[h] = 1;
        s.rep[h] = mul(s.rep[g], Word::generator(GeneratorId(k), e));
        queue.push_back(h);
      }
  }
  for (ElementId g = 0; g < m.order(); ++g)
    if (!seen[g]) throw std::logic_error("canonical_section: generator images do not generate the group");
  return s;
}

/// Section with rep(g' a^n) = rep(g') a_word^n: every left coset g<a> is
/// based at its element with the shortest canonical representative (ties by
/// element id), and 0 <= n < order(a).
inline Section compatible_section(const FiniteGroupModel& m, ElementId a, const Word& a_word) {
  if (eval_word(m, a_word) != a) throw std::invalid_argument("compatible_section: a_word does not evaluate to a");
  const Section canon = canonical_section(m);
  // breadth-first discovery order of the canonical section
  std::vector<std::size_t> rank(m.order());
  {
    std::vector<ElementId> by_rank(m.order());
    for (ElementId g = 0; g < m.order(); ++g) by_rank[g] = g;
    std::stable_sort(by_rank.begin(), by_rank.end(), [&](ElementId x, ElementId y) {
      return canon.rep[x].length() < canon.rep[y].length();
    });
    for (std::size_t i = 0; i < by_rank.size(); ++i) rank[by_rank[i]] = i;
  }
  const std::size_t ord = m.element_order(a);
  Section s;
  s.rep.assign(m.order(), Word{});
  std::vector<char> done(m.order(), 0);
  std::vector<ElementId> by_rank(m.order());
  for (ElementId g = 0; g < m.order(); ++g) by_rank[rank[g]] = g;
  for (ElementId start : by_rank) {
    if (done[start]) continue;
    ElementId base = start;  // earliest in its coset, since we scan by rank
    ElementId x = base;
    for (std::size_t n = 0; n < ord; ++n) {
      done[x] = 1;
      s.rep[x] = mul(canon.rep[base], power(a_word, static_cast<std::int64_t>(n)));
      x = m.mul(x, a);
    }
  }
  return s;
}

/// phi[g|h] = s(g) s(h) s(gh)^-1, extended over the chain in symbol order.
/// For a cycle the result must have zero exponent sums and evaluate to the
/// identity; a violation raises std::logic_error.
inline Word phi_word(const FiniteGroupModel& m, const Section& s, const BarChain2& c) {
  Word out;
  for (const auto& [sym, k] : c.terms()) {
    const auto [g, h] = sym;
    const Word piece = mul(mul(s.rep[g], s.rep[h]), inv(s.rep[m.mul(g, h)]));
    out = mul(out, power(piece, k));
  }
  if (boundary2(m, c).empty()) {
    for (auto e : exponent_vector(out, m.gen_images().size()))
      if (e != 0) throw std::logic_error("phi_word: image of a cycle has nonzero exponent sum");
    if (eval_word(m, out) != m.identity())
      throw std::logic_error("phi_word: image of a cycle is not a relation");
  }
  return out;
}

/// Writes a word with zero exponent sums as prod [a_i, b_i]: for w = x u x^-1 v
/// (first cancelling partner of the leading letter) emit (x, u) and continue
/// with u v, since x u x^-1 v = [x, u] u v.
inline CommutatorList commutator_decomposition(const Word& w, std::size_t num_gens) {
  for (auto e : exponent_vector(w, num_gens))
    if (e != 0) throw std::invalid_argument("commutator_decomposition: word is not in [F,F]");
  CommutatorList out;
  std::vector<Letter> units = w.unit_letters();
  while (!units.empty()) {
    const Letter x = units.front();
    std::size_t partner = 1;
    while (partner < units.size() && !(units[partner].gen == x.gen && units[partner].exp == -x.exp))
      ++partner;
    if (partner == units.size()) throw std::logic_error("commutator_decomposition: no cancelling partner");
    const std::vector<Letter> u(units.begin() + 1, units.begin() + static_cast<std::ptrdiff_t>(partner));
    std::vector<Letter> rest(u);
    rest.insert(rest.end(), units.begin() + static_cast<std::ptrdiff_t>(partner) + 1, units.end());
    out.pairs.emplace_back(Word::generator(x.gen, x.exp), Word(u));
    units = Word(rest).unit_letters();
  }
  return out;
}

struct Decomposition {
  Word g_prime;
  std::int64_t n = 0;
};

/// g = g' a^n with n = eps(g), so eps(g') = 0 and [a, g] = [a, g'].
/// Throws std::invalid_argument unless eps(a) = 1.
inline Decomposition decompose(const Word& g, const Word& a, const DualFunctional& eps) {
  if (eval_functional(eps, a) != 1) throw std::invalid_argument("decompose: eps(a) != 1");
  const std::int64_t n = eval_functional(eps, g);
  return {mul(g, power(a, -n)), n};
}

enum class Status { Verified, Refuted, Inconclusive };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::Verified: return "verified";
    case Status::Refuted: return "refuted";
    case Status::Inconclusive: return "inconclusive";
  }
  return "?";
}

struct ConditionResult {
  std::string condition;
  Status status = Status::Inconclusive;
  std::string summary;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();  // evidence or witness
  nlohmann::ordered_json budget = nlohmann::ordered_json::object();
};

/// Enumerates p + {b = 1} over the trivial subgroup: one coset verifies,
/// more refute, overflow is inconclusive.
inline ConditionResult check_normal_closure(const Presentation& p, const std::vector<Word>& B,
                                            std::size_t max_cosets) {
  ConditionResult r;
  r.condition = "normal_closure";
  r.budget["max_cosets"] = max_cosets;
  const auto res = todd_coxeter(p.with_relators(B), {}, max_cosets);
  if (const auto* t = std::get_if<CosetTable>(&res)) {
    r.status = t->num_cosets == 1 ? Status::Verified : Status::Refuted;
    r.details["quotient_order"] = t->num_cosets;
    r.summary = t->num_cosets == 1
                    ? "G / <<B>> is trivial (1 coset)"
                    : "G / <<B>> has order " + std::to_string(t->num_cosets);
  } else {
    const auto& o = std::get<CosetOverflow>(res);
    r.status = Status::Inconclusive;
    r.details["cosets_defined"] = o.cosets_defined;
    r.summary = "coset enumeration of G / <<B>> exceeded " + std::to_string(max_cosets) + " cosets";
  }
  return r;
}

struct Budgets {
  std::size_t max_cosets = 100000;
  std::size_t prover_depth = 4;
  std::size_t h2_ceiling = kDefaultH2Ceiling;
};

struct KuzminReport {
  std::vector<std::string> generators;
  std::vector<std::string> B;
  std::optional<std::size_t> model_order;
  std::string model_source;
  ConditionResult normal_closure;
  ConditionResult linear_independence;
  ConditionResult zeta_surjective;
  std::vector<std::string> notes;

  [[nodiscard]] bool any_refuted() const {
    return normal_closure.status == Status::Refuted || linear_independence.status == Status::Refuted ||
           zeta_surjective.status == Status::Refuted;
  }
};

namespace detail {

inline std::vector<std::string> class_strings(const H2Class& c) {
  std::vector<std::string> out;
  for (const auto& x : c) out.push_back(x.str());
  return out;
}

inline nlohmann::ordered_json bigints(const std::vector<BigInt>& v) {
  auto a = nlohmann::ordered_json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

}  // namespace detail

/// Images of zeta over b in B and g in C(b) (or C(b) n [G,G] when
/// `restricted`), as classes in H2.
inline std::vector<H2Class> zeta_image_classes(const H2Data& h, const std::vector<ElementId>& b_images,
                                               bool restricted) {
  const auto& m = h.model();
  std::vector<char> in_commutator(m.order(), restricted ? 0 : 1);
  if (restricted)
    for (auto x : commutator_subgroup(m)) in_commutator[x] = 1;
  std::vector<H2Class> out;
  for (auto b : b_images)
    for (auto g : centralizer(m, b)) {
      if (!in_commutator[g]) continue;
      auto cls = h.class_of_cycle(zeta_chain(m, b, g));
      if (auto* c = std::get_if<H2Class>(&cls))
        out.push_back(std::move(*c));
      else
        throw std::logic_error("zeta_image_classes: zeta chain of a commuting pair is not a cycle");
    }
  return out;
}

/// Condition report for B in the group presented by p.
///
/// The zeta condition is decided only on a finite model of the presented
/// group: `model` when given (it must satisfy p's relators), otherwise one
/// obtained by coset enumeration within the budget.
inline KuzminReport check_conditions(const Presentation& p, const std::vector<Word>& B,
                                     const Budgets& budgets,
                                     const std::optional<FiniteGroupModel>& model = std::nullopt,
                                     const std::vector<std::string>& notes = {}) {
  KuzminReport rep;
  rep.generators = p.generator_names();
  for (const auto& b : B) rep.B.push_back(format_word(b, p));
  rep.notes = notes;

  rep.normal_closure = check_normal_closure(p, B, budgets.max_cosets);

  auto& li = rep.linear_independence;
  li.condition = "linear_independence";
  const auto ab = abelianize(p);
  li.details["abelianization_rank"] = ab.rank;
  li.details["torsion"] = detail::bigints(ab.torsion);
  if (!is_free_abelian(ab)) {
    li.status = Status::Refuted;
    li.summary = "G_ab is not free abelian";
  } else if (!classes_linearly_independent(ab, B)) {
    li.status = Status::Refuted;
    li.summary = "classes of B in G_ab are linearly dependent";
  } else {
    li.status = Status::Verified;
    li.summary = "classes of B are linearly independent in G_ab = Z" +
                 (ab.rank == 1 ? std::string() : "^" + std::to_string(ab.rank));
    if (auto eps = dual_functionals(ab, B)) {
      auto fs = nlohmann::ordered_json::array();
      for (const auto& f : *eps) fs.push_back(f.coeffs);
      li.details["functionals"] = std::move(fs);
    } else {
      li.details["functionals"] = nullptr;
      rep.notes.push_back("B-classes do not span a direct summand of G_ab; the hypotheses fail");
    }
  }

  auto& zs = rep.zeta_surjective;
  zs.condition = "zeta_surjective";
  zs.budget["max_cosets"] = budgets.max_cosets;
  zs.budget["h2_ceiling"] = budgets.h2_ceiling;
  std::optional<FiniteGroupModel> m = model;
  if (m) {
    if (!satisfies_relators(*m, p))
      throw std::invalid_argument("check_conditions: model does not satisfy the presentation");
    rep.model_source = "supplied";
  } else {
    const auto res = todd_coxeter(p, {}, budgets.max_cosets);
    if (const auto* t = std::get_if<CosetTable>(&res)) {
      m = model_from_coset_table(*t, "enumerated");
      rep.model_source = "enumerated";
    }
  }
  if (!m) {
    zs.status = Status::Inconclusive;
    zs.summary = "no finite model within " + std::to_string(budgets.max_cosets) +
                 " cosets; H2 of an infinite group is not computed";
    return rep;
  }
  rep.model_order = m->order();
  if (m->order() > budgets.h2_ceiling) {
    zs.status = Status::Inconclusive;
    zs.summary = "model order " + std::to_string(m->order()) + " exceeds the H2 ceiling " +
                 std::to_string(budgets.h2_ceiling);
    return rep;
  }
  const H2Data h = h2_finite(*m, budgets.h2_ceiling);
  std::vector<ElementId> b_images;
  for (const auto& b : B) b_images.push_back(eval_word(*m, b));
  const BigInt full = subgroup_order(h, zeta_image_classes(h, b_images, false));
  const BigInt restricted = subgroup_order(h, zeta_image_classes(h, b_images, true));
  zs.details["h2"] = detail::bigints(h.invariant_factors());
  zs.details["h2_order"] = h.order().str();
  zs.details["full_image_order"] = full.str();
  zs.details["restricted_image_order"] = restricted.str();
  zs.details["restricted_equals_full"] = full == restricted;
  if (full == h.order()) {
    zs.status = Status::Verified;
    zs.summary = "zeta images generate H2 (order " + h.order().str() + ")";
  } else {
    zs.status = Status::Refuted;
    zs.summary = "zeta images generate a subgroup of order " + full.str() + " in H2 of order " +
                 h.order().str();
  }
  return rep;
}

inline nlohmann::ordered_json condition_to_json(const ConditionResult& c) {
  nlohmann::ordered_json j;
  j["condition"] = c.condition;
  j["status"] = to_string(c.status);
  j[c.status == Status::Refuted ? "witness" : "evidence"] = c.details;
  j["summary"] = c.summary;
  j["budget"] = c.budget;
  return j;
}

inline nlohmann::ordered_json report_to_json(const KuzminReport& r) {
  nlohmann::ordered_json j;
  j["generators"] = r.generators;
  j["B"] = r.B;
  j["model"] = r.model_order ? nlohmann::ordered_json{{"source", r.model_source}, {"order", *r.model_order}}
                             : nlohmann::ordered_json(nullptr);
  j["conditions"] = {condition_to_json(r.normal_closure), condition_to_json(r.linear_independence),
                     condition_to_json(r.zeta_surjective)};
  j["notes"] = r.notes;
  return j;
}

}  // namespace wirtinger

#endif  // WIRTINGER_KUZMIN_HPP
