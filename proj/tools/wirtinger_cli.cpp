// wirtinger: command-line front end for the header library.
//
// Exit codes: 0 ok, 1 usage/IO/parse error, 2 validation failure or
// refutation, 3 budget exhausted.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wirtinger/abelianization.hpp"
#include "wirtinger/bar_homology.hpp"
#include "wirtinger/coset_enumeration.hpp"
#include "wirtinger/group_model.hpp"
#include "wirtinger/kuzmin.hpp"
#include "wirtinger/presentation.hpp"
#include "wirtinger/prove_equal.hpp"
#include "wirtinger/quotient.hpp"
#include "wirtinger/wirtinger_form.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace wirtinger;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kInvalid = 2;
constexpr int kBudget = 3;

struct Exit {
  int code;
  std::string message;
};

struct Options {
  std::size_t max_cosets = Budgets{}.max_cosets;
  std::size_t depth = Budgets{}.prover_depth;
  std::size_t h2_ceiling = Budgets{}.h2_ceiling;
  bool json = false;
  bool enumerate = false;
  std::vector<std::string> quotients;
  std::vector<std::string> B;
  std::vector<std::string> notes;
  std::vector<std::string> subgroup;
  std::string model;
  std::string output;
  std::string input;
  std::vector<std::string> words;
};

std::string read_text(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Exit{kUsage, "cannot read " + path};
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void emit(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.output);
  if (!f) throw Exit{kUsage, "cannot write " + o.output};
  f << text;
}

void emit_json(const Options& o, const json& j) { emit(o, j.dump(2) + "\n"); }

Presentation load_presentation(const std::string& path) {
  const std::string text = read_text(path);
  try {
    return parse_presentation(text);
  } catch (const ParseError& e) {
    throw Exit{kUsage, path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " +
                           e.message()};
  }
}

Word word_in(const std::string& text, const std::vector<std::string>& names) {
  try {
    return parse_word(text, names);
  } catch (const ParseError& e) {
    throw Exit{kUsage, "word '" + text + "': column " + std::to_string(e.column()) + ": " + e.message()};
  }
}

FiniteGroupModel enumerate_or_exit(const Presentation& p, std::size_t max_cosets, std::string name) {
  const auto r = todd_coxeter(p, {}, max_cosets);
  if (const auto* o = std::get_if<CosetOverflow>(&r))
    throw Exit{kBudget, "coset enumeration exceeded " + std::to_string(o->max_cosets) + " cosets"};
  return model_from_coset_table(std::get<CosetTable>(r), std::move(name));
}

/// .gmod, .quot, or .wpres (the last only with --enumerate).
FiniteGroupModel load_model(const std::string& path, const Options& o) {
  const fs::path p(path);
  const std::string ext = p.extension().string();
  const std::string stem = p.stem().string();
  try {
    if (ext == ".quot") return load_quotient(p).model;
    if (ext == ".wpres") {
      if (!o.enumerate) throw Exit{kUsage, path + ": a presentation needs --enumerate to give a model"};
      return enumerate_or_exit(load_presentation(path), o.max_cosets, stem);
    }
    return model_from_json(json::parse(read_text(path)), stem);
  } catch (const ParseError& e) {
    throw Exit{kUsage, path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " +
                           e.message()};
  } catch (const json::exception& e) {
    throw Exit{kUsage, path + ": " + e.what()};
  } catch (const std::length_error& e) {
    throw Exit{kBudget, path + ": " + e.what()};
  } catch (const std::invalid_argument& e) {
    throw Exit{kUsage, path + ": " + e.what()};
  }
}

std::string abelian_group_name(std::size_t rank, const std::vector<BigInt>& torsion) {
  std::vector<std::string> parts;
  if (rank == 1) parts.push_back("Z");
  if (rank > 1) parts.push_back("Z^" + std::to_string(rank));
  for (const auto& t : torsion) parts.push_back("Z/" + t.str());
  if (parts.empty()) return "0";
  std::string s = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) s += " + " + parts[i];
  return s;
}

json bigint_array(const std::vector<BigInt>& v) {
  auto a = json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

/// Element labels: the canonical shortest word, or #id without generators.
std::vector<std::string> element_labels(const FiniteGroupModel& m) {
  std::vector<std::string> out(m.order());
  if (!m.has_gen_images()) {
    for (ElementId g = 0; g < m.order(); ++g) out[g] = "#" + std::to_string(g);
    return out;
  }
  const auto s = canonical_section(m);
  for (ElementId g = 0; g < m.order(); ++g) out[g] = format_word(s.rep[g], m.gen_names());
  return out;
}

ElementId element_arg(const FiniteGroupModel& m, const std::string& text) {
  if (!text.empty() && text[0] == '#') {
    const auto id = std::stoul(text.substr(1));
    if (id >= m.order()) throw Exit{kUsage, "element " + text + " out of range"};
    return static_cast<ElementId>(id);
  }
  if (!m.has_gen_images()) throw Exit{kUsage, "model has no generators; name elements as #id"};
  return eval_word(m, word_in(text, m.gen_names()));
}

std::string chain_text(const BarChain2& c, const std::vector<std::string>& labels) {
  if (c.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [sym, k] : c.terms()) {
    const std::int64_t mag = k < 0 ? -k : k;
    if (first)
      s += k < 0 ? "-" : "";
    else
      s += k < 0 ? " - " : " + ";
    if (mag != 1) s += std::to_string(mag);
    s += "[" + labels[sym[0]] + "|" + labels[sym[1]] + "]";
    first = false;
  }
  return s;
}

json chain_json(const BarChain2& c) {
  auto a = json::array();
  for (const auto& [sym, k] : c.terms()) a.push_back({sym[0], sym[1], k});
  return a;
}

std::string class_text(const H2Class& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? ", " : "") + c[i].str();
  return s + ")";
}

// ---------------------------------------------------------------------------

int cmd_validate(const Options& o) {
  const auto p = load_presentation(o.input);
  const auto v = validate_wirtinger(p);
  if (const auto* r = std::get_if<WirtingerRejection>(&v)) {
    if (o.json) {
      emit_json(o, {{"wirtinger", false}, {"relator", r->relator_index}, {"reason", r->reason}});
    } else {
      emit(o, "not Wirtinger form: " + r->reason + "\n");
    }
    return kInvalid;
  }
  const auto& data = std::get<WirtingerData>(v);
  const bool irreducible = is_irreducible(log_graph(p, data));
  if (o.json) {
    auto triples = json::array();
    for (const auto& t : data.triples)
      triples.push_back({{"alpha", p.name(t.alpha)}, {"beta", p.name(t.beta)}, {"gamma", p.name(t.gamma)}});
    emit_json(o, {{"wirtinger", true}, {"triples", triples}, {"irreducible", irreducible}});
    return kOk;
  }
  std::string s = "Wirtinger form: " + std::to_string(data.triples.size()) + " relators\n";
  for (std::size_t i = 0; i < data.triples.size(); ++i) {
    const auto& t = data.triples[i];
    s += "  r" + std::to_string(i + 1) + ": " + p.name(t.beta) + "^-1 " + p.name(t.alpha) + " " +
         p.name(t.beta) + " = " + p.name(t.gamma) + "\n";
  }
  s += std::string("irreducible: ") + (irreducible ? "true" : "false") + "\n";
  emit(o, s);
  return kOk;
}

int cmd_abelianize(const Options& o) {
  const auto p = load_presentation(o.input);
  const auto a = abelianize(p);
  if (o.json) {
    auto coords = json::object();
    for (std::size_t g = 0; g < p.num_generators(); ++g) {
      const auto c = a.project(Word::generator(GeneratorId(static_cast<std::uint32_t>(g))));
      coords[p.name(GeneratorId(static_cast<std::uint32_t>(g)))] = {{"free", bigint_array(c.free)},
                                                                    {"torsion", bigint_array(c.torsion)}};
    }
    emit_json(o, {{"rank", a.rank},
                  {"torsion", bigint_array(a.torsion)},
                  {"free_abelian", is_free_abelian(a)},
                  {"generators", coords}});
    return kOk;
  }
  std::string s = "G_ab = " + abelian_group_name(a.rank, a.torsion) + "\n";
  s += std::string("free abelian: ") + (is_free_abelian(a) ? "true" : "false") + "\n";
  for (std::size_t g = 0; g < p.num_generators(); ++g) {
    const GeneratorId id(static_cast<std::uint32_t>(g));
    const auto c = a.project(Word::generator(id));
    std::string coords;
    for (const auto& x : c.free) coords += (coords.empty() ? "" : ", ") + x.str();
    for (const auto& x : c.torsion) coords += (coords.empty() ? "" : ", ") + x.str();
    s += "  " + p.name(id) + " -> (" + coords + ")\n";
  }
  emit(o, s);
  return kOk;
}

int cmd_functionals(const Options& o) {
  const auto p = load_presentation(o.input);
  std::vector<Word> B;
  for (const auto& b : o.B) B.push_back(word_in(b, p.generator_names()));
  const auto a = abelianize(p);
  if (!is_free_abelian(a)) {
    std::cerr << "G_ab = " << abelian_group_name(a.rank, a.torsion) << " is not free abelian\n";
    return kInvalid;
  }
  if (!classes_linearly_independent(a, B)) {
    std::cerr << "classes of B are linearly dependent in G_ab\n";
    return kInvalid;
  }
  const auto fs = dual_functionals(a, B);
  if (!fs) {
    std::cerr << "B-classes do not span a direct summand of G_ab\n";
    return kInvalid;
  }
  if (o.json) {
    auto arr = json::array();
    for (std::size_t k = 0; k < B.size(); ++k) arr.push_back({{"b", o.B[k]}, {"coeffs", (*fs)[k].coeffs}});
    emit_json(o, arr);
    return kOk;
  }
  std::string s;
  for (std::size_t k = 0; k < B.size(); ++k) {
    s += "eps_" + o.B[k] + ":";
    for (std::size_t g = 0; g < p.num_generators(); ++g)
      s += " " + p.name(GeneratorId(static_cast<std::uint32_t>(g))) + "->" + std::to_string((*fs)[k].coeffs[g]);
    s += "\n";
  }
  emit(o, s);
  return kOk;
}

int cmd_enumerate(const Options& o) {
  const auto p = load_presentation(o.input);
  std::vector<Word> H;
  for (const auto& h : o.subgroup) H.push_back(word_in(h, p.generator_names()));
  const auto r = todd_coxeter(p, H, o.max_cosets);
  if (const auto* ov = std::get_if<CosetOverflow>(&r)) {
    if (o.json)
      emit_json(o, {{"complete", false}, {"max_cosets", ov->max_cosets}, {"cosets_defined", ov->cosets_defined}});
    else
      emit(o, "overflow: more than " + std::to_string(ov->max_cosets) + " cosets\n");
    return kBudget;
  }
  const auto& t = std::get<CosetTable>(r);
  if (o.json) {
    auto rows = json::array();
    for (std::size_t c = 0; c < t.num_cosets; ++c) {
      auto row = json::array();
      for (std::size_t x = 0; x < t.num_columns(); ++x) row.push_back(t.at(c, x));
      rows.push_back(std::move(row));
    }
    emit_json(o, {{"complete", true}, {"index", t.num_cosets}, {"generators", t.gen_names}, {"table", rows}});
  } else {
    emit(o, "index: " + std::to_string(t.num_cosets) + "\n");
  }
  return kOk;
}

int cmd_model(const Options& o) {
  Options e = o;
  e.enumerate = true;
  const auto m = load_model(o.input, e);
  emit_json(o, model_to_json(m));
  return kOk;
}

int cmd_homology(const Options& o) {
  const auto m = load_model(o.input, o);
  H2Data h;
  try {
    h = h2_finite(m, o.h2_ceiling);
  } catch (const std::length_error& e) {
    std::cerr << e.what() << "\n";
    return kBudget;
  }
  const std::string name = abelian_group_name(0, h.invariant_factors());
  if (o.json) {
    emit_json(o, {{"order", m.order()},
                  {"h2", bigint_array(h.invariant_factors())},
                  {"chain_ranks", {h.chain_rank(1), h.chain_rank(2), h.chain_rank(3)}},
                  {"boundary_ranks", {{"d2", h.boundary_rank2()}, {"d3", h.boundary_rank3()}}},
                  {"cycle_rank", h.cycle_basis().size()}});
  } else {
    emit(o, "H2 = " + name + "\n");
  }
  return kOk;
}

int cmd_zeta(const Options& o) {
  if (o.words.size() != 2) throw Exit{kUsage, "zeta needs two elements: a g"};
  const auto m = load_model(o.input, o);
  const ElementId a = element_arg(m, o.words[0]);
  const ElementId g = element_arg(m, o.words[1]);
  const auto labels = element_labels(m);
  if (m.mul(a, g) != m.mul(g, a)) {
    const ElementId c = m.commutator(a, g);
    if (o.json)
      emit_json(o, {{"cycle", false}, {"commutator", labels[c]}});
    else
      emit(o, "not a cycle: [a, g] = " + labels[c] + " != 1\n");
    return kInvalid;
  }
  H2Data h;
  try {
    h = h2_finite(m, o.h2_ceiling);
  } catch (const std::length_error& e) {
    std::cerr << e.what() << "\n";
    return kBudget;
  }
  const auto z = zeta_chain(m, a, g);
  const auto cls = std::get<H2Class>(h.class_of_cycle(z));
  if (o.json) {
    emit_json(o, {{"chain", chain_json(z)},
                  {"cycle", true},
                  {"h2", bigint_array(h.invariant_factors())},
                  {"class", bigint_array(cls)}});
  } else {
    emit(o, "zeta = " + chain_text(z, labels) + "\ncycle: true\nH2 = " +
                abelian_group_name(0, h.invariant_factors()) + "\nclass: " + class_text(cls) + "\n");
  }
  return kOk;
}

int cmd_psi(const Options& o) {
  const auto m = load_model(o.input, o);
  if (!m.has_gen_images()) throw Exit{kUsage, "psi needs a model with generators"};
  CommutatorList cl;
  for (const auto& pair : o.words) {
    const auto comma = pair.find(',');
    if (comma == std::string::npos) throw Exit{kUsage, "pair '" + pair + "' is not of the form a,b"};
    cl.pairs.emplace_back(word_in(pair.substr(0, comma), m.gen_names()),
                          word_in(pair.substr(comma + 1), m.gen_names()));
  }
  const auto r = psi_chain(m, cl);
  const auto labels = element_labels(m);
  const bool cycle = r.product == m.identity();
  json j{{"chain", chain_json(r.chain)}, {"product", labels[r.product]}, {"cycle", cycle}};
  std::string s = "psi = " + chain_text(r.chain, labels) + "\nproduct: " + labels[r.product] +
                  "\ncycle: " + (cycle ? "true" : "false") + "\n";
  if (cycle) {
    try {
      const auto h = h2_finite(m, o.h2_ceiling);
      const auto cls = std::get<H2Class>(h.class_of_cycle(r.chain));
      j["h2"] = bigint_array(h.invariant_factors());
      j["class"] = bigint_array(cls);
      s += "H2 = " + abelian_group_name(0, h.invariant_factors()) + "\nclass: " + class_text(cls) + "\n";
    } catch (const std::length_error& e) {
      std::cerr << e.what() << "\n";
      return kBudget;
    }
  }
  if (o.json)
    emit_json(o, j);
  else
    emit(o, s);
  return cycle ? kOk : kInvalid;
}

int cmd_prove_eq(const Options& o) {
  if (o.words.size() != 2) throw Exit{kUsage, "prove-eq needs two words: u v"};
  const auto p = load_presentation(o.input);
  const Word u = word_in(o.words[0], p.generator_names());
  const Word v = word_in(o.words[1], p.generator_names());
  std::vector<FiniteGroupModel> qs;
  for (const auto& q : o.quotients) {
    auto spec = [&] {
      try {
        return load_quotient(q);
      } catch (const ParseError& e) {
        throw Exit{kUsage, q + ":" + std::to_string(e.line()) + ": " + e.message()};
      } catch (const std::exception& e) {
        throw Exit{kUsage, q + ": " + e.what()};
      }
    }();
    if (spec.presentation.generator_names() != p.generator_names())
      throw Exit{kUsage, q + ": quotient generators do not match the presentation"};
    if (!satisfies_relators(spec.model, p)) throw Exit{kUsage, q + ": images do not satisfy the relators"};
    qs.push_back(std::move(spec.model));
  }
  const auto verdict = prove_equal(p, u, v, o.depth, qs);
  json j{{"depth_budget", o.depth}};
  std::string s;
  int code = kOk;
  if (const auto* pr = std::get_if<Proven>(&verdict)) {
    j["verdict"] = "proven";
    j["depth"] = pr->depth;
    s = "proven (depth " + std::to_string(pr->depth) + ")\n";
  } else if (const auto* d = std::get_if<Disproven>(&verdict)) {
    j["verdict"] = "disproven";
    j["witness"] = d->witness;
    s = "disproven (separated by " + d->witness + ")\n";
    code = kInvalid;
  } else {
    j["verdict"] = "unknown";
    s = "unknown (depth budget " + std::to_string(o.depth) + ")\n";
    code = kBudget;
  }
  if (o.json)
    emit_json(o, j);
  else
    emit(o, s);
  return code;
}

std::string report_text(const KuzminReport& r) {
  std::string s = "generators: ";
  for (std::size_t i = 0; i < r.generators.size(); ++i) s += (i ? " " : "") + r.generators[i];
  s += "\nB: {";
  for (std::size_t i = 0; i < r.B.size(); ++i) s += (i ? ", " : "") + r.B[i];
  s += "}\n";
  if (r.model_order) s += "model: " + r.model_source + ", order " + std::to_string(*r.model_order) + "\n";
  for (const auto* c : {&r.normal_closure, &r.linear_independence, &r.zeta_surjective})
    s += c->condition + ": " + to_string(c->status) + " - " + c->summary + "\n";
  for (const auto& n : r.notes) s += "note: " + n + "\n";
  return s;
}

int cmd_check(const Options& o) {
  const auto p = load_presentation(o.input);
  std::vector<Word> B;
  for (const auto& b : o.B) B.push_back(word_in(b, p.generator_names()));
  std::optional<FiniteGroupModel> model;
  if (!o.model.empty()) {
    Options e = o;
    e.enumerate = true;
    model = load_model(o.model, e);
    if (!satisfies_relators(*model, p))
      throw Exit{kUsage, o.model + ": model does not satisfy the relators of " + o.input};
  }
  Budgets budgets;
  budgets.max_cosets = o.max_cosets;
  budgets.prover_depth = o.depth;
  budgets.h2_ceiling = o.h2_ceiling;
  const auto rep = check_conditions(p, B, budgets, model, o.notes);
  if (o.json)
    emit_json(o, report_to_json(rep));
  else
    emit(o, report_text(rep));
  return rep.any_refuted() ? kInvalid : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wirtinger presentations, abelianization and H2 of finite models"};
  app.require_subcommand(1);
  Options o;

  auto budgets = [&](CLI::App* c) {
    c->add_option("--max-cosets", o.max_cosets, "coset enumeration budget")->check(CLI::PositiveNumber);
    c->add_option("--h2-ceiling", o.h2_ceiling, "largest model order for H2")->check(CLI::PositiveNumber);
  };
  auto common = [&](CLI::App* c, const std::string& what) {
    c->add_option("input", o.input, what)->required();
    c->add_flag("--json", o.json, "JSON output");
    c->add_option("-o,--output", o.output, "write output to a file");
  };
  auto model_input = [&](CLI::App* c) {
    common(c, ".gmod, .quot, or .wpres with --enumerate");
    c->add_flag("--enumerate", o.enumerate, "build the model from a presentation by coset enumeration");
    budgets(c);
  };

  auto* validate = app.add_subcommand("validate", "check Wirtinger form and irreducibility");
  common(validate, "presentation (.wpres)");

  auto* abel = app.add_subcommand("abelianize", "abelianization and generator coordinates");
  common(abel, "presentation (.wpres)");

  auto* func = app.add_subcommand("functionals", "dual functionals eps_b for b in B");
  common(func, "presentation (.wpres)");
  func->add_option("-B", o.B, "elements of B as words")->required();

  auto* enumerate = app.add_subcommand("enumerate", "Todd-Coxeter coset enumeration");
  common(enumerate, "presentation (.wpres)");
  enumerate->add_option("--subgroup", o.subgroup, "subgroup generators as words");
  budgets(enumerate);

  auto* model = app.add_subcommand("model", "write a finite model (.gmod JSON)");
  common(model, "presentation (.wpres) or quotient (.quot)");
  budgets(model);

  auto* homology = app.add_subcommand("homology", "H2 of a finite model");
  model_input(homology);

  auto* zeta = app.add_subcommand("zeta", "zeta(a, g) = [a|g] - [g|a] and its H2 class");
  model_input(zeta);
  zeta->add_option("elements", o.words, "a g, as words or #id")->expected(2);

  auto* psi = app.add_subcommand("psi", "psi of a commutator list");
  model_input(psi);
  psi->add_option("pairs", o.words, "pairs a,b of words");

  auto* prove = app.add_subcommand("prove-eq", "bounded search for u = v");
  common(prove, "presentation (.wpres)");
  prove->add_option("words", o.words, "u v")->expected(2)->required();
  prove->add_option("--depth", o.depth, "relator insertion budget");
  prove->add_option("--quotient", o.quotients, "finite quotient (.quot) for separation");

  auto* check = app.add_subcommand("check", "condition report for B");
  common(check, "presentation (.wpres)");
  check->add_option("-B", o.B, "elements of B as words")->required();
  check->add_option("--model", o.model, "finite model of the group (.gmod, .quot, .wpres)");
  check->add_option("--note", o.notes, "note copied into the report");
  check->add_option("--depth", o.depth, "prover depth budget");
  budgets(check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*validate) return cmd_validate(o);
    if (*abel) return cmd_abelianize(o);
    if (*func) return cmd_functionals(o);
    if (*enumerate) return cmd_enumerate(o);
    if (*model) return cmd_model(o);
    if (*homology) return cmd_homology(o);
    if (*zeta) return cmd_zeta(o);
    if (*psi) return cmd_psi(o);
    if (*prove) return cmd_prove_eq(o);
    if (*check) return cmd_check(o);
  } catch (const Exit& e) {
    std::cerr << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
