#ifndef WIRTINGER_PRESENTATION_HPP
#define WIRTINGER_PRESENTATION_HPP

#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "wirtinger/words.hpp"

namespace wirtinger {

/// Syntax or semantic error in a presentation or word, with a 1-based location.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + msg),
        message_(msg),
        line_(line),
        column_(column) {}

  [[nodiscard]] std::size_t line() const { return line_; }
  [[nodiscard]] std::size_t column() const { return column_; }
  [[nodiscard]] const std::string& message() const { return message_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

/// A finite presentation <X | R>. Relators are stored freely reduced.
class Presentation {
 public:
  Presentation() = default;

  /// Throws std::invalid_argument on empty/duplicate names or relators
  /// referencing undeclared generators.
  Presentation(std::vector<std::string> generator_names, std::vector<Word> relators)
      : names_(std::move(generator_names)), relators_(std::move(relators)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i].empty()) throw std::invalid_argument("empty generator name");
      for (std::size_t j = 0; j < i; ++j)
        if (names_[i] == names_[j])
          throw std::invalid_argument("duplicate generator name '" + names_[i] + "'");
    }
    for (const auto& r : relators_)
      for (const auto& l : r.letters())
        if (l.gen.index >= names_.size())
          throw std::invalid_argument("relator references undeclared generator");
  }

  [[nodiscard]] std::size_t num_generators() const { return names_.size(); }
  [[nodiscard]] const std::vector<std::string>& generator_names() const { return names_; }
  [[nodiscard]] const std::vector<Word>& relators() const { return relators_; }
  [[nodiscard]] const std::string& name(GeneratorId g) const { return names_.at(g.index); }

  [[nodiscard]] std::optional<GeneratorId> find(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return GeneratorId(static_cast<std::uint32_t>(i));
    return std::nullopt;
  }

  /// Same generators, extra relators appended.
  [[nodiscard]] Presentation with_relators(const std::vector<Word>& extra) const {
    auto rels = relators_;
    rels.insert(rels.end(), extra.begin(), extra.end());
    return Presentation(names_, std::move(rels));
  }

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<Word> relators_;
};

struct WordSyntax {
  bool allow_prime_inverse = true;
};

namespace detail {

inline bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace detail

/// Parses `z^-1 x z y^-1`-style text. `line` and `col0` only feed error locations.
inline Word parse_word(std::string_view text, const std::vector<std::string>& names,
                       WordSyntax syntax = {}, std::size_t line = 1, std::size_t col0 = 1) {
  Word w;
  std::size_t i = 0;
  auto fail = [&](const std::string& msg, std::size_t at) -> ParseError {
    return ParseError(msg, line, col0 + at);
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '1' && (i + 1 == text.size() || !detail::ident_char(text[i + 1]))) {
      ++i;  // explicit identity
      continue;
    }
    if (!detail::ident_start(c)) throw fail(std::string("unexpected character '") + c + "'", i);
    const std::size_t start = i;
    while (i < text.size() && detail::ident_char(text[i])) ++i;
    const std::string name(text.substr(start, i - start));
    std::optional<std::uint32_t> id;
    for (std::size_t k = 0; k < names.size(); ++k)
      if (names[k] == name) id = static_cast<std::uint32_t>(k);
    if (!id) throw fail("undeclared generator '" + name + "'", start);
    std::int64_t exp = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      const std::size_t num_start = i;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      std::string_view num = text.substr(num_start, i - num_start);
      if (!num.empty() && num.front() == '+') num.remove_prefix(1);
      const auto res = std::from_chars(num.data(), num.data() + num.size(), exp);
      if (num.empty() || res.ec != std::errc() || res.ptr != num.data() + num.size())
        throw fail("malformed exponent", num_start);
    }
    if (i < text.size() && text[i] == '\'') {
      if (!syntax.allow_prime_inverse) throw fail("prime inverse notation disabled", i);
      exp = -exp;
      ++i;
    }
    if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
      throw fail(std::string("unexpected character '") + text[i] + "'", i);
    w.push_back({GeneratorId(*id), exp});
  }
  return w;
}

inline Word parse_word(std::string_view text, const Presentation& p, WordSyntax syntax = {}) {
  return parse_word(text, p.generator_names(), syntax);
}

inline std::string format_word(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += names.at(l.gen.index);
    if (l.exp != 1) out += "^" + std::to_string(l.exp);
  }
  return out;
}

inline std::string format_word(const Word& w, const Presentation& p) {
  return format_word(w, p.generator_names());
}

/// Parses the line-based .wpres format: one `gens:` line first, then `rel:`
/// lines; `#` starts a comment.
inline Presentation parse_presentation(std::string_view text, WordSyntax syntax = {}) {
  std::vector<std::string> names;
  std::vector<Word> rels;
  bool have_gens = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::size_t lead = 0;
    while (lead < line.size() && std::isspace(static_cast<unsigned char>(line[lead]))) ++lead;
    if (lead == line.size()) continue;
    const std::string_view body = line.substr(lead);
    if (body.starts_with("gens:")) {
      if (have_gens) throw ParseError("duplicate 'gens:' line", line_no, lead + 1);
      have_gens = true;
      std::size_t i = 5;
      while (i < body.size()) {
        if (std::isspace(static_cast<unsigned char>(body[i]))) {
          ++i;
          continue;
        }
        const std::size_t start = i;
        if (!detail::ident_start(body[i]))
          throw ParseError("invalid generator name", line_no, lead + i + 1);
        while (i < body.size() && detail::ident_char(body[i])) ++i;
        if (i < body.size() && !std::isspace(static_cast<unsigned char>(body[i])))
          throw ParseError("invalid generator name", line_no, lead + i + 1);
        std::string name(body.substr(start, i - start));
        for (const auto& n : names)
          if (n == name)
            throw ParseError("duplicate generator name '" + name + "'", line_no, lead + start + 1);
        names.push_back(std::move(name));
      }
    } else if (body.starts_with("rel:")) {
      if (!have_gens) throw ParseError("'rel:' before 'gens:'", line_no, lead + 1);
      rels.push_back(parse_word(body.substr(4), names, syntax, line_no, lead + 5));
    } else {
      if (!have_gens) throw ParseError("expected 'gens:' line", line_no, lead + 1);
      throw ParseError("expected 'rel:' line", line_no, lead + 1);
    }
  }
  if (!have_gens) throw ParseError("missing 'gens:' line", line_no, 1);
  return Presentation(std::move(names), std::move(rels));
}

inline std::string serialize_presentation(const Presentation& p) {
  std::string out = "gens:";
  for (const auto& n : p.generator_names()) out += " " + n;
  out += '\n';
  for (const auto& r : p.relators()) out += "rel: " + format_word(r, p) + "\n";
  return out;
}

inline nlohmann::ordered_json presentation_to_json(const Presentation& p) {
  nlohmann::ordered_json j;
  j["generators"] = p.generator_names();
  auto rels = nlohmann::ordered_json::array();
  for (const auto& r : p.relators()) {
    auto word = nlohmann::ordered_json::array();
    for (const auto& l : r.letters()) word.push_back({p.name(l.gen), l.exp});
    rels.push_back(std::move(word));
  }
  j["relators"] = std::move(rels);
  return j;
}

inline Presentation presentation_from_json(const nlohmann::ordered_json& j) {
  auto names = j.at("generators").get<std::vector<std::string>>();
  std::vector<Word> rels;
  for (const auto& word : j.at("relators")) {
    Word w;
    for (const auto& letter : word) {
      const auto name = letter.at(0).get<std::string>();
      const auto exp = letter.at(1).get<std::int64_t>();
      std::optional<std::uint32_t> id;
      for (std::size_t k = 0; k < names.size(); ++k)
        if (names[k] == name) id = static_cast<std::uint32_t>(k);
      if (!id) throw std::invalid_argument("undeclared generator '" + name + "'");
      w.push_back({GeneratorId(*id), exp});
    }
    rels.push_back(std::move(w));
  }
  return Presentation(std::move(names), std::move(rels));
}

}  // namespace wirtinger

#endif  // WIRTINGER_PRESENTATION_HPP
