#ifndef WIRTINGER_WORDS_HPP
#define WIRTINGER_WORDS_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace wirtinger {

/// Index of a generator within a presentation's generator list.
struct GeneratorId {
  std::uint32_t index = 0;

  constexpr GeneratorId() = default;
  constexpr explicit GeneratorId(std::uint32_t i) : index(i) {}

  friend constexpr auto operator<=>(GeneratorId, GeneratorId) = default;
};

/// A run of one generator: x^exp with exp != 0 in canonical words.
struct Letter {
  GeneratorId gen;
  std::int64_t exp = 1;

  friend constexpr bool operator==(const Letter&, const Letter&) = default;
  friend constexpr auto operator<=>(const Letter&, const Letter&) = default;
};

/// Freely reduced word in a free group, stored as run-length letters.
///
/// Adjacent letters always carry distinct generators and no letter has a
/// zero exponent. The empty word is the identity.
class Word {
 public:
  Word() = default;

  /// Reduces `raw` into canonical form.
  explicit Word(std::span<const Letter> raw) { append(raw); }
  Word(std::initializer_list<Letter> raw) {
    append(std::span<const Letter>(raw.begin(), raw.size()));
  }

  static Word generator(GeneratorId g, std::int64_t exp = 1) {
    Word w;
    if (exp != 0) w.letters_.push_back({g, exp});
    return w;
  }

  [[nodiscard]] std::span<const Letter> letters() const { return letters_; }
  [[nodiscard]] bool empty() const { return letters_.empty(); }
  [[nodiscard]] std::size_t size() const { return letters_.size(); }

  /// Number of unit letters, i.e. the sum of |exp|.
  [[nodiscard]] std::size_t length() const {
    std::size_t n = 0;
    for (const auto& l : letters_) n += static_cast<std::size_t>(std::llabs(l.exp));
    return n;
  }

  /// Appends one letter and performs free cancellation at the seam.
  void push_back(Letter l) {
    if (l.exp == 0) return;
    if (!letters_.empty() && letters_.back().gen == l.gen) {
      letters_.back().exp += l.exp;
      if (letters_.back().exp == 0) letters_.pop_back();
      return;
    }
    letters_.push_back(l);
  }

  void append(std::span<const Letter> raw) {
    for (const auto& l : raw) push_back(l);
  }

  /// Expands to single-letter form, one entry per unit letter.
  [[nodiscard]] std::vector<Letter> unit_letters() const {
    std::vector<Letter> out;
    out.reserve(length());
    for (const auto& l : letters_) {
      const std::int64_t step = l.exp > 0 ? 1 : -1;
      for (std::int64_t k = 0; k != l.exp; k += step) out.push_back({l.gen, step});
    }
    return out;
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<Letter> letters_;
};

inline Word reduce(std::span<const Letter> raw) { return Word(raw); }

inline Word mul(const Word& u, const Word& v) {
  Word out = u;
  out.append(v.letters());
  return out;
}

inline Word inv(const Word& u) {
  Word out;
  const auto ls = u.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) out.push_back({it->gen, -it->exp});
  return out;
}

inline Word power(const Word& u, std::int64_t n) {
  const Word base = n >= 0 ? u : inv(u);
  Word out;
  for (std::int64_t k = 0; k < std::llabs(n); ++k) out.append(base.letters());
  return out;
}

inline Word conjugate(const Word& w, const Word& by) { return mul(mul(by, w), inv(by)); }

/// [a,b] = a b a^-1 b^-1.
inline Word commutator(const Word& a, const Word& b) {
  return mul(mul(a, b), mul(inv(a), inv(b)));
}

/// Total exponent of each generator; throws on an out-of-range generator.
inline std::vector<std::int64_t> exponent_vector(const Word& u, std::size_t num_gens) {
  std::vector<std::int64_t> v(num_gens, 0);
  for (const auto& l : u.letters()) {
    if (l.gen.index >= num_gens)
      throw std::out_of_range("exponent_vector: generator index out of range");
    v[l.gen.index] += l.exp;
  }
  return v;
}

struct CyclicReduction {
  Word core;
  Word conjugator;
};

/// Splits u = conjugator * core * conjugator^-1 with core cyclically reduced.
///
/// Matched inverse letters are peeled from both ends at once until the first
/// and last unit letters are no longer mutually inverse.
inline CyclicReduction cyclic_reduce(const Word& u) {
  std::vector<Letter> ls(u.letters().begin(), u.letters().end());
  std::size_t lo = 0;
  std::size_t hi = ls.size();
  Word conj;
  while (hi - lo >= 2 && ls[lo].gen == ls[hi - 1].gen) {
    Letter& first = ls[lo];
    Letter& last = ls[hi - 1];
    if ((first.exp > 0) == (last.exp > 0)) break;
    // peel the common part min(|first|, |last|)
    const std::int64_t k = std::min(std::llabs(first.exp), std::llabs(last.exp));
    const std::int64_t sign = first.exp > 0 ? 1 : -1;
    conj.push_back({first.gen, sign * k});
    first.exp -= sign * k;
    last.exp += sign * k;
    if (first.exp == 0) ++lo;
    if (last.exp == 0) --hi;
    if (lo >= hi) break;
  }
  CyclicReduction out;
  if (lo < hi) out.core = Word(std::span<const Letter>(ls.data() + lo, hi - lo));
  out.conjugator = conj;
  return out;
}

/// All cyclic rotations of a cyclically reduced word, taken at unit-letter
/// positions, each freely reduced.
inline std::vector<Word> cyclic_rotations(const Word& w) {
  const auto units = w.unit_letters();
  std::vector<Word> out;
  out.reserve(units.size());
  for (std::size_t s = 0; s < units.size(); ++s) {
    std::vector<Letter> rot(units.begin() + static_cast<std::ptrdiff_t>(s), units.end());
    rot.insert(rot.end(), units.begin(), units.begin() + static_cast<std::ptrdiff_t>(s));
    out.emplace_back(rot);
  }
  if (out.empty()) out.emplace_back();
  return out;
}

}  // namespace wirtinger

template <>
struct std::hash<wirtinger::Word> {
  std::size_t operator()(const wirtinger::Word& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (const auto& l : w.letters()) {
      h ^= std::hash<std::uint64_t>{}((std::uint64_t{l.gen.index} << 40) ^
                                      static_cast<std::uint64_t>(l.exp));
      h *= 0x100000001b3ULL;
    }
    return h;
  }
};

#endif  // WIRTINGER_WORDS_HPP
