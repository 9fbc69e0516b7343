#pragma once

// Reduced and cyclically reduced words in the rank-2 free group F(a,b).
// Inverses are spelled with capital letters, so the alphabet is {a, b, A, B}
// with A = a^-1 and B = b^-1. Words are stored in normal form: constructors
// reduce eagerly, so a Word never contains an adjacent inverse pair.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace knotcert {

enum class Letter : unsigned char { a = 0, b = 1, A = 2, B = 3 };

// Letter order a < b < A < B; used for canonical rotations.
constexpr bool operator<(Letter x, Letter y) {
  return static_cast<unsigned>(x) < static_cast<unsigned>(y);
}

constexpr Letter inverse(Letter x) {
  return static_cast<Letter>(static_cast<unsigned>(x) ^ 2u);
}

constexpr char to_char(Letter x) { return "abAB"[static_cast<unsigned>(x)]; }

constexpr std::optional<Letter> letter_from_char(char c) {
  switch (c) {
    case 'a': return Letter::a;
    case 'b': return Letter::b;
    case 'A': return Letter::A;
    case 'B': return Letter::B;
    default: return std::nullopt;
  }
}

using Letters = std::vector<Letter>;

inline Letters letters_from_text(std::string_view text) {
  Letters out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    auto l = letter_from_char(text[i]);
    if (!l) {
      throw std::invalid_argument("invalid letter '" + std::string(1, text[i]) +
                                  "' at position " + std::to_string(i + 1));
    }
    out.push_back(*l);
  }
  return out;
}

inline std::string letters_to_string(std::span<const Letter> ls) {
  std::string s;
  s.reserve(ls.size());
  for (Letter x : ls) s.push_back(to_char(x));
  return s;
}

inline bool is_reduced(std::span<const Letter> ls) {
  for (std::size_t i = 0; i + 1 < ls.size(); ++i) {
    if (ls[i + 1] == inverse(ls[i])) return false;
  }
  return true;
}

// Free reduction: repeatedly cancel adjacent inverse pairs. One stack pass
// reaches the unique normal form.
inline Letters free_reduce(std::span<const Letter> raw) {
  Letters out;
  out.reserve(raw.size());
  for (Letter x : raw) {
    if (!out.empty() && out.back() == inverse(x)) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

class Word {
 public:
  Word() = default;

  // Reduces eagerly: "aA" constructs the empty word.
  explicit Word(std::string_view text)
      : letters_(free_reduce(letters_from_text(text))) {}

  static Word from_letters(std::span<const Letter> raw) {
    Word w;
    w.letters_ = free_reduce(raw);
    return w;
  }

  // Strict entry point: rejects text that is not already in normal form.
  static Word expect_reduced(std::string_view text) {
    Letters ls = letters_from_text(text);
    if (!is_reduced(ls)) {
      throw std::invalid_argument("word \"" + std::string(text) +
                                  "\" is not reduced");
    }
    Word w;
    w.letters_ = std::move(ls);
    return w;
  }

  const Letters& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::string str() const { return letters_to_string(letters_); }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  Letters letters_;
};

inline Word reduce(std::span<const Letter> raw) { return Word::from_letters(raw); }

inline Word invert(const Word& w) {
  Letters out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(inverse(*it));
  }
  return Word::from_letters(out);
}

inline Word concat(const Word& u, const Word& v) {
  Letters out = u.letters();
  out.insert(out.end(), v.letters().begin(), v.letters().end());
  return Word::from_letters(out);
}

inline Word power(const Word& w, std::size_t k) {
  Word out;
  for (std::size_t i = 0; i < k; ++i) out = concat(out, w);
  return out;
}

struct ExponentSums {
  long long a = 0;
  long long b = 0;
  friend bool operator==(const ExponentSums&, const ExponentSums&) = default;
};

inline ExponentSums exponent_sums(std::span<const Letter> ls) {
  ExponentSums s;
  for (Letter x : ls) {
    switch (x) {
      case Letter::a: ++s.a; break;
      case Letter::A: --s.a; break;
      case Letter::b: ++s.b; break;
      case Letter::B: --s.b; break;
    }
  }
  return s;
}

inline ExponentSums exponent_sums(const Word& w) {
  return exponent_sums(std::span<const Letter>(w.letters()));
}

inline bool is_cyclically_reduced(const Word& w) {
  return w.size() < 2 || w.letters().front() != inverse(w.letters().back());
}

inline Letters rotate_letters(std::span<const Letter> ls, std::size_t k) {
  Letters out;
  out.reserve(ls.size());
  if (ls.empty()) return out;
  k %= ls.size();
  out.insert(out.end(), ls.begin() + static_cast<std::ptrdiff_t>(k), ls.end());
  out.insert(out.end(), ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(k));
  return out;
}

// A cyclically reduced word considered up to rotation. The as-written
// rotation is kept (it matters when tracing paths and reporting
// factorizations); equality compares the lexicographically least rotation.
class CyclicWord {
 public:
  CyclicWord() = default;

  explicit CyclicWord(const Word& w) : letters_(w.letters()) {
    if (!is_cyclically_reduced(w)) {
      throw std::invalid_argument("word \"" + w.str() +
                                  "\" is not cyclically reduced");
    }
    canon_ = least_rotation(letters_);
  }

  explicit CyclicWord(std::string_view text) : CyclicWord(Word(text)) {}

  const Letters& letters() const { return letters_; }
  const Letters& canonical() const { return canon_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::string str() const { return letters_to_string(letters_); }
  std::string canonical_str() const { return letters_to_string(canon_); }

  Word word() const { return Word::from_letters(letters_); }

  CyclicWord rotated(std::size_t k) const {
    return CyclicWord(Word::from_letters(rotate_letters(letters_, k)));
  }

  // Rotation-invariant equality.
  friend bool operator==(const CyclicWord& x, const CyclicWord& y) {
    return x.canon_ == y.canon_;
  }

 private:
  static Letters least_rotation(const Letters& ls) {
    Letters best = ls;
    for (std::size_t k = 1; k < ls.size(); ++k) {
      Letters cand = rotate_letters(ls, k);
      if (cand < best) best = cand;
    }
    return best;
  }

  Letters letters_;
  Letters canon_;
};

inline bool cyclic_equal(const CyclicWord& u, const CyclicWord& v) {
  return u == v;
}

inline CyclicWord invert(const CyclicWord& w) {
  return CyclicWord(invert(w.word()));
}

struct CyclicReduction {
  CyclicWord core;
  Word conjugator;  // input = conjugator . core . conjugator^-1
};

inline CyclicReduction cyclically_reduce(const Word& w) {
  Letters ls = w.letters();
  Letters conj;
  while (ls.size() >= 2 && ls.front() == inverse(ls.back())) {
    conj.push_back(ls.front());
    ls.erase(ls.begin());
    ls.pop_back();
  }
  CyclicReduction r;
  r.core = CyclicWord(Word::from_letters(ls));
  r.conjugator = Word::from_letters(conj);
  return r;
}

struct PrimitiveRoot {
  Word root;
  std::size_t exponent = 1;  // input = root^exponent, exponent maximal
};

// exponent = L/d where d is the least divisor of L = |w| such that rotating
// w by d letters reproduces w.
inline PrimitiveRoot primitive_root(const CyclicWord& w) {
  const std::size_t L = w.size();
  if (L == 0) {
    throw std::invalid_argument("primitive_root: empty word");
  }
  const Letters& ls = w.letters();
  for (std::size_t d = 1; d <= L; ++d) {
    if (L % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = 0; i < L; ++i) {
      if (ls[i] != ls[(i + d) % L]) {
        periodic = false;
        break;
      }
    }
    if (periodic) {
      PrimitiveRoot r;
      r.root = Word::from_letters(std::span<const Letter>(ls.data(), d));
      r.exponent = L / d;
      return r;
    }
  }
  throw std::logic_error("primitive_root: unreachable");
}

inline bool is_proper_power(const CyclicWord& w) {
  return !w.empty() && primitive_root(w).exponent >= 2;
}

// True iff some rotation of w contains xx for a single letter x.
inline bool has_letter_square_cyclic(const CyclicWord& w) {
  const std::size_t L = w.size();
  if (L < 2) return false;
  for (std::size_t i = 0; i < L; ++i) {
    if (w[i] == w[(i + 1) % L]) return true;
  }
  return false;
}

}  // namespace knotcert
