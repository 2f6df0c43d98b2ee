// Goedel coding: pseudo-lexicographic string codes, syntax codes, efficient
// numerals, and the growth functions |x|, x#y, omega1.

#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "iwb/syntax.hpp"

namespace iwb {

using Code = mpz_class;

class ResourceLimit : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Ordered finite alphabet. A word is a sequence of symbol positions.
class Alphabet {
public:
  explicit Alphabet(std::vector<std::string> symbols);
  /// One symbol per character.
  static Alphabet of_chars(std::string_view chars);
  /// One symbol per non-empty line.
  static Alphabet from_lines(std::string_view text);

  std::size_t size() const { return symbols_.size(); }
  const std::string& symbol(std::size_t i) const { return symbols_.at(i); }
  std::size_t index(std::string_view sym) const;
  bool single_chars() const { return single_chars_; }

  /// Characters when every symbol is one character, whitespace-separated
  /// tokens otherwise.
  std::vector<std::size_t> split(std::string_view s) const;
  std::string join(const std::vector<std::size_t>& w) const;

private:
  std::vector<std::string> symbols_;
  std::map<std::string, std::size_t, std::less<>> index_;
  bool single_chars_ = true;
};

/// Position of `w` in the length-first, then alphabetic enumeration.
Code encode(const std::vector<std::size_t>& w, std::size_t a);
std::vector<std::size_t> decode(const Code& c, std::size_t a);
Code encode(std::string_view s, const Alphabet& A);
std::string decode(const Code& c, const Alphabet& A);

/// The fixed alphabet syntax is serialized over.
const Alphabet& syntax_alphabet();

/// Polish-notation serialization; relation symbols are written by their
/// index in `sig`, variables and indices in dyadic digits.
std::string serialize(const Term& t);
std::string serialize(const Formula& f, const Signature& sig);
/// Dyadic (bijective base 2) digits over {1,2}; 0 is the empty string.
std::string dyadic(std::uint64_t n);

Code code_syntax(const Term& t);
Code code_syntax(const Formula& f, const Signature& sig);
Code code_of_serialized(std::string_view s);

/// Bit budget for smash and omega1 results; default 2^20 bits.
std::size_t bit_budget();
void set_bit_budget(std::size_t bits);

std::size_t len(const Code& x);
Code smash(const Code& x, const Code& y);
Code omega1(const Code& x);

/// numeral(0)=0, numeral(2n)=(SS0)*numeral(n), numeral(2n+1)=S((SS0)*numeral(n)).
Term numeral(const Code& n);
Term two();
/// S^n(0).
Term unary(std::size_t n);

/// Value of `t` under `env` (variable index -> value); ResourceLimit when a
/// value would exceed the bit budget.
Code eval_term(const Term& t, const std::map<Var, Code>& env = {});

}  // namespace iwb
