// Minimal s-expression reader/writer. `;` starts a line comment.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace iwb {

struct Pos {
  std::size_t line = 1;
  std::size_t col = 1;
  std::string str() const { return std::to_string(line) + ":" + std::to_string(col); }
};

class ParseError : public std::runtime_error {
public:
  ParseError(Pos p, const std::string& msg) : std::runtime_error(p.str() + ": " + msg), pos(p) {}
  Pos pos;
};

struct Sexp {
  bool is_atom = true;
  std::string atom;
  std::vector<Sexp> items;
  Pos pos;

  static Sexp make_atom(std::string s) {
    Sexp e;
    e.atom = std::move(s);
    return e;
  }
  static Sexp make_list(std::vector<Sexp> xs) {
    Sexp e;
    e.is_atom = false;
    e.items = std::move(xs);
    return e;
  }

  bool is_list() const { return !is_atom; }
  bool is(std::string_view a) const { return is_atom && atom == a; }
  std::size_t size() const { return items.size(); }
  const Sexp& operator[](std::size_t i) const { return items.at(i); }
  /// Head symbol of a list, or "" for atoms and empty lists.
  std::string_view head() const { return !is_atom && !items.empty() && items[0].is_atom ? std::string_view(items[0].atom) : ""; }
};

std::vector<Sexp> read_sexps(std::string_view text);
Sexp read_sexp(std::string_view text);  // exactly one expression

std::string write_sexp(const Sexp& e);
/// Line-broken rendering for files; lists wider than `width` are split.
std::string write_sexp_pretty(const Sexp& e, std::size_t width = 88);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace iwb
