#include "iwb/sexpr.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace iwb {

namespace {

class Reader {
public:
  explicit Reader(std::string_view t) : text_(t) {}

  void skip() {
    while (i_ < text_.size()) {
      char c = text_[i_];
      if (c == ';') {
        while (i_ < text_.size() && text_[i_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  bool done() {
    skip();
    return i_ >= text_.size();
  }

  Sexp read() {
    skip();
    if (i_ >= text_.size()) throw ParseError(pos_, "unexpected end of input");
    Pos start = pos_;
    char c = text_[i_];
    if (c == ')') throw ParseError(pos_, "unbalanced ')'");
    if (c == '(') {
      advance();
      Sexp e;
      e.is_atom = false;
      e.pos = start;
      for (;;) {
        skip();
        if (i_ >= text_.size()) throw ParseError(start, "unclosed '('");
        if (text_[i_] == ')') {
          advance();
          return e;
        }
        e.items.push_back(read());
      }
    }
    std::string tok;
    if (c == '"') {
      advance();
      while (i_ < text_.size() && text_[i_] != '"') {
        tok += text_[i_];
        advance();
      }
      if (i_ >= text_.size()) throw ParseError(start, "unterminated string");
      advance();
    } else {
      while (i_ < text_.size()) {
        char d = text_[i_];
        if (d == '(' || d == ')' || d == ';' || std::isspace(static_cast<unsigned char>(d))) break;
        tok += d;
        advance();
      }
    }
    Sexp e = Sexp::make_atom(std::move(tok));
    e.pos = start;
    return e;
  }

private:
  void advance() {
    if (text_[i_] == '\n') {
      ++pos_.line;
      pos_.col = 1;
    } else {
      ++pos_.col;
    }
    ++i_;
  }

  std::string_view text_;
  std::size_t i_ = 0;
  Pos pos_;
};

bool needs_quotes(const std::string& s) {
  if (s.empty()) return true;
  for (char c : s)
    if (c == '(' || c == ')' || c == ';' || c == '"' || std::isspace(static_cast<unsigned char>(c))) return true;
  return false;
}

void write_to(const Sexp& e, std::string& out) {
  if (e.is_atom) {
    if (needs_quotes(e.atom)) {
      out += '"';
      out += e.atom;
      out += '"';
    } else {
      out += e.atom;
    }
    return;
  }
  out += '(';
  for (std::size_t i = 0; i < e.items.size(); ++i) {
    if (i) out += ' ';
    write_to(e.items[i], out);
  }
  out += ')';
}

void pretty_to(const Sexp& e, std::size_t indent, std::size_t width, std::string& out) {
  std::string flat = write_sexp(e);
  if (e.is_atom || indent + flat.size() <= width || e.items.size() < 2) {
    out += flat;
    return;
  }
  out += '(';
  write_to(e.items[0], out);
  for (std::size_t i = 1; i < e.items.size(); ++i) {
    out += '\n';
    out.append(indent + 2, ' ');
    pretty_to(e.items[i], indent + 2, width, out);
  }
  out += ')';
}

}  // namespace

std::vector<Sexp> read_sexps(std::string_view text) {
  Reader r(text);
  std::vector<Sexp> out;
  while (!r.done()) out.push_back(r.read());
  return out;
}

Sexp read_sexp(std::string_view text) {
  Reader r(text);
  if (r.done()) throw ParseError({}, "empty input");
  Sexp e = r.read();
  if (!r.done()) throw ParseError({}, "trailing input after expression");
  return e;
}

std::string write_sexp(const Sexp& e) {
  std::string out;
  write_to(e, out);
  return out;
}

std::string write_sexp_pretty(const Sexp& e, std::size_t width) {
  std::string out;
  pretty_to(e, 0, width, out);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << contents;
}

}  // namespace iwb
