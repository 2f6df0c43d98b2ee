#include "iwb/coding.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>

namespace iwb {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.size() < 2) throw std::invalid_argument("alphabet needs at least two symbols");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i].empty()) throw std::invalid_argument("empty alphabet symbol");
    if (!index_.emplace(symbols_[i], i).second) throw std::invalid_argument("duplicate alphabet symbol " + symbols_[i]);
    single_chars_ = single_chars_ && symbols_[i].size() == 1;
  }
}

Alphabet Alphabet::of_chars(std::string_view chars) {
  std::vector<std::string> syms;
  for (char c : chars) syms.emplace_back(1, c);
  return Alphabet(std::move(syms));
}

Alphabet Alphabet::from_lines(std::string_view text) {
  std::vector<std::string> syms;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
    std::size_t lead = 0;
    while (lead < line.size() && std::isspace(static_cast<unsigned char>(line[lead]))) ++lead;
    if (lead < line.size()) syms.push_back(line.substr(lead));
    start = end + 1;
  }
  return Alphabet(std::move(syms));
}

std::size_t Alphabet::index(std::string_view sym) const {
  auto it = index_.find(sym);
  if (it == index_.end()) throw std::invalid_argument("symbol '" + std::string(sym) + "' not in alphabet");
  return it->second;
}

std::vector<std::size_t> Alphabet::split(std::string_view s) const {
  std::vector<std::size_t> w;
  if (single_chars_) {
    for (char c : s) w.push_back(index(std::string_view(&c, 1)));
    return w;
  }
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) w.push_back(index(s.substr(i, j - i)));
    i = j;
  }
  return w;
}

std::string Alphabet::join(const std::vector<std::size_t>& w) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i && !single_chars_) out += ' ';
    out += symbol(w[i]);
  }
  return out;
}

// Bijective base-a numeration with digits 1..a is exactly the pseudo-
// lexicographic position.
Code encode(const std::vector<std::size_t>& w, std::size_t a) {
  Code c = 0;
  for (std::size_t d : w) {
    if (d >= a) throw std::invalid_argument("symbol index outside alphabet");
    c = c * static_cast<unsigned long>(a) + static_cast<unsigned long>(d + 1);
  }
  return c;
}

std::vector<std::size_t> decode(const Code& code, std::size_t a) {
  if (code < 0) throw std::invalid_argument("negative code");
  std::vector<std::size_t> w;
  Code c = code;
  Code q, r;
  while (c > 0) {
    c -= 1;
    mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), c.get_mpz_t(), a);
    w.push_back(r.get_ui());
    c = q;
  }
  std::reverse(w.begin(), w.end());
  return w;
}

Code encode(std::string_view s, const Alphabet& A) { return encode(A.split(s), A.size()); }
std::string decode(const Code& c, const Alphabet& A) { return A.join(decode(c, A.size())); }

// ---------------------------------------------------------------- syntax codes

namespace {

// Proof rule tags use the lowercase block after the formula symbols.
constexpr std::string_view kSyntaxChars = "12vR0S+*#LHF~&|>AEaestlbcdfghijkmnopqruwxyzBC";

char fn_char(Fn f) {
  switch (f) {
    case Fn::Zero: return '0';
    case Fn::Succ: return 'S';
    case Fn::Add: return '+';
    case Fn::Mul: return '*';
    case Fn::Smash: return '#';
    case Fn::Len: return 'L';
    case Fn::Half: return 'H';
  }
  return '?';
}

void ser_term(const Term& t, std::string& out) {
  if (t.is_var()) {
    out += 'v';
    out += dyadic(t.var_index());
    return;
  }
  out += fn_char(t.fn());
  for (const auto& a : t.args()) ser_term(a, out);
}

void ser_formula(const Formula& f, const Signature& sig, std::string& out) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Atom:
      out += 'R';
      out += dyadic(sig.index_of(f.rel()));
      for (const auto& t : f.terms()) ser_term(t, out);
      return;
    case K::Bot: out += 'F'; return;
    case K::Not:
      out += '~';
      ser_formula(f.lhs(), sig, out);
      return;
    case K::And:
    case K::Or:
    case K::Imp:
      out += f.is(K::And) ? '&' : f.is(K::Or) ? '|' : '>';
      ser_formula(f.lhs(), sig, out);
      ser_formula(f.rhs(), sig, out);
      return;
    default: break;
  }
  static const std::map<K, char> q = {{K::Forall, 'A'},    {K::Exists, 'E'},   {K::BoundedAll, 'a'},
                                      {K::BoundedEx, 'e'}, {K::SharpAll, 's'}, {K::SharpEx, 't'}};
  out += q.at(f.kind());
  out += 'v';
  out += dyadic(f.bound_var());
  if (f.is_bounded_quantifier()) ser_term(f.bound(), out);
  ser_formula(f.body(), sig, out);
}

std::atomic<std::size_t> g_bit_budget{std::size_t{1} << 20};

}  // namespace

const Alphabet& syntax_alphabet() {
  static const Alphabet A = Alphabet::of_chars(kSyntaxChars);
  return A;
}

std::string dyadic(std::uint64_t n) {
  std::string s;
  while (n > 0) {
    n -= 1;
    s += static_cast<char>('1' + (n & 1));
    n >>= 1;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

std::string serialize(const Term& t) {
  std::string out;
  ser_term(t, out);
  return out;
}

std::string serialize(const Formula& f, const Signature& sig) {
  std::string out;
  ser_formula(f, sig, out);
  return out;
}

Code code_of_serialized(std::string_view s) { return encode(s, syntax_alphabet()); }
Code code_syntax(const Term& t) { return code_of_serialized(serialize(t)); }
Code code_syntax(const Formula& f, const Signature& sig) { return code_of_serialized(serialize(f, sig)); }

// ------------------------------------------------------------ growth functions

std::size_t bit_budget() { return g_bit_budget.load(); }
void set_bit_budget(std::size_t bits) { g_bit_budget.store(bits); }

std::size_t len(const Code& x) {
  if (x < 0) throw std::invalid_argument("len of a negative number");
  return x == 0 ? 0 : mpz_sizeinbase(x.get_mpz_t(), 2);
}

namespace {

Code power_of_two(std::size_t e) {
  // 2^e has e+1 bits
  if (e + 1 > bit_budget())
    throw ResourceLimit("result needs " + std::to_string(e + 1) + " bits, budget is " + std::to_string(bit_budget()));
  Code r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

void check_budget(const Code& x) {
  if (len(x) > bit_budget())
    throw ResourceLimit("value needs " + std::to_string(len(x)) + " bits, budget is " + std::to_string(bit_budget()));
}

}  // namespace

Code smash(const Code& x, const Code& y) {
  std::size_t lx = len(x), ly = len(y);
  if (lx != 0 && ly > bit_budget() / lx + 1) throw ResourceLimit("smash exceeds the bit budget");
  return power_of_two(lx * ly);
}

Code omega1(const Code& x) { return smash(x, x); }

// ------------------------------------------------------------------- numerals

Term two() { return Term::succ(Term::succ(Term::zero())); }

Term unary(std::size_t n) {
  Term t = Term::zero();
  for (std::size_t i = 0; i < n; ++i) t = Term::succ(t);
  return t;
}

Term numeral(const Code& n) {
  if (n < 0) throw std::invalid_argument("numeral of a negative number");
  Term t = Term::zero();
  for (std::size_t i = len(n); i-- > 0;) {
    t = Term::mul(two(), t);
    if (mpz_tstbit(n.get_mpz_t(), i)) t = Term::succ(t);
  }
  return t;
}

Code eval_term(const Term& t, const std::map<Var, Code>& env) {
  if (t.is_var()) {
    auto it = env.find(t.var_index());
    if (it == env.end()) throw std::invalid_argument("unassigned variable " + std::to_string(t.var_index()));
    return it->second;
  }
  std::vector<Code> a;
  for (const auto& s : t.args()) a.push_back(eval_term(s, env));
  Code r;
  switch (t.fn()) {
    case Fn::Zero: return 0;
    case Fn::Succ: r = a[0] + 1; break;
    case Fn::Add: r = a[0] + a[1]; break;
    case Fn::Mul:
      if (a[0] != 0 && a[1] != 0 && len(a[0]) + len(a[1]) > bit_budget() + 1)
        throw ResourceLimit("product exceeds the bit budget");
      r = a[0] * a[1];
      break;
    case Fn::Smash: return smash(a[0], a[1]);
    case Fn::Len: return Code(static_cast<unsigned long>(len(a[0])));
    case Fn::Half: return a[0] / 2;
  }
  check_budget(r);
  return r;
}

}  // namespace iwb
