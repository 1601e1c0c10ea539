#include "zsum/io.hpp"

#include <cctype>
#include <stdexcept>

namespace zsum {

namespace {

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, size_t line, size_t col)
      : std::runtime_error(msg + " at line " + std::to_string(line) + ", column " +
                           std::to_string(col)) {}
};

}  // namespace

AtomId atom_from_symbol(const std::string& name) {
  auto& at = AtomTable::instance();
  long known = at.find(name);
  if (known >= 0) return AtomId(known);
  if (name == "sinf") return at.sinf();
  if (name == "h1") return at.ln2();
  if (name.size() >= 2 && name[0] == 'e') {
    int k = std::stoi(name.substr(1));
    return at.eta(k);
  }
  if (name.size() >= 2 && name[0] == 'h' && name != "h1") {
    SumWord mag;
    for (size_t i = 1; i < name.size(); i++) {
      char c = name[i];
      if (c >= '1' && c <= '9') mag.push(c - '0');
      else if (c >= 'A' && c <= 'Z') mag.push(c - 'A' + 10);
      else throw std::invalid_argument("bad h symbol: " + name);
    }
    if (mag.len == 1) return mag.c[0] == 1 ? at.ln2() : at.eta(mag.c[0]);
    return at.hword(mag);
  }
  if (name[0] == 'z' || name[0] == 'a') {
    // runs of z<digits>, zm<digits> or a<digits>
    SumWord idx;
    size_t i = 0;
    bool is_a = name[0] == 'a';
    while (i < name.size()) {
      if (name[i] != (is_a ? 'a' : 'z')) throw std::invalid_argument("bad symbol: " + name);
      i++;
      int sign = 1;
      if (!is_a && i < name.size() && name[i] == 'm') {
        sign = -1;
        i++;
      }
      size_t j = i;
      while (j < name.size() && std::isdigit((unsigned char)name[j])) j++;
      if (j == i) throw std::invalid_argument("bad symbol: " + name);
      idx.push(sign * std::stoi(name.substr(i, j - i)));
      i = j;
    }
    return is_a ? at.aword(idx) : at.zword(idx);
  }
  if (name.rfind("H(", 0) == 0 && name.back() == ')') {
    SumWord m = parse_z_word(name);
    return at.hmixed(m);
  }
  throw std::invalid_argument("unknown symbol: " + name);
}

SumWord parse_z_word(const std::string& text) {
  size_t i = 0;
  while (i < text.size() && std::isspace((unsigned char)text[i])) i++;
  if (i >= text.size() || (text[i] != 'Z' && text[i] != 'H' && text[i] != 'A'))
    throw std::invalid_argument("expected Z(...), H(...) or A(...): " + text);
  i++;
  while (i < text.size() && std::isspace((unsigned char)text[i])) i++;
  if (i >= text.size() || text[i] != '(') throw std::invalid_argument("expected (: " + text);
  i++;
  SumWord w;
  while (true) {
    while (i < text.size() && std::isspace((unsigned char)text[i])) i++;
    bool neg = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) neg = text[i++] == '-';
    size_t j = i;
    while (j < text.size() && std::isdigit((unsigned char)text[j])) j++;
    if (j == i) throw std::invalid_argument("bad index in word: " + text);
    int v = std::stoi(text.substr(i, j - i));
    w.push(neg ? -v : v);
    i = j;
    while (i < text.size() && std::isspace((unsigned char)text[i])) i++;
    if (i < text.size() && text[i] == ',') {
      i++;
      continue;
    }
    break;
  }
  if (i >= text.size() || text[i] != ')') throw std::invalid_argument("expected ): " + text);
  return w;
}

namespace {

template <class F>
std::string coeff_str(const F& c);
template <>
std::string coeff_str<Rat>(const Rat& c) {
  return c.str();
}
template <>
std::string coeff_str<Fp>(const Fp& c) {
  return c.str();
}

template <class F>
std::string emit_impl(const Expr<F>& e) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto& t : e.terms()) {
    std::string cs = coeff_str(t.c);
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    first = false;
    std::string mono;
    auto& at = AtomTable::instance();
    for (int i = 0; i < t.m.nf; i++) {
      if (!mono.empty()) mono += "*";
      mono += at.name(Monomial::factor_atom(t.m.f[i]));
      unsigned p = Monomial::factor_pow(t.m.f[i]);
      if (p > 1) mono += "^" + std::to_string(p);
    }
    if (t.m.has_pending())
      throw std::logic_error("emit_expression: unresolved word in closed expression");
    if (cs == "1" && !mono.empty()) {
      out += mono;
    } else {
      out += cs;
      if (!mono.empty()) out += "*" + mono;
    }
  }
  return out;
}

struct Lexer {
  const std::string& s;
  size_t i = 0, line = 1, col = 1;

  void skip_ws() {
    while (i < s.size()) {
      char c = s[i];
      if (c == '\\' && i + 1 < s.size() && s[i + 1] == '\n') {
        i += 2;
        line++;
        col = 1;
        continue;
      }
      if (c == '\n') {
        i++;
        line++;
        col = 1;
        continue;
      }
      if (std::isspace((unsigned char)c)) {
        i++;
        col++;
        continue;
      }
      break;
    }
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  char get() {
    skip_ws();
    col++;
    return s[i++];
  }
  // Unsigned integer literal, joining backslash-newline continuations.
  std::string number() {
    skip_ws();
    std::string n;
    while (i < s.size()) {
      char c = s[i];
      if (std::isdigit((unsigned char)c)) {
        n += c;
        i++;
        col++;
      } else if (c == '\\') {
        i++;
        if (i < s.size() && s[i] == '\n') {
          i++;
          line++;
          col = 1;
        }
      } else {
        break;
      }
    }
    if (n.empty()) throw ParseError("expected number", line, col);
    return n;
  }
  std::string symbol() {
    skip_ws();
    std::string n;
    if (i < s.size() && s[i] == 'H' && i + 1 < s.size() && s[i + 1] == '(') {
      while (i < s.size() && s[i] != ')') n += s[i++];
      if (i < s.size()) n += s[i++];
      return n;
    }
    while (i < s.size() && (std::isalnum((unsigned char)s[i]))) {
      n += s[i];
      i++;
      col++;
    }
    if (n.empty()) throw ParseError("expected symbol", line, col);
    return n;
  }
};

template <class F>
Expr<F> parse_impl(const std::string& text) {
  Lexer lx{text};
  ExprAccum<F> acc(16);
  bool any = false;
  int sign = 1;
  if (lx.peek() == '-') {
    lx.get();
    sign = -1;
  } else if (lx.peek() == '+') {
    lx.get();
  }
  while (!lx.eof()) {
    // one term
    Monomial m;
    F coeff = FieldOps<F>::from_long(sign);
    bool saw_factor = false, saw_coeff = false;
    while (true) {
      char c = lx.peek();
      if (std::isdigit((unsigned char)c)) {
        std::string num = lx.number();
        std::string den;
        if (lx.peek() == '/') {
          lx.get();
          den = lx.number();
        }
        Rat q = Rat::from_string(den.empty() ? num : num + "/" + den);
        coeff *= FieldOps<F>::from_rat(q);
        saw_coeff = true;
      } else if (std::isalpha((unsigned char)c)) {
        std::string name = lx.symbol();
        AtomId id = atom_from_symbol(name);
        unsigned pow = 1;
        if (lx.peek() == '^') {
          lx.get();
          pow = unsigned(std::stoul(lx.number()));
        }
        m.mul_atom(id, pow);
        saw_factor = true;
      } else {
        throw ParseError("expected coefficient or symbol", lx.line, lx.col);
      }
      if (lx.peek() == '*') {
        lx.get();
        continue;
      }
      break;
    }
    if (!saw_factor && !saw_coeff) throw ParseError("empty term", lx.line, lx.col);
    acc.add(m, coeff);
    any = true;
    char c = lx.eof() ? '\0' : lx.peek();
    if (c == '+' || c == '-') {
      lx.get();
      sign = c == '-' ? -1 : 1;
      continue;
    }
    if (c == ';' || c == '\0') break;
    throw ParseError(std::string("unexpected character '") + c + "'", lx.line, lx.col);
  }
  if (!any) throw std::invalid_argument("empty expression");
  return acc.take();
}

}  // namespace

std::string emit_expression(const Expr<Rat>& e) { return emit_impl(e); }
std::string emit_expression(const Expr<Fp>& e) { return emit_impl(e); }
Expr<Rat> parse_expression(const std::string& text) {
  // "0" parses to the empty expression.
  std::string t = text;
  size_t a = t.find_first_not_of(" \t\n");
  if (a != std::string::npos && t.substr(a, 1) == "0") {
    size_t b = t.find_first_not_of(" \t\n;", a + 1);
    if (b == std::string::npos) return Expr<Rat>::zero();
  }
  return parse_impl<Rat>(text);
}
Expr<Fp> parse_expression_fp(const std::string& text) {
  std::string t = text;
  size_t a = t.find_first_not_of(" \t\n");
  if (a != std::string::npos && t.substr(a, 1) == "0") {
    size_t b = t.find_first_not_of(" \t\n;", a + 1);
    if (b == std::string::npos) return Expr<Fp>::zero();
  }
  return parse_impl<Fp>(text);
}

}  // namespace zsum
