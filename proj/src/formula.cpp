#include "gmk/formula.hpp"

#include <cctype>
#include <functional>

namespace gmk {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h * 1000003u ^ (v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
}

Fptr make(Kind k, std::string name, Fptr l, Fptr r) {
  std::size_t h = mix(static_cast<std::size_t>(k) + 17, std::hash<std::string>{}(name));
  if (l) h = mix(h, l->hash);
  if (r) h = mix(h, r->hash);
  return std::make_shared<const Formula>(Formula{k, std::move(name), std::move(l), std::move(r), h});
}

} // namespace

Fptr bottom() {
  static const Fptr f = make(Kind::Bottom, "", nullptr, nullptr);
  return f;
}
Fptr top() {
  static const Fptr f = implies(bottom(), bottom());
  return f;
}
Fptr var(const std::string& name) { return make(Kind::Var, name, nullptr, nullptr); }
Fptr meta(const std::string& name) { return make(Kind::Meta, name, nullptr, nullptr); }
Fptr conj(Fptr l, Fptr r) { return make(Kind::And, "", std::move(l), std::move(r)); }
Fptr disj(Fptr l, Fptr r) { return make(Kind::Or, "", std::move(l), std::move(r)); }
Fptr implies(Fptr l, Fptr r) { return make(Kind::Implies, "", std::move(l), std::move(r)); }
Fptr negation(Fptr f) { return implies(std::move(f), bottom()); }
Fptr iff(Fptr l, Fptr r) { return conj(implies(l, r), implies(r, l)); }
Fptr box(Fptr f) { return make(Kind::Box, "", std::move(f), nullptr); }
Fptr dia(Fptr f) { return make(Kind::Dia, "", std::move(f), nullptr); }

int compare(const Fptr& a, const Fptr& b) {
  if (a.get() == b.get()) return 0;
  if (a->kind != b->kind) return a->kind < b->kind ? -1 : 1;
  if (int c = a->name.compare(b->name)) return c < 0 ? -1 : 1;
  bool al = static_cast<bool>(a->left), bl = static_cast<bool>(b->left);
  if (al != bl) return al < bl ? -1 : 1;
  if (al)
    if (int c = compare(a->left, b->left)) return c;
  bool ar = static_cast<bool>(a->right), br = static_cast<bool>(b->right);
  if (ar != br) return ar < br ? -1 : 1;
  if (ar)
    if (int c = compare(a->right, b->right)) return c;
  return 0;
}

bool equal(const Fptr& a, const Fptr& b) {
  if (a.get() == b.get()) return true;
  if (a->hash != b->hash) return false;
  return compare(a, b) == 0;
}

bool contains_modal(const Fptr& f) {
  if (f->kind == Kind::Box || f->kind == Kind::Dia) return true;
  if (f->left && contains_modal(f->left)) return true;
  if (f->right && contains_modal(f->right)) return true;
  return false;
}

bool contains_meta(const Fptr& f) {
  if (f->kind == Kind::Meta) return true;
  if (f->left && contains_meta(f->left)) return true;
  if (f->right && contains_meta(f->right)) return true;
  return false;
}

void collect_vars(const Fptr& f, std::set<std::string>& out) {
  if (f->kind == Kind::Var) out.insert(f->name);
  if (f->left) collect_vars(f->left, out);
  if (f->right) collect_vars(f->right, out);
}

std::vector<std::string> variables_of(const Fptr& f) {
  std::set<std::string> s;
  collect_vars(f, s);
  return {s.begin(), s.end()};
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

enum class Tok { Zero, One, Ident, MetaName, Not, Box, Dia, And, Or, Implies, Iff, LParen, RParen, End };

struct Lexer {
  const std::string& text;
  std::size_t pos = 0;
  Tok tok = Tok::End;
  std::string ident;
  std::size_t tok_pos = 0;
  bool allow_meta;

  explicit Lexer(const std::string& t, bool meta) : text(t), allow_meta(meta) { next(); }

  void next() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    tok_pos = pos;
    if (pos >= text.size()) { tok = Tok::End; return; }
    char c = text[pos];
    auto two = [&](char a, char b) {
      return c == a && pos + 1 < text.size() && text[pos + 1] == b;
    };
    if (c == '0') { tok = Tok::Zero; ++pos; return; }
    if (c == '1') { tok = Tok::One; ++pos; return; }
    if (c == '~') { tok = Tok::Not; ++pos; return; }
    if (c == '&') { tok = Tok::And; ++pos; return; }
    if (c == '|') { tok = Tok::Or; ++pos; return; }
    if (c == '(') { tok = Tok::LParen; ++pos; return; }
    if (c == ')') { tok = Tok::RParen; ++pos; return; }
    if (two('[', ']')) { tok = Tok::Box; pos += 2; return; }
    if (two('<', '>')) { tok = Tok::Dia; pos += 2; return; }
    if (two('-', '>')) { tok = Tok::Implies; pos += 2; return; }
    if (c == '<' && pos + 2 < text.size() && text[pos + 1] == '-' && text[pos + 2] == '>') {
      tok = Tok::Iff; pos += 3; return;
    }
    if (c == '?') {
      if (!allow_meta) throw ParseError("metavariables not allowed here", pos);
      ++pos;
      std::size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        ++pos;
      if (pos == start) throw ParseError("expected metavariable name after '?'", start);
      ident = text.substr(start, pos - start);
      tok = Tok::MetaName;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        ++pos;
      ident = text.substr(start, pos - start);
      tok = Tok::Ident;
      return;
    }
    throw ParseError(std::string("unknown token '") + c + "'", pos);
  }
};

struct Parser {
  Lexer lex;
  explicit Parser(const std::string& t, bool meta) : lex(t, meta) {}

  Fptr parse() {
    Fptr f = parse_iff();
    if (lex.tok != Tok::End) throw ParseError("unexpected trailing input", lex.tok_pos);
    return f;
  }

  Fptr parse_iff() {
    Fptr l = parse_implies();
    if (lex.tok == Tok::Iff) {
      lex.next();
      Fptr r = parse_iff();
      return iff(l, r);
    }
    return l;
  }

  Fptr parse_implies() {
    Fptr l = parse_or();
    if (lex.tok == Tok::Implies) {
      lex.next();
      Fptr r = parse_implies(); // right-associative
      return implies(l, r);
    }
    return l;
  }

  Fptr parse_or() {
    Fptr l = parse_and();
    while (lex.tok == Tok::Or) {
      lex.next();
      l = disj(l, parse_and());
    }
    return l;
  }

  Fptr parse_and() {
    Fptr l = parse_unary();
    while (lex.tok == Tok::And) {
      lex.next();
      l = conj(l, parse_unary());
    }
    return l;
  }

  Fptr parse_unary() {
    switch (lex.tok) {
      case Tok::Not: lex.next(); return negation(parse_unary());
      case Tok::Box: lex.next(); return box(parse_unary());
      case Tok::Dia: lex.next(); return dia(parse_unary());
      case Tok::Zero: lex.next(); return bottom();
      case Tok::One: lex.next(); return top();
      case Tok::Ident: {
        Fptr f = var(lex.ident);
        lex.next();
        return f;
      }
      case Tok::MetaName: {
        Fptr f = meta(lex.ident);
        lex.next();
        return f;
      }
      case Tok::LParen: {
        lex.next();
        Fptr f = parse_iff();
        if (lex.tok != Tok::RParen) throw ParseError("expected ')'", lex.tok_pos);
        lex.next();
        return f;
      }
      default: throw ParseError("expected a formula", lex.tok_pos);
    }
  }
};

} // namespace

Fptr parse_formula(const std::string& text, bool allow_meta) {
  return Parser(text, allow_meta).parse();
}

Fptr parse_scheme(const std::string& text) { return parse_formula(text, true); }

// ---------------------------------------------------------------------------
// Printer
// ---------------------------------------------------------------------------

namespace {

// precedence levels: 0 iff, 1 implies, 2 or, 3 and, 4 unary/atom
int prec(const Fptr& f) {
  switch (f->kind) {
    case Kind::Implies:
      if (f->right->kind == Kind::Bottom) return 4; // printed as ~x
      if (f->left->kind == Kind::Bottom && f->right->kind == Kind::Bottom) return 4;
      return 1;
    case Kind::Or: return 2;
    case Kind::And: return 3;
    default: return 4;
  }
}

void print(const Fptr& f, int min_prec, std::string& out) {
  int p = prec(f);
  bool parens = p < min_prec;
  if (parens) out += '(';
  switch (f->kind) {
    case Kind::Bottom: out += '0'; break;
    case Kind::Var: out += f->name; break;
    case Kind::Meta: out += '?'; out += f->name; break;
    case Kind::And:
      print(f->left, 3, out);
      out += " & ";
      print(f->right, 4, out);
      break;
    case Kind::Or:
      print(f->left, 2, out);
      out += " | ";
      print(f->right, 3, out);
      break;
    case Kind::Implies:
      if (f->left->kind == Kind::Bottom && f->right->kind == Kind::Bottom) {
        out += '1';
      } else if (f->right->kind == Kind::Bottom) {
        out += '~';
        print(f->left, 4, out);
      } else {
        print(f->left, 2, out);
        out += " -> ";
        print(f->right, 1, out);
      }
      break;
    case Kind::Box:
      out += "[]";
      print(f->left, 4, out);
      break;
    case Kind::Dia:
      out += "<>";
      print(f->left, 4, out);
      break;
  }
  if (parens) out += ')';
}

} // namespace

std::string format_formula(const Fptr& f) {
  std::string out;
  print(f, 0, out);
  return out;
}

// ---------------------------------------------------------------------------

namespace {
void subf(const Fptr& f, FormulaSet& out) {
  if (!out.insert(f).second) return;
  if (f->left) subf(f->left, out);
  if (f->right) subf(f->right, out);
}
} // namespace

FormulaSet subformulas(const Fptr& f) {
  FormulaSet out;
  out.insert(bottom());
  out.insert(top());
  subf(f, out);
  return out;
}

namespace {
bool match_rec(const Fptr& s, const Fptr& f, Substitution& sub) {
  if (s->kind == Kind::Meta) {
    auto it = sub.find(s->name);
    if (it == sub.end()) {
      sub.emplace(s->name, f);
      return true;
    }
    return equal(it->second, f);
  }
  if (s->kind != f->kind || s->name != f->name) return false;
  if (static_cast<bool>(s->left) != static_cast<bool>(f->left)) return false;
  if (static_cast<bool>(s->right) != static_cast<bool>(f->right)) return false;
  if (s->left && !match_rec(s->left, f->left, sub)) return false;
  if (s->right && !match_rec(s->right, f->right, sub)) return false;
  return true;
}
} // namespace

std::optional<Substitution> match_scheme(const Fptr& scheme, const Fptr& f) {
  Substitution sub;
  if (match_rec(scheme, f, sub)) return sub;
  return std::nullopt;
}

Fptr instantiate_scheme(const Fptr& scheme, const Substitution& subst) {
  switch (scheme->kind) {
    case Kind::Meta: {
      auto it = subst.find(scheme->name);
      if (it == subst.end())
        throw std::invalid_argument("unbound metavariable ?" + scheme->name);
      return it->second;
    }
    case Kind::Bottom:
    case Kind::Var: return scheme;
    case Kind::And: return conj(instantiate_scheme(scheme->left, subst), instantiate_scheme(scheme->right, subst));
    case Kind::Or: return disj(instantiate_scheme(scheme->left, subst), instantiate_scheme(scheme->right, subst));
    case Kind::Implies:
      return implies(instantiate_scheme(scheme->left, subst), instantiate_scheme(scheme->right, subst));
    case Kind::Box: return box(instantiate_scheme(scheme->left, subst));
    case Kind::Dia: return dia(instantiate_scheme(scheme->left, subst));
  }
  throw std::logic_error("unreachable");
}

FormulaSet box_prefix_set(const FormulaSet& gamma, int depth) {
  if (depth < 0) throw std::invalid_argument("box_prefix_set: negative depth");
  FormulaSet out;
  for (const Fptr& g : gamma) {
    Fptr cur = g;
    out.insert(cur);
    for (int k = 1; k <= depth; ++k) {
      cur = box(cur);
      out.insert(cur);
    }
  }
  return out;
}

} // namespace gmk
