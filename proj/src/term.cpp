#include "calcat/term.hpp"

#include <cctype>

#include "calcat/errors.hpp"

namespace calcat {

namespace {
TermPtr node(Term t) { return std::make_shared<Term>(std::move(t)); }
}  // namespace

TermPtr Term::id(ObjectExpr x) {
  Term t;
  t.kind = Kind::Id;
  t.objs = {std::move(x)};
  return node(std::move(t));
}

TermPtr Term::gen(std::string name, std::vector<ObjectExpr> objs, std::vector<int> nats) {
  Term t;
  t.kind = Kind::Gen;
  t.gen = std::move(name);
  t.objs = std::move(objs);
  t.nats = std::move(nats);
  return node(std::move(t));
}

TermPtr Term::seq(TermPtr x, TermPtr y) {
  Term t;
  t.kind = Kind::Seq;
  t.a = std::move(x);
  t.b = std::move(y);
  return node(std::move(t));
}

TermPtr Term::par(TermPtr x, TermPtr y) {
  Term t;
  t.kind = Kind::Par;
  t.a = std::move(x);
  t.b = std::move(y);
  return node(std::move(t));
}

TermPtr Term::sym(ObjectExpr x, ObjectExpr y) {
  Term t;
  t.kind = Kind::Sym;
  t.objs = {std::move(x), std::move(y)};
  return node(std::move(t));
}

TermPtr Term::scaled(Rational r, TermPtr inner) {
  Term t;
  t.kind = Kind::Scale;
  t.scale = std::move(r);
  t.a = std::move(inner);
  return node(std::move(t));
}

TermPtr Term::sum(TermPtr x, TermPtr y) {
  Term t;
  t.kind = Kind::Sum;
  t.a = std::move(x);
  t.b = std::move(y);
  return node(std::move(t));
}

TermPtr Term::zero(ObjectExpr dom, ObjectExpr cod) {
  Term t;
  t.kind = Kind::Zero;
  t.objs = {std::move(dom), std::move(cod)};
  return node(std::move(t));
}

TermPtr Term::bang(TermPtr inner) {
  Term t;
  t.kind = Kind::Bang;
  t.a = std::move(inner);
  return node(std::move(t));
}

TermPtr Term::seq_all(std::vector<TermPtr> ts) {
  TermPtr acc = ts.at(0);
  for (size_t i = 1; i < ts.size(); ++i) acc = seq(acc, ts[i]);
  return acc;
}

TermPtr Term::par_all(std::vector<TermPtr> ts) {
  TermPtr acc = ts.at(0);
  for (size_t i = 1; i < ts.size(); ++i) acc = par(acc, ts[i]);
  return acc;
}

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool eat_str(const char* t) {
    ws();
    size_t n = std::char_traits<char>::length(t);
    if (s.compare(pos, n, t) == 0) {
      pos += n;
      return true;
    }
    return false;
  }
  char peek() {
    ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(pos, msg); }

  std::string name() {
    ws();
    size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    if (start == pos) fail("expected a name");
    return s.substr(start, pos - start);
  }

  long natural() {
    ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected a number");
    return std::stol(s.substr(start, pos - start));
  }

  ObjectExpr object_atom() {
    ws();
    if (eat('!')) return ObjectExpr::bang(object_atom());
    if (eat('(')) {
      ObjectExpr o = object();
      if (!eat(')')) fail("expected `)` in object");
      return o;
    }
    std::string n = name();
    if (n == "I") return ObjectExpr::unit();
    return ObjectExpr::base(n);
  }

  ObjectExpr object() {
    std::vector<ObjectExpr> fs{object_atom()};
    while (true) {
      ws();
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        fs.push_back(object_atom());
      } else {
        break;
      }
    }
    return ObjectExpr::tensor(std::move(fs));
  }

  TermPtr primary() {
    ws();
    if (eat('(')) {
      TermPtr t = term();
      if (!eat(')')) fail("expected `)`");
      return t;
    }
    if (peek() == '0') {
      ++pos;
      if (!eat('[')) fail("expected `[dom->cod]` after 0");
      ObjectExpr dom = object();
      if (!eat_str("->")) fail("expected `->` in zero map type");
      ObjectExpr cod = object();
      if (!eat(']')) fail("expected `]`");
      return Term::zero(std::move(dom), std::move(cod));
    }
    std::string n = name();
    if (n == "id") {
      if (eat('[')) {
        ObjectExpr o = object();
        if (!eat(']')) fail("expected `]`");
        return Term::id(std::move(o));
      }
      return Term::id(ObjectExpr::base("A"));
    }
    if (n == "sym") {
      if (!eat('[')) fail("sym needs `[X,Y]`");
      ObjectExpr x = object();
      if (!eat(',')) fail("expected `,` in sym");
      ObjectExpr y = object();
      if (!eat(']')) fail("expected `]`");
      return Term::sym(std::move(x), std::move(y));
    }
    if (n == "bang") {
      if (!eat('(')) fail("bang needs `(term)`");
      TermPtr t = term();
      if (!eat(')')) fail("expected `)`");
      return Term::bang(std::move(t));
    }
    std::vector<ObjectExpr> objs;
    std::vector<int> nats;
    if (eat('[')) {
      while (true) {
        ws();
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
          nats.push_back(static_cast<int>(natural()));
        } else {
          objs.push_back(object());
        }
        if (eat(',')) continue;
        if (eat(']')) break;
        fail("expected `,` or `]` in generator arguments");
      }
    }
    return Term::gen(std::move(n), std::move(objs), std::move(nats));
  }

  TermPtr atom() {
    ws();
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      // scale literal NAT(/NAT)? * atom  — except `0[` which is the zero map
      size_t save = pos;
      long p = natural();
      if (p == 0 && peek() == '[') {
        pos = save;
        return primary();
      }
      long q = 1;
      if (peek() == '/') {
        ++pos;
        q = natural();
        if (q == 0) fail("zero denominator in scale");
      }
      if (!eat('*')) fail("expected `*` after scale literal");
      TermPtr t = atom();
      return Term::scaled(Rational(p) / q, std::move(t));
    }
    return primary();
  }

  TermPtr pars() {
    TermPtr t = atom();
    while (eat('#')) t = Term::par(t, atom());
    return t;
  }

  TermPtr seqs() {
    TermPtr t = pars();
    while (eat(';')) t = Term::seq(t, pars());
    return t;
  }

  TermPtr term() {
    TermPtr t = seqs();
    while (eat('+')) t = Term::sum(t, seqs());
    return t;
  }
};

void print_into(const TermPtr& t, std::string& out, int parent_prec);

// precedence levels: 0 sum, 1 seq, 2 par, 3 atom
int prec_of(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Sum: return 0;
    case Term::Kind::Seq: return 1;
    case Term::Kind::Par: return 2;
    default: return 3;
  }
}

void print_into(const TermPtr& t, std::string& out, int parent_prec) {
  int p = prec_of(t);
  bool paren = p < parent_prec;
  if (paren) out += "(";
  switch (t->kind) {
    case Term::Kind::Sum:
      print_into(t->a, out, 0);
      out += " + ";
      print_into(t->b, out, 1);
      break;
    case Term::Kind::Seq:
      print_into(t->a, out, 1);
      out += " ; ";
      print_into(t->b, out, 2);
      break;
    case Term::Kind::Par:
      print_into(t->a, out, 2);
      out += " # ";
      print_into(t->b, out, 3);
      break;
    case Term::Kind::Id:
      out += "id[" + t->objs[0].str() + "]";
      break;
    case Term::Kind::Sym:
      out += "sym[" + t->objs[0].str() + "," + t->objs[1].str() + "]";
      break;
    case Term::Kind::Zero:
      out += "0[" + t->objs[0].str() + "->" + t->objs[1].str() + "]";
      break;
    case Term::Kind::Bang:
      out += "bang(";
      print_into(t->a, out, 0);
      out += ")";
      break;
    case Term::Kind::Scale: {
      out += scalar_str(t->scale);
      out += "*";
      print_into(t->a, out, 3);
      break;
    }
    case Term::Kind::Gen: {
      out += t->gen;
      if (!t->objs.empty() || !t->nats.empty()) {
        out += "[";
        bool first = true;
        for (int n : t->nats) {
          if (!first) out += ",";
          first = false;
          out += std::to_string(n);
        }
        for (const auto& o : t->objs) {
          if (!first) out += ",";
          first = false;
          out += o.str();
        }
        out += "]";
      }
      break;
    }
  }
  if (paren) out += ")";
}

}  // namespace

TermPtr parse_term(const std::string& text) {
  Parser p(text);
  TermPtr t = p.term();
  p.ws();
  if (p.pos != text.size()) throw ParseError(p.pos, "trailing input after term");
  return t;
}

ObjectExpr parse_object(const std::string& text) {
  Parser p(text);
  ObjectExpr o = p.object();
  p.ws();
  if (p.pos != text.size()) throw ParseError(p.pos, "trailing input after object");
  return o;
}

std::string print_term(const TermPtr& t) {
  std::string out;
  print_into(t, out, 0);
  return out;
}

}  // namespace calcat
