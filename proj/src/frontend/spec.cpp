#include "ogroup/frontend/spec.hpp"

#include <sstream>

#include "ogroup/constructions.hpp"
#include "ogroup/decomposition.hpp"
#include "ogroup/subgroup.hpp"

namespace ogroup::frontend {

namespace {

std::string located(Location at, const std::string &message) {
  return "line " + std::to_string(at.line) + ", column " + std::to_string(at.column) +
         ": " + message;
}

enum class Tok { ident, number, lbracket, rbracket, comma, equals, newline, end };

struct Token {
  Tok kind;
  std::string text;
  unsigned long long value = 0;
  Location at;
};

const char *describe(Tok t) {
  switch (t) {
  case Tok::ident: return "a name";
  case Tok::number: return "a number";
  case Tok::lbracket: return "'['";
  case Tok::rbracket: return "']'";
  case Tok::comma: return "','";
  case Tok::equals: return "'='";
  case Tok::newline: return "end of line";
  case Tok::end: return "end of input";
  }
  return "?";
}

bool ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }
bool digit(char c) { return c >= '0' && c <= '9'; }

// Newlines inside brackets are whitespace, so tables may span lines.
std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0, line = 1, col = 1, depth = 0;
  auto advance = [&] {
    unsigned char c = static_cast<unsigned char>(text[i]);
    ++i;
    if (c == '\n') {
      ++line;
      col = 1;
    } else if ((c & 0xC0) != 0x80) {
      ++col;
    }
  };

  while (i < text.size()) {
    char c = text[i];
    Location at{line, col};
    if (c == '#') {
      while (i < text.size() && text[i] != '\n')
        advance();
      continue;
    }
    if (c == '\n') {
      if (depth == 0)
        out.push_back({Tok::newline, "\n", 0, at});
      advance();
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      advance();
      continue;
    }
    if (ident_start(c)) {
      std::string s;
      while (i < text.size() && ident_char(text[i])) {
        s.push_back(text[i]);
        advance();
      }
      out.push_back({Tok::ident, s, 0, at});
      continue;
    }
    if (digit(c)) {
      std::string s;
      unsigned long long v = 0;
      while (i < text.size() && digit(text[i])) {
        v = v * 10 + static_cast<unsigned long long>(text[i] - '0');
        if (v > 0xFFFFFFFFull)
          throw ParseError(at, "number too large");
        s.push_back(text[i]);
        advance();
      }
      if (i < text.size() && ident_char(text[i]))
        throw ParseError(at, "malformed number");
      out.push_back({Tok::number, s, v, at});
      continue;
    }
    switch (c) {
    case '[':
      ++depth;
      out.push_back({Tok::lbracket, "[", 0, at});
      break;
    case ']':
      if (depth == 0)
        throw ParseError(at, "unbalanced ']'");
      --depth;
      out.push_back({Tok::rbracket, "]", 0, at});
      break;
    case ',':
      out.push_back({Tok::comma, ",", 0, at});
      break;
    case '=':
      out.push_back({Tok::equals, "=", 0, at});
      break;
    default:
      throw ParseError(at, "unexpected character");
    }
    advance();
  }
  Location at{line, col};
  if (depth != 0)
    throw ParseError(at, "unterminated '['");
  out.push_back({Tok::end, "", 0, at});
  return out;
}

class Parser {
public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  GroupSpec run() {
    GroupSpec spec;
    for (;;) {
      while (peek().kind == Tok::newline)
        ++pos_;
      if (peek().kind == Tok::end)
        break;
      spec.statements.push_back(statement());
      const Token &t = peek();
      if (t.kind != Tok::newline && t.kind != Tok::end)
        fail(t, "expected end of line");
    }
    return spec;
  }

private:
  const Token &peek() const { return toks_[pos_]; }

  [[noreturn]] void fail(const Token &t, const std::string &message) {
    throw ParseError(t.at, message + ", found " +
                             (t.kind == Tok::ident || t.kind == Tok::number
                                ? "'" + t.text + "'"
                                : std::string(describe(t.kind))));
  }

  const Token &expect(Tok kind) {
    const Token &t = peek();
    if (t.kind != kind)
      fail(t, std::string("expected ") + describe(kind));
    ++pos_;
    return t;
  }

  void keyword(const char *word) {
    const Token &t = peek();
    if (t.kind != Tok::ident || t.text != word)
      fail(t, std::string("expected '") + word + "'");
    ++pos_;
  }

  std::size_t number() { return static_cast<std::size_t>(expect(Tok::number).value); }

  std::vector<Element> list() {
    expect(Tok::lbracket);
    std::vector<Element> out;
    if (peek().kind == Tok::rbracket) {
      ++pos_;
      return out;
    }
    for (;;) {
      out.push_back(static_cast<Element>(number()));
      if (peek().kind == Tok::comma) {
        ++pos_;
        continue;
      }
      expect(Tok::rbracket);
      return out;
    }
  }

  std::vector<std::vector<Element>> matrix() {
    expect(Tok::lbracket);
    std::vector<std::vector<Element>> rows;
    for (;;) {
      rows.push_back(list());
      if (peek().kind == Tok::comma) {
        ++pos_;
        continue;
      }
      expect(Tok::rbracket);
      return rows;
    }
  }

  Statement statement() {
    const Token &head = peek();
    if (head.kind == Tok::ident && head.text == "group")
      return group_statement();
    if (head.kind == Tok::ident && head.text == "operator")
      return operator_statement();
    fail(head, "expected 'group' or 'operator'");
  }

  Statement group_statement() {
    Statement s;
    s.kind = Statement::Kind::group;
    s.at = peek().at;
    ++pos_;
    s.name = expect(Tok::ident).text;
    expect(Tok::equals);
    const Token &k = expect(Tok::ident);
    GroupExpr &e = s.group;
    auto named = [&](NamedKind kind) {
      e.kind = GroupExpr::Kind::named;
      e.named = kind;
      e.parameter = number();
    };
    if (k.text == "cyclic") {
      named(NamedKind::cyclic);
    } else if (k.text == "symmetric") {
      named(NamedKind::symmetric);
    } else if (k.text == "alternating") {
      named(NamedKind::alternating);
    } else if (k.text == "dihedral") {
      named(NamedKind::dihedral);
    } else if (k.text == "klein4") {
      e.kind = GroupExpr::Kind::named;
      e.named = NamedKind::klein4;
    } else if (k.text == "table") {
      e.kind = GroupExpr::Kind::table;
      e.table = matrix();
    } else if (k.text == "product") {
      e.kind = GroupExpr::Kind::product;
      e.operands.push_back(expect(Tok::ident).text);
      e.operands.push_back(expect(Tok::ident).text);
      while (peek().kind == Tok::ident)
        e.operands.push_back(expect(Tok::ident).text);
    } else if (k.text == "quotient") {
      e.kind = GroupExpr::Kind::quotient;
      e.operands.push_back(expect(Tok::ident).text);
      keyword("by");
      e.by = subgroup_expr();
    } else if (k.text == "inner") {
      e.kind = GroupExpr::Kind::inner;
      e.operands.push_back(expect(Tok::ident).text);
    } else {
      fail(k, "expected a group constructor (cyclic, symmetric, alternating, "
              "dihedral, klein4, table, product, quotient, inner)");
    }
    return s;
  }

  SubgroupExpr subgroup_expr() {
    SubgroupExpr out;
    const Token &t = peek();
    if (t.kind == Tok::lbracket) {
      out.kind = SubgroupExpr::Kind::generated;
      out.elements = list();
      return out;
    }
    if (t.kind == Tok::ident) {
      if (t.text == "socle")
        out.kind = SubgroupExpr::Kind::socle;
      else if (t.text == "center")
        out.kind = SubgroupExpr::Kind::center;
      else if (t.text == "derived")
        out.kind = SubgroupExpr::Kind::derived;
      else
        fail(t, "expected a subgroup ([...], socle, center, derived)");
      ++pos_;
      return out;
    }
    fail(t, "expected a subgroup ([...], socle, center, derived)");
  }

  Statement operator_statement() {
    Statement s;
    s.kind = Statement::Kind::op;
    s.at = peek().at;
    ++pos_;
    s.label = expect(Tok::ident).text;
    keyword("on");
    s.name = expect(Tok::ident).text;
    expect(Tok::equals);
    const Token &t = peek();
    if (t.kind == Tok::lbracket) {
      s.action.kind = OperatorAction::Kind::values;
      s.action.values = list();
    } else if (t.kind == Tok::ident && t.text == "inner") {
      ++pos_;
      s.action.kind = OperatorAction::Kind::inner;
      s.action.parameter = static_cast<long long>(number());
    } else if (t.kind == Tok::ident && t.text == "power") {
      ++pos_;
      s.action.kind = OperatorAction::Kind::power;
      s.action.parameter = static_cast<long long>(number());
    } else {
      fail(t, "expected an operator action ([...], inner k, power k)");
    }
    return s;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

void print_list(std::ostream &os, const std::vector<Element> &xs) {
  os << '[';
  for (std::size_t i = 0; i < xs.size(); ++i)
    os << (i ? ", " : "") << xs[i];
  os << ']';
}

const char *named_keyword(NamedKind k) {
  switch (k) {
  case NamedKind::cyclic: return "cyclic";
  case NamedKind::symmetric: return "symmetric";
  case NamedKind::alternating: return "alternating";
  case NamedKind::dihedral: return "dihedral";
  case NamedKind::klein4: return "klein4";
  }
  return "?";
}

const Group &lookup(const Environment &env, const std::string &name, Location at) {
  const Group *g = env.find(name);
  if (!g)
    throw SemanticError(at, "unknown group '" + name + "'");
  return *g;
}

Subgroup resolve(const Group &g, const std::string &name, const SubgroupExpr &e,
                 const Limits &limits, Location at) {
  switch (e.kind) {
  case SubgroupExpr::Kind::generated: {
    for (Element x : e.elements)
      if (x >= g.order())
        throw SemanticError(at, "element " + std::to_string(x) + " is not in '" +
                                  name + "' (order " + std::to_string(g.order()) + ")");
    Subgroup h = generated_subgroup(g, e.elements);
    if (!is_normal(h))
      throw SemanticError(at, "the subgroup generated by those elements is not "
                              "normal in '" + name + "'");
    return h;
  }
  case SubgroupExpr::Kind::socle:
    return socle(g, limits);
  case SubgroupExpr::Kind::center: {
    Centralizer c = centralizer(g, ElementSet::full(g.order()));
    if (!c.operator_closed)
      throw SemanticError(at, "the center of '" + name +
                                "' is not stable under its operators");
    return c.subgroup(g);
  }
  case SubgroupExpr::Kind::derived: {
    Subgroup whole = Subgroup::whole(g);
    return commutator_subgroup(whole, whole);
  }
  }
  throw SemanticError(at, "unknown subgroup expression");
}

Group build(const Statement &s, const Environment &env, const Limits &limits) {
  const GroupExpr &e = s.group;
  switch (e.kind) {
  case GroupExpr::Kind::named:
    return build_named(e.named, e.parameter, limits).renamed(s.name);
  case GroupExpr::Kind::table:
    return build_from_table(e.table, {}, s.name);
  case GroupExpr::Kind::product: {
    std::vector<Group> factors;
    for (const auto &n : e.operands)
      factors.push_back(lookup(env, n, s.at));
    return direct_product(factors, limits).product.renamed(s.name);
  }
  case GroupExpr::Kind::quotient: {
    const Group &g = lookup(env, e.operands[0], s.at);
    return quotient(resolve(g, e.operands[0], e.by, limits, s.at)).group.renamed(s.name);
  }
  case GroupExpr::Kind::inner:
    return with_inner_operators(lookup(env, e.operands[0], s.at)).renamed(s.name);
  }
  throw SemanticError(s.at, "unknown group expression");
}

Group extend(const Statement &s, const Group &g) {
  Operator op{s.label, {}};
  const OperatorAction &a = s.action;
  switch (a.kind) {
  case OperatorAction::Kind::values:
    op.action = a.values;
    break;
  case OperatorAction::Kind::inner: {
    if (static_cast<std::size_t>(a.parameter) >= g.order())
      throw SemanticError(s.at, "element " + std::to_string(a.parameter) +
                                  " is not in '" + s.name + "'");
    Element k = static_cast<Element>(a.parameter);
    for (Element x = 0; x < g.order(); ++x)
      op.action.push_back(g.conjugate(k, x));
    break;
  }
  case OperatorAction::Kind::power:
    for (Element x = 0; x < g.order(); ++x)
      op.action.push_back(g.power(x, a.parameter));
    break;
  }
  return with_operator(g, std::move(op));
}

} // namespace

ParseError::ParseError(Location at, const std::string &message)
  : Error(located(at, message)), at_(at), message_(message) {}

SemanticError::SemanticError(Location at, const std::string &message,
                             std::optional<Axiom> axiom)
  : Error(located(at, message)), at_(at), message_(message), axiom_(axiom) {}

GroupSpec parse_spec(std::string_view text) { return Parser(lex(text)).run(); }

std::string print_spec(const GroupSpec &spec) {
  std::ostringstream os;
  for (const Statement &s : spec.statements) {
    if (s.kind == Statement::Kind::group) {
      os << "group " << s.name << " = ";
      const GroupExpr &e = s.group;
      switch (e.kind) {
      case GroupExpr::Kind::named:
        os << named_keyword(e.named);
        if (e.named != NamedKind::klein4)
          os << ' ' << e.parameter;
        break;
      case GroupExpr::Kind::table:
        os << "table [";
        for (std::size_t i = 0; i < e.table.size(); ++i) {
          if (i)
            os << ", ";
          print_list(os, e.table[i]);
        }
        os << ']';
        break;
      case GroupExpr::Kind::product:
        os << "product";
        for (const auto &n : e.operands)
          os << ' ' << n;
        break;
      case GroupExpr::Kind::quotient:
        os << "quotient " << e.operands[0] << " by ";
        switch (e.by.kind) {
        case SubgroupExpr::Kind::generated: print_list(os, e.by.elements); break;
        case SubgroupExpr::Kind::socle: os << "socle"; break;
        case SubgroupExpr::Kind::center: os << "center"; break;
        case SubgroupExpr::Kind::derived: os << "derived"; break;
        }
        break;
      case GroupExpr::Kind::inner:
        os << "inner " << e.operands[0];
        break;
      }
    } else {
      os << "operator " << s.label << " on " << s.name << " = ";
      switch (s.action.kind) {
      case OperatorAction::Kind::values: print_list(os, s.action.values); break;
      case OperatorAction::Kind::inner: os << "inner " << s.action.parameter; break;
      case OperatorAction::Kind::power: os << "power " << s.action.parameter; break;
      }
    }
    os << '\n';
  }
  return os.str();
}

const Group *Environment::find(std::string_view name) const {
  for (const auto &[n, g] : groups_)
    if (n == name)
      return &g;
  return nullptr;
}

void Environment::define(const std::string &name, Group g) {
  groups_.emplace_back(name, std::move(g));
}

void Environment::replace(const std::string &name, Group g) {
  for (auto &[n, existing] : groups_)
    if (n == name) {
      existing = std::move(g);
      return;
    }
  define(name, std::move(g));
}

Environment elaborate(const GroupSpec &spec, const Limits &limits) {
  Environment env;
  for (const Statement &s : spec.statements) {
    try {
      if (s.kind == Statement::Kind::group) {
        if (env.find(s.name))
          throw SemanticError(s.at, "group '" + s.name + "' is already defined");
        env.define(s.name, build(s, env, limits));
      } else {
        const Group &g = lookup(env, s.name, s.at);
        env.replace(s.name, extend(s, g));
      }
    } catch (const InvalidGroup &e) {
      throw SemanticError(s.at, std::string(axiom_name(e.axiom())) + ": " + e.what(),
                          e.axiom());
    } catch (const PreconditionError &e) {
      throw SemanticError(s.at, e.what());
    }
  }
  return env;
}

} // namespace ogroup::frontend
