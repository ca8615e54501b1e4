#include "fourman/dsl.hpp"

#include "fourman/error.hpp"

#include <cctype>
#include <sstream>

namespace fourman {

namespace {

bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
public:
  Parser(std::string_view text, const PrimitiveRegistry& registry) : text_(text), registry_(registry) {}

  DslValue program()
  {
    skip();
    DslValue v = peek_query() ? query() : DslValue(expr());
    skip();
    if (!done())
      fail("unexpected '" + std::string(1, cur()) + "'");
    return v;
  }

private:
  std::string_view text_;
  const PrimitiveRegistry& registry_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;

  bool done() const { return pos_ >= text_.size(); }
  char cur() const { return done() ? '\0' : text_[pos_]; }

  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, line_, col_); }

  void advance()
  {
    if (cur() == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip()
  {
    while (!done() && std::isspace(static_cast<unsigned char>(cur())))
      advance();
  }

  bool accept(char c)
  {
    skip();
    if (cur() != c)
      return false;
    advance();
    return true;
  }

  void expect(char c)
  {
    if (!accept(c))
      fail(std::string("expected '") + c + "'" + (done() ? " before end of input" : ""));
  }

  std::string name()
  {
    skip();
    if (!name_start(cur()))
      fail("expected a name");
    std::string out;
    while (name_char(cur())) {
      out += cur();
      advance();
    }
    return out;
  }

  void keyword(const std::string& key)
  {
    skip();
    auto at_line = line_, at_col = col_;
    auto got = name();
    if (got != key)
      throw SyntaxError("expected '" + key + "=', got '" + got + "'", at_line, at_col);
    expect('=');
  }

  Integer integer()
  {
    skip();
    bool neg = false;
    if (cur() == '-') {
      neg = true;
      advance();
    }
    if (!std::isdigit(static_cast<unsigned char>(cur())))
      fail("expected an integer");
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(cur()))) {
      digits += cur();
      advance();
    }
    Integer v(digits);
    return neg ? Integer(-v) : v;
  }

  // p, p/q or a decimal like 0.25
  Rational rational()
  {
    skip();
    bool neg = cur() == '-';
    Integer whole = integer();
    if (cur() == '.') {
      advance();
      std::string frac;
      while (std::isdigit(static_cast<unsigned char>(cur()))) {
        frac += cur();
        advance();
      }
      if (frac.empty())
        fail("expected digits after '.'");
      Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(frac.size()));
      Rational part(Integer(frac), scale);
      return neg ? Rational(whole) - part : Rational(whole) + part;
    }
    if (accept('/')) {
      Integer den = integer();
      if (den == 0)
        fail("zero denominator");
      return Rational(whole, den);
    }
    return Rational(whole);
  }

  bool peek_digit()
  {
    skip();
    return std::isdigit(static_cast<unsigned char>(cur()));
  }

  bool peek_query()
  {
    auto save = pos_;
    std::string word;
    while (save < text_.size() && name_char(text_[save]))
      word += text_[save++];
    return word == "bk" || word == "free_actions";
  }

  Expr expr()
  {
    std::vector<Summand> parts;
    bool explicit_mult = false;
    do {
      Integer k = 1;
      if (peek_digit()) {
        k = integer();
        expect('*');
        explicit_mult = true;
      }
      parts.push_back({atom(), k});
    } while (accept('#'));
    if (parts.size() == 1 && !explicit_mult)
      return parts.front().expr;
    return connected_sum(std::move(parts));
  }

  Expr atom()
  {
    skip();
    if (accept('(')) {
      Expr e = expr();
      expect(')');
      return e;
    }
    auto at_line = line_, at_col = col_;
    std::string n = name();
    if (n == "cover")
      return cover();
    if (n == "bicyclic") {
      expect('(');
      Integer d = integer();
      expect(',');
      Integer p = integer();
      expect(';');
      std::vector<Integer> v;
      for (int i = 0; i < 4; ++i) {
        if (i)
          expect(',');
        v.push_back(integer());
      }
      expect(')');
      return bicyclic(d, p, v[0], v[1], v[2], v[3]);
    }
    if (n == "quotient") {
      expect('(');
      Expr inner = expr();
      expect(',');
      Integer d = integer();
      Action action = Action::standard;
      if (accept(',')) {
        auto w = name();
        if (w == "weighted")
          action = Action::weighted;
        else if (w != "standard")
          fail("expected 'weighted' or 'standard'");
      }
      expect(')');
      return quotient(inner, d, action);
    }
    if (n == "fibersum") {
      expect('(');
      Expr l = expr();
      expect(',');
      Expr r = expr();
      expect(',');
      keyword("g");
      Integer g = integer();
      expect(')');
      return fiber_sum(l, r, g);
    }
    if (n == "logt") {
      expect('(');
      Expr inner = expr();
      expect(',');
      Integer j = integer();
      expect(')');
      return log_transform_node(inner, j);
    }
    if (n == "CP2bar")
      n = "CP2b";
    if (!PrimitiveRegistry::is_builtin(n) && !registry_.contains(n))
      throw Error(ErrorKind::UnknownPrimitive, "'" + n + "' at " + std::to_string(at_line) + ":" +
                                                   std::to_string(at_col));
    std::vector<Integer> args;
    std::optional<GroupLabel> group;
    if (accept('(')) {
      do {
        skip();
        if (n == "XG" && args.size() == 2)
          group = group_label();
        else
          args.push_back(integer());
      } while (accept(','));
      expect(')');
    }
    if (group)
      return prim_group(n, args, *group);
    return prim(n, args);
  }

  GroupLabel group_label()
  {
    std::string g = name();
    if (g == "trivial")
      return GroupLabel::trivial();
    if (g == "unknown")
      return GroupLabel::unknown();
    if (g == "Z" && cur() == '/') {
      advance();
      return GroupLabel::cyclic(integer());
    }
    return GroupLabel::presented(g);
  }

  Expr cover()
  {
    expect('(');
    auto b = name();
    Base base;
    if (b == "CP2")
      base = Base::CP2;
    else if (b == "CP1xCP1")
      base = Base::CP1xCP1;
    else
      fail("cover base must be CP2 or CP1xCP1");
    expect(',');
    keyword("d");
    Integer d = integer();
    expect(',');
    keyword("branch");
    DivisorClass cls;
    if (accept('(')) {
      Integer p = integer();
      expect(',');
      Integer q = integer();
      expect(')');
      cls = DivisorClass::on_quadric(p, q);
    } else {
      cls = DivisorClass::on_cp2(integer());
    }
    if (cls.base != base)
      fail("branch class does not live on " + b);
    expect(')');
    return cyclic_cover(base, d, cls);
  }

  std::pair<Integer, Integer> bounds()
  {
    keyword("bounds");
    expect('(');
    Integer x = integer();
    expect(',');
    Integer y = integer();
    expect(')');
    return {x, y};
  }

  DslValue query()
  {
    auto n = name();
    expect('(');
    if (n == "bk") {
      BkQuery q;
      keyword("eps");
      q.eps_prime = rational();
      expect(',');
      keyword("c");
      q.c = rational();
      expect(',');
      std::tie(q.x_max, q.y_max) = bounds();
      expect(')');
      return q;
    }
    GeographyQuery q;
    keyword("d");
    q.d = integer();
    expect(',');
    keyword("eps");
    q.epsilon = rational();
    expect(',');
    keyword("c");
    q.c = rational();
    expect(',');
    std::tie(q.n_max, q.m_max) = bounds();
    expect(')');
    return q;
  }
};

std::string join_args(const std::vector<Integer>& args)
{
  std::string out;
  for (std::size_t i = 0; i < args.size(); ++i)
    out += (i ? "," : "") + to_string(args[i]);
  return out;
}

std::string print_atom(const Expr& e)
{
  auto s = print(e);
  return e.is<ConnectedSum>() ? "(" + s + ")" : s;
}

struct Printer {
  std::string operator()(const Primitive& p) const
  {
    if (p.group) {
      std::string out = p.name + "(" + to_string(p.args.at(0)) + "," + to_string(p.args.at(1)) + "," + p.group->str();
      for (std::size_t i = 2; i < p.args.size(); ++i)
        out += "," + to_string(p.args[i]);
      return out + ")";
    }
    if (p.args.empty())
      return p.name;
    return p.name + "(" + join_args(p.args) + ")";
  }
  std::string operator()(const CyclicCover& c) const
  {
    std::string branch = c.branch.degrees.size() == 1 ? to_string(c.branch.degrees[0])
                                                      : "(" + join_args(c.branch.degrees) + ")";
    return "cover(" + std::string(base_name(c.base)) + ", d=" + to_string(c.degree) + ", branch=" + branch + ")";
  }
  std::string operator()(const BicyclicCover& b) const
  {
    return "bicyclic(" + to_string(b.d) + "," + to_string(b.p) + ";" + join_args({b.a, b.b, b.m, b.n}) + ")";
  }
  std::string operator()(const Quotient& q) const
  {
    return "quotient(" + print(q.inner) + ", " + to_string(q.degree) +
           (q.action == Action::weighted ? ", weighted)" : ")");
  }
  std::string operator()(const ConnectedSum& s) const
  {
    if (s.parts.size() == 1 && s.parts[0].multiplicity == 1)
      return "1*" + print_atom(s.parts[0].expr);
    std::string out;
    for (std::size_t i = 0; i < s.parts.size(); ++i) {
      if (i)
        out += " # ";
      const auto& part = s.parts[i];
      if (part.multiplicity != 1)
        out += to_string(part.multiplicity) + "*";
      out += print_atom(part.expr);
    }
    return out;
  }
  std::string operator()(const FiberSum& f) const
  {
    return "fibersum(" + print(f.left) + ", " + print(f.right) + ", g=" + to_string(f.genus) + ")";
  }
  std::string operator()(const LogTransform& t) const
  {
    return "logt(" + print(t.inner) + ", " + to_string(t.multiplicity) + ")";
  }
};

} // namespace

DslValue parse_dsl(std::string_view text, const PrimitiveRegistry& registry)
{
  return Parser(text, registry).program();
}

Expr parse_expr(std::string_view text, const PrimitiveRegistry& registry)
{
  auto v = parse_dsl(text, registry);
  if (auto* e = std::get_if<Expr>(&v))
    return *e;
  throw SyntaxError("expected a manifold expression, got a query", 1, 1);
}

std::string print(const Expr& expr)
{
  return std::visit(Printer{}, static_cast<const NodeVariant&>(expr.node()));
}

std::string print(const BkQuery& q)
{
  return "bk(eps=" + to_string(q.eps_prime) + ", c=" + to_string(q.c) + ", bounds=(" + to_string(q.x_max) + "," +
         to_string(q.y_max) + "))";
}

std::string print(const GeographyQuery& q)
{
  return "free_actions(d=" + to_string(q.d) + ", eps=" + to_string(q.epsilon) + ", c=" + to_string(q.c) +
         ", bounds=(" + to_string(q.n_max) + "," + to_string(q.m_max) + "))";
}

std::string print_plain(const Expr& expr)
{
  const auto* s = expr.as<ConnectedSum>();
  if (!s)
    return print(expr);
  std::string out;
  for (std::size_t i = 0; i < s->parts.size(); ++i) {
    if (i)
      out += " # ";
    const auto& part = s->parts[i];
    if (part.multiplicity != 1)
      out += to_string(part.multiplicity) + " ";
    out += print_atom(part.expr);
  }
  return out;
}

} // namespace fourman
