#include "fourman/certificate.hpp"

#include "fourman/numeric.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace fourman {

nlohmann::json Certificate::to_json() const
{
  nlohmann::json steps_json = nlohmann::json::array();
  for (const auto& s : steps)
    steps_json.push_back({{"rule", s.rule}, {"citation", s.citation}, {"arithmetic", s.arithmetic}});
  nlohmann::json j = {{"verdict", verdict}, {"steps", steps_json}, {"inputs", inputs}};
  j["assumptions"] = assumptions;
  return j;
}

Certificate Certificate::from_json(const nlohmann::json& j)
{
  Certificate c;
  c.verdict = j.at("verdict").get<std::string>();
  for (const auto& s : j.at("steps"))
    c.steps.push_back({s.at("rule").get<std::string>(), s.at("citation").get<std::string>(),
                       s.at("arithmetic").get<std::string>()});
  c.inputs = j.value("inputs", nlohmann::json::object());
  if (j.contains("assumptions"))
    c.assumptions = j.at("assumptions").get<std::vector<std::string>>();
  return c;
}

namespace {

struct CheckError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class LineChecker {
public:
  LineChecker(std::string_view text, const nlohmann::json& inputs) : text_(text), inputs_(inputs) {}

  bool run()
  {
    bool all = true;
    do {
      all &= clause();
    } while (accept(";"));
    skip();
    if (pos_ != text_.size())
      throw CheckError("trailing input at offset " + std::to_string(pos_));
    return all;
  }

private:
  std::string_view text_;
  const nlohmann::json& inputs_;
  std::size_t pos_ = 0;

  void skip()
  {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool accept(std::string_view tok)
  {
    skip();
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view tok)
  {
    if (!accept(tok))
      throw CheckError("expected '" + std::string(tok) + "' at offset " + std::to_string(pos_));
  }

  std::optional<std::string> relation()
  {
    skip();
    for (std::string_view op : {"<=", ">=", "!=", "=", "<", ">"})
      if (accept(op))
        return std::string(op);
    return std::nullopt;
  }

  static bool holds(const std::string& op, const Rational& a, const Rational& b)
  {
    if (op == "=") return a == b;
    if (op == "!=") return a != b;
    if (op == "<") return a < b;
    if (op == "<=") return a <= b;
    if (op == ">") return a > b;
    return a >= b;
  }

  bool clause()
  {
    Rational lhs = sum();
    bool ok = true;
    bool any = false;
    while (auto op = relation()) {
      Rational rhs = sum();
      ok &= holds(*op, lhs, rhs);
      lhs = rhs;
      any = true;
    }
    if (!any)
      throw CheckError("clause without a relation");
    return ok;
  }

  Rational sum()
  {
    Rational v = product();
    for (;;) {
      if (accept("+"))
        v += product();
      else if (accept("-"))
        v -= product();
      else
        return v;
    }
  }

  Rational product()
  {
    Rational v = unary();
    for (;;) {
      if (accept("*")) {
        v *= unary();
      } else if (accept("/")) {
        Rational d = unary();
        if (d == 0)
          throw CheckError("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  Rational unary()
  {
    if (accept("-"))
      return -unary();
    return primary();
  }

  Rational integral(const Rational& v, const char* fn)
  {
    if (!is_integral(v))
      throw CheckError(std::string(fn) + " needs integer arguments");
    return v;
  }

  Rational primary()
  {
    skip();
    if (accept("(")) {
      Rational v = sum();
      expect(")");
      return v;
    }
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      return Rational(Integer(std::string(text_.substr(start, pos_ - start))));
    }
    if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' || text_[pos_] == '.'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      skip();
      if (pos_ < text_.size() && text_[pos_] == '(')
        return call(name);
      return lookup(name);
    }
    throw CheckError("unexpected input at offset " + std::to_string(pos_));
  }

  Rational call(const std::string& name)
  {
    expect("(");
    std::vector<Rational> args{sum()};
    while (accept(","))
      args.push_back(sum());
    expect(")");
    auto arity = [&](std::size_t n) {
      if (args.size() != n)
        throw CheckError(name + " takes " + std::to_string(n) + " argument(s)");
    };
    if (name == "floor") {
      arity(1);
      return Rational(floor(args[0]));
    }
    if (name == "abs") {
      arity(1);
      return args[0] < 0 ? Rational(-args[0]) : args[0];
    }
    if (name == "mod") {
      arity(2);
      Integer a = to_integer(integral(args[0], "mod"));
      Integer m = to_integer(integral(args[1], "mod"));
      if (m <= 0)
        throw CheckError("mod needs a positive modulus");
      return Rational(mod_floor(a, m));
    }
    if (name == "gcd") {
      arity(2);
      return Rational(gcd(to_integer(integral(args[0], "gcd")), to_integer(integral(args[1], "gcd"))));
    }
    throw CheckError("unknown function " + name);
  }

  Rational lookup(const std::string& path)
  {
    const nlohmann::json* node = &inputs_;
    std::size_t start = 0;
    while (start <= path.size()) {
      std::size_t dot = path.find('.', start);
      std::string key = path.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
      if (!node->is_object() || !node->contains(key))
        throw CheckError("unknown identifier " + path);
      node = &node->at(key);
      if (dot == std::string::npos)
        break;
      start = dot + 1;
    }
    if (node->is_number_integer())
      return Rational(Integer(node->get<long long>()));
    if (node->is_string()) {
      if (auto v = parse_rational(node->get<std::string>()))
        return *v;
    }
    throw CheckError("identifier " + path + " is not a number");
  }
};

} // namespace

bool check_arithmetic(std::string_view line, const nlohmann::json& inputs, std::string* error)
{
  try {
    return LineChecker(line, inputs).run();
  } catch (const std::exception& e) {
    if (error)
      *error = e.what();
    return false;
  }
}

CheckResult verify_certificate(const Certificate& cert)
{
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    std::string error;
    if (!check_arithmetic(cert.steps[i].arithmetic, cert.inputs, &error))
      return {false, i, error.empty() ? "relation does not hold: " + cert.steps[i].arithmetic : error};
    if (cert.steps[i].citation.empty())
      return {false, i, "step without citation"};
  }
  return {};
}

} // namespace fourman

namespace fourman {

nlohmann::json json_number(const Integer& v)
{
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return static_cast<long long>(v);
  return to_string(v);
}

nlohmann::json json_number(const Rational& v)
{
  if (is_integral(v))
    return json_number(to_integer(v));
  return to_string(v);
}

} // namespace fourman
