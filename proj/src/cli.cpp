#include "fourman/cli.hpp"

#include "fourman/config.hpp"
#include "fourman/dsl.hpp"
#include "fourman/error.hpp"
#include "fourman/normal_form.hpp"
#include "fourman/obstruction.hpp"
#include "fourman/reproduce.hpp"

#include <CLI11.hpp>

#include <ostream>

namespace fourman {

namespace {

constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_usage = 2;
constexpr int exit_internal = 3;

nlohmann::json flags_json(const StructureFlags& f)
{
  nlohmann::json j;
  j["spin"] = to_string(f.spin);
  j["cover_spin"] = to_string(f.cover_spin);
  j["parity"] = to_string(f.parity);
  j["w2type"] = to_string(f.w2type);
  j["pi1"] = f.pi1.str();
  j["sw_nontrivial"] = to_string(f.sw_nontrivial);
  j["sw_mod2_nontrivial"] = to_string(f.sw_mod2_nontrivial);
  j["symplectic"] = to_string(f.symplectic);
  j["kahler"] = to_string(f.kahler);
  j["minimal_general_type"] = to_string(f.minimal_general_type);
  j["acd"] = to_string(f.acd);
  j["labels"] = f.labels;
  j["provenance"] = f.provenance;
  return j;
}

nlohmann::json eval_json(const Expr& e, const Evaluation& ev)
{
  const auto& r = ev.record;
  nlohmann::json j;
  j["expr"] = print(e);
  j["chi"] = json_number(r.chi);
  j["tau"] = json_number(r.tau);
  j["b1"] = json_number(r.b1);
  j["c1sq"] = json_number(r.c1sq());
  j["c2"] = json_number(r.c2());
  j["chi_h"] = json_number(r.chi_h());
  j["b2plus"] = json_number(r.b2plus());
  j["b2minus"] = json_number(r.b2minus());
  j["flags"] = flags_json(ev.flags);
  auto split = derive_betti(r);
  if (split.warning)
    j["warning"] = *split.warning;
  return j;
}

void print_eval(std::ostream& out, const Expr& e, const Evaluation& ev)
{
  const auto& r = ev.record;
  const auto& f = ev.flags;
  out << "expr: " << print(e) << "\n";
  out << "chi=" << to_string(r.chi) << " tau=" << to_string(r.tau) << " b1=" << to_string(r.b1) << "\n";
  out << "c1^2=" << to_string(r.c1sq()) << " c2=" << to_string(r.c2()) << " chi_h=" << to_string(r.chi_h())
      << " b2+=" << to_string(r.b2plus()) << " b2-=" << to_string(r.b2minus()) << "\n";
  auto split = derive_betti(r);
  if (split.warning)
    out << "warning: " << *split.warning << "\n";
  auto field = [&](const char* name, std::string_view value) {
    out << name << ": " << value;
    auto c = f.citation(name);
    if (!c.empty())
      out << "  [" << c << "]";
    out << "\n";
  };
  field("pi1", f.pi1.str());
  field("spin", to_string(f.spin));
  field("cover_spin", to_string(f.cover_spin));
  field("parity", to_string(f.parity));
  field("w2type", to_string(f.w2type));
  field("sw_nontrivial", to_string(f.sw_nontrivial));
  field("sw_mod2_nontrivial", to_string(f.sw_mod2_nontrivial));
  field("symplectic", to_string(f.symplectic));
  field("kahler", to_string(f.kahler));
  field("minimal_general_type", to_string(f.minimal_general_type));
  field("acd", to_string(f.acd));
  for (const auto& l : f.labels)
    out << "label: " << l << "\n";
}

void print_certificate(std::ostream& out, const Certificate& c)
{
  out << "verdict: " << c.verdict << "\n";
  for (const auto& s : c.steps) {
    out << "  - " << s.rule << "\n";
    out << "      " << s.arithmetic << "\n";
    out << "      [" << s.citation << "]\n";
  }
  for (const auto& a : c.assumptions)
    out << "  assumption: " << a << "\n";
}

std::pair<Integer, Integer> parse_bounds(const std::string& text)
{
  auto comma = text.find(',');
  if (comma == std::string::npos)
    throw SyntaxError("--bounds expects X,Y", 1, 1);
  auto x = parse_integer(text.substr(0, comma));
  auto y = parse_integer(text.substr(comma + 1));
  if (!x || !y)
    throw SyntaxError("--bounds expects two integers", 1, static_cast<int>(comma) + 1);
  return {*x, *y};
}

Rational parse_number(const std::string& text, const char* what)
{
  auto v = parse_rational(text);
  if (!v)
    throw SyntaxError(std::string(what) + " expects a rational number", 1, 1);
  return *v;
}

int exit_for(ErrorKind kind)
{
  switch (kind) {
  case ErrorKind::MismatchedInvariants:
  case ErrorKind::InconsistentFlags:
    return exit_internal;
  default:
    return exit_usage;
  }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Invariants, obstructions and normal forms for 4-manifold constructions", "fourman"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "key=value file with c, n0, n1");

  bool json = false;
  std::string expr_a, expr_b;

  auto* eval = app.add_subcommand("eval", "invariants and structure flags");
  eval->add_option("expr", expr_a)->required();
  eval->add_flag("--json", json);

  auto* check = app.add_subcommand("check", "obstruction and homeomorphism checks");
  check->require_subcommand(1);
  auto* einstein = check->add_subcommand("einstein", "LeBrun / Ishida-LeBrun certificate");
  einstein->add_option("expr", expr_a)->required();
  einstein->add_flag("--json", json);
  auto* ht = check->add_subcommand("ht", "Hitchin-Thorpe inequality");
  ht->add_option("expr", expr_a)->required();
  ht->add_flag("--json", json);
  auto* homeo = check->add_subcommand("homeo", "Hambleton-Kreck / Freedman comparison");
  homeo->add_option("a", expr_a)->required();
  homeo->add_option("b", expr_b)->required();
  homeo->add_flag("--json", json);

  auto* norm = app.add_subcommand("normalize", "rewrite to a canonical connected sum");
  norm->add_option("expr", expr_a)->required();
  norm->add_flag("--json", json);

  std::string d_text = "2", eps_text, c_text, bounds_text;
  bool serial = false;
  auto* enumerate = app.add_subcommand("enumerate", "lattice regions as CSV or JSON");
  enumerate->require_subcommand(1);
  auto* bk = enumerate->add_subcommand("bk", "symplectic geography region 0 < y <= (9-eps')x - c");
  auto* fa = enumerate->add_subcommand("free-actions", "(n,m) carrying free Z/d actions without invariant Einstein metrics");
  for (auto* sub : {bk, fa}) {
    sub->add_option("--eps", eps_text)->required();
    sub->add_option("--c", c_text);
    sub->add_option("--bounds", bounds_text)->required();
    sub->add_flag("--json", json);
    sub->add_flag("--serial", serial);
  }
  fa->add_option("--d", d_text)->required();

  std::string target;
  auto* repro = app.add_subcommand("reproduce", "recompute a published construction");
  repro->add_option("target", target)->required()->check(CLI::IsMember(reproduce_targets()));

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    GeographyConfig config;
    if (!config_path.empty())
      config = load_config(config_path);

    if (*eval) {
      Expr e = parse_expr(expr_a);
      auto ev = evaluate(e);
      if (json)
        out << eval_json(e, ev).dump(2) << "\n";
      else
        print_eval(out, e, ev);
      return exit_ok;
    }
    if (*einstein) {
      auto c = check_einstein(parse_expr(expr_a));
      if (json)
        out << c.to_json().dump(2) << "\n";
      else
        print_certificate(out, c);
      return exit_ok;
    }
    if (*ht) {
      auto rec = eval_invariants(parse_expr(expr_a));
      auto c = hitchin_thorpe(rec);
      bool ok = c.verdict == verdict::ht_ok;
      if (json)
        out << c.to_json().dump(2) << "\n";
      else
        out << "2χ+3τ=" << to_string(rec.c1sq()) << ", 2χ−3τ=" << to_string(2 * rec.chi - 3 * rec.tau) << ", "
            << (ok ? "ok" : "violated") << "\n";
      return ok ? exit_ok : exit_negative;
    }
    if (*homeo) {
      auto c = homeo_equal(parse_expr(expr_a), parse_expr(expr_b));
      if (json)
        out << c.to_json().dump(2) << "\n";
      else
        print_certificate(out, c);
      return c.verdict == verdict::not_homeomorphic ? exit_negative : exit_ok;
    }
    if (*norm) {
      Expr e = parse_expr(expr_a);
      NormalizeOptions opts;
      opts.wall_n0 = config.n0;
      auto nf = normalize(e, opts);
      if (json) {
        nlohmann::json j;
        j["input"] = print(e);
        j["form"] = print(nf.form);
        j["plain"] = print_plain(nf.form);
        j["canonical"] = nf.canonical;
        j["spin_mode"] = nf.spin_mode;
        j["trace"] = nlohmann::json::array();
        for (const auto& t : nf.trace)
          j["trace"].push_back({{"rule", t.rule}, {"citation", t.citation}, {"before", t.before}, {"after", t.after}});
        out << j.dump(2) << "\n";
      } else {
        for (const auto& t : nf.trace)
          out << t.rule << ": " << t.after << "\n";
        out << print_plain(nf.form) << "\n";
        if (!nf.canonical)
          out << "(not canonical)\n";
      }
      return exit_ok;
    }
    if (*bk) {
      auto [x, y] = parse_bounds(bounds_text);
      BkQuery q{parse_number(eps_text, "--eps"), c_text.empty() ? config.c : parse_number(c_text, "--c"), x, y};
      auto pts = bk_region(q, !serial);
      if (json) {
        auto j = nlohmann::json::array();
        for (const auto& p : pts)
          j.push_back({{"x", json_number(p.x)}, {"y", json_number(p.y)}, {"verdict", p.verdict}});
        out << j.dump(2) << "\n";
      } else {
        out << "x,y,verdict\n";
        for (const auto& p : pts)
          out << to_string(p.x) << "," << to_string(p.y) << "," << p.verdict << "\n";
      }
      return exit_ok;
    }
    if (*fa) {
      auto [n, m] = parse_bounds(bounds_text);
      auto d = parse_integer(d_text);
      if (!d || *d < 2)
        throw SyntaxError("--d expects an integer >= 2", 1, 1);
      GeographyQuery q{*d, parse_number(eps_text, "--eps"), c_text.empty() ? config.c : parse_number(c_text, "--c"),
                       n, m};
      auto pts = free_action_region(q, !serial);
      if (json) {
        auto j = nlohmann::json::array();
        for (const auto& p : pts)
          j.push_back({{"n", json_number(p.n)}, {"m", json_number(p.m)}, {"k", json_number(p.k)}, {"verdict", p.verdict}});
        out << j.dump(2) << "\n";
      } else {
        out << "n,m,k,verdict\n";
        for (const auto& p : pts)
          out << to_string(p.n) << "," << to_string(p.m) << "," << to_string(p.k) << "," << p.verdict << "\n";
      }
      return exit_ok;
    }
    if (*repro) {
      auto r = reproduce(target, config);
      out << r.text;
      return r.ok ? exit_ok : exit_internal;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_for(e.kind());
  }
  return exit_usage;
}

} // namespace fourman
