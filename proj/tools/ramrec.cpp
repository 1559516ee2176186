#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ramrec/chain_model.hpp"
#include "ramrec/coerce.hpp"
#include "ramrec/error.hpp"
#include "ramrec/eval.hpp"
#include "ramrec/hyperops.hpp"
#include "ramrec/laws.hpp"
#include "ramrec/monotone.hpp"
#include "ramrec/sexpr.hpp"
#include "ramrec/species.hpp"
#include "ramrec/workspace.hpp"

namespace {

using nlohmann::json;
using namespace ramrec;

Value parse_value(const std::string& s) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isdigit(c);
      }))
    fail(Errc::Parse, "expected a decimal natural, got '" + s + "'");
  return Value(s);
}

std::string read_stream_all(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// A term argument: a definition name, or an s-expression, or "-" for stdin.
TermPtr term_arg(const Workspace& ws, const std::string& spec) {
  std::string text = spec;
  if (text == "-") text = read_stream_all(std::cin);
  std::string trimmed = text;
  trimmed.erase(0, trimmed.find_first_not_of(" \t\r\n"));
  if (!trimmed.empty() && trimmed[0] == '(') {
    auto forms = parse_sexprs(text, "<arg>");
    if (forms.size() != 1) fail(Errc::Parse, "expected a single term expression");
    return read_term(forms[0], ws.n, ws.defs);
  }
  return ws.lookup(trimmed);
}

json law_json(const LawReport& rep, const Value& bound) {
  json laws = json::array();
  for (const auto& it : rep.items)
    laws.push_back({{"name", it.name},
                    {"bound", bound.str()},
                    {"pass", it.ok},
                    {"detail", it.detail}});
  return laws;
}

void print_report(const Workspace& ws, const std::string& suite, const LawReport& rep,
                  const Value& bound) {
  if (ws.json) {
    std::cout << json{{"suite", suite}, {"ok", rep.ok}, {"laws", law_json(rep, bound)}}.dump(2)
              << "\n";
    return;
  }
  for (const auto& it : rep.items) {
    std::cout << (it.ok ? "[pass] " : "[FAIL] ") << suite << ": " << it.name << " (bound "
              << bound << ")";
    if (!it.ok && !it.detail.empty()) std::cout << " " << it.detail;
    std::cout << "\n";
  }
}

int cmd_check(Workspace& ws, const std::string& file) {
  ws.load_file(file);
  if (ws.json) {
    json defs = json::array();
    for (const auto& name : ws.load_order) {
      const TermPtr& t = ws.defs.at(name);
      defs.push_back({{"name", name},
                      {"dom", t->dom().show()},
                      {"cod", t->cod().show()},
                      {"species", species_signature(t).show()},
                      {"strict", strict_check(t)}});
    }
    std::cout << json{{"n", ws.n}, {"definitions", defs}}.dump(2) << "\n";
    return 0;
  }
  for (const auto& name : ws.load_order) {
    const TermPtr& t = ws.defs.at(name);
    std::cout << name << " : " << t->dom().show() << " -> " << t->cod().show() << "\n";
  }
  return 0;
}

int cmd_eval(const Workspace& ws, const std::string& name,
             const std::vector<std::string>& raw_args) {
  TermPtr t = term_arg(ws, name);
  std::vector<Value> args;
  for (const auto& a : raw_args) args.push_back(parse_value(a));
  LevelTuple v = LevelTuple::from_args(t->dom(), args);
  LevelTuple r = denote(t, v, ws.fuel);
  std::vector<Value> out = r.to_args();
  if (ws.json) {
    json vals = json::array();
    for (const auto& x : out) vals.push_back(x.str());
    std::cout << json{{"name", name}, {"result", vals}, {"shape", r.shape.show()}}.dump(2)
              << "\n";
    return 0;
  }
  if (out.empty()) {
    std::cout << "()\n";
  } else {
    for (size_t i = 0; i < out.size(); ++i) std::cout << (i ? " " : "") << out[i];
    std::cout << "\n";
  }
  return 0;
}

int cmd_normalize(const Workspace& ws, const std::string& expr) {
  TermPtr t = term_arg(ws, expr);
  Value v = normalize_point(t, ws.fuel);
  if (ws.json) {
    std::cout << json{{"value", v.str()}, {"cod", t->cod().show()}}.dump(2) << "\n";
    return 0;
  }
  std::cout << v << "\n";
  return 0;
}

int cmd_species(const Workspace& ws, const std::string& name) {
  TermPtr t = term_arg(ws, name);
  SpeciesSig sig = species_signature(t);
  if (ws.json) {
    std::cout << json{{"name", name},
                      {"signature", sig.show()},
                      {"out_level", sig.out_level}}
                     .dump(2)
              << "\n";
    return 0;
  }
  std::cout << sig.show() << "\n";
  return 0;
}

CoercionOp parse_coercion(const std::string& s) {
  if (s.size() < 2 || (s[0] != 'T' && s[0] != 't' && s[0] != 'G' && s[0] != 'g'))
    fail(Errc::Parse, "coercion must look like T0 or G2, got '" + s + "'");
  size_t i = 1;
  if (s[i] == '_') ++i;
  if (i >= s.size() || !std::all_of(s.begin() + i, s.end(), [](unsigned char c) {
        return std::isdigit(c);
      }))
    fail(Errc::Parse, "coercion must look like T0 or G2, got '" + s + "'");
  CoKind kind = (s[0] == 'T' || s[0] == 't') ? CoKind::T : CoKind::G;
  return CoercionOp{kind, std::stoi(s.substr(i))};
}

int cmd_coerce(const Workspace& ws, const std::string& op_text, const std::string& target) {
  CoercionOp op = parse_coercion(op_text);
  std::string text = target == "-" ? read_stream_all(std::cin) : target;
  std::string trimmed = text;
  trimmed.erase(0, trimmed.find_first_not_of(" \t\r\n"));
  bool object_mode = false;
  if (!trimmed.empty() && trimmed[0] == '(') {
    auto forms = parse_sexprs(text, "<arg>");
    if (forms.size() != 1) fail(Errc::Parse, "expected a single expression");
    const SNode& form = forms[0];
    object_mode = !form.kids.empty() && form.kids[0].atom &&
                  (form.kids[0].text == "N" || form.kids[0].text == "obj");
    if (object_mode) {
      Obj out = apply_obj(op, read_object(form, ws.n));
      if (ws.json)
        std::cout << json{{"object", out.show()}}.dump(2) << "\n";
      else
        std::cout << out.show() << "\n";
      return 0;
    }
    TermPtr out = apply_mor(op, read_term(form, ws.n, ws.defs));
    if (ws.json)
      std::cout << json{{"term", out->show()},
                        {"dom", out->dom().show()},
                        {"cod", out->cod().show()}}
                       .dump(2)
                << "\n";
    else
      std::cout << out->show() << "\n";
    return 0;
  }
  TermPtr out = apply_mor(op, ws.lookup(trimmed));
  if (ws.json)
    std::cout << json{{"term", out->show()},
                      {"dom", out->dom().show()},
                      {"cod", out->cod().show()}}
                     .dump(2)
              << "\n";
  else
    std::cout << out->show() << "\n";
  return 0;
}

int cmd_enumerate(const Workspace& ws, int nn) {
  auto maps = enumerate_monoid(nn);
  if (ws.json) {
    auto cells = generate_cells(nn);
    std::cout << json{{"n", nn}, {"maps", maps.size()}, {"cells", cells.size()}}.dump(2)
              << "\n";
    return 0;
  }
  std::cout << maps.size() << " maps\n";
  return 0;
}

LawReport verify_suite(const Workspace& ws, const std::string& suite);

LawReport verify_all(const Workspace& ws) {
  LawReport rep;
  for (const char* s : {"comonoid", "cartesian", "derived", "recursion", "morphisms",
                        "squares"}) {
    LawReport part = verify_suite(ws, s);
    for (auto& it : part.items)
      rep.add(std::string(s) + ": " + it.name, it.ok, it.detail);
  }
  return rep;
}

LawReport verify_suite(const Workspace& ws, const std::string& suite) {
  int n = ws.n;
  const Value& bound = ws.bound;
  if (suite == "all") return verify_all(ws);
  if (suite == "comonoid") {
    LawReport rep;
    for (int k = 0; k < n; ++k) {
      LawReport part = comonoid_suite(k, n, bound, ws.fuel);
      for (auto& it : part.items)
        rep.add("N_" + std::to_string(k) + " " + it.name, it.ok, it.detail);
    }
    return rep;
  }
  if (suite == "cartesian") {
    LawReport rep;
    auto run = [&](const Obj& x, const Obj& y, const std::string& tag) {
      LawReport part = cartesian_suite(x, y, bound, ws.fuel);
      for (auto& it : part.items) rep.add(tag + " " + it.name, it.ok, it.detail);
    };
    run(Obj::level(n, 1), Obj::level(n, 1), "N_1,N_1");
    run(Obj::level(n, 0), Obj::level(n, 1), "N_0,N_1");
    return rep;
  }
  if (suite == "derived") return derived_structure_suite(n, bound, ws.fuel);
  if (suite == "recursion") {
    LawReport rep;
    for (const auto& [name, t] : stdlib_terms(n)) {
      Value b = bound;
      if (name == "exp") b = std::min(b, Value(4));
      if (name == "tetra") b = std::min(b, Value(2));
      std::string cap = b == bound ? "" : " [capped to " + b.str() + "]";
      LawReport part = recursion_diagram_suite(t, b, ws.fuel);
      for (auto& it : part.items) rep.add(name + " " + it.name + cap, it.ok, it.detail);
    }
    return rep;
  }
  if (suite == "morphisms") {
    LawReport rep;
    auto run = [&](const TermPtr& f, const std::string& tag, const Value& b) {
      LawReport part = comonoid_morphism_check(f, b, ws.fuel);
      for (auto& it : part.items) rep.add(tag + " " + it.name, it.ok, it.detail);
    };
    run(succ(n, 1), "succ_1", bound);
    run(id(Obj::level(n, 1)), "id", bound);
    run(comp(zero(n, 0), eraser(Obj::level(n, 1))), "const-zero", bound);
    run(stdlib_terms(n).at("plus"), "plus", std::min(bound, Value(6)));
    return rep;
  }
  if (suite == "squares") {
    LawReport rep;
    auto run = [&](const TermPtr& f, const std::string& tag) {
      int m = f->cod().single_level();
      if (m < 0 && !f->cod().is_unit()) m = f->cod().max_level();
      Value b = std::min(bound, Value(4));
      std::string cap = b == bound ? "" : " [capped to " + b.str() + "]";
      for (int k = 0; k <= m - 1; ++k) {
        auto [first, second] = safe_comp_square(f, k);
        DiagramCheck c = check_equal(first, second, b, ws.fuel);
        rep.add(tag + " square at stage " + std::to_string(k) + cap, c.pass,
                c.counterexample);
      }
    };
    run(succ(n, 1), "succ_1");
    run(dup(Obj::level(n, 1)), "dup_1");
    run(stdlib_terms(n).at("exp"), "exp");
    if (n >= 4) run(stdlib_terms(n).at("tetra"), "tetra");
    return rep;
  }
  fail(Errc::Parse, "unknown suite '" + suite +
                        "' (expected comonoid, cartesian, derived, recursion, morphisms, "
                        "squares, or all)");
}

int cmd_verify(const Workspace& ws, const std::string& suite) {
  LawReport rep = verify_suite(ws, suite);
  print_report(ws, suite, rep, ws.bound);
  return rep.ok ? 0 : 1;
}

int cmd_model(const Workspace& ws, int size) {
  int n = ws.n;
  Fin x(2);
  x[1] = 1;
  std::vector<ChainObj> lv = levels_of(x, n);
  ChainObj unit_chain = chain_unit(n);
  auto label = [&](const ChainObj& c) -> std::string {
    if (c == unit_chain) return "1^n";
    for (int j = 0; j < n; ++j)
      if (c == lv[j]) return "X^" + std::to_string(j);
    return c.show();
  };
  json rows = json::array();
  std::vector<std::string> text_rows;
  for (int k = 0; k <= n - 2; ++k) {
    for (CoKind kind : {CoKind::T, CoKind::G}) {
      std::string op = (kind == CoKind::T ? "T_" : "G_") + std::to_string(k);
      json cells = json::array();
      std::ostringstream line;
      line << op << ":";
      for (int j = 0; j < n; ++j) {
        ChainObj out = kind == CoKind::T ? apply_Te(k, lv[j]) : apply_Ge(k, lv[j]);
        std::string cell = label(out);
        cells.push_back(cell);
        line << " " << cell;
      }
      rows.push_back({{"op", op}, {"cells", cells}});
      text_rows.push_back(line.str());
    }
  }
  LawReport rep = comprehension_laws(n, size);
  if (ws.json) {
    std::cout << json{{"n", n},
                      {"table", rows},
                      {"laws", law_json(rep, Value(size))},
                      {"ok", rep.ok}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "levels of a two-element carrier, n=" << n << "\n";
    for (const auto& r : text_rows) std::cout << "  " << r << "\n";
    for (const auto& it : rep.items) {
      std::cout << (it.ok ? "[pass] " : "[FAIL] ") << it.name;
      if (!it.detail.empty()) std::cout << " (" << it.detail << ")";
      std::cout << "\n";
    }
  }
  return rep.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"free SM n-comprehension with recursion: checker and evaluator"};
  app.require_subcommand(1);

  int n = 4;
  long long fuel = kDefaultFuel;
  std::string bound_text = "8";
  bool strict = false;
  bool use_json = false;
  app.add_option("--n", n, "chain length (default 4)");
  app.add_option("--fuel", fuel, "recursion unfolding budget");
  app.add_option("--bound", bound_text, "enumeration bound per coordinate");
  app.add_flag("--strict", strict, "reject definitions outside the strict fragment");
  app.add_flag("--json", use_json, "emit JSON instead of text");

  std::string file, name, expr, op_text, target, suite;
  std::vector<std::string> eval_args;
  int enum_n = 3;
  int model_size = 2;

  CLI::App* c_check = app.add_subcommand("check", "type-check a term file");
  c_check->add_option("file", file, "term file, or - for stdin")->required();

  CLI::App* c_eval = app.add_subcommand("eval", "evaluate a named term on naturals");
  c_eval->add_option("name", name, "definition name or term expression")->required();
  c_eval->add_option("args", eval_args, "arguments, highest level first");
  c_eval->add_option("--file", file, "extra definitions to load");

  CLI::App* c_norm = app.add_subcommand("normalize", "normalize a closed point");
  c_norm->add_option("expr", expr, "definition name or term expression")->required();
  c_norm->add_option("--file", file, "extra definitions to load");

  CLI::App* c_species = app.add_subcommand("species", "argument species of a term");
  c_species->add_option("name", name, "definition name or term expression")->required();
  c_species->add_option("--file", file, "extra definitions to load");

  CLI::App* c_coerce = app.add_subcommand("coerce", "apply a level coercion");
  c_coerce->add_option("op", op_text, "T<k> or G<k>")->required();
  c_coerce->add_option("target", target, "definition, term, or object expression")
      ->required();
  c_coerce->add_option("--file", file, "extra definitions to load");

  CLI::App* c_enum = app.add_subcommand("enumerate", "count the coercion monoid");
  c_enum->add_option("chain", enum_n, "chain length")->required();

  CLI::App* c_verify = app.add_subcommand("verify", "run a law suite");
  c_verify->add_option("suite", suite, "comonoid|cartesian|derived|recursion|morphisms|squares|all")
      ->required();

  CLI::App* c_model = app.add_subcommand("model", "chain-model table and law report");
  c_model->add_option("--size", model_size, "carrier size bound (default 2)");

  CLI11_PARSE(app, argc, argv);

  try {
    Workspace ws = Workspace::make(n, strict);
    ws.fuel = fuel;
    ws.bound = parse_value(bound_text);
    ws.json = use_json;
    if (!file.empty() && !c_check->parsed()) ws.load_file(file);

    if (c_check->parsed()) return cmd_check(ws, file);
    if (c_eval->parsed()) return cmd_eval(ws, name, eval_args);
    if (c_norm->parsed()) return cmd_normalize(ws, expr);
    if (c_species->parsed()) return cmd_species(ws, name);
    if (c_coerce->parsed()) return cmd_coerce(ws, op_text, target);
    if (c_enum->parsed()) return cmd_enumerate(ws, enum_n);
    if (c_verify->parsed()) return cmd_verify(ws, suite);
    if (c_model->parsed()) return cmd_model(ws, model_size);
  } catch (const ramrec::Error& e) {
    std::cerr << "error: " << e.what();
    if (e.code() == Errc::Resource && e.steps >= 0)
      std::cerr << " (progress: " << e.steps << " steps)";
    std::cerr << "\n";
    return e.code() == Errc::Resource ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
