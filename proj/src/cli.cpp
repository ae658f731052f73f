#include "noet/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "noet/galois.hpp"
#include "noet/noether.hpp"
#include "noet/reports.hpp"

namespace noet {

namespace {

using nlohmann::json;

constexpr const char* kGrammar =
    "formula grammar: variables [a-z][a-z0-9]*; integer and a/b rational literals;\n"
    "operators + - * ^; atoms p = q, p != q; connectives !, &, |, ->;\n"
    "quantifiers 'exists v.', 'forall v.'; literals true, false; parentheses.\n"
    "family file: '@family i in 1..' header plus one template formula, or plain\n"
    "formulas one per line ('#' comments allowed).";

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("IoError", "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<uint64_t> parse_indices(const std::string& s) {
  std::vector<uint64_t> out;
  for (const auto& part : split(s, ',')) out.push_back(std::stoull(part));
  return out;
}

std::map<std::string, Rational> parse_point(const std::string& s) {
  std::map<std::string, Rational> out;
  for (const auto& part : split(s, ',')) {
    auto eq = part.find('=');
    if (eq == std::string::npos) fail("SyntaxError", "point entry '" + part + "' needs var=value");
    out[part.substr(0, eq)] = Rational::parse(part.substr(eq + 1));
  }
  return out;
}

struct Ctx {
  std::ostream& out;
  std::string field = "q";
  uint32_t degree_bound = 2;
  uint64_t scan_limit = 1000;
  uint64_t samples = 10000;
  uint64_t seed = 0;
  std::string format;  // "", "json", "text"

  bool json_default(bool dflt) const {
    if (format == "json") return true;
    if (format == "text") return false;
    return dflt;
  }
  void emit(const json& j) const { out << j.dump(2) << "\n"; }
};

PrimeField field_of(const std::string& descriptor) {
  Domain d = Domain::parse(descriptor);
  if (d.is_rationals()) fail("DomainMismatch", "this command needs a prime field fp:<p>");
  return PrimeField(d.p());
}

AffineSpace space_for(const FamilyPresentation& fam, const std::string& field) {
  auto vars = fam.free_vars();
  if (vars.empty()) fail("ArityError", "the formulas bind no free variables");
  return AffineSpace(field_of(field), {vars.begin(), vars.end()});
}

int run_parse(const Ctx& ctx, const std::string& formula_path) {
  PredFormula f = parse_formula(read_file(formula_path));
  if (ctx.json_default(false)) {
    json j;
    j["command"] = "parse";
    j["formula"] = f.to_string();
    j["free_vars"] = json::array();
    for (const auto& v : f.free_vars()) j["free_vars"].push_back(v);
    j["prefix_depth"] = f.prefix().size();
    ctx.emit(j);
  } else {
    ctx.out << f.to_string() << "\n";
  }
  return 0;
}

int run_eval(const Ctx& ctx, const std::string& formula_path, const std::string& point_text) {
  PredFormula f = parse_formula(read_file(formula_path));
  auto point = parse_point(point_text);
  bool value;
  Domain dom = ctx.field == "qbar" ? Domain::rationals() : Domain::parse(ctx.field);
  if (dom.is_rationals()) {
    if (!f.is_quantifier_free())
      fail("DomainMismatch", "quantified evaluation needs a finite field fp:<p>");
    value = f.matrix().eval_at(point);
  } else {
    PrimeField fp(dom.p());
    auto vars = f.free_vars();
    AffineSpace space(fp, vars.empty() ? std::vector<std::string>{"x"}
                                       : std::vector<std::string>{vars.begin(), vars.end()});
    std::vector<uint64_t> pt;
    for (const auto& v : space.vars()) {
      auto it = point.find(v);
      if (it == point.end()) fail("MissingAssignment", "point misses '" + v + "'");
      pt.push_back(fp.reduce(it->second));
    }
    value = eval_pred_over_fp(f, space, pt);
  }
  if (ctx.json_default(false)) {
    json j;
    j["command"] = "eval";
    j["field"] = ctx.field;
    j["result"] = value;
    ctx.emit(j);
  } else {
    ctx.out << (value ? "true" : "false") << "\n";
  }
  return 0;
}

int run_galois(const Ctx& ctx, const std::string& family_path) {
  FamilyPresentation fam = FamilyPresentation::load(family_path);
  AffineSpace space = space_for(fam, ctx.field);
  if (!fam.end_index())
    fail("ArityError", "galois needs a finite (explicit) formula list");
  std::vector<PredFormula> formulas;
  for (uint64_t i = fam.start_index(); i <= *fam.end_index(); ++i)
    formulas.push_back(fam.instantiate(i));
  PointSet sol = solution_set_pred(formulas, space);
  BoundedUniverse universe(space, ctx.degree_bound);
  auto held = hold_set(sol, universe);

  json j;
  j["command"] = "galois";
  j["field"] = ctx.field;
  j["degree_bound"] = ctx.degree_bound;
  j["universe_size"] = universe.size();
  j["space_size"] = space.size();
  j["solution_count"] = sol.count();
  json pts = json::array();
  for (uint64_t idx : sol.indices()) {
    json point = json::object();
    auto coords = space.decode(idx);
    for (size_t i = 0; i < coords.size(); ++i) point[space.vars()[i]] = coords[i];
    pts.push_back(std::move(point));
  }
  j["solution_points"] = std::move(pts);
  json hs = json::array();
  for (const auto& f : held) hs.push_back(f.to_string());
  j["hold_set"] = std::move(hs);
  j["hold_count"] = held.size();
  if (ctx.json_default(true)) {
    ctx.emit(j);
  } else {
    ctx.out << "solution points: " << sol.count() << " of " << space.size() << "\n"
            << "equations of degree <= " << ctx.degree_bound << " vanishing there: "
            << held.size() << " of " << universe.size() << "\n";
  }
  return 0;
}

int run_net_basis(const Ctx& ctx, const std::string& family_path) {
  FamilyPresentation fam = FamilyPresentation::load(family_path);
  AffineSpace space = space_for(fam, ctx.field);
  NetBasisResult res = net_finite_basis(fam, space, ctx.scan_limit);
  json j = net_basis_json(res, space);
  j["command"] = "net-basis";
  j["field"] = ctx.field;
  j["scan_limit"] = ctx.scan_limit;
  if (ctx.json_default(true)) {
    ctx.emit(j);
  } else {
    ctx.out << "kept " << res.kept.size() << " of " << res.scanned << " scanned formulas\n";
  }
  return 0;
}

int run_qe(const Ctx& ctx, const std::string& formula_path) {
  PredFormula f = parse_formula(read_file(formula_path));
  PropFormula out = eliminate_all(f);
  if (ctx.json_default(false)) {
    json j;
    j["command"] = "qe";
    j["input"] = f.to_string();
    j["result"] = out.to_string();
    ctx.emit(j);
  } else {
    ctx.out << out.to_string() << "\n";
  }
  return 0;
}

int run_decide(const Ctx& ctx, const std::string& formula_path) {
  PredFormula f = parse_formula(read_file(formula_path));
  bool value = decide_sentence_acf(f);
  if (ctx.json_default(false)) {
    json j;
    j["command"] = "decide";
    j["result"] = value;
    ctx.emit(j);
  } else {
    ctx.out << (value ? "true" : "false") << "\n";
  }
  return 0;
}

int run_subcover(const Ctx& ctx, const std::string& family_path, size_t dim) {
  FormulaFamilyCover family(FamilyPresentation::load(family_path));
  SubcoverReport rep = extract_subcover(family, dim, ctx.scan_limit);
  auto chosen = collect_pieces(family, rep.indices, rep.goal_used, ctx.scan_limit + 100);
  json verification;
  std::set<std::string> vset;
  for (const auto& v : chosen) vset.insert(v.ambient.begin(), v.ambient.end());
  std::vector<std::string> vars(vset.begin(), vset.end());
  if (rep.status == SubcoverReport::Status::Ok && dim == 1) {
    std::string why;
    bool verified = verify_subcover_exact_1d(chosen, &why);
    verification = exact_1d_json(verified, why);
  } else {
    PrimeField fp = field_of(ctx.field == "q" ? "fp:2147483647" : ctx.field);
    SampleReport sample =
        verify_cover_sample(chosen, dim, fp.p(), ctx.samples, ctx.seed);
    verification = sample_json(sample, vars);
  }
  json j = subcover_json(rep, std::move(verification));
  j["command"] = "subcover";
  if (ctx.json_default(true)) {
    ctx.emit(j);
  } else {
    ctx.out << "status: " << j["status"].get<std::string>() << "\n";
  }
  return rep.status == SubcoverReport::Status::Ok ? 0 : 2;
}

int run_verify_sample(const Ctx& ctx, const std::string& family_path,
                      const std::string& indices_text, size_t dim) {
  FormulaFamilyCover family(FamilyPresentation::load(family_path));
  auto J = parse_indices(indices_text);
  auto chosen = collect_pieces(family, J, true, ctx.scan_limit + 100);
  PrimeField fp = field_of(ctx.field == "q" ? "fp:2147483647" : ctx.field);
  SampleReport sample = verify_cover_sample(chosen, dim, fp.p(), ctx.samples, ctx.seed);
  std::set<std::string> vset;
  for (const auto& v : chosen) vset.insert(v.ambient.begin(), v.ambient.end());
  std::vector<std::string> vars(vset.begin(), vset.end());
  json j = sample_json(sample, vars);
  j["command"] = "verify-sample";
  j["indices"] = J;
  if (ctx.json_default(true)) {
    ctx.emit(j);
  } else {
    ctx.out << "uncovered: " << sample.uncovered_count << " of " << sample.checked << "\n";
  }
  return sample.uncovered_count == 0 ? 0 : 2;
}

int run_lognet(const Ctx& ctx, const std::string& points_text, const std::string& indices_text) {
  std::vector<Rational> enumeration;
  for (const auto& part : split(points_text, ',')) enumeration.push_back(Rational::parse(part));
  std::vector<uint64_t> J;
  if (indices_text.empty())
    for (uint64_t j = 1; j <= enumeration.size(); ++j) J.push_back(j);
  else
    J = parse_indices(indices_text);
  WitnessReport rep = lognet_refute_infinite(enumeration, J);
  json j = witness_json(rep);
  if (ctx.json_default(true))
    ctx.emit(j);
  else
    ctx.out << "witness x = " << rep.witness.at("x").to_string() << "\n";
  return 0;
}

int run_dennet_r(const Ctx& ctx, const std::string& indices_text) {
  WitnessReport rep = dennet_r_witness(parse_indices(indices_text));
  json j = witness_json(rep);
  if (ctx.json_default(true))
    ctx.emit(j);
  else
    ctx.out << "witness x = " << rep.witness.at("x").to_string() << "\n";
  return 0;
}

int run_dennet(const Ctx& ctx, const std::string& family_path, const std::string& goal_path,
               bool with_qe) {
  FamilyPresentation premises = FamilyPresentation::load(family_path);
  PredFormula goal = parse_formula(read_file(goal_path));
  WitnessReport rep;
  if (with_qe) {
    rep = dennet_acf_check(premises, goal, ctx.scan_limit);
  } else {
    if (!goal.is_quantifier_free())
      fail("NotQuantifierFree", "dennet0 needs a quantifier-free goal");
    rep = dennet0_check(premises, goal.matrix(), ctx.scan_limit);
  }
  json j = witness_json(rep);
  if (ctx.json_default(true))
    ctx.emit(j);
  else
    ctx.out << "status: " << rep.status << "\n";
  return rep.ok() ? 0 : 2;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"noet - noetherianity of logical formulas over fields"};
  app.footer(kGrammar);
  app.require_subcommand(1);

  Ctx ctx{out};
  std::string formula_path, family_path, goal_path, point_text, points_text, indices_text;
  size_t dim = 1;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--field", ctx.field, "field descriptor: q | qbar | fp:<p>");
    sub->add_option("--degree-bound", ctx.degree_bound, "universe degree bound");
    sub->add_option("--scan-limit", ctx.scan_limit, "candidates examined per scan")
        ->check(CLI::PositiveNumber);
    sub->add_option("--samples", ctx.samples, "sample count")->check(CLI::PositiveNumber);
    sub->add_option("--seed", ctx.seed, "RNG seed (echoed in reports)");
    sub->add_option("--format", ctx.format, "output format: json | text")
        ->check(CLI::IsMember({"json", "text"}));
  };

  CLI::App* parse_cmd = app.add_subcommand("parse", "parse and canonically print a formula");
  parse_cmd->add_option("--formula", formula_path, "formula file")->required();
  add_common(parse_cmd);

  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a formula at a point");
  eval_cmd->add_option("--formula", formula_path, "formula file")->required();
  eval_cmd->add_option("--point", point_text, "point, e.g. x=1,y=2/3")->required();
  add_common(eval_cmd);

  CLI::App* galois_cmd =
      app.add_subcommand("galois", "solution set and degree-bounded hold set over F_p");
  galois_cmd->add_option("--family", family_path, "formula list file")->required();
  add_common(galois_cmd);

  CLI::App* net_cmd = app.add_subcommand("net-basis", "greedy finite basis over F_p");
  net_cmd->add_option("--family", family_path, "formula family file")->required();
  add_common(net_cmd);

  CLI::App* qe_cmd = app.add_subcommand("qe", "eliminate quantifiers over ACF(0)");
  qe_cmd->add_option("--formula", formula_path, "formula file")->required();
  add_common(qe_cmd);

  CLI::App* decide_cmd = app.add_subcommand("decide", "decide a sentence over ACF(0)");
  decide_cmd->add_option("--formula", formula_path, "formula file")->required();
  add_common(decide_cmd);

  CLI::App* sub_cmd = app.add_subcommand("subcover", "finite subcover descent (Theorem 3)");
  sub_cmd->add_option("--family", family_path, "cover family file")->required();
  sub_cmd->add_option("--dim", dim, "ambient dimension (1 or 2)")->required();
  add_common(sub_cmd);

  CLI::App* vs_cmd = app.add_subcommand("verify-sample", "sampled coverage check");
  vs_cmd->add_option("--family", family_path, "cover family file")->required();
  vs_cmd->add_option("--indices", indices_text, "chosen piece indices, e.g. 1,2")->required();
  vs_cmd->add_option("--dim", dim, "ambient dimension")->required();
  add_common(vs_cmd);

  CLI::App* lognet_cmd = app.add_subcommand("lognet", "Theorem 1 refutation witness");
  lognet_cmd->add_option("--points", points_text, "enumerated rationals, e.g. 0,1,2")->required();
  lognet_cmd->add_option("--indices", indices_text, "subset J (default: all)");
  add_common(lognet_cmd);

  CLI::App* dr_cmd = app.add_subcommand("dennet-r", "Theorem 2 witness over R");
  dr_cmd->add_option("--indices", indices_text, "finite J, e.g. 1,2,3,4")->required();
  add_common(dr_cmd);

  CLI::App* da_cmd = app.add_subcommand("dennet-acf", "Theorem 4 pipeline over ACF(0)");
  da_cmd->add_option("--family", family_path, "premise family file")->required();
  da_cmd->add_option("--goal", goal_path, "goal formula file")->required();
  add_common(da_cmd);

  CLI::App* d0_cmd = app.add_subcommand("dennet0", "Corollary pipeline (propositional)");
  d0_cmd->add_option("--family", family_path, "premise family file")->required();
  d0_cmd->add_option("--goal", goal_path, "goal formula file")->required();
  add_common(d0_cmd);

  std::vector<std::string> argv = args;
  std::reverse(argv.begin(), argv.end());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help() << "\n";
      return 0;
    }
    err << "usage error: " << e.what() << "\n\n" << app.help() << "\n";
    return 1;
  }

  try {
    if (*parse_cmd) return run_parse(ctx, formula_path);
    if (*eval_cmd) return run_eval(ctx, formula_path, point_text);
    if (*galois_cmd) return run_galois(ctx, family_path);
    if (*net_cmd) return run_net_basis(ctx, family_path);
    if (*qe_cmd) return run_qe(ctx, formula_path);
    if (*decide_cmd) return run_decide(ctx, formula_path);
    if (*sub_cmd) return run_subcover(ctx, family_path, dim);
    if (*vs_cmd) return run_verify_sample(ctx, family_path, indices_text, dim);
    if (*lognet_cmd) return run_lognet(ctx, points_text, indices_text);
    if (*dr_cmd) return run_dennet_r(ctx, indices_text);
    if (*da_cmd) return run_dennet(ctx, family_path, goal_path, true);
    if (*d0_cmd) return run_dennet(ctx, family_path, goal_path, false);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << app.help() << "\n";
  return 1;
}

}  // namespace noet
