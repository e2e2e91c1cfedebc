#include "modtriple/app/commands.hpp"

#include <CLI11.hpp>

#include <functional>
#include <optional>

#include "modtriple/app/suites.hpp"
#include "modtriple/app/text_io.hpp"
#include "modtriple/error.hpp"

namespace modtriple {

using io::json;

namespace {

constexpr int kAffirmative = 0;
constexpr int kNegative = 1;
constexpr int kError = 2;

struct Outcome {
  int code = kAffirmative;
  std::string text;
  json result = json::object();
};

struct Inputs {
  std::string cycle, source, target, triple, triples, map, from, to, iy, mlog, ne, divisor, total, first, second;
};

std::string need(const std::string& value, const char* flag) {
  if (value.empty()) throw Error(ErrorKind::InvalidArgument, std::string("missing ") + flag);
  return value;
}

std::optional<ModulusTriple> optional_triple(const std::string& v) {
  if (v.empty()) return std::nullopt;
  return io::triple_from_json(io::load_json(v));
}

Cycle load_cycle(const Inputs& in) {
  return io::cycle_from_json(io::load_json(need(in.cycle, "--cycle")), optional_triple(in.source), optional_triple(in.target));
}

ModulusTriple load_triple(const Inputs& in) { return io::triple_from_json(io::load_json(need(in.triple, "--triple"))); }
RationalMap load_map(const Inputs& in) { return io::map_from_json(io::load_json(need(in.map, "--map"))); }

std::string yes_no(bool b) { return b ? "true" : "false"; }

Outcome verdict(bool ok, const std::string& yes, const std::string& no) {
  Outcome o;
  o.code = ok ? kAffirmative : kNegative;
  o.text = ok ? yes : no;
  return o;
}

Outcome check_op(const std::string& what, const Inputs& in) {
  if (what == "admissible") {
    Cycle c = load_cycle(in);
    AdmissibilityReport rep = admissibility_report(c);
    Outcome o = verdict(rep.admissible, "admissible", "not admissible");
    json comps = json::array();
    for (size_t i = 0; i < c.components.size(); ++i) {
      const auto& v = rep.components[i];
      comps.push_back(json{{"component", io::component_to_json(c.components[i])},
                           {"in_cor", v.in_cor},
                           {"left_proper", v.left_proper},
                           {"modulus_condition", v.modulus}});
      o.text += "\n  " + c.components[i].to_string() + ": in_cor " + yes_no(v.in_cor) + ", left_proper " +
                yes_no(v.left_proper) + ", modulus " + yes_no(v.modulus);
    }
    o.result = json{{"admissible", rep.admissible}, {"components", comps}};
    return o;
  }
  if (what == "position") {
    Cycle c = load_cycle(in);
    auto pos = position_classify(c);
    bool all_vg = true;
    json comps = json::array();
    std::string lines;
    for (size_t i = 0; i < pos.size(); ++i) {
      all_vg = all_vg && pos[i].very_good;
      comps.push_back(json{{"component", io::component_to_json(c.components[i])},
                           {"bad", pos[i].bad},
                           {"very_good", pos[i].very_good},
                           {"excellent", pos[i].excellent}});
      lines += "\n  " + c.components[i].to_string() + ": bad " + yes_no(pos[i].bad) + ", very_good " +
               yes_no(pos[i].very_good) + ", excellent " + yes_no(pos[i].excellent);
    }
    Outcome o = verdict(all_vg, "very good position", "not in very good position");
    o.text += lines;
    o.result = json{{"components", comps}};
    return o;
  }
  if (what == "class") {
    ModulusTriple t = load_triple(in);
    ClassReport r = classify(t);
    Outcome o;
    o.result = json{{"disjoint", r.disjoint}, {"saturated", r.saturated}, {"min_class", r.min_class},
                    {"man_class", r.man_class}, {"proper", r.proper}, {"coadmissible", r.coadmissible},
                    {"modulus_pair", r.modulus_pair}};
    o.text = t.to_string();
    for (const auto& [k, v] : o.result.items()) o.text += "\n  " + k + ": " + yes_no(v.get<bool>());
    return o;
  }
  if (what == "iy" || what == "mlog") {
    RationalMap f = load_map(in);
    json a = io::load_json(need(in.from, "--from")), b = io::load_json(need(in.to, "--to"));
    bool morph, adm;
    if (what == "iy") {
      IYObject o1 = io::iy_from_json(a), o2 = io::iy_from_json(b);
      morph = is_iy_morphism(f, o1, o2);
      adm = is_admissible(graph_unchecked(f, iy_to_triple(o1), iy_to_triple(o2)));
    } else {
      MlogObject o1 = io::mlog_from_json(a), o2 = io::mlog_from_json(b);
      morph = is_mlog_morphism(f, o1, o2);
      adm = is_admissible(graph_unchecked(f, mlog_to_triple(o1), mlog_to_triple(o2)));
    }
    Outcome o = verdict(morph, "morphism", "not a morphism");
    o.text += " (graph between the triples: " + std::string(adm ? "admissible" : "not admissible") + ")";
    o.result = json{{"morphism", morph}, {"graph_admissible", adm}};
    return o;
  }
  if (what == "ne-hom") {
    NePair x = io::ne_from_json(io::load_json(need(in.from, "--from")));
    NePair y = io::ne_from_json(io::load_json(need(in.to, "--to")));
    std::vector<Component> comps;
    if (!in.cycle.empty()) {
      const json j = io::load_json(in.cycle);
      for (const auto& c : j.at("components")) comps.push_back(io::component_from_json(c));
    } else {
      comps.push_back(Component::make(RationalMap::identity(), load_map(in)));
    }
    bool member = ne_hom_member(comps, x, y);
    bool adm = is_admissible(Cycle::make(ne_embed(x), ne_embed(y), comps));
    Outcome o = verdict(member, "member", "not a member");
    o.text += " (between the embedded triples: " + std::string(adm ? "admissible" : "not admissible") + ")";
    o.result = json{{"member", member}, {"embedded_admissible", adm}};
    return o;
  }
  if (what == "sigma-fin" || what == "minimal") {
    MorphismFlags f = morphism_flags(load_cycle(in));
    bool v = what == "minimal" ? f.minimal : f.sigma_fin;
    Outcome o = verdict(v, what + ": true", what + ": false");
    o.result = json{{"dominant", f.dominant}, {"minimal", f.minimal}, {"finite", f.finite},
                    {"finite_over_target", f.finite_over_target}, {"sigma_fin", f.sigma_fin}};
    return o;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown check \"" + what + "\"");
}

Outcome triple_outcome(const ModulusTriple& t) { return Outcome{kAffirmative, t.to_string(), io::triple_to_json(t)}; }

Outcome apply_op(const std::string& op, const Inputs& in) {
  if (op == "dual") return triple_outcome(dual(load_triple(in)));
  if (op == "separate") {
    Separation s = separation(load_triple(in));
    Outcome o = triple_outcome(s.triple);
    o.text += "\nfundamental: " + s.fundamental.to_string();
    o.result = json{{"triple", io::triple_to_json(s.triple)}, {"fundamental", s.fundamental.to_string()}};
    return o;
  }
  if (op == "kappa") return triple_outcome(iy_to_triple(io::iy_from_json(io::load_json(need(in.iy, "--iy")))));
  if (op == "kappa-inv") {
    IYObject o = triple_to_iy(load_triple(in));
    return Outcome{kAffirmative, "Y = " + o.Y.to_string() + ", Z = " + o.Z.to_string(), io::iy_to_json(o)};
  }
  if (op == "mlog-kappa") return triple_outcome(mlog_to_triple(io::mlog_from_json(io::load_json(need(in.mlog, "--mlog")))));
  if (op == "mlog-kappa-inv") {
    MlogObject o = triple_to_mlog(load_triple(in));
    return Outcome{kAffirmative, "boundary = " + o.boundary.to_string() + ", modulus = " + o.modulus.to_string(), io::mlog_to_json(o)};
  }
  if (op == "ne-embed") return triple_outcome(ne_embed(io::ne_from_json(io::load_json(need(in.ne, "--ne")))));
  if (op == "g") return triple_outcome(g_shrink(load_triple(in)));
  if (op == "q") {
    ModulusPair m = q_right(load_triple(in));
    return Outcome{kAffirmative, "(" + m.total.to_string() + ", " + m.infinity.to_string() + ")", io::pair_to_json(m)};
  }
  if (op == "p") {
    json arr = io::load_json(need(in.triples, "--triples"));
    if (!arr.is_array()) throw Error(ErrorKind::ParseError, "--triples expects an array of triples");
    TripleSum ts;
    for (const auto& t : arr) ts.push_back(io::triple_from_json(t));
    Outcome o;
    o.result = json::array();
    for (const auto& m : p_left(ts)) {
      o.result.push_back(io::pair_to_json(m));
      o.text += (o.text.empty() ? "" : " + ") + ("(" + m.total.to_string() + ", " + m.infinity.to_string() + ")");
    }
    if (o.text.empty()) o.text = "0";
    return o;
  }
  if (op == "s") {
    if (!in.cycle.empty()) {
      Cycle c = extend_correspondence(load_cycle(in));
      return Outcome{kAffirmative, "extended to " + c.source.to_string(), io::cycle_to_json(c)};
    }
    return triple_outcome(separation_adjoint(load_triple(in)));
  }
  if (op == "lambda") return triple_outcome(lambda_embed(io::space_from_json(io::load_json(need(in.total, "--total")))));
  if (op == "pullback-triple") return triple_outcome(pullback_triple(load_map(in), load_triple(in)));
  if (op == "shift") {
    Divisor d = parse_divisor(need(in.divisor, "--divisor"));
    ShiftMorphism s = shift_morphism(load_triple(in), d);
    Outcome o;
    o.text = s.forward.source.to_string() + " -> " + s.forward.target.to_string() + "\nis_iso: " + yes_no(s.is_iso);
    o.result = json{{"forward", io::cycle_to_json(s.forward)}, {"is_iso", s.is_iso}, {"reverse_admissible", s.reverse_admissible}};
    return o;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown operation \"" + op + "\"");
}

Outcome compose_cmd(const Inputs& in) {
  Cycle a = io::cycle_from_json(io::load_json(need(in.first, "--first")));
  Cycle b = io::cycle_from_json(io::load_json(need(in.second, "--second")));
  ComposeResult r = compose(a, b);
  if (const auto* u = std::get_if<UnsupportedComposition>(&r)) {
    Outcome o{kError, "unsupported composition: " + u->reason, json::object()};
    o.result = json{{"error", {{"kind", "UnsupportedComposition"}, {"message", u->reason}}}};
    return o;
  }
  const Cycle& c = std::get<Cycle>(r);
  std::string text = c.source.to_string() + " -> " + c.target.to_string();
  for (const auto& x : c.components) text += "\n  " + x.to_string();
  return Outcome{kAffirmative, text, io::cycle_to_json(c)};
}

Outcome min_compactify(const Inputs& in) {
  Cycle c = load_cycle(in);
  Mult n = minimal_compactification_level(c.source, c.target, c);
  ModulusTriple stage = compactification_stage(c.source, n);
  return Outcome{kAffirmative, "n = " + std::to_string(n), json{{"n", n}, {"stage", io::triple_to_json(stage)}}};
}

json error_json(const std::string& kind, const std::string& message) {
  return json{{"kind", kind}, {"message", message}};
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for modulus triples on the projective line"};
  app.require_subcommand(1);
  bool as_json = false;
  Inputs in;
  std::string what, op;
  suites::SuiteConfig cfg;
  std::string suite_list = "all";
  int samples = 0;

  auto add_json = [&](CLI::App* s) { s->add_flag("--json", as_json, "print a machine-readable report"); };
  auto add_cycle = [&](CLI::App* s) {
    s->add_option("--cycle", in.cycle, "cycle: file, - or inline JSON");
    s->add_option("--source", in.source, "source triple, replaces the cycle's own");
    s->add_option("--target", in.target, "target triple, replaces the cycle's own");
  };

  CLI::App* c_check = app.add_subcommand("check", "decide a property");
  c_check->add_option("what", what, "admissible|position|class|iy|mlog|ne-hom|sigma-fin|minimal")->required();
  add_cycle(c_check);
  c_check->add_option("--triple", in.triple, "triple");
  c_check->add_option("--map", in.map, "rational map");
  c_check->add_option("--from", in.from, "source object");
  c_check->add_option("--to", in.to, "target object");
  add_json(c_check);

  CLI::App* c_apply = app.add_subcommand("apply", "apply a construction or functor");
  c_apply->add_option("op", op,
                      "dual|separate|kappa|kappa-inv|mlog-kappa|mlog-kappa-inv|ne-embed|g|p|q|s|lambda|pullback-triple|shift")
      ->required();
  add_cycle(c_apply);
  c_apply->add_option("--triple", in.triple, "triple");
  c_apply->add_option("--triples", in.triples, "JSON array of triples");
  c_apply->add_option("--map", in.map, "rational map");
  c_apply->add_option("--iy", in.iy, "(Y, Z) object");
  c_apply->add_option("--mlog", in.mlog, "log object");
  c_apply->add_option("--ne", in.ne, "pair with a signed divisor");
  c_apply->add_option("--divisor", in.divisor, "divisor text");
  c_apply->add_option("--total", in.total, "curve space JSON");
  add_json(c_apply);

  CLI::App* c_compose = app.add_subcommand("compose", "compose two cycles");
  c_compose->add_option("--first", in.first, "first cycle")->required();
  c_compose->add_option("--second", in.second, "second cycle")->required();
  add_json(c_compose);

  CLI::App* c_comp = app.add_subcommand("min-compactify", "least compactification level for a cycle from an open triple");
  add_cycle(c_comp);
  add_json(c_comp);

  CLI::App* c_suite = app.add_subcommand("suite", "run seeded property suites");
  c_suite->add_option("--suites", suite_list, "comma separated suite names, or all");
  c_suite->add_option("--seed", cfg.seed, "64-bit seed");
  c_suite->add_option("--samples", samples, "samples per property (default: per suite)")->check(CLI::PositiveNumber);
  c_suite->add_option("--degree-bound", cfg.bounds.degree, "largest map degree")->check(CLI::PositiveNumber);
  c_suite->add_option("--height-bound", cfg.bounds.height, "largest coefficient numerator or denominator")->check(CLI::PositiveNumber);
  add_json(c_suite);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kAffirmative;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kAffirmative;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }

  std::string command;
  std::function<Outcome()> body;
  if (c_check->parsed()) {
    command = "check " + what;
    body = [&] { return check_op(what, in); };
  } else if (c_apply->parsed()) {
    command = "apply " + op;
    body = [&] { return apply_op(op, in); };
  } else if (c_compose->parsed()) {
    command = "compose";
    body = [&] { return compose_cmd(in); };
  } else if (c_comp->parsed()) {
    command = "min-compactify";
    body = [&] { return min_compactify(in); };
  } else {
    command = "suite";
  }

  if (command == "suite") {
    try {
      cfg.samples = samples;
      cfg.suites = suites::parse_suite_list(suite_list);
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      return kError;
    }
    auto results = suites::run_suites(cfg);
    json rep = suites::report_json(cfg, results);
    if (as_json) {
      out << rep.dump(2) << "\n";
    } else {
      for (const auto& s : results)
        for (const auto& c : s.checks)
          out << (c.pass() ? "PASS " : "FAIL ") << c.id << " (" << c.checked - c.failed << "/" << c.checked << ")\n";
      out << "verdict: " << rep["verdict"].get<std::string>() << "\n";
    }
    return rep["verdict"] == "pass" ? kAffirmative : kNegative;
  }

  json rep{{"schema", 1}, {"command", command}};
  Outcome o;
  try {
    o = body();
  } catch (const Error& e) {
    o = Outcome{kError, e.what(), json::object()};
    o.result = json{{"error", error_json(std::string(error_name(e.kind())), e.what())}};
  } catch (const std::exception& e) {
    o = Outcome{kError, e.what(), json::object()};
    o.result = json{{"error", error_json("InternalError", e.what())}};
  }
  rep["verdict"] = o.code == kAffirmative ? "affirmative" : o.code == kNegative ? "negative" : "error";
  if (o.code == kError) {
    rep["error"] = o.result["error"];
  } else {
    rep["result"] = o.result;
  }
  if (as_json) {
    out << rep.dump(2) << "\n";
  } else if (o.code == kError) {
    err << "error: " << o.text << "\n";
  } else {
    out << o.text << "\n";
  }
  return o.code;
}

}  // namespace modtriple
