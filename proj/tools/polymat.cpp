// polymat: command-line front end for the monomial ideal library.
//
// Exit codes: 0 true / success, 1 false, 2 usage or parse error,
// 3 resource budget exceeded, 4 theorem violation detected.

#include "polymat/errors.hpp"
#include "polymat/lab.hpp"
#include "polymat/linalg.hpp"
#include "polymat/polymatroid.hpp"
#include "polymat/primes.hpp"
#include "polymat/quotients.hpp"
#include "polymat/report.hpp"
#include "polymat/resolution.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>

using namespace polymat;

namespace {

enum Exit { kTrue = 0, kFalse = 1, kUsage = 2, kResource = 3, kViolation = 4 };

struct Globals {
  std::int64_t characteristic = 0;
  std::uint64_t seed = 0;
  std::size_t budget = 0;
  bool json = false;

  Budget limits() const {
    Budget b;
    if (budget) {
      b.max_lattice = budget;
      b.max_enumeration = budget;
      b.max_components = budget;
    }
    return b;
  }
};

struct IdealArg {
  int nvars = 0;
  std::string text;
  MonomialIdeal get() const { return parse_ideal(text, nvars); }
};

Globals g;
std::function<int()> action;

void add_ideal(CLI::App* cmd, IdealArg& arg, const std::string& name = "ideal") {
  cmd->add_option("-n,--nvars", arg.nvars, "number of variables x1..xn")->required()->check(CLI::Range(1, kMaxVars));
  cmd->add_option(name, arg.text, "comma separated monomials, e.g. \"x1^2, x1*x2\"")->required();
}

void emit(const Json& j, const std::string& text) {
  if (g.json) std::cout << j.dump(2) << '\n';
  else std::cout << text << (text.empty() || text.back() != '\n' ? "\n" : "");
}

Json base_json(const std::string& command) { return Json{{"command", command}, {"version", kReportVersion}}; }

int ideal_result(const std::string& command, const MonomialIdeal& result) {
  Json j = base_json(command);
  j["nvars"] = result.nvars();
  j["ideal"] = result.to_string();
  emit(j, result.to_string());
  return kTrue;
}

std::string witness_text(const ExchangeWitness& w) {
  std::string s = "witness: u=" + w.u.to_string() + " v=" + w.v.to_string() + " i=" + std::to_string(w.i + 1);
  if (w.j) s += " j=" + std::to_string(*w.j + 1);
  return s;
}

int exchange_result(const std::string& predicate, const ExchangeVerdict& v) {
  Json j = base_json("check");
  j["predicate"] = predicate;
  j["holds"] = v.holds;
  j["detail"] = to_json(v);
  std::string text = v.holds ? "true" : "false";
  if (!v.single_degree) text += "\nnot generated in a single degree";
  if (v.witness) text += "\n" + witness_text(*v.witness);
  emit(j, text);
  return v.holds ? kTrue : kFalse;
}

int degree_result(const std::string& predicate, bool holds, std::optional<long> failing) {
  Json j = base_json("check");
  j["predicate"] = predicate;
  j["holds"] = holds;
  j["failing_degree"] = failing ? Json(*failing) : Json(nullptr);
  std::string text = holds ? "true" : "false";
  if (failing) text += "\nfails in degree " + std::to_string(*failing);
  emit(j, text);
  return holds ? kTrue : kFalse;
}

int bool_result(const std::string& predicate, bool holds) {
  Json j = base_json("check");
  j["predicate"] = predicate;
  j["holds"] = holds;
  emit(j, holds ? "true" : "false");
  return holds ? kTrue : kFalse;
}

std::string certificate_text(const LinearQuotientsCertificate& cert) {
  std::string s = cert.base.is_zero() ? "" : "base: " + cert.base.to_string() + "\n";
  for (std::size_t k = 0; k < cert.appended.size(); ++k) {
    s += cert.appended[k].to_string() + "  : (";
    for (std::size_t v = 0; v < cert.steps[k].size(); ++v) s += (v ? ", x" : "x") + std::to_string(cert.steps[k][v] + 1);
    s += ")\n";
  }
  return s;
}

int lq_result(const std::string& mode, const std::optional<LinearQuotientsCertificate>& cert,
              std::optional<std::size_t> failing = std::nullopt) {
  Json j = base_json("lq");
  j["mode"] = mode;
  j["holds"] = cert.has_value();
  j["certificate"] = cert ? to_json(*cert) : Json(nullptr);
  if (failing) j["failing_position"] = *failing + 1;
  std::string text = cert ? "true\n" + certificate_text(*cert) : "false";
  if (failing) text += "\nfails at position " + std::to_string(*failing + 1);
  emit(j, text);
  return cert ? kTrue : kFalse;
}

void register_check(CLI::App& app) {
  auto* check = app.add_subcommand("check", "evaluate a predicate on an ideal")->require_subcommand(1);
  static IdealArg arg;
  static long extra = 0;
  using Runner = std::function<int(const MonomialIdeal&)>;
  const std::vector<std::pair<std::string, Runner>> predicates = {
      {"polymatroidal", [](const MonomialIdeal& I) { return exchange_result("polymatroidal", is_polymatroidal(I)); }},
      {"matroidal", [](const MonomialIdeal& I) { return exchange_result("matroidal", is_matroidal(I)); }},
      {"strong-exchange",
       [](const MonomialIdeal& I) { return exchange_result("strong-exchange", has_strong_exchange(I)); }},
      {"nonpure-exchange",
       [](const MonomialIdeal& I) { return exchange_result("nonpure-exchange", has_nonpure_exchange(I)); }},
      {"cw-polymatroidal",
       [](const MonomialIdeal& I) {
         const auto v = is_componentwise_polymatroidal(I, extra);
         return degree_result("cw-polymatroidal", v.holds, v.failing_degree);
       }},
      {"cw-veronese",
       [](const MonomialIdeal& I) {
         const auto v = is_componentwise_veronese(I, extra);
         return degree_result("cw-veronese", v.holds, v.failing_degree);
       }},
      {"single-degree", [](const MonomialIdeal& I) { return bool_result("single-degree", is_single_degree(I)); }},
      {"linear-resolution",
       [](const MonomialIdeal& I) {
         return bool_result("linear-resolution", has_linear_resolution(I, g.characteristic, g.limits()));
       }},
      {"linear-relations",
       [](const MonomialIdeal& I) {
         return bool_result("linear-relations", has_linear_relations(I, g.characteristic, g.limits()));
       }},
      {"cw-linear",
       [](const MonomialIdeal& I) {
         const auto v = is_componentwise_linear(I, g.characteristic, g.limits(), extra);
         return degree_result("cw-linear", v.holds, v.failing_degree);
       }},
  };
  for (const auto& [name, run] : predicates) {
    auto* sub = check->add_subcommand(name);
    add_ideal(sub, arg);
    if (name.starts_with("cw-")) sub->add_option("--extra-degrees", extra, "components checked beyond the top degree");
    sub->callback([run = run] { action = [run] { return run(arg.get()); }; });
  }
}

void register_ops(CLI::App& app) {
  static IdealArg arg, other;
  static std::string by;
  static std::vector<int> ones, prime;
  static int k = 1;
  static long j = 0;

  auto* colon_cmd = app.add_subcommand("colon", "I : u");
  add_ideal(colon_cmd, arg);
  colon_cmd->add_option("--by", by, "the monomial u")->required();
  colon_cmd->callback([] {
    action = [] { return ideal_result("colon", colon(arg.get(), parse_monomial(by, arg.nvars))); };
  });

  auto* sat = app.add_subcommand("saturate", "I : u^infinity");
  add_ideal(sat, arg);
  sat->add_option("--by", by, "the monomial u")->required();
  sat->callback([] {
    action = [] { return ideal_result("saturate", saturate(arg.get(), parse_monomial(by, arg.nvars))); };
  });

  auto* loc = app.add_subcommand("localize", "set the variables in C to 1");
  add_ideal(loc, arg);
  auto* o1 = loc->add_option("--ones", ones, "C, 1-based, comma separated")->delimiter(',');
  auto* o2 = loc->add_option("--prime", prime, "variables of the prime P_C, 1-based")->delimiter(',');
  o1->excludes(o2);
  loc->callback([o1, o2] {
    action = [o1, o2] {
      if (!*o1 && !*o2) throw CLI::ValidationError("localize needs --ones or --prime");
      const VarSubset c = *o1 ? VarSubset::from_one_based(arg.nvars, ones)
                              : VarSubset::from_one_based(arg.nvars, prime).complement();
      return ideal_result("localize", localize(arg.get(), c));
    };
  });

  auto* comb = app.add_subcommand("combine", "sum, product or intersection of two ideals")->require_subcommand(1);
  for (const auto& [name, op] : std::vector<std::pair<std::string, CombineOp>>{
           {"sum", CombineOp::sum}, {"product", CombineOp::product}, {"intersect", CombineOp::intersect}}) {
    auto* sub = comb->add_subcommand(name);
    add_ideal(sub, arg, "first");
    sub->add_option("second", other.text, "second ideal")->required();
    sub->callback([op = op] {
      action = [op] { return ideal_result("combine", combine(op, arg.get(), parse_ideal(other.text, arg.nvars))); };
    });
  }

  auto* pw = app.add_subcommand("power", "I^k");
  add_ideal(pw, arg);
  pw->add_option("-k", k, "exponent")->required()->check(CLI::PositiveNumber);
  pw->callback([] { action = [] { return ideal_result("power", power(arg.get(), k)); }; });

  auto* comp = app.add_subcommand("component", "the ideal generated by the degree-j part");
  add_ideal(comp, arg);
  comp->add_option("-j", j, "degree")->required()->check(CLI::NonNegativeNumber);
  comp->callback([] { action = [] { return ideal_result("component", component(arg.get(), j)); }; });

  auto* betti = app.add_subcommand("betti", "graded Betti numbers");
  add_ideal(betti, arg);
  betti->callback([] {
    action = [] {
      const auto I = arg.get();
      const auto table = betti_table(I, g.characteristic, g.limits());
      Json out = base_json("betti");
      out["ideal"] = I.to_string();
      out["char"] = g.characteristic;
      out["betti"] = to_json(table);
      out["regularity"] = table.entries().empty() ? Json(nullptr) : Json(table.regularity());
      out["projective_dimension"] = table.entries().empty() ? Json(nullptr) : Json(table.projective_dimension());
      std::string text;
      for (const auto& [key, rank] : table.entries())
        text += "beta_" + std::to_string(key.first) + "," + std::to_string(key.second) + " = " + std::to_string(rank) + "\n";
      emit(out, text);
      return kTrue;
    };
  });

  auto* ass = app.add_subcommand("ass", "associated primes with witnesses");
  add_ideal(ass, arg);
  ass->callback([] {
    action = [] {
      const auto data = associated_primes(arg.get(), g.limits());
      Json out = base_json("ass");
      out.update(to_json(data));
      std::string text;
      for (const auto& p : data.associated)
        text += "(" + p.prime.to_string() + ")  witness " + p.witness.to_string() + "\n";
      text += "height " + std::to_string(data.height) + (data.has_embedded ? ", embedded primes" : ", no embedded primes");
      emit(out, text);
      return kTrue;
    };
  });

  auto* irr = app.add_subcommand("irrdecomp", "irredundant irreducible decomposition");
  add_ideal(irr, arg);
  irr->callback([] {
    action = [] {
      const auto comps = irreducible_decomposition(arg.get(), g.limits());
      Json out = base_json("irrdecomp");
      Json list = Json::array();
      std::string text;
      for (const auto& c : comps) {
        list.push_back(to_json(c));
        text += "(" + c.ideal(arg.nvars).to_string() + ")\n";
      }
      out["components"] = std::move(list);
      emit(out, text);
      return kTrue;
    };
  });
}

void register_lq(CLI::App& app) {
  static IdealArg arg;
  static std::string base;
  static bool increasing = false;
  auto* lq = app.add_subcommand("lq", "linear quotients")->require_subcommand(1);

  auto* chk = lq->add_subcommand("check", "verify a given order");
  add_ideal(chk, arg, "order");
  chk->add_option("--base", base, "ideal to extend");
  chk->callback([] {
    action = [] {
      const auto r = check_lq_order(parse_ideal(base, arg.nvars), parse_monomials(arg.text, arg.nvars));
      return lq_result("check", r.certificate, r.failing_position);
    };
  });

  auto* find = lq->add_subcommand("find", "search for an order");
  add_ideal(find, arg);
  find->add_option("--base", base, "ideal to extend; its generators come first");
  find->callback([] {
    action = [] {
      const auto I = arg.get();
      const auto b = parse_ideal(base, arg.nvars);
      if (b.is_zero()) return lq_result("find", find_lq_order(I, g.limits()));
      std::vector<Monomial> extra;
      for (const auto& m : I.generators())
        if (!b.contains(m)) extra.push_back(m);
      return lq_result("find", find_lq_order(b, extra, g.limits()));
    };
  });

  auto* rev = lq->add_subcommand("revlex", "try the reverse lexicographic order");
  add_ideal(rev, arg);
  rev->add_flag("--increasing", increasing, "ascending revlex instead of descending");
  rev->callback([] {
    action = [] {
      const auto r = revlex_lq(arg.get(), increasing ? RevlexDirection::increasing : RevlexDirection::decreasing);
      return lq_result("revlex", r.certificate, r.failing_position);
    };
  });

  static std::string from, to;
  auto* ext = app.add_subcommand("extend-veronese", "extend I_(d;a)*m to I_(d+1;b) by linear quotients");
  ext->add_option("--from", from, "\"d; a1,...,an\"")->required();
  ext->add_option("--to", to, "\"d+1; b1,...,bn\"")->required();
  ext->callback([] {
    action = [] { return lq_result("extend-veronese", extend_lq_veronese(VeroneseParams::parse(from), VeroneseParams::parse(to))); };
  });
}

void register_lab(CLI::App& app) {
  static IdealArg arg;
  auto* eq = app.add_subcommand("equiv", "check the colon characterization on one ideal");
  add_ideal(eq, arg);
  eq->callback([] {
    action = [] {
      const auto rec = lab::verify_equivalences(arg.get(), g.characteristic, g.limits());
      Json out = base_json("equiv");
      out.update(rec.to_json());
      std::string text;
      const char* names = "abcde";
      for (int k = 0; k < 5; ++k) {
        text += std::string("(") + names[k] + ") " + (rec.conditions[k] ? "true" : "false");
        if (rec.first_failure[k]) text += "  fails at u=" + rec.first_failure[k]->to_string();
        text += "\n";
      }
      if (rec.convention_sensitive) text += "revlex convention sensitive\n";
      text += rec.violation ? "VIOLATION" : "consistent";
      emit(out, text);
      return rec.violation ? kViolation : kTrue;
    };
  });

  static lab::IdealSpace space;
  static std::string mode = "exhaustive";
  static unsigned threads = 0;
  static std::string out_path;
  auto* scan = app.add_subcommand("scan", "search an ideal space for counterexamples to the localization conjecture");
  scan->add_option("-n,--nvars", space.nvars)->required()->check(CLI::Range(1, kMaxVars));
  scan->add_option("--min-degree", space.min_degree)->check(CLI::PositiveNumber);
  scan->add_option("--max-degree", space.max_degree)->check(CLI::PositiveNumber);
  scan->add_option("--max-generators", space.max_generators)->check(CLI::PositiveNumber);
  scan->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive", "sampled"}));
  scan->add_option("--samples", space.samples)->check(CLI::PositiveNumber);
  scan->add_flag("--squarefree", space.squarefree_only);
  scan->add_option("--threads", threads);
  scan->add_option("--out", out_path, "also write the JSON report to this file");
  scan->callback([] {
    action = [] {
      space.mode = mode == "sampled" ? lab::SpaceMode::sampled : lab::SpaceMode::exhaustive;
      space.seed = g.seed;
      lab::ScanOptions opts{g.characteristic, g.limits(), threads};
      const auto report = lab::scan_conjecture(space, opts);
      const Json j = report.to_json();
      if (!out_path.empty()) std::ofstream(out_path) << j.dump(2) << '\n';
      const auto& counts = report.summary["counts"];
      std::string text;
      for (const auto& [key, value] : counts.items()) text += key + ": " + value.dump() + "\n";
      for (const auto& item : report.summary["counterexamples"])
        text += item["status"].get<std::string>() + ": " + item["ideal"].get<std::string>() + "\n";
      emit(j, text);
      if (counts["forward-violation"].get<std::size_t>() > 0) return kViolation;
      return counts["counterexample"].get<std::size_t>() > 0 ? kFalse : kTrue;
    };
  });

  auto* suite = app.add_subcommand("suite", "run the regression suite of worked examples");
  suite->callback([] {
    action = [] {
      const auto report = lab::paper_suite(g.characteristic, g.limits());
      std::string text;
      for (const auto& item : report.items)
        text += item["status"].get<std::string>() + "  " + item["name"].get<std::string>() +
                (item["ideal"].is_null() ? "" : "  [" + item["ideal"].get<std::string>() + "]") + "\n";
      emit(report.to_json(), text);
      return lab::suite_passed(report) ? kTrue : kFalse;
    };
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polymat: monomial ideals, polymatroidal predicates and resolutions"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--char", g.characteristic, "field characteristic, 0 or a prime");
  app.add_option("--seed", g.seed, "seed for sampled spaces");
  app.add_option("--budget", g.budget, "cap on lattice, enumeration and component sizes");
  app.add_flag("--json", g.json, "machine readable output");

  register_check(app);
  register_ops(app);
  register_lq(app);
  register_lab(app);

  try {
    app.parse(argc, argv);
    linalg::check_characteristic(g.characteristic);
    return action ? action() : kUsage;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const ResourceError& e) {
    std::cerr << "resource budget exceeded: " << e.what() << '\n';
    return kResource;
  } catch (const TheoremViolation& e) {
    std::cerr << "theorem violation: " << e.what() << '\n';
    return kViolation;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
