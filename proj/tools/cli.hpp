#pragma once

// bentlab command-line front end. Exit codes: 0 success, 1 usage or I/O
// error, 2 a construction condition is violated, 3 a size limit is exceeded.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bentlab/bentlab.hpp"

namespace bentlab::cli {

enum ExitCode { kOk = 0, kUsage = 1, kCondition = 2, kResource = 3 };

using io::Json;

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline Json read_json(const std::string& path) {
  try {
    return Json::parse(read_input(path));
  } catch (const Json::exception& e) {
    throw InvalidArgument("'" + path + "' is not valid JSON: " + e.what());
  }
}

// Parameter names in the order positional --param values are assigned.
inline std::vector<std::string> param_order(Family family) {
  switch (family) {
    case Family::fam1: return {"lambda"};
    case Family::fam2:
    case Family::fam3i:
    case Family::fam3ii: return {"alpha"};
    case Family::fam4: return {"alpha", "beta"};
    case Family::fam5: return {"C", "D", "lambda"};
    case Family::custom: break;
  }
  return {};
}

struct Options {
  std::string field;
  bool json = false;
  bool oracle = false;
  std::uint64_t seed = 0;

  std::string family;
  int m = 0;
  std::vector<std::string> positional_params;
  std::optional<std::string> lambda, alpha, beta, c, d;

  std::string triple_path;
  std::string input_path;
  bool bent = false;
  bool full = false;

  int n = 0;
  std::string shape;
  std::uint64_t budget = 0;
};

inline Field field_for(const Options& opt, int degree) {
  if (opt.field.empty()) return Field(degree);
  Field f = io::parse_field(opt.field);
  if (f.degree() != degree) {
    throw InvalidArgument("--field has degree " + std::to_string(f.degree()) + " but the command needs " +
                          std::to_string(degree));
  }
  return f;
}

inline Json run_report(const std::string& command, const Field& f, Json inputs, Json results, Json timings) {
  return Json{{"command", command},
              {"version", kVersion},
              {"field", io::format_field(f)},
              {"inputs", std::move(inputs)},
              {"results", std::move(results)},
              {"timings_ms", std::move(timings)}};
}

inline int cmd_construct(const Options& opt, std::ostream& out) {
  const Family family = parse_family(opt.family);
  if (family == Family::custom) throw InvalidArgument("construct needs one of the parametric families");
  const Field f = field_for(opt, degree_multiplier(family) * opt.m);
  ParamSet params;
  const auto order = param_order(family);
  if (opt.positional_params.size() > order.size()) throw InvalidArgument("too many --param values");
  for (std::size_t i = 0; i < opt.positional_params.size(); ++i) {
    params[order[i]] = io::parse_element(f, opt.positional_params[i]);
  }
  auto named = [&](const char* name, const std::optional<std::string>& value) {
    if (value) params[name] = io::parse_element(f, *value);
  };
  named("lambda", opt.lambda);
  named("alpha", opt.alpha);
  named("beta", opt.beta);
  named("C", opt.c);
  named("D", opt.d);
  const PermutationTriple t = make_family(f, family, opt.m, params);
  out << io::triple_to_json(t).dump(2) << '\n';
  return kOk;
}

inline int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
  Stopwatch total;
  const PermutationTriple t = io::triple_from_json(read_json(opt.triple_path));
  Json timings = Json::object();
  Stopwatch sw;
  const AnReport an = verify_an(t);
  timings["verify_an"] = sw.ms();
  sw = Stopwatch();
  const EUnionReport eu = e_union(t);
  timings["e_union"] = sw.ms();
  Json results{{"an", io::an_report_to_json(an)},
               {"e_union", io::e_report_to_json(eu)},
               {"satisfied", an.satisfied},
               {"covers_field", eu.covers_field}};
  std::optional<WalshSpectrum> spectrum;
  std::optional<BooleanFunction> fn;
  if (opt.bent) {
    if (t.field.degree() > kMaxTableDegree) throw ResourceLimit("--bent needs a field of degree <= 12");
    sw = Stopwatch();
    fn = synthesize(t);
    spectrum = walsh_spectrum(*fn);
    timings["bent"] = sw.ms();
    results["is_bent"] = is_bent(*spectrum);
    results["spectrum"] = io::spectrum_summary(*spectrum, fn->weight());
  }
  bool agrees = true;
  if (opt.oracle) {
    sw = Stopwatch();
    Json diff = Json::object();
    const bool an_ok = oracle::pointwise_an_check(t) == an;
    const bool eu_ok = oracle::naive_e_union(t) == eu;
    diff["an_agrees"] = an_ok;
    diff["e_union_agrees"] = eu_ok;
    agrees = an_ok && eu_ok;
    if (fn && fn->num_vars() <= oracle::kMaxNaiveWalshVars) {
      const bool walsh_ok = oracle::naive_walsh(*fn).values == spectrum->values;
      diff["walsh_agrees"] = walsh_ok;
      agrees = agrees && walsh_ok;
    }
    timings["oracle"] = sw.ms();
    results["oracle"] = diff;
  }
  timings["total"] = total.ms();
  Json inputs{{"triple", opt.triple_path}, {"family", std::string(to_string(t.family))}, {"bent", opt.bent}, {"oracle", opt.oracle}};
  out << run_report("verify", t.field, inputs, results, timings).dump(2) << '\n';
  if (!agrees) {
    err << "error: oracle disagrees with the main verification path\n";
    return kUsage;
  }
  return kOk;
}

// Loads a truth table, or synthesizes one from a triple file.
inline BooleanFunction load_function(const Json& j) {
  if (j.value("kind", "") == "boolean_function") return io::function_from_json(j);
  const PermutationTriple t = io::triple_from_json(j);
  if (t.field.degree() > kMaxTableDegree) throw ResourceLimit("spectra are limited to fields of degree <= 12");
  return synthesize(t);
}

inline int cmd_synth(const Options& opt, std::ostream& out) {
  const PermutationTriple t = io::triple_from_json(read_json(opt.triple_path));
  if (t.field.degree() > kMaxTableDegree) throw ResourceLimit("truth tables are limited to fields of degree <= 12");
  out << io::function_to_json(synthesize(t), t).dump() << '\n';
  return kOk;
}

inline int cmd_walsh(const Options& opt, std::ostream& out, std::ostream& err) {
  Stopwatch sw;
  const Json input = read_json(opt.input_path);
  const BooleanFunction fn = load_function(input);
  const WalshSpectrum s = walsh_spectrum(fn);
  const double elapsed = sw.ms();
  bool agrees = true;
  std::optional<bool> oracle_agrees;
  if (opt.oracle && fn.num_vars() <= oracle::kMaxNaiveWalshVars) {
    oracle_agrees = oracle::naive_walsh(fn).values == s.values;
    agrees = *oracle_agrees;
  }
  if (opt.full) {
    out << io::spectrum_csv(s);
  } else {
    Json summary = io::spectrum_summary(s, fn.weight());
    if (oracle_agrees) summary["oracle_agrees"] = *oracle_agrees;
    if (opt.json) {
      Json timings{{"total", elapsed}};
      out << run_report("walsh", fn.field(), Json{{"input", opt.input_path}}, summary, timings).dump(2) << '\n';
    } else {
      out << summary.dump() << '\n';
    }
  }
  if (!agrees) {
    err << "error: naive transform disagrees with the fast transform\n";
    return kUsage;
  }
  return kOk;
}

inline int cmd_params(const Options& opt, std::ostream& out) {
  const Family family = parse_family(opt.family);
  if (family == Family::custom) throw InvalidArgument("params needs one of the parametric families");
  const Field f = field_for(opt, degree_multiplier(family) * opt.m);
  Json list = Json::array();
  for (const ParamSet& p : enumerate_params(f, family, opt.m)) {
    if (p.size() == 1) {
      list.push_back(io::format_element(f, p.begin()->second));
    } else {
      list.push_back(io::params_to_json(f, p));
    }
  }
  if (opt.json) {
    Json inputs{{"family", opt.family}, {"m", opt.m}};
    out << run_report("params", f, inputs, Json{{"count", list.size()}, {"params", list}}, Json::object()).dump(2)
        << '\n';
  } else {
    out << list.dump() << '\n';
  }
  return kOk;
}

inline int cmd_search(const Options& opt, std::ostream& out) {
  Stopwatch sw;
  const Field f = field_for(opt, opt.n);
  const SearchResult r = search_custom_triples(f, parse_shape(opt.shape), opt.budget, opt.seed);
  Json hits = Json::array();
  for (const SearchHit& h : r.hits) {
    hits.push_back(Json{{"triple", io::triple_to_json(h.triple)}, {"e_union", io::e_report_to_json(h.e_report)}});
  }
  Json results{{"status", std::string(to_string(r.status))}, {"examined", r.examined}, {"count", hits.size()}, {"hits", hits}};
  Json inputs{{"n", opt.n}, {"shape", opt.shape}, {"budget", opt.budget}, {"seed", opt.seed}};
  out << run_report("search", f, inputs, results, Json{{"total", sw.ms()}}).dump(2) << '\n';
  return kOk;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"bentlab: bent functions from permutation triples over GF(2^n)"};
  app.fallthrough();
  app.require_subcommand(1);
  Options opt;
  app.add_option("--field", opt.field, "Field spec gf2:<n>[:<modulus-hex>]");
  app.add_flag("--json", opt.json, "Emit a full JSON run report");
  app.add_flag("--oracle", opt.oracle, "Re-run with brute-force oracles and diff the results");
  app.add_option("--seed", opt.seed, "Seed for randomized search");

  auto* construct = app.add_subcommand("construct", "Build a triple from one of the families");
  construct->add_option("--family", opt.family, "fam1|fam2|fam3i|fam3ii|fam4|fam5")->required();
  construct->add_option("--m", opt.m, "Family parameter m")->required();
  construct->add_option("--param", opt.positional_params, "Hex parameters in family order");
  construct->add_option("--lambda", opt.lambda, "lambda (hex)");
  construct->add_option("--alpha", opt.alpha, "alpha (hex)");
  construct->add_option("--beta", opt.beta, "beta (hex)");
  construct->add_option("--C", opt.c, "C (hex)");
  construct->add_option("--D", opt.d, "D (hex)");

  auto* verify = app.add_subcommand("verify", "Check (A_n) and the E-sets of a triple");
  verify->add_option("--triple", opt.triple_path, "Triple JSON file, '-' for stdin")->required();
  verify->add_flag("--bent", opt.bent, "Also synthesize the function and test bentness");

  auto* synth = app.add_subcommand("synth", "Write the truth table of a triple's Boolean function");
  synth->add_option("--triple", opt.triple_path, "Triple JSON file, '-' for stdin")->required();

  auto* walsh = app.add_subcommand("walsh", "Walsh spectrum of a truth table or a triple's function");
  walsh->add_option("--input", opt.input_path, "Function or triple JSON file, '-' for stdin")->required();
  walsh->add_flag("--full", opt.full, "Print the whole spectrum as CSV");

  auto* params = app.add_subcommand("params", "List every valid parameter tuple of a family");
  params->add_option("--family", opt.family, "fam1|fam2|fam3i|fam3ii|fam4|fam5")->required();
  params->add_option("--m", opt.m, "Family parameter m")->required();

  auto* search = app.add_subcommand("search", "Search for (A_n) triples of a given shape");
  search->add_option("--n", opt.n, "Field degree")->required();
  search->add_option("--shape", opt.shape, "monomials|fam1|linear")->required();
  search->add_option("--budget", opt.budget, "Maximum number of candidate triples")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*construct) return cmd_construct(opt, out);
    if (*verify) return cmd_verify(opt, out, err);
    if (*synth) return cmd_synth(opt, out);
    if (*walsh) return cmd_walsh(opt, out, err);
    if (*params) return cmd_params(opt, out);
    if (*search) return cmd_search(opt, out);
  } catch (const ConditionViolation& e) {
    err << "condition violated: " << e.what() << '\n';
    return kCondition;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace bentlab::cli
