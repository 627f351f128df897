#include "segrekit/cli.hpp"

#include "segrekit/corpus.hpp"
#include "segrekit/parser.hpp"
#include "segrekit/determinacy.hpp"
#include "segrekit/model_dsl.hpp"
#include "segrekit/report.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <future>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace segrekit {
namespace {

/// Resolve the default truncation order used when a map block carries no
/// trunc clause: the --trunc flag wins over the SEGREKIT_TRUNC_ORDER
/// environment variable, which wins over the built-in default 8.
int default_trunc_order(const std::optional<int> &flag) {
  if (flag)
    return *flag;
  if (const char *env = std::getenv("SEGREKIT_TRUNC_ORDER")) {
    std::string text(env);
    try {
      std::size_t pos = 0;
      int v = std::stoi(text, &pos);
      if (pos == text.size())
        return v;
    } catch (const std::exception &) {
    }
    throw ValidationError("SEGREKIT_TRUNC_ORDER must be an integer, got '" +
                          text + "'");
  }
  return 8;
}

std::vector<std::string> split(const std::string &s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string &s) {
  std::size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos)
    return "";
  std::size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

/// One exact complex value, written as a constant expression in the shared
/// polynomial grammar (e.g. "3/2", "-i", "1/2 + 2*i").
GaussRat parse_value(const UniversePtr &u, const std::string &text) {
  MultiPoly p = parse_poly(u, text);
  if (!p.is_constant())
    throw ValidationError("point entry '" + text +
                          "' is not a constant expression");
  return p.constant_value();
}

std::vector<GaussRat> parse_point(const UniversePtr &u, const std::string &text,
                                  std::size_t want, const std::string &what) {
  std::vector<GaussRat> out;
  for (const std::string &part : split(text, ','))
    out.push_back(parse_value(u, trim(part)));
  if (out.size() != want)
    throw ValidationError(what + " needs " + std::to_string(want) +
                          " comma-separated entries, got " +
                          std::to_string(out.size()));
  return out;
}

std::vector<GaussRat> conj_point(const std::vector<GaussRat> &p) {
  std::vector<GaussRat> out;
  out.reserve(p.size());
  for (const GaussRat &v : p)
    out.push_back(v.conj());
  return out;
}

/// "a1, a2" names a point of M and yields the diagonal tuple there;
/// "z = ...; wb = ...; u = ..." gives all three chain points explicitly.
ChainTuple parse_tuple(const Problem &P, const std::string &text) {
  std::size_t n = static_cast<std::size_t>(P.M.n);
  if (text.find('=') == std::string::npos) {
    ChainTuple t;
    t.z = parse_point(P.uni, text, n, "the diagonal point");
    t.wb = conj_point(t.z);
    t.u = t.z;
    t.diagonal = true;
    return t;
  }
  ChainTuple t;
  bool got_z = false, got_wb = false, got_u = false;
  for (const std::string &raw : split(text, ';')) {
    std::string slot = trim(raw);
    if (slot.empty())
      continue;
    std::size_t eq = slot.find('=');
    if (eq == std::string::npos)
      throw ValidationError("tuple slot '" + slot +
                            "' is not of the form name = entries");
    std::string name = trim(slot.substr(0, eq));
    std::string rest = slot.substr(eq + 1);
    if (name == "z") {
      t.z = parse_point(P.uni, rest, n, "slot z");
      got_z = true;
    } else if (name == "wb") {
      t.wb = parse_point(P.uni, rest, n, "slot wb");
      got_wb = true;
    } else if (name == "u") {
      t.u = parse_point(P.uni, rest, n, "slot u");
      got_u = true;
    } else {
      throw ValidationError("unknown tuple slot '" + name +
                            "' (expected z, wb, or u)");
    }
  }
  if (!got_z || !got_wb || !got_u)
    throw ValidationError("a chain tuple needs all three slots z, wb, u");
  return t;
}

Json json_point(const std::vector<GaussRat> &p) {
  Json out = Json::array();
  for (const GaussRat &v : p)
    out.push_back(v.str());
  return out;
}

Scope resolve_scope(const Problem &P, const std::string &name) {
  return name == "global" ? Scope::global() : Scope::localized_for(P);
}

ShrinkMode resolve_mode(const std::string &name) {
  return name == "sing" ? ShrinkMode::SingularLocus : ShrinkMode::Filtration;
}

Json json_model_info(const CRModel &m) {
  Json out;
  out["name"] = m.name;
  out["ambient"] = m.n;
  out["crdim"] = m.m;
  out["codim"] = m.d;
  return out;
}

Json json_outcome(const CorpusOutcome &o) {
  Json checks = Json::array();
  for (const CheckResult &c : o.checks) {
    Json jc;
    jc["name"] = c.name;
    jc["pass"] = c.pass;
    jc["expected"] = c.expected;
    jc["computed"] = c.computed;
    checks.push_back(jc);
  }
  Json out;
  out["id"] = o.id;
  out["pass"] = o.pass;
  out["checks"] = checks;
  return out;
}

std::string corpus_text(const std::vector<CorpusOutcome> &outs) {
  std::ostringstream os;
  bool all = true;
  for (const CorpusOutcome &o : outs) {
    std::size_t passed = 0;
    for (const CheckResult &c : o.checks)
      passed += c.pass ? 1 : 0;
    if (o.pass) {
      os << "PASS " << o.id << " (" << o.checks.size() << " checks)\n";
    } else {
      all = false;
      os << "FAIL " << o.id << " (" << passed << " of " << o.checks.size()
         << " checks)\n";
      for (const CheckResult &c : o.checks) {
        if (c.pass)
          continue;
        os << "  check:    " << c.name << "\n";
        os << "  expected: " << c.expected << "\n";
        os << "  computed: " << c.computed << "\n";
      }
    }
  }
  os << (all ? "overall: PASS" : "overall: FAIL") << "\n";
  return os.str();
}

std::string join_args(const std::vector<std::string> &args) {
  std::string out;
  for (std::size_t k = 0; k < args.size(); ++k)
    out += (k ? " " : "") + args[k];
  return out;
}

} // namespace

int cli_main(const std::vector<std::string> &args, std::ostream &out,
             std::ostream &err) {
  CLI::App app{"segrec — exact reflection toolkit for algebraic CR maps"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  std::optional<int> trunc_flag;
  app.add_option("--trunc", trunc_flag,
                 "default truncation order for maps without a trunc clause "
                 "(overrides SEGREKIT_TRUNC_ORDER)");

  std::string file;
  std::string at_text, fix_text;
  std::string scope_name = "local";
  std::string mode_name = "prop16";
  int samples = 3;
  std::uint64_t seed = 7;
  std::string example_id;

  auto add_file = [&](CLI::App *c) {
    c->add_option("file", file, "problem description file")->required();
  };
  auto add_scope = [&](CLI::App *c) {
    c->add_option("--scope", scope_name,
                  "reflect over the target polydisc (local) or the whole "
                  "target space (global)")
        ->check(CLI::IsMember({"local", "global"}))
        ->capture_default_str();
  };
  auto add_mode = [&](CLI::App *c) {
    c->add_option("--mode", mode_name,
                  "shrink mode: iterated minor filtration (prop16) or a "
                  "single singular-locus step (sing)")
        ->check(CLI::IsMember({"prop16", "sing"}))
        ->capture_default_str();
  };

  CLI::App *c_validate = app.add_subcommand(
      "validate", "parse a description and check that f maps M into M'");
  add_file(c_validate);

  CLI::App *c_segre = app.add_subcommand(
      "segre", "Segre variety of the source model at a point");
  add_file(c_segre);
  c_segre->add_option("--at", at_text, "point w (comma-separated constants)")
      ->required();

  CLI::App *c_reflect1 = app.add_subcommand(
      "reflect1", "first reflection: the classical determinacy set");
  add_file(c_reflect1);

  CLI::App *c_reflect2 = app.add_subcommand(
      "reflect2", "second reflection: the double-reflection determinacy set");
  add_file(c_reflect2);
  add_scope(c_reflect2);

  CLI::App *c_shrink = app.add_subcommand(
      "shrink", "shrink the first-stage system around the graph of the map");
  add_file(c_shrink);
  add_mode(c_shrink);

  CLI::App *c_dims = app.add_subcommand(
      "dims", "local dimensions of the five determinacy sets at a tuple");
  add_file(c_dims);
  c_dims
      ->add_option("--at", at_text,
                   "chain tuple: \"a1, a2\" (diagonal point of M) or "
                   "\"z = ...; wb = ...; u = ...\"")
      ->required();
  add_scope(c_dims);

  CLI::App *c_classify = app.add_subcommand(
      "classify", "evaluate the twelve determinacy conditions on samples");
  add_file(c_classify);
  c_classify
      ->add_option("--samples", samples,
                   "diagonal and chain sample count (each)")
      ->capture_default_str();
  c_classify->add_option("--seed", seed, "sampling seed")
      ->capture_default_str();
  add_scope(c_classify);
  add_mode(c_classify);

  CLI::App *c_depend = app.add_subcommand(
      "depend", "per-coordinate algebraic relations over one Segre variety");
  add_file(c_depend);
  c_depend
      ->add_option("--fix", fix_text,
                   "anchor point w (comma-separated constants); its "
                   "conjugate fixes the Segre variety")
      ->required();
  add_scope(c_depend);

  CLI::App *c_verify = app.add_subcommand(
      "verify-example", "run bundled worked-example entries");
  std::vector<std::string> ids;
  for (const CorpusEntry &e : corpus())
    ids.push_back(e.id);
  ids.push_back("all");
  c_verify->add_option("id", example_id, "entry id, or all")
      ->required()
      ->check(CLI::IsMember(ids));

  std::vector<const char *> argv;
  argv.push_back("segrec");
  for (const std::string &a : args)
    argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 3;
  }

  const std::string command = join_args(args);
  Json payload;
  std::string status = "ok";
  int rc = 0;
  std::optional<std::uint64_t> rep_seed;
  int rep_trunc = -1;
  std::string custom_text;

  try {
    if (c_validate->parsed()) {
      Problem P = load_problem(file, default_trunc_order(trunc_flag));
      rep_trunc = P.trunc_order;
      MapCheck mc = validate_map(P);
      payload["ok"] = mc.ok;
      payload["residual"] = mc.residual;
      payload["offending_monomial"] = mc.offending_monomial;
      payload["source"] = json_model_info(P.M);
      payload["target"] = json_model_info(P.Mp);
      Json comps = Json::array();
      for (const MultiPoly &g : P.f)
        comps.push_back(g.str());
      Json jmap;
      jmap["name"] = P.map_name;
      jmap["components"] = comps;
      jmap["trunc_order"] = P.trunc_order;
      payload["map"] = jmap;
      payload["canonical"] = emit_problem(P);
      if (!mc.ok) {
        status = "invalid";
        rc = 1;
      }
    } else if (c_segre->parsed()) {
      Problem P = load_problem(file, default_trunc_order(trunc_flag));
      rep_trunc = P.trunc_order;
      std::vector<GaussRat> w =
          parse_point(P.uni, at_text, static_cast<std::size_t>(P.M.n), "--at");
      std::vector<GaussRat> wb = conj_point(w);
      std::map<int, GaussRat> vals;
      std::vector<int> wbv = P.wb_vars();
      for (std::size_t k = 0; k < wb.size(); ++k)
        vals[wbv[k]] = wb[k];
      std::vector<int> zv = P.z_vars();
      std::vector<MultiPoly> eqs;
      for (int j = 0; j < P.M.d; ++j) {
        MultiPoly rho = MultiPoly::variable(P.uni, zv[P.M.m + j]) -
                        P.theta_src[static_cast<std::size_t>(j)];
        eqs.push_back(P.clip(rho.eval_partial(vals)));
      }
      std::vector<MultiPoly> par;
      for (const MultiPoly &p : segre_parametrize(P))
        par.push_back(P.clip(p.eval_partial(vals)));
      payload["point"] = json_point(w);
      payload["conjugate"] = json_point(wb);
      payload["equations"] = json_polys(eqs);
      payload["parametrization"] = json_polys(par);
    } else if (c_reflect1->parsed()) {
      Problem P = load_problem(file, default_trunc_order(trunc_flag));
      rep_trunc = P.trunc_order;
      FirstReflection fr = first_reflection(P);
      payload["system"] = json_system(fr.sys);
      payload["family"] = json_family(P.uni, fr.family);
    } else if (c_reflect2->parsed()) {
      Problem P = load_problem(file, default_trunc_order(trunc_flag));
      rep_trunc = P.trunc_order;
      Scope sc = resolve_scope(P, scope_name);
      SecondReflection sr = second_reflection(P, sc);
      payload["scope"] = json_scope(sc);
      payload["first"] = json_system(sr.first.sys);
      payload["system"] = json_system(sr.sys);
      payload["family"] = json_family(P.uni, sr.family);
    } else if (c_shrink->parsed()) {
      Problem P = load_problem(file, default_trunc_order(trunc_flag));
      rep_trunc = P.trunc_order;
      FirstReflection fr = first_reflection(P);
      ShrinkResult sh = minor_filtration(P, fr.sys, resolve_mode(mode_name));
      payload["mode"] = mode_name;
      payload["system"] = json_system(sh.sys);
      payload["trace"] = json_trace(sh.trace);
      payload["family"] = json_family(P.uni, sh.family);
    } else if (c_dims->parsed()) {
      Problem P = load_problem(file, default_trunc_order(trunc_flag));
      rep_trunc = P.trunc_order;
      ChainTuple t = parse_tuple(P, at_text);
      if (!tuple_admissible(P, t))
        throw ValidationError(
            "the tuple does not satisfy the chain relations");
      Scope sc = resolve_scope(P, scope_name);
      payload = json_dim_record(dims_at(P, t, sc));
      payload["scope"] = json_scope(sc);
    } else if (c_classify->parsed()) {
      Problem P = load_problem(file, default_trunc_order(trunc_flag));
      rep_trunc = P.trunc_order;
      Scope sc = resolve_scope(P, scope_name);
      payload =
          json_determinacy(classify(P, samples, seed, sc,
                                    resolve_mode(mode_name)));
      rep_seed = seed;
    } else if (c_depend->parsed()) {
      Problem P = load_problem(file, default_trunc_order(trunc_flag));
      rep_trunc = P.trunc_order;
      std::vector<GaussRat> w =
          parse_point(P.uni, fix_text, static_cast<std::size_t>(P.M.n),
                      "--fix");
      Scope sc = resolve_scope(P, scope_name);
      payload = json_depend(algebraic_dependence(P, conj_point(w), sc));
      payload["scope"] = json_scope(sc);
    } else if (c_verify->parsed()) {
      std::vector<const CorpusEntry *> todo;
      if (example_id == "all") {
        for (const CorpusEntry &e : corpus())
          todo.push_back(&e);
      } else {
        todo.push_back(find_entry(example_id));
      }
      std::vector<std::future<CorpusOutcome>> futs;
      futs.reserve(todo.size());
      for (const CorpusEntry *e : todo)
        futs.push_back(
            std::async(std::launch::async, [e] { return run_entry(*e); }));
      std::vector<CorpusOutcome> outs;
      outs.reserve(futs.size());
      bool all_pass = true;
      for (std::future<CorpusOutcome> &f : futs) {
        outs.push_back(f.get());
        all_pass = all_pass && outs.back().pass;
      }
      Json entries = Json::array();
      for (const CorpusOutcome &o : outs)
        entries.push_back(json_outcome(o));
      payload["all_pass"] = all_pass;
      payload["entries"] = entries;
      if (!all_pass) {
        status = "mismatch";
        rc = 2;
      }
      custom_text = corpus_text(outs);
    }
  } catch (const ParseError &e) {
    payload = Json::object();
    payload["error"] = e.what();
    payload["kind"] = "parse";
    payload["line"] = e.line;
    payload["col"] = e.col;
    status = "invalid";
    rc = 1;
  } catch (const BadSetError &e) {
    payload = Json::object();
    payload["error"] = e.what();
    payload["kind"] = "bad-set";
    status = "invalid";
    rc = 1;
  } catch (const NoFiniteDeterminacyError &e) {
    payload = Json::object();
    payload["error"] = e.what();
    payload["kind"] = "no-finite-determinacy";
    status = "invalid";
    rc = 1;
  } catch (const UnsupportedError &e) {
    payload = Json::object();
    payload["error"] = e.what();
    payload["kind"] = "unsupported";
    status = "invalid";
    rc = 1;
  } catch (const ValidationError &e) {
    payload = Json::object();
    payload["error"] = e.what();
    payload["kind"] = "validation";
    status = "invalid";
    rc = 1;
  } catch (const Error &e) {
    payload = Json::object();
    payload["error"] = e.what();
    payload["kind"] = "error";
    status = "invalid";
    rc = 1;
  }

  if (format == "text" && !custom_text.empty()) {
    out << custom_text;
    return rc;
  }
  Json rep = make_report(command, payload, status, rc, rep_seed, rep_trunc);
  out << (format == "text" ? render_text(rep) : render_json(rep));
  return rc;
}

} // namespace segrekit
