#include "segrekit/report.hpp"

#include <sstream>

namespace segrekit {

namespace {

Json json_opt_int(const std::optional<int> &v) {
  return v ? Json(*v) : Json(nullptr);
}

Json json_values(const std::vector<GaussRat> &vals) {
  Json a = Json::array();
  for (const GaussRat &v : vals)
    a.push_back(v.str());
  return a;
}

std::string stage_name(Stage s) {
  switch (s) {
  case Stage::First:
    return "first";
  case Stage::Second:
    return "second";
  default:
    return "combined";
  }
}

} // namespace

Json json_polys(const std::vector<MultiPoly> &ps) {
  Json a = Json::array();
  for (const MultiPoly &p : ps)
    a.push_back(p.str());
  return a;
}

Json json_scope(const Scope &scope) {
  Json j;
  j["kind"] = scope.is_localized() ? "localized" : "global";
  if (scope.is_localized()) {
    Json radii = Json::array();
    for (const Rat &r : scope.polyradius)
      radii.push_back(r.str());
    j["polyradius"] = radii;
  }
  return j;
}

Json json_branch(const UniversePtr &uni, const Branch &b) {
  Json j;
  j["generators"] = json_polys(b.ideal.gens);
  j["dimension"] = b.dimension();
  j["possibly_reducible"] = b.possibly_reducible;
  j["has_graph"] = b.has_graph;
  if (b.has_graph) {
    Json solved = Json::object();
    for (const auto &[v, p] : b.solved)
      solved[uni->name(v)] = p.str();
    j["solved"] = solved;
    Json fv = Json::array();
    for (int v : b.free_vars)
      fv.push_back(uni->name(v));
    j["free"] = fv;
  }
  Json pinned = Json::object();
  for (const auto &[v, c] : b.pinned)
    pinned[uni->name(v)] = c.str();
  j["pinned"] = pinned;
  return j;
}

Json json_family(const UniversePtr &uni, const AlgFamily &fam) {
  Json j;
  Json branches = Json::array();
  for (const Branch &b : fam.branches)
    branches.push_back(json_branch(uni, b));
  j["branches"] = branches;
  j["dimension"] = family_dimension(fam.branches);
  j["scope_filtered"] = fam.scope_filtered;
  return j;
}

Json json_system(const ReflectionSystem &sys) {
  Json j;
  j["stage"] = stage_name(sys.stage);
  j["scope"] = json_scope(sys.scope);
  j["generators"] = json_polys(sys.gens);
  j["provenance"] = Json(sys.provenance);
  return j;
}

Json json_trace(const FiltrationTrace &trace) {
  Json j;
  Json stages = Json::array();
  for (const FiltrationStage &st : trace.stages) {
    Json s;
    s["generators_before"] = st.gen_count;
    s["minors_added"] = json_polys(st.added);
    s["status"] = st.status;
    stages.push_back(s);
  }
  j["stages"] = stages;
  j["terminal_stage"] = trace.terminal_stage;
  j["witness_minor"] =
      trace.witness_minor ? Json(trace.witness_minor->str()) : Json(nullptr);
  return j;
}

Json json_graph_form(const UniversePtr &uni, const GraphForm &gf) {
  Json j;
  Json fv = Json::array();
  for (int v : gf.free_vars)
    fv.push_back(uni->name(v));
  j["free"] = fv;
  Json sv = Json::array();
  for (int v : gf.solved_vars)
    sv.push_back(uni->name(v));
  j["solved_order"] = sv;
  Json sol = Json::object();
  for (const auto &[v, p] : gf.solution)
    sol[uni->name(v)] = p.str();
  j["solution"] = sol;
  j["minor"] = gf.minor.str();
  j["rows"] = Json(gf.rows);
  j["cols"] = Json(gf.cols);
  return j;
}

Json json_tuple(const ChainTuple &t) {
  Json j;
  j["z"] = json_values(t.z);
  j["wb"] = json_values(t.wb);
  j["u"] = json_values(t.u);
  j["diagonal"] = t.diagonal;
  return j;
}

Json json_dim_record(const DimRecord &rec) {
  Json j;
  j["tuple"] = json_tuple(rec.tuple);
  j["family"] = family_name(rec.family);
  Json dims;
  dims["V"] = json_opt_int(rec.dim_v);
  dims["W"] = json_opt_int(rec.dim_w);
  dims["X"] = json_opt_int(rec.dim_x);
  dims["Z"] = json_opt_int(rec.dim_z);
  dims["M"] = json_opt_int(rec.dim_m);
  j["dims"] = dims;
  j["immersion_rank"] = json_opt_int(rec.immersion);
  j["possibly_reducible"] = rec.possibly_reducible;
  j["note"] = rec.note;
  return j;
}

Json json_determinacy(const DeterminacyReport &rep) {
  Json j;
  j["scope"] = json_scope(rep.scope);
  j["mode"] = rep.mode == ShrinkMode::Filtration ? "prop16" : "sing";
  j["samples"] = rep.samples;
  j["seed"] = rep.seed;
  Json records = Json::array();
  for (const DimRecord &r : rep.records)
    records.push_back(json_dim_record(r));
  j["records"] = records;
  Json conditions = Json::array();
  for (const ConditionRecord &c : rep.conditions) {
    Json jc;
    jc["condition"] = c.id.key();
    jc["family"] = family_name(c.id.family);
    jc["index"] = c.id.index;
    jc["set"] = set_name(c.id.set());
    jc["verdict"] = c.verdict;
    jc["samples_tested"] = c.samples_tested;
    jc["witness"] = c.witness;
    conditions.push_back(jc);
  }
  j["conditions"] = conditions;
  Json verdicts = Json::array();
  for (const Verdict &v : rep.verdicts) {
    Json jv;
    jv["route"] = v.route;
    jv["triggered_by"] = v.triggered_by;
    jv["conclusion"] = v.conclusion;
    jv["evidence"] = v.evidence;
    verdicts.push_back(jv);
  }
  j["verdicts"] = verdicts;
  Json tables = Json::array();
  for (const ImplicationTable &t : rep.tables) {
    Json jt;
    jt["rows"] = family_name(t.rows);
    jt["cols"] = family_name(t.cols);
    Json cells = Json::array();
    for (int r = 0; r < 4; ++r) {
      Json row = Json::array();
      for (int c = 0; c < 4; ++c) {
        Json cell;
        cell["forward"] = t.cells[r][c].forward;
        cell["backward"] = t.cells[r][c].backward;
        row.push_back(cell);
      }
      cells.push_back(row);
    }
    jt["cells"] = cells;
    tables.push_back(jt);
  }
  j["tables"] = tables;
  j["truncation_caveat"] = rep.truncation_caveat;
  return j;
}

Json json_depend(const DependResult &dep) {
  Json j;
  j["wb"] = json_values(dep.wb);
  j["u"] = json_values(dep.u);
  j["x_route"] = dep.x_route;
  j["z_route"] = dep.z_route;
  Json rels = Json::array();
  for (const CoordinateRelation &r : dep.relations) {
    Json jr;
    jr["coordinate"] = r.coordinate;
    jr["relation"] = r.poly.str();
    jr["degree"] = r.degree;
    jr["monic"] = r.monic;
    jr["verified"] = r.verified;
    rels.push_back(jr);
  }
  j["relations"] = rels;
  return j;
}

Json make_report(const std::string &command, const Json &payload,
                 const std::string &status, int exit_code,
                 std::optional<std::uint64_t> seed, int truncation_order) {
  Json j;
  j["schema_version"] = 1;
  j["command"] = command;
  j["seed"] = seed ? Json(*seed) : Json(nullptr);
  j["truncation_order"] = truncation_order;
  j["status"] = status;
  j["exit_code"] = exit_code;
  j["payload"] = payload;
  return j;
}

std::string render_json(const Json &j) { return j.dump(2) + "\n"; }

namespace {

bool scalar_array(const Json &j) {
  for (const Json &e : j)
    if (e.is_structured())
      return false;
  return true;
}

std::string scalar_str(const Json &j) {
  if (j.is_string())
    return j.get<std::string>();
  return j.dump();
}

void render_text_into(const Json &j, std::ostringstream &out,
                      const std::string &indent) {
  if (j.is_object()) {
    for (const auto &[key, value] : j.items()) {
      if (value.is_object() && !value.empty()) {
        out << indent << key << ":\n";
        render_text_into(value, out, indent + "  ");
      } else if (value.is_array() && !value.empty() && !scalar_array(value)) {
        out << indent << key << ":\n";
        render_text_into(value, out, indent + "  ");
      } else if (value.is_array() && scalar_array(value)) {
        out << indent << key << ": [";
        for (std::size_t i = 0; i < value.size(); ++i)
          out << (i ? ", " : "") << scalar_str(value[i]);
        out << "]\n";
      } else if (value.is_object()) {
        out << indent << key << ": {}\n";
      } else {
        out << indent << key << ": " << scalar_str(value) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const Json &e : j) {
      if (e.is_structured()) {
        out << indent << "-\n";
        render_text_into(e, out, indent + "  ");
      } else {
        out << indent << "- " << scalar_str(e) << "\n";
      }
    }
  } else {
    out << indent << scalar_str(j) << "\n";
  }
}

} // namespace

std::string render_text(const Json &j) {
  std::ostringstream out;
  render_text_into(j, out, "");
  return out.str();
}

} // namespace segrekit
