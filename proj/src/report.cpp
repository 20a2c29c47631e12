#include "randic/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "randic/enumeration.hpp"
#include "randic/graph6.hpp"

namespace randic {

using json = nlohmann::ordered_json;

ReportFormat parse_report_format(const std::string& text) {
  if (text == "csv") return ReportFormat::kCsv;
  if (text == "jsonl") return ReportFormat::kJsonl;
  throw std::invalid_argument("unknown format '" + text + "' (expected csv or jsonl)");
}

bool ReportRecord::any_violation() const {
  for (const auto& v : verdicts) {
    if (!v.holds) return true;
  }
  return false;
}

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

namespace {

// JSON numbers carry the same 12-digit value the CSV prints.
double rounded(double x) { return std::strtod(format_real(x).c_str(), nullptr); }

std::string short_name(ClaimId id) {
  switch (id) {
    case ClaimId::kC1Additive:
      return "c1_add";
    case ClaimId::kC1Ratio:
      return "c1_ratio";
    case ClaimId::kC2:
      return "c2";
  }
  return "?";
}

const char* bool_text(bool b) { return b ? "true" : "false"; }

template <typename T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

json optional_real(const std::optional<double>& v) { return v ? json(rounded(*v)) : json(nullptr); }

std::string join_ints(const std::vector<int>& xs, char sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

json header_json(const ReportHeader& h) {
  json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["command"] = h.command;
  j["rng"] = kRngAlgorithm;
  j["seed"] = optional_json(h.seed);
  j["tol"] = h.tol;
  j["filter"] = h.filter;
  return j;
}

void write_csv_header(std::ostream& out, const ReportHeader& h) {
  out << "# tool=" << kToolName << " version=" << kToolVersion << "\n";
  out << "# command=" << h.command << "\n";
  out << "# rng=" << kRngAlgorithm << " seed=" << (h.seed ? std::to_string(*h.seed) : "none") << "\n";
  out << "# tol=" << format_real(h.tol) << "\n";
  out << "# filter=" << h.filter << "\n";
}

std::string csv_optional(const std::optional<double>& v) { return v ? format_real(*v) : ""; }

}  // namespace

ReportRecord build_record(const Graph& g, double tol) {
  ReportRecord r;
  r.graph_id = serialize_graph6(g);
  r.invariants = invariant_report(g);
  r.premises = premises(g);
  const auto& inv = r.invariants;

  if (inv.n >= 2 && inv.min_degree >= 1) r.bounds = bounds::bound_profile(inv.n, inv.min_degree);

  if (!inv.is_connected) {
    r.anomalies.push_back("disconnected");
  } else {
    if (inv.n >= 3) {
      r.verdicts.push_back(check_c1_additive(g, tol));
      r.verdicts.push_back(check_c1_ratio(g, tol));
    }
    if (inv.n >= 2) r.verdicts.push_back(check_c2(g, tol));
  }

  for (const auto& v : r.verdicts) {
    const std::string name = short_name(v.claim);
    if (!v.holds) r.anomalies.push_back(name + "_violated");
    if (v.structural_mismatch) {
      const bool near_zero = std::abs(v.slack) <= v.tolerance;
      r.anomalies.push_back(name + (near_zero ? "_equality_off_extremal" : "_extremal_without_equality"));
    }
  }

  if (r.bounds) {
    const auto& b = *r.bounds;
    if (inv.diameter && b.erdos_diam && *inv.diameter > *b.erdos_diam + tol) {
      r.anomalies.push_back("erdos_diameter_bound_exceeded");
    }
    if (inv.avg_distance && *inv.avg_distance > b.kw_mu + tol) {
      r.anomalies.push_back("kouider_winkler_bound_exceeded");
    }
    if (inv.randic < b.randic_lb - tol) r.anomalies.push_back("randic_below_lower_bound");
  }
  return r;
}

const std::vector<std::string>& check_csv_columns() {
  static const std::vector<std::string> columns = {
      "graph6",         "n",              "m",
      "min_degree",     "degree_sequence", "is_connected",
      "randic",         "diameter",       "avg_distance",
      "c1_add_holds",   "c1_add_slack",   "c1_add_equality",
      "c1_ratio_holds", "c1_ratio_slack", "c1_ratio_equality",
      "c2_holds",       "c2_slack",       "c2_equality",
      "part1",          "part2",          "part3",
      "erdos_diam",     "kw_mu",          "randic_lb",
      "regime",         "p_candidates",   "p_rule",
      "g_val",          "anomalies"};
  return columns;
}

void RecordWriter::header(const ReportHeader& h) {
  if (format_ == ReportFormat::kJsonl) {
    out_ << json{{"header", header_json(h)}}.dump() << "\n";
    return;
  }
  write_csv_header(out_, h);
  const auto& cols = check_csv_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) out_ << (i ? "," : "") << cols[i];
  out_ << "\n";
}

void RecordWriter::record(const ReportRecord& r) {
  const auto& inv = r.invariants;
  std::optional<double> diam;
  if (inv.diameter) diam = *inv.diameter;

  if (format_ == ReportFormat::kJsonl) {
    json j;
    j["graph6"] = r.graph_id;
    j["invariants"] = {{"n", inv.n},
                       {"m", inv.m},
                       {"min_degree", inv.min_degree},
                       {"degree_sequence", inv.degree_sequence},
                       {"is_connected", inv.is_connected},
                       {"randic", rounded(inv.randic)},
                       {"diameter", optional_json(inv.diameter)},
                       {"avg_distance", optional_real(inv.avg_distance)}};
    json verdicts = json::array();
    for (const auto& v : r.verdicts) {
      verdicts.push_back({{"claim", claim_name(v.claim)},
                          {"holds", v.holds},
                          {"slack", rounded(v.slack)},
                          {"is_equality", v.is_equality},
                          {"tolerance", v.tolerance}});
    }
    j["verdicts"] = verdicts;
    j["premises"] = {{"part1", r.premises.part1}, {"part2", r.premises.part2}, {"part3", r.premises.part3}};
    if (r.bounds) {
      const auto& b = *r.bounds;
      json p = nullptr;
      if (b.p_used) p = {{"candidates", b.p_used->candidates}, {"rule_id", b.p_used->rule_id}};
      j["bounds"] = {{"n", b.n},
                     {"k", b.k},
                     {"erdos_diam", optional_real(b.erdos_diam)},
                     {"kw_mu", rounded(b.kw_mu)},
                     {"randic_lb", rounded(b.randic_lb)},
                     {"regime", bounds::regime_name(b.regime)},
                     {"p_used", p},
                     {"g_val", rounded(b.g_val)}};
    } else {
      j["bounds"] = nullptr;
    }
    j["anomalies"] = r.anomalies;
    out_ << j.dump() << "\n";
    return;
  }

  std::string c1a[3], c1r[3], c2[3];
  for (const auto& v : r.verdicts) {
    std::string* dst = v.claim == ClaimId::kC1Additive ? c1a : v.claim == ClaimId::kC1Ratio ? c1r : c2;
    dst[0] = bool_text(v.holds);
    dst[1] = format_real(v.slack);
    dst[2] = bool_text(v.is_equality);
  }
  std::string erdos, kw, lb, regime, pc, prule, gval;
  if (r.bounds) {
    const auto& b = *r.bounds;
    erdos = csv_optional(b.erdos_diam);
    kw = format_real(b.kw_mu);
    lb = format_real(b.randic_lb);
    regime = bounds::regime_name(b.regime);
    if (b.p_used) {
      pc = join_ints(b.p_used->candidates, ' ');
      prule = std::to_string(b.p_used->rule_id);
    }
    gval = format_real(b.g_val);
  }
  std::string anomalies;
  for (std::size_t i = 0; i < r.anomalies.size(); ++i) anomalies += (i ? ";" : "") + r.anomalies[i];

  out_ << r.graph_id << ',' << inv.n << ',' << inv.m << ',' << inv.min_degree << ','
       << join_ints(inv.degree_sequence, ' ') << ',' << bool_text(inv.is_connected) << ','
       << format_real(inv.randic) << ',' << csv_optional(diam) << ',' << csv_optional(inv.avg_distance);
  for (auto* cols : {c1a, c1r, c2}) out_ << ',' << cols[0] << ',' << cols[1] << ',' << cols[2];
  out_ << ',' << bool_text(r.premises.part1) << ',' << bool_text(r.premises.part2) << ','
       << bool_text(r.premises.part3) << ',' << erdos << ',' << kw << ',' << lb << ',' << regime << ',' << pc
       << ',' << prule << ',' << gval << ',' << anomalies << "\n";
}

namespace {

json cell_json(const GridCell& c) {
  return {{"n", c.n}, {"k", c.k}, {"p", c.p ? json(*c.p) : json(nullptr)}, {"value", rounded(c.value)}};
}

void csv_cell_row(std::ostream& out, const char* kind, const FamilyResult& f, const GridCell& c) {
  out << kind << ',' << f.name << ',' << claim_kind_symbol(f.kind) << ',' << c.n << ',' << c.k << ','
      << (c.p ? format_real(*c.p) : "") << ',' << format_real(c.value) << ",,,,\n";
}

}  // namespace

void write_survey(std::ostream& out, ReportFormat format, const ReportHeader& h, const SurveyResult& s) {
  if (format == ReportFormat::kJsonl) {
    json head = header_json(h);
    head["n_max"] = s.n_max;
    out << json{{"header", head}}.dump() << "\n";
    for (const auto& f : s.families) {
      json j;
      j["family"] = f.name;
      j["claim"] = claim_kind_symbol(f.kind);
      j["region"] = f.region;
      j["cells"] = f.cells;
      j["claim_cells"] = f.claim_cells;
      j["violations"] = f.violations;
      j["boundary"] = f.boundary;
      j["minimum"] = f.minimum ? cell_json(*f.minimum) : json(nullptr);
      json viol = json::array(), bound = json::array();
      for (const auto& c : f.violation_samples) viol.push_back(cell_json(c));
      for (const auto& c : f.boundary_samples) bound.push_back(cell_json(c));
      j["violation_samples"] = viol;
      j["boundary_samples"] = bound;
      out << j.dump() << "\n";
    }
    out << json{{"summary", {{"total_violations", s.total_violations()}}}}.dump() << "\n";
    return;
  }
  write_csv_header(out, h);
  out << "# n_max=" << s.n_max << "\n";
  out << "row,family,claim,n,k,p,value,cells,claim_cells,violations,boundary\n";
  for (const auto& f : s.families) {
    out << "summary," << f.name << ',' << claim_kind_symbol(f.kind) << ',';
    if (f.minimum) {
      out << f.minimum->n << ',' << f.minimum->k << ',' << (f.minimum->p ? format_real(*f.minimum->p) : "") << ','
          << format_real(f.minimum->value);
    } else {
      out << ",,,";
    }
    out << ',' << f.cells << ',' << f.claim_cells << ',' << f.violations << ',' << f.boundary << "\n";
    for (const auto& c : f.violation_samples) csv_cell_row(out, "violation", f, c);
    for (const auto& c : f.boundary_samples) csv_cell_row(out, "boundary", f, c);
  }
}

void write_hunt(std::ostream& out, ReportFormat format, const ReportHeader& h, const SearchState& s, int n,
                int delta, int budget) {
  const bool counterexample = s.best_slack < -h.tol;
  if (format == ReportFormat::kJsonl) {
    json head = header_json(h);
    head["claim"] = claim_name(s.claim);
    head["n"] = n;
    head["delta"] = delta;
    head["budget"] = budget;
    out << json{{"header", head}}.dump() << "\n";
    for (const auto& t : s.trace) {
      json j{{"type", "step"}, {"step", t.step}, {"event", step_event_name(t.event)}};
      j["edge"] = t.toggled ? json::array({t.toggled->first, t.toggled->second}) : json(nullptr);
      j["slack"] = rounded(t.slack);
      j["best_slack"] = rounded(t.best_slack);
      j["graph6"] = serialize_graph6(t.graph);
      out << j.dump() << "\n";
    }
    out << json{{"type", "result"},
                {"claim", claim_name(s.claim)},
                {"steps", s.step},
                {"restarts", s.restarts},
                {"best_slack", rounded(s.best_slack)},
                {"best_graph6", serialize_graph6(s.best)},
                {"is_path", is_path(s.best)},
                {"counterexample", counterexample}}
               .dump()
        << "\n";
    return;
  }
  write_csv_header(out, h);
  out << "# claim=" << claim_name(s.claim) << " n=" << n << " delta=" << delta << " budget=" << budget << "\n";
  out << "type,step,event,u,v,slack,best_slack,graph6\n";
  for (const auto& t : s.trace) {
    out << "step," << t.step << ',' << step_event_name(t.event) << ',';
    if (t.toggled) {
      out << t.toggled->first << ',' << t.toggled->second;
    } else {
      out << ',';
    }
    out << ',' << format_real(t.slack) << ',' << format_real(t.best_slack) << ',' << serialize_graph6(t.graph) << "\n";
  }
  out << "result," << s.step << ',' << (counterexample ? "counterexample" : "best") << ",,,"
      << format_real(s.best_slack) << ',' << format_real(s.best_slack) << ',' << serialize_graph6(s.best) << "\n";
}

}  // namespace randic
