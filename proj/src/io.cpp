#include "ivqrof/io.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ivqrof/error.hpp"
#include "ivqrof/rounding.hpp"

namespace ivqrof {

namespace {

using json = nlohmann::ordered_json;
// doubles are dumped in shortest round-trip form, so full precision survives
using precise_json = json;

const std::set<std::string> problem_keys = {"version", "parameters", "attributes", "alternatives", "experts"};
const std::set<std::string> parameter_keys = {"q",     "p",     "alpha",         "lambda",
                                              "theta", "distance_mode", "similarity_decimals"};

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!allowed.count(it.key())) throw parse_error(where + ": unknown key \"" + it.key() + "\"");
  }
}

double number_at(const json& v, const std::string& where) {
  if (!v.is_number()) throw parse_error(where + ": expected a number");
  return v.get<double>();
}

std::string string_at(const json& v, const std::string& where) {
  if (!v.is_string()) throw parse_error(where + ": expected a string");
  return v.get<std::string>();
}

Polarity parse_polarity(const json& v, const std::string& where) {
  const std::string s = string_at(v, where);
  if (s == "benefit") return Polarity::benefit;
  if (s == "cost") return Polarity::cost;
  throw parse_error(where + ": polarity must be \"benefit\" or \"cost\", got \"" + s + "\"");
}

SolveParams parse_parameters(const json& obj) {
  SolveParams p;
  if (!obj.is_object()) throw parse_error("parameters: expected an object");
  reject_unknown(obj, parameter_keys, "parameters");
  if (obj.contains("q") && !obj["q"].is_null()) p.q = number_at(obj["q"], "parameters.q");
  if (obj.contains("p")) p.p = number_at(obj["p"], "parameters.p");
  if (obj.contains("alpha")) p.alpha = number_at(obj["alpha"], "parameters.alpha");
  if (obj.contains("lambda")) p.lambda = number_at(obj["lambda"], "parameters.lambda");
  if (obj.contains("theta")) p.theta = number_at(obj["theta"], "parameters.theta");
  if (obj.contains("distance_mode")) {
    try {
      p.mode = parse_distance_mode(string_at(obj["distance_mode"], "parameters.distance_mode"));
    } catch (const parameter_error& e) {
      throw parse_error(std::string("parameters.distance_mode: ") + e.what());
    }
  }
  if (obj.contains("similarity_decimals") && !obj["similarity_decimals"].is_null()) {
    const auto& v = obj["similarity_decimals"];
    if (!v.is_number_integer()) throw parse_error("parameters.similarity_decimals: expected an integer");
    p.similarity_decimals = v.get<int>();
  }
  return p;
}

Matrix<IVqROFN> parse_matrix(const json& v, std::size_t t) {
  const std::string ex = "expert " + std::to_string(t + 1);
  if (!v.is_array() || v.empty()) throw parse_error(ex + ": matrix must be a non-empty array of rows");
  const std::size_t m = v.size();
  if (!v[0].is_array() || v[0].empty()) throw parse_error(ex + ", row 1: expected a non-empty array of cells");
  const std::size_t n = v[0].size();
  Matrix<IVqROFN> out(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    const std::string row = ex + ", row " + std::to_string(i + 1);
    if (!v[i].is_array()) throw parse_error(row + ": expected an array of cells");
    if (v[i].size() != n) {
      throw parse_error(row + ": has " + std::to_string(v[i].size()) + " cells, expected " + std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      const std::string cell = row + ", col " + std::to_string(j + 1);
      const auto& c = v[i][j];
      if (!c.is_array() || c.size() != 4) throw parse_error(cell + ": expected [mu_lo, mu_hi, nu_lo, nu_hi]");
      double x[4];
      for (int s = 0; s < 4; ++s) x[s] = number_at(c[s], cell);
      out(i, j) = make_number(x[0], x[1], x[2], x[3]);
    }
  }
  return out;
}

json number_json(const IVqROFN& a) { return json::array({a.mu.lo, a.mu.hi, a.nu.lo, a.nu.hi}); }

precise_json precise(double x) { return precise_json(x); }

precise_json precise(const IVqROFN& a) {
  return precise_json::array({precise(a.mu.lo), precise(a.mu.hi), precise(a.nu.lo), precise(a.nu.hi)});
}

precise_json precise(const std::vector<double>& v) {
  precise_json out = precise_json::array();
  for (double x : v) out.push_back(precise(x));
  return out;
}

precise_json precise(const std::vector<IVqROFN>& v) {
  precise_json out = precise_json::array();
  for (const auto& a : v) out.push_back(precise(a));
  return out;
}

template <typename T>
precise_json precise(const Matrix<T>& mtx) {
  precise_json out = precise_json::array();
  for (std::size_t i = 0; i < mtx.rows(); ++i) out.push_back(precise(mtx.row(i)));
  return out;
}

std::string printed(const IVqROFN& a, int decimals) {
  return "<[" + fixed(a.mu.lo, decimals) + "," + fixed(a.mu.hi, decimals) + "],[" + fixed(a.nu.lo, decimals) + "," +
         fixed(a.nu.hi, decimals) + "]>";
}

precise_json printed(const std::vector<double>& v, int decimals) {
  precise_json out = precise_json::array();
  for (double x : v) out.push_back(fixed(x, decimals));
  return out;
}

precise_json printed(const std::vector<IVqROFN>& v, int decimals) {
  precise_json out = precise_json::array();
  for (const auto& a : v) out.push_back(printed(a, decimals));
  return out;
}

template <typename T>
precise_json printed(const Matrix<T>& mtx, int decimals) {
  precise_json out = precise_json::array();
  for (std::size_t i = 0; i < mtx.rows(); ++i) out.push_back(printed(mtx.row(i), decimals));
  return out;
}

precise_json parameters_json(const SolveParams& p) {
  precise_json out = precise_json::object();
  out["q"] = p.q ? precise(*p.q) : precise_json(nullptr);
  out["p"] = precise(p.p);
  out["alpha"] = precise(p.alpha);
  out["beta"] = precise(1.0 - p.alpha);
  out["lambda"] = precise(p.lambda);
  out["theta"] = precise(p.theta);
  out["distance_mode"] = to_string(p.mode);
  out["similarity_decimals"] = p.similarity_decimals ? precise_json(*p.similarity_decimals) : precise_json(nullptr);
  return out;
}

precise_json names_json(const std::vector<std::string>& names) {
  precise_json out = precise_json::array();
  for (const auto& s : names) out.push_back(s);
  return out;
}

std::vector<std::string> attribute_names(const GroupProblem& g) {
  std::vector<std::string> out;
  for (const auto& a : g.attributes) out.push_back(a.name);
  return out;
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

void table_numbers(std::ostringstream& os, const std::string& title, const std::vector<std::string>& row_names,
                   const std::vector<std::string>& col_names, const Matrix<double>& mtx, int decimals) {
  os << title << "\n" << pad("", 8);
  for (const auto& c : col_names) os << pad(c, decimals + 5);
  os << "\n";
  for (std::size_t i = 0; i < mtx.rows(); ++i) {
    os << pad(row_names[i], 8);
    for (std::size_t j = 0; j < mtx.cols(); ++j) os << pad(fixed(mtx(i, j), decimals), decimals + 5);
    os << "\n";
  }
  os << "\n";
}

void table_fuzzy(std::ostringstream& os, const std::string& title, const std::vector<std::string>& row_names,
                 const std::vector<std::string>& col_names, const Matrix<IVqROFN>& mtx, int decimals) {
  const std::size_t width = 4 * (decimals + 2) + 11;
  os << title << "\n" << pad("", 8);
  for (const auto& c : col_names) os << pad(c, width);
  os << "\n";
  for (std::size_t i = 0; i < mtx.rows(); ++i) {
    os << pad(row_names[i], 8);
    for (std::size_t j = 0; j < mtx.cols(); ++j) os << pad(printed(mtx(i, j), decimals), width);
    os << "\n";
  }
  os << "\n";
}

void list_fuzzy(std::ostringstream& os, const std::string& title, const std::vector<std::string>& names,
                const std::vector<IVqROFN>& v, int decimals) {
  os << title << "\n";
  for (std::size_t i = 0; i < v.size(); ++i) os << "  " << pad(names[i], 8) << printed(v[i], decimals) << "\n";
  os << "\n";
}

void list_numbers(std::ostringstream& os, const std::string& title, const std::vector<std::string>& names,
                  const std::vector<double>& v, int decimals) {
  os << title << "\n";
  for (std::size_t i = 0; i < v.size(); ++i) os << "  " << pad(names[i], 8) << fixed(v[i], decimals) << "\n";
  os << "\n";
}

std::string fmt_param(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

}  // namespace

DistanceMode parse_distance_mode(std::string_view text) {
  if (text == "nis") return DistanceMode::nis;
  if (text == "pis") return DistanceMode::pis;
  if (text == "cis") return DistanceMode::cis;
  throw parameter_error("distance mode must be nis, pis or cis, got \"" + std::string(text) + "\"");
}

GroupProblem parse_problem(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document.begin(), document.end());
  } catch (const json::parse_error& e) {
    std::string what = e.what();
    if (const auto pos = what.find("] "); pos != std::string::npos) what = what.substr(pos + 2);
    throw parse_error("syntax error: " + what);
  }
  if (!doc.is_object()) throw parse_error("document: expected a JSON object at the top level");
  reject_unknown(doc, problem_keys, "document");
  if (!doc.contains("version")) throw parse_error("document: missing \"version\"");
  const std::string version = string_at(doc["version"], "version");
  if (version != problem_version) {
    throw parse_error("version: expected \"" + std::string(problem_version) + "\", got \"" + version + "\"");
  }
  if (!doc.contains("experts")) throw parse_error("document: missing \"experts\"");
  const json& experts = doc["experts"];
  if (!experts.is_array() || experts.empty()) throw parse_error("experts: expected a non-empty array");

  GroupProblem g;
  if (doc.contains("parameters")) g.params = parse_parameters(doc["parameters"]);

  std::vector<Matrix<IVqROFN>> cells;
  for (std::size_t t = 0; t < experts.size(); ++t) {
    const json& e = experts[t];
    const std::string where = "expert " + std::to_string(t + 1);
    if (!e.is_object()) throw parse_error(where + ": expected an object");
    reject_unknown(e, {"name", "matrix"}, where);
    g.expert_names.push_back(e.contains("name") ? string_at(e["name"], where + ".name") : "e" + std::to_string(t + 1));
    if (!e.contains("matrix")) throw parse_error(where + ": missing \"matrix\"");
    cells.push_back(parse_matrix(e["matrix"], t));
  }
  const std::size_t m = cells.front().rows();
  const std::size_t n = cells.front().cols();

  if (doc.contains("alternatives")) {
    const json& alts = doc["alternatives"];
    if (!alts.is_array()) throw parse_error("alternatives: expected an array of names");
    for (std::size_t i = 0; i < alts.size(); ++i) {
      g.alternatives.push_back(string_at(alts[i], "alternatives[" + std::to_string(i + 1) + "]"));
    }
  } else {
    for (std::size_t i = 0; i < m; ++i) g.alternatives.push_back("y" + std::to_string(i + 1));
  }
  if (doc.contains("attributes")) {
    const json& attrs = doc["attributes"];
    if (!attrs.is_array()) throw parse_error("attributes: expected an array");
    for (std::size_t j = 0; j < attrs.size(); ++j) {
      const std::string where = "attribute " + std::to_string(j + 1);
      const json& a = attrs[j];
      if (!a.is_object()) throw parse_error(where + ": expected an object with name and polarity");
      reject_unknown(a, {"name", "polarity"}, where);
      Attribute attr;
      attr.name = a.contains("name") ? string_at(a["name"], where + ".name") : "C" + std::to_string(j + 1);
      attr.polarity = a.contains("polarity") ? parse_polarity(a["polarity"], where + ".polarity") : Polarity::benefit;
      g.attributes.push_back(attr);
    }
  } else {
    for (std::size_t j = 0; j < n; ++j) g.attributes.push_back({"C" + std::to_string(j + 1), Polarity::benefit});
  }
  if (g.alternatives.size() != m) {
    throw parse_error(std::to_string(g.alternatives.size()) + " alternative names for " + std::to_string(m) +
                      " matrix rows");
  }
  if (g.attributes.size() != n) {
    throw parse_error(std::to_string(g.attributes.size()) + " attributes for " + std::to_string(n) + " matrix columns");
  }
  std::vector<Polarity> polarity;
  for (const auto& a : g.attributes) polarity.push_back(a.polarity);
  for (std::size_t t = 0; t < cells.size(); ++t) {
    if (cells[t].rows() != m || cells[t].cols() != n) {
      throw parse_error("expert " + std::to_string(t + 1) + ": matrix is " + std::to_string(cells[t].rows()) + "x" +
                        std::to_string(cells[t].cols()) + ", expected " + std::to_string(m) + "x" +
                        std::to_string(n));
    }
    g.experts.emplace_back(std::move(cells[t]), polarity);
  }
  validate(g);
  return g;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GroupProblem load_problem(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  try {
    return parse_problem(text);
  } catch (const parse_error& e) {
    throw parse_error(path.string() + ": " + e.what());
  }
}

std::string serialize_problem(const GroupProblem& g) {
  json doc = json::object();
  doc["version"] = problem_version;
  json params = json::object();
  if (g.params.q) params["q"] = *g.params.q;
  params["p"] = g.params.p;
  params["alpha"] = g.params.alpha;
  params["lambda"] = g.params.lambda;
  params["theta"] = g.params.theta;
  params["distance_mode"] = to_string(g.params.mode);
  if (g.params.similarity_decimals) params["similarity_decimals"] = *g.params.similarity_decimals;
  doc["parameters"] = params;
  json attrs = json::array();
  for (const auto& a : g.attributes) attrs.push_back({{"name", a.name}, {"polarity", to_string(a.polarity)}});
  doc["attributes"] = attrs;
  doc["alternatives"] = g.alternatives;
  json experts = json::array();
  for (std::size_t t = 0; t < g.k(); ++t) {
    json rows = json::array();
    for (std::size_t i = 0; i < g.experts[t].rows(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < g.experts[t].cols(); ++j) row.push_back(number_json(g.experts[t](i, j)));
      rows.push_back(row);
    }
    experts.push_back({{"name", g.expert_names[t]}, {"matrix", rows}});
  }
  doc["experts"] = experts;
  // one cell per line keeps hand edits easy
  std::string out = doc.dump(2);
  return out + "\n";
}

std::string ranking_line(const GroupProblem& g, const std::vector<double>& scores,
                         const std::vector<std::size_t>& order) {
  std::string out;
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (r > 0) out += scores[order[r - 1]] == scores[order[r]] ? " = " : " > ";
    out += g.alternatives[order[r]];
  }
  return out;
}

std::string serialize_result(const GroupProblem& g, const RankingResult& res) {
  precise_json doc = precise_json::object();
  doc["version"] = result_version;
  doc["parameters"] = parameters_json(res.params);
  doc["q_inferred"] = res.q_inferred;
  doc["alternatives"] = names_json(g.alternatives);
  doc["attributes"] = names_json(attribute_names(g));
  doc["experts"] = names_json(g.expert_names);

  precise_json sim = precise_json::array();
  for (const auto& s : res.dm.similarity) sim.push_back(precise(s));
  doc["similarity"] = sim;
  doc["similarity_sums"] = precise(res.dm.row_sums);
  doc["dm_weights"] = precise(res.dm.lambda);
  doc["aggregated"] = precise(res.aggregated);
  doc["standardized"] = precise(res.standardized);
  precise_json crit = precise_json::object();
  crit["means"] = precise(res.critic.means);
  crit["correlation"] = precise(res.critic.correlation);
  crit["stddev"] = precise(res.critic.stddev);
  crit["index"] = precise(res.critic.index);
  crit["interval_weights"] = precise(res.critic.weights);
  doc["critic"] = crit;
  doc["weight_distances"] = precise(res.distances);
  doc["weights"] = precise(res.weights);
  doc["wsm"] = precise(res.wsm);
  doc["wpm"] = precise(res.wpm);
  doc["r"] = precise(res.r);
  doc["scores"] = precise(res.scores);
  precise_json ranking = precise_json::array();
  for (std::size_t i : res.ranking) ranking.push_back(g.alternatives[i]);
  doc["ranking"] = ranking;

  precise_json view = precise_json::object();
  view["rounding"] = "half away from zero at the stated decimals";
  view["dm_weights_4dp"] = printed(res.dm.lambda, 4);
  view["aggregated_2dp"] = printed(res.aggregated, 2);
  view["interval_weights_3dp"] = printed(res.critic.weights, 3);
  view["weight_distances_3dp"] = printed(res.distances, 3);
  view["weights_5dp"] = printed(res.weights, 5);
  view["r_3dp"] = printed(res.r, 3);
  view["scores_5dp"] = printed(res.scores, 5);
  view["ranking"] = ranking_line(g, res.scores, res.ranking);
  doc["printed"] = view;

  precise_json audit = precise_json::object();
  audit["roundoff_clamps"] = res.audit.roundoff_clamps;
  audit["wide_clamps"] = res.audit.wide_clamps;
  precise_json entries = precise_json::array();
  for (const auto& e : res.audit.entries) {
    entries.push_back({{"stage", e.stage}, {"kind", e.kind}, {"detail", e.detail}});
  }
  audit["entries"] = entries;
  doc["audit"] = audit;
  return doc.dump(2) + "\n";
}

std::string serialize_sweep(const GroupProblem& g, const SensitivityReport& rep) {
  precise_json doc = precise_json::object();
  doc["version"] = sweep_version;
  doc["alternatives"] = names_json(g.alternatives);
  doc["stable"] = rep.stable;
  doc["first_divergence"] = rep.first_divergence ? precise_json(*rep.first_divergence) : precise_json(nullptr);
  precise_json points = precise_json::array();
  for (const auto& pt : rep.points) {
    precise_json p = precise_json::object();
    p["parameters"] = parameters_json(pt.params);
    p["scores"] = precise(pt.scores);
    precise_json ranking = precise_json::array();
    for (std::size_t i : pt.ranking) ranking.push_back(g.alternatives[i]);
    p["ranking"] = ranking;
    p["ranking_line"] = ranking_line(g, pt.scores, pt.ranking);
    points.push_back(p);
  }
  doc["points"] = points;
  return doc.dump(2) + "\n";
}

std::string sweep_series_csv(const GroupProblem& g, const SensitivityReport& rep) {
  std::ostringstream os;
  os << "point,q,p,alpha,lambda,theta,mode,alternative,score,rank\n";
  for (std::size_t idx = 0; idx < rep.points.size(); ++idx) {
    const auto& pt = rep.points[idx];
    std::vector<std::size_t> rank_of(pt.ranking.size());
    for (std::size_t r = 0; r < pt.ranking.size(); ++r) rank_of[pt.ranking[r]] = r + 1;
    for (std::size_t i = 0; i < pt.scores.size(); ++i) {
      char score[48];
      std::snprintf(score, sizeof score, "%.17g", pt.scores[i]);
      os << idx << ',' << fmt_param(pt.params.q.value_or(0.0)) << ',' << fmt_param(pt.params.p) << ','
         << fmt_param(pt.params.alpha) << ',' << fmt_param(pt.params.lambda) << ',' << fmt_param(pt.params.theta)
         << ',' << to_string(pt.params.mode) << ',' << g.alternatives[i] << ',' << score << ',' << rank_of[i]
         << '\n';
    }
  }
  return os.str();
}

std::string format_solve_report(const GroupProblem& g, const RankingResult& res, int verbosity) {
  std::ostringstream os;
  const auto& alts = g.alternatives;
  const auto attrs = attribute_names(g);
  const auto& p = res.params;
  os << "q = " << fmt_param(p.q.value_or(0.0)) << " (inferred " << res.q_inferred << "), p = " << fmt_param(p.p)
     << ", alpha = " << fmt_param(p.alpha) << ", beta = " << fmt_param(1.0 - p.alpha)
     << ", lambda = " << fmt_param(p.lambda) << ", theta = " << fmt_param(p.theta)
     << ", distance = " << to_string(p.mode) << "\n\n";

  if (verbosity >= 2) {
    for (std::size_t t = 0; t < g.k(); ++t) {
      table_numbers(os, "Similarity matrix SIM (" + g.expert_names[t] + ")", alts, attrs, res.dm.similarity[t], 2);
    }
    table_numbers(os, "Similarity sums per alternative and expert", alts, g.expert_names, res.dm.row_sums, 2);
  }
  if (verbosity >= 1) {
    table_numbers(os, "Decision-maker weight matrix", alts, g.expert_names, res.dm.lambda, 4);
    table_fuzzy(os, "Aggregated matrix R", alts, attrs, res.aggregated, 2);
  }
  if (verbosity >= 2) {
    table_fuzzy(os, "Standardized matrix X", alts, attrs, res.standardized, 2);
    list_fuzzy(os, "Column means", attrs, res.critic.means, 2);
    table_fuzzy(os, "Correlation coefficients", attrs, attrs, res.critic.correlation, 2);
    list_fuzzy(os, "Standard deviations", attrs, res.critic.stddev, 2);
    list_fuzzy(os, "Attribute index N", attrs, res.critic.index, 3);
  }
  if (verbosity >= 1) {
    list_fuzzy(os, "Interval attribute weights w", attrs, res.critic.weights, 3);
    list_numbers(os, "Weight distances d (" + to_string(p.mode) + ")", attrs, res.distances, 3);
  }
  list_numbers(os, "Attribute weights omega", attrs, res.weights, 5);
  if (verbosity >= 2) {
    list_fuzzy(os, "Weighted sum importance Q1", alts, res.wsm, 3);
    list_fuzzy(os, "Weighted product importance Q2", alts, res.wpm, 3);
  }
  if (verbosity >= 1) list_fuzzy(os, "Interval scores r", alts, res.r, 3);
  list_numbers(os, "Scores S(r)", alts, res.scores, 5);
  os << "Ranking: " << ranking_line(g, res.scores, res.ranking) << "\n";
  if (verbosity >= 1 && !res.audit.entries.empty()) {
    os << "\nAudit:\n";
    for (const auto& e : res.audit.entries) os << "  [" << e.stage << "] " << e.kind << ": " << e.detail << "\n";
  }
  if (verbosity >= 2) {
    os << "Clamped radicands: " << res.audit.roundoff_clamps << " roundoff, " << res.audit.wide_clamps << " wide\n";
  }
  return os.str();
}

void write_files_atomically(const std::vector<std::pair<std::filesystem::path, std::string>>& files) {
  std::vector<std::filesystem::path> temps;
  auto cleanup = [&] {
    std::error_code ec;
    for (const auto& t : temps) std::filesystem::remove(t, ec);
  };
  for (const auto& [path, text] : files) {
    auto tmp = path;
    tmp += ".partial";
    temps.push_back(tmp);
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << text;
    out.close();
    if (!out) {
      cleanup();
      throw parse_error("cannot write " + path.string());
    }
  }
  for (std::size_t i = 0; i < files.size(); ++i) {
    std::error_code ec;
    std::filesystem::rename(temps[i], files[i].first, ec);
    if (ec) {
      cleanup();
      throw parse_error("cannot move output into place at " + files[i].first.string() + ": " + ec.message());
    }
  }
}

}  // namespace ivqrof
