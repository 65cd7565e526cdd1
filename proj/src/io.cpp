#include "troprate/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <sstream>

namespace troprate::io {

using nlohmann::json;

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::optional<std::int64_t> to_integer(std::string_view s) {
  std::int64_t v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return v;
}

std::optional<double> to_double(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) return std::nullopt;
  return v;
}

TropScalar nonnegative(double v, std::string_view text) {
  if (v < 0.0) {
    throw ParseError("negative matrix entry '" + std::string(text) + "'");
  }
  return TropScalar::from_value(v);
}

TropMatrix parse_json_matrix(const json& rows, std::string_view what) {
  if (!rows.is_array() || rows.empty()) {
    throw ParseError(std::string(what) + ": expected a nonempty array of rows");
  }
  const std::size_t r = rows.size();
  std::size_t c = 0;
  for (const auto& row : rows) {
    if (!row.is_array()) throw ParseError(std::string(what) + ": row is not an array");
    if (c == 0) c = row.size();
    if (row.size() != c || c == 0) {
      throw ParseError(std::string(what) + ": rows have different lengths");
    }
  }
  TropMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = parse_entry(rows[i][j]);
  }
  return m;
}

TropMatrix load_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open matrix file " + path.string());
  return parse_csv_matrix(in);
}

TropMatrix matrix_field(const json& node, const std::filesystem::path& base,
                        std::string_view what) {
  if (node.is_string()) return load_csv(base / node.get<std::string>());
  return parse_json_matrix(node, what);
}

std::string fixed(double v, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

std::string significant(double v, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

bool is_perfect_power(int r, int k) {
  const long root = std::lround(std::pow(static_cast<double>(r), 1.0 / k));
  for (long c = std::max(1L, root - 1); c <= root + 1; ++c) {
    long p = 1;
    for (int e = 0; e < k; ++e) p *= c;
    if (p == r) return true;
  }
  return false;
}

std::string ratio_text(int p, int q) {
  return q == 1 ? std::to_string(p)
                : std::to_string(p) + "/" + std::to_string(q);
}

std::vector<double> to_values(const RatingVector& x) { return x.values(); }

json vec_json(const std::vector<double>& v) { return json(v); }

json display_json(const std::vector<double>& v) {
  json out = json::array();
  for (double x : v) out.push_back(significant(x, 6));
  return out;
}

std::vector<std::size_t> one_based(const std::vector<std::size_t>& v) {
  std::vector<std::size_t> out(v);
  for (auto& x : out) ++x;
  return out;
}

std::string index_set(const std::vector<std::size_t>& s) {
  std::ostringstream os;
  os << "{";
  for (std::size_t k = 0; k < s.size(); ++k) os << (k ? ", " : "") << s[k];
  os << "}";
  return os.str();
}

}  // namespace

TropScalar parse_entry(std::string_view text) {
  const std::string_view t = trim(text);
  if (t.empty()) throw ParseError("empty matrix entry");
  if (const auto slash = t.find('/'); slash != std::string_view::npos) {
    const auto num = trim(t.substr(0, slash));
    const auto den = trim(t.substr(slash + 1));
    const auto p = to_integer(num);
    const auto q = to_integer(den);
    if (p && q) {
      if (*q == 0) throw ParseError("zero denominator in '" + std::string(t) + "'");
      if (*p < 0 || *q < 0) {
        throw ParseError("negative matrix entry '" + std::string(t) + "'");
      }
      return TropScalar::from_ratio(*p, *q);
    }
    const auto pd = to_double(num);
    const auto qd = to_double(den);
    if (!pd || !qd || *qd <= 0.0) {
      throw ParseError("malformed fraction '" + std::string(t) + "'");
    }
    return nonnegative(*pd, t) / TropScalar::from_value(*qd);
  }
  if (const auto i = to_integer(t)) {
    if (*i < 0) throw ParseError("negative matrix entry '" + std::string(t) + "'");
    return TropScalar::from_ratio(*i, 1);
  }
  const auto d = to_double(t);
  if (!d) throw ParseError("malformed number '" + std::string(t) + "'");
  return nonnegative(*d, t);
}

TropScalar parse_entry(const json& value) {
  if (value.is_number_integer()) {
    const auto v = value.get<std::int64_t>();
    if (v < 0) throw ParseError("negative matrix entry " + value.dump());
    return TropScalar::from_ratio(v, 1);
  }
  if (value.is_number()) return nonnegative(value.get<double>(), value.dump());
  if (value.is_string()) return parse_entry(std::string_view(value.get_ref<const std::string&>()));
  throw ParseError("matrix entry must be a number or a fraction string, got " +
                   value.dump());
}

TropMatrix parse_csv_matrix(std::istream& in) {
  std::vector<std::vector<TropScalar>> rows;
  std::string line;
  while (std::getline(in, line)) {
    const std::string_view t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    std::string cleaned(t);
    std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
    std::istringstream fields(cleaned);
    std::vector<TropScalar> row;
    for (std::string tok; fields >> tok;) row.push_back(parse_entry(std::string_view(tok)));
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError("CSV rows have different lengths");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("empty CSV matrix");
  TropMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

ProblemDocument parse_problem_document(std::istream& in,
                                       const std::filesystem::path& base_dir) {
  json root;
  try {
    root = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
  if (!root.is_object()) throw ParseError("document must be a JSON object");

  ProblemDocument doc;
  try {
    const auto crit = root.find("criteria");
    if (crit == root.end() || !crit->is_array() || crit->empty()) {
      throw ParseError("'criteria' must be a nonempty array");
    }
    for (std::size_t l = 0; l < crit->size(); ++l) {
      const json& c = (*crit)[l];
      if (!c.is_object()) throw ParseError("criterion entries must be objects");
      CriterionEntry e;
      e.name = c.value("name", "C" + std::to_string(l + 1));
      const std::string what = "criterion '" + e.name + "'";
      if (c.contains("matrix")) {
        e.matrix = matrix_field(c.at("matrix"), base_dir, what);
      } else if (c.contains("file")) {
        e.matrix = load_csv(base_dir / c.at("file").get<std::string>());
      } else {
        throw ParseError(what + " has neither 'matrix' nor 'file'");
      }
      doc.criteria.push_back(std::move(e));
    }
    if (const auto b = root.find("constraints"); b != root.end() && !b->is_null()) {
      doc.constraints = matrix_field(*b, base_dir, "constraints");
    }
    if (const auto o = root.find("order"); o != root.end() && !o->is_null()) {
      if (!o->is_array()) throw ParseError("'order' must be an array");
      for (const auto& v : *o) {
        if (!v.is_number_integer() || v.get<long>() < 1) {
          throw ParseError("'order' entries must be positive integers");
        }
        doc.order.push_back(v.get<std::size_t>());
      }
    }
    if (const auto a = root.find("alternatives"); a != root.end() && !a->is_null()) {
      doc.alternatives = a->get<std::vector<std::string>>();
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
  return doc;
}

ProblemDocument load_problem_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return parse_problem_document(in, path.parent_path());
}

ComparisonProblem ProblemDocument::to_problem(const SolveOptions& options) const {
  ComparisonProblem p;
  for (const auto& c : criteria) p.criteria.push_back(c.matrix);
  const std::size_t n = alternatives_count();
  p.constraints = constraints.value_or(TropMatrix::zeros(n, n));
  for (std::size_t r : order) p.lex_order.push_back(r - 1);
  p.options = options;
  if (!alternatives.empty() && alternatives.size() != n) {
    throw DimensionError("number of alternative labels does not match n");
  }
  return p;
}

ParsedProblem parse_problem(std::istream& in,
                            const std::filesystem::path& base_dir,
                            const SolveOptions& options) {
  ParsedProblem out;
  out.document = parse_problem_document(in, base_dir);
  out.problem = out.document.to_problem(options);
  out.problem.validate();
  for (std::size_t l = 0; l < out.problem.criteria.size(); ++l) {
    if (spectral_radius(out.problem.criteria[l]).is_zero()) {
      throw PreconditionError("criterion " + std::to_string(l + 1) +
                              " has zero spectral radius");
    }
  }
  const TropScalar tr = trace_fn(out.problem.constraints);
  if (tr.is_positive() && tr.log() > options.tol) {
    std::ostringstream msg;
    msg << "infeasible constraints, Tr = " << tr.value();
    throw InfeasibleError(msg.str(), tr.log());
  }
  out.warnings = out.problem.reciprocity_warnings();
  return out;
}

ParsedProblem parse_problem(const std::filesystem::path& path,
                            const SolveOptions& options) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return parse_problem(in, path.parent_path(), options);
}

json to_json(const ProblemDocument& doc) {
  auto matrix = [](const TropMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).value());
      rows.push_back(std::move(row));
    }
    return rows;
  };
  json j;
  j["criteria"] = json::array();
  for (const auto& c : doc.criteria) {
    j["criteria"].push_back({{"name", c.name}, {"matrix", matrix(c.matrix)}});
  }
  if (doc.constraints) j["constraints"] = matrix(*doc.constraints);
  if (!doc.order.empty()) j["order"] = doc.order;
  if (!doc.alternatives.empty()) j["alternatives"] = doc.alternatives;
  return j;
}

RatingVector geometric_mean_ratings(const TropMatrix& c) {
  if (!c.is_square() || c.empty()) {
    throw DimensionError("geometric mean: matrix must be square");
  }
  if (!c.is_positive()) {
    throw PreconditionError("geometric mean: entries must be positive");
  }
  const std::size_t n = c.rows();
  TropMatrix x(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) sum += c(i, j).log();
    x[i] = TropScalar::from_log(sum / static_cast<double>(n));
  }
  return RatingVector::normalized(x);
}

std::string exact_form(TropScalar s, double tol) {
  if (s.is_zero()) return "0";
  const double l = s.log();
  constexpr int kMaxRatio = 24;
  for (int q = 1; q <= kMaxRatio; ++q) {
    for (int p = 1; p <= kMaxRatio * q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      if (std::abs(std::log(p) - std::log(q) - l) <= tol) return ratio_text(p, q);
    }
  }
  constexpr int kMaxRoot = 4;
  for (int k = 2; k <= kMaxRoot; ++k) {
    for (int r = 2; r <= 100; ++r) {
      if (is_perfect_power(r, k)) continue;
      if (std::abs(std::log(r) / k - l) <= tol) {
        return std::to_string(r) + "^(1/" + std::to_string(k) + ")";
      }
    }
  }
  constexpr int kMaxFactor = 12;
  for (int k = 2; k <= kMaxRoot; ++k) {
    for (int r = 2; r <= 30; ++r) {
      if (is_perfect_power(r, k)) continue;
      const double rest = l - std::log(r) / k;
      for (int q = 1; q <= kMaxFactor; ++q) {
        for (int p = 1; p <= kMaxFactor; ++p) {
          if (std::gcd(p, q) != 1 || (p == 1 && q == 1)) continue;
          if (std::abs(std::log(p) - std::log(q) - rest) > tol) continue;
          std::string out = p == 1 ? "" : std::to_string(p) + "·";
          out += std::to_string(r) + "^(1/" + std::to_string(k) + ")";
          if (q != 1) out += "/" + std::to_string(q);
          return out;
        }
      }
    }
  }
  return {};
}

std::string format_theta(TropScalar s) {
  const std::string exact = exact_form(s);
  const std::string dec = fixed(s.value(), 4);
  if (exact.empty()) return dec;
  if (exact.find_first_not_of("0123456789") == std::string::npos) return exact;
  return exact + " ≈ " + dec;
}

std::string format_vector(const std::vector<double>& x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ", ";
    out += fixed(x[i], 4);
  }
  return out + ")";
}

std::string format_interval(const std::vector<double>& best,
                            const std::vector<double>& worst) {
  std::string out = "(";
  for (std::size_t i = 0; i < best.size(); ++i) {
    if (i) out += ", ";
    const std::string lo = fixed(std::min(best[i], worst[i]), 4);
    const std::string hi = fixed(std::max(best[i], worst[i]), 4);
    out += lo == hi ? lo : lo + "…" + hi;
  }
  return out + ")";
}

double suggest_half_width(const TropMatrix& a, TropScalar theta, double step) {
  double width = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i != j && a(j, i).is_positive()) {
        width = std::max(width, theta.log() - a(j, i).log());
      }
    }
  }
  return std::max(width, 0.0) + 2.0 * step;
}

VerificationSummary verify_bundle(const SolutionBundle& bundle,
                                  std::optional<double> grid_step,
                                  double tol) {
  const StepRecord& last = bundle.final_step();
  VerificationSummary v;
  v.best_ok = true;
  for (const auto& cand : bundle.best.candidates) {
    const auto r = oracle::verify_membership(cand, last.objective,
                                             last.previous_constraints,
                                             last.theta, tol);
    v.best_ok = v.best_ok && r.ok();
  }
  const auto w = oracle::verify_membership(bundle.worst, last.objective,
                                           last.previous_constraints,
                                           last.theta, tol);
  v.worst_ok = w.ok();
  v.worst_objective_gap = w.objective_gap;

  if (grid_step) {
    const std::size_t n = last.objective.rows();
    v.grid_step = *grid_step;
    if (n > 5) {
      v.note = "grid check skipped: n > 5";
      return v;
    }
    oracle::GridSpec grid;
    grid.step = *grid_step;
    grid.half_width = std::max(
        suggest_half_width(last.objective, last.theta, *grid_step), *grid_step);
    try {
      const auto g = oracle::grid_min_objective(
          last.objective, last.previous_constraints, grid);
      if (!g.found) {
        v.grid_ok = false;
        v.note = "grid found no feasible point at this resolution";
      } else {
        v.grid_theta = g.value.value();
        v.grid_log_gap = std::abs(g.value.log() - last.theta.log());
        v.grid_ok = *v.grid_log_gap <= 2.0 * *grid_step + tol;
      }
    } catch (const PreconditionError& e) {
      v.note = std::string("grid check skipped: ") + e.what();
    }
  }
  return v;
}

ResultDocument make_result(const SolutionBundle& bundle,
                           const std::vector<std::string>& labels) {
  ResultDocument d;
  d.method = std::string(to_string(bundle.method));
  d.stop = std::string(to_string(bundle.stop));
  d.alternatives = labels;
  for (const auto& s : bundle.steps) {
    StepSummary t;
    t.step = s.step;
    if (s.criterion) t.criterion = *s.criterion + 1;
    t.theta = s.theta.value();
    t.theta_exact = exact_form(s.theta);
    t.aggregated = one_based(s.aggregated);
    for (const auto& [l, th] : s.criterion_minima) {
      t.criterion_minima.emplace_back(l + 1, th.value());
    }
    t.active = one_based(s.active);
    if (s.best.minimal) t.x_best = to_values(s.best.vector());
    t.x_worst = to_values(s.worst);
    t.unique = s.unique;
    d.steps.push_back(std::move(t));
  }
  if (bundle.best.minimal) d.x_best = to_values(bundle.best.vector());
  for (const auto& c : bundle.best.candidates) {
    d.best_candidates.push_back(to_values(c));
  }
  d.x_worst = to_values(bundle.worst);
  d.unique = bundle.unique;
  if (!bundle.unique && !d.x_best.empty()) {
    for (std::size_t i = 0; i < d.x_best.size(); ++i) {
      d.interval.emplace_back(std::min(d.x_best[i], d.x_worst[i]),
                              std::max(d.x_best[i], d.x_worst[i]));
    }
  }
  d.ranking = format_ranking(bundle.ranking.by_best, labels);
  d.ranking_worst = format_ranking(bundle.ranking.by_worst, labels);
  d.robust = bundle.ranking.robust;
  return d;
}

json to_json(const ResultDocument& d) {
  json j;
  j["method"] = d.method;
  j["stop"] = d.stop;
  j["steps"] = json::array();
  for (const auto& s : d.steps) {
    json t;
    t["step"] = s.step;
    if (s.criterion) t["criterion"] = *s.criterion;
    t["theta"] = s.theta;
    t["theta_exact"] = s.theta_exact;
    t["theta_display"] = format_theta(TropScalar::from_value(s.theta));
    if (!s.aggregated.empty()) t["aggregated"] = s.aggregated;
    if (!s.criterion_minima.empty()) {
      json minima = json::array();
      for (const auto& [l, th] : s.criterion_minima) {
        minima.push_back({{"criterion", l}, {"theta", th}});
      }
      t["criterion_minima"] = minima;
      t["active"] = s.active;
    }
    t["x_best"] = vec_json(s.x_best);
    t["x_worst"] = vec_json(s.x_worst);
    t["unique"] = s.unique;
    j["steps"].push_back(std::move(t));
  }
  j["x_best"] = vec_json(d.x_best);
  j["x_best_display"] = display_json(d.x_best);
  j["best_candidates"] = d.best_candidates;
  j["x_worst"] = vec_json(d.x_worst);
  j["x_worst_display"] = display_json(d.x_worst);
  if (!d.interval.empty()) {
    json iv = json::array();
    for (const auto& [lo, hi] : d.interval) iv.push_back({lo, hi});
    j["interval"] = iv;
    j["interval_display"] = format_interval(d.x_best, d.x_worst);
  }
  j["unique"] = d.unique;
  j["ranking"] = d.ranking;
  j["ranking_worst"] = d.ranking_worst;
  j["robust"] = d.robust;
  if (!d.alternatives.empty()) j["alternatives"] = d.alternatives;
  if (d.verification) {
    const auto& v = *d.verification;
    json jv = {{"ok", v.ok()},
               {"best_ok", v.best_ok},
               {"worst_ok", v.worst_ok},
               {"worst_objective_gap", v.worst_objective_gap},
               {"grid_ok", v.grid_ok}};
    if (v.grid_step) jv["grid_step"] = *v.grid_step;
    if (v.grid_theta) jv["grid_theta"] = *v.grid_theta;
    if (v.grid_log_gap) jv["grid_log_gap"] = *v.grid_log_gap;
    if (!v.note.empty()) jv["note"] = v.note;
    j["verification"] = jv;
  }
  return j;
}

ResultDocument result_from_json(const json& j) {
  ResultDocument d;
  try {
    d.method = j.at("method").get<std::string>();
    d.stop = j.value("stop", "");
    for (const auto& t : j.at("steps")) {
      StepSummary s;
      s.step = t.at("step").get<std::size_t>();
      if (t.contains("criterion")) s.criterion = t.at("criterion").get<std::size_t>();
      s.theta = t.at("theta").get<double>();
      s.theta_exact = t.value("theta_exact", "");
      s.aggregated = t.value("aggregated", std::vector<std::size_t>{});
      if (t.contains("criterion_minima")) {
        for (const auto& m : t.at("criterion_minima")) {
          s.criterion_minima.emplace_back(m.at("criterion").get<std::size_t>(),
                                          m.at("theta").get<double>());
        }
      }
      s.active = t.value("active", std::vector<std::size_t>{});
      s.x_best = t.at("x_best").get<std::vector<double>>();
      s.x_worst = t.at("x_worst").get<std::vector<double>>();
      s.unique = t.at("unique").get<bool>();
      d.steps.push_back(std::move(s));
    }
    d.x_best = j.at("x_best").get<std::vector<double>>();
    d.best_candidates = j.value("best_candidates", std::vector<std::vector<double>>{});
    d.x_worst = j.at("x_worst").get<std::vector<double>>();
    if (j.contains("interval")) {
      for (const auto& p : j.at("interval")) {
        d.interval.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
      }
    }
    d.unique = j.at("unique").get<bool>();
    d.ranking = j.at("ranking").get<std::string>();
    d.ranking_worst = j.value("ranking_worst", "");
    d.robust = j.value("robust", false);
    d.alternatives = j.value("alternatives", std::vector<std::string>{});
    if (j.contains("verification")) {
      const auto& jv = j.at("verification");
      VerificationSummary v;
      v.best_ok = jv.at("best_ok").get<bool>();
      v.worst_ok = jv.at("worst_ok").get<bool>();
      v.worst_objective_gap = jv.value("worst_objective_gap", 0.0);
      v.grid_ok = jv.value("grid_ok", true);
      if (jv.contains("grid_step")) v.grid_step = jv.at("grid_step").get<double>();
      if (jv.contains("grid_theta")) v.grid_theta = jv.at("grid_theta").get<double>();
      if (jv.contains("grid_log_gap")) v.grid_log_gap = jv.at("grid_log_gap").get<double>();
      v.note = jv.value("note", "");
      d.verification = v;
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed result document: ") + e.what());
  }
  return d;
}

std::optional<ReportFormat> parse_format(std::string_view name) {
  if (name == "text") return ReportFormat::Text;
  if (name == "json" || name == "json-like") return ReportFormat::Json;
  return std::nullopt;
}

std::string emit_text(const ResultDocument& d) {
  std::ostringstream os;
  const auto method = parse_method(d.method);
  os << "method: " << (method ? long_name(*method) : d.method) << "\n";
  for (const auto& s : d.steps) {
    os << "step " << s.step;
    if (s.criterion) os << " (criterion " << *s.criterion << ")";
    os << ": theta = " << format_theta(TropScalar::from_value(s.theta)) << "\n";
    if (!s.criterion_minima.empty()) {
      os << "  aggregated: " << index_set(s.aggregated) << "\n";
      os << "  criterion minima:";
      for (std::size_t k = 0; k < s.criterion_minima.size(); ++k) {
        const auto& [l, th] = s.criterion_minima[k];
        os << (k ? "; " : " ") << "theta_" << s.step << l << " = "
           << format_theta(TropScalar::from_value(th));
      }
      os << "\n  active: " << index_set(s.active) << "\n";
    }
    if (!s.x_best.empty()) os << "  x_best:  " << format_vector(s.x_best) << "\n";
    os << "  x_worst: " << format_vector(s.x_worst) << "\n";
    os << "  unique: " << (s.unique ? "yes" : "no") << "\n";
  }
  os << "stop: " << d.stop << "\n";
  if (d.unique) {
    os << "x: " << format_vector(d.x_worst) << "\n";
  } else {
    if (d.x_best.empty()) {
      os << "x_best: not uniquely defined; candidates:\n";
      for (const auto& c : d.best_candidates) os << "  " << format_vector(c) << "\n";
    } else {
      os << "x_best:  " << format_vector(d.x_best) << "\n";
    }
    os << "x_worst: " << format_vector(d.x_worst) << "\n";
    if (!d.x_best.empty()) {
      os << "x: " << format_interval(d.x_best, d.x_worst) << "\n";
    }
  }
  os << "unique: " << (d.unique ? "yes" : "no") << "\n";
  os << "ranking: " << d.ranking;
  if (d.robust) {
    os << " [robust]\n";
  } else {
    os << " [divergent; worst: " << d.ranking_worst << "]\n";
  }
  if (d.verification) {
    const auto& v = *d.verification;
    os << "verify: membership " << (v.best_ok && v.worst_ok ? "ok" : "FAILED");
    if (v.grid_theta) {
      os << "; grid h=" << *v.grid_step << " theta = " << fixed(*v.grid_theta, 4)
         << ", log gap " << std::scientific << std::setprecision(2)
         << *v.grid_log_gap << std::defaultfloat << " "
         << (v.grid_ok ? "ok" : "FAILED");
    }
    if (!v.note.empty()) os << "; " << v.note;
    os << "\n";
  }
  return os.str();
}

std::string emit_report(const ResultDocument& doc, ReportFormat format) {
  if (format == ReportFormat::Json) return to_json(doc).dump(2) + "\n";
  return emit_text(doc);
}

}  // namespace troprate::io
