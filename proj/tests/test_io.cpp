#include <cmath>
#include <sstream>

#include "doctest.h"
#include "support/fixtures.hpp"
#include "troprate/errors.hpp"
#include "troprate/io.hpp"

using namespace troprate;
using fixtures::frac;
using nlohmann::json;

namespace {

const std::filesystem::path kData = TROPRATE_DATA_DIR;

io::ParsedProblem parse_text(const std::string& text) {
  std::istringstream in(text);
  return io::parse_problem(in);
}

bool close_rel(double a, double b, double tol = 1e-12) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

TEST_CASE("matrix entries") {
  CHECK(io::parse_entry(json("1/3")) == frac(1, 3));
  CHECK(io::parse_entry(json(" 4 / 6 ")) == frac(4, 6));
  CHECK(io::parse_entry(json(2)) == frac(2));
  CHECK(io::parse_entry(json(0.25)).log() == doctest::Approx(std::log(0.25)));
  CHECK(io::parse_entry(json("0.5")).log() == doctest::Approx(std::log(0.5)));
  CHECK(io::parse_entry(json(0)).is_zero());
  CHECK(io::parse_entry(json("0/7")).is_zero());
  CHECK_THROWS_AS(io::parse_entry(json(-1)), io::ParseError);
  CHECK_THROWS_AS(io::parse_entry(json("-1/2")), io::ParseError);
  CHECK_THROWS_AS(io::parse_entry(json("1/0")), io::ParseError);
  CHECK_THROWS_AS(io::parse_entry(json("abc")), io::ParseError);
  CHECK_THROWS_AS(io::parse_entry(json::array()), io::ParseError);
}

TEST_CASE("worked example document") {
  const io::ParsedProblem p = io::parse_problem(kData / "four_alternatives.json");
  CHECK(p.problem.alternatives() == 4);
  CHECK(p.problem.criterion_count() == 4);
  CHECK(p.warnings.empty());
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      CHECK(p.problem.constraints(i, j) ==
            ((i == 2 && j == 3) ? TropScalar::one() : TropScalar()));
    }
  }
  CHECK(p.problem.criteria[0] == fixtures::c1());
  CHECK(approx_eq(p.problem.criteria[2], fixtures::c3()));
  CHECK(p.problem.effective_order() == std::vector<std::size_t>{0, 1, 2, 3});
}

TEST_CASE("CSV manifest") {
  const io::ParsedProblem p = io::parse_problem(kData / "csv_manifest" / "problem.json");
  CHECK(p.problem.alternatives() == 3);
  CHECK(p.problem.criterion_count() == 2);
  CHECK(p.document.criteria[1].name == "price");
  CHECK(p.document.alternatives == std::vector<std::string>{"north", "east", "south"});
  CHECK(p.problem.criteria[1](0, 1) == frac(1, 2));
  CHECK(p.problem.constraints(1, 2) == TropScalar::one());
  CHECK(p.problem.constraints(0, 0).is_zero());

  std::istringstream csv("# header\n1, 2\n\n1/2 1\n");
  const TropMatrix m = io::parse_csv_matrix(csv);
  CHECK(m == TropMatrix::from_values({{1, 2}, {0.5, 1}}));
  std::istringstream ragged("1 2\n3\n");
  CHECK_THROWS_AS(io::parse_csv_matrix(ragged), io::ParseError);
}

TEST_CASE("validation while parsing") {
  SUBCASE("reciprocity is reported, not enforced") {
    const auto p = parse_text(R"({"criteria": [{"name": "c", "matrix": [[1, 2], [1, 1]]}]})");
    REQUIRE(p.warnings.size() == 1);
    CHECK(p.warnings[0].row == 0);
    CHECK(p.warnings[0].col == 1);
    CHECK(p.problem.constraints == TropMatrix::zeros(2, 2));
  }
  SUBCASE("infeasible constraints") {
    try {
      parse_text(R"({"criteria": [{"matrix": [[1]]}], "constraints": [[2]]})");
      FAIL("expected InfeasibleError");
    } catch (const InfeasibleError& e) {
      CHECK(std::string(e.what()) == "infeasible constraints, Tr = 2");
    }
    // Tr(2I) = 2^n.
    try {
      parse_text(R"({"criteria": [{"matrix": [[1, 2], ["1/2", 1]]}],
                     "constraints": [[2, 0], [0, 2]]})");
      FAIL("expected InfeasibleError");
    } catch (const InfeasibleError& e) {
      CHECK(std::string(e.what()) == "infeasible constraints, Tr = 4");
    }
  }
  SUBCASE("malformed documents") {
    CHECK_THROWS_AS(parse_text("{"), io::ParseError);
    CHECK_THROWS_AS(parse_text(R"({"constraints": []})"), io::ParseError);
    CHECK_THROWS_AS(parse_text(R"({"criteria": [{"matrix": [[1, "x"], [1, 1]]}]})"),
                    io::ParseError);
    CHECK_THROWS_AS(parse_text(R"({"criteria": [{"matrix": [[1, 2], [1]]}]})"),
                    io::ParseError);
  }
  SUBCASE("invalid matrices") {
    CHECK_THROWS_AS(parse_text(R"({"criteria": [{"matrix": [[1, 2], [0.5, 1]]},
                                                 {"matrix": [[1]]}]})"),
                    DimensionError);
    CHECK_THROWS_AS(parse_text(R"({"criteria": [{"matrix": [[1, 0], [0.5, 1]]}]})"),
                    PreconditionError);
    CHECK_THROWS_AS(parse_text(R"({"criteria": [{"matrix": [[1, 2], [0.5, 1]]}],
                                   "order": [1, 1]})"),
                    PreconditionError);
  }
}

TEST_CASE("geometric mean baseline") {
  const TropMatrix xhat = TropMatrix::column_from_values({2, 1, 0.25});
  CHECK(approx_eq(io::geometric_mean_ratings(xhat * conj_transpose(xhat)),
                  RatingVector::normalized(xhat)));
  const RatingVector g = io::geometric_mean_ratings(fixtures::c2());
  const double top = std::pow(24.0, 0.25);
  const std::vector<double> expected{1.0, std::pow(3.0, 0.25) / top,
                                     std::pow(1.0 / 3.0, 0.25) / top,
                                     std::pow(1.0 / 24.0, 0.25) / top};
  for (std::size_t i = 0; i < 4; ++i) CHECK(g.values()[i] == doctest::Approx(expected[i]));
  CHECK(approx_eq(io::geometric_mean_ratings(TropMatrix::ones(3, 3)).column(),
                  TropMatrix::ones(3, 1)));
  CHECK_THROWS_AS(io::geometric_mean_ratings(fixtures::constraint_b()), PreconditionError);
}

TEST_CASE("exact forms") {
  CHECK(io::format_theta(frac(3)) == "3");
  CHECK(io::format_theta(frac(8, 3)) == "8/3 ≈ 2.6667");
  CHECK(io::format_theta(frac(6).root(3)) == "6^(1/3) ≈ 1.8171");
  CHECK(io::format_theta(frac(8).root(2)) == "8^(1/2) ≈ 2.8284");
  // 3 * 8^(1/2) / 4 is shown in its reduced form.
  CHECK(io::format_theta(frac(3) * frac(8).root(2) / frac(4)) == "3·2^(1/2)/2 ≈ 2.1213");
  CHECK(io::exact_form(TropScalar::from_value(M_PI)).empty());
  CHECK(io::format_theta(TropScalar::from_value(M_PI)) == "3.1416");
}

TEST_CASE("text reports") {
  const ComparisonProblem p = fixtures::example_problem();

  const std::string lexmax = io::emit_text(io::make_result(lex_max_ordering(p)));
  CHECK(lexmax.find("x: (1.0000, 0.5000…0.7500, 0.3536…0.5303, 0.3536…0.5303)") !=
        std::string::npos);
  CHECK(lexmax.find("active: {2, 3, 4}") != std::string::npos);
  CHECK(lexmax.find("ranking: (1) ≻ (2) ≻ (3) ≡ (4) [robust]") != std::string::npos);

  const std::string lex = io::emit_text(io::make_result(lex_ordering(p)));
  CHECK(lex.find("6^(1/3) ≈ 1.8171") != std::string::npos);
  CHECK(lex.find("x: (1.0000, 0.6057, 0.2752, 0.2752)") != std::string::npos);
  CHECK(lex.find("…") == std::string::npos);
  CHECK(lex.find("unique: yes") != std::string::npos);

  const std::string max = io::emit_text(io::make_result(max_ordering(p)));
  CHECK(max.find("x: (1.0000, 0.4444…1.0000, 0.3333…0.7500, 0.3333…0.7500)") !=
        std::string::npos);

  const std::vector<std::string> labels{"a", "b", "c", "d"};
  const io::ResultDocument labelled = io::make_result(max_ordering(p), labels);
  CHECK(labelled.ranking == "a ≻ b ≻ c ≡ d");
}

TEST_CASE("structured results") {
  const ComparisonProblem p = fixtures::example_problem();
  for (Method m : {Method::MaxOrdering, Method::Lexicographic, Method::LexMaxOrdering}) {
    const SolutionBundle bundle = solve(p, m);
    io::ResultDocument doc = io::make_result(bundle);
    doc.verification = io::verify_bundle(bundle, 0.01);
    CHECK(doc.verification->ok());
    for (const auto& [lo, hi] : doc.interval) CHECK(lo <= hi);

    const json j = io::to_json(doc);
    CHECK(j.at("method") == std::string(to_string(m)));
    const io::ResultDocument back = io::result_from_json(json::parse(j.dump()));
    CHECK(back.method == doc.method);
    CHECK(back.unique == doc.unique);
    CHECK(back.ranking == doc.ranking);
    CHECK(back.robust == doc.robust);
    CHECK(back.stop == doc.stop);
    REQUIRE(back.steps.size() == doc.steps.size());
    for (std::size_t s = 0; s < doc.steps.size(); ++s) {
      CHECK(close_rel(back.steps[s].theta, doc.steps[s].theta));
      CHECK(back.steps[s].active == doc.steps[s].active);
      CHECK(back.steps[s].theta_exact == doc.steps[s].theta_exact);
      REQUIRE(back.steps[s].criterion_minima.size() == doc.steps[s].criterion_minima.size());
      for (std::size_t k = 0; k < doc.steps[s].criterion_minima.size(); ++k) {
        CHECK(close_rel(back.steps[s].criterion_minima[k].second,
                        doc.steps[s].criterion_minima[k].second));
      }
    }
    REQUIRE(back.x_worst.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(close_rel(back.x_worst[i], doc.x_worst[i]));
      CHECK(close_rel(back.x_best[i], doc.x_best[i]));
    }
    REQUIRE(back.verification.has_value());
    CHECK(back.verification->ok());
    CHECK(io::emit_report(back, io::ReportFormat::Text) == io::emit_text(doc));
  }
  CHECK_THROWS_AS(io::result_from_json(json::object()), io::ParseError);
  CHECK(io::parse_format("json-like") == io::ReportFormat::Json);
  CHECK(!io::parse_format("xml"));
}

TEST_CASE("problem documents round-trip") {
  const io::ParsedProblem p = io::parse_problem(kData / "four_alternatives.json");
  const json j = io::to_json(p.document);
  std::istringstream in(j.dump());
  const io::ParsedProblem q = io::parse_problem(in);
  REQUIRE(q.problem.criterion_count() == p.problem.criterion_count());
  for (std::size_t l = 0; l < p.problem.criterion_count(); ++l) {
    const auto a = p.problem.criteria[l].values();
    const auto b = q.problem.criteria[l].values();
    for (std::size_t k = 0; k < a.size(); ++k) CHECK(close_rel(a[k], b[k]));
  }
  CHECK(q.problem.constraints == p.problem.constraints);
  CHECK(q.document.order == p.document.order);
  CHECK(q.document.alternatives == p.document.alternatives);

  const io::ParsedProblem c = io::parse_problem(kData / "csv_manifest" / "problem.json");
  std::istringstream inline_form(io::to_json(c.document).dump());
  const io::ParsedProblem d = io::parse_problem(inline_form);
  CHECK(approx_eq(d.problem.criteria[0], c.problem.criteria[0], 1e-12));
  CHECK(d.document.criteria[1].name == "price");
}

TEST_CASE("verification with a coarse grid and large n") {
  std::mt19937 rng(61);
  ComparisonProblem p;
  p.criteria = {fixtures::random_reciprocal(6, rng)};
  p.constraints = TropMatrix::zeros(6, 6);
  const io::VerificationSummary v = io::verify_bundle(max_ordering(p), 0.05);
  CHECK(v.ok());
  CHECK(v.note == "grid check skipped: n > 5");
  CHECK_FALSE(v.grid_theta.has_value());
}
