#include "relbim/run.hpp"

#include "relbim/cayley.hpp"
#include "relbim/graded.hpp"
#include "relbim/presentation.hpp"
#include "relbim/squier.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace relbim {

namespace {

using nlohmann::json;

json torsion_to_json(const std::vector<Int>& torsion) {
  json arr = json::array();
  for (const auto& t : torsion) arr.push_back(t.str());
  return arr;
}

struct Status {
  bool failed = false;
  bool uncertified = false;
  std::string first_failure;

  void fail(const std::string& what) {
    if (!failed) first_failure = what;
    failed = true;
  }
  int exit_code() const { return failed ? 1 : (uncertified ? 3 : 0); }
  std::string verdict() const {
    return failed ? "fail" : (uncertified ? "uncertified" : "pass");
  }
};

json degree_row_to_json(const DegreeReport& r) {
  return json{{"degree", r.degree},
              {"dims",
               {{"J", r.dims.j},
                {"Jsq", r.dims.jsq},
                {"Jcube", r.dims.jcube},
                {"A", r.dims.a},
                {"FR", r.dims.fr},
                {"H", r.dims.h},
                {"D", r.dims.d},
                {"pi2", r.dims.pi2},
                {"kerBeta", r.dims.ker_beta}}},
              {"checks",
               {{"bd_exact", r.bd_exact},
                {"pgs_exact", r.pgs_exact},
                {"connecting", r.connecting},
                {"containment", r.containment}}},
              {"verdict", r.passed() ? "pass" : "fail"}};
}

json graded_section(GradedVerifier& verifier, int max_degree, Status& status) {
  json rows = json::array();
  for (int d = 0; d <= max_degree; ++d) {
    DegreeReport r = verifier.verify_degree(d);
    if (!r.passed())
      status.fail("graded check at degree " + std::to_string(d) + " (J=" +
                  std::to_string(r.dims.j) + ", H=" + std::to_string(r.dims.h) + ", D=" +
                  std::to_string(r.dims.d) + ", pi2=" + std::to_string(r.dims.pi2) + ")");
    rows.push_back(degree_row_to_json(r));
  }
  return json{{"applicable", true}, {"max_degree", max_degree}, {"degrees", rows}};
}

json squier_section(const MonoidPresentation& pres, int max_length,
                    GradedVerifier* verifier, Status& status) {
  json sec;
  sec["max_length"] = max_length;

  EdgeEmbeddingReport emb = edge_embedding_check(pres, max_length);
  sec["edge_embedding"] = json{{"cells", emb.cells_checked}, {"pass", emb.passed}};
  if (!emb.passed) status.fail("edge embedding identity on a Squier 2-cell");

  bool homogeneous = homogeneity(pres).kind == PresentationGrading::length_homogeneous;
  sec["certified"] = homogeneous;
  if (homogeneous) {
    json rows = json::array();
    for (int n = 0; n <= max_length; ++n) {
      HomologyResult h = slice_h1_total(pres, n);
      json row{{"n", n}, {"betti", h.betti}, {"torsion", torsion_to_json(h.torsion)}};
      if (!h.torsion.empty())
        status.fail("torsion in Squier H1 at length " + std::to_string(n));
      if (verifier) {
        int pi2 = verifier->pi2_component(n).dim;
        row["pi2"] = pi2;
        row["match"] = pi2 == h.betti;
        if (pi2 != h.betti)
          status.fail("Squier H1 betti " + std::to_string(h.betti) + " != pi2 " +
                      std::to_string(pi2) + " at length " + std::to_string(n));
      }
      rows.push_back(row);
    }
    sec["lengths"] = rows;
  } else {
    status.uncertified = true;
    sec["truncated"] = true;
    sec["note"] = "truncated, not certified";
    SquierSlice slice = SquierSlice::build(pres, max_length);
    json rows = json::array();
    std::vector<int> first_vertex(slice.component_count(), -1);
    for (int v = 0; v < static_cast<int>(slice.vertices().size()); ++v) {
      int comp = slice.component_of(v);
      if (first_vertex[comp] < 0) first_vertex[comp] = v;
    }
    for (int comp = 0; comp < slice.component_count(); ++comp) {
      const Word& base = slice.vertices()[first_vertex[comp]];
      HomologyResult h = slice.component_h1(base);
      rows.push_back(json{{"basepoint", base.str()},
                          {"betti", h.betti},
                          {"torsion", torsion_to_json(h.torsion)}});
    }
    sec["components"] = rows;
  }
  return sec;
}

json cayley_side_report(const CayleyCheckReport& rep, const CayleyComplex& complex,
                        Status& status) {
  json j{{"V", complex.nv},
         {"E", complex.ne},
         {"F", complex.nf},
         {"h0_rank", rep.h0_rank},
         {"h1_betti", rep.h1_total.betti},
         {"h1_torsion", torsion_to_json(rep.h1_total.torsion)},
         {"pi2_rank", rep.pi2_rank},
         {"relation_term_rank", rep.relation_term_rank},
         {"euler_ok", rep.euler_ok},
         {"pass", rep.passed()}};
  if (rep.side == CayleySide::left) {
    j["reduced_h0"] = rep.h0_rank - 1;
  } else {
    j["components"] = rep.h0_rank;
    bool per_ok = true;
    for (const auto& h : rep.h1_per_component)
      if (h.betti != 0 || !h.torsion.empty()) per_ok = false;
    j["per_component_h1_ok"] = per_ok;
  }
  j["h0_expected"] = rep.h0_expected;
  if (!rep.passed())
    status.fail(std::string("cayley ") +
                (rep.side == CayleySide::left ? "left" : "two-sided") +
                " complex check (h1 betti " + std::to_string(rep.h1_total.betti) + ")");
  return j;
}

json cayley_section(const MonoidPresentation& pres, int max_length,
                    const std::optional<std::string>& table_source, Status& status) {
  json sec;
  sec["max_length"] = max_length;
  std::optional<FiniteMonoid> monoid;
  if (table_source) {
    monoid = import_table(*table_source, pres);
    sec["table"] = "imported";
  } else {
    monoid = enumerate_finite_monoid(pres, max_length);
    sec["table"] = "enumerated";
  }
  if (!monoid) {
    sec["stabilized"] = false;
    sec["note"] = "not stabilized at L=" + std::to_string(max_length);
    status.uncertified = true;
    return sec;
  }
  sec["stabilized"] = true;
  sec["size"] = monoid->size;
  json elems = json::array();
  for (const auto& w : monoid->elements) elems.push_back(w.str());
  sec["elements"] = elems;

  CayleyComplex left = build_cayley(*monoid, pres, CayleySide::left);
  CayleyCheckReport left_rep = cayley_homology_check(left);
  sec["left"] = cayley_side_report(left_rep, left, status);

  CayleyComplex both = build_cayley(*monoid, pres, CayleySide::two_sided);
  CayleyCheckReport both_rep = cayley_homology_check(both);
  sec["two_sided"] = cayley_side_report(both_rep, both, status);
  return sec;
}

std::string render_text(const json& report) {
  std::ostringstream out;
  out << "command: " << report.at("command").get<std::string>() << '\n';
  out << "input kind: " << report.at("kind").get<std::string>() << '\n';
  if (report.contains("graded")) {
    const json& g = report.at("graded");
    if (g.at("applicable").get<bool>()) {
      out << "graded verification (degrees 0.." << g.at("max_degree") << "):\n";
      for (const json& row : g.at("degrees")) {
        const json& dims = row.at("dims");
        out << "  degree " << row.at("degree") << ": J=" << dims.at("J")
            << " Jsq=" << dims.at("Jsq") << " A=" << dims.at("A") << " H=" << dims.at("H")
            << " D=" << dims.at("D") << " pi2=" << dims.at("pi2")
            << " kerBeta=" << dims.at("kerBeta") << " -> "
            << row.at("verdict").get<std::string>() << '\n';
      }
    } else {
      out << "graded verification: not applicable ("
          << g.at("reason").get<std::string>() << ")\n";
    }
  }
  if (report.contains("squier")) {
    const json& s = report.at("squier");
    out << "squier slices (length bound " << s.at("max_length") << "):\n";
    out << "  edge embedding: " << (s.at("edge_embedding").at("pass").get<bool>() ? "pass" : "fail")
        << " over " << s.at("edge_embedding").at("cells") << " cells\n";
    if (s.at("certified").get<bool>()) {
      for (const json& row : s.at("lengths")) {
        out << "  length " << row.at("n") << ": H1 betti " << row.at("betti");
        if (row.contains("pi2"))
          out << " pi2 " << row.at("pi2") << (row.at("match").get<bool>() ? " (match)" : " (MISMATCH)");
        out << '\n';
      }
    } else {
      out << "  truncated, not certified; component H1 at bound:\n";
      for (const json& row : s.at("components"))
        out << "  component of " << row.at("basepoint").get<std::string>() << ": betti "
            << row.at("betti") << '\n';
    }
  }
  if (report.contains("cayley")) {
    const json& c = report.at("cayley");
    if (!c.at("stabilized").get<bool>()) {
      out << "cayley: " << c.at("note").get<std::string>() << '\n';
    } else {
      out << "cayley: |M| = " << c.at("size") << " (" << c.at("table").get<std::string>()
          << ")\n";
      for (const char* side : {"left", "two_sided"}) {
        const json& r = c.at(side);
        out << "  " << side << ": V=" << r.at("V") << " E=" << r.at("E") << " F=" << r.at("F")
            << " H1 betti " << r.at("h1_betti") << " H0 rank " << r.at("h0_rank")
            << " pi2 rank " << r.at("pi2_rank") << " -> "
            << (r.at("pass").get<bool>() ? "pass" : "fail") << '\n';
      }
    }
  }
  if (report.contains("first_failure"))
    out << "first failure: " << report.at("first_failure").get<std::string>() << '\n';
  out << "status: " << report.at("status").get<std::string>() << '\n';
  return out.str();
}

}  // namespace

RunResult run_on_source(const std::string& source, const RunConfig& config,
                        const std::optional<std::string>& table_source) {
  RunResult res;
  json report;
  report["schema"] = 1;
  report["command"] = config.command;
  report["input"] = config.input_path;

  if (config.command != "graded" && config.command != "squier" && config.command != "cayley" &&
      config.command != "all") {
    res.exit_code = 2;
    res.text = "error: unknown command \"" + config.command + "\"\n";
    report["error"] = res.text;
    res.report = std::move(report);
    return res;
  }
  if (config.max_degree < 0 || config.max_length < 0) {
    res.exit_code = 2;
    res.text = "error: bounds must be non-negative\n";
    report["error"] = res.text;
    res.report = std::move(report);
    return res;
  }

  Presentation pres{AlgebraPresentation{nullptr, {}}};
  try {
    pres = parse_presentation(source);
  } catch (const ParseError& e) {
    res.exit_code = 2;
    res.text = std::string("parse error: ") + e.what() + "\n";
    report["error"] = res.text;
    res.report = std::move(report);
    return res;
  }

  Status status;
  try {
    if (std::holds_alternative<AlgebraPresentation>(pres)) {
      report["kind"] = "algebra";
      const auto& alg = std::get<AlgebraPresentation>(pres);
      if (config.command == "squier" || config.command == "cayley")
        throw std::invalid_argument("command \"" + config.command +
                                    "\" needs a monoid presentation");
      if (homogeneity(alg).kind != PresentationGrading::graded)
        throw std::invalid_argument(
            "graded verification needs a homogeneous algebra presentation");
      GradedVerifier verifier(alg);
      report["graded"] = graded_section(verifier, config.max_degree, status);
    } else {
      report["kind"] = "monoid";
      const auto& mon = std::get<MonoidPresentation>(pres);
      bool length_homog = homogeneity(mon).kind == PresentationGrading::length_homogeneous;
      std::optional<GradedVerifier> verifier;
      if (length_homog) verifier.emplace(monoid_to_algebra(mon));

      if (config.command == "graded") {
        if (!verifier)
          throw std::invalid_argument(
              "graded verification needs a length-homogeneous monoid presentation");
        report["graded"] = graded_section(*verifier, config.max_degree, status);
      } else if (config.command == "squier") {
        report["squier"] =
            squier_section(mon, config.max_length, verifier ? &*verifier : nullptr, status);
      } else if (config.command == "cayley") {
        report["cayley"] = cayley_section(mon, config.max_length, table_source, status);
      } else {  // all
        if (verifier) {
          report["graded"] = graded_section(*verifier, config.max_degree, status);
        } else {
          report["graded"] =
              json{{"applicable", false},
                   {"reason", "presentation is not length-homogeneous"}};
        }
        report["squier"] =
            squier_section(mon, config.max_length, verifier ? &*verifier : nullptr, status);
        report["cayley"] = cayley_section(mon, config.max_length, table_source, status);
      }
    }
  } catch (const std::invalid_argument& e) {
    res.exit_code = 2;
    res.text = std::string("error: ") + e.what() + "\n";
    report["error"] = res.text;
    res.report = std::move(report);
    return res;
  }

  report["status"] = status.verdict();
  if (status.failed) report["first_failure"] = status.first_failure;
  res.exit_code = status.exit_code();
  res.report = report;
  res.text = render_text(report);
  return res;
}

RunResult run(const RunConfig& config) {
  std::ifstream in(config.input_path);
  if (!in) {
    RunResult res;
    res.exit_code = 2;
    res.text = "error: cannot open input file " + config.input_path + "\n";
    res.report = json{{"schema", 1}, {"error", res.text}};
    return res;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  std::optional<std::string> table_source;
  if (config.table_path) {
    std::ifstream tin(*config.table_path);
    if (!tin) {
      RunResult res;
      res.exit_code = 2;
      res.text = "error: cannot open table file " + *config.table_path + "\n";
      res.report = json{{"schema", 1}, {"error", res.text}};
      return res;
    }
    std::ostringstream tbuf;
    tbuf << tin.rdbuf();
    table_source = tbuf.str();
  }
  return run_on_source(buf.str(), config, table_source);
}

}  // namespace relbim
