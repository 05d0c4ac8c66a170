#include "reflective/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "reflective/detvar.hpp"
#include "reflective/errors.hpp"
#include "reflective/grassmann.hpp"
#include "reflective/quadric.hpp"
#include "reflective/report.hpp"

namespace reflective {

namespace {

struct Options {
  std::string out_path;

  long d = 0;
  std::string poly;

  std::string strata_file;

  long n = 0;
  long rank = 0;
  std::string emit_strata;

  int chow_r = 0;
  int chow_n = 0;
  std::vector<std::string> mult;
  std::vector<std::string> integrate;
};

// Flattens a report into "a.b: value" lines.
void write_text(const json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) write_text(value, prefix.empty() ? key : prefix + "." + key, os);
    return;
  }
  os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream f(path);
  if (!f) throw invalid_input("cannot write '" + path + "'");
  f << j.dump(2) << '\n';
}

json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw invalid_input("cannot read '" + path + "'");
  try {
    return json::parse(f);
  } catch (const json::parse_error& e) {
    throw invalid_input("'" + path + "' is not valid JSON: " + e.what());
  }
}

Partition parse_partition(const std::string& text) { return Partition::parse(text); }

// Report plus the plain text line used when the command prefers text.
struct Result {
  json report;
  std::optional<std::string> line;
};

Result cmd_involute(const Options& o) {
  if (o.d < 1) throw invalid_input("--d must be at least 1");
  const std::vector<Integer> coeffs = parse_coeff_list(o.poly);
  if (coeffs.size() > static_cast<std::size_t>(o.d + 1)) {
    throw invalid_input("polynomial of length " + std::to_string(coeffs.size()) + " has degree above d = " +
                        std::to_string(o.d));
  }
  const ClassPoly f(coeffs, static_cast<std::size_t>(o.d + 1));
  json report = involute_report(f, o.d);
  return {report, join_coeffs(involute(f, o.d).coeffs())};
}

Result cmd_solve(const Options& o) {
  const StratifiedPair pair = stratification_from_json(read_json_file(o.strata_file));
  json report = solve_report(pair);
  report["input"] = o.strata_file;
  return {report, std::nullopt};
}

Result cmd_detvar(const Options& o) {
  json report = detvar_report(o.n);
  if (!o.emit_strata.empty()) write_json_file(o.emit_strata, to_json(det_strata(o.n)));
  return {report, std::nullopt};
}

Result cmd_quadric(const Options& o) {
  const QuadricSpec spec = make_quadric_spec(o.n, o.rank);
  json report = quadric_report(spec);
  if (!o.emit_strata.empty()) write_json_file(o.emit_strata, to_json(quadric_strata(spec)));
  return {report, std::nullopt};
}

Result cmd_chow(const Options& o) {
  if (o.chow_r < 0 || o.chow_n < o.chow_r) throw invalid_input("chow needs 0 <= r <= n");
  if (o.mult.empty() == o.integrate.empty()) throw invalid_input("chow needs exactly one of --mult or --integrate");
  const RingPtr ring = SchubertRing::make(o.chow_r, o.chow_n);
  const std::vector<std::string>& factors = o.mult.empty() ? o.integrate : o.mult;

  ChowInt product = ChowInt::one(ring);
  json names = json::array();
  for (const std::string& text : factors) {
    const Partition p = parse_partition(text);
    if (!p.fits(ring->rows(), ring->cols())) {
      throw invalid_input("partition " + p.to_string() + " does not fit the " + std::to_string(ring->rows()) + "x" +
                          std::to_string(ring->cols()) + " box");
    }
    names.push_back(p.to_string());
    product = product * ChowInt::schubert(ring, p);
  }

  json report;
  report["command"] = "chow";
  report["r"] = o.chow_r;
  report["n"] = o.chow_n;
  if (!o.mult.empty()) {
    report["mult"] = names;
    json terms = json::object();
    for (std::size_t i = 0; i < ring->size(); ++i) {
      if (!is_zero(product.coeff(i))) terms[ring->basis(i).to_string()] = to_json(product.coeff(i));
    }
    report["terms"] = terms;
    report["result"] = product.to_string();
    return {report, product.to_string()};
  }
  report["integrate"] = names;
  const Integer value = integrate(product);
  report["result"] = to_json(value);
  return {report, value.get_str()};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Euler obstructions and Chern-Mather classes of reflective projective varieties", "reflective"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--out", o.out_path, "Write the report to this file instead of stdout");
  std::string format = "auto";
  app.add_option("--format", format, "json or text (default: text for involute/chow, json otherwise)")
      ->check(CLI::IsMember({"auto", "json", "text"}));

  auto* inv = app.add_subcommand("involute", "Apply I_d to a coefficient list");
  inv->add_option("--d", o.d, "Degree bound d")->required();
  inv->add_option("--poly", o.poly, "Coefficients a0,a1,... ascending in H")->required();

  auto* solve = app.add_subcommand("solve", "Solve the duality systems of a stratification file");
  solve->add_option("file", o.strata_file, "Stratification JSON")->required();

  auto* det = app.add_subcommand("detvar", "Determinantal varieties of n x n matrices");
  det->add_option("--n", o.n, "Matrix size")->required();
  det->add_option("--emit-strata", o.emit_strata, "Also write the solver-ready stratification");

  auto* quad = app.add_subcommand("quadric", "Quadric hypersurface of given rank in P^n");
  quad->add_option("--n", o.n, "Ambient dimension")->required();
  quad->add_option("--rank", o.rank, "Rank of the symmetric matrix")->required();
  quad->add_option("--emit-strata", o.emit_strata, "Also write the solver-ready stratification");

  auto* chow = app.add_subcommand("chow", "Schubert calculus on G(r, n)");
  chow->add_option("--r", o.chow_r, "Subspace dimension")->required();
  chow->add_option("--n", o.chow_n, "Ambient dimension")->required();
  chow->add_option("--mult", o.mult, "Two partitions, e.g. 1 1 or 2,1 1")->expected(2);
  chow->add_option("--integrate", o.integrate, "Partitions whose product is integrated")->expected(1, -1);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream cli_out;
    std::ostringstream cli_err;
    const int code = app.exit(e, cli_out, cli_err);
    out << cli_out.str();
    err << cli_err.str();
    return code == 0 ? 0 : 2;
  }

  try {
    Result result;
    bool prefers_text = false;
    if (*inv) {
      result = cmd_involute(o);
      prefers_text = true;
    } else if (*solve) {
      result = cmd_solve(o);
    } else if (*det) {
      result = cmd_detvar(o);
    } else if (*quad) {
      result = cmd_quadric(o);
    } else {
      result = cmd_chow(o);
      prefers_text = true;
    }

    const bool text = format == "text" || (format == "auto" && prefers_text);
    std::ostringstream body;
    if (text && result.line) {
      body << *result.line << '\n';
    } else if (text) {
      write_text(result.report, "", body);
    } else {
      body << result.report.dump(2) << '\n';
    }

    if (o.out_path.empty()) {
      out << body.str();
    } else {
      std::ofstream f(o.out_path);
      if (!f) throw invalid_input("cannot write '" + o.out_path + "'");
      f << body.str();
    }
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.exit_code();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace reflective
