// Prints one PASS/FAIL line per acceptance criterion and exits nonzero if
// any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "reflective/classpoly.hpp"
#include "reflective/cli.hpp"
#include "reflective/detvar.hpp"
#include "reflective/grassmann.hpp"
#include "reflective/quadric.hpp"
#include "reflective/report.hpp"

using namespace reflective;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(TEST_DATA_DIR) + "/" + name; }

Outcome involution_suite() {
  Outcome o;
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> scalar(-50, 50);
  for (int d = 1; d <= 12; ++d) {
    const std::size_t N = static_cast<std::size_t>(d + 1);
    for (int trial = 0; trial < 200; ++trial) {
      const auto fc = oracle::random_poly(rng, d, 50);
      const ClassPoly f(fc, N);
      const ClassPoly g(oracle::random_poly(rng, d, 50), N);
      const Integer a = scalar(rng);
      const Integer b = scalar(rng);
      const ClassPoly If = involute(f, d);
      o.expect(If == ClassPoly(oracle::involution(fc, d), N), "oracle mismatch at d = " + std::to_string(d));
      o.expect(involute(If, d) == f, "I_d(I_d(f)) != f at d = " + std::to_string(d));
      o.expect(involute(f * a + g * b, d) == If * a + involute(g, d) * b, "linearity fails at d = " + std::to_string(d));
    }
  }
  return o;
}

Outcome worked_example() {
  Outcome o;
  const CliRun two = cli({"solve", data("symmetric3.json")});
  o.expect(two.code == 0, "solve exited " + std::to_string(two.code));
  if (!o.ok) return o;
  const json j = json::parse(two.out);
  const json& sys = j["primal"]["systems"][0];
  o.expect(sys["alpha"] == json::array({1, 0}), "x = " + sys["alpha"].dump());
  o.expect(sys["rank"] == sys["unknowns"], "solution not unique");
  o.expect(j["primal"]["origin"][0] == 1, "origin Eu = " + j["primal"]["origin"][0].dump());

  // The same system with the dense stratum included.
  const CliRun three = cli({"solve", data("symmetric3_full.json")});
  o.expect(three.code == 0, "solve (three strata) exited " + std::to_string(three.code));
  if (!o.ok) return o;
  const json k = json::parse(three.out);
  o.expect(k["primal"]["euler_table"][1][2] == 0, "x = " + k["primal"]["euler_table"][1][2].dump());
  o.expect(k["primal"]["origin"][1] == 1, "origin Eu = " + k["primal"]["origin"][1].dump());

  // (-1)(-1) + (-1)(0) = 1 from the evaluations at -1.
  const ClassPoly open = ClassPoly::from({0, 3, 9, 10, 6, 3}, 6);
  const ClassPoly deep = ClassPoly::from({0, 0, 0, 4, 6, 3}, 6);
  o.expect(open.eval(-1) == -1 && deep.eval(-1) == -1, "csm(-1) values");
  return o;
}

Outcome sign_identity() {
  Outcome o;
  for (long n = 1; n <= 12; ++n) {
    const std::size_t N = static_cast<std::size_t>(n + 1);
    const ClassPoly hb = ClassPoly::monomial(1, N) * chern_B(n, N);
    o.expect(involute(hb, n) == hb * Integer(parity_sign(n + 1)), "fails at n = " + std::to_string(n));
  }
  return o;
}

Outcome quadric_suite() {
  Outcome o;
  for (long n = 2; n <= 10; ++n) {
    for (long r = 3; r <= n + 1; ++r) {
      const QuadricSpec s = make_quadric_spec(n, r);
      const std::string at = " at n = " + std::to_string(n) + ", r = " + std::to_string(r);
      o.expect(milnor_class(s) == milnor_class_from_singular_locus(s), "Milnor paths differ" + at);
      o.expect(milnor_class(s) == milnor_class_from_csm(s, csm_quadric(s)), "Milnor equation fails" + at);
      const QuadricCheck c = cross_validate(s);
      if (!s.smooth()) {
        o.expect(c.eu_singular && *c.eu_singular == parity_sign(r) + 1, "Eu" + at);
        o.expect(c.mu && *c.mu == parity_sign(n + r), "mu" + at);
      }
      const ExchangeCheck ex = involution_exchange(s);
      o.expect(ex.quadric, "X_A exchange" + at);
      o.expect(ex.singular.value_or(true), "S_A exchange" + at);
    }
  }
  return o;
}

Outcome grassmann_suite() {
  Outcome o;
  for (int rows = 1; rows <= 3; ++rows) {
    for (int cols = 1; cols <= 3; ++cols) {
      if (rows * cols > 6) continue;
      const RingPtr g = SchubertRing::make(rows, rows + cols);
      for (const auto& a : oracle::box_partitions(rows, cols)) {
        for (const auto& b : oracle::box_partitions(rows, cols)) {
          ChowInt expected(g);
          for (const auto& [p, c] : oracle::lr_product(a, b, rows, cols)) {
            expected += ChowInt::schubert(g, Partition(p), Integer(c));
          }
          const ChowInt got = ChowInt::schubert(g, Partition(a)) * ChowInt::schubert(g, Partition(b));
          o.expect(got == expected, "LR mismatch " + Partition(a).to_string() + " * " + Partition(b).to_string());
        }
      }
    }
  }
  for (int n = 0; n <= 6; ++n) {
    for (int r = 0; r <= n; ++r) {
      const RingPtr g = SchubertRing::make(r, n);
      const std::string at = " on G(" + std::to_string(r) + "," + std::to_string(n) + ")";
      for (std::size_t i = 0; i < g->size(); ++i) {
        const Partition& lambda = g->basis(i);
        const Partition c = lambda.complement(g->rows(), g->cols());
        o.expect(integrate(ChowInt::schubert(g, lambda) * ChowInt::schubert(g, c)) == 1, "pairing" + at);
      }
      const BundleChern tangent = chern_tensor(chern_dual(taut_sub(g)), taut_quot(g));
      o.expect(integrate(tangent.classes.back()) == binomial(n, r), "c_top" + at);
    }
  }
  return o;
}

Outcome determinantal_suite() {
  Outcome o;
  o.expect(q_poly(2, 1) == ClassPoly::from({0, 2, 4, 4}, 4), "q_{2,1} = " + q_poly(2, 1).to_string());
  for (long n = 2; n <= 4; ++n) {
    const long N = n * n;
    for (long r = 1; r <= n - 1; ++r) {
      // Written out rather than through duality_check.
      const ClassPoly hat_r = signed_class(q_poly(n, r), N - r * r - 1);
      const ClassPoly hat_dual = signed_class(q_poly(n, n - r), N - (n - r) * (n - r) - 1);
      o.expect(involute(hat_r, N - 1) == hat_dual,
               "duality fails for n = " + std::to_string(n) + ", r = " + std::to_string(r));
    }
    const EulerTable t = euler_table(det_strata(n));
    for (long k = 0; k <= n - 1; ++k) {
      for (long r = 0; r <= n - 1; ++r) {
        o.expect(t.primal[k][r] == binomial(r, k), "Eu table entry for n = " + std::to_string(n));
      }
      o.expect(t.primal_origin[k] == binomial(n, k), "origin column for n = " + std::to_string(n));
    }
  }
  return o;
}

Outcome guards() {
  Outcome o;
  for (const char* rank : {"1", "2"}) {
    o.expect(cli({"quadric", "--n", "4", "--rank", rank}).code == 2, std::string("rank ") + rank + " accepted");
  }
  for (long n = 2; n <= 10; ++n) {
    o.expect(milnor_class(make_quadric_spec(n, n + 1)).is_zero(), "nonzero Milnor class for smooth n = " + std::to_string(n));
    const json j = json::parse(cli({"quadric", "--n", std::to_string(n), "--rank", std::to_string(n + 1)}).out);
    for (const auto& c : j["milnor_class"]) o.expect(c == 0, "CLI Milnor class nonzero");
  }
  const CliRun bad = cli({"solve", data("quadric_cone_bad_dual.json")});
  o.expect(bad.code == 3, "inconsistent file exited " + std::to_string(bad.code));
  o.expect(bad.err.find("primal[0] 'X_open'") != std::string::npos, "subsystem not named: " + bad.err);
  o.expect(cli({"solve", data("empty.json")}).code == 2, "empty strata list accepted");
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "involution is an involution and linear (200 polynomials per d <= 12)", 1.0, involution_suite},
      {2, "symmetric 3x3 example: unique solution x = 0, origin Eu = 1", 1.0, worked_example},
      {3, "I_n(H B_n) = (-1)^(n+1) H B_n for n <= 12", 1.0, sign_identity},
      {4, "quadrics n <= 10: Milnor paths, solver Eu and mu, involution exchange", 5.0, quadric_suite},
      {5, "Schubert calculus: LR oracle, duality pairing, c_top = C(n,r)", 30.0, grassmann_suite},
      {6, "determinantal n <= 4: q_{2,1}, duality identity, Eu = C(r,k), origin C(n,k)", 60.0, determinantal_suite},
      {7, "guards: ranks 1-2 rejected, smooth Milnor class 0, inconsistent file exit 3", 5.0, guards},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && seconds > c.limit_seconds) {
      o.ok = false;
      o.detail = "over the " + std::to_string(c.limit_seconds) + " s budget";
    }
    std::printf("criterion %d: %s  %s (%.3f s)%s%s\n", c.id, o.ok ? "PASS" : "FAIL", c.name, seconds,
                o.ok ? "" : ": ", o.detail.c_str());
    if (!o.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
