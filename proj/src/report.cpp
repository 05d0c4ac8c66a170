#include "reflective/report.hpp"

#include <functional>

#include "reflective/detvar.hpp"
#include "reflective/errors.hpp"

namespace reflective {

json to_json(const Integer& x) {
  if (x.fits_slong_p()) return json(x.get_si());
  return json(x.get_str());
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
    return Integer(std::to_string(j.get<long long>()));
  }
  if (j.is_string()) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw invalid_input("malformed integer '" + j.get<std::string>() + "'");
    return v;
  }
  throw invalid_input("expected an integer, got " + j.dump());
}

json to_json(const ClassPoly& f) {
  json out = json::array();
  for (const Integer& c : f.coeffs()) out.push_back(to_json(c));
  return out;
}

ClassPoly class_from_json(const json& j, std::size_t modulus) {
  if (!j.is_array()) throw invalid_input("class must be a coefficient array");
  if (j.size() != modulus) {
    throw invalid_input("class has " + std::to_string(j.size()) + " coefficients, expected N = " +
                        std::to_string(modulus));
  }
  std::vector<Integer> c;
  for (const auto& x : j) c.push_back(integer_from_json(x));
  return ClassPoly(std::move(c), modulus);
}

namespace {

std::vector<Stratum> strata_from_json(const json& j, std::size_t N, const char* side) {
  if (!j.is_array()) throw invalid_input(std::string("'") + side + "' must be an array");
  std::vector<Stratum> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const json& s = j[i];
    if (!s.is_object()) throw invalid_input(std::string(side) + " entries must be objects");
    std::string name = std::string(side) + "[" + std::to_string(i) + "]";
    if (s.contains("name")) {
      if (!s["name"].is_string()) throw invalid_input("stratum name must be a string");
      name = s["name"].get<std::string>();
    }
    std::optional<long> dim;
    if (s.contains("dim") && !s["dim"].is_null()) {
      if (!s["dim"].is_number_integer()) throw invalid_input("stratum '" + name + "' dim must be an integer");
      dim = s["dim"].get<long>();
    }
    if (!s.contains("csm")) throw invalid_input("stratum '" + name + "' has no csm");
    out.push_back(make_stratum(name, class_from_json(s["csm"], N), dim));
  }
  return out;
}

std::optional<std::size_t> index_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  if (!j.is_number_integer() || j.get<long long>() < 0) throw invalid_input("pairing index must be a nonnegative integer or null");
  return static_cast<std::size_t>(j.get<long long>());
}

json system_to_json(const SystemSolution& s, const std::vector<Stratum>& own, const std::vector<Stratum>& other,
                    bool paired) {
  json out;
  out["stratum"] = own[s.stratum].name;
  if (!paired) {
    out["kind"] = "closed";
    out["partner"] = nullptr;
  } else if (!s.partner) {
    out["kind"] = "solved";
    out["partner"] = nullptr;
    out["dual_empty"] = true;
  } else {
    out["kind"] = "solved";
    out["partner"] = other[*s.partner].name;
    out["dual_empty"] = false;
  }
  out["equations"] = s.equations;
  out["unknowns"] = s.unknowns;
  out["rank"] = s.rank;
  out["residual"] = "exact";
  json alpha = json::array();
  for (const auto& a : s.alpha) alpha.push_back(to_json(a));
  out["alpha"] = alpha;
  json beta = json::array();
  for (const auto& b : s.beta) beta.push_back(to_json(b));
  out["beta"] = beta;
  return out;
}

json side_to_json(const std::vector<Stratum>& own, const std::vector<Stratum>& other,
                  const std::vector<std::vector<Integer>>& matrix, const std::vector<Integer>& origin,
                  const std::vector<ClassPoly>& cm, const std::vector<SystemSolution>& systems,
                  const std::function<bool(std::size_t)>& is_paired) {
  json out;
  json names = json::array();
  json dims = json::array();
  for (const auto& s : own) {
    names.push_back(s.name);
    dims.push_back(s.dim);
  }
  out["strata"] = names;
  out["dims"] = dims;
  json rows = json::array();
  for (const auto& row : matrix) {
    json r = json::array();
    for (const auto& v : row) r.push_back(to_json(v));
    rows.push_back(r);
  }
  out["euler_table"] = rows;
  json orig = json::array();
  for (const auto& v : origin) orig.push_back(to_json(v));
  out["origin"] = orig;
  json cmj = json::object();
  for (std::size_t i = 0; i < cm.size(); ++i) cmj[own[i].name] = to_json(cm[i]);
  out["chern_mather"] = cmj;
  json sys = json::array();
  for (const auto& s : systems) sys.push_back(system_to_json(s, own, other, is_paired(s.stratum)));
  out["systems"] = sys;
  return out;
}

}  // namespace

StratifiedPair stratification_from_json(const json& j) {
  try {
    if (!j.is_object()) throw invalid_input("stratification must be a JSON object");
    if (!j.contains("N") || !j["N"].is_number_integer() || j["N"].get<long long>() <= 0) {
      throw invalid_input("stratification needs a positive integer N");
    }
    StratifiedPair pair;
    pair.N = static_cast<std::size_t>(j["N"].get<long long>());
    if (!j.contains("primal")) throw invalid_input("stratification has no 'primal' list");
    pair.primal = strata_from_json(j["primal"], pair.N, "primal");
    if (pair.primal.empty()) throw invalid_input("empty primal strata list");
    if (j.contains("dual")) pair.dual = strata_from_json(j["dual"], pair.N, "dual");
    if (j.contains("pairing")) {
      if (!j["pairing"].is_array()) throw invalid_input("'pairing' must be an array");
      for (const auto& link : j["pairing"]) {
        if (!link.is_array() || link.size() != 2) throw invalid_input("pairing entries must be [r, p] pairs");
        pair.pairing.push_back(PairLink{index_from_json(link[0]), index_from_json(link[1])});
      }
    }
    return pair.normalized();
  } catch (const json::exception& e) {
    throw invalid_input(std::string("malformed stratification: ") + e.what());
  }
}

json to_json(const StratifiedPair& pair) {
  auto side = [](const std::vector<Stratum>& strata) {
    json out = json::array();
    for (const auto& s : strata) out.push_back({{"name", s.name}, {"dim", s.dim}, {"csm", to_json(s.csm)}});
    return out;
  };
  json pairing = json::array();
  for (const PairLink& link : pair.pairing) {
    json l = json::array();
    l.push_back(link.primal ? json(*link.primal) : json(nullptr));
    l.push_back(link.dual ? json(*link.dual) : json(nullptr));
    pairing.push_back(l);
  }
  return {{"N", pair.N}, {"primal", side(pair.primal)}, {"dual", side(pair.dual)}, {"pairing", pairing}};
}

json to_json(const EulerTable& table, const StratifiedPair& pair) {
  json out;
  out["N"] = pair.N;
  out["primal"] = side_to_json(pair.primal, pair.dual, table.primal, table.primal_origin, table.primal_chern_mather,
                               table.primal_systems,
                               [&](std::size_t r) { return pair.primal_partner(r).has_value(); });
  out["dual"] = side_to_json(pair.dual, pair.primal, table.dual, table.dual_origin, table.dual_chern_mather,
                             table.dual_systems, [&](std::size_t j) { return pair.dual_partner(j).has_value(); });
  return out;
}

json solve_report(const StratifiedPair& pair) {
  json out = to_json(euler_table(pair), pair);
  out["command"] = "solve";
  return out;
}

json involute_report(const ClassPoly& f, long d) {
  const ClassPoly g = involute(f, d);
  return {{"command", "involute"}, {"d", d}, {"input", to_json(f)}, {"result", to_json(g)},
          {"result_text", g.to_string()}};
}

json detvar_report(long n) {
  json out;
  out["command"] = "detvar";
  out["n"] = n;
  out["N"] = n * n;
  for (long r = 0; r <= n; ++r) out["q_" + std::to_string(n) + "_" + std::to_string(r)] = to_json(q_poly(n, r));

  const StratifiedPair pair = det_strata(n);
  json csm = json::object();
  for (const auto& s : pair.primal) csm[s.name] = to_json(s.csm);
  out["csm_strata"] = csm;

  json duality = json::object();
  for (long r = 1; r <= n - 1; ++r) duality["q_" + std::to_string(n) + "_" + std::to_string(r)] = duality_check(n, r);
  out["duality_checks"] = duality;

  const EulerTable table = eu_table_det(n);
  out["euler"] = to_json(table, pair);
  json rows = json::array();
  for (const auto& row : table.primal) {
    json rj = json::array();
    for (const auto& v : row) rj.push_back(to_json(v));
    rows.push_back(rj);
  }
  out["euler_table"] = rows;
  json origin = json::array();
  for (const auto& v : table.primal_origin) origin.push_back(to_json(v));
  out["origin_column"] = origin;

  bool cm_ok = true;
  for (long r = 0; r <= n - 1; ++r) cm_ok = cm_ok && table.primal_chern_mather[r] == q_poly(n, r);
  out["chern_mather_equals_q"] = cm_ok;
  return out;
}

json quadric_report(const QuadricSpec& spec) {
  json out;
  out["command"] = "quadric";
  out["n"] = spec.n;
  out["rank"] = spec.r;
  out["smooth"] = spec.smooth();
  out["csm"] = to_json(csm_quadric(spec));
  out["chern_mather"] = to_json(chern_mather_quadric(spec));
  out["milnor_class"] = to_json(milnor_class(spec));
  const bool paths_agree = milnor_class(spec) == milnor_class_from_singular_locus(spec) &&
                           milnor_class(spec) == milnor_class_from_csm(spec, csm_quadric(spec));
  out["milnor_class_paths_agree"] = paths_agree;
  const EuValues eu = eu_values(spec);
  out["eu_values"] = {{"generic", eu.generic}, {"singular", eu.singular ? json(*eu.singular) : json(nullptr)}};
  if (spec.smooth()) {
    out["csm_singular_locus"] = nullptr;
    out["milnor_number"] = nullptr;
  } else {
    out["csm_singular_locus"] = to_json(csm_singular_locus(spec));
    out["milnor_number"] = milnor_number(spec);
  }
  out["complex_link_chi"] = complex_link_chi();
  const auto [x_dual, s_dual] = dual_cm_classes(spec);
  out["dual_cm_classes"] = {{"X_A_dual", to_json(x_dual)},
                            {"S_A_dual", spec.smooth() ? json(nullptr) : to_json(s_dual)}};
  const ExchangeCheck ex = involution_exchange(spec);
  out["involution_exchange"] = {{"X_A", ex.quadric},
                                {"S_A", ex.singular ? json(*ex.singular) : json(nullptr)}};

  const QuadricCheck check = cross_validate(spec);
  json cv;
  cv["agrees"] = check.agrees;
  cv["eu_singular"] = check.eu_singular ? to_json(*check.eu_singular) : json(nullptr);
  cv["milnor_number"] = check.mu ? to_json(*check.mu) : json(nullptr);
  cv["euler"] = to_json(check.table, quadric_strata(spec));
  out["cross_validation"] = cv;
  return out;
}

}  // namespace reflective
