#include "vvmf/serialize.hpp"

#include <sstream>

namespace vvmf {

Json to_json(const ExactRational& x) { return x.str(); }

ExactRational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return ExactRational(j.get<long>());
  if (!j.is_string()) throw InputError(ErrorCode::ParseError, "rational must be a string");
  return ExactRational::parse(j.get<std::string>());
}

Json to_json(const QExpansion& f) {
  Json coeffs = Json::array();
  for (const auto& c : f.coeffs()) coeffs.push_back(c.str());
  return Json{{"exponent", f.exponent().str()}, {"coeffs", std::move(coeffs)}, {"order", f.order()}};
}

QExpansion series_from_json(const Json& j) {
  std::vector<ExactRational> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from_json(c));
  QExpansion f(rational_from_json(j.at("exponent")), std::move(coeffs));
  if (j.contains("order") && j.at("order").get<int>() != f.order()) {
    throw InputError(ErrorCode::ParseError, "series order does not match coefficient count");
  }
  return f;
}

Json to_json(const RepTriple& t) {
  return Json{{"A", t.A()}, {"B", t.B()}, {"C", t.C()}, {"N", t.N()}, {"k0", t.k0()}};
}

RepTriple triple_from_json(const Json& j) {
  const RepTriple t = validate_triple(j.at("A").get<std::int64_t>(), j.at("B").get<std::int64_t>(),
                                      j.at("C").get<std::int64_t>(), j.at("N").get<std::int64_t>());
  if (j.contains("k0") && j.at("k0").get<std::int64_t>() != t.k0()) {
    throw InputError(ErrorCode::ParseError, "stored k0 disagrees with the triple");
  }
  return t;
}

Json to_json(const RepTriple& t, const Classification& c) {
  Json j = to_json(t);
  j["congruence_by_small_level"] = c.congruence_by_small_level;
  j["primitive_level7"] = c.primitive_level7;
  j["gamma02_pattern"] = c.gamma02_pattern ? Json(*c.gamma02_pattern) : Json(nullptr);
  j["ubd_primes"] = c.ubd_primes;
  j["notes"] = c.notes;
  return j;
}

Json to_json(const FamilyResult& r, std::string_view family) {
  Json exps = Json::array();
  for (const auto& e : r.eigen_exponents) exps.push_back(e.str());
  return Json{{"family", family},
              {"triple", to_json(r.triple)},
              {"eigen_exponents", std::move(exps)},
              {"formula_level", r.formula_level},
              {"presentation_check", r.presentation_check.str()},
              {"finite_image_M", r.finite_image_M ? Json(*r.finite_image_M) : Json(nullptr)}};
}

Json coefficients_json(const MDESystem& sys, const MinimalVector& f0) {
  Json comps = Json::array();
  for (const auto& c : f0.components) comps.push_back(to_json(c));
  return Json{{"triple", to_json(sys.triple)},
              {"k0", sys.k0},
              {"alpha4", sys.alpha4.str()},
              {"alpha6", sys.alpha6.str()},
              {"components", std::move(comps)}};
}

Json parameters_json(const MDESystem& sys) {
  return Json{{"triple", to_json(sys.triple)},
              {"k0", sys.k0},
              {"x0", sys.x0.get_str()},
              {"x4", sys.x4.get_str()},
              {"x6", sys.x6.get_str()},
              {"alpha4", sys.alpha4.str()},
              {"alpha6", sys.alpha6.str()},
              {"g0", to_json(sys.g0)},
              {"g1", to_json(sys.g1)},
              {"g2", to_json(sys.g2)}};
}

Json basis_json(const MDESystem& sys, const MinimalVector& f0, const DerivedBasis& basis) {
  auto vec = [](const std::array<QExpansion, 3>& v) {
    Json a = Json::array();
    for (const auto& c : v) a.push_back(to_json(c));
    return a;
  };
  Json b = Json::array();
  for (const auto& row : basis.B) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(x.str());
    b.push_back(std::move(r));
  }
  return Json{{"triple", to_json(sys.triple)},
              {"k0", sys.k0},
              {"F0", vec(f0.components)},
              {"DF0", vec(basis.DF0)},
              {"D2F0", vec(basis.D2F0)},
              {"B", std::move(b)},
              {"det_B", basis.det.str()}};
}

Json to_json(const PrimeCase& pc) {
  Json j{{"p", pc.p},
         {"case", pc.case_id == 0 ? Json("not covered") : Json(pc.case_label)},
         {"covered", pc.covered()}};
  if (pc.case_id != 0) {
    j["predicted_nu_z"] = pc.predicted_nu;
    j["labeling"] = pc.labeling ? Json(pc.labeling->slot) : Json(nullptr);
    j["delta"] = pc.delta;
    j["hypothesis"] = pc.hypothesis;
  }
  return j;
}

namespace {

Json valuation_json(const ValuationValue& v) {
  return v.is_infinite() ? Json("inf") : Json(v.value());
}

}  // namespace

Json to_json(const ValuationReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back(Json{{"n", row.n},
                        {"observed", valuation_json(row.observed)},
                        {"predicted", row.predicted ? Json(*row.predicted) : Json(nullptr)}});
  }
  return Json{{"triple", to_json(r.triple)},
              {"prime", r.p},
              {"labeling", r.labeling.slot},
              {"exponent", r.triple.root(r.labeling.slot).str()},
              {"prime_case", to_json(r.prime_case)},
              {"rows", std::move(rows)},
              {"verdict", verdict_name(r.verdict)}};
}

std::string report_csv(const ValuationReport& r) {
  std::ostringstream os;
  os << "n,observed,predicted\n";
  for (const auto& row : r.rows) {
    os << row.n << ',' << row.observed.str() << ',';
    if (row.predicted) os << *row.predicted;
    os << '\n';
  }
  return os.str();
}

Json to_json(const DenominatorProfile& p) {
  Json primes = Json::array();
  for (const auto& pp : p.primes) {
    primes.push_back(Json{{"p", pp.p},
                          {"min_valuation", pp.min_valuation},
                          {"argmin", pp.argmin},
                          {"strictly_decreasing", pp.strictly_decreasing}});
  }
  return Json{{"primes", std::move(primes)},
              {"unfactored", p.unfactored.get_str()},
              {"verdict", profile_verdict_name(p.verdict)}};
}

}  // namespace vvmf
