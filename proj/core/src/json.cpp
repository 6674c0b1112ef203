#include "radring/json.hpp"

#include "radring/errors.hpp"

namespace radring {

namespace gfq {

void to_json(json& j, const FieldSpec& spec) {
  j = json{{"p", spec.p()},
           {"k", spec.k()},
           {"modulus", std::vector<Natural>(spec.modulus().begin(), spec.modulus().end())}};
}

void to_json(json& j, const FqElement& x) {
  if (x.spec().k() == 1) {
    j = x.coeffs()[0];
  } else {
    j = std::vector<Natural>(x.coeffs().begin(), x.coeffs().end());
  }
}

FqElement element_from_json(const FieldSpec& spec, const json& j) {
  if (j.is_number_integer()) {
    return FqElement::from_integer(spec, j.get<std::int64_t>());
  }
  return FqElement(spec, j.get<std::vector<Natural>>());
}

}  // namespace gfq

namespace ring {

void to_json(json& j, const RingParams& params) {
  j = json{{"n", params.n}, {"m", params.m}, {"r", params.r}};
}

void to_json(json& j, const RingElement& a) {
  to_json(j, a.params());
  j["coeffs"] = std::vector<Natural>(a.coeffs().begin(), a.coeffs().end());
}

}  // namespace ring

namespace factor {

void to_json(json& j, const Poly& f) {
  json coeffs = json::array();
  for (const auto& c : f.coeffs()) coeffs.push_back(c);
  j = json{{"text", f.to_string()}, {"coeffs", std::move(coeffs)}};
}

Poly poly_from_json(const FieldSpec& spec, const json& j) {
  std::vector<FqElement> cs;
  for (const auto& c : j.at("coeffs")) cs.push_back(gfq::element_from_json(spec, c));
  return Poly(spec, std::move(cs));
}

void to_json(json& j, const FactorizationReport& report) {
  json factors = json::array();
  for (const auto& f : report.factors) {
    json entry = f.poly;
    entry["multiplicity"] = f.multiplicity;
    factors.push_back(std::move(entry));
  }
  j = json{{"field", report.input.spec()},
           {"input", report.input},
           {"unit", report.unit},
           {"factors", std::move(factors)}};
}

}  // namespace factor

namespace structure {

void to_json(json& j, const Reason& reason) {
  j = json{{"code", to_string(reason.code)}, {"evidence", reason.evidence}};
}

void from_json(const json& j, Reason& reason) {
  reason.code = reason_from_string(j.at("code").get<std::string>());
  reason.evidence = j.at("evidence");
}

void to_json(json& j, const FieldVerdict& v) {
  j = json{{"n", v.n},
           {"m", v.m},
           {"r", v.r},
           {"is_field", v.is_field},
           {"is_domain", v.is_domain},
           {"reasons", v.reasons}};
}

void from_json(const json& j, FieldVerdict& v) {
  j.at("n").get_to(v.n);
  j.at("m").get_to(v.m);
  j.at("r").get_to(v.r);
  j.at("is_field").get_to(v.is_field);
  j.at("is_domain").get_to(v.is_domain);
  j.at("reasons").get_to(v.reasons);
}

void to_json(json& j, const SplittingType& s) {
  j = json{{"field", s.r.spec()}, {"q", s.q},       {"m", s.m},
           {"r", s.r},            {"ord_r", s.ord_r}, {"t", s.t},
           {"factor_count", s.factor_count}};
}

namespace {

template <typename T>
void optional_to_json(json& j, const char* key, const std::optional<T>& v) {
  j[key] = v ? json(*v) : json(nullptr);
}

template <typename T>
void optional_from_json(const json& j, const char* key, std::optional<T>& v) {
  if (j.contains(key) && !j.at(key).is_null()) {
    v = j.at(key).get<T>();
  } else {
    v.reset();
  }
}

}  // namespace

void to_json(json& j, const Decomposition& d) {
  j = json{{"t", d.t}, {"copies", d.copies}, {"unit_count_prediction", d.unit_count_prediction}};
  optional_to_json(j, "unit_count_enumerated", d.unit_count_enumerated);
}

void from_json(const json& j, Decomposition& d) {
  j.at("t").get_to(d.t);
  j.at("copies").get_to(d.copies);
  j.at("unit_count_prediction").get_to(d.unit_count_prediction);
  optional_from_json(j, "unit_count_enumerated", d.unit_count_enumerated);
}

void to_json(json& j, const CountReport& c) {
  j = json{{"q", c.q}, {"m", c.m}, {"M", c.M}, {"predicted", c.predicted}};
  optional_to_json(j, "enumerated", c.enumerated);
}

void from_json(const json& j, CountReport& c) {
  j.at("q").get_to(c.q);
  j.at("m").get_to(c.m);
  j.at("M").get_to(c.M);
  j.at("predicted").get_to(c.predicted);
  optional_from_json(j, "enumerated", c.enumerated);
}

}  // namespace structure

}  // namespace radring

namespace nlohmann {

radring::gfq::FieldSpec adl_serializer<radring::gfq::FieldSpec>::from_json(const json& j) {
  using radring::gfq::FieldSpec;
  const auto p = j.at("p").get<std::uint64_t>();
  const auto k = j.at("k").get<unsigned>();
  if (k == 1) return FieldSpec::prime(p);
  auto modulus = j.at("modulus").get<std::vector<std::uint64_t>>();
  if (modulus.size() != k + 1) throw radring::DomainError("modulus length does not match k");
  return FieldSpec::extension(p, std::move(modulus));
}

radring::ring::RingElement adl_serializer<radring::ring::RingElement>::from_json(const json& j) {
  using namespace radring::ring;
  const RingParams params{j.at("n").get<std::uint64_t>(), j.at("m").get<std::size_t>(),
                          j.at("r").get<std::uint64_t>()};
  if (params.n < 2 || params.m < 1 || params.r >= params.n) {
    throw radring::DomainError("invalid ring parameters in JSON");
  }
  return RingElement(params, j.at("coeffs").get<std::vector<std::uint64_t>>());
}

radring::factor::FactorizationReport
adl_serializer<radring::factor::FactorizationReport>::from_json(const json& j) {
  using namespace radring::factor;
  const auto spec = j.at("field").get<radring::gfq::FieldSpec>();
  std::vector<Factor> factors;
  for (const auto& f : j.at("factors")) {
    factors.push_back({poly_from_json(spec, f), f.at("multiplicity").get<unsigned>()});
  }
  return {poly_from_json(spec, j.at("input")), std::move(factors),
          radring::gfq::element_from_json(spec, j.at("unit"))};
}

radring::structure::SplittingType adl_serializer<radring::structure::SplittingType>::from_json(
    const json& j) {
  const auto spec = j.at("field").get<radring::gfq::FieldSpec>();
  return {j.at("q").get<std::uint64_t>(),
          j.at("m").get<std::uint64_t>(),
          radring::gfq::element_from_json(spec, j.at("r")),
          j.at("ord_r").get<std::uint64_t>(),
          j.at("t").get<std::uint64_t>(),
          j.at("factor_count").get<std::uint64_t>()};
}

}  // namespace nlohmann
