#pragma once

// JSON forms of the library's value types. Field names are stable: the CLI
// emits them and downstream tooling parses them back.
//
// Field elements serialize as a plain integer over a prime field and as an
// ascending coefficient list over F_{p^k}, k > 1.

#include <nlohmann/json.hpp>

#include "radring/factor.hpp"
#include "radring/gfq.hpp"
#include "radring/ring.hpp"
#include "radring/structure.hpp"

namespace radring {

using json = nlohmann::json;

namespace gfq {
void to_json(json& j, const FieldSpec& spec);
void to_json(json& j, const FqElement& x);
FqElement element_from_json(const FieldSpec& spec, const json& j);
}  // namespace gfq

namespace ring {
void to_json(json& j, const RingParams& params);
void to_json(json& j, const RingElement& a);
}  // namespace ring

namespace factor {
void to_json(json& j, const Poly& f);
void to_json(json& j, const FactorizationReport& report);
Poly poly_from_json(const FieldSpec& spec, const json& j);
}  // namespace factor

namespace structure {
void to_json(json& j, const Reason& reason);
void from_json(const json& j, Reason& reason);
void to_json(json& j, const FieldVerdict& v);
void from_json(const json& j, FieldVerdict& v);
void to_json(json& j, const SplittingType& s);
void to_json(json& j, const Decomposition& d);
void from_json(const json& j, Decomposition& d);
void to_json(json& j, const CountReport& c);
void from_json(const json& j, CountReport& c);
}  // namespace structure

}  // namespace radring

// Types without a default constructor deserialize through adl_serializer.
namespace nlohmann {

template <>
struct adl_serializer<radring::gfq::FieldSpec> {
  static radring::gfq::FieldSpec from_json(const json& j);
  static void to_json(json& j, const radring::gfq::FieldSpec& spec) { radring::gfq::to_json(j, spec); }
};

template <>
struct adl_serializer<radring::ring::RingElement> {
  static radring::ring::RingElement from_json(const json& j);
  static void to_json(json& j, const radring::ring::RingElement& a) { radring::ring::to_json(j, a); }
};

template <>
struct adl_serializer<radring::factor::FactorizationReport> {
  static radring::factor::FactorizationReport from_json(const json& j);
  static void to_json(json& j, const radring::factor::FactorizationReport& r) {
    radring::factor::to_json(j, r);
  }
};

template <>
struct adl_serializer<radring::structure::SplittingType> {
  static radring::structure::SplittingType from_json(const json& j);
  static void to_json(json& j, const radring::structure::SplittingType& s) {
    radring::structure::to_json(j, s);
  }
};

}  // namespace nlohmann
