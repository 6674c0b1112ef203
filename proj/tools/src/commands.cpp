#include "radring_cli/commands.hpp"

#include <charconv>
#include <numeric>
#include <sstream>

#include <radring/errors.hpp>
#include <radring/factor.hpp>
#include <radring/ring.hpp>
#include <radring/structure.hpp>

#include "radring_cli/verify.hpp"

namespace radring::cli {

namespace {

using factor::Poly;
using gfq::FieldSpec;
using gfq::FqElement;
using ring::RingElement;

std::int64_t parse_int(std::string_view text, const char* what) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw DomainError(std::string("cannot parse ") + what + " '" + std::string(text) + "'");
  }
  return v;
}

class Text {
 public:
  Text& line(const std::string& label, const std::string& value) {
    out_ << label;
    for (std::size_t i = label.size(); i < 17; ++i) out_ << ' ';
    out_ << value << '\n';
    return *this;
  }
  Text& raw(const std::string& s) {
    out_ << s << '\n';
    return *this;
  }
  std::string str() const { return out_.str(); }

 private:
  std::ostringstream out_;
};

std::string join(const std::vector<Natural>& xs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

std::vector<Natural> coeffs_of(const RingElement& a) {
  return {a.coeffs().begin(), a.coeffs().end()};
}

std::string factors_text(const factor::FactorizationReport& rep) {
  std::string out;
  if (!rep.unit.is_one()) out += rep.unit.to_string();
  for (const auto& f : rep.factors) {
    out += "(" + f.poly.to_string() + ")";
    if (f.multiplicity > 1) out += "^" + std::to_string(f.multiplicity);
  }
  return out.empty() ? "1" : out;
}

std::string reason_text(const structure::Reason& reason) {
  using structure::ReasonCode;
  const auto& ev = reason.evidence;
  std::string out = structure::to_string(reason.code);
  switch (reason.code) {
    case ReasonCode::kCompositeN:
      out += " (" + ev.at("factor").dump() + " * " + ev.at("cofactor").dump() + ")";
      break;
    case ReasonCode::kBinomialReducible:
      out += " (factor " + ev.at("factor").get<std::string>() + ")";
      break;
    case ReasonCode::kIrreducibleOverPrime:
      out += " (" + ev.at("polynomial").get<std::string>() + ")";
      break;
    case ReasonCode::kRootCriterion:
      out += ev.at("root").is_null() ? " (no root)" : " (root " + ev.at("root").dump() + ")";
      break;
    case ReasonCode::kPrimeN:
      break;
  }
  return out;
}

std::string decomposition_text(const FieldSpec& base, const structure::Decomposition& d) {
  std::string field = "F_" + std::to_string(base.p());
  const Natural power = base.k() * d.t;
  if (power > 1) field += "^" + std::to_string(power);
  std::string out = field;
  for (Natural i = 1; i < d.copies; ++i) out += " x " + field;
  return out;
}

}  // namespace

FieldSpec parse_field(const std::string& text, Natural seed) {
  const auto caret = text.find('^');
  const auto p = parse_int(std::string_view(text).substr(0, caret), "field characteristic");
  if (p < 2) throw DomainError("field characteristic must be a prime, got '" + text + "'");
  if (caret == std::string::npos) {
    if (!numth::is_prime(static_cast<Natural>(p))) {
      throw DomainError("'" + text + "' is not prime; write prime powers as p^k");
    }
    return FieldSpec::prime(static_cast<Natural>(p));
  }
  const auto k = parse_int(std::string_view(text).substr(caret + 1), "field degree");
  if (k < 1 || k > 63) throw DomainError("field degree out of range in '" + text + "'");
  return FieldSpec::galois(static_cast<Natural>(p), static_cast<unsigned>(k), seed);
}

std::vector<std::int64_t> parse_coeffs(const std::string& text) {
  std::vector<std::int64_t> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_int(std::string_view(text).substr(start, comma - start), "coefficient"));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

CommandResult cmd_analyze(std::int64_t n, std::int64_t m, std::int64_t r, const Options& opts) {
  const auto params = ring::make_params(n, m, r, opts.limits);
  const bool prime = numth::is_prime(params.n);
  const auto parts = numth::crt_split(params.n);
  const auto verdict = structure::is_field(params.n, params.m, static_cast<std::int64_t>(params.r),
                                           opts.seed, opts.limits);
  CommandResult out;
  json& rep = out.report;
  rep["ring"] = params;
  rep["ring"]["name"] = params.name();
  rep["n_is_prime"] = prime;
  rep["crt_split"] = parts;
  rep["verdict"] = verdict;
  rep["factorization"] = nullptr;
  rep["splitting"] = nullptr;
  rep["decomposition"] = nullptr;

  Text text;
  text.line("ring", params.name());
  text.line("n", std::to_string(params.n) + (prime ? ", prime" : ", composite"));
  text.line("crt split", join(parts, " x "));
  text.line("field", verdict.is_field ? "yes" : "no");
  std::string reasons;
  for (const auto& reason : verdict.reasons) {
    if (!reasons.empty()) reasons += "; ";
    reasons += reason_text(reason);
  }
  text.line("reasons", reasons);

  std::optional<Natural> units;
  if (prime) {
    const auto spec = FieldSpec::prime(params.n);
    const auto rr = FqElement::from_index(spec, params.r);
    const auto fac = factor::factor_monic(Poly::binomial(params.m, rr), opts.seed);
    rep["factorization"] = fac;
    text.line("factors", factors_text(fac));
    if (params.r != 0 && (params.n - 1) % params.m == 0) {
      const auto split = structure::splitting_type(spec, params.m, rr);
      const auto decomp = structure::ring_decomposition(spec, params.m, rr, opts.limits);
      rep["splitting"] = split;
      rep["decomposition"] = decomp;
      text.line("splitting", "t = " + std::to_string(split.t) + ", " +
                                 std::to_string(split.factor_count) + " factor(s) of degree " +
                                 std::to_string(split.t));
      text.line("decomposition", decomposition_text(spec, decomp));
      text.line("units predicted", std::to_string(decomp.unit_count_prediction));
      units = decomp.unit_count_enumerated;
    } else {
      text.line("splitting", params.r == 0 ? "n/a (r = 0)" : "n/a (m does not divide n-1)");
    }
  }
  const auto size = ring::ring_size(params);
  if (!units && size && *size <= opts.limits.enumeration) {
    units = ring::unit_count(params, opts.limits);
  }
  rep["unit_count"] = units ? json(*units) : json(nullptr);
  text.line("units", units ? std::to_string(*units) : "n/a (n^m above enumeration cap)");
  out.text = text.str();
  return out;
}

CommandResult cmd_element(std::int64_t n, std::int64_t m, std::int64_t r,
                          const std::vector<std::int64_t>& coeffs,
                          const std::optional<std::vector<std::int64_t>>& other,
                          const Options& opts) {
  const auto params = ring::make_params(n, m, r, opts.limits);
  auto element = [&](const std::vector<std::int64_t>& cs) {
    if (cs.size() != params.m) {
      throw DomainError("element of " + params.name() + " needs " + std::to_string(params.m) +
                        " coefficients, got " + std::to_string(cs.size()));
    }
    return RingElement::from_signed(params, cs);
  };
  const auto a = element(coeffs);
  const std::optional<RingElement> b = other ? std::optional(element(*other)) : std::nullopt;

  const Natural det = ring::unital_det(a).value();
  const Natural g = std::gcd(det, params.n);
  const bool unit = ring::is_unit(a);

  CommandResult out;
  json& rep = out.report;
  rep["ring"] = params;
  rep["element"] = coeffs_of(a);
  rep["det"] = det;
  rep["gcd_det_n"] = g;
  rep["is_unit"] = unit;
  rep["inverse"] = nullptr;

  Text text;
  text.line("ring", params.name());
  text.line("element", a.to_string());
  text.line("det", std::to_string(det) + " (gcd with n: " + std::to_string(g) + ")");
  text.line("unit", unit ? "yes" : "no");

  json zd;
  if (unit) {
    const auto inv = ring::inverse(a);
    rep["inverse"] = coeffs_of(inv);
    text.line("inverse", inv.to_string());
    zd = {{"status", "unit"}, {"witness", nullptr}, {"product", nullptr}};
  } else if (a.is_zero()) {
    zd = {{"status", "zero"}, {"witness", nullptr}, {"product", nullptr}};
    text.line("zero divisor", "element is 0");
  } else {
    const auto w = ring::zero_divisor_witness(a, opts.limits);
    if (w.witness) {
      const auto prod = a * *w.witness;
      zd = {{"status", "found"}, {"witness", coeffs_of(*w.witness)}, {"product", coeffs_of(prod)}};
      text.line("witness", w.witness->to_string() + " (product " + prod.to_string() + ")");
      if (!prod.is_zero()) out.exit_code = kExitVerificationFailure;
    } else {
      zd = {{"status", "not_searched"}, {"witness", nullptr}, {"product", nullptr}};
      text.line("witness", "not searched (n^m above witness cap)");
    }
  }
  rep["zero_divisor"] = std::move(zd);

  if (b) {
    rep["other"] = coeffs_of(*b);
    rep["sum"] = coeffs_of(a + *b);
    rep["product"] = coeffs_of(a * *b);
    text.line("other", b->to_string());
    text.line("sum", (a + *b).to_string());
    text.line("product", (a * *b).to_string());
  }
  out.text = text.str();
  return out;
}

CommandResult cmd_factor(const std::string& field, std::int64_t m, std::int64_t r,
                         const Options& opts) {
  if (m < 1) throw DomainError("m must be >= 1");
  const auto spec = parse_field(field, opts.seed);
  const auto mm = static_cast<Natural>(m);
  const auto rr = FqElement::from_integer(spec, r);
  const auto f = Poly::binomial(mm, rr);
  const auto fac = factor::factor_monic(f, opts.seed);

  CommandResult out;
  json& rep = out.report;
  rep["field"] = spec;
  rep["m"] = mm;
  rep["r"] = rr;
  rep["factorization"] = fac;
  rep["certificate"] = nullptr;

  Text text;
  text.line("field", spec.name());
  text.line("polynomial", f.to_string());
  text.line("factors", factors_text(fac));

  json prediction = {{"status", "n/a"}, {"t", nullptr}, {"factor_count", nullptr}};
  if (rr.is_zero()) {
    prediction["reason"] = "r = 0";
    text.line("prediction", "n/a (r = 0)");
  } else if ((spec.q() - 1) % mm != 0) {
    prediction["reason"] = "m does not divide q-1";
    text.line("prediction", "n/a (m does not divide q-1)");
    if (mm >= 2 && numth::is_squarefree(mm)) {
      const auto cert = structure::squarefree_reducible(spec, mm, rr);
      const auto small = Poly::binomial(mm / cert.d, cert.b);
      const bool divides = factor::poly_mod(f, small).is_zero();
      rep["certificate"] = {
          {"d", cert.d}, {"b", cert.b}, {"factor", small.to_string()}, {"divides", divides}};
      text.line("certificate", "d = " + std::to_string(cert.d) + ", b = " + cert.b.to_string() +
                                   ": " + small.to_string() +
                                   (divides ? " divides " : " does NOT divide ") + f.to_string());
      if (!divides) out.exit_code = kExitVerificationFailure;
    }
  } else {
    const auto st = structure::splitting_type(spec, mm, rr);
    bool match = fac.factors.size() == st.factor_count;
    for (const auto& fa : fac.factors) {
      match = match && fa.multiplicity == 1 && static_cast<Natural>(fa.poly.degree()) == st.t;
    }
    prediction = {{"status", match ? "MATCH" : "MISMATCH"},
                  {"t", st.t},
                  {"factor_count", st.factor_count},
                  {"ord_r", st.ord_r}};
    text.line("prediction", "t = " + std::to_string(st.t) + ", " + std::to_string(st.factor_count) +
                                " factor(s): " + (match ? "MATCH" : "MISMATCH"));
    if (!match) out.exit_code = kExitVerificationFailure;
  }
  rep["prediction"] = std::move(prediction);
  out.text = text.str();
  return out;
}

CommandResult cmd_factor_poly(const std::string& field, const std::string& poly,
                              const Options& opts) {
  const auto spec = parse_field(field, opts.seed);
  const auto f = factor::parse_poly(spec, poly);
  if (f.degree() < 1) throw DomainError("factorization needs degree >= 1");
  const int d = f.degree();
  bool binomial = f.leading().is_one();
  for (int i = 1; i < d; ++i) binomial = binomial && f.coeffs()[i].is_zero();
  if (binomial) {
    const auto r = gfq::ff_neg(f.coeffs()[0]).index();
    return cmd_factor(field, d, static_cast<std::int64_t>(r), opts);
  }

  const auto fac = factor::factor_monic(f, opts.seed);
  CommandResult out;
  out.report = {{"field", spec},
                {"polynomial", f},
                {"factorization", fac},
                {"prediction", {{"status", "n/a"}, {"reason", "not a binomial x^m - r"}}},
                {"certificate", nullptr}};
  Text text;
  text.line("field", spec.name());
  text.line("polynomial", f.to_string());
  text.line("factors", factors_text(fac));
  text.line("prediction", "n/a (not a binomial x^m - r)");
  out.text = text.str();
  return out;
}

CommandResult cmd_count_irreducible(const std::string& field, std::int64_t m, const Options& opts) {
  if (m < 1) throw DomainError("m must be >= 1");
  const auto spec = parse_field(field, opts.seed);
  const auto c = structure::count_irreducible(spec, static_cast<Natural>(m), opts.limits);
  const char* status = !c.enumerated ? "n/a" : *c.enumerated == c.predicted ? "MATCH" : "MISMATCH";

  CommandResult out;
  out.report = {{"field", spec}, {"count", c}, {"status", status}};
  Text text;
  text.line("field", spec.name());
  text.line("m", std::to_string(c.m));
  text.line("M", std::to_string(c.M));
  text.line("predicted", std::to_string(c.predicted));
  text.line("enumerated", c.enumerated ? std::to_string(*c.enumerated) : "n/a (q above cap)");
  text.line("status", status);
  out.text = text.str();
  if (std::string_view(status) == "MISMATCH") out.exit_code = kExitVerificationFailure;
  return out;
}

CommandResult cmd_verify(const std::string& suite, const Options& opts) {
  const VerifyOptions vo{opts.seed, opts.workers, opts.max_p, opts.max_m, opts.limits};
  const auto reports = run_suite(suite, vo);

  Natural checked = 0;
  Natural failures = 0;
  Text text;
  constexpr std::size_t kShown = 10;
  for (const auto& r : reports) {
    checked += r.checked;
    failures += r.failures.size();
    text.raw((r.ok() ? "PASS  " : "FAIL  ") + r.suite + "/" + r.section + "  points " +
             std::to_string(r.points) + ", checked " + std::to_string(r.checked) + ", failures " +
             std::to_string(r.failures.size()));
    for (std::size_t i = 0; i < r.failures.size() && i < kShown; ++i) {
      const auto& f = r.failures[i];
      text.raw("      at " + f.point.dump() + ": expected " + f.expected.dump() + ", got " +
               f.actual.dump());
    }
    if (r.failures.size() > kShown) {
      text.raw("      ... " + std::to_string(r.failures.size() - kShown) + " more");
    }
  }
  text.raw("total  checked " + std::to_string(checked) + ", failures " + std::to_string(failures));

  CommandResult out;
  out.report = {{"suite", suite},     {"seed", opts.seed},         {"reports", reports},
                {"checked", checked}, {"failure_count", failures}, {"ok", failures == 0}};
  out.text = text.str();
  out.exit_code = failures == 0 ? kExitOk : kExitVerificationFailure;
  return out;
}

}  // namespace radring::cli
