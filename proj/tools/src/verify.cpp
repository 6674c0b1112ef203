#include "radring_cli/verify.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include <radring/errors.hpp>
#include <radring/factor.hpp>
#include <radring/ring.hpp>
#include <radring/structure.hpp>

namespace radring::cli {

namespace {

using factor::Poly;
using gfq::FieldSpec;
using gfq::FqElement;
using ring::RingElement;
using ring::RingParams;

// --- grids ------------------------------------------------------------------

std::vector<Natural> primes_up_to(Natural bound) {
  std::vector<Natural> out;
  for (Natural p = 2; p <= bound; ++p) {
    if (numth::is_prime(p)) out.push_back(p);
  }
  return out;
}

struct PrimePowerQ {
  Natural p;
  unsigned k;
  Natural q;
};

std::vector<PrimePowerQ> prime_powers_up_to(Natural bound) {
  std::vector<PrimePowerQ> out;
  for (Natural q = 2; q <= bound; ++q) {
    const auto f = numth::factorize(q);
    if (f.size() == 1) out.push_back({f[0].prime, f[0].exponent, q});
  }
  return out;
}

std::mt19937_64 rng_for(Natural seed, std::initializer_list<Natural> salt) {
  std::vector<std::uint32_t> words{static_cast<std::uint32_t>(seed),
                                   static_cast<std::uint32_t>(seed >> 32)};
  for (Natural s : salt) {
    words.push_back(static_cast<std::uint32_t>(s));
    words.push_back(static_cast<std::uint32_t>(s >> 32));
  }
  std::seed_seq seq(words.begin(), words.end());
  return std::mt19937_64(seq);
}

Natural uniform(std::mt19937_64& rng, Natural lo, Natural hi) {
  return std::uniform_int_distribution<Natural>(lo, hi)(rng);
}

json ring_point(const RingParams& p) { return {{"n", p.n}, {"m", p.m}, {"r", p.r}}; }

json with(json point, const char* key, json value) {
  point[key] = std::move(value);
  return point;
}

std::vector<Natural> coeffs_of(const RingElement& a) {
  return {a.coeffs().begin(), a.coeffs().end()};
}

json factor_degrees(const factor::FactorizationReport& rep) {
  json out = json::array();
  for (const auto& f : rep.factors) out.push_back({f.poly.degree(), f.multiplicity});
  return out;
}

// Multiplication of Z_n[x]/(x^m - r) on a flat table of every element, used
// for the pairwise searches. Written directly from x^m = r; it shares no code
// with ring::mul.
class Brute {
 public:
  explicit Brute(const RingParams& params) : n_(params.n), m_(params.m), r_(params.r) {
    const auto size = ring::ring_size(params);
    if (!size || *size > 10'000'000) throw RangeError("ring too large for pairwise search");
    size_ = *size;
    table_.resize(size_ * m_);
    for (Natural idx = 0; idx < size_; ++idx) {
      Natural v = idx;
      for (std::size_t i = 0; i < m_; ++i) {
        table_[idx * m_ + i] = v % n_;
        v /= n_;
      }
    }
  }

  Natural size() const { return size_; }
  const Natural* at(Natural idx) const { return &table_[idx * m_]; }

  void mul(Natural ia, Natural ib, Natural* out) const {
    const Natural* a = at(ia);
    const Natural* b = at(ib);
    unsigned __int128 acc[2 * 12] = {};
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < m_; ++j)
        acc[i + j] += static_cast<unsigned __int128>(a[i]) * b[j];
    }
    for (std::size_t d = 2 * m_ - 1; d-- > m_;) acc[d - m_] += (acc[d] % n_) * r_;
    for (std::size_t i = 0; i < m_; ++i) out[i] = static_cast<Natural>(acc[i] % n_);
  }

  bool product_is_zero(Natural ia, Natural ib) const {
    Natural out[12];
    mul(ia, ib, out);
    return std::all_of(out, out + m_, [](Natural c) { return c == 0; });
  }

  bool product_is_one(Natural ia, Natural ib) const {
    Natural out[12];
    mul(ia, ib, out);
    return out[0] == 1 % n_ && std::all_of(out + 1, out + m_, [](Natural c) { return c == 0; });
  }

  // First pair (a, b), 0 < a <= b, with ab = 0.
  std::optional<std::pair<Natural, Natural>> zero_divisor_pair() const {
    for (Natural a = 1; a < size_; ++a) {
      for (Natural b = a; b < size_; ++b) {
        if (product_is_zero(a, b)) return std::make_pair(a, b);
      }
    }
    return std::nullopt;
  }

  Natural index_of(std::span<const Natural> coeffs) const {
    Natural idx = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) idx = idx * n_ + coeffs[i];
    return idx;
  }

  // First b > 0 with ab = 0.
  std::optional<Natural> annihilator(Natural a) const {
    for (Natural b = 1; b < size_; ++b) {
      if (product_is_zero(a, b)) return b;
    }
    return std::nullopt;
  }

  bool has_inverse(Natural a) const {
    for (Natural b = 1; b < size_; ++b) {
      if (product_is_one(a, b)) return true;
    }
    return false;
  }

  std::vector<Natural> coeffs(Natural idx) const { return {at(idx), at(idx) + m_}; }

 private:
  Natural n_;
  std::size_t m_;
  Natural r_;
  Natural size_ = 0;
  std::vector<Natural> table_;
};

// --- sections ---------------------------------------------------------------

struct Section {
  json grid;
  std::vector<json> points;
  std::vector<detail::Task> tasks;

  void add(json point, detail::Task task) {
    points.push_back(std::move(point));
    tasks.push_back(std::move(task));
  }
};

using Builder = Section (*)(const VerifyOptions&);

Natural bound_p(const VerifyOptions& o, Natural fallback) { return o.max_p.value_or(fallback); }
Natural bound_m(const VerifyOptions& o, Natural fallback) {
  return std::min<Natural>(o.max_m.value_or(fallback), o.limits.max_m);
}

std::vector<RingParams> ring_grid(Natural max_n, Natural max_m, Natural max_size,
                                  bool composite_only, const Limits& limits) {
  std::vector<RingParams> out;
  for (Natural n = 2; n <= max_n; ++n) {
    if (composite_only && numth::is_prime(n)) continue;
    for (Natural m = 1; m <= max_m; ++m) {
      const auto size = numth::checked_pow(n, m);
      if (!size || *size > max_size) break;
      for (Natural r = 0; r < n; ++r) {
        out.push_back(ring::make_params(static_cast<std::int64_t>(n), static_cast<std::int64_t>(m),
                                        static_cast<std::int64_t>(r), limits));
      }
    }
  }
  return out;
}

// ring-axioms ----------------------------------------------------------------

constexpr Natural kAxiomRingSize = 3125;
constexpr Natural kExhaustivePairs = 625;
constexpr Natural kExhaustiveTriples = 46;
constexpr Natural kRandomPairs = 100'000;
constexpr Natural kRandomTriples = 10'000;
constexpr Natural kCrtSample = 2000;

Section axioms(const VerifyOptions& o) {
  const Natural max_n = bound_p(o, 16);
  const Natural max_m = bound_m(o, 12);
  Section s;
  s.grid = {{"n", {2, max_n}}, {"m", {1, max_m}}, {"r", "all"}, {"max_size", kAxiomRingSize}};
  for (const auto& params : ring_grid(max_n, max_m, kAxiomRingSize, false, o.limits)) {
    const Natural seed = o.seed;
    s.add(ring_point(params), [params, seed] {
      detail::TaskResult res;
      const Natural size = *ring::ring_size(params);
      std::vector<RingElement> el;
      el.reserve(size);
      for (Natural i = 0; i < size; ++i) el.push_back(RingElement::from_index(params, i));
      const auto one = RingElement::one(params);
      const json base = ring_point(params);
      auto point = [&](const char* law, std::initializer_list<Natural> idx) {
        json p = with(base, "law", law);
        json xs = json::array();
        for (Natural i : idx) xs.push_back(coeffs_of(el[i]));
        p["elements"] = std::move(xs);
        return p;
      };

      for (Natural i = 0; i < size; ++i) {
        const auto prod = el[i] * one;
        if (!res.check(prod == el[i]))
          res.fail(point("identity", {i}), coeffs_of(el[i]), coeffs_of(prod));
      }

      auto pair_check = [&](Natural i, Natural j) {
        const auto ab = el[i] * el[j];
        const auto ba = el[j] * el[i];
        if (!res.check(ab == ba))
          res.fail(point("commutativity", {i, j}), coeffs_of(ab), coeffs_of(ba));
        const auto oracle = ring::mul_poly_oracle(el[i], el[j]);
        if (!res.check(ab == oracle))
          res.fail(point("oracle", {i, j}), coeffs_of(oracle), coeffs_of(ab));
      };
      auto triple_check = [&](Natural i, Natural j, Natural k) {
        const auto left = (el[i] * el[j]) * el[k];
        const auto right = el[i] * (el[j] * el[k]);
        if (!res.check(left == right))
          res.fail(point("associativity", {i, j, k}), coeffs_of(left), coeffs_of(right));
        const auto dl = el[i] * (el[j] + el[k]);
        const auto dr = el[i] * el[j] + el[i] * el[k];
        if (!res.check(dl == dr))
          res.fail(point("distributivity", {i, j, k}), coeffs_of(dr), coeffs_of(dl));
      };

      auto rng = rng_for(seed, {params.n, params.m, params.r});
      if (size <= kExhaustivePairs) {
        for (Natural i = 0; i < size; ++i) {
          for (Natural j = i; j < size; ++j) pair_check(i, j);
        }
      } else {
        for (Natural t = 0; t < kRandomPairs; ++t) {
          pair_check(uniform(rng, 0, size - 1), uniform(rng, 0, size - 1));
        }
      }
      if (size <= kExhaustiveTriples) {
        for (Natural i = 0; i < size; ++i) {
          for (Natural j = 0; j < size; ++j) {
            for (Natural k = 0; k < size; ++k) triple_check(i, j, k);
          }
        }
      } else {
        for (Natural t = 0; t < kRandomTriples; ++t) {
          triple_check(uniform(rng, 0, size - 1), uniform(rng, 0, size - 1),
                       uniform(rng, 0, size - 1));
        }
      }
      return res;
    });
  }
  return s;
}

// determinant ------------------------------------------------------------------

Section unit_criterion(const VerifyOptions& o) {
  const Natural max_n = bound_p(o, 7);
  const Natural max_m = bound_m(o, 3);
  Section s;
  s.grid = {{"n", {2, max_n}},
            {"m", {1, max_m}},
            {"r", "all"},
            {"elements", "all nonzero"},
            {"checked_counts", "inverse-search pairs plus per-element verdicts"}};
  for (const auto& params : ring_grid(max_n, max_m, o.limits.enumeration, false, o.limits)) {
    const Limits limits = o.limits;
    s.add(ring_point(params), [params, limits] {
      detail::TaskResult res;
      const Brute br(params);
      for (Natural a = 1; a < br.size(); ++a) {
        // full scan over b
        bool found = false;
        for (Natural b = 0; b < br.size(); ++b) found = br.product_is_one(a, b) || found;
        res.checked += br.size();

        const RingElement x(params, br.coeffs(a));
        const json point = with(ring_point(params), "a", br.coeffs(a));
        const bool unit = ring::is_unit(x);
        if (!res.check(unit == found)) res.fail(point, found, unit);
        if (unit) {
          const auto inv = ring::inverse(x);
          if (!res.check((x * inv).is_one()))
            res.fail(with(point, "check", "inverse"), "a * inverse = 1", coeffs_of(inv));
          continue;
        }
        try {
          (void)ring::inverse(x);
          if (!res.check(false))
            res.fail(with(point, "check", "inverse"), "NotInvertibleError", "returned");
        } catch (const NotInvertibleError& e) {
          if (!res.check(e.gcd_with_modulus() > 1))
            res.fail(with(point, "check", "inverse"), "gcd > 1", e.gcd_with_modulus());
        }
        const auto w = ring::zero_divisor_witness(x, limits);
        const bool ok = w.status == ring::ZeroDivisorWitness::Status::kFound && w.witness &&
                        !w.witness->is_zero() && (x * *w.witness).is_zero();
        if (!res.check(ok))
          res.fail(with(point, "check", "witness"), "nonzero b with ab = 0",
                   w.witness ? json(coeffs_of(*w.witness)) : json(nullptr));
      }
      return res;
    });
  }
  return s;
}

Natural closed_form(const RingElement& a) {
  const auto& [n, m, r] = a.params();
  using numth::add_mod;
  using numth::mul_mod;
  using numth::sub_mod;
  if (m == 2) return sub_mod(mul_mod(a[0], a[0], n), mul_mod(r, mul_mod(a[1], a[1], n), n), n);
  const Natural t = 3 % n;
  Natural s = mul_mod(mul_mod(a[0], a[0], n), a[0], n);
  s = add_mod(s, mul_mod(r, mul_mod(mul_mod(a[1], a[1], n), a[1], n), n), n);
  s = add_mod(s, mul_mod(mul_mod(r, r, n), mul_mod(mul_mod(a[2], a[2], n), a[2], n), n), n);
  const Natural cross = mul_mod(mul_mod(t, r, n), mul_mod(mul_mod(a[0], a[1], n), a[2], n), n);
  return sub_mod(s, cross, n);
}

constexpr Natural kRandomClosedForm = 1000;

Section closed_forms(const VerifyOptions& o) {
  const Natural max_n2 = bound_p(o, 13);
  const Natural max_n3 = bound_p(o, 7);
  const Natural max_m = bound_m(o, 3);
  Section s;
  s.grid = {{"m2_n", {2, max_n2}}, {"m3_n", {2, max_n3}}, {"random_per_m", kRandomClosedForm}};
  auto exhaustive = [](const RingParams& params) {
    return [params] {
      detail::TaskResult res;
      const Natural size = *ring::ring_size(params);
      for (Natural i = 0; i < size; ++i) {
        const auto a = RingElement::from_index(params, i);
        const Natural det = ring::unital_det(a).value();
        const Natural expect = closed_form(a);
        if (!res.check(det == expect))
          res.fail(with(ring_point(params), "a", coeffs_of(a)), expect, det);
      }
      return res;
    };
  };
  for (Natural m = 2; m <= std::min<Natural>(3, max_m); ++m) {
    for (const auto& params :
         ring_grid(m == 2 ? max_n2 : max_n3, m, o.limits.enumeration, false, o.limits)) {
      if (params.m == m) s.add(ring_point(params), exhaustive(params));
    }
    // Larger moduli, up to 2^62, where the exact determinant no longer fits 128 bits.
    constexpr Natural kBatch = 100;
    for (Natural batch = 0; batch < kRandomClosedForm / kBatch; ++batch) {
      const Natural seed = o.seed;
      const Limits limits = o.limits;
      s.add({{"m", m}, {"random_batch", batch}}, [seed, m, batch, limits] {
        detail::TaskResult res;
        auto rng = rng_for(seed, {m, batch, 0xdead});
        for (Natural t = 0; t < kBatch; ++t) {
          const Natural top = t % 2 == 0 ? (Natural{1} << 31) : (Natural{1} << 62);
          const Natural n = uniform(rng, 2, top);
          const auto params =
              ring::make_params(static_cast<std::int64_t>(n), static_cast<std::int64_t>(m),
                                static_cast<std::int64_t>(uniform(rng, 0, n - 1)), limits);
          std::vector<Natural> cs(m);
          for (auto& c : cs) c = uniform(rng, 0, n - 1);
          const RingElement a(params, cs);
          const Natural det = ring::unital_det(a).value();
          const Natural expect = closed_form(a);
          if (!res.check(det == expect)) res.fail(with(ring_point(params), "a", cs), expect, det);
        }
        return res;
      });
    }
  }
  return s;
}

Section multiplicativity(const VerifyOptions& o) {
  const Natural max_n = bound_p(o, 8);
  const Natural max_m = bound_m(o, 4);
  constexpr Natural kMaxSize = 256;
  Section s;
  s.grid = {
      {"n", {2, max_n}}, {"m", {1, max_m}}, {"r", "all"}, {"max_size", kMaxSize}, {"pairs", "all"}};
  for (const auto& params : ring_grid(max_n, max_m, kMaxSize, false, o.limits)) {
    s.add(ring_point(params), [params] {
      detail::TaskResult res;
      const Natural size = *ring::ring_size(params);
      std::vector<RingElement> el;
      std::vector<ring::UnitalMatrix> mat;
      std::vector<Natural> det;
      for (Natural i = 0; i < size; ++i) {
        el.push_back(RingElement::from_index(params, i));
        mat.push_back(ring::unital_matrix(el.back()));
        det.push_back(ring::unital_det(el.back()).value());
      }
      for (Natural i = 0; i < size; ++i) {
        for (Natural j = i; j < size; ++j) {
          const auto ab = el[i] * el[j];
          const json point =
              with(with(ring_point(params), "a", coeffs_of(el[i])), "b", coeffs_of(el[j]));
          const auto prod = ring::matrix_product(mat[i], mat[j]);
          if (!res.check(prod == ring::unital_matrix(ab)))
            res.fail(with(point, "check", "matrix"),
                     std::vector<Natural>(prod.entries().begin(), prod.entries().end()),
                     coeffs_of(ab));
          const Natural expect = numth::mul_mod(det[i], det[j], params.n);
          const Natural got = ring::unital_det(ab).value();
          if (!res.check(got == expect)) res.fail(with(point, "check", "det"), expect, got);
        }
      }
      return res;
    });
  }
  return s;
}

Section crt(const VerifyOptions& o) {
  const Natural max_n = bound_p(o, 36);
  const Natural max_m = bound_m(o, 3);
  Section s;
  s.grid = {{"n", {4, max_n}},
            {"n_kind", "composite"},
            {"m", {1, max_m}},
            {"r", "all"},
            {"elements", "all, or 2000 sampled above that"}};
  for (const auto& params : ring_grid(max_n, max_m, o.limits.enumeration, true, o.limits)) {
    const Natural seed = o.seed;
    s.add(ring_point(params), [params, seed] {
      detail::TaskResult res;
      const Natural size = *ring::ring_size(params);
      const auto parts = numth::crt_split(params.n);
      auto rng = rng_for(seed, {params.n, params.m, params.r, 7});
      const Natural count = std::min(size, kCrtSample);
      for (Natural t = 0; t < count; ++t) {
        const Natural idx = size <= kCrtSample ? t : uniform(rng, 0, size - 1);
        const auto a = RingElement::from_index(params, idx);
        const bool whole = ring::is_unit(a);
        bool local = true;
        for (Natural q : parts) local = local && ring::is_unit(ring::project(a, q));
        if (!res.check(whole == local))
          res.fail(with(with(ring_point(params), "a", coeffs_of(a)), "parts", parts), local, whole);
      }
      return res;
    });
  }
  return s;
}

// field-criterion ----------------------------------------------------------------

Section field_verdict(const VerifyOptions& o) {
  const Natural max_n = bound_p(o, 13);
  const Natural max_m = bound_m(o, 3);
  Section s;
  s.grid = {{"n", {2, max_n}},
            {"m", {1, max_m}},
            {"r", "all"},
            {"domain_check", "exhaustive zero-divisor search"}};
  for (const auto& params : ring_grid(max_n, max_m, o.limits.enumeration, false, o.limits)) {
    const Natural seed = o.seed;
    const Limits limits = o.limits;
    s.add(ring_point(params), [params, seed, limits] {
      detail::TaskResult res;
      const json point = ring_point(params);
      const auto verdict = structure::is_field(params.n, params.m,
                                               static_cast<std::int64_t>(params.r), seed, limits);
      const Brute br(params);
      const auto zd = br.zero_divisor_pair();
      json actual = {{"is_field", verdict.is_field}};
      json expected = {{"domain", !zd.has_value()}};
      if (zd) expected["pair"] = {br.coeffs(zd->first), br.coeffs(zd->second)};
      if (!res.check(verdict.is_field == !zd.has_value())) res.fail(point, expected, actual);
      if (!res.check(verdict.is_domain == verdict.is_field))
        res.fail(with(point, "check", "domain flag"), verdict.is_field, verdict.is_domain);

      if (!numth::is_prime(params.n)) {
        if (!res.check(verdict.has_reason(structure::ReasonCode::kCompositeN)))
          res.fail(with(point, "check", "reason"), "COMPOSITE_N", verdict.reasons);
        return res;
      }
      if (params.m >= 2 && params.m <= 3) {
        if (!res.check(verdict.has_reason(structure::ReasonCode::kRootCriterion)))
          res.fail(with(point, "check", "reason"), "ROOT_CRITERION", verdict.reasons);
      }
      if (verdict.is_field) return res;

      // A proper factor f of x^m - r gives f(s) g(s) = 0 with both sides nonzero.
      const auto spec = FieldSpec::prime(params.n);
      const auto binomial = Poly::binomial(params.m, FqElement::from_index(spec, params.r));
      const auto f = factor::factor_monic(binomial, seed).factors.front().poly;
      const auto [g, rem] = factor::poly_divmod(binomial, f);
      auto as_element = [&](const Poly& h) {
        std::vector<Natural> cs(params.m, 0);
        for (std::size_t i = 0; i < h.coeffs().size(); ++i) cs[i] = h.coeffs()[i].index();
        return RingElement(params, cs);
      };
      const bool proper =
          rem.is_zero() && f.degree() >= 1 && static_cast<Natural>(f.degree()) < params.m;
      if (!res.check(proper))
        res.fail(with(point, "check", "proper factor"), "1 <= deg f < m", f.to_string());
      if (proper) {
        const auto fa = as_element(f);
        const auto ga = as_element(g);
        const auto prod = fa * ga;
        if (!res.check(!fa.is_zero() && !ga.is_zero() && prod.is_zero()))
          res.fail(with(with(point, "check", "factor product"), "f", f.to_string()), "0",
                   coeffs_of(prod));
      }
      return res;
    });
  }
  return s;
}

Section domain_units(const VerifyOptions& o) {
  const Natural max_n = bound_p(o, 16);
  const Natural max_m = bound_m(o, 12);
  constexpr Natural kPairwiseSize = 625;
  Section s;
  s.grid = {{"n", {2, max_n}},
            {"m", {1, max_m}},
            {"r", "all"},
            {"max_size", kAxiomRingSize},
            {"pairwise_up_to", kPairwiseSize}};
  for (const auto& params : ring_grid(max_n, max_m, kAxiomRingSize, false, o.limits)) {
    const Limits limits = o.limits;
    const bool pairwise = *ring::ring_size(params) <= kPairwiseSize;
    s.add(ring_point(params), [params, limits, pairwise] {
      detail::TaskResult res;
      const Brute br(params);
      const json point = ring_point(params);
      bool domain = true;
      Natural units = 0;
      if (pairwise) {
        domain = !br.zero_divisor_pair().has_value();
        for (Natural a = 1; a < br.size(); ++a) units += br.has_inverse(a) ? 1 : 0;
      } else {
        // Every nonzero a gets a certificate: an inverse checked by table
        // multiplication, or a nonzero annihilator found by scanning.
        for (Natural a = 1; a < br.size(); ++a) {
          const ring::RingElement el(params, br.coeffs(a));
          if (ring::is_unit(el)) {
            const Natural inv = br.index_of(ring::inverse(el).coeffs());
            if (!res.check(br.product_is_one(a, inv)))
              res.fail(with(point, "a", br.coeffs(a)), "a * inverse(a) = 1", br.coeffs(inv));
            ++units;
          } else {
            const auto b = br.annihilator(a);
            if (!res.check(b.has_value()))
              res.fail(with(point, "a", br.coeffs(a)), "nonzero annihilator", nullptr);
            domain = false;
          }
        }
      }
      const bool all_units = units + 1 == br.size();
      if (!res.check(domain == all_units))
        res.fail(point, json{{"domain", domain}}, json{{"all_nonzero_units", all_units}});
      const Natural counted = ring::unit_count(params, limits);
      if (!res.check(counted == units))
        res.fail(with(point, "check", "unit_count"), units, counted);
      return res;
    });
  }
  return s;
}

// power-map ----------------------------------------------------------------------

Section onto_gcd(const VerifyOptions& o) {
  const Natural max_p = bound_p(o, 101);
  const Natural max_m = o.max_m.value_or(10);
  Section s;
  s.grid = {{"p", {2, max_p}}, {"m", {1, max_m}}};
  for (Natural p : primes_up_to(max_p)) {
    const Limits limits = o.limits;
    s.add({{"p", p}}, [p, max_m, limits] {
      detail::TaskResult res;
      const auto spec = FieldSpec::prime(p);
      for (Natural m = 1; m <= max_m; ++m) {
        const bool onto = structure::power_map_onto(p, m);
        const Natural image = structure::power_map_image(spec, m, limits).size();
        if (!res.check(onto == (image == p)))
          res.fail({{"p", p}, {"m", m}}, json{{"image_size", image}}, json{{"onto", onto}});
      }
      return res;
    });
  }
  return s;
}

Section linear_factor(const VerifyOptions& o) {
  const Natural max_q = bound_p(o, 49);
  const Natural max_m = o.max_m.value_or(6);
  Section s;
  s.grid = {{"q", {2, max_q}}, {"m", {1, max_m}}, {"r", "nonzero"}};
  for (const auto& pq : prime_powers_up_to(max_q)) {
    for (Natural m = 1; m <= max_m; ++m) {
      const Natural seed = o.seed;
      const Limits limits = o.limits;
      s.add({{"q", pq.q}, {"m", m}}, [pq, m, seed, limits] {
        detail::TaskResult res;
        const auto spec = FieldSpec::galois(pq.p, pq.k, seed);
        for (const auto& r : gfq::enumerate(spec, limits)) {
          if (r.is_zero()) continue;
          const auto root = structure::has_linear_factor(spec, m, r, limits);
          const auto rep = factor::factor_monic(Poly::binomial(m, r), seed);
          const bool linear =
              std::any_of(rep.factors.begin(), rep.factors.end(),
                          [](const factor::Factor& f) { return f.poly.degree() == 1; });
          if (!res.check(root.has_value() == linear))
            res.fail({{"q", pq.q}, {"m", m}, {"r", r.index()}},
                     json{{"linear_factor", linear}, {"factors", factor_degrees(rep)}},
                     json{{"root", root ? json(root->index()) : json(nullptr)}});
        }
        return res;
      });
    }
  }
  return s;
}

Section root_criterion(const VerifyOptions& o) {
  const Natural max_p = bound_p(o, 31);
  const Natural max_m = std::min<Natural>(3, o.max_m.value_or(3));
  Section s;
  s.grid = {{"p", {2, max_p}}, {"m", {2, max_m}}, {"r", "all"}};
  for (Natural p : primes_up_to(max_p)) {
    for (Natural m = 2; m <= max_m; ++m) {
      const Natural seed = o.seed;
      const Limits limits = o.limits;
      s.add({{"p", p}, {"m", m}}, [p, m, seed, limits] {
        detail::TaskResult res;
        const auto spec = FieldSpec::prime(p);
        std::set<Natural> image;
        for (const auto& x : structure::power_map_image(spec, m, limits)) image.insert(x.index());
        for (const auto& r : gfq::enumerate(spec, limits)) {
          const auto rep = factor::factor_monic(Poly::binomial(m, r), seed);
          const bool reducible = rep.factor_count() > 1;
          const bool in_image = image.count(r.index()) > 0;
          const json point = {{"p", p}, {"m", m}, {"r", r.index()}};
          if (!res.check(reducible == in_image))
            res.fail(point, json{{"in_image", in_image}},
                     json{{"reducible", reducible}, {"factors", factor_degrees(rep)}});
          const bool kth = structure::is_kth_power(r, m);
          if (!res.check(kth == in_image))
            res.fail(with(point, "check", "is_kth_power"), in_image, kth);
        }
        return res;
      });
    }
  }
  return s;
}

Section cubic_form(const VerifyOptions& o) {
  std::vector<Natural> primes{5, 7, 11, 13};
  if (o.max_p) {
    primes.clear();
    for (Natural p : primes_up_to(*o.max_p)) {
      if (p >= 5) primes.push_back(p);
    }
  }
  Section s;
  s.grid = {{"p", primes}, {"r", "all"}};
  for (Natural p : primes) {
    const Limits limits = o.limits;
    s.add({{"p", p}}, [p, limits] {
      detail::TaskResult res;
      const auto spec = FieldSpec::prime(p);
      std::set<Natural> cubes;
      for (const auto& x : structure::power_map_image(spec, 3, limits)) cubes.insert(x.index());
      for (Natural r = 0; r < p; ++r) {
        const auto w = structure::cubic_form_has_nontrivial_zero(p, r, limits);
        const bool cube = cubes.count(r) > 0;
        const json point = {{"p", p}, {"r", r}};
        if (!res.check(w.has_value() == cube))
          res.fail(point, json{{"cube", cube}}, json{{"witness", w ? json(*w) : json(nullptr)}});
        if (!w) continue;
        const auto params = ring::make_params(static_cast<std::int64_t>(p), 3,
                                              static_cast<std::int64_t>(r), limits);
        const RingElement a(params, {(*w)[0], (*w)[1], (*w)[2]});
        const Natural form = structure::cubic_form(p, r, *w);
        const Natural det = ring::unital_det(a).value();
        if (!res.check(form == 0 && det == 0))
          res.fail(with(point, "witness", *w), json{{"form", 0}, {"det", 0}},
                   json{{"form", form}, {"det", det}});
      }
      return res;
    });
  }
  return s;
}

Section quadratic_count(const VerifyOptions& o) {
  const Natural max_p = bound_p(o, 101);
  Section s;
  s.grid = {{"p", {3, max_p}}, {"m", 2}, {"a", "nonzero"}};
  for (Natural p : primes_up_to(max_p)) {
    if (p == 2) continue;
    const Natural seed = o.seed;
    const Limits limits = o.limits;
    s.add({{"p", p}}, [p, seed, limits] {
      detail::TaskResult res;
      Natural fields = 0;
      for (Natural a = 1; a < p; ++a) {
        fields += structure::is_field(p, 2, static_cast<std::int64_t>(a), seed, limits).is_field;
      }
      if (!res.check(fields == (p - 1) / 2 && fields > 0))
        res.fail({{"p", p}}, (p - 1) / 2, fields);
      return res;
    });
  }
  return s;
}

// pythagorean --------------------------------------------------------------------

Section pythagorean(const VerifyOptions& o) {
  const Natural max_p = bound_p(o, 100);
  constexpr Natural kExhaustive = 13;
  Section s;
  s.grid = {{"p", {2, max_p}}, {"exhaustive_p", {2, kExhaustive}}};
  for (Natural p : primes_up_to(max_p)) {
    const Natural seed = o.seed;
    const Limits limits = o.limits;
    s.add({{"p", p}}, [p, seed, limits] {
      detail::TaskResult res;
      const bool expect = p % 4 == 3;
      const auto cls = structure::pythagorean_class(p);
      if (!res.check(cls.zp_i_is_field == expect)) res.fail({{"p", p}}, expect, cls.zp_i_is_field);
      if (!res.check(cls.is_pythagorean == !expect))
        res.fail({{"p", p}, {"check", "is_pythagorean"}}, !expect, cls.is_pythagorean);
      const auto verdict = structure::is_field(p, 2, -1, seed, limits);
      if (!res.check(verdict.is_field == expect))
        res.fail({{"p", p}, {"check", "is_field"}}, expect, verdict.is_field);
      if (p <= kExhaustive) {
        const Brute br(ring::make_params(static_cast<std::int64_t>(p), 2, -1, limits));
        const bool domain = !br.zero_divisor_pair().has_value();
        if (!res.check(domain == expect))
          res.fail({{"p", p}, {"check", "zero-divisor search"}}, expect, domain);
      }
      return res;
    });
  }
  return s;
}

// splitting ------------------------------------------------------------------------

struct SplitPoint {
  PrimePowerQ field;
  Natural m;
};

std::vector<SplitPoint> split_grid(Natural max_q, Natural max_m, bool with_extensions) {
  std::vector<SplitPoint> out;
  for (const auto& pq : prime_powers_up_to(max_q)) {
    if (pq.k > 1 && !with_extensions) continue;
    for (Natural m = 2; m <= max_m; ++m) {
      if ((pq.q - 1) % m == 0) out.push_back({pq, m});
    }
  }
  return out;
}

Section splitting_type(const VerifyOptions& o) {
  const Natural max_q = bound_p(o, 31);
  const Natural max_m = o.max_m.value_or(6);
  Section s;
  s.grid = {{"q", {2, max_q}},
            {"m", "1 < m <= " + std::to_string(max_m) + ", m | q-1"},
            {"r", "nonzero"}};
  for (const auto& [pq, m] : split_grid(max_q, max_m, true)) {
    const Natural seed = o.seed;
    const Limits limits = o.limits;
    s.add({{"q", pq.q}, {"m", m}}, [pq, m, seed, limits] {
      detail::TaskResult res;
      const auto spec = FieldSpec::galois(pq.p, pq.k, seed);
      for (const auto& r : gfq::enumerate(spec, limits)) {
        if (r.is_zero()) continue;
        const auto st = structure::splitting_type(spec, m, r);
        const auto rep = factor::factor_monic(Poly::binomial(m, r), seed);
        const bool ok =
            rep.factors.size() == st.factor_count && st.factor_count * st.t == m &&
            std::all_of(rep.factors.begin(), rep.factors.end(), [&](const factor::Factor& f) {
              return f.multiplicity == 1 && static_cast<Natural>(f.poly.degree()) == st.t;
            });
        if (!res.check(ok))
          res.fail({{"q", pq.q}, {"m", m}, {"r", r.index()}},
                   json{{"t", st.t}, {"factor_count", st.factor_count}}, factor_degrees(rep));
      }
      return res;
    });
  }
  const Natural seed = o.seed;
  s.add({{"fixture", "p=7 m=3 r=2"}}, [seed] {
    detail::TaskResult res;
    const auto spec = FieldSpec::prime(7);
    const auto rep =
        factor::factor_monic(Poly::binomial(3, FqElement::from_integer(spec, 2)), seed);
    if (!res.check(rep.factors.size() == 1 && rep.factors[0].poly.degree() == 3))
      res.fail({{"fixture", "p=7 m=3 r=2"}}, "irreducible", factor_degrees(rep));
    return res;
  });
  s.add({{"fixture", "p=13 m=3 r=5"}}, [] {
    detail::TaskResult res;
    const auto spec = FieldSpec::prime(13);
    std::vector<Natural> got;
    for (const auto& x : factor::roots(Poly::binomial(3, FqElement::from_integer(spec, 5)))) {
      got.push_back(x.index());
    }
    const std::vector<Natural> expect{7, 8, 11};
    if (!res.check(got == expect)) res.fail({{"fixture", "p=13 m=3 r=5"}}, expect, got);
    return res;
  });
  return s;
}

Section irreducibility_criterion(const VerifyOptions& o) {
  const Natural max_q = bound_p(o, 31);
  const Natural max_m = o.max_m.value_or(6);
  Section s;
  s.grid = {{"q", {2, max_q}},
            {"m", "1 < m <= " + std::to_string(max_m) + ", m | q-1"},
            {"r", "nonzero"}};
  for (const auto& [pq, m] : split_grid(max_q, max_m, true)) {
    const Natural seed = o.seed;
    const Limits limits = o.limits;
    s.add({{"q", pq.q}, {"m", m}}, [pq, m, seed, limits] {
      detail::TaskResult res;
      const auto spec = FieldSpec::galois(pq.p, pq.k, seed);
      for (const auto& r : gfq::enumerate(spec, limits)) {
        if (r.is_zero()) continue;
        const bool criterion = structure::irreducible_binomial(spec, m, r);
        const bool irreducible = factor::is_irreducible(Poly::binomial(m, r), limits);
        if (!res.check(criterion == irreducible))
          res.fail({{"q", pq.q}, {"m", m}, {"r", r.index()}}, irreducible, criterion);
      }
      return res;
    });
  }
  return s;
}

Section unit_counts(const VerifyOptions& o) {
  const Natural max_p = bound_p(o, 31);
  const Natural max_m = o.max_m.value_or(6);
  Section s;
  s.grid = {{"p", {2, max_p}},
            {"m", "1 < m <= " + std::to_string(max_m) + ", m | p-1"},
            {"r", "nonzero"},
            {"max_size", o.limits.enumeration}};
  for (const auto& [pq, m] : split_grid(max_p, max_m, false)) {
    const auto size = numth::checked_pow(pq.p, m);
    if (!size || *size > o.limits.enumeration || m > o.limits.max_m) continue;
    for (Natural r = 1; r < pq.p; ++r) {
      const Natural p = pq.p;
      const Limits limits = o.limits;
      s.add({{"p", p}, {"m", m}, {"r", r}}, [p, m, r, limits] {
        detail::TaskResult res;
        const auto spec = FieldSpec::prime(p);
        const auto d =
            structure::ring_decomposition(spec, m, FqElement::from_index(spec, r), limits);
        const Natural formula = *numth::checked_pow(*numth::checked_pow(p, d.t) - 1, m / d.t);
        if (!res.check(d.unit_count_enumerated.has_value() && *d.unit_count_enumerated == formula &&
                       d.unit_count_prediction == formula))
          res.fail({{"p", p}, {"m", m}, {"r", r}}, formula,
                   d.unit_count_enumerated ? json(*d.unit_count_enumerated) : json(nullptr));
        return res;
      });
    }
  }
  s.add({{"fixture", "p=13 m=3 r=5"}}, [limits = o.limits] {
    detail::TaskResult res;
    const auto params = ring::make_params(13, 3, 5, limits);
    const Natural got = ring::unit_count(params, limits);
    if (!res.check(got == 1728)) res.fail({{"fixture", "p=13 m=3 r=5"}}, 1728, got);
    return res;
  });
  return s;
}

// counting -------------------------------------------------------------------------

Section counting(const VerifyOptions& o) {
  const Natural max_p = bound_p(o, 31);
  const Natural max_m = o.max_m.value_or(6);
  Section s;
  s.grid = {{"p", {2, max_p}},
            {"m", "1 < m <= " + std::to_string(max_m) + ", m | p-1"},
            {"extra", "F_9 with m in {2, 4, 8}"}};
  auto task = [&o](PrimePowerQ pq, Natural m, std::optional<Natural> fixture) {
    return [pq, m, fixture, seed = o.seed, limits = o.limits] {
      detail::TaskResult res;
      const auto spec = FieldSpec::galois(pq.p, pq.k, seed);
      const auto c = structure::count_irreducible(spec, m, limits);
      const json point = {{"q", pq.q}, {"m", m}};
      if (!res.check(c.enumerated.has_value() && *c.enumerated == c.predicted))
        res.fail(point, c.predicted, c.enumerated ? json(*c.enumerated) : json(nullptr));
      if (fixture && !res.check(c.predicted == *fixture))
        res.fail(with(point, "check", "fixture"), *fixture, c.predicted);
      return res;
    };
  };
  for (const auto& [pq, m] : split_grid(max_p, max_m, false)) {
    s.add({{"q", pq.q}, {"m", m}}, task(pq, m, std::nullopt));
  }
  if (!o.max_p || *o.max_p >= 9) {
    for (Natural m : {2, 4, 8}) {
      if (!o.max_m || m <= *o.max_m) s.add({{"q", 9}, {"m", m}}, task({3, 2, 9}, m, std::nullopt));
    }
  }
  s.add({{"fixture", "q=13 m=3"}}, task({13, 1, 13}, 3, 8));
  s.add({{"fixture", "q=13 m=2"}}, task({13, 1, 13}, 2, (13 - 1) / 2));
  s.add({{"fixture", "q=7 m=3"}}, task({7, 1, 7}, 3, 4));
  return s;
}

Section squarefree(const VerifyOptions& o) {
  const Natural max_p = bound_p(o, 31);
  const Natural max_m = o.max_m.value_or(10);
  Section s;
  s.grid = {{"p", {2, max_p}},
            {"m", "squarefree 2 <= m <= " + std::to_string(max_m) + ", m does not divide p-1"},
            {"r", "nonzero"}};
  for (Natural p : primes_up_to(max_p)) {
    for (Natural m = 2; m <= max_m; ++m) {
      if (!numth::is_squarefree(m) || (p - 1) % m == 0) continue;
      s.add({{"p", p}, {"m", m}}, [p, m] {
        detail::TaskResult res;
        const auto spec = FieldSpec::prime(p);
        for (Natural r = 1; r < p; ++r) {
          const auto rr = FqElement::from_index(spec, r);
          const auto cert = structure::squarefree_reducible(spec, m, rr);
          const auto big = Poly::binomial(m, rr);
          const auto small = Poly::binomial(m / cert.d, cert.b);
          const bool ok = numth::is_prime(cert.d) && m % cert.d == 0 && (p - 1) % cert.d != 0 &&
                          gfq::ff_pow(cert.b, cert.d) == rr &&
                          factor::poly_mod(big, small).is_zero();
          if (!res.check(ok))
            res.fail({{"p", p}, {"m", m}, {"r", r}}, "x^(m/d) - b divides x^m - r",
                     json{{"d", cert.d}, {"b", cert.b.index()}});
        }
        return res;
      });
    }
  }
  s.add({{"fixture", "p=5 m=3 r=2"}}, [] {
    detail::TaskResult res;
    const auto spec = FieldSpec::prime(5);
    const auto cert = structure::squarefree_reducible(spec, 3, FqElement::from_integer(spec, 2));
    const std::vector<Natural> got{cert.d, cert.b.index()};
    const std::vector<Natural> expect{3, 3};
    if (!res.check(got == expect)) res.fail({{"fixture", "p=5 m=3 r=2"}}, expect, got);
    return res;
  });
  return s;
}

// oracle-agreement -----------------------------------------------------------------

Section oracle_agreement(const VerifyOptions& o) {
  const Natural max_q = bound_p(o, 13);
  const Natural max_m = o.max_m.value_or(6);
  Section s;
  s.grid = {{"q", {2, max_q}}, {"m", {1, max_m}}, {"r", "all"}};
  for (const auto& pq : prime_powers_up_to(max_q)) {
    for (Natural m = 1; m <= max_m; ++m) {
      const Natural seed = o.seed;
      const Limits limits = o.limits;
      s.add({{"q", pq.q}, {"m", m}}, [pq, m, seed, limits] {
        detail::TaskResult res;
        const auto spec = FieldSpec::galois(pq.p, pq.k, seed);
        for (const auto& r : gfq::enumerate(spec, limits)) {
          const auto f = Poly::binomial(m, r);
          const auto fast = factor::factor_monic(f, seed);
          const auto other = factor::factor_monic(f, seed + 0x9e3779b97f4a7c15ULL);
          const auto brute = factor::brute_force_factor(f, limits);
          const json point = {{"q", pq.q}, {"m", m}, {"r", r.index()}};
          if (!res.check(fast.factors == brute.factors)) res.fail(point, json(brute), json(fast));
          if (!res.check(fast.factors == other.factors))
            res.fail(with(point, "check", "seed independence"), json(fast), json(other));
          if (!res.check(fast.reconstructs_input() && brute.reconstructs_input()))
            res.fail(
                with(point, "check", "product"), f.to_string(),
                json{{"fast", fast.product().to_string()}, {"brute", brute.product().to_string()}});
        }
        return res;
      });
    }
  }
  return s;
}

// --- registry ---------------------------------------------------------------------

struct SectionEntry {
  const char* suite;
  const char* section;
  Builder build;
};

const std::vector<SectionEntry>& registry() {
  static const std::vector<SectionEntry> entries{
      {"ring-axioms", "axioms", axioms},
      {"determinant", "unit-criterion", unit_criterion},
      {"determinant", "closed-forms", closed_forms},
      {"determinant", "multiplicativity", multiplicativity},
      {"determinant", "crt", crt},
      {"field-criterion", "field-verdict", field_verdict},
      {"field-criterion", "domain-units", domain_units},
      {"power-map", "onto-gcd", onto_gcd},
      {"power-map", "linear-factor", linear_factor},
      {"power-map", "root-criterion", root_criterion},
      {"power-map", "cubic-form", cubic_form},
      {"power-map", "quadratic-count", quadratic_count},
      {"pythagorean", "pythagorean", pythagorean},
      {"splitting", "splitting-type", splitting_type},
      {"splitting", "irreducibility-criterion", irreducibility_criterion},
      {"splitting", "unit-counts", unit_counts},
      {"counting", "counting", counting},
      {"counting", "squarefree", squarefree},
      {"oracle-agreement", "oracle-agreement", oracle_agreement},
  };
  return entries;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"ring-axioms", "determinant",      "field-criterion",
                                              "power-map",   "pythagorean",      "splitting",
                                              "counting",    "oracle-agreement", "all"};
  return names;
}

std::vector<std::string> section_names(const std::string& suite) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
    throw std::invalid_argument("unknown verify suite '" + suite + "'");
  }
  std::vector<std::string> out;
  for (const auto& e : registry()) {
    if (suite == "all" || suite == e.suite) out.push_back(e.section);
  }
  return out;
}

VerifyReport run_section(const std::string& suite, const std::string& section,
                         const VerifyOptions& opts) {
  for (const auto& e : registry()) {
    if (suite != e.suite || section != e.section) continue;
    const Section s = e.build(opts);
    VerifyReport report{suite, section, s.grid, s.tasks.size(), 0, {}};
    for (auto& r : detail::run_tasks(s.tasks, opts.workers, s.points)) {
      report.checked += r.checked;
      for (auto& f : r.failures) report.failures.push_back(std::move(f));
    }
    return report;
  }
  throw std::invalid_argument("unknown verify section '" + suite + "/" + section + "'");
}

std::vector<VerifyReport> run_suite(const std::string& suite, const VerifyOptions& opts) {
  (void)section_names(suite);
  std::vector<VerifyReport> out;
  for (const auto& e : registry()) {
    if (suite == "all" || suite == e.suite) out.push_back(run_section(e.suite, e.section, opts));
  }
  return out;
}

namespace detail {

std::vector<TaskResult> run_tasks(const std::vector<Task>& tasks, unsigned workers,
                                  const std::vector<json>& points) {
  std::vector<TaskResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        results[i] = tasks[i]();
      } catch (const std::exception& e) {
        results[i] = {};
        results[i].check(false);
        results[i].fail(i < points.size() ? points[i] : json(i), "no exception",
                        json{{"exception", e.what()}});
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(workers, tasks.size()));
  if (n == 1) {
    work();
    return results;
  }
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < n; ++i) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace detail

void to_json(json& j, const Failure& f) {
  j = json{{"point", f.point}, {"expected", f.expected}, {"actual", f.actual}};
}

void from_json(const json& j, Failure& f) {
  f.point = j.at("point");
  f.expected = j.at("expected");
  f.actual = j.at("actual");
}

void to_json(json& j, const VerifyReport& r) {
  j = json{{"suite", r.suite},   {"section", r.section}, {"grid", r.grid},
           {"points", r.points}, {"checked", r.checked}, {"failures", r.failures}};
}

void from_json(const json& j, VerifyReport& r) {
  j.at("suite").get_to(r.suite);
  j.at("section").get_to(r.section);
  r.grid = j.at("grid");
  j.at("points").get_to(r.points);
  j.at("checked").get_to(r.checked);
  j.at("failures").get_to(r.failures);
}

}  // namespace radring::cli
