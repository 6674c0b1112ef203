#include "radring/factor.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <stdexcept>
#include <utility>

#include "radring/errors.hpp"

namespace radring::factor {

using gfq::ff_inv;
using gfq::ff_mul;

// --- Poly -------------------------------------------------------------------

Poly::Poly(FieldSpec spec) : spec_(std::move(spec)) {}

Poly::Poly(FieldSpec spec, std::vector<FqElement> coeffs)
    : spec_(std::move(spec)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (!(c.spec() == spec_)) throw DomainError("polynomial coefficient from a different field");
  }
  trim();
}

Poly Poly::from_integers(const FieldSpec& spec, const std::vector<std::int64_t>& coeffs) {
  std::vector<FqElement> cs;
  cs.reserve(coeffs.size());
  for (auto c : coeffs) cs.push_back(FqElement::from_integer(spec, c));
  return Poly(spec, std::move(cs));
}

Poly Poly::constant(const FqElement& c) { return Poly(c.spec(), {c}); }

Poly Poly::x(const FieldSpec& spec) { return Poly(spec, {gfq::zero(spec), gfq::one(spec)}); }

Poly Poly::binomial(Natural m, const FqElement& r) {
  if (m == 0) throw DomainError("binomial x^m - r needs m >= 1");
  const auto& spec = r.spec();
  std::vector<FqElement> cs(m + 1, gfq::zero(spec));
  cs[0] = gfq::ff_neg(r);
  cs[m] = gfq::one(spec);
  return Poly(spec, std::move(cs));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const FqElement& Poly::leading() const {
  if (coeffs_.empty()) throw DomainError("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

FqElement Poly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : gfq::zero(spec_);
}

FqElement Poly::evaluate(const FqElement& at) const {
  FqElement acc = gfq::zero(spec_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) throw DomainError("zero polynomial cannot be made monic");
  if (leading().is_one()) return *this;
  return poly_scale(*this, ff_inv(leading()));
}

Poly Poly::derivative() const {
  std::vector<FqElement> cs;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    cs.push_back(FqElement::from_integer(spec_, static_cast<std::int64_t>(i % spec_.p())) *
                 coeffs_[i]);
  }
  return Poly(spec_, std::move(cs));
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const auto& c = coeffs_[i];
    if (c.is_zero()) continue;
    if (!out.empty()) out += "+";
    std::string cs = c.to_string();
    if (!c.is_prime_subfield()) cs = "(" + cs + ")";
    if (i == 0) {
      out += cs;
      continue;
    }
    if (!c.is_one()) out += cs;
    out += "x";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

namespace {

std::int64_t parse_integer(std::string_view text, const std::string& whole) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw DomainError("cannot parse polynomial '" + whole + "'");
  }
  return v;
}

}  // namespace

Poly parse_poly(const FieldSpec& spec, const std::string& text) {
  std::string t;
  for (char c : text) {
    if (c != ' ') t += c;
  }
  if (t.empty()) throw DomainError("empty polynomial");
  if (t.find('x') == std::string::npos) {
    std::vector<std::int64_t> cs;
    std::size_t start = 0;
    while (true) {
      const auto comma = t.find(',', start);
      cs.push_back(parse_integer(std::string_view(t).substr(start, comma - start), text));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return Poly::from_integers(spec, cs);
  }
  if (t.front() != 'x') throw DomainError("cannot parse polynomial '" + text + "'");
  std::size_t pos = 1;
  std::int64_t m = 1;
  if (pos < t.size() && t[pos] == '^') {
    const auto end = t.find_first_of("+-", pos + 1);
    m = parse_integer(std::string_view(t).substr(pos + 1, end - pos - 1), text);
    pos = end == std::string::npos ? t.size() : end;
  }
  if (m < 1) throw DomainError("binomial degree must be >= 1 in '" + text + "'");
  // x^m + c means r = -c.
  const std::int64_t c = pos < t.size() ? parse_integer(std::string_view(t).substr(pos), text) : 0;
  return Poly::binomial(static_cast<Natural>(m), gfq::ff_neg(FqElement::from_integer(spec, c)));
}

bool canonical_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  for (std::size_t i = 0; i < ca.size(); ++i) {
    const Natural ia = ca[i].index();
    const Natural ib = cb[i].index();
    if (ia != ib) return ia < ib;
  }
  return false;
}

// --- arithmetic -------------------------------------------------------------

namespace {

void require_same_field(const Poly& f, const Poly& g) {
  if (!(f.spec() == g.spec())) {
    throw DomainError("polynomials over different fields: " + f.spec().name() + " vs " +
                      g.spec().name());
  }
}

}  // namespace

Poly poly_add(const Poly& f, const Poly& g) {
  require_same_field(f, g);
  const std::size_t n = std::max(f.coeffs().size(), g.coeffs().size());
  std::vector<FqElement> cs;
  cs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) cs.push_back(f.coeff(i) + g.coeff(i));
  return Poly(f.spec(), std::move(cs));
}

Poly poly_sub(const Poly& f, const Poly& g) {
  require_same_field(f, g);
  const std::size_t n = std::max(f.coeffs().size(), g.coeffs().size());
  std::vector<FqElement> cs;
  cs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) cs.push_back(f.coeff(i) - g.coeff(i));
  return Poly(f.spec(), std::move(cs));
}

Poly poly_mul(const Poly& f, const Poly& g) {
  require_same_field(f, g);
  if (f.is_zero() || g.is_zero()) return Poly(f.spec());
  const auto& a = f.coeffs();
  const auto& b = g.coeffs();
  std::vector<FqElement> cs(a.size() + b.size() - 1, gfq::zero(f.spec()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) cs[i + j] = cs[i + j] + a[i] * b[j];
  }
  return Poly(f.spec(), std::move(cs));
}

Poly poly_scale(const Poly& f, const FqElement& c) {
  std::vector<FqElement> cs;
  cs.reserve(f.coeffs().size());
  for (const auto& a : f.coeffs()) cs.push_back(a * c);
  return Poly(f.spec(), std::move(cs));
}

DivMod poly_divmod(const Poly& f, const Poly& g) {
  require_same_field(f, g);
  if (g.is_zero()) throw DomainError("polynomial division by zero");
  const auto& spec = f.spec();
  if (f.degree() < g.degree()) return {Poly(spec), f};

  std::vector<FqElement> rem = f.coeffs();
  const auto& d = g.coeffs();
  const std::size_t dg = d.size() - 1;
  const FqElement lead_inv = ff_inv(g.leading());
  std::vector<FqElement> quot(rem.size() - dg, gfq::zero(spec));
  for (std::size_t i = rem.size(); i-- > dg;) {
    if (rem[i].is_zero()) continue;
    const FqElement c = rem[i] * lead_inv;
    quot[i - dg] = c;
    for (std::size_t j = 0; j <= dg; ++j) rem[i - dg + j] = rem[i - dg + j] - c * d[j];
  }
  rem.erase(rem.begin() + static_cast<std::ptrdiff_t>(dg), rem.end());
  return {Poly(spec, std::move(quot)), Poly(spec, std::move(rem))};
}

Poly poly_mod(const Poly& f, const Poly& g) { return poly_divmod(f, g).remainder; }

Poly poly_gcd(const Poly& f, const Poly& g) {
  require_same_field(f, g);
  if (f.is_zero() && g.is_zero()) throw DomainError("gcd(0, 0) is undefined");
  Poly a = f;
  Poly b = g;
  while (!b.is_zero()) {
    Poly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly poly_powmod(const Poly& base, Natural e, const Poly& modulus) {
  if (modulus.degree() < 1) throw DomainError("poly_powmod needs a modulus of degree >= 1");
  Poly result = poly_mod(Poly::constant(gfq::one(base.spec())), modulus);
  Poly b = poly_mod(base, modulus);
  while (e > 0) {
    if (e & 1) result = poly_mod(result * b, modulus);
    e >>= 1;
    if (e > 0) b = poly_mod(b * b, modulus);
  }
  return result;
}

std::vector<FqElement> roots(const Poly& f, const Limits& limits) {
  if (f.is_zero()) throw DomainError("roots of the zero polynomial");
  std::vector<FqElement> out;
  for (const auto& a : gfq::enumerate(f.spec(), limits)) {
    if (f.evaluate(a).is_zero()) out.push_back(a);
  }
  return out;
}

namespace {

// x^(q^d) mod f for d = 0..count, by iterated Frobenius.
std::vector<Poly> frobenius_powers(const Poly& f, unsigned count) {
  const Natural q = f.spec().q();
  std::vector<Poly> out;
  out.reserve(count + 1);
  out.push_back(poly_mod(Poly::x(f.spec()), f));
  for (unsigned i = 0; i < count; ++i) out.push_back(poly_powmod(out.back(), q, f));
  return out;
}

}  // namespace

bool is_irreducible(const Poly& f, const Limits& limits) {
  if (f.degree() < 1) throw DomainError("irreducibility of a constant is undefined");
  const auto d = static_cast<unsigned>(f.degree());
  if (d == 1) return true;
  const Poly g = f.monic();
  if (d <= 3 && f.spec().q() <= limits.enumeration) return roots(g, limits).empty();

  // Rabin: x^(q^d) = x mod g, and gcd(x^(q^(d/l)) - x, g) = 1 for primes l | d.
  const auto frob = frobenius_powers(g, d);
  const Poly& x = frob[0];
  if (!(frob[d] == x)) return false;
  for (const auto& pe : numth::factorize(d)) {
    const auto h = frob[d / pe.prime] - x;
    if (!poly_gcd(g, h).is_one()) return false;
  }
  return true;
}

// --- factorization ----------------------------------------------------------

namespace {

using Engine = std::mt19937_64;

struct Part {
  Poly poly;
  unsigned multiplicity;
};

Poly pth_root(const Poly& f) {
  const Natural p = f.spec().p();
  std::vector<FqElement> cs;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) {
    cs.push_back(gfq::ff_pth_root(f.coeffs()[i]));
  }
  return Poly(f.spec(), std::move(cs));
}

// Squarefree decomposition of a monic polynomial in characteristic p.
std::vector<Part> squarefree_parts(const Poly& f) {
  std::vector<Part> out;
  if (f.degree() < 1) return out;
  const auto p = static_cast<unsigned>(f.spec().p());
  const Poly df = f.derivative();
  if (df.is_zero()) {
    for (auto& part : squarefree_parts(pth_root(f))) {
      out.push_back({std::move(part.poly), part.multiplicity * p});
    }
    return out;
  }
  Poly c = poly_gcd(f, df);
  Poly w = poly_divmod(f, c).quotient;
  unsigned i = 1;
  while (!w.is_one()) {
    Poly y = poly_gcd(w, c);
    Poly fac = poly_divmod(w, y).quotient;
    if (fac.degree() >= 1) out.push_back({fac, i});
    w = std::move(y);
    c = poly_divmod(c, w).quotient;
    ++i;
  }
  if (!c.is_one()) {
    for (auto& part : squarefree_parts(pth_root(c))) {
      out.push_back({std::move(part.poly), part.multiplicity * p});
    }
  }
  return out;
}

struct DegreePart {
  Poly poly;
  unsigned degree;
};

// Splits a squarefree monic polynomial into products of equal-degree irreducibles.
std::vector<DegreePart> distinct_degree(const Poly& f) {
  std::vector<DegreePart> out;
  const auto& spec = f.spec();
  const Natural q = spec.q();
  const Poly x = Poly::x(spec);
  Poly rest = f;
  Poly h = poly_mod(x, rest);
  for (unsigned d = 1; rest.degree() >= 2 * static_cast<int>(d); ++d) {
    h = poly_powmod(h, q, rest);
    Poly g = poly_gcd(rest, h - x);
    if (!g.is_one()) {
      out.push_back({g, d});
      rest = poly_divmod(rest, g).quotient;
      h = poly_mod(h, rest);
    }
  }
  if (rest.degree() >= 1) out.push_back({rest, static_cast<unsigned>(rest.degree())});
  return out;
}

Poly random_poly(const FieldSpec& spec, int below_degree, Engine& engine) {
  std::vector<FqElement> cs;
  cs.reserve(below_degree);
  for (int i = 0; i < below_degree; ++i) {
    cs.push_back(FqElement::from_index(spec, engine() % spec.q()));
  }
  return Poly(spec, std::move(cs));
}

// Candidate splitter whose gcd with f is a proper factor with probability ~1/2.
Poly splitting_candidate(const Poly& f, const Poly& a, unsigned d) {
  const auto& spec = f.spec();
  const Natural q = spec.q();
  if (spec.p() == 2) {
    // Absolute trace a + a^2 + ... + a^(2^(kd-1)).
    Poly t = a;
    Poly acc = a;
    for (unsigned i = 1; i < spec.k() * d; ++i) {
      t = poly_mod(t * t, f);
      acc = acc + t;
    }
    return acc;
  }
  // a^((q^d-1)/2) = (a^(1+q+...+q^(d-1)))^((q-1)/2)
  Poly t = a;
  Poly norm = a;
  for (unsigned i = 1; i < d; ++i) {
    t = poly_powmod(t, q, f);
    norm = poly_mod(norm * t, f);
  }
  return poly_powmod(norm, (q - 1) / 2, f) - Poly::constant(gfq::one(spec));
}

void equal_degree(const Poly& f, unsigned d, Engine& engine, std::vector<Poly>& out) {
  const int n = f.degree();
  if (n == static_cast<int>(d)) {
    out.push_back(f);
    return;
  }
  for (;;) {
    Poly a = random_poly(f.spec(), n, engine);
    if (a.degree() < 1) continue;
    Poly g = poly_gcd(f, a);
    if (g.degree() < 1) g = poly_gcd(f, splitting_candidate(f, a, d));
    if (g.degree() >= 1 && g.degree() < n) {
      equal_degree(g, d, engine, out);
      equal_degree(poly_divmod(f, g).quotient, d, engine, out);
      return;
    }
  }
}

FactorizationReport finish(const Poly& input, std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return canonical_less(a.poly, b.poly); });
  // merge repeated factors
  std::vector<Factor> merged;
  for (auto& fac : factors) {
    if (!merged.empty() && merged.back().poly == fac.poly) {
      merged.back().multiplicity += fac.multiplicity;
    } else {
      merged.push_back(std::move(fac));
    }
  }
  FactorizationReport report{input, std::move(merged), input.leading()};
  if (!report.reconstructs_input()) {
    throw std::logic_error("factorization of " + input.to_string() + " does not re-multiply");
  }
  return report;
}

}  // namespace

Poly FactorizationReport::product() const {
  Poly acc = Poly::constant(unit);
  for (const auto& [poly, mult] : factors) {
    for (unsigned i = 0; i < mult; ++i) acc = acc * poly;
  }
  return acc;
}

std::size_t FactorizationReport::factor_count() const {
  std::size_t n = 0;
  for (const auto& f : factors) n += f.multiplicity;
  return n;
}

FactorizationReport factor_monic(const Poly& f, Natural seed) {
  if (f.degree() < 1) throw DomainError("factorization needs degree >= 1");
  Engine engine(seed);
  std::vector<Factor> factors;
  for (const auto& part : squarefree_parts(f.monic())) {
    for (const auto& dd : distinct_degree(part.poly)) {
      std::vector<Poly> irreducibles;
      equal_degree(dd.poly, dd.degree, engine, irreducibles);
      for (auto& g : irreducibles) factors.push_back({std::move(g), part.multiplicity});
    }
  }
  return finish(f, std::move(factors));
}

FactorizationReport brute_force_factor(const Poly& f, const Limits& limits) {
  if (f.degree() < 1) throw DomainError("factorization needs degree >= 1");
  const auto& spec = f.spec();
  const Natural q = spec.q();
  const auto half = static_cast<Natural>((f.degree() + 1) / 2);
  const auto work = numth::checked_pow(q, half);
  if (!work || *work > limits.brute) {
    throw RangeError("trial division over " + spec.name() + " up to degree " +
                     std::to_string(half) + " exceeds brute cap " + std::to_string(limits.brute));
  }

  std::vector<Factor> factors;
  Poly rest = f.monic();
  for (int d = 1; 2 * d <= rest.degree(); ++d) {
    const Natural count = *numth::checked_pow(q, static_cast<Natural>(d));
    for (Natural idx = 0; idx < count && 2 * d <= rest.degree(); ++idx) {
      std::vector<FqElement> cs;
      cs.reserve(d + 1);
      Natural digits = idx;
      for (int i = 0; i < d; ++i) {
        cs.push_back(FqElement::from_index(spec, digits % q));
        digits /= q;
      }
      cs.push_back(gfq::one(spec));
      Poly candidate(spec, std::move(cs));
      unsigned mult = 0;
      for (;;) {
        auto [quot, rem] = poly_divmod(rest, candidate);
        if (!rem.is_zero()) break;
        rest = std::move(quot);
        ++mult;
      }
      if (mult > 0) factors.push_back({std::move(candidate), mult});
    }
  }
  if (rest.degree() >= 1) factors.push_back({rest, 1});
  return finish(f, std::move(factors));
}

}  // namespace radring::factor
