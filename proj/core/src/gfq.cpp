#include "radring/gfq.hpp"

#include <string>

#include "radring/errors.hpp"
#include "radring/factor.hpp"

namespace radring::gfq {

using numth::add_mod;
using numth::mul_mod;
using numth::sub_mod;

FieldSpec FieldSpec::prime(Natural p) {
  if (!numth::is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  auto d = std::make_shared<Data>();
  d->p = p;
  d->k = 1;
  d->q = p;
  d->modulus = {0, 1};
  return FieldSpec(std::move(d));
}

FieldSpec FieldSpec::extension(Natural p, std::vector<Natural> modulus) {
  if (!numth::is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (modulus.size() < 2) throw DomainError("field modulus must have degree >= 1");
  for (auto& c : modulus) c %= p;
  if (modulus.back() != 1) throw DomainError("field modulus must be monic");
  const auto k = static_cast<unsigned>(modulus.size() - 1);
  if (k == 1) return prime(p);
  auto q = numth::checked_pow(p, k);
  if (!q) throw RangeError("field order p^k overflows 64 bits");

  const auto base = prime(p);
  std::vector<FqElement> coeffs;
  coeffs.reserve(modulus.size());
  for (Natural c : modulus) coeffs.push_back(FqElement::from_index(base, c));
  if (!factor::is_irreducible(factor::Poly(base, std::move(coeffs)))) {
    throw DomainError("field modulus is reducible over Z_" + std::to_string(p));
  }

  auto d = std::make_shared<Data>();
  d->p = p;
  d->k = k;
  d->q = *q;
  d->modulus = std::move(modulus);
  return FieldSpec(std::move(d));
}

FieldSpec FieldSpec::galois(Natural p, unsigned k, Natural seed) {
  if (k == 0) throw DomainError("extension degree must be >= 1");
  if (k == 1) return prime(p);
  if (!numth::is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (!numth::checked_pow(p, k)) throw RangeError("field order p^k overflows 64 bits");
  return extension(p, find_irreducible(p, k, seed));
}

std::string FieldSpec::name() const {
  if (k() == 1) return "F_" + std::to_string(p());
  return "F_" + std::to_string(p()) + "^" + std::to_string(k());
}

bool operator==(const FieldSpec& a, const FieldSpec& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->p == b.data_->p && a.data_->modulus == b.data_->modulus;
}

// --- elements ---------------------------------------------------------------

FqElement::FqElement(FieldSpec spec) : spec_(std::move(spec)), coeffs_(spec_.k(), 0) {}

FqElement::FqElement(FieldSpec spec, std::vector<Natural> coeffs)
    : spec_(std::move(spec)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != spec_.k()) {
    throw DomainError("element of " + spec_.name() + " needs " + std::to_string(spec_.k()) +
                      " coefficients, got " + std::to_string(coeffs_.size()));
  }
  for (auto& c : coeffs_) c %= spec_.p();
}

FqElement FqElement::from_integer(const FieldSpec& spec, std::int64_t value) {
  FqElement out(spec);
  out.coeffs_[0] = numth::normalize(value, spec.p());
  return out;
}

FqElement FqElement::from_index(const FieldSpec& spec, Natural index) {
  if (index >= spec.q()) throw RangeError("element index out of range for " + spec.name());
  FqElement out(spec);
  for (auto& c : out.coeffs_) {
    c = index % spec.p();
    index /= spec.p();
  }
  return out;
}

Natural FqElement::index() const {
  Natural idx = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) idx = idx * spec_.p() + *it;
  return idx;
}

bool FqElement::is_zero() const noexcept {
  for (Natural c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool FqElement::is_one() const noexcept { return coeffs_[0] == 1 && is_prime_subfield(); }

bool FqElement::is_prime_subfield() const noexcept {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

std::string FqElement::to_string() const {
  if (is_prime_subfield()) return std::to_string(coeffs_[0]);
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Natural c = coeffs_[i];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c);
    out += "a";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

namespace {

void require_same_field(const FqElement& x, const FqElement& y) {
  if (!(x.spec() == y.spec())) {
    throw DomainError("field mismatch: " + x.spec().name() + " vs " + y.spec().name());
  }
}

}  // namespace

FqElement ff_add(const FqElement& x, const FqElement& y) {
  require_same_field(x, y);
  FqElement out = x;
  const Natural p = x.spec().p();
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i) {
    out.coeffs_[i] = add_mod(out.coeffs_[i], y.coeffs_[i], p);
  }
  return out;
}

FqElement ff_sub(const FqElement& x, const FqElement& y) {
  require_same_field(x, y);
  FqElement out = x;
  const Natural p = x.spec().p();
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i) {
    out.coeffs_[i] = sub_mod(out.coeffs_[i], y.coeffs_[i], p);
  }
  return out;
}

FqElement ff_neg(const FqElement& x) {
  FqElement out = x;
  const Natural p = x.spec().p();
  for (auto& c : out.coeffs_) c = c == 0 ? 0 : p - c;
  return out;
}

FqElement ff_mul(const FqElement& x, const FqElement& y) {
  require_same_field(x, y);
  const auto& spec = x.spec();
  const Natural p = spec.p();
  const std::size_t k = spec.k();
  FqElement out(spec);
  if (k == 1) {
    out.coeffs_[0] = mul_mod(x.coeffs_[0], y.coeffs_[0], p);
    return out;
  }
  std::vector<Natural> prod(2 * k - 1, 0);
  for (std::size_t i = 0; i < k; ++i) {
    if (x.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < k; ++j) {
      prod[i + j] = add_mod(prod[i + j], mul_mod(x.coeffs_[i], y.coeffs_[j], p), p);
    }
  }
  // y^k = -(g_0 + g_1 y + ... + g_{k-1} y^{k-1})
  const auto g = spec.modulus();
  for (std::size_t d = 2 * k - 2; d >= k; --d) {
    const Natural c = prod[d];
    if (c == 0) continue;
    for (std::size_t j = 0; j < k; ++j) {
      prod[d - k + j] = sub_mod(prod[d - k + j], mul_mod(c, g[j], p), p);
    }
  }
  std::copy_n(prod.begin(), k, out.coeffs_.begin());
  return out;
}

FqElement ff_pow(const FqElement& x, Natural e) {
  FqElement result = one(x.spec());
  FqElement base = x;
  while (e > 0) {
    if (e & 1) result = ff_mul(result, base);
    e >>= 1;
    if (e > 0) base = ff_mul(base, base);
  }
  return result;
}

FqElement ff_inv(const FqElement& x) {
  if (x.is_zero()) throw DivisionByZeroError("inverse of zero in " + x.spec().name());
  const auto& spec = x.spec();
  if (spec.k() == 1) {
    return FqElement(spec, {numth::inv_mod(x.coeffs()[0], spec.p())});
  }
  return ff_pow(x, spec.q() - 2);
}

Natural ff_order(const FqElement& x) {
  if (x.is_zero()) throw DomainError("multiplicative order of zero is undefined");
  const Natural group = x.spec().q() - 1;
  if (group == 1) return 1;
  Natural h = group;
  for (const auto& [prime, e] : numth::factorize(group)) {
    for (unsigned i = 0; i < e; ++i) {
      if (!ff_pow(x, h / prime).is_one()) break;
      h /= prime;
    }
  }
  return h;
}

FqElement ff_pth_root(const FqElement& x) {
  const auto& spec = x.spec();
  if (spec.k() == 1) return x;
  return ff_pow(x, spec.q() / spec.p());
}

Elements enumerate(const FieldSpec& spec, const Limits& limits) {
  if (spec.q() > limits.enumeration) {
    throw RangeError("cannot enumerate " + spec.name() + ": q = " + std::to_string(spec.q()) +
                     " exceeds cap " + std::to_string(limits.enumeration));
  }
  return Elements(spec);
}

std::vector<Natural> find_irreducible(Natural p, unsigned k, Natural seed) {
  if (!numth::is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (k == 0) throw DomainError("degree must be >= 1");
  if (k == 1) return {0, 1};

  const auto base = FieldSpec::prime(p);
  // Number of monic candidates; saturate at 2^64 when p^k overflows.
  const Natural span = numth::checked_pow(p, k).value_or(0);
  const Natural start = span == 0 ? seed : seed % span;
  for (Natural step = 0;; ++step) {
    Natural index = start + step;
    if (span != 0) index %= span;
    std::vector<FqElement> coeffs;
    coeffs.reserve(k + 1);
    for (unsigned i = 0; i < k; ++i) {
      coeffs.emplace_back(base, std::vector<Natural>{index % p});
      index /= p;
    }
    coeffs.push_back(one(base));
    factor::Poly candidate(base, coeffs);
    if (factor::is_irreducible(candidate)) {
      std::vector<Natural> out;
      out.reserve(k + 1);
      for (const auto& c : coeffs) out.push_back(c.coeffs()[0]);
      return out;
    }
  }
}

}  // namespace radring::gfq
