#include "fingeo/finite_field.hpp"

#include <sstream>

#include "fingeo/errors.hpp"

namespace fingeo {
namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m over GF(p).
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      const std::uint64_t sub = (lead * m[i]) % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Poly decode(Elem a, std::uint32_t p, std::uint32_t h) {
  Poly out(h, 0);
  for (std::uint32_t i = 0; i < h; ++i) {
    out[i] = a % p;
    a /= p;
  }
  return out;
}

Elem encode(const Poly& a, std::uint32_t p) {
  Elem v = 0;
  for (std::size_t i = a.size(); i-- > 0;) v = v * p + a[i];
  return v;
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool prime_power_decompose(std::uint64_t q, std::uint32_t& p, std::uint32_t& h) {
  if (q < 2) return false;
  std::uint64_t d = 2;
  while (d * d <= q && q % d != 0) ++d;
  if (q % d != 0) d = q;
  std::uint64_t rest = q;
  std::uint32_t e = 0;
  while (rest % d == 0) {
    rest /= d;
    ++e;
  }
  if (rest != 1) return false;
  p = static_cast<std::uint32_t>(d);
  h = e;
  return true;
}

bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p) {
  Poly f(poly.begin(), poly.end());
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  // Normalize to monic.
  std::uint32_t lead_inv = 1;
  for (std::uint32_t c = 1; c < p; ++c)
    if ((static_cast<std::uint64_t>(c) * f.back()) % p == 1) lead_inv = c;
  for (auto& c : f) c = static_cast<std::uint32_t>((static_cast<std::uint64_t>(c) * lead_inv) % p);

  for (std::size_t d = 1; d <= deg / 2; ++d) {
    const std::uint64_t count = ipow(p, static_cast<std::uint32_t>(d));
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g = decode(static_cast<Elem>(code), p, static_cast<std::uint32_t>(d));
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::shared_ptr<const GaloisField> GaloisField::make(std::uint32_t p, std::uint32_t h,
                                                     std::uint32_t max_order) {
  if (!is_prime(p)) throw PreconditionError("make_field: " + std::to_string(p) + " is not prime");
  if (h < 1) throw PreconditionError("make_field: extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < h; ++i) {
    q *= p;
    if (q > max_order)
      throw LimitExceeded("make_field: field order exceeds limit " + std::to_string(max_order));
  }

  Poly modulus;
  if (h >= 2) {
    // Tuples (c_0, ..., c_{h-1}) in lexicographic order with c_0 most significant.
    for (std::uint64_t i = 0; i < q; ++i) {
      Poly cand(h + 1, 0);
      std::uint64_t rest = i;
      for (std::uint32_t j = h; j-- > 0;) {
        cand[j] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      cand[h] = 1;
      if (is_irreducible(cand, p)) {
        modulus = std::move(cand);
        break;
      }
    }
  }
  return std::shared_ptr<const GaloisField>(new GaloisField(p, h, std::move(modulus)));
}

std::shared_ptr<const GaloisField> GaloisField::of_order(std::uint64_t q, std::uint32_t max_order) {
  std::uint32_t p = 0, h = 0;
  if (!prime_power_decompose(q, p, h))
    throw PreconditionError("make_field: " + std::to_string(q) + " is not a prime power");
  return make(p, h, max_order);
}

GaloisField::GaloisField(std::uint32_t p, std::uint32_t h, std::vector<std::uint32_t> modulus)
    : p_(p), h_(h), q_(static_cast<std::uint32_t>(ipow(p, h))), modulus_(std::move(modulus)) {
  neg_.resize(q_);
  for (Elem a = 0; a < q_; ++a) {
    Poly d = decode(a, p_, h_);
    for (auto& c : d) c = (p_ - c) % p_;
    neg_[a] = encode(d, p_);
  }

  const std::uint32_t order = q_ - 1;
  log_.assign(q_, 0);
  exp_.assign(2 * static_cast<std::size_t>(order) + 1, 0);
  if (q_ == 2) {
    exp_ = {1, 1, 1};
    return;
  }
  for (Elem g = 2; g < q_; ++g) {
    Elem x = 1;
    std::uint32_t k = 0;
    do {
      exp_[k] = x;
      x = poly_mul(x, g);
      ++k;
    } while (x != 1 && k < order);
    if (k == order && x == 1) break;
  }
  for (std::uint32_t k = 0; k < order; ++k) {
    exp_[k + order] = exp_[k];
    log_[exp_[k]] = k;
  }
  exp_[2 * order] = exp_[0];
}

Elem GaloisField::poly_mul(Elem a, Elem b) const {
  if (h_ == 1) return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p_);
  const Poly da = decode(a, p_, h_);
  const Poly db = decode(b, p_, h_);
  Poly prod(2 * h_ - 1, 0);
  for (std::uint32_t i = 0; i < h_; ++i)
    for (std::uint32_t j = 0; j < h_; ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p_);
  return encode(poly_mod(std::move(prod), modulus_, p_), p_);
}

std::string GaloisField::descriptor() const {
  std::ostringstream os;
  os << "GF(" << p_ << '^' << h_ << ")[";
  for (std::size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i];
  os << ']';
  return os.str();
}

Elem GaloisField::add(Elem a, Elem b) const noexcept {
  if (h_ == 1) return (a + b) % p_;
  Elem out = 0, scale = 1;
  for (std::uint32_t i = 0; i < h_; ++i) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

Elem GaloisField::sub(Elem a, Elem b) const noexcept { return add(a, neg_[b]); }

Elem GaloisField::inv(Elem a) const {
  if (a == 0) throw PreconditionError("field: inverse of zero");
  if (q_ == 2) return 1;
  return exp_[(q_ - 1) - log_[a]];
}

Elem GaloisField::pow(Elem a, std::uint64_t e) const noexcept {
  if (e == 0) return 1;
  if (a == 0) return 0;
  if (q_ == 2) return 1;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
}

Elem GaloisField::from_int(std::int64_t v) const noexcept {
  const std::int64_t r = ((v % static_cast<std::int64_t>(p_)) + p_) % p_;
  return static_cast<Elem>(r);
}

FieldElement::FieldElement(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {
  if (!field_) throw PreconditionError("field element without a field");
  if (!field_->contains(value_)) throw PreconditionError("field element out of range");
}

namespace {
const GaloisField& common(const FieldElement& a, const FieldElement& b) {
  if (!(a.field() == b.field())) throw PreconditionError("field: mixed-field operands");
  return a.field();
}
}  // namespace

FieldElement FieldElement::inv() const { return {field_, field_->inv(value_)}; }
FieldElement FieldElement::operator-() const { return {field_, field_->neg(value_)}; }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  return {a.field_, common(a, b).add(a.value_, b.value_)};
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  return {a.field_, common(a, b).sub(a.value_, b.value_)};
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  return {a.field_, common(a, b).mul(a.value_, b.value_)};
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  return {a.field_, common(a, b).div(a.value_, b.value_)};
}

}  // namespace fingeo
