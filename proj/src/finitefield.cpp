#include "sylow/finitefield.hpp"

#include <numeric>
#include <sstream>

namespace sylow {

namespace {

// Remainder of `value` modulo the monic `divisor` over GF(r), in place.
void poly_mod(std::vector<Integer>& value, std::span<const int> divisor, Integer r) {
  const std::size_t dd = divisor.size() - 1;
  while (value.size() > dd) {
    const Integer lead = value.back() % r;
    if (lead != 0) {
      const std::size_t shift = value.size() - 1 - dd;
      for (std::size_t i = 0; i <= dd; ++i) {
        value[shift + i] = ((value[shift + i] - lead * divisor[i]) % r + r) % r;
      }
    }
    value.pop_back();
  }
}

std::vector<int> digits(Integer index, Integer r, int count) {
  std::vector<int> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] = static_cast<int>(index % r);
    index /= r;
  }
  return out;
}

}  // namespace

Integer FieldSpec::order() const { return checked::pow(characteristic, degree); }

bool is_irreducible(Integer r, std::span<const int> monic_poly) {
  const int degree = static_cast<int>(monic_poly.size()) - 1;
  if (degree < 1) return false;
  if (degree == 1) return true;
  // Trial division by every monic polynomial of degree 1..degree/2.
  for (int d = 1; d <= degree / 2; ++d) {
    const Integer count = checked::pow(r, d);
    for (Integer k = 0; k < count; ++k) {
      std::vector<int> divisor = digits(k, r, d);
      divisor.push_back(1);
      std::vector<Integer> value(monic_poly.begin(), monic_poly.end());
      poly_mod(value, divisor, r);
      bool zero = true;
      for (Integer c : value) zero = zero && (c == 0);
      if (zero) return false;
    }
  }
  return true;
}

FieldSpec field_create(Integer r, int f) {
  if (!is_prime(r)) throw DomainError("field characteristic " + std::to_string(r) + " is not prime");
  if (f < 1) throw DomainError("field degree must be >= 1");
  if (f > 20 || checked::pow(r, f) > Field::kMaxOrder) {
    throw DomainError("field order r^f exceeds 2^20");
  }
  const Integer count = checked::pow(r, f);
  for (Integer k = 0; k < count; ++k) {
    std::vector<int> candidate = digits(k, r, f);
    candidate.push_back(1);
    if (is_irreducible(r, candidate)) return FieldSpec{r, f, candidate};
  }
  throw std::logic_error("no irreducible polynomial found");
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)), order_(static_cast<Index>(spec_.order())) {
  if (!is_irreducible(spec_.characteristic, spec_.modulus) ||
      static_cast<int>(spec_.modulus.size()) != spec_.degree + 1) {
    throw DomainError("field modulus is not an irreducible polynomial of the stated degree");
  }
  if (order_ == 2) {
    generator_ = 1;
    exp_ = {1};
    log_ = {0, 0};
    return;
  }
  const Integer group_order = order_ - 1;
  const auto prime_divisors = factorize(group_order).primes();
  auto slow_pow = [&](Index a, Integer e) {
    Index result = 1;
    Index base = a;
    while (e > 0) {
      if (e & 1) result = mul_slow(result, base);
      base = mul_slow(base, base);
      e >>= 1;
    }
    return result;
  };
  for (Index a = 2; a < order_; ++a) {
    bool primitive = true;
    for (Integer prime : prime_divisors) {
      if (slow_pow(a, group_order / prime) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      generator_ = a;
      break;
    }
  }
  exp_.resize(static_cast<std::size_t>(group_order));
  log_.assign(order_, 0);
  Index x = 1;
  for (Integer k = 0; k < group_order; ++k) {
    exp_[static_cast<std::size_t>(k)] = x;
    log_[x] = static_cast<Index>(k);
    x = mul_slow(x, generator_);
  }
  if (x != 1) throw std::logic_error("field generator search failed");
  if (spec_.characteristic != 2 && order_ <= kAddTableLimit) {
    add_table_.resize(static_cast<std::size_t>(order_) * order_);
    for (Index a = 0; a < order_; ++a) {
      for (Index b = 0; b < order_; ++b) add_table_[static_cast<std::size_t>(a) * order_ + b] = add_digits(a, b);
    }
  }
}

FieldElement Field::element(Index index) const {
  if (index >= order_) throw DomainError("field index out of range");
  return FieldElement{digits(index, spec_.characteristic, spec_.degree)};
}

Field::Index Field::index_of(const FieldElement& e) const {
  if (static_cast<int>(e.coefficients.size()) != spec_.degree) {
    throw DomainError("field element has wrong length");
  }
  Integer index = 0;
  for (int i = spec_.degree - 1; i >= 0; --i) {
    const int c = e.coefficients[static_cast<std::size_t>(i)];
    if (c < 0 || c >= spec_.characteristic) throw DomainError("field coefficient out of range");
    index = index * spec_.characteristic + c;
  }
  return static_cast<Index>(index);
}

Field::Index Field::add(Index a, Index b) const {
  if (spec_.characteristic == 2) return a ^ b;
  if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * order_ + b];
  return add_digits(a, b);
}

Field::Index Field::add_digits(Index a, Index b) const {
  const Integer r = spec_.characteristic;
  Integer result = 0;
  Integer place = 1;
  for (int i = 0; i < spec_.degree; ++i) {
    result += ((a % r + b % r) % r) * place;
    a = static_cast<Index>(a / r);
    b = static_cast<Index>(b / r);
    place *= r;
  }
  return static_cast<Index>(result);
}

Field::Index Field::neg(Index a) const {
  const Integer r = spec_.characteristic;
  if (r == 2) return a;
  Integer result = 0;
  Integer place = 1;
  for (int i = 0; i < spec_.degree; ++i) {
    result += ((r - a % r) % r) * place;
    a = static_cast<Index>(a / r);
    place *= r;
  }
  return static_cast<Index>(result);
}

Field::Index Field::sub(Index a, Index b) const { return add(a, neg(b)); }

Field::Index Field::mul_slow(Index a, Index b) const {
  const Integer r = spec_.characteristic;
  const auto da = digits(a, r, spec_.degree);
  const auto db = digits(b, r, spec_.degree);
  std::vector<Integer> product(static_cast<std::size_t>(2 * spec_.degree - 1), 0);
  for (std::size_t i = 0; i < da.size(); ++i) {
    for (std::size_t j = 0; j < db.size(); ++j) {
      product[i + j] = (product[i + j] + Integer{da[i]} * db[j]) % r;
    }
  }
  poly_mod(product, spec_.modulus, r);
  Integer index = 0;
  for (std::size_t i = product.size(); i-- > 0;) index = index * r + product[i];
  return static_cast<Index>(index);
}

Field::Index Field::mul(Index a, Index b) const {
  if (a == 0 || b == 0) return 0;
  const std::size_t n = exp_.size();
  return exp_[(static_cast<std::size_t>(log_[a]) + log_[b]) % n];
}

Field::Index Field::inv(Index a) const {
  if (a == 0) throw DomainError("inverse of zero");
  const std::size_t n = exp_.size();
  return exp_[(n - log_[a]) % n];
}

Field::Index Field::pow(Index a, Integer exponent) const {
  if (a == 0) {
    if (exponent == 0) return 1;
    if (exponent < 0) throw DomainError("negative power of zero");
    return 0;
  }
  const auto n = static_cast<Integer>(exp_.size());
  Integer k = (static_cast<Integer>(log_[a]) * (exponent % n)) % n;
  if (k < 0) k += n;
  return exp_[static_cast<std::size_t>(k)];
}

Integer Field::element_order(Index a) const {
  if (a == 0) throw DomainError("zero has no multiplicative order");
  const auto n = static_cast<Integer>(exp_.size());
  return n / std::gcd(n, static_cast<Integer>(log_[a]));
}

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
  return element(add(index_of(a), index_of(b)));
}
FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const {
  return element(sub(index_of(a), index_of(b)));
}
// Direct polynomial product reduced by the modulus; the index form uses log tables.
FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
  return element(mul_slow(index_of(a), index_of(b)));
}
FieldElement Field::inv(const FieldElement& a) const { return element(inv(index_of(a))); }

std::string Field::format(Index a) const {
  if (spec_.degree == 1) return std::to_string(a);
  return format_polynomial(element(a).coefficients);
}

std::string format_polynomial(std::span<const int> coefficients) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coefficients.size(); i-- > 0;) {
    const int c = coefficients[i];
    if (c == 0) continue;
    if (!first) out << '+';
    first = false;
    if (i == 0) {
      out << c;
      continue;
    }
    if (c != 1) out << c;
    out << 'x';
    if (i > 1) out << '^' << i;
  }
  if (first) out << '0';
  return out.str();
}

}  // namespace sylow
