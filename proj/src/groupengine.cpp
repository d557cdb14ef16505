#include "sylow/groupengine.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

namespace sylow {

// ---------------------------------------------------------------------------
// Representations

PermutationRep::PermutationRep(int degree) : degree_(degree) {
  if (degree < 1) throw DomainError("permutation degree must be positive");
}

std::vector<Word> PermutationRep::identity() const {
  std::vector<Word> id(static_cast<std::size_t>(degree_));
  std::iota(id.begin(), id.end(), Word{0});
  return id;
}

void PermutationRep::multiply(std::span<const Word> a, std::span<const Word> b, std::span<Word> out) const {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[b[i]];
}

std::string PermutationRep::format(std::span<const Word> element) const {
  std::ostringstream out;
  std::vector<bool> seen(element.size(), false);
  bool any = false;
  for (std::size_t start = 0; start < element.size(); ++start) {
    if (seen[start] || element[start] == start) continue;
    any = true;
    out << '(';
    std::size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) out << ' ';
      first = false;
      out << x;
      x = element[x];
    }
    out << ')';
  }
  if (!any) out << "()";
  return out.str();
}

Perm Perm::cycle(int degree, std::initializer_list<Word> points) {
  Perm p{PermutationRep(degree).identity()};
  std::vector<Word> pts(points);
  for (std::size_t i = 0; i < pts.size(); ++i) p.images[pts[i]] = pts[(i + 1) % pts.size()];
  return p;
}

Field::Index determinant(const Field& field, const ProjMatrix& m) {
  // Gaussian elimination over the field.
  const int n = m.n;
  std::vector<Field::Index> a = m.entries;
  Field::Index det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row) {
      if (a[static_cast<std::size_t>(row * n + col)] != 0) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (int k = 0; k < n; ++k) std::swap(a[static_cast<std::size_t>(pivot * n + k)], a[static_cast<std::size_t>(col * n + k)]);
      det = field.neg(det);
    }
    const Field::Index p = a[static_cast<std::size_t>(col * n + col)];
    det = field.mul(det, p);
    const Field::Index p_inv = field.inv(p);
    for (int row = col + 1; row < n; ++row) {
      const Field::Index factor = field.mul(a[static_cast<std::size_t>(row * n + col)], p_inv);
      if (factor == 0) continue;
      for (int k = col; k < n; ++k) {
        auto& target = a[static_cast<std::size_t>(row * n + k)];
        target = field.sub(target, field.mul(factor, a[static_cast<std::size_t>(col * n + k)]));
      }
    }
  }
  return det;
}

namespace {

std::vector<Field::Index> roots_of_unity(const Field& field, int n) {
  std::vector<Field::Index> out;
  for (Field::Index x = 1; x < field.order(); ++x) {
    if (field.pow(x, n) == 1) out.push_back(x);
  }
  return out;
}

void canonicalize_entries(const Field& field, std::span<Field::Index> entries,
                          const std::vector<Field::Index>& scalars) {
  if (scalars.size() <= 1) return;
  auto first = std::find_if(entries.begin(), entries.end(), [](Field::Index x) { return x != 0; });
  if (first == entries.end()) return;
  Field::Index best_scalar = 1;
  Field::Index best = *first;
  for (Field::Index lambda : scalars) {
    const Field::Index v = field.mul(lambda, *first);
    if (v < best) {
      best = v;
      best_scalar = lambda;
    }
  }
  if (best_scalar == 1) return;
  for (auto& x : entries) x = field.mul(best_scalar, x);
}

}  // namespace

void canonicalize(const Field& field, ProjMatrix& m) {
  canonicalize_entries(field, m.entries, roots_of_unity(field, m.n));
}

MatrixRep::MatrixRep(std::shared_ptr<const Field> field, int n, bool projective)
    : field_(std::move(field)), n_(n), projective_(projective) {
  if (n < 1) throw DomainError("matrix dimension must be positive");
  if (projective_) scalars_ = roots_of_unity(*field_, n_);
}

std::vector<Word> MatrixRep::identity() const {
  std::vector<Word> id(width(), 0);
  for (int i = 0; i < n_; ++i) id[static_cast<std::size_t>(i * n_ + i)] = 1;
  return id;
}

void MatrixRep::multiply(std::span<const Word> a, std::span<const Word> b, std::span<Word> out) const {
  const Field& f = *field_;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      Field::Index acc = 0;
      for (int k = 0; k < n_; ++k) {
        acc = f.add(acc, f.mul(a[static_cast<std::size_t>(i * n_ + k)], b[static_cast<std::size_t>(k * n_ + j)]));
      }
      out[static_cast<std::size_t>(i * n_ + j)] = acc;
    }
  }
  if (projective_) canonicalize_entries(f, out, scalars_);
}

std::string MatrixRep::format(std::span<const Word> element) const {
  std::ostringstream out;
  out << '[';
  for (int i = 0; i < n_; ++i) {
    out << (i ? ",[" : "[");
    for (int j = 0; j < n_; ++j) {
      if (j) out << ',';
      out << field_->format(element[static_cast<std::size_t>(i * n_ + j)]);
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

AffineRep::AffineRep(std::shared_ptr<const Field> field) : field_(std::move(field)) {}

void AffineRep::multiply(std::span<const Word> a, std::span<const Word> b, std::span<Word> out) const {
  const Field& f = *field_;
  out[0] = f.mul(a[0], b[0]);
  out[1] = f.add(f.mul(a[0], b[1]), a[1]);
}

std::string AffineRep::format(std::span<const Word> element) const {
  return "x->" + field_->format(element[0]) + "*x+" + field_->format(element[1]);
}

// ---------------------------------------------------------------------------
// FiniteGroup

namespace {
constexpr FiniteGroup::Elem kEmpty = std::numeric_limits<FiniteGroup::Elem>::max();
}

std::uint64_t FiniteGroup::CodeIndex::hash(std::span<const Word> code) {
  std::uint64_t h = 0x9E3779B97F4A7C15ULL;
  for (Word w : code) {
    h ^= w + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    h *= 0xBF58476D1CE4E5B9ULL;
  }
  return h ^ (h >> 31);
}

void FiniteGroup::CodeIndex::reset(std::size_t expected) {
  std::size_t capacity = 16;
  while (capacity < 2 * expected) capacity *= 2;
  slots_.assign(capacity, kEmpty);
  used_ = 0;
}

std::optional<FiniteGroup::Elem> FiniteGroup::CodeIndex::find(std::span<const Word> code,
                                                              const std::vector<Word>& data,
                                                              std::size_t width) const {
  const std::size_t mask = slots_.size() - 1;
  for (std::size_t pos = hash(code) & mask;; pos = (pos + 1) & mask) {
    const Elem e = slots_[pos];
    if (e == kEmpty) return std::nullopt;
    if (std::equal(code.begin(), code.end(), data.begin() + static_cast<std::ptrdiff_t>(e * width))) return e;
  }
}

void FiniteGroup::CodeIndex::insert(Elem e, const std::vector<Word>& data, std::size_t width) {
  if (2 * (used_ + 1) > slots_.size()) {
    std::vector<Elem> old = std::move(slots_);
    reset(old.size());
    for (Elem x : old) {
      if (x != kEmpty) insert(x, data, width);
    }
  }
  const std::span<const Word> code(data.data() + e * width, width);
  const std::size_t mask = slots_.size() - 1;
  std::size_t pos = hash(code) & mask;
  while (slots_[pos] != kEmpty) pos = (pos + 1) & mask;
  slots_[pos] = e;
  ++used_;
}

std::span<const Word> FiniteGroup::code(Elem g) const {
  return {data_.data() + static_cast<std::size_t>(g) * width_, width_};
}

std::optional<FiniteGroup::Elem> FiniteGroup::find(std::span<const Word> c) const {
  if (c.size() != width_) return std::nullopt;
  return index_.find(c, data_, width_);
}

FiniteGroup::Elem FiniteGroup::mul(Elem a, Elem b) const {
  std::vector<Word> out(width_);
  rep_->multiply(code(a), code(b), out);
  auto e = find(out);
  if (!e) throw std::logic_error("group " + name_ + " is not closed under multiplication");
  return *e;
}

FiniteGroup::Elem FiniteGroup::power(Elem g, Integer k) const {
  const Integer order = orders_[g];
  k %= order;
  if (k < 0) k += order;
  Elem result = identity_;
  for (Integer i = 0; i < k; ++i) result = mul(result, g);
  return result;
}

void FiniteGroup::finalize() {
  inverses_.assign(count_, kEmpty);
  orders_.assign(count_, 0);
  std::vector<Elem> cycle;
  for (Elem g = 0; g < count_; ++g) {
    if (orders_[g] != 0) continue;
    cycle.clear();
    cycle.push_back(identity_);
    Elem x = g;
    while (x != identity_) {
      cycle.push_back(x);
      x = mul(x, g);
    }
    const auto order = static_cast<Integer>(cycle.size());
    for (Integer k = 0; k < order; ++k) {
      const Elem h = cycle[static_cast<std::size_t>(k)];
      if (orders_[h] == 0) {
        orders_[h] = order / std::gcd(k, order);
        inverses_[h] = cycle[static_cast<std::size_t>((order - k) % order)];
      }
    }
  }
  // Spot-check associativity on pseudo-random triples.
  std::mt19937_64 rng(0x5EED);
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(count_ - 1));
  for (int trial = 0; trial < 64; ++trial) {
    const Elem a = pick(rng);
    const Elem b = pick(rng);
    const Elem c = pick(rng);
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
      throw std::logic_error("group " + name_ + " failed the associativity spot check");
    }
  }
}

FiniteGroup closure(std::shared_ptr<const Representation> rep, const std::vector<std::vector<Word>>& generators,
                    std::size_t cap, std::string name) {
  if (generators.empty()) throw DomainError("closure requires at least one generator");
  FiniteGroup g;
  g.name_ = std::move(name);
  g.width_ = rep->width();
  g.rep_ = std::move(rep);
  const std::size_t w = g.width_;
  const std::vector<Word> id = g.rep_->identity();

  std::vector<std::vector<Word>> gens;
  gens.reserve(generators.size());
  for (const auto& gen : generators) {
    if (gen.size() != w) throw DomainError("generator has the wrong width");
    std::vector<Word> canonical(w);
    g.rep_->multiply(id, gen, canonical);
    gens.push_back(std::move(canonical));
  }

  g.index_.reset(1024);
  g.data_ = id;
  g.index_.insert(0, g.data_, w);
  g.count_ = 1;
  g.identity_ = 0;

  std::vector<Word> current(w);
  std::vector<Word> product(w);
  for (std::size_t i = 0; i < g.count_; ++i) {
    std::copy_n(g.data_.begin() + static_cast<std::ptrdiff_t>(i * w), w, current.begin());
    for (const auto& gen : gens) {
      g.rep_->multiply(current, gen, product);
      if (g.index_.find(product, g.data_, w)) continue;
      if (g.count_ >= cap) {
        throw ResourceError("closure of " + (g.name_.empty() ? std::string("group") : g.name_) +
                            " exceeded the cap of " + std::to_string(cap) + " elements");
      }
      g.data_.insert(g.data_.end(), product.begin(), product.end());
      g.index_.insert(static_cast<FiniteGroup::Elem>(g.count_), g.data_, w);
      ++g.count_;
    }
  }
  g.finalize();
  return g;
}

// ---------------------------------------------------------------------------
// Constructors

FiniteGroup alternating_group(int n, std::size_t cap) {
  if (n < 3 || n > 8) throw DomainError("alternating_group requires 3 <= n <= 8");
  std::vector<std::vector<Word>> gens;
  for (int k = 2; k < n; ++k) gens.push_back(Perm::cycle(n, {0, 1, static_cast<Word>(k)}).images);
  return closure(std::make_shared<PermutationRep>(n), gens, cap, "A" + std::to_string(n));
}

Integer psl_order(int n, Integer q) {
  Integer order = checked::pow(q, n * (n - 1) / 2);
  for (int i = 2; i <= n; ++i) order = checked::mul(order, checked::pow(q, i) - 1);
  return order / gcd(n, q - 1);
}

namespace {

Integer sl_order(int n, Integer q) { return checked::mul(psl_order(n, q), gcd(n, q - 1)); }

std::shared_ptr<const Field> field_of_order(Integer q) {
  auto pp = as_prime_power(q);
  if (!pp) throw DomainError(std::to_string(q) + " is not a prime power");
  return std::make_shared<const Field>(pp->base, pp->exponent);
}

}  // namespace

FiniteGroup special_linear_closure(int n, Integer q, bool projective, std::size_t cap) {
  if (n < 2) throw DomainError("special_linear_closure requires n >= 2");
  auto field = field_of_order(q);
  const Integer expected = projective ? psl_order(n, q) : sl_order(n, q);
  if (expected > static_cast<Integer>(cap)) {
    throw ResourceError("order " + std::to_string(expected) + " exceeds the cap of " + std::to_string(cap));
  }
  auto rep = std::make_shared<MatrixRep>(field, n, projective);
  std::vector<std::vector<Word>> gens;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (int k = 0; k < field->degree(); ++k) {
        auto t = rep->identity();
        t[static_cast<std::size_t>(i * n + j)] = field->pow(field->generator_index(), k);
        gens.push_back(std::move(t));
      }
    }
  }
  std::string name = std::string(projective ? "PSL" : "SL") + std::to_string(n) + "(" + std::to_string(q) + ")";
  FiniteGroup g = closure(rep, gens, cap, name);
  if (g.order() != expected) {
    throw std::logic_error(name + " closure has order " + std::to_string(g.order()) + ", expected " +
                           std::to_string(expected));
  }
  return g;
}

FiniteGroup psl(int n, Integer q, std::size_t cap) {
  if (n != 2 && n != 3) throw DomainError("psl supports n in {2, 3}");
  return special_linear_closure(n, q, true, cap);
}

FiniteGroup sp4_2(std::size_t cap) {
  const FiniteGroup gl = special_linear_closure(4, 2, false, std::max<std::size_t>(cap, 20160));
  // J = [[0, I], [I, 0]] over GF(2); keep M with M^T J M = J.
  auto preserves_form = [](std::span<const Word> m) {
    auto at = [&](int r, int c) { return m[static_cast<std::size_t>(r * 4 + c)]; };
    auto form = [&](int u, int v) {
      Word s = 0;
      for (int i = 0; i < 2; ++i) s ^= (at(i, u) & at(i + 2, v)) ^ (at(i + 2, u) & at(i, v));
      return s;
    };
    for (int u = 0; u < 4; ++u) {
      for (int v = 0; v < 4; ++v) {
        const Word expected = (v == (u + 2) % 4) ? 1 : 0;
        if (form(u, v) != expected) return false;
      }
    }
    return true;
  };
  std::vector<std::vector<Word>> kept;
  for (FiniteGroup::Elem e = 0; e < static_cast<FiniteGroup::Elem>(gl.order()); ++e) {
    const auto c = gl.code(e);
    if (preserves_form(c)) kept.emplace_back(c.begin(), c.end());
  }
  auto rep = std::make_shared<MatrixRep>(std::make_shared<const Field>(2, 1), 4, false);
  FiniteGroup g = closure(rep, kept, cap, "Sp4(2)");
  if (g.order() != static_cast<Integer>(kept.size())) {
    throw std::logic_error("form-preserving matrices are not closed");
  }
  return g;
}

FiniteGroup frobenius_affine(Integer p, Integer r, Integer t, std::size_t cap) {
  if (!is_prime(p) || !is_prime(r) || t < 1) {
    throw DomainError("frobenius_affine requires primes p, r and t >= 1");
  }
  const Integer q = checked::pow(r, t);
  if ((q - 1) % p != 0) {
    throw DomainError(std::to_string(p) + " does not divide " + std::to_string(r) + "^" + std::to_string(t) + " - 1");
  }
  if (checked::mul(p, q) > static_cast<Integer>(cap)) {
    throw ResourceError("frobenius_affine order exceeds the cap");
  }
  auto field = std::make_shared<const Field>(r, static_cast<int>(t));
  const Field::Index a = field->pow(field->generator_index(), (q - 1) / p);
  std::vector<std::vector<Word>> gens{{a, 0}};
  Integer basis = 1;
  for (Integer i = 0; i < t; ++i, basis *= r) gens.push_back({1, static_cast<Word>(basis)});
  std::ostringstream name;
  name << "Frob(" << p << "," << r << "," << t << ")";
  FiniteGroup g = closure(std::make_shared<AffineRep>(field), gens, cap, name.str());
  if (g.order() != p * q) throw std::logic_error("frobenius_affine closure has the wrong order");
  return g;
}

// ---------------------------------------------------------------------------
// Subgroups and oracles

Integer element_order(const FiniteGroup& g, FiniteGroup::Elem element) {
  if (element >= static_cast<FiniteGroup::Elem>(g.order())) throw DomainError("element not in group");
  return g.element_order(element);
}

Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<FiniteGroup::Elem>& generators) {
  std::vector<char> member(static_cast<std::size_t>(g.order()), 0);
  Subgroup out{g.identity()};
  member[g.identity()] = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (FiniteGroup::Elem gen : generators) {
      const FiniteGroup::Elem x = g.mul(out[i], gen);
      if (!member[x]) {
        member[x] = 1;
        out.push_back(x);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<char> membership(const FiniteGroup& g, const Subgroup& s) {
  std::vector<char> member(static_cast<std::size_t>(g.order()), 0);
  for (auto x : s) {
    if (x >= member.size()) throw DomainError("subgroup element not in group");
    member[x] = 1;
  }
  return member;
}

bool normalizes(const FiniteGroup& g, FiniteGroup::Elem x, const Subgroup& s, const std::vector<char>& member) {
  const FiniteGroup::Elem x_inv = g.inverse(x);
  for (auto h : s) {
    if (!member[g.mul(g.mul(x, h), x_inv)]) return false;
  }
  return true;
}

bool is_p_power(Integer n, Integer p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

void require_cyclic_sylow(const FiniteGroup& g, Integer p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (g.order() % p != 0) {
    throw PreconditionError(std::to_string(p) + " does not divide |" + g.name() + "|");
  }
  if (g.order() % (p * p) == 0) {
    throw PreconditionError(std::to_string(p) + "^2 divides |" + g.name() + "|; oracle not applicable");
  }
}

FiniteGroup::Elem first_of_order(const FiniteGroup& g, Integer p) {
  for (FiniteGroup::Elem x = 0; x < static_cast<FiniteGroup::Elem>(g.order()); ++x) {
    if (g.element_order(x) == p) return x;
  }
  throw std::logic_error("no element of order " + std::to_string(p) + " (Cauchy)");
}

SylowReport make_report(const FiniteGroup& g, Integer p, Integer n_p, SylowMethod method) {
  const Integer part = p_part(g.order(), p);
  if (n_p % p != 1 % p || (g.order() / part) % n_p != 0) {
    throw std::logic_error("Sylow count " + std::to_string(n_p) + " violates Sylow's theorem");
  }
  return SylowReport{p, part, n_p, method, (n_p - 1) / p};
}

}  // namespace

Integer normalizer_order(const FiniteGroup& g, const Subgroup& subgroup) {
  const auto member = membership(g, subgroup);
  for (auto a : subgroup) {
    for (auto b : subgroup) {
      if (!member[g.mul(a, b)]) throw DomainError("subset is not closed under multiplication");
    }
  }
  Integer count = 0;
  for (FiniteGroup::Elem x = 0; x < static_cast<FiniteGroup::Elem>(g.order()); ++x) {
    if (normalizes(g, x, subgroup, member)) ++count;
  }
  return count;
}

Integer p_part(Integer order, Integer p) {
  Integer part = 1;
  while (order % p == 0) {
    order /= p;
    part *= p;
  }
  return part;
}

std::string to_string(SylowMethod method) {
  switch (method) {
    case SylowMethod::ElementCount:
      return "ElementCount";
    case SylowMethod::ConjugacyOrbit:
      return "ConjugacyOrbit";
    case SylowMethod::SubgroupTower:
      return "SubgroupTower";
  }
  return "?";
}

SylowReport count_sylow_by_elements(const FiniteGroup& g, Integer p) {
  require_cyclic_sylow(g, p);
  Integer count = 0;
  for (FiniteGroup::Elem x = 0; x < static_cast<FiniteGroup::Elem>(g.order()); ++x) {
    if (g.element_order(x) == p) ++count;
  }
  if (count % (p - 1) != 0) throw std::logic_error("elements of order p do not split into C_p's");
  return make_report(g, p, count / (p - 1), SylowMethod::ElementCount);
}

SylowReport count_sylow_by_conjugacy(const FiniteGroup& g, Integer p) {
  require_cyclic_sylow(g, p);
  const FiniteGroup::Elem gen = first_of_order(g, p);
  // Distinct subgroups of prime order meet trivially, so the smallest
  // non-identity element id identifies each conjugate.
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  Integer orbit = 0;
  for (FiniteGroup::Elem x = 0; x < static_cast<FiniteGroup::Elem>(g.order()); ++x) {
    const FiniteGroup::Elem h = g.mul(g.mul(x, gen), g.inverse(x));
    FiniteGroup::Elem key = h;
    FiniteGroup::Elem power = h;
    for (Integer k = 2; k < p; ++k) {
      power = g.mul(power, h);
      key = std::min(key, power);
    }
    if (!seen[key]) {
      seen[key] = 1;
      ++orbit;
    }
  }
  return make_report(g, p, orbit, SylowMethod::ConjugacyOrbit);
}

namespace {

Subgroup sylow_tower(const FiniteGroup& g, Integer p) {
  const Integer target = p_part(g.order(), p);
  Subgroup sylow{g.identity()};
  while (static_cast<Integer>(sylow.size()) < target) {
    const auto member = membership(g, sylow);
    bool grown = false;
    for (FiniteGroup::Elem x = 0; x < static_cast<FiniteGroup::Elem>(g.order()); ++x) {
      if (member[x] || !is_p_power(g.element_order(x), p) || !normalizes(g, x, sylow, member)) continue;
      std::vector<FiniteGroup::Elem> gens(sylow.begin(), sylow.end());
      gens.push_back(x);
      sylow = generated_subgroup(g, gens);
      grown = true;
      break;
    }
    if (!grown) throw std::logic_error("p-subgroup below Sylow order has no p-element in its normalizer");
  }
  return sylow;
}

}  // namespace

SylowReport count_sylow_by_tower(const FiniteGroup& g, Integer p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (g.order() % p != 0) {
    throw PreconditionError(std::to_string(p) + " does not divide |" + g.name() + "|");
  }
  const Subgroup sylow = sylow_tower(g, p);
  const Integer normalizer = normalizer_order(g, sylow);
  return make_report(g, p, g.order() / normalizer, SylowMethod::SubgroupTower);
}

Subgroup sylow_subgroup(const FiniteGroup& g, Integer p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (g.order() % p != 0) return {g.identity()};
  if (g.order() % (p * p) != 0) return generated_subgroup(g, {first_of_order(g, p)});
  return sylow_tower(g, p);
}

}  // namespace sylow
