#include "ringlab/ring.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>
#include <utility>

namespace ringlab {

namespace {

std::string triple_msg(const char* axiom, int a, int b, int c) {
  return std::string(axiom) + " fails at (" + std::to_string(a) + "," +
         std::to_string(b) + "," + std::to_string(c) + ")";
}

/// Order of the ring an expression builds, or -1 when it exceeds `bound`.
long long bounded_pow(long long base, int exp, long long bound) {
  long long v = 1;
  for (int i = 0; i < exp; ++i) {
    v *= base;
    if (v > bound) return -1;
  }
  return v;
}

}  // namespace

struct RingBuilder {
  static FiniteRing make(std::string label, int n, int one,
                         std::vector<std::uint16_t> add,
                         std::vector<std::uint16_t> mul,
                         std::vector<std::uint16_t> neg,
                         std::shared_ptr<const ProductStructure> product = nullptr) {
    FiniteRing r;
    r.n_ = n;
    r.one_ = one;
    r.add_ = std::move(add);
    r.mul_ = std::move(mul);
    r.neg_ = std::move(neg);
    r.label_ = std::move(label);
    r.product_ = std::move(product);
    return r;
  }
};

namespace {

/// Validates the ring axioms and returns the negation table.
/// Identity, commutativity of +, inverses and the behaviour of 0 and 1 are
/// checked exhaustively; associativity and distributivity exhaustively up to
/// order 64 and on 100000 deterministic random triples above.
std::vector<std::uint16_t> validate_tables(int n, int one,
                                           const std::vector<int>& add,
                                           const std::vector<int>& mul) {
  if (n < 2)
    throw Error(errc::invalid_tables, "ring order must be at least 2 (zero ring rejected)");
  if ((long long)add.size() != (long long)n * n || (long long)mul.size() != (long long)n * n)
    throw Error(errc::invalid_tables, "table size does not match order");
  if (one < 0 || one >= n)
    throw Error(errc::invalid_tables, "one out of range");
  if (one == 0) throw Error(errc::invalid_tables, "zero and one coincide");
  for (long long i = 0; i < (long long)n * n; ++i)
    if (add[i] < 0 || add[i] >= n || mul[i] < 0 || mul[i] >= n)
      throw Error(errc::invalid_tables, "table entry out of range");

  auto at = [n](const std::vector<int>& t, int a, int b) {
    return t[std::size_t(a) * n + b];
  };

  for (int i = 0; i < n; ++i) {
    if (at(add, 0, i) != i || at(add, i, 0) != i)
      throw Error(errc::invalid_tables, "0 is not an additive identity at " + std::to_string(i));
    if (at(mul, one, i) != i || at(mul, i, one) != i)
      throw Error(errc::invalid_tables, "one is not a multiplicative identity at " + std::to_string(i));
    if (at(mul, 0, i) != 0 || at(mul, i, 0) != 0)
      throw Error(errc::invalid_tables, "0 is not multiplicatively absorbing at " + std::to_string(i));
  }

  std::vector<std::uint16_t> neg(n, 0);
  for (int i = 0; i < n; ++i) {
    int inv = -1;
    for (int j = 0; j < n; ++j)
      if (at(add, i, j) == 0) {
        inv = j;
        break;
      }
    if (inv < 0)
      throw Error(errc::invalid_tables, "no additive inverse for " + std::to_string(i));
    neg[i] = std::uint16_t(inv);
  }

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (at(add, i, j) != at(add, j, i))
        throw Error(errc::invalid_tables,
                    "addition not commutative at (" + std::to_string(i) + "," + std::to_string(j) + ")");

  auto check_triple = [&](int a, int b, int c) {
    if (at(add, at(add, a, b), c) != at(add, a, at(add, b, c)))
      throw Error(errc::invalid_tables, triple_msg("addition not associative", a, b, c));
    if (at(mul, at(mul, a, b), c) != at(mul, a, at(mul, b, c)))
      throw Error(errc::invalid_tables, triple_msg("multiplication not associative", a, b, c));
    if (at(mul, a, at(add, b, c)) != at(add, at(mul, a, b), at(mul, a, c)))
      throw Error(errc::invalid_tables, triple_msg("left distributivity", a, b, c));
    if (at(mul, at(add, a, b), c) != at(add, at(mul, a, c), at(mul, b, c)))
      throw Error(errc::invalid_tables, triple_msg("right distributivity", a, b, c));
  };

  if (n <= 64) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) check_triple(a, b, c);
  } else {
    std::mt19937 gen(0x52494e47u ^ std::uint32_t(n));
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int t = 0; t < 100000; ++t) check_triple(pick(gen), pick(gen), pick(gen));
  }
  return neg;
}

FiniteRing make_validated(std::string label, int n, int one,
                          const std::vector<int>& add, const std::vector<int>& mul,
                          std::shared_ptr<const ProductStructure> product = nullptr) {
  std::vector<std::uint16_t> neg = validate_tables(n, one, add, mul);
  std::vector<std::uint16_t> a16(add.begin(), add.end());
  std::vector<std::uint16_t> m16(mul.begin(), mul.end());
  return RingBuilder::make(std::move(label), n, one, std::move(a16), std::move(m16),
                           std::move(neg), std::move(product));
}

}  // namespace

FiniteRing FiniteRing::from_tables(std::string label, int order, int one,
                                   const std::vector<int>& add,
                                   const std::vector<int>& mul) {
  return make_validated(std::move(label), order, one, add, mul);
}

FiniteRing FiniteRing::with_label(std::string label) const {
  FiniteRing out = *this;
  out.label_ = std::move(label);
  return out;
}

bool FiniteRing::same_tables(const FiniteRing& other) const {
  return n_ == other.n_ && one_ == other.one_ && add_ == other.add_ &&
         mul_ == other.mul_;
}

RingExpr RingExpr::zmod(int n) {
  RingExpr e;
  e.kind = Kind::zmod;
  e.n = n;
  return e;
}

RingExpr RingExpr::matrix(int k, RingExpr base) {
  RingExpr e;
  e.kind = Kind::matrix;
  e.n = k;
  e.children.push_back(std::move(base));
  return e;
}

RingExpr RingExpr::triangular(int k, RingExpr base) {
  RingExpr e;
  e.kind = Kind::triangular;
  e.n = k;
  e.children.push_back(std::move(base));
  return e;
}

RingExpr RingExpr::product(std::vector<RingExpr> factors) {
  RingExpr e;
  e.kind = Kind::product;
  e.children = std::move(factors);
  return e;
}

RingExpr RingExpr::quotient(RingExpr base, std::vector<int> generators) {
  RingExpr e;
  e.kind = Kind::quotient;
  e.children.push_back(std::move(base));
  e.generators = std::move(generators);
  return e;
}

RingExpr RingExpr::table_ring(TableData data) {
  RingExpr e;
  e.kind = Kind::table;
  e.table = std::move(data);
  return e;
}

RingExpr RingExpr::catalog(std::string name) {
  RingExpr e;
  e.kind = Kind::catalog;
  e.name = std::move(name);
  return e;
}

namespace {

FiniteRing build_zmod(int n, const Limits& limits) {
  if (n < 2) throw Error(errc::invalid_tables, "Z" + std::to_string(n) + " rejected: order must be >= 2");
  if (n > limits.max_order)
    throw Error(errc::order_bound_exceeded,
                "order " + std::to_string(n) + " exceeds bound " + std::to_string(limits.max_order));
  std::vector<int> add(std::size_t(n) * n), mul(std::size_t(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      add[std::size_t(a) * n + b] = (a + b) % n;
      mul[std::size_t(a) * n + b] = int((long long)a * b % n);
    }
  return make_validated("Z" + std::to_string(n), n, 1, add, mul);
}

/// Entry positions of a k x k matrix ring (all cells) or an upper triangular
/// one (cells with row <= col), row-major; the first cell is the most
/// significant digit of the element index.
std::vector<std::pair<int, int>> cell_positions(int k, bool triangular) {
  std::vector<std::pair<int, int>> pos;
  for (int i = 0; i < k; ++i)
    for (int j = triangular ? i : 0; j < k; ++j) pos.push_back({i, j});
  return pos;
}

FiniteRing build_matrix_like(int k, const FiniteRing& base, bool triangular,
                             const Limits& limits) {
  if (k < 1) throw Error(errc::invalid_tables, "matrix size must be >= 1");
  auto pos = cell_positions(k, triangular);
  int cells = int(pos.size());
  long long order = bounded_pow(base.order(), cells, limits.max_order);
  if (order < 0)
    throw Error(errc::order_bound_exceeded,
                "matrix ring order exceeds bound " + std::to_string(limits.max_order));
  int n = int(order);
  int m = base.order();

  std::vector<int> cell_of(std::size_t(k) * k, -1);
  for (int p = 0; p < cells; ++p)
    cell_of[std::size_t(pos[p].first) * k + pos[p].second] = p;

  // digits[x] = entry list of element x, most significant first
  std::vector<std::vector<int>> digits(n, std::vector<int>(cells));
  for (int x = 0; x < n; ++x) {
    int v = x;
    for (int p = cells - 1; p >= 0; --p) {
      digits[x][p] = v % m;
      v /= m;
    }
  }
  auto encode = [&](const std::vector<int>& d) {
    long long v = 0;
    for (int p = 0; p < cells; ++p) v = v * m + d[p];
    return int(v);
  };

  std::vector<int> add(std::size_t(n) * n), mul(std::size_t(n) * n);
  std::vector<int> c(cells);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      for (int p = 0; p < cells; ++p) c[p] = base.add(digits[x][p], digits[y][p]);
      add[std::size_t(x) * n + y] = encode(c);
      for (int p = 0; p < cells; ++p) {
        auto [i, j] = pos[p];
        int acc = 0;
        for (int t = 0; t < k; ++t) {
          int pa = cell_of[std::size_t(i) * k + t];
          int pb = cell_of[std::size_t(t) * k + j];
          if (pa < 0 || pb < 0) continue;  // zero cell of a triangular matrix
          acc = base.add(acc, base.mul(digits[x][pa], digits[y][pb]));
        }
        c[p] = acc;
      }
      mul[std::size_t(x) * n + y] = encode(c);
    }

  std::vector<int> id(cells, 0);
  for (int p = 0; p < cells; ++p)
    if (pos[p].first == pos[p].second) id[p] = base.one();
  std::string label = (triangular ? "T" : "M") + std::to_string(k) + "(" + base.label() + ")";
  return make_validated(label, n, encode(id), add, mul);
}

std::string product_label(const std::vector<FiniteRing>& factors) {
  std::string label;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) label += " x ";
    bool wrap = factors[i].product_structure() != nullptr;
    label += wrap ? "(" + factors[i].label() + ")" : factors[i].label();
  }
  return label;
}

}  // namespace

ProductRing product_ring(const std::vector<FiniteRing>& factors, const Limits& limits) {
  if (factors.size() < 2)
    throw Error(errc::invalid_tables, "product needs at least 2 factors");
  long long order = 1;
  for (const FiniteRing& f : factors) {
    order *= f.order();
    if (order > limits.max_order)
      throw Error(errc::order_bound_exceeded,
                  "product order exceeds bound " + std::to_string(limits.max_order));
  }
  int n = int(order);
  int k = int(factors.size());

  // mixed radix, factor 1 most significant
  std::vector<std::vector<int>> digits(n, std::vector<int>(k));
  for (int x = 0; x < n; ++x) {
    int v = x;
    for (int i = k - 1; i >= 0; --i) {
      digits[x][i] = v % factors[i].order();
      v /= factors[i].order();
    }
  }
  auto encode = [&](const std::vector<int>& d) {
    long long v = 0;
    for (int i = 0; i < k; ++i) v = v * factors[i].order() + d[i];
    return int(v);
  };

  std::vector<int> add(std::size_t(n) * n), mul(std::size_t(n) * n);
  std::vector<int> c(k);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      for (int i = 0; i < k; ++i) c[i] = factors[i].add(digits[x][i], digits[y][i]);
      add[std::size_t(x) * n + y] = encode(c);
      for (int i = 0; i < k; ++i) c[i] = factors[i].mul(digits[x][i], digits[y][i]);
      mul[std::size_t(x) * n + y] = encode(c);
    }
  std::vector<int> ones(k);
  for (int i = 0; i < k; ++i) ones[i] = factors[i].one();

  auto structure = std::make_shared<ProductStructure>();
  structure->factors = factors;
  structure->projections.assign(k, std::vector<int>(n));
  for (int i = 0; i < k; ++i)
    for (int x = 0; x < n; ++x) structure->projections[i][x] = digits[x][i];

  FiniteRing ring = make_validated(product_label(factors), n, encode(ones), add, mul, structure);

  // coordinate projections must be ring surjections
  for (int i = 0; i < k; ++i) {
    const auto& pr = structure->projections[i];
    const FiniteRing& f = factors[i];
    if (pr[ring.one()] != f.one())
      throw Error(errc::invariant_failure, "product projection does not preserve 1");
    Subset hit(f.order());
    for (int x = 0; x < n; ++x) hit.insert(pr[x]);
    if (hit.size() != f.order())
      throw Error(errc::invariant_failure, "product projection not surjective");
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (pr[ring.add(x, y)] != f.add(pr[x], pr[y]) ||
            pr[ring.mul(x, y)] != f.mul(pr[x], pr[y]))
          throw Error(errc::invariant_failure, "product projection is not a homomorphism");
      }
  }
  return ProductRing{std::move(ring), structure->projections};
}

QuotientRing quotient_ring(const FiniteRing& R, const Subset& ideal) {
  if (ideal.contains(R.one()))
    throw Error(errc::improper_ideal, "quotient by an improper ideal");
  if (!is_ideal(R, ideal))
    throw Error(errc::invariant_failure, "quotient by a non-ideal subset");

  int n = R.order();
  std::vector<int> coset(n, -1);
  std::vector<int> reps;
  for (int x = 0; x < n; ++x) {
    if (coset[x] >= 0) continue;
    int idx = int(reps.size());
    reps.push_back(x);  // ascending scan: x is the least member of its coset
    for (int i : ideal.members()) coset[R.add(x, i)] = idx;
  }
  int m = int(reps.size());

  std::vector<int> add(std::size_t(m) * m), mul(std::size_t(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      add[std::size_t(a) * m + b] = coset[R.add(reps[a], reps[b])];
      mul[std::size_t(a) * m + b] = coset[R.mul(reps[a], reps[b])];
    }
  FiniteRing q = make_validated(R.label() + "/" + ideal.brace_list(), m,
                                coset[R.one()], add, mul);

  // the projection must be a ring homomorphism on all pairs
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (coset[R.add(x, y)] != q.add(coset[x], coset[y]) ||
          coset[R.mul(x, y)] != q.mul(coset[x], coset[y]))
        throw Error(errc::invariant_failure, "quotient projection is not a homomorphism");
    }
  return QuotientRing{std::move(q), std::move(coset)};
}

FiniteRing construct(const RingExpr& expr, const Limits& limits,
                     const CatalogResolver* resolver) {
  switch (expr.kind) {
    case RingExpr::Kind::zmod:
      return build_zmod(expr.n, limits);
    case RingExpr::Kind::matrix:
      return build_matrix_like(expr.n, construct(expr.children[0], limits, resolver),
                               false, limits);
    case RingExpr::Kind::triangular:
      return build_matrix_like(expr.n, construct(expr.children[0], limits, resolver),
                               true, limits);
    case RingExpr::Kind::product: {
      if (expr.children.size() < 2)
        throw Error(errc::invalid_tables, "product needs at least 2 factors");
      std::vector<FiniteRing> factors;
      factors.reserve(expr.children.size());
      for (const RingExpr& child : expr.children)
        factors.push_back(construct(child, limits, resolver));
      return product_ring(factors, limits).ring;
    }
    case RingExpr::Kind::quotient: {
      FiniteRing base = construct(expr.children[0], limits, resolver);
      Subset gens(base.order());
      for (int g : expr.generators) {
        if (g < 0 || g >= base.order())
          throw Error(errc::invalid_tables,
                      "quotient generator " + std::to_string(g) + " out of range");
        gens.insert(g);
      }
      Subset ideal = ideal_generated_by(base, gens);
      QuotientRing q = quotient_ring(base, ideal);
      std::string gen_list;
      for (std::size_t i = 0; i < expr.generators.size(); ++i) {
        if (i) gen_list += ",";
        gen_list += std::to_string(expr.generators[i]);
      }
      return q.ring.with_label(base.label() + "/(" + gen_list + ")");
    }
    case RingExpr::Kind::table: {
      if (expr.table.order > limits.max_order)
        throw Error(errc::order_bound_exceeded,
                    "table order exceeds bound " + std::to_string(limits.max_order));
      return FiniteRing::from_tables("table[" + std::to_string(expr.table.order) + "]",
                                     expr.table.order, expr.table.one,
                                     expr.table.add, expr.table.mul);
    }
    case RingExpr::Kind::catalog: {
      if (!resolver)
        throw Error(errc::unknown_catalog_name, "unknown catalog name: " + expr.name);
      RingExpr resolved = (*resolver)(expr.name);
      return construct(resolved, limits, resolver).with_label(expr.name);
    }
  }
  throw Error(errc::invalid_tables, "malformed ring expression");
}

Subset left_regular_elements(const FiniteRing& R) {
  int n = R.order();
  Subset out(n);
  for (int s = 0; s < n; ++s) {
    bool regular = true;
    for (int r = 1; r < n && regular; ++r)
      if (R.mul(s, r) == 0) regular = false;
    if (regular) out.insert(s);
  }
  return out;
}

Subset right_regular_elements(const FiniteRing& R) {
  int n = R.order();
  Subset out(n);
  for (int s = 0; s < n; ++s) {
    bool regular = true;
    for (int r = 1; r < n && regular; ++r)
      if (R.mul(r, s) == 0) regular = false;
    if (regular) out.insert(s);
  }
  return out;
}

Subset units(const FiniteRing& R) {
  int n = R.order();
  Subset out(n);
  for (int u = 0; u < n; ++u)
    if (unit_inverse(R, u) >= 0) out.insert(u);
  // finite-ring collapse: units = left-regular = right-regular
  if (out != left_regular_elements(R) || out != right_regular_elements(R))
    throw Error(errc::invariant_failure, "units differ from the regular elements");
  return out;
}

int unit_inverse(const FiniteRing& R, int u) {
  for (int v = 0; v < R.order(); ++v)
    if (R.mul(u, v) == R.one() && R.mul(v, u) == R.one()) return v;
  return -1;
}

bool is_nilpotent(const FiniteRing& R, int a) {
  int x = a;
  for (int k = 1; k <= R.order(); ++k) {
    if (x == 0) return true;
    x = R.mul(x, a);
  }
  return x == 0;
}

Subset nilpotent_elements(const FiniteRing& R) {
  Subset out(R.order());
  for (int a = 0; a < R.order(); ++a)
    if (is_nilpotent(R, a)) out.insert(a);
  return out;
}

Subset jacobson_radical(const FiniteRing& R) {
  int n = R.order();
  Subset u = units(R);
  Subset out(n);
  for (int r = 0; r < n; ++r) {
    bool in_rad = true;
    for (int x = 0; x < n && in_rad; ++x)
      if (!u.contains(R.sub(R.one(), R.mul(x, r)))) in_rad = false;
    if (in_rad) out.insert(r);
  }
  if (!is_ideal(R, out))
    throw Error(errc::invariant_failure, "jacobson radical is not an ideal");
  return out;
}

bool is_ideal(const FiniteRing& R, const Subset& s) {
  if (s.universe() != R.order() || !s.contains(0)) return false;
  std::vector<int> ms = s.members();
  for (int a : ms)
    for (int b : ms)
      if (!s.contains(R.add(a, b))) return false;
  for (int a : ms)
    for (int r = 0; r < R.order(); ++r)
      if (!s.contains(R.mul(r, a)) || !s.contains(R.mul(a, r))) return false;
  return true;
}

Subset additive_closure(const FiniteRing& R, Subset s) {
  s.insert(0);
  std::vector<int> work = s.members();
  for (std::size_t i = 0; i < work.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      int sum = R.add(work[i], work[j]);
      if (!s.contains(sum)) {
        s.insert(sum);
        work.push_back(sum);
      }
    }
  return s;
}

Subset ideal_generated_by(const FiniteRing& R, const Subset& gens) {
  int n = R.order();
  Subset spread(n);
  spread.insert(0);
  for (int g : gens.members())
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) spread.insert(R.mul(R.mul(a, g), b));
  return additive_closure(R, spread);
}

std::vector<Subset> enumerate_ideals(const FiniteRing& R, const Limits& limits) {
  int n = R.order();
  std::vector<Subset> ideals;
  std::unordered_set<Subset, SubsetHash> seen;
  auto push = [&](const Subset& ideal) {
    if (seen.insert(ideal).second) {
      ideals.push_back(ideal);
      if ((long long)ideals.size() > limits.max_ideals)
        throw Error(errc::ideal_bound_exceeded,
                    "ideal count exceeds bound " + std::to_string(limits.max_ideals));
    }
  };

  Subset zero(n);
  zero.insert(0);
  push(zero);
  for (int x = 0; x < n; ++x) {
    Subset g(n);
    g.insert(x);
    push(ideal_generated_by(R, g));
  }
  // close under pairwise sum; every ideal is a finite sum of principal ones
  for (std::size_t i = 0; i < ideals.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      push(additive_closure(R, ideals[i] | ideals[j]));

  std::sort(ideals.begin(), ideals.end(), Subset::canonical_less);
  return ideals;
}

bool is_local(const FiniteRing& R) {
  return is_ideal(R, units(R).complement());
}

namespace {

/// Corner ring e R e = eR for a central idempotent e, with identity e.
/// Members are listed ascending; the projection maps r to the position of er.
std::pair<FiniteRing, std::vector<int>> corner_ring(const FiniteRing& R, int e) {
  int n = R.order();
  Subset member_set(n);
  for (int x = 0; x < n; ++x) member_set.insert(R.mul(e, x));
  std::vector<int> members = member_set.members();
  int m = int(members.size());
  std::vector<int> pos(n, -1);
  for (int i = 0; i < m; ++i) pos[members[i]] = i;

  std::vector<int> add(std::size_t(m) * m), mul(std::size_t(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      add[std::size_t(a) * m + b] = pos[R.add(members[a], members[b])];
      mul[std::size_t(a) * m + b] = pos[R.mul(members[a], members[b])];
    }
  FiniteRing factor = make_validated(R.label() + "[e=" + std::to_string(e) + "]", m,
                                     pos[e], add, mul);
  std::vector<int> projection(n);
  for (int x = 0; x < n; ++x) projection[x] = pos[R.mul(e, x)];
  return {std::move(factor), std::move(projection)};
}

}  // namespace

Decomposition central_idempotent_decomposition(const FiniteRing& R) {
  int n = R.order();
  std::vector<int> central;
  for (int e = 0; e < n; ++e) {
    if (R.mul(e, e) != e) continue;
    bool is_central = true;
    for (int x = 0; x < n && is_central; ++x)
      if (R.mul(e, x) != R.mul(x, e)) is_central = false;
    if (is_central) central.push_back(e);
  }

  // primitive = atom of the Boolean algebra of central idempotents
  std::vector<int> atoms;
  for (int e : central) {
    if (e == 0) continue;
    bool primitive = true;
    for (int f : central)
      if (f != 0 && f != e && R.mul(f, e) == f) {
        primitive = false;
        break;
      }
    if (primitive) atoms.push_back(e);
  }

  int sum = 0;
  for (int e : atoms) sum = R.add(sum, e);
  if (sum != R.one())
    throw Error(errc::invariant_failure, "central idempotents do not sum to 1");
  for (std::size_t i = 0; i < atoms.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (R.mul(atoms[i], atoms[j]) != 0)
        throw Error(errc::invariant_failure, "central idempotents not orthogonal");

  Decomposition out;
  out.idempotents = atoms;
  for (int e : atoms) {
    auto [factor, projection] = corner_ring(R, e);
    out.factors.push_back(std::move(factor));
    out.projections.push_back(std::move(projection));
  }
  long long prod = 1;
  for (const FiniteRing& f : out.factors) prod *= f.order();
  if (prod != n)
    throw Error(errc::invariant_failure, "corner ring orders do not multiply to the order");
  return out;
}

Subset nil_radical(const FiniteRing& R, const Limits& limits) {
  int n = R.order();
  Subset gens(n);
  for (int x = 0; x < n; ++x) {
    Subset g(n);
    g.insert(x);
    Subset principal = ideal_generated_by(R, g);
    bool nil = true;
    for (int y : principal.members())
      if (!is_nilpotent(R, y)) {
        nil = false;
        break;
      }
    if (nil) gens.insert(x);
  }
  Subset out = ideal_generated_by(R, gens);

  for (int y : out.members())
    if (!is_nilpotent(R, y))
      throw Error(errc::invariant_failure, "nil radical contains a non-nilpotent element");
  if (!is_ideal(R, out))
    throw Error(errc::invariant_failure, "nil radical is not an ideal");
  Subset nil_elements = nilpotent_elements(R);
  for (const Subset& ideal : enumerate_ideals(R, limits))
    if (ideal.subset_of(nil_elements) && !ideal.subset_of(out))
      throw Error(errc::invariant_failure, "nil radical misses a nil ideal");
  return out;
}

}  // namespace ringlab
