#include "ringlab/localization.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>
#include <unordered_set>

namespace ringlab {

namespace {

void require_multiplicative(const FiniteRing& R, const Subset& s) {
  if (!s.contains(R.one()))
    throw Error(errc::not_multiplicative, "1 is not in the set");
  if (s.contains(0))
    throw Error(errc::not_multiplicative, "0 is in the set");
  std::vector<int> ms = s.members();
  for (int a : ms)
    for (int b : ms)
      if (!s.contains(R.mul(a, b)))
        throw Error(errc::not_multiplicative,
                    "not closed under multiplication: " + std::to_string(a) + "*" +
                        std::to_string(b));
}

}  // namespace

Subset multiplicative_closure(const FiniteRing& R, const Subset& gens) {
  int n = R.order();
  Subset s(n);
  s.insert(R.one());
  // parent pair of each derived element, for the product chain witness
  std::vector<std::pair<int, int>> parent(n, {-1, -1});
  std::vector<int> work = {R.one()};
  for (int g : gens.members())
    if (!s.contains(g)) {
      s.insert(g);
      work.push_back(g);
    }

  std::function<std::string(int)> chain = [&](int x) -> std::string {
    if (parent[x].first < 0) return std::to_string(x);
    return "(" + chain(parent[x].first) + "*" + chain(parent[x].second) + ")";
  };
  if (s.contains(0))
    throw Error(errc::zero_absorbed, "zero absorbed: 0 is a generator");

  for (std::size_t i = 0; i < work.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      for (auto [a, b] : {std::pair{work[i], work[j]}, std::pair{work[j], work[i]}}) {
        int p = R.mul(a, b);
        if (!s.contains(p)) {
          s.insert(p);
          parent[p] = {a, b};
          if (p == 0)
            throw Error(errc::zero_absorbed, "zero absorbed: 0 = " + chain(0));
          work.push_back(p);
        }
      }
  return s;
}

PairWitness is_left_ore(const FiniteRing& R, const Subset& s) {
  require_multiplicative(R, s);
  int n = R.order();
  std::vector<int> ms = s.members();

  // Sr depends on r only, Rs on s only
  std::unordered_map<int, Subset> right_cols;
  for (int sv : ms) {
    Subset col(n);
    for (int r = 0; r < n; ++r) col.insert(R.mul(r, sv));
    right_cols.emplace(sv, std::move(col));
  }
  for (int r = 0; r < n; ++r) {
    Subset left(n);
    for (int sv : ms) left.insert(R.mul(sv, r));
    for (int sv : ms)
      if ((left & right_cols.at(sv)).empty()) return {false, r, sv};
  }
  return {};
}

Subset ass_set(const FiniteRing& R, const Subset& s) {
  int n = R.order();
  Subset out(n);
  for (int sv : s.members())
    for (int r = 0; r < n; ++r)
      if (R.mul(sv, r) == 0) out.insert(r);
  return out;
}

PairWitness is_left_denominator(const FiniteRing& R, const Subset& s) {
  PairWitness ore = is_left_ore(R, s);
  if (!ore.ok) return ore;
  Subset ass = ass_set(R, s);
  for (int r = 0; r < R.order(); ++r)
    for (int sv : s.members())
      if (R.mul(r, sv) == 0 && !ass.contains(r)) return {false, r, sv};
  return {};
}

Subset saturate(const FiniteRing& R, const Subset& ideal) {
  QuotientRing q = quotient_ring(R, ideal);
  Subset u = units(q.ring);
  Subset out(R.order());
  for (int x = 0; x < R.order(); ++x)
    if (u.contains(q.projection[x])) out.insert(x);
  return out;
}

bool is_localizable_ideal(const FiniteRing& R, const Subset& ideal) {
  Subset s = saturate(R, ideal);
  if (!is_left_denominator(R, s).ok) return false;
  return ass_set(R, s) == ideal;
}

Subset core(const FiniteRing& R, const Subset& s) {
  PairWitness ore = is_left_ore(R, s);
  if (!ore.ok)
    throw Error(errc::not_ore, "not a left Ore set; witness (r,s) = (" +
                                   std::to_string(ore.r) + "," + std::to_string(ore.s) + ")");
  Subset ass = ass_set(R, s);
  int n = R.order();
  Subset out(n);
  for (int sv : s.members()) {
    Subset ker(n);
    for (int r = 0; r < n; ++r)
      if (R.mul(sv, r) == 0) ker.insert(r);
    if (ker == ass) out.insert(sv);
  }
  return out;
}

namespace {

DenRecord make_record(const FiniteRing& R, const Subset& s) {
  Subset ass = ass_set(R, s);
  if (!is_ideal(R, ass))
    throw Error(errc::invariant_failure, "ass of a denominator set is not an ideal");
  QuotientRing q = quotient_ring(R, ass);
  DenRecord rec{s,           ass,
                core(R, s),  std::move(q.ring),
                std::move(q.projection), s == saturate(R, ass)};

  Subset u = units(rec.quotient);
  for (int sv : s.members())
    if (!u.contains(rec.projection[sv]))
      throw Error(errc::invariant_failure,
                  "denominator set does not map into the units of the localization");
  return rec;
}

}  // namespace

MaxDenProfile max_denominator_sets(const FiniteRing& R, const Limits& limits) {
  std::vector<Subset> localizable;
  for (const Subset& ideal : enumerate_ideals(R, limits)) {
    if (ideal.contains(R.one())) continue;
    if (is_localizable_ideal(R, ideal)) localizable.push_back(ideal);
  }

  std::vector<Subset> maximal;
  for (const Subset& i : localizable) {
    bool is_max = true;
    for (const Subset& j : localizable)
      if (i != j && i.subset_of(j)) {
        is_max = false;
        break;
      }
    if (is_max) maximal.push_back(i);
  }
  std::sort(maximal.begin(), maximal.end(), Subset::value_less);

  MaxDenProfile profile;
  for (const Subset& ideal : maximal) {
    DenRecord rec = make_record(R, saturate(R, ideal));
    if (rec.ass != ideal)
      throw Error(errc::invariant_failure, "saturation changed the ass ideal");
    profile.records.push_back(std::move(rec));
  }
  if (profile.records.empty())
    throw Error(errc::invariant_failure, "no maximal denominator set found");

  // the ass ideals of distinct maximal denominator sets are incomparable
  for (std::size_t i = 0; i < profile.records.size(); ++i)
    for (std::size_t j = 0; j < profile.records.size(); ++j)
      if (i != j && profile.records[i].ass.subset_of(profile.records[j].ass))
        throw Error(errc::invariant_failure, "maximal ass ideals are comparable");

  int n = R.order();
  profile.ll_radical = Subset::full(n);
  profile.localizable = Subset(n);
  profile.completely_localizable = Subset::full(n);
  for (const DenRecord& rec : profile.records) {
    profile.ll_radical = profile.ll_radical & rec.ass;
    profile.localizable = profile.localizable | rec.s;
    profile.completely_localizable = profile.completely_localizable & rec.s;
  }

  // exactness: ll is the kernel of the combined projection into the
  // product of the localizations
  Subset kernel(n);
  for (int x = 0; x < n; ++x) {
    bool everywhere_zero = true;
    for (const DenRecord& rec : profile.records)
      if (rec.projection[x] != 0) {
        everywhere_zero = false;
        break;
      }
    if (everywhere_zero) kernel.insert(x);
  }
  if (kernel != profile.ll_radical)
    throw Error(errc::invariant_failure,
                "ll radical differs from the kernel of the combined projection");
  return profile;
}

LocView localize(const FiniteRing& R, const Subset& s) {
  PairWitness den = is_left_denominator(R, s);
  if (!den.ok)
    throw Error(errc::not_denominator,
                "not a left denominator set; witness (r,s) = (" + std::to_string(den.r) +
                    "," + std::to_string(den.s) + ")");
  return LocView{R, make_record(R, s)};
}

Subset ll_radical(const FiniteRing& R, const Limits& limits) {
  return max_denominator_sets(R, limits).ll_radical;
}

Subset denominator_join(const FiniteRing& R, const Subset& s, const Subset& t) {
  if (!is_left_denominator(R, s).ok || !is_left_denominator(R, t).ok)
    throw Error(errc::not_denominator, "join requires two left denominator sets");
  Subset ass_s = ass_set(R, s), ass_t = ass_set(R, t);
  if (!ass_s.subset_of(ass_t))
    throw Error(errc::precond_ass_not_nested,
                "ass(S) = " + ass_s.brace_list() + " is not contained in ass(T) = " +
                    ass_t.brace_list());

  Subset joined;
  try {
    joined = multiplicative_closure(R, s | t);
  } catch (const Error& e) {
    if (e.code() == errc::zero_absorbed)
      throw Error(errc::invariant_failure,
                  std::string("denominator join absorbed zero under a satisfied "
                              "precondition: ") + e.what());
    throw;
  }
  if (!is_left_denominator(R, joined).ok)
    throw Error(errc::invariant_failure, "denominator join is not a denominator set");
  if (!ass_t.subset_of(ass_set(R, joined)))
    throw Error(errc::invariant_failure, "ass of the join does not contain ass(T)");
  return joined;
}

std::vector<Subset> exhaustive_denominator_sets(const FiniteRing& R, const Limits& limits) {
  int n = R.order();
  if (n > limits.oracle_max_order)
    throw Error(errc::oracle_bound_exceeded,
                "order " + std::to_string(n) + " exceeds the oracle bound " +
                    std::to_string(limits.oracle_max_order));

  // closures on raw uint64 masks, memoized; 0 marks an absorbed closure
  std::unordered_map<std::uint64_t, std::uint64_t> memo;
  auto closed = [&](std::uint64_t gens) -> std::uint64_t {
    auto it = memo.find(gens);
    if (it != memo.end()) return it->second;
    std::uint64_t mask = gens | (std::uint64_t(1) << R.one());
    std::vector<int> work;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) work.push_back(i);
    bool absorbed = (mask & 1) != 0;
    for (std::size_t i = 0; i < work.size() && !absorbed; ++i)
      for (std::size_t j = 0; j <= i && !absorbed; ++j)
        for (int p : {R.mul(work[i], work[j]), R.mul(work[j], work[i])}) {
          if (mask >> p & 1) continue;
          if (p == 0) {
            absorbed = true;
            break;
          }
          mask |= std::uint64_t(1) << p;
          work.push_back(p);
        }
    std::uint64_t result = absorbed ? 0 : mask;
    memo.emplace(gens, result);
    return result;
  };

  std::vector<int> free_elements;
  for (int i = 0; i < n; ++i)
    if (i != 0 && i != R.one()) free_elements.push_back(i);

  // Depth-first over generator subsets in increasing element order, carrying
  // the running closure.  An absorbed branch is dropped entirely: closures
  // are monotone, so every superset absorbs 0 as well.  Adding an element
  // already in the closure changes nothing and the loop covers that subtree.
  std::unordered_set<std::uint64_t> results;
  std::function<void(std::uint64_t, std::size_t)> visit = [&](std::uint64_t cur,
                                                              std::size_t next) {
    results.insert(cur);
    for (std::size_t i = next; i < free_elements.size(); ++i) {
      std::uint64_t grown = closed(cur | (std::uint64_t(1) << free_elements[i]));
      if (grown == 0 || grown == cur) continue;
      visit(grown, i + 1);
    }
  };
  visit(closed(0), 0);

  std::vector<Subset> out;
  for (std::uint64_t mask : results) {
    Subset s(n);
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) s.insert(i);
    if (is_left_denominator(R, s).ok) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), Subset::canonical_less);
  return out;
}

namespace {

/// Dense symmetric relation over pair indices.
struct Relation {
  int size;
  std::vector<Subset> rows;
  explicit Relation(int size) : size(size), rows(size, Subset(size)) {}
  void set(int p, int q) {
    rows[p].insert(q);
    rows[q].insert(p);
  }
};

}  // namespace

FiniteRing fraction_oracle(const FiniteRing& R, const Subset& s, const Limits& limits) {
  PairWitness den = is_left_denominator(R, s);
  if (!den.ok)
    throw Error(errc::not_denominator,
                "not a left denominator set; witness (r,s) = (" + std::to_string(den.r) +
                    "," + std::to_string(den.s) + ")");

  int n = R.order();
  std::vector<int> ms = s.members();
  int ns = int(ms.size());
  long long pair_count = (long long)ns * n;
  if (pair_count > limits.oracle_max_pairs)
    throw Error(errc::oracle_bound_exceeded,
                "|S x R| = " + std::to_string(pair_count) + " exceeds the oracle bound " +
                    std::to_string(limits.oracle_max_pairs));
  int np = int(pair_count);

  std::vector<int> pos_in_s(n, -1);
  for (int i = 0; i < ns; ++i) pos_in_s[ms[i]] = i;
  auto pair_s = [&](int p) { return ms[p / n]; };
  auto pair_r = [&](int p) { return p % n; };

  // (s,r) ~ (s',r') iff cs = c's' in S and cr = c'r' for some c, c' in R
  auto related = [&](int p, int q) {
    int sp = pair_s(p), rp = pair_r(p);
    int sq = pair_s(q), rq = pair_r(q);
    for (int c = 0; c < n; ++c) {
      int cs = R.mul(c, sp);
      if (!s.contains(cs)) continue;
      for (int c2 = 0; c2 < n; ++c2)
        if (R.mul(c2, sq) == cs && R.mul(c2, rq) == R.mul(c, rp)) return true;
    }
    return false;
  };

  Relation rel(np);
  for (int p = 0; p < np; ++p) {
    rel.set(p, p);
    for (int q = p + 1; q < np; ++q)
      if (related(p, q)) rel.set(p, q);
  }
  // transitivity is verified, not assumed
  for (int p = 0; p < np; ++p)
    for (int q : rel.rows[p].members())
      if (!(rel.rows[q] == rel.rows[p]))
        throw Error(errc::invariant_failure,
                    "fraction equivalence is not transitive at pairs " + std::to_string(p) +
                        ", " + std::to_string(q));

  // classes: zero class (the class of (1, 0)) first, then by least pair
  int zero_pair = pos_in_s[R.one()] * n + 0;
  std::vector<int> class_of(np, -1);
  std::vector<int> reps;
  auto adopt = [&](int p) {
    int id = int(reps.size());
    reps.push_back(p);
    for (int q : rel.rows[p].members()) class_of[q] = id;
  };
  adopt(zero_pair);
  for (int p = 0; p < np; ++p)
    if (class_of[p] < 0) adopt(p);
  int m = int(reps.size());

  // addition via common left multiples, multiplication via the Ore condition
  auto add_class = [&](int a, int b) {
    int sp = pair_s(reps[a]), rp = pair_r(reps[a]);
    int sq = pair_s(reps[b]), rq = pair_r(reps[b]);
    for (int c = 0; c < n; ++c) {
      int cs = R.mul(c, sp);
      if (!s.contains(cs)) continue;
      for (int c2 = 0; c2 < n; ++c2)
        if (R.mul(c2, sq) == cs)
          return class_of[pos_in_s[cs] * n + R.add(R.mul(c, rp), R.mul(c2, rq))];
    }
    throw Error(errc::invariant_failure, "no common left multiple found for addition");
  };
  auto mul_class = [&](int a, int b) {
    int sp = pair_s(reps[a]), rp = pair_r(reps[a]);
    int sq = pair_s(reps[b]), rq = pair_r(reps[b]);
    for (int s2 : ms)
      for (int r2 = 0; r2 < n; ++r2)
        if (R.mul(s2, rp) == R.mul(r2, sq))
          return class_of[pos_in_s[R.mul(s2, sp)] * n + R.mul(r2, rq)];
    throw Error(errc::invariant_failure, "Ore condition produced no common multiple");
  };

  std::vector<int> add(std::size_t(m) * m), mul(std::size_t(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      add[std::size_t(a) * m + b] = add_class(a, b);
      mul[std::size_t(a) * m + b] = mul_class(a, b);
    }
  int one_class = class_of[pos_in_s[R.one()] * n + R.one()];

  FiniteRing fraction_ring = [&] {
    try {
      return FiniteRing::from_tables("frac(" + R.label() + ")", m, one_class, add, mul);
    } catch (const Error& e) {
      throw Error(errc::invariant_failure,
                  std::string("fraction construction is not a ring: ") + e.what());
    }
  }();

  // compare with the quotient realisation through (s,r) -> proj(s)^-1 proj(r)
  LocView view = localize(R, s);
  const FiniteRing& q = view.den.quotient;
  const std::vector<int>& proj = view.den.projection;
  std::vector<int> q_inv(q.order(), -1);
  for (int u : units(q).members()) q_inv[u] = unit_inverse(q, u);

  auto phi_pair = [&](int p) {
    int image_s = proj[pair_s(p)];
    if (q_inv[image_s] < 0)
      throw Error(errc::invariant_failure, "denominator image is not a unit");
    return q.mul(q_inv[image_s], proj[pair_r(p)]);
  };
  std::vector<int> phi(m);
  for (int a = 0; a < m; ++a) phi[a] = phi_pair(reps[a]);
  for (int p = 0; p < np; ++p)
    if (phi_pair(p) != phi[class_of[p]])
      throw Error(errc::invariant_failure, "fraction map is not well defined");
  if (m != q.order())
    throw Error(errc::invariant_failure, "fraction ring order differs from the quotient");
  {
    Subset seen_values(q.order());
    for (int a = 0; a < m; ++a) seen_values.insert(phi[a]);
    if (seen_values.size() != m)
      throw Error(errc::invariant_failure, "fraction map is not injective");
  }
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (phi[add[std::size_t(a) * m + b]] != q.add(phi[a], phi[b]))
        throw Error(errc::invariant_failure, "fraction map is not additive");
      if (phi[mul[std::size_t(a) * m + b]] != q.mul(phi[a], phi[b]))
        throw Error(errc::invariant_failure, "fraction map is not multiplicative");
    }
  if (phi[one_class] != q.one())
    throw Error(errc::invariant_failure, "fraction map does not preserve 1");

  return fraction_ring;
}

PhiMap phi_map(const FiniteRing& R, const Limits& limits) {
  MaxDenProfile profile = max_denominator_sets(R, limits);
  QuotientRing q = quotient_ring(R, profile.ll_radical);
  MaxDenProfile target = max_denominator_sets(q.ring, limits);

  PhiMap out;
  std::vector<Subset> images;
  for (std::size_t i = 0; i < profile.records.size(); ++i) {
    PhiEntry entry;
    entry.source = int(i);
    entry.image = Subset(q.ring.order());
    for (int x : profile.records[i].s.members()) entry.image.insert(q.projection[x]);
    for (std::size_t j = 0; j < target.records.size(); ++j)
      if (target.records[j].s == entry.image) {
        entry.image_maximal = true;
        entry.target = int(j);
        break;
      }
    images.push_back(entry.image);
    out.entries.push_back(std::move(entry));
  }

  out.injective = true;
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (images[i] == images[j]) out.injective = false;
  out.surjective = true;
  for (std::size_t j = 0; j < target.records.size(); ++j) {
    bool hit = false;
    for (const PhiEntry& entry : out.entries)
      if (entry.target == int(j)) hit = true;
    if (!hit) out.surjective = false;
  }
  return out;
}

}  // namespace ringlab
