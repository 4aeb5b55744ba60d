#include "ringlab/theorems.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "ringlab/classify.hpp"
#include "ringlab/localization.hpp"

namespace ringlab {

namespace {

/// Lazily computed per-ring analyses shared between checks.  The two sides
/// of an equivalence stay independent: localization-route data (profile,
/// classification predicates) never feeds the decomposition route and vice
/// versa.
struct Analysis {
  const FiniteRing& R;
  Limits limits;

  Analysis(const FiniteRing& ring, const Limits& lim) : R(ring), limits(lim) {}

  const MaxDenProfile& profile() {
    if (!profile_) profile_ = max_denominator_sets(R, limits);
    return *profile_;
  }
  const Decomposition& decomposition() {
    if (!dec_) dec_ = central_idempotent_decomposition(R);
    return *dec_;
  }
  bool wll() {
    if (!wll_) wll_ = is_weakly_left_localizable(R, limits);
    return wll_->value;
  }
  int wll_witness() {
    wll();
    return wll_->witness;
  }

 private:
  std::optional<MaxDenProfile> profile_;
  std::optional<Decomposition> dec_;
  std::optional<Witnessed> wll_;
};

void cond(Verdict& v, std::string name, bool value) {
  v.conditions.emplace_back(std::move(name), value);
}

bool localizations_wll(Analysis& a) {
  for (const DenRecord& rec : a.profile().records)
    if (!is_weakly_left_localizable(rec.quotient, a.limits).value) return false;
  return true;
}

/// Condition (d): for distinct maximal denominator sets S, T, ass(S) is not
/// nil modulo ass(T).  Vacuously true with a single record.
bool pairwise_not_nil_modulo(Analysis& a) {
  const auto& records = a.profile().records;
  for (std::size_t i = 0; i < records.size(); ++i)
    for (std::size_t j = 0; j < records.size(); ++j)
      if (i != j && nil_modulo_check(a.R, records[i].ass, records[j].ass)) return false;
  return true;
}

bool factors_local(Analysis& a) {
  for (const FiniteRing& f : a.decomposition().factors)
    if (!is_local(f)) return false;
  return true;
}

bool factors_rad_nil(Analysis& a) {
  for (const FiniteRing& f : a.decomposition().factors)
    if (!(jacobson_radical(f) == nil_radical(f, a.limits))) return false;
  return true;
}

bool decomposes_into_local_nil(const FiniteRing& R, const Limits& limits) {
  Decomposition dec = central_idempotent_decomposition(R);
  for (const FiniteRing& f : dec.factors) {
    if (!is_local(f)) return false;
    if (!(jacobson_radical(f) == nil_radical(f, limits))) return false;
  }
  return true;
}

/// Unit-coordinate set of decomposition factor i: {r : e_i r is a unit of
/// the corner ring}.
Subset coordinate_unit_set(const FiniteRing& R, const Decomposition& dec, int i) {
  Subset u = units(dec.factors[i]);
  Subset out(R.order());
  for (int x = 0; x < R.order(); ++x)
    if (u.contains(dec.projections[i][x])) out.insert(x);
  return out;
}

Subset coordinate_kernel(const FiniteRing& R, const Decomposition& dec, int i) {
  Subset out(R.order());
  for (int x = 0; x < R.order(); ++x)
    if (dec.projections[i][x] == 0) out.insert(x);
  return out;
}

/// Whether the maxden records are exactly the unit-coordinate sets of the
/// decomposition (as a set of subsets).
bool maxden_matches_coordinates(Analysis& a) {
  const auto& records = a.profile().records;
  const Decomposition& dec = a.decomposition();
  if (records.size() != dec.factors.size()) return false;
  std::vector<Subset> expected;
  for (std::size_t i = 0; i < dec.factors.size(); ++i)
    expected.push_back(coordinate_unit_set(a.R, dec, int(i)));
  std::vector<Subset> got;
  for (const DenRecord& rec : records) got.push_back(rec.s);
  std::sort(expected.begin(), expected.end(), Subset::canonical_less);
  std::sort(got.begin(), got.end(), Subset::canonical_less);
  return expected == got;
}

Subset image_subset(const Subset& s, const std::vector<int>& projection, int target_order) {
  Subset out(target_order);
  for (int x : s.members()) out.insert(projection[x]);
  return out;
}

Verdict check_26Mar14(Analysis& a) {
  Verdict v;
  v.applicable = true;
  bool wll = a.wll();
  bool ll_zero = a.profile().ll_radical.size() == 1;
  bool locs = localizations_wll(a);
  bool d = pairwise_not_nil_modulo(a);
  cond(v, "lhs.wll", wll);
  cond(v, "lhs.ll_zero", ll_zero);
  cond(v, "lhs.localizations_wll", locs);
  cond(v, "lhs.pairwise_not_nil_modulo", d);
  v.lhs = wll && ll_zero && locs && d;
  if (!wll) v.witnesses.emplace_back("lhs.wll", std::to_string(a.wll_witness()));

  bool flocal = factors_local(a);
  bool fnil = factors_rad_nil(a);
  cond(v, "rhs.factors_local", flocal);
  cond(v, "rhs.factors_rad_nil", fnil);
  v.rhs = flocal && fnil;
  v.pass = (v.lhs == v.rhs);
  return v;
}

Verdict check_28Mar14(Analysis& a) {
  Verdict v;
  v.applicable = true;
  bool wll = a.wll();
  PhiMap phi = phi_map(a.R, a.limits);
  bool locs = localizations_wll(a);
  bool d = pairwise_not_nil_modulo(a);
  cond(v, "lhs.wll", wll);
  cond(v, "lhs.phi_surjective", phi.surjective);
  cond(v, "lhs.localizations_wll", locs);
  cond(v, "lhs.pairwise_not_nil_modulo", d);
  v.lhs = wll && phi.surjective && locs && d;

  QuotientRing q = quotient_ring(a.R, a.profile().ll_radical);
  bool quotient_decomposes = decomposes_into_local_nil(q.ring, a.limits);
  bool ll_nil = a.profile().ll_radical.subset_of(nilpotent_elements(a.R));
  Subset image = image_subset(a.profile().localizable, q.projection, q.ring.order());
  bool image_eq = image == max_denominator_sets(q.ring, a.limits).localizable;
  cond(v, "rhs.quotient_decomposes_local_nil", quotient_decomposes);
  cond(v, "rhs.ll_nil", ll_nil);
  cond(v, "rhs.localizable_image", image_eq);
  v.rhs = quotient_decomposes && ll_nil && image_eq;
  v.pass = (v.lhs == v.rhs);
  return v;
}

Verdict check_b26Mar14(Analysis& a) {
  Verdict v;
  v.applicable = factors_local(a) && factors_rad_nil(a);
  if (!v.applicable) {
    v.pass = true;
    return v;
  }
  bool regular = units(a.R) == a.profile().completely_localizable;
  bool nil_eq = nilpotent_elements(a.R) == nil_radical(a.R, a.limits);
  bool unit_preimages = maxden_matches_coordinates(a);
  cond(v, "regular_equals_completely_localizable", regular);
  cond(v, "nilpotents_equal_nil_radical", nil_eq);
  cond(v, "maxden_are_unit_preimages", unit_preimages);
  v.lhs = v.rhs = regular && nil_eq && unit_preimages;
  v.pass = v.lhs;
  return v;
}

Verdict check_24Dec12(Analysis& a) {
  Verdict v;
  v.applicable = true;  // every finite ring is semilocal
  bool wll = a.wll();
  bool rad_nil = jacobson_radical(a.R) == nil_radical(a.R, a.limits);
  cond(v, "lhs.wll", wll);
  cond(v, "lhs.rad_equals_nil_radical", rad_nil);
  v.lhs = wll && rad_nil;

  bool flocal = factors_local(a);
  bool fnil = factors_rad_nil(a);
  cond(v, "rhs.factors_local", flocal);
  cond(v, "rhs.factors_rad_nil", fnil);
  v.rhs = flocal && fnil;
  v.pass = (v.lhs == v.rhs);
  return v;
}

Verdict check_a24Dec12(Analysis& a) {
  Verdict v;
  v.applicable = true;  // every finite ring is left Artinian
  v.lhs = a.wll();
  cond(v, "lhs.wll", v.lhs);
  v.rhs = factors_local(a);
  cond(v, "rhs.factors_local", v.rhs);
  v.pass = (v.lhs == v.rhs);
  return v;
}

Verdict check_b24Dec12(Analysis& a) {
  Verdict v;
  v.applicable = factors_local(a);
  if (!v.applicable) {
    v.pass = true;
    return v;
  }
  const FiniteRing& R = a.R;
  const Decomposition& dec = a.decomposition();
  bool sets_match = maxden_matches_coordinates(a);
  cond(v, "maxden_are_unit_coordinate_sets", sets_match);

  bool ass_match = true, cores_match = true, idem_dens = true;
  for (std::size_t i = 0; i < dec.factors.size(); ++i) {
    Subset s_i = coordinate_unit_set(R, dec, int(i));
    Subset ass_i = coordinate_kernel(R, dec, int(i));
    const DenRecord* rec = nullptr;
    for (const DenRecord& r : a.profile().records)
      if (r.s == s_i) rec = &r;
    if (!rec) {
      ass_match = cores_match = false;
      continue;
    }
    if (!(rec->ass == ass_i)) ass_match = false;

    // core = the unit block of the i-th coordinate, zero elsewhere
    Subset expected_core(R.order());
    Subset u = units(dec.factors[i]);
    for (int x = 0; x < R.order(); ++x) {
      if (!u.contains(dec.projections[i][x])) continue;
      bool zero_elsewhere = true;
      for (std::size_t j = 0; j < dec.factors.size(); ++j)
        if (j != i && dec.projections[j][x] != 0) zero_elsewhere = false;
      if (zero_elsewhere) expected_core.insert(x);
    }
    if (!(rec->core == expected_core)) cores_match = false;

    Subset t = Subset::of(R.order(), {R.one(), dec.idempotents[i]});
    if (!is_left_denominator(R, t).ok || !(ass_set(R, t) == ass_i)) idem_dens = false;
  }
  cond(v, "ass_are_coordinate_kernels", ass_match);
  cond(v, "cores_are_unit_blocks", cores_match);
  cond(v, "one_idempotent_pairs_are_denominator_sets", idem_dens);
  v.lhs = v.rhs = sets_match && ass_match && cores_match && idem_dens;
  v.pass = v.lhs;
  return v;
}

Verdict check_C2Dec12(Analysis& a) {
  Verdict v;
  v.applicable = a.wll() && a.profile().ll_radical.size() == 1 && localizations_wll(a) &&
                 pairwise_not_nil_modulo(a);
  if (!v.applicable) {
    v.pass = true;
    return v;
  }
  const auto& records = a.profile().records;
  bool holds = true;
  if (records.size() == 1) {
    bool core_eq = records[0].core == records[0].s;
    bool s_complement = records[0].s == nil_radical(a.R, a.limits).complement();
    cond(v, "core_equals_s", core_eq);
    cond(v, "s_is_complement_of_nil_radical", s_complement);
    holds = core_eq && s_complement;
  } else {
    for (std::size_t i = 0; i < records.size(); ++i) {
      Subset expected = records[i].s;
      for (std::size_t j = 0; j < records.size(); ++j)
        if (j != i) expected = expected & records[j].ass;
      bool match = (records[i].core == expected) && !expected.empty();
      cond(v, "core_formula_" + std::to_string(i + 1), match);
      if (!match) holds = false;
    }
  }
  v.lhs = v.rhs = holds;
  v.pass = holds;
  return v;
}

Verdict check_9Feb13(Analysis& a) {
  Verdict v;
  auto structure = a.R.product_structure();
  v.applicable = structure != nullptr && structure->factors.size() >= 2;
  if (!v.applicable) {
    v.pass = true;
    return v;
  }
  v.lhs = a.wll();
  cond(v, "lhs.product_wll", v.lhs);
  v.rhs = true;
  for (std::size_t i = 0; i < structure->factors.size(); ++i) {
    bool fw = is_weakly_left_localizable(structure->factors[i], a.limits).value;
    cond(v, "rhs.factor_" + std::to_string(i + 1) + "_wll", fw);
    if (!fw) v.rhs = false;
  }
  v.pass = (v.lhs == v.rhs);
  return v;
}

Verdict check_c26Dec12(Analysis& a) {
  Verdict v;
  auto structure = a.R.product_structure();
  v.applicable = structure != nullptr && structure->factors.size() >= 2;
  if (!v.applicable) {
    v.pass = true;
    return v;
  }
  const FiniteRing& R = a.R;
  int n = R.order();
  int k = int(structure->factors.size());

  // tagged disjoint union of the factor profiles, embedded coordinatewise
  struct Expected {
    Subset s, ass, core;
  };
  std::vector<Expected> expected;
  for (int i = 0; i < k; ++i) {
    MaxDenProfile fp = max_denominator_sets(structure->factors[i], a.limits);
    const std::vector<int>& proj = structure->projections[i];
    for (const DenRecord& rec : fp.records) {
      Expected e{Subset(n), Subset(n), Subset(n)};
      for (int x = 0; x < n; ++x) {
        if (rec.s.contains(proj[x])) e.s.insert(x);
        if (rec.ass.contains(proj[x])) e.ass.insert(x);
        bool zero_elsewhere = true;
        for (int j = 0; j < k; ++j)
          if (j != i && structure->projections[j][x] != 0) zero_elsewhere = false;
        if (rec.core.contains(proj[x]) && zero_elsewhere) e.core.insert(x);
      }
      expected.push_back(std::move(e));
    }
  }
  std::sort(expected.begin(), expected.end(),
            [](const Expected& x, const Expected& y) { return Subset::value_less(x.ass, y.ass); });

  const auto& records = a.profile().records;
  bool count_ok = records.size() == expected.size();
  cond(v, "count_matches", count_ok);
  bool records_ok = count_ok;
  if (count_ok)
    for (std::size_t i = 0; i < records.size(); ++i) {
      bool match = records[i].s == expected[i].s && records[i].ass == expected[i].ass &&
                   records[i].core == expected[i].core;
      cond(v, "record_" + std::to_string(i + 1) + "_matches", match);
      if (!match) records_ok = false;
    }
  v.lhs = v.rhs = records_ok;
  v.pass = records_ok;
  return v;
}

Verdict check_a26Mar14(Analysis& a) {
  Verdict v;
  v.applicable = true;
  bool locmax = is_left_localization_maximal(a.R, a.limits);
  bool wll = a.wll();
  cond(v, "lhs.localization_maximal", locmax);
  cond(v, "lhs.wll", wll);
  v.lhs = locmax && wll;

  bool local = is_local(a.R);
  bool rad_nil = jacobson_radical(a.R) == nil_radical(a.R, a.limits);
  cond(v, "rhs.local", local);
  cond(v, "rhs.rad_equals_nil_radical", rad_nil);
  v.rhs = local && rad_nil;
  v.pass = (v.lhs == v.rhs);
  return v;
}

Verdict check_b27Nov12(Analysis& a) {
  Verdict v;
  v.applicable = true;
  const auto& records = a.profile().records;
  bool nonempty = !records.empty();
  bool incomparable = true;
  for (std::size_t i = 0; i < records.size(); ++i)
    for (std::size_t j = 0; j < records.size(); ++j)
      if (i != j && records[i].ass.subset_of(records[j].ass)) incomparable = false;
  cond(v, "maxden_nonempty", nonempty);
  cond(v, "ass_ideals_incomparable", incomparable);
  v.lhs = v.rhs = nonempty && incomparable;
  v.pass = v.lhs;
  return v;
}

Verdict check_a14Dec12(Analysis& a) {
  Verdict v;
  v.applicable = true;
  QuotientRing q = quotient_ring(a.R, a.profile().ll_radical);
  bool quotient_ll_zero = max_denominator_sets(q.ring, a.limits).ll_radical.size() == 1;
  bool absorbs = true;
  for (int x : a.profile().localizable.members())
    for (int d : a.profile().ll_radical.members())
      if (!a.profile().localizable.contains(a.R.add(x, d))) absorbs = false;
  cond(v, "ll_of_quotient_is_zero", quotient_ll_zero);
  cond(v, "localizable_absorbs_ll", absorbs);
  v.lhs = v.rhs = quotient_ll_zero && absorbs;
  v.pass = v.lhs;
  return v;
}

Verdict check_c13Dec12(Analysis& a) {
  Verdict v;
  v.applicable = true;
  v.lhs = a.wll();
  cond(v, "lhs.wll", v.lhs);

  QuotientRing q = quotient_ring(a.R, a.profile().ll_radical);
  bool quotient_wll = is_weakly_left_localizable(q.ring, a.limits).value;
  bool ll_nil = a.profile().ll_radical.subset_of(nilpotent_elements(a.R));
  Subset image = image_subset(a.profile().localizable, q.projection, q.ring.order());
  bool image_eq = image == max_denominator_sets(q.ring, a.limits).localizable;
  cond(v, "rhs.quotient_wll", quotient_wll);
  cond(v, "rhs.ll_nil", ll_nil);
  cond(v, "rhs.localizable_image", image_eq);
  v.rhs = quotient_wll && ll_nil && image_eq;
  v.pass = (v.lhs == v.rhs);
  return v;
}

Verdict check_a20Apr14(Analysis& a) {
  Verdict v;
  v.applicable = true;
  const auto& records = a.profile().records;
  v.lhs = v.rhs = true;
  v.pass = true;
  for (std::size_t i = 0; i < records.size(); ++i) {
    bool loc_local = is_local(records[i].quotient);
    bool comp_ideal = is_ideal(a.R, records[i].s.complement());
    cond(v, "record_" + std::to_string(i + 1) + ".localization_local", loc_local);
    cond(v, "record_" + std::to_string(i + 1) + ".complement_is_ideal", comp_ideal);
    if (!loc_local) v.lhs = false;
    if (!comp_ideal) v.rhs = false;
    if (loc_local != comp_ideal) v.pass = false;
  }
  return v;
}

Verdict check_d28Mar14(Analysis& a) {
  Verdict v;
  Verdict premise = check_28Mar14(a);
  Subset cloc = a.profile().completely_localizable;
  v.applicable = premise.lhs && a.profile().ll_radical.subset_of(ass_set(a.R, cloc));
  if (!v.applicable) {
    v.pass = true;
    return v;
  }
  bool den = is_left_denominator(a.R, cloc).ok;
  bool ass_ll = ass_set(a.R, cloc) == a.profile().ll_radical;
  cond(v, "completely_localizable_is_denominator_set", den);
  cond(v, "ass_equals_ll", ass_ll);
  bool matches = false;
  if (den && ass_ll) {
    QuotientRing q = quotient_ring(a.R, a.profile().ll_radical);
    LocView view = localize(a.R, cloc);
    long long product_order = 1;
    for (const FiniteRing& f : central_idempotent_decomposition(q.ring).factors)
      product_order *= f.order();
    matches = view.den.quotient.same_tables(q.ring) && product_order == q.ring.order();
  }
  cond(v, "localization_matches_quotient_decomposition", matches);
  v.lhs = v.rhs = den && ass_ll && matches;
  v.pass = v.lhs;
  return v;
}

Verdict check_39finite(Analysis& a) {
  Verdict v;
  v.applicable = true;
  Witnessed ll = is_left_localizable_ring(a.R, a.limits);
  v.lhs = ll.value;
  cond(v, "lhs.left_localizable", v.lhs);
  if (!ll.value) v.witnesses.emplace_back("lhs.left_localizable", std::to_string(ll.witness));

  v.rhs = true;
  const Decomposition& dec = a.decomposition();
  for (std::size_t i = 0; i < dec.factors.size(); ++i) {
    const FiniteRing& f = dec.factors[i];
    bool division = units(f).size() == f.order() - 1;
    bool commutative = true;
    for (int x = 0; x < f.order() && commutative; ++x)
      for (int y = 0; y < x; ++y)
        if (f.mul(x, y) != f.mul(y, x)) {
          commutative = false;
          break;
        }
    bool field = division && commutative;
    cond(v, "rhs.factor_" + std::to_string(i + 1) + "_is_field", field);
    if (!field) v.rhs = false;
  }
  v.pass = (v.lhs == v.rhs);
  return v;
}

struct Entry {
  TheoremInfo info;
  Verdict (*check)(Analysis&);
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = {
      {{"thm-26Mar14",
        "weakly left localizable with zero localization radical, weakly localizable "
        "localizations and pairwise non-nil ass ideals iff a product of local rings "
        "whose radicals are nil",
        TheoremKind::equivalence, false},
       check_26Mar14},
      {{"thm-28Mar14",
        "weakly left localizable with surjective induced map on maximal denominator "
        "sets iff R/ll is a product of local rings with nil radicals, ll is nil and "
        "localizable elements map onto those of R/ll",
        TheoremKind::equivalence, false},
       check_28Mar14},
      {{"cor-b26Mar14",
        "under the local-product decomposition: regular elements are the completely "
        "localizable ones, nilpotents form the nil radical, maximal sets are unit "
        "preimages",
        TheoremKind::formula, true},
       check_b26Mar14},
      {{"thm-24Dec12",
        "weakly left localizable with rad equal to the nil radical iff a product of "
        "local rings whose radicals are nil",
        TheoremKind::equivalence, false},
       check_24Dec12},
      {{"cor-a24Dec12", "weakly left localizable iff a product of local rings",
        TheoremKind::equivalence, false},
       check_a24Dec12},
      {{"cor-b24Dec12",
        "for products of local rings: maximal denominator sets are unit-coordinate "
        "sets, cores are unit blocks, and {1, e_i} is a denominator set with the "
        "matching ass",
        TheoremKind::formula, true},
       check_b24Dec12},
      {{"thm-C2Dec12",
        "core formula: a single maximal set equals its core and the complement of "
        "the nil radical; with several, core_i = S_i intersected with the other ass "
        "ideals and is non-empty",
        TheoremKind::formula, true},
       check_C2Dec12},
      {{"thm-9Feb13", "a direct product is weakly left localizable iff every factor is",
        TheoremKind::equivalence, true},
       check_9Feb13},
      {{"thm-c26Dec12",
        "the maximal denominator sets of a product are the tagged disjoint union of "
        "the factor profiles, including ass and core shapes",
        TheoremKind::formula, true},
       check_c26Dec12},
      {{"lem-a26Mar14",
        "localization maximal and weakly left localizable iff local with rad equal "
        "to the nil radical",
        TheoremKind::equivalence, false},
       check_a26Mar14},
      {{"prop-b27Nov12",
        "maximal denominator sets exist and their ass ideals are pairwise "
        "incomparable",
        TheoremKind::formula, false},
       check_b27Nov12},
      {{"prop-a14Dec12",
        "R/ll has zero localization radical and localizable elements absorb ll "
        "additively",
        TheoremKind::formula, false},
       check_a14Dec12},
      {{"prop-c13Dec12",
        "weakly left localizable iff R/ll is, ll is nil and localizable elements map "
        "onto those of R/ll",
        TheoremKind::equivalence, false},
       check_c13Dec12},
      {{"lem-a20Apr14",
        "a maximal localization is local iff the complement of its denominator set "
        "is an ideal",
        TheoremKind::equivalence, false},
       check_a20Apr14},
      {{"cor-d28Mar14",
        "completely localizable elements form a denominator set with ass = ll whose "
        "localization is the quotient by ll",
        TheoremKind::formula, true},
       check_d28Mar14},
      {{"thm-3.9-finite", "left localizable iff a product of finite fields",
        TheoremKind::equivalence, false},
       check_39finite},
  };
  return table;
}

}  // namespace

const std::vector<TheoremInfo>& theorem_registry() {
  static const std::vector<TheoremInfo> infos = [] {
    std::vector<TheoremInfo> out;
    for (const Entry& e : entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

std::vector<std::pair<std::string, std::string>> list_theorems() {
  std::vector<std::pair<std::string, std::string>> out;
  for (const Entry& e : entries()) out.emplace_back(e.info.id, e.info.description);
  return out;
}

Verdict verify_theorem(const FiniteRing& R, const std::string& id, const Limits& limits) {
  for (const Entry& e : entries())
    if (e.info.id == id) {
      Analysis a{R, limits};
      Verdict v = e.check(a);
      v.id = id;
      v.ring_label = R.label();
      return v;
    }
  throw Error(errc::unknown_theorem, "unknown theorem id: " + id);
}

std::vector<Verdict> verify_all(const FiniteRing& R, const Limits& limits) {
  Analysis a{R, limits};
  std::vector<Verdict> out;
  for (const Entry& e : entries()) {
    Verdict v = e.check(a);
    v.id = e.info.id;
    v.ring_label = R.label();
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace ringlab
