#include "ringlab/classify.hpp"

namespace ringlab {

Witnessed is_weakly_left_localizable(const FiniteRing& R, const Limits& limits) {
  MaxDenProfile profile = max_denominator_sets(R, limits);
  Subset nil = nilpotent_elements(R);
  // a localizable element is a unit in some localization, hence non-nilpotent
  if (!(profile.localizable & nil).empty())
    throw Error(errc::invariant_failure, "localizable element is nilpotent");
  Subset covered = profile.localizable | nil;
  for (int x = 0; x < R.order(); ++x)
    if (!covered.contains(x)) return {false, x};
  return {true, -1};
}

Witnessed is_left_localizable_ring(const FiniteRing& R, const Limits& limits) {
  MaxDenProfile profile = max_denominator_sets(R, limits);
  for (int x = 1; x < R.order(); ++x)
    if (!profile.localizable.contains(x)) return {false, x};
  return {true, -1};
}

bool is_left_localization_maximal(const FiniteRing& R, const Limits& limits) {
  for (const Subset& ideal : enumerate_ideals(R, limits)) {
    if (ideal.contains(R.one()) || ideal.size() == 1) continue;
    if (is_localizable_ideal(R, ideal)) return false;
  }
  return true;
}

bool nil_modulo_check(const FiniteRing& R, const Subset& a, const Subset& b) {
  QuotientRing q = quotient_ring(R, b);
  for (int x : a.members())
    if (!is_nilpotent(q.ring, q.projection[x])) return false;
  return true;
}

Report classification_report(const FiniteRing& R, const Limits& limits) {
  Report rep;
  rep.label = R.label();
  rep.order = R.order();
  rep.units_count = units(R).size();
  rep.nilpotents = nilpotent_elements(R);
  rep.nil_rad = nil_radical(R, limits);
  rep.jacobson = jacobson_radical(R);
  rep.ideal_count = (long long)enumerate_ideals(R, limits).size();
  rep.local = is_local(R);

  Decomposition dec = central_idempotent_decomposition(R);
  rep.idempotents = dec.idempotents;
  for (const FiniteRing& f : dec.factors) {
    rep.factor_orders.push_back(f.order());
    rep.factor_local.push_back(is_local(f));
  }

  MaxDenProfile profile = max_denominator_sets(R, limits);
  rep.maxden_count = int(profile.records.size());
  for (const DenRecord& rec : profile.records) {
    rep.ass_sizes.push_back(rec.ass.size());
    rep.core_sizes.push_back(rec.core.size());
  }
  rep.ll_size = profile.ll_radical.size();
  rep.localizable_size = profile.localizable.size();
  rep.completely_localizable_size = profile.completely_localizable.size();

  rep.left_localizable = is_left_localizable_ring(R, limits).value;
  rep.weakly_left_localizable = is_weakly_left_localizable(R, limits).value;
  rep.localization_maximal = is_left_localization_maximal(R, limits);

  bool counted_wll =
      rep.localizable_size + rep.nilpotents.size() == rep.order;
  if (counted_wll != rep.weakly_left_localizable)
    throw Error(errc::invariant_failure, "report fields are inconsistent");
  return rep;
}

}  // namespace ringlab
