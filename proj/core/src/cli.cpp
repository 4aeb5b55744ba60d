#include "ringlab/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "ringlab/io.hpp"

namespace ringlab::cli {

namespace {

constexpr const char* usage_text =
    "usage: ringlab <command> [options]\n"
    "\n"
    "commands:\n"
    "  analyze <src> [--format text|record]   classification report\n"
    "  maxden <src> [--oracle]                maximal denominator sets\n"
    "  verify <src> (--theorem <id> | --all)  theorem checks\n"
    "  verify-catalog                         all theorems on all catalog rings\n"
    "  oracle <src>                           fraction oracle vs localization\n"
    "  catalog (list | show <name>)           built-in rings\n"
    "\n"
    "options:\n"
    "  --format text|record    output format (default text)\n"
    "  --max-order N           construction bound (default 4096)\n"
    "  --oracle-max-order N    exhaustive oracle bound (default 16)\n"
    "  --max-ideals N          ideal enumeration bound (default 1000000)\n";

struct Invocation {
  std::string command;
  std::vector<std::string> positional;
  io::Format format = io::Format::text;
  bool oracle = false;
  bool all = false;
  std::string theorem;
  Limits limits;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

long long parse_number(const std::string& flag, const std::string& value) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(value, &used);
    if (used != value.size() || v <= 0) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw UsageError(flag + " needs a positive integer, got '" + value + "'");
  }
}

Invocation parse_args(const std::vector<std::string>& args) {
  if (args.empty()) throw UsageError("no command given");
  Invocation inv;
  inv.command = args[0];
  for (std::size_t i = 1; i < args.size(); ++i) {
    const std::string& arg = args[i];
    auto value_of = [&](const std::string& flag) -> std::string {
      if (++i >= args.size()) throw UsageError(flag + " needs a value");
      return args[i];
    };
    if (arg == "--format")
      inv.format = io::parse_format(value_of(arg));
    else if (arg == "--oracle")
      inv.oracle = true;
    else if (arg == "--all")
      inv.all = true;
    else if (arg == "--theorem")
      inv.theorem = value_of(arg);
    else if (arg == "--max-order")
      inv.limits.max_order = int(parse_number(arg, value_of(arg)));
    else if (arg == "--oracle-max-order")
      inv.limits.oracle_max_order = int(parse_number(arg, value_of(arg)));
    else if (arg == "--max-ideals")
      inv.limits.max_ideals = parse_number(arg, value_of(arg));
    else if (arg.rfind("--", 0) == 0)
      throw UsageError("unknown option: " + arg);
    else
      inv.positional.push_back(arg);
  }
  return inv;
}

FiniteRing ring_from_source(const Invocation& inv) {
  if (inv.positional.size() != 1)
    throw UsageError("expected exactly one ring source");
  return io::build(inv.positional[0], inv.limits);
}

int cmd_analyze(const Invocation& inv, std::ostream& out) {
  FiniteRing ring = ring_from_source(inv);
  out << io::emit(classification_report(ring, inv.limits), inv.format);
  return exit_ok;
}

int cmd_maxden(const Invocation& inv, std::ostream& out) {
  FiniteRing ring = ring_from_source(inv);
  MaxDenProfile profile = max_denominator_sets(ring, inv.limits);
  out << io::emit_maxden(ring, profile, inv.format);
  if (!inv.oracle) return exit_ok;

  std::vector<Subset> all_sets = exhaustive_denominator_sets(ring, inv.limits);
  std::vector<Subset> maximal;
  for (const Subset& s : all_sets) {
    bool is_max = true;
    for (const Subset& t : all_sets)
      if (s != t && s.subset_of(t)) is_max = false;
    if (is_max) maximal.push_back(s);
  }
  std::vector<Subset> from_profile;
  for (const DenRecord& rec : profile.records) from_profile.push_back(rec.s);
  std::sort(maximal.begin(), maximal.end(), Subset::canonical_less);
  std::sort(from_profile.begin(), from_profile.end(), Subset::canonical_less);
  bool match = maximal == from_profile;

  if (inv.format == io::Format::record) {
    out << "oracle.count = " << all_sets.size() << "\n";
    out << "oracle.maximal_match = " << (match ? "true" : "false") << "\n";
  } else {
    out << "oracle: " << all_sets.size()
        << " denominator sets; maximal sets match: " << (match ? "yes" : "no") << "\n";
  }
  if (!match) {
    for (const Subset& s : maximal) out << "oracle.maximal = " << s.brace_list() << "\n";
    return exit_verdict;
  }
  return exit_ok;
}

int cmd_verify(const Invocation& inv, std::ostream& out) {
  FiniteRing ring = ring_from_source(inv);
  if (inv.all == !inv.theorem.empty())
    throw UsageError("verify needs exactly one of --all or --theorem <id>");
  std::vector<Verdict> verdicts;
  if (inv.all)
    verdicts = verify_all(ring, inv.limits);
  else
    verdicts.push_back(verify_theorem(ring, inv.theorem, inv.limits));
  out << io::emit(verdicts, inv.format);
  for (const Verdict& v : verdicts)
    if (!v.pass) return exit_verdict;
  return exit_ok;
}

int cmd_verify_catalog(const Invocation& inv, std::ostream& out) {
  if (!inv.positional.empty()) throw UsageError("verify-catalog takes no ring source");
  bool all_pass = true;
  int rings = 0, checks = 0;
  for (const std::string& name : io::catalog_names()) {
    FiniteRing ring = io::build("@" + name, inv.limits);
    std::vector<Verdict> verdicts = verify_all(ring, inv.limits);
    if (inv.format == io::Format::record) out << "ring.label = " << name << "\n";
    out << io::emit(verdicts, inv.format);
    ++rings;
    for (const Verdict& v : verdicts) {
      ++checks;
      if (!v.pass) all_pass = false;
    }
  }
  if (inv.format == io::Format::text)
    out << "verified " << rings << " rings, " << checks << " checks: "
        << (all_pass ? "all pass" : "FAILURES") << "\n";
  return all_pass ? exit_ok : exit_verdict;
}

int cmd_oracle(const Invocation& inv, std::ostream& out) {
  FiniteRing ring = ring_from_source(inv);
  std::vector<Subset> sets = exhaustive_denominator_sets(ring, inv.limits);
  out << "ring " << ring.label() << " (order " << ring.order() << ")\n";
  out << "denominator sets: " << sets.size() << "\n";
  int diffs = 0;
  for (const Subset& s : sets) {
    LocView view = localize(ring, s);
    bool ok = true;
    std::string note;
    try {
      FiniteRing fraction = fraction_oracle(ring, s, inv.limits);
      if (fraction.order() != view.den.quotient.order()) ok = false;
    } catch (const Error& e) {
      if (e.code() != errc::invariant_failure) throw;
      ok = false;
      note = e.what();
    }
    out << "  S = " << s.brace_list() << "  ass = " << view.den.ass.brace_list()
        << "  localization order " << view.den.quotient.order()
        << "  fraction ring isomorphic: " << (ok ? "yes" : "no") << "\n";
    if (!ok) {
      ++diffs;
      if (!note.empty()) out << "    " << note << "\n";
    }
  }
  out << "oracle diffs: " << diffs << "\n";
  return diffs == 0 ? exit_ok : exit_verdict;
}

int cmd_catalog(const Invocation& inv, std::ostream& out) {
  if (inv.positional.empty()) throw UsageError("catalog needs 'list' or 'show <name>'");
  const std::string& sub = inv.positional[0];
  if (sub == "list") {
    if (inv.positional.size() != 1) throw UsageError("catalog list takes no arguments");
    for (const std::string& name : io::catalog_names()) out << name << "\n";
    return exit_ok;
  }
  if (sub == "show") {
    if (inv.positional.size() != 2) throw UsageError("catalog show needs a name");
    FiniteRing ring = io::build("@" + inv.positional[1], inv.limits);
    out << "# " << inv.positional[1] << " (order " << ring.order() << ")\n";
    out << io::emit_table(ring);
    return exit_ok;
  }
  throw UsageError("unknown catalog subcommand: " + sub);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    Invocation inv = parse_args(args);
    if (inv.command == "analyze") return cmd_analyze(inv, out);
    if (inv.command == "maxden") return cmd_maxden(inv, out);
    if (inv.command == "verify") return cmd_verify(inv, out);
    if (inv.command == "verify-catalog") return cmd_verify_catalog(inv, out);
    if (inv.command == "oracle") return cmd_oracle(inv, out);
    if (inv.command == "catalog") return cmd_catalog(inv, out);
    if (inv.command == "--help" || inv.command == "help") {
      out << usage_text;
      return exit_ok;
    }
    throw UsageError("unknown command: " + inv.command);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << usage_text;
    return exit_input;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.code()) {
      case errc::order_bound_exceeded:
      case errc::ideal_bound_exceeded:
      case errc::oracle_bound_exceeded:
        return exit_bound;
      case errc::invariant_failure:
        return exit_verdict;
      default:
        return exit_input;
    }
  }
}

}  // namespace ringlab::cli
