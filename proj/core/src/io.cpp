#include "ringlab/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace ringlab::io {

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    std::string msg = "parse error at offset " + std::to_string(pos + 1) + ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) msg += expected.size() == 2 && i == 1 ? " or " : ", ";
      msg += expected[i];
    }
    throw ParseError(int(pos + 1), std::move(expected), std::move(msg));
  }

  bool peek_is(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }

  void expect(char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c) fail({std::string("'") + c + "'"});
    ++pos;
  }

  int parse_int() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail({"integer"});
    long long value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      if (value > 1000000000) fail({"smaller integer"});
      ++pos;
    }
    return int(value);
  }

  bool try_keyword(std::string_view kw) {
    skip_ws();
    if (text.substr(pos, kw.size()) == kw) {
      pos += kw.size();
      return true;
    }
    return false;
  }

  RingExpr parse_expr() {
    skip_ws();
    if (pos >= text.size())
      fail({"'Z'", "'M'", "'T'", "'P'", "'Q'", "'@'", "'table:'"});
    if (try_keyword("table:")) {
      skip_ws();
      std::size_t end = text.size();
      while (end > pos && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
      if (end == pos) fail({"path"});
      std::string path(text.substr(pos, end - pos));
      pos = end;
      return load_table_file(path);
    }
    char c = text[pos];
    switch (c) {
      case 'Z': {
        ++pos;
        return RingExpr::zmod(parse_int());
      }
      case 'M':
      case 'T': {
        ++pos;
        int k = parse_int();
        expect('(');
        RingExpr base = parse_expr();
        expect(')');
        return c == 'M' ? RingExpr::matrix(k, std::move(base))
                        : RingExpr::triangular(k, std::move(base));
      }
      case 'P': {
        ++pos;
        expect('(');
        std::vector<RingExpr> factors;
        factors.push_back(parse_expr());
        if (!peek_is(',')) fail({"','"});
        while (peek_is(',')) {
          ++pos;
          factors.push_back(parse_expr());
        }
        expect(')');
        return RingExpr::product(std::move(factors));
      }
      case 'Q': {
        ++pos;
        expect('(');
        RingExpr base = parse_expr();
        expect(';');
        std::vector<int> gens;
        gens.push_back(parse_int());
        while (peek_is(',')) {
          ++pos;
          gens.push_back(parse_int());
        }
        expect(')');
        return RingExpr::quotient(std::move(base), std::move(gens));
      }
      case '@': {
        ++pos;
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
          ++pos;
        if (pos == start) fail({"catalog name"});
        return RingExpr::catalog(std::string(text.substr(start, pos - start)));
      }
      default:
        fail({"'Z'", "'M'", "'T'", "'P'", "'Q'", "'@'", "'table:'"});
    }
  }
};

}  // namespace

RingExpr parse_ring_expr(std::string_view text) {
  Parser p{text};
  RingExpr expr = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail({"end of input"});
  return expr;
}

namespace {

/// Strips a "#" comment and surrounding whitespace.
std::string clean_line(std::string line) {
  std::size_t hash = line.find('#');
  if (hash != std::string::npos) line.erase(hash);
  std::size_t begin = line.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  std::size_t end = line.find_last_not_of(" \t\r");
  return line.substr(begin, end - begin + 1);
}

struct TableReader {
  std::vector<std::pair<int, std::string>> lines;  // (line number, content)
  std::size_t next = 0;

  explicit TableReader(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
      ++number;
      std::string cleaned = clean_line(raw);
      if (!cleaned.empty()) lines.emplace_back(number, cleaned);
    }
  }

  std::pair<int, std::string> take(const std::string& what) {
    if (next >= lines.size())
      throw FormatError(lines.empty() ? 1 : lines.back().first,
                        "unexpected end of table file, expected " + what);
    return lines[next++];
  }
};

int parse_header_int(const std::pair<int, std::string>& line, const std::string& key) {
  std::istringstream in(line.second);
  std::string word;
  long long value = -1;
  if (!(in >> word >> value) || word != key || value < 0 || (in >> word))
    throw FormatError(line.first, "expected '" + key + " <integer>'");
  return int(value);
}

std::vector<int> parse_row(const std::pair<int, std::string>& line, int n) {
  std::istringstream in(line.second);
  std::vector<int> row;
  long long v;
  while (in >> v) {
    if (v < 0 || v >= n)
      throw FormatError(line.first, "table entry " + std::to_string(v) + " out of range");
    row.push_back(int(v));
  }
  if (!in.eof())
    throw FormatError(line.first, "malformed table row");
  if (int(row.size()) != n)
    throw FormatError(line.first, "expected " + std::to_string(n) + " entries per row");
  return row;
}

}  // namespace

RingExpr load_table_text(std::string_view text) {
  TableReader reader(text);
  TableData data;
  data.order = parse_header_int(reader.take("'order n'"), "order");
  if (data.order < 2)
    throw FormatError(reader.lines.empty() ? 1 : reader.lines[0].first,
                      "order must be at least 2");
  data.one = parse_header_int(reader.take("'one k'"), "one");

  for (const char* section : {"add", "mul"}) {
    auto header = reader.take(std::string("'") + section + "'");
    if (header.second != section)
      throw FormatError(header.first, std::string("expected '") + section + "' header");
    std::vector<int>& table = section[0] == 'a' ? data.add : data.mul;
    for (int i = 0; i < data.order; ++i) {
      std::vector<int> row = parse_row(reader.take("table row"), data.order);
      table.insert(table.end(), row.begin(), row.end());
    }
  }
  if (reader.next != reader.lines.size())
    throw FormatError(reader.lines[reader.next].first, "trailing content after tables");
  return RingExpr::table_ring(std::move(data));
}

RingExpr load_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(0, "cannot read table file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_table_text(buffer.str());
}

namespace {

RingExpr gf4_expr() {
  TableData d;
  d.order = 4;
  d.one = 1;
  d.add = {0, 1, 2, 3, 1, 0, 3, 2, 2, 3, 0, 1, 3, 2, 1, 0};
  d.mul = {0, 0, 0, 0, 0, 1, 2, 3, 0, 2, 3, 1, 0, 3, 1, 2};
  return RingExpr::table_ring(std::move(d));
}

const std::vector<std::pair<std::string, RingExpr (*)()>>& catalog_table() {
  static const std::vector<std::pair<std::string, RingExpr (*)()>> table = {
      {"z4", [] { return RingExpr::zmod(4); }},
      {"z6", [] { return RingExpr::zmod(6); }},
      {"z8", [] { return RingExpr::zmod(8); }},
      {"z12", [] { return RingExpr::zmod(12); }},
      {"f2", [] { return RingExpr::zmod(2); }},
      {"f3", [] { return RingExpr::zmod(3); }},
      {"gf4", gf4_expr},
      {"m2f2", [] { return RingExpr::matrix(2, RingExpr::zmod(2)); }},
      {"t2f2", [] { return RingExpr::triangular(2, RingExpr::zmod(2)); }},
      {"t3f2", [] { return RingExpr::triangular(3, RingExpr::zmod(2)); }},
      {"z4xz3",
       [] {
         std::vector<RingExpr> f;
         f.push_back(RingExpr::zmod(4));
         f.push_back(RingExpr::zmod(3));
         return RingExpr::product(std::move(f));
       }},
      {"z4xm2f2",
       [] {
         std::vector<RingExpr> f;
         f.push_back(RingExpr::zmod(4));
         f.push_back(RingExpr::matrix(2, RingExpr::zmod(2)));
         return RingExpr::product(std::move(f));
       }},
      {"z6xz4",
       [] {
         std::vector<RingExpr> f;
         f.push_back(RingExpr::zmod(6));
         f.push_back(RingExpr::zmod(4));
         return RingExpr::product(std::move(f));
       }},
      {"t2f2xz3",
       [] {
         std::vector<RingExpr> f;
         f.push_back(RingExpr::triangular(2, RingExpr::zmod(2)));
         f.push_back(RingExpr::zmod(3));
         return RingExpr::product(std::move(f));
       }},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, _] : catalog_table()) out.push_back(name);
    return out;
  }();
  return names;
}

RingExpr catalog_lookup(const std::string& name) {
  for (const auto& [entry, make] : catalog_table())
    if (entry == name) return make();
  throw Error(errc::unknown_catalog_name, "unknown catalog name: " + name);
}

CatalogResolver catalog_resolver() {
  return [](const std::string& name) { return catalog_lookup(name); };
}

FiniteRing build(std::string_view source, const Limits& limits) {
  RingExpr expr = parse_ring_expr(source);
  CatalogResolver resolver = catalog_resolver();
  return construct(expr, limits, &resolver);
}

Format parse_format(const std::string& name) {
  if (name == "text") return Format::text;
  if (name == "record") return Format::record;
  throw Error(errc::parse_error, "unknown format: " + name + " (expected text or record)");
}

namespace {

const char* bool_record(bool b) { return b ? "true" : "false"; }
const char* bool_text(bool b) { return b ? "yes" : "no"; }

template <typename T>
std::string bracket_list(const std::vector<T>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    if constexpr (std::is_same_v<T, bool>)
      out += bool_record(values[i]);
    else
      out += std::to_string(values[i]);
  }
  return out + "]";
}

std::string int_set(const std::vector<int>& values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(values[i]);
  }
  return out + "}";
}

}  // namespace

std::string emit(const Report& r, Format format) {
  std::ostringstream out;
  if (format == Format::record) {
    out << "ring.label = " << r.label << "\n";
    out << "ring.order = " << r.order << "\n";
    out << "units.count = " << r.units_count << "\n";
    out << "nil.set = " << r.nilpotents.brace_list() << "\n";
    out << "nilradical.set = " << r.nil_rad.brace_list() << "\n";
    out << "jacobson.set = " << r.jacobson.brace_list() << "\n";
    out << "ideals.count = " << r.ideal_count << "\n";
    out << "local = " << bool_record(r.local) << "\n";
    out << "semilocal = " << bool_record(r.semilocal) << "\n";
    out << "decomp.count = " << r.idempotents.size() << "\n";
    out << "decomp.idempotents = " << int_set(r.idempotents) << "\n";
    out << "decomp.factor_orders = " << bracket_list(r.factor_orders) << "\n";
    out << "decomp.factor_local = " << bracket_list(r.factor_local) << "\n";
    out << "maxden.count = " << r.maxden_count << "\n";
    out << "maxden.ass_sizes = " << bracket_list(r.ass_sizes) << "\n";
    out << "maxden.core_sizes = " << bracket_list(r.core_sizes) << "\n";
    out << "ll.size = " << r.ll_size << "\n";
    out << "loc.size = " << r.localizable_size << "\n";
    out << "cloc.size = " << r.completely_localizable_size << "\n";
    out << "class.left_localizable = " << bool_record(r.left_localizable) << "\n";
    out << "class.wll = " << bool_record(r.weakly_left_localizable) << "\n";
    out << "class.localization_maximal = " << bool_record(r.localization_maximal) << "\n";
  } else {
    out << "ring " << r.label << " (order " << r.order << ")\n";
    out << "units: " << r.units_count << "\n";
    out << "nilpotents: " << r.nilpotents.brace_list() << "\n";
    out << "nil radical: " << r.nil_rad.brace_list() << "\n";
    out << "jacobson radical: " << r.jacobson.brace_list() << "\n";
    out << "ideals: " << r.ideal_count << "\n";
    out << "local: " << bool_text(r.local) << "  (semilocal: " << bool_text(r.semilocal)
        << ")\n";
    out << "decomposition: " << r.idempotents.size() << " factor(s); idempotents "
        << int_set(r.idempotents) << "; orders " << bracket_list(r.factor_orders)
        << "; local " << bracket_list(r.factor_local) << "\n";
    out << "maximal denominator sets: " << r.maxden_count << "; ass sizes "
        << bracket_list(r.ass_sizes) << "; core sizes " << bracket_list(r.core_sizes)
        << "; ll size " << r.ll_size << "\n";
    out << "localizable elements: " << r.localizable_size
        << "; completely localizable: " << r.completely_localizable_size << "\n";
    out << "left localizable ring: " << bool_text(r.left_localizable) << "\n";
    out << "weakly left localizable: " << bool_text(r.weakly_left_localizable) << "\n";
    out << "left localization maximal: " << bool_text(r.localization_maximal) << "\n";
  }
  return out.str();
}

std::string emit(const std::vector<Verdict>& verdicts, Format format) {
  std::ostringstream out;
  for (const Verdict& v : verdicts) {
    if (format == Format::record) {
      out << v.id << ".applicable = " << bool_record(v.applicable) << "\n";
      out << v.id << ".lhs = " << bool_record(v.lhs) << "\n";
      out << v.id << ".rhs = " << bool_record(v.rhs) << "\n";
      out << v.id << ".pass = " << bool_record(v.pass) << "\n";
      for (const auto& [name, value] : v.conditions)
        out << v.id << ".cond." << name << " = " << bool_record(value) << "\n";
      for (const auto& [name, witness] : v.witnesses)
        out << v.id << ".witness." << name << " = " << witness << "\n";
    } else {
      out << v.id << " [" << v.ring_label << "] " << (v.pass ? "PASS" : "FAIL");
      if (!v.applicable)
        out << " (not applicable)";
      else
        out << " (lhs=" << bool_record(v.lhs) << " rhs=" << bool_record(v.rhs) << ")";
      out << "\n";
      if (!v.pass) {
        for (const auto& [name, value] : v.conditions)
          out << "  " << name << " = " << bool_record(value) << "\n";
        for (const auto& [name, witness] : v.witnesses)
          out << "  witness " << name << " = " << witness << "\n";
      }
    }
  }
  return out.str();
}

std::string emit_maxden(const FiniteRing& R, const MaxDenProfile& profile, Format format) {
  std::ostringstream out;
  if (format == Format::record) {
    out << "ring.label = " << R.label() << "\n";
    out << "ring.order = " << R.order() << "\n";
    out << "maxden.count = " << profile.records.size() << "\n";
    for (std::size_t i = 0; i < profile.records.size(); ++i) {
      const DenRecord& rec = profile.records[i];
      std::string key = "maxden." + std::to_string(i + 1);
      out << key << ".S = " << rec.s.brace_list() << "\n";
      out << key << ".ass = " << rec.ass.brace_list() << "\n";
      out << key << ".core = " << rec.core.brace_list() << "\n";
      out << key << ".saturated = " << bool_record(rec.saturated) << "\n";
      out << key << ".quotient_order = " << rec.quotient.order() << "\n";
    }
    out << "ll.set = " << profile.ll_radical.brace_list() << "\n";
    out << "loc.set = " << profile.localizable.brace_list() << "\n";
    out << "cloc.set = " << profile.completely_localizable.brace_list() << "\n";
  } else {
    out << "ring " << R.label() << " (order " << R.order() << ")\n";
    out << "maximal denominator sets: " << profile.records.size() << "\n";
    for (std::size_t i = 0; i < profile.records.size(); ++i) {
      const DenRecord& rec = profile.records[i];
      out << "  S" << i + 1 << ": S = " << rec.s.brace_list()
          << "  ass = " << rec.ass.brace_list() << "  core = " << rec.core.brace_list()
          << "  localization order " << rec.quotient.order() << "\n";
    }
    out << "ll radical: " << profile.ll_radical.brace_list() << "\n";
    out << "localizable: " << profile.localizable.brace_list() << "\n";
    out << "completely localizable: " << profile.completely_localizable.brace_list()
        << "\n";
  }
  return out.str();
}

std::string emit_table(const FiniteRing& R) {
  std::ostringstream out;
  int n = R.order();
  out << "order " << n << "\n";
  out << "one " << R.one() << "\n";
  for (const char* section : {"add", "mul"}) {
    out << section << "\n";
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (b) out << " ";
        out << (section[0] == 'a' ? R.add(a, b) : R.mul(a, b));
      }
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace ringlab::io
