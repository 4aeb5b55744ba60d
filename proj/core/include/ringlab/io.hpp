#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ringlab/classify.hpp"
#include "ringlab/localization.hpp"
#include "ringlab/ring.hpp"
#include "ringlab/theorems.hpp"

namespace ringlab::io {

/// Ring expression grammar (whitespace-insensitive, decimal integers):
///
///   expr := "Z" int
///         | "M" int "(" expr ")"
///         | "T" int "(" expr ")"
///         | "P" "(" expr { "," expr } ")"
///         | "Q" "(" expr ";" int { "," int } ")"
///         | "@" name
///         | "table:" path
RingExpr parse_ring_expr(std::string_view text);

/// Table file format, line oriented; "#" starts a comment:
///
///   order n
///   one k
///   add
///   <n rows of n indices>
///   mul
///   <n rows of n indices>
RingExpr load_table_text(std::string_view text);
RingExpr load_table_file(const std::string& path);

/// Built-in catalog.  Names are frozen identifiers.
const std::vector<std::string>& catalog_names();
RingExpr catalog_lookup(const std::string& name);
CatalogResolver catalog_resolver();

/// Parse + construct, resolving catalog references; catalog rings keep the
/// catalog name as their label.
FiniteRing build(std::string_view source, const Limits& limits = {});

enum class Format { text, record };
Format parse_format(const std::string& name);  // "text" | "record"

/// "record" is line-oriented "key = value"; subsets render as sorted brace
/// lists; output is byte-deterministic for fixed input.
std::string emit(const Report& report, Format format);
std::string emit(const std::vector<Verdict>& verdicts, Format format);
std::string emit_maxden(const FiniteRing& R, const MaxDenProfile& profile,
                        Format format);

/// The ring's tables in the table file format; reparsing yields an
/// identical ring.
std::string emit_table(const FiniteRing& R);

}  // namespace ringlab::io
