#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace bhdeco::numfmt {

/// Scientific notation, 9 significant digits, '.' decimal point regardless of
/// locale. Infinities print as "inf" / "-inf".
std::string sci(double v);

/// v rounded to the 9 significant digits `sci` would print.
double round_sig9(double v);

/// A table cell: number, text, or empty.
using Cell = std::variant<std::monostate, double, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    /// Trailing "# key=value" lines in CSV; merged into meta for JSON.
    std::vector<std::pair<std::string, Cell>> summary;
};

/// Header row, then one row per record. LF line endings.
void write_csv(std::ostream& out, const Table& table);

/// {"meta": meta (+ "summary"), "rows": [{column: value, ...}, ...]}. Numbers
/// are rounded to the CSV precision so both formats carry identical values;
/// non-finite numbers become the strings "inf"/"-inf"/"nan".
void write_json(std::ostream& out, const Table& table, nlohmann::ordered_json meta);

nlohmann::ordered_json cell_to_json(const Cell& cell);

}  // namespace bhdeco::numfmt
