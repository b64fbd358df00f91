#include "bhdeco/numfmt.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <ostream>

namespace bhdeco::numfmt {

std::string sci(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    std::array<char, 48> buf{};
    const auto res =
        std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::scientific, 8);
    return std::string(buf.data(), res.ptr);
}

double round_sig9(double v) {
    if (!std::isfinite(v)) {
        return v;
    }
    const std::string s = sci(v);
    double out = 0.0;
    std::from_chars(s.data(), s.data() + s.size(), out);
    return out;
}

namespace {

std::string cell_text(const Cell& cell) {
    if (const auto* d = std::get_if<double>(&cell)) {
        return sci(*d);
    }
    if (const auto* s = std::get_if<std::string>(&cell)) {
        return *s;
    }
    return {};
}

}  // namespace

nlohmann::ordered_json cell_to_json(const Cell& cell) {
    if (const auto* d = std::get_if<double>(&cell)) {
        if (!std::isfinite(*d)) {
            return sci(*d);
        }
        return round_sig9(*d);
    }
    if (const auto* s = std::get_if<std::string>(&cell)) {
        return *s;
    }
    return nullptr;
}

void write_csv(std::ostream& out, const Table& table) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        out << (i ? "," : "") << table.columns[i];
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : "") << cell_text(row[i]);
        }
        out << '\n';
    }
    for (const auto& [key, value] : table.summary) {
        out << "# " << key << '=' << cell_text(value) << '\n';
    }
}

void write_json(std::ostream& out, const Table& table, nlohmann::ordered_json meta) {
    if (!table.summary.empty()) {
        nlohmann::ordered_json summary = nlohmann::ordered_json::object();
        for (const auto& [key, value] : table.summary) {
            summary[key] = cell_to_json(value);
        }
        meta["summary"] = summary;
    }
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size() && i < table.columns.size(); ++i) {
            obj[table.columns[i]] = cell_to_json(row[i]);
        }
        rows.push_back(std::move(obj));
    }
    nlohmann::ordered_json doc;
    doc["meta"] = std::move(meta);
    doc["rows"] = std::move(rows);
    out << doc.dump(2) << '\n';
}

}  // namespace bhdeco::numfmt
