#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fcaerr/context.hpp"
#include "fcaerr/errors.hpp"

namespace fcaerr {

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// RFC-4180-style CSV: quoted fields, "" escapes, CR/LF tolerant, first row
/// is the header. Ragged rows are rejected with their location.
inline CsvTable parse_csv(std::string_view text) {
    // strip a UTF-8 BOM
    if (text.size() >= 3 && text.substr(0, 3) == "\xef\xbb\xbf") text.remove_prefix(3);
    CsvTable table;
    std::vector<std::string> record;
    std::string field;
    bool quoted = false, any = false;
    std::size_t line = 1;
    auto end_field = [&] {
        record.push_back(std::move(field));
        field.clear();
    };
    auto end_record = [&] {
        end_field();
        if (table.header.empty()) {
            table.header = std::move(record);
        } else {
            if (record.size() != table.header.size())
                throw ParseError("csv line " + std::to_string(line) + ": expected " +
                                 std::to_string(table.header.size()) + " fields, got " +
                                 std::to_string(record.size()));
            table.rows.push_back(std::move(record));
        }
        record.clear();
        any = false;
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
                if (c == '\n') ++line;
            }
        } else if (c == '"') {
            quoted = true;
            any = true;
        } else if (c == ',') {
            end_field();
            any = true;
        } else if (c == '\n') {
            if (any || !field.empty() || !record.empty()) end_record();
            ++line;
        } else if (c != '\r') {
            field += c;
            any = true;
        }
    }
    if (quoted) throw ParseError("csv: unterminated quote");
    if (any || !field.empty() || !record.empty()) end_record();
    if (table.header.empty()) throw ParseError("csv: missing header row");
    return table;
}

enum class ScalingKind { Nominal, Ordinal, Interval, Id };

struct ColumnScaling {
    ScalingKind kind = ScalingKind::Nominal;
    std::vector<double> breaks;  // interval only; ascending, >= 2 entries
};

/// Per-column scaling choices. Columns not mentioned scale nominally. At most
/// one column may be "id": it supplies object names instead of attributes
/// (duplicates are suffixed "#2", "#3", ...). Without an id column objects
/// are numbered "r1".."rN".
struct ScalingSpec {
    std::map<std::string, ColumnScaling> columns;

    static ScalingSpec from_json(const nlohmann::json& j) {
        ScalingSpec spec;
        if (!j.is_object()) throw ParseError("scaling spec: expected a JSON object");
        for (auto it = j.begin(); it != j.end(); ++it) {
            const nlohmann::json& v = it.value();
            if (!v.is_object() || !v.contains("kind"))
                throw ParseError("scaling spec: column '" + it.key() + "' needs a \"kind\"");
            std::string kind = v["kind"].get<std::string>();
            ColumnScaling cs;
            if (kind == "nominal") {
                cs.kind = ScalingKind::Nominal;
            } else if (kind == "ordinal") {
                cs.kind = ScalingKind::Ordinal;
            } else if (kind == "interval") {
                cs.kind = ScalingKind::Interval;
                if (!v.contains("breaks") || !v["breaks"].is_array() || v["breaks"].size() < 2)
                    throw ParseError("scaling spec: interval column '" + it.key() +
                                     "' needs >= 2 \"breaks\"");
                for (const auto& b : v["breaks"]) cs.breaks.push_back(b.get<double>());
                if (!std::is_sorted(cs.breaks.begin(), cs.breaks.end()))
                    throw ParseError("scaling spec: breaks of '" + it.key() + "' must ascend");
            } else if (kind == "id") {
                cs.kind = ScalingKind::Id;
            } else {
                throw ParseError("scaling spec: unknown kind '" + kind + "' for column '" +
                                 it.key() + "'");
            }
            spec.columns[it.key()] = std::move(cs);
        }
        return spec;
    }
};

namespace detail {

inline double parse_numeric_cell(const std::string& cell, std::size_t row, const std::string& col) {
    double value = 0.0;
    const char* first = cell.data();
    const char* last = cell.data() + cell.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw ParseError("csv row " + std::to_string(row + 2) + ", column '" + col +
                         "': cannot parse numeric cell '" + cell + "'");
    return value;
}

inline std::string format_number(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

}  // namespace detail

/// Plain scaling of a many-valued table into a formal context. Nominal: one
/// attribute per distinct value ("col=v", values sorted). Ordinal: one
/// threshold attribute per distinct numeric value ("col<=v", ascending).
/// Interval: one attribute per half-open bin from the breaks, the last bin
/// closed. Empty cells scale to nothing; numeric cells outside every bin get
/// no attribute.
inline FormalContext scale_csv(const CsvTable& table, const ScalingSpec& spec) {
    for (const auto& [name, cs] : spec.columns)
        if (std::find(table.header.begin(), table.header.end(), name) == table.header.end())
            throw ParseError("scaling spec: unknown column '" + name + "'");
    if (table.rows.empty()) throw ParseError("csv: no data rows");

    std::size_t id_col = table.header.size();
    std::size_t id_count = 0;
    for (std::size_t c = 0; c < table.header.size(); ++c) {
        auto it = spec.columns.find(table.header[c]);
        if (it != spec.columns.end() && it->second.kind == ScalingKind::Id) {
            id_col = c;
            ++id_count;
        }
    }
    if (id_count > 1) throw ParseError("scaling spec: more than one id column");

    std::vector<std::string> objects;
    objects.reserve(table.rows.size());
    if (id_col < table.header.size()) {
        std::map<std::string, std::size_t> seen;
        for (const auto& row : table.rows) {
            std::string name = row[id_col];
            std::size_t n = ++seen[name];
            if (n > 1) name += "#" + std::to_string(n);
            objects.push_back(std::move(name));
        }
    } else {
        for (std::size_t r = 0; r < table.rows.size(); ++r) objects.push_back("r" + std::to_string(r + 1));
    }

    std::vector<std::string> attributes;
    std::vector<Bitset> columns;
    auto add_attribute = [&](std::string name) {
        attributes.push_back(std::move(name));
        columns.emplace_back(table.rows.size());
        return columns.size() - 1;
    };

    for (std::size_t c = 0; c < table.header.size(); ++c) {
        if (c == id_col) continue;
        const std::string& col = table.header[c];
        ColumnScaling cs;
        if (auto it = spec.columns.find(col); it != spec.columns.end()) cs = it->second;
        switch (cs.kind) {
            case ScalingKind::Nominal: {
                std::set<std::string> values;
                for (const auto& row : table.rows)
                    if (!row[c].empty()) values.insert(row[c]);
                std::map<std::string, std::size_t> attr_of;
                for (const std::string& v : values) attr_of[v] = add_attribute(col + "=" + v);
                for (std::size_t r = 0; r < table.rows.size(); ++r)
                    if (!table.rows[r][c].empty()) columns[attr_of[table.rows[r][c]]].set(r);
                break;
            }
            case ScalingKind::Ordinal: {
                std::vector<double> cell(table.rows.size(), std::nan(""));
                std::set<double> values;
                for (std::size_t r = 0; r < table.rows.size(); ++r) {
                    if (table.rows[r][c].empty()) continue;
                    cell[r] = detail::parse_numeric_cell(table.rows[r][c], r, col);
                    values.insert(cell[r]);
                }
                for (double v : values) {
                    std::size_t a = add_attribute(col + "<=" + detail::format_number(v));
                    for (std::size_t r = 0; r < table.rows.size(); ++r)
                        if (!std::isnan(cell[r]) && cell[r] <= v) columns[a].set(r);
                }
                break;
            }
            case ScalingKind::Interval: {
                std::vector<std::size_t> bin_attr;
                for (std::size_t b = 0; b + 1 < cs.breaks.size(); ++b) {
                    bool last = b + 2 == cs.breaks.size();
                    std::string name = col + "=[" + detail::format_number(cs.breaks[b]) + "," +
                                       detail::format_number(cs.breaks[b + 1]) + (last ? "]" : ")");
                    bin_attr.push_back(add_attribute(std::move(name)));
                }
                for (std::size_t r = 0; r < table.rows.size(); ++r) {
                    if (table.rows[r][c].empty()) continue;
                    double v = detail::parse_numeric_cell(table.rows[r][c], r, col);
                    for (std::size_t b = 0; b + 1 < cs.breaks.size(); ++b) {
                        bool last = b + 2 == cs.breaks.size();
                        bool in = v >= cs.breaks[b] && (last ? v <= cs.breaks[b + 1] : v < cs.breaks[b + 1]);
                        if (in) {
                            columns[bin_attr[b]].set(r);
                            break;
                        }
                    }
                }
                break;
            }
            case ScalingKind::Id:
                break;
        }
    }

    std::vector<Bitset> rows(table.rows.size(), Bitset(attributes.size()));
    for (std::size_t m = 0; m < columns.size(); ++m)
        columns[m].for_each([&](std::size_t r) { rows[r].set(m); });
    return FormalContext(std::move(objects), std::move(attributes), std::move(rows));
}

}  // namespace fcaerr
