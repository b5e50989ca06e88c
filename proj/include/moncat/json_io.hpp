#pragma once

#include <moncat/adjunction.hpp>
#include <moncat/monoid.hpp>

#include <json.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace moncat {

using ordered_json = nlohmann::ordered_json;

/// Malformed or mistyped payloads. Distinct from mathematical failures so
/// callers can map the two onto different exit codes.
class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline const ordered_json& field(const ordered_json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw SchemaError(std::string("missing field '") + key + "'");
    return j.at(key);
}

inline long long integer(const ordered_json& j, const char* what) {
    if (!j.is_number_integer()) throw SchemaError(std::string(what) + ": expected an integer");
    return j.get<long long>();
}

template <class Build>
auto checked_build(const char* what, Build&& build) {
    try {
        return build();
    } catch (const std::invalid_argument& e) {
        throw SchemaError(std::string(what) + ": " + e.what());
    }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// matrices

/// Row-major matrix rendering: a list of rows.
inline ordered_json describe_rows(const IntMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(m.at(i, j).convert_to<long long>());
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Column list rendering, used for relation lattices.
inline ordered_json describe_columns(const IntMatrix& m) {
    ordered_json cols = ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
        ordered_json col = ordered_json::array();
        for (std::size_t i = 0; i < m.rows(); ++i)
            col.push_back(m.at(i, j).convert_to<long long>());
        cols.push_back(std::move(col));
    }
    return cols;
}

inline IntMatrix parse_rows(const ordered_json& j, std::size_t rows, std::size_t cols,
                            const char* what) {
    if (!j.is_array() || j.size() != rows)
        throw SchemaError(std::string(what) + ": expected " + std::to_string(rows) + " rows");
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const auto& row = j.at(i);
        if (!row.is_array() || row.size() != cols)
            throw SchemaError(std::string(what) + ": row " + std::to_string(i) + " must hold " +
                              std::to_string(cols) + " entries");
        for (std::size_t k = 0; k < cols; ++k) m.at(i, k) = detail::integer(row.at(k), what);
    }
    return m;
}

inline IntMatrix parse_columns(const ordered_json& j, std::size_t rows, const char* what) {
    if (!j.is_array()) throw SchemaError(std::string(what) + ": expected a list of columns");
    IntMatrix m(rows, j.size());
    for (std::size_t c = 0; c < j.size(); ++c) {
        const auto& col = j.at(c);
        if (!col.is_array() || col.size() != rows)
            throw SchemaError(std::string(what) + ": column " + std::to_string(c) +
                              " must hold " + std::to_string(rows) + " entries");
        for (std::size_t i = 0; i < rows; ++i) m.at(i, c) = detail::integer(col.at(i), what);
    }
    return m;
}

// ---------------------------------------------------------------------------
// finite sets

inline ordered_json describe(const FinSetObj& s) {
    ordered_json j;
    j["size"] = s.size;
    j["labels"] = s.labels;
    return j;
}

inline FinSetObj parse_finset_obj(const ordered_json& j) {
    const long long size = detail::integer(detail::field(j, "size"), "set size");
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        if (!j.at("labels").is_array()) throw SchemaError("labels: expected an array");
        for (const auto& l : j.at("labels")) {
            if (!l.is_string()) throw SchemaError("labels: expected strings");
            labels.push_back(l.get<std::string>());
        }
    }
    return detail::checked_build("set",
                                 [&] { return FinSetObj(static_cast<int>(size), std::move(labels)); });
}

inline ordered_json describe(const FinSetMor& f) {
    ordered_json j;
    j["dom"] = describe(f.dom);
    j["cod"] = describe(f.cod);
    j["table"] = f.table;
    return j;
}

inline FinSetMor parse_finset_mor(const ordered_json& j) {
    const FinSetObj dom = parse_finset_obj(detail::field(j, "dom"));
    const FinSetObj cod = parse_finset_obj(detail::field(j, "cod"));
    const auto& t = detail::field(j, "table");
    if (!t.is_array()) throw SchemaError("table: expected an array");
    std::vector<int> table;
    for (const auto& v : t) table.push_back(static_cast<int>(detail::integer(v, "table")));
    return detail::checked_build("map", [&] { return FinSetMor(dom, cod, std::move(table)); });
}

// ---------------------------------------------------------------------------
// presented abelian groups

inline ordered_json describe(const PresentedAbGroup& g) {
    ordered_json j;
    j["gens"] = g.gens();
    j["relations"] = describe_columns(g.canonical_relations());
    return j;
}

inline PresentedAbGroup parse_group(const ordered_json& j) {
    const long long gens = detail::integer(detail::field(j, "gens"), "gens");
    if (gens < 0) throw SchemaError("gens: must be nonnegative");
    const IntMatrix relations = parse_columns(detail::field(j, "relations"),
                                              static_cast<std::size_t>(gens), "relations");
    return PresentedAbGroup(static_cast<std::size_t>(gens), relations);
}

inline ordered_json describe(const AbMor& f) {
    ordered_json j;
    j["dom"] = describe(f.dom());
    j["cod"] = describe(f.cod());
    j["matrix"] = describe_rows(f.matrix());
    return j;
}

inline AbMor parse_ab_mor(const ordered_json& j) {
    const PresentedAbGroup dom = parse_group(detail::field(j, "dom"));
    const PresentedAbGroup cod = parse_group(detail::field(j, "cod"));
    const IntMatrix m =
        parse_rows(detail::field(j, "matrix"), cod.gens(), dom.gens(), "matrix");
    return detail::checked_build("map", [&] { return AbMor(dom, cod, m); });
}

// ---------------------------------------------------------------------------
// monoids, tagged by backend

inline std::string backend_of(const ordered_json& j) {
    const auto& b = detail::field(j, "backend");
    if (!b.is_string()) throw SchemaError("backend: expected a string");
    const std::string name = b.get<std::string>();
    if (name != "finset" && name != "finab")
        throw SchemaError("backend: expected 'finset' or 'finab'");
    return name;
}

inline ordered_json describe(const MonoidObject<FinSet>& m) {
    ordered_json j;
    j["backend"] = "finset";
    j["carrier"] = describe(m.carrier);
    j["mult"] = describe(m.mult);
    j["unit"] = describe(m.unit);
    return j;
}

inline ordered_json describe(const MonoidObject<FinAb>& m) {
    ordered_json j;
    j["backend"] = "finab";
    j["carrier"] = describe(m.carrier);
    j["mult"] = describe(m.mult);
    j["unit"] = describe(m.unit);
    return j;
}

/// Accepts the structural form {"carrier", "mult", "unit"} or the compact
/// form {"table": row-major products, "unit": index}.
inline MonoidObject<FinSet> parse_finset_monoid(const ordered_json& j) {
    if (backend_of(j) != "finset") throw SchemaError("expected a finset monoid");
    if (j.contains("table")) {
        const auto& t = j.at("table");
        if (!t.is_array()) throw SchemaError("table: expected an array");
        std::vector<int> table;
        for (const auto& entry : t) {
            if (entry.is_array())
                for (const auto& v : entry)
                    table.push_back(static_cast<int>(detail::integer(v, "table")));
            else
                table.push_back(static_cast<int>(detail::integer(entry, "table")));
        }
        const int unit = static_cast<int>(detail::integer(detail::field(j, "unit"), "unit"));
        return detail::checked_build("monoid", [&] { return monoid_from_table(table, unit); });
    }
    const FinSetObj carrier = parse_finset_obj(detail::field(j, "carrier"));
    const FinSetMor mult = parse_finset_mor(detail::field(j, "mult"));
    const FinSetMor unit = parse_finset_mor(detail::field(j, "unit"));
    if (!FinSet::obj_equal(mult.cod, carrier) || !FinSet::obj_equal(unit.cod, carrier) ||
        !FinSet::obj_equal(mult.dom, FinSet::tensor(carrier, carrier)) ||
        !FinSet::obj_equal(unit.dom, FinSet::unit()))
        throw SchemaError("monoid: mult and unit must go (carrier x carrier) -> carrier and "
                          "point -> carrier");
    return {carrier, mult, unit};
}

/// Accepts the structural form {"carrier", "mult", "unit"} or the compact
/// ring form {"group", "mult": generator products, "unit": column}.
inline MonoidObject<FinAb> parse_finab_monoid(const ordered_json& j) {
    if (backend_of(j) != "finab") throw SchemaError("expected a finab monoid");
    if (j.contains("group")) {
        const PresentedAbGroup g = parse_group(detail::field(j, "group"));
        const IntMatrix mult =
            parse_rows(detail::field(j, "mult"), g.gens(), g.gens() * g.gens(), "mult");
        const auto& u = detail::field(j, "unit");
        if (!u.is_array() || u.size() != g.gens())
            throw SchemaError("unit: expected one entry per generator");
        IntMatrix unit(g.gens(), 1);
        for (std::size_t i = 0; i < g.gens(); ++i)
            unit.at(i, 0) = detail::integer(u.at(i), "unit");
        return detail::checked_build("ring", [&] { return ring_from(g, mult, unit); });
    }
    const PresentedAbGroup carrier = parse_group(detail::field(j, "carrier"));
    const AbMor mult = parse_ab_mor(detail::field(j, "mult"));
    const AbMor unit = parse_ab_mor(detail::field(j, "unit"));
    if (!FinAb::obj_equal(mult.cod(), carrier) || !FinAb::obj_equal(unit.cod(), carrier) ||
        !FinAb::obj_equal(mult.dom(), FinAb::tensor(carrier, carrier)) ||
        !FinAb::obj_equal(unit.dom(), FinAb::unit()))
        throw SchemaError("monoid: mult and unit must go (carrier (x) carrier) -> carrier and "
                          "unit -> carrier");
    return {carrier, mult, unit};
}

// ---------------------------------------------------------------------------
// reports

inline ordered_json describe(const CheckReport& report) {
    ordered_json j;
    j["passed"] = report.ok();
    ordered_json checks = ordered_json::array();
    for (const auto& c : report.checks) {
        ordered_json line;
        line["law"] = c.law;
        line["ok"] = c.ok;
        line["witness"] = c.witness;
        checks.push_back(std::move(line));
    }
    j["checks"] = std::move(checks);
    return j;
}

}  // namespace moncat
