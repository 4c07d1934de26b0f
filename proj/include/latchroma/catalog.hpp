#pragma once

// Embedded catalog: the 52 representatives of the four-dimensional Delaunay
// subdivisions (17 zonotopal + 35 non-zonotopal), each with its ray multiset,
// secondary-cone dimension, published strict Voronoi vectors, and the
// chromatic data of its graph class.  All "expected_*" fields are oracles for
// verification; the computing modules never read them as inputs.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qform.hpp"

namespace latchroma {

struct CatalogEntry {
    std::string symbol;               // Conway-style label, e.g. "K_5", "22'1"
    bool zonotopal = false;
    std::vector<int> rays;            // ray-matrix multiset, ascending
    int secondary_cone_dim = 0;
    std::vector<Vec> expected_voronoi;  // one representative per +- pair
    int expected_chi = 0;
    int torus_scale_c = 0;
    int expected_class = 0;           // graph class 1..16

    QuadraticForm form() const { return build_form(rays); }
};

// One row of the graph classification: invariants of the distance-1 ball graph,
// the class members, and the representative/scale used for the certified run.
struct ClassRow {
    int class_id = 0;
    std::string graph_name;           // "V_{r}^{z}", "V_{r}^{n}" or "V_{r}^{z,n}"
    int regularity = 0;
    int ball_edges = 0;
    std::uint64_t aut_order = 0;
    std::string representative;
    int chi = 0;
    int torus_c = 0;
    std::vector<std::string> members;
};

// Low-dimensional demo lattices for smoke tests; not part of the 52-entry
// catalog and not used by any acceptance check.
struct DemoLattice {
    std::string name;
    QuadraticForm form;
    int expected_chi = 0;
    int torus_scale_c = 0;
};

namespace detail {

// The 17 reference vectors; catalog vector lists index into this table.
inline const std::vector<Vec>& reference_vectors() {
    static const std::vector<Vec> v = {
        {0, 0, 0, 1},   // v1
        {0, 0, 1, -1},  // v2
        {0, 0, 1, 0},   // v3
        {0, 0, 1, 1},   // v4
        {0, 1, 0, 0},   // v5
        {0, 1, 0, 1},   // v6
        {0, 1, 1, 0},   // v7
        {0, 1, 1, 1},   // v8
        {1, -1, 0, 0},  // v9
        {1, 0, 0, 0},   // v10
        {1, 0, 0, 1},   // v11
        {1, 0, 1, 0},   // v12
        {1, 0, 1, 1},   // v13
        {1, 1, 0, 0},   // v14
        {1, 1, 0, 1},   // v15
        {1, 1, 1, 0},   // v16
        {1, 1, 1, 1},   // v17
    };
    return v;
}

struct RawEntry {
    const char* symbol;
    bool zonotopal;
    int cone_dim;
    std::vector<int> rays;
    std::vector<int> vector_ids;  // 1-based indices into reference_vectors()
    int class_id;
};

inline const std::vector<RawEntry>& raw_entries() {
    static const std::vector<RawEntry> t = {
        // zonotopal
        {"K_5", true, 10, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}, {1, 3, 4, 5, 6, 7, 8, 10, 11, 12, 13, 14, 15, 16, 17}, 1},
        {"K_{3,3}", true, 9, {1, 2, 3, 4, 6, 7, 8, 9, 12}, {1, 2, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 15, 16, 17}, 2},
        {"K_5-1", true, 9, {1, 2, 3, 4, 5, 7, 8, 9, 10}, {1, 3, 4, 5, 6, 7, 8, 10, 11, 13, 14, 15, 16, 17}, 4},
        {"K_5-2", true, 8, {1, 2, 3, 4, 7, 8, 9, 10}, {1, 3, 4, 5, 6, 7, 8, 10, 11, 13, 15, 17}, 8},
        {"K_5-1-1", true, 8, {1, 2, 3, 4, 5, 7, 8, 10}, {1, 3, 4, 5, 7, 8, 10, 11, 13, 14, 15, 16, 17}, 6},
        {"K_5-3", true, 7, {1, 2, 4, 7, 8, 9, 10}, {1, 3, 4, 5, 7, 8, 10, 11, 13, 17}, 11},
        {"K_5-2-1", true, 7, {1, 2, 4, 5, 7, 8, 10}, {1, 3, 4, 5, 7, 8, 10, 11, 13, 14, 16, 17}, 8},
        {"K_4+1", true, 7, {1, 2, 3, 4, 8, 9, 10}, {1, 3, 4, 5, 6, 7, 8, 10}, 12},
        {"C_{2221}", true, 7, {1, 2, 3, 4, 7, 9, 10}, {1, 3, 4, 5, 6, 8, 10, 11, 13, 15, 17}, 10},
        {"C_{221}+1", true, 6, {1, 2, 3, 4, 8, 10}, {1, 3, 4, 5, 7, 8, 10}, 13},
        {"C_{321}", true, 6, {1, 2, 4, 7, 8, 10}, {1, 3, 4, 5, 7, 8, 10, 11, 13, 17}, 11},
        {"C_{222}", true, 6, {1, 2, 3, 7, 9, 10}, {1, 3, 4, 5, 6, 8, 10, 11, 13, 15, 17}, 10},
        {"C_3+C_3", true, 6, {1, 4, 7, 8, 9, 10}, {3, 5, 7, 8, 10, 17}, 14},
        {"C_5", true, 5, {1, 2, 7, 8, 10}, {1, 3, 4, 5, 7, 8, 10, 11, 13, 17}, 11},
        {"C_4+1", true, 5, {1, 2, 4, 8, 10}, {1, 3, 4, 5, 7, 8, 10}, 13},
        {"C_3+1+1", true, 5, {1, 2, 3, 4, 8}, {1, 3, 5, 7, 10}, 15},
        {"1+1+1+1", true, 4, {1, 2, 3, 4}, {1, 3, 5, 10}, 16},
        // non-zonotopal
        {"111+", false, 10, {1, 2, 3, 4, 6, 7, 8, 9, 11, 12}, {1, 2, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 15, 16, 17}, 2},
        {"111-", false, 10, {1, 2, 3, 4, 6, 7, 8, 9, 10, 11}, {1, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 15, 16, 17}, 3},
        {"211+", false, 9, {1, 2, 3, 4, 6, 8, 9, 11, 12}, {1, 2, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 16, 17}, 5},
        {"211-", false, 9, {1, 2, 3, 4, 6, 8, 9, 10, 11}, {1, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 16, 17}, 5},
        {"311+", false, 8, {1, 2, 3, 4, 6, 8, 11, 12}, {1, 2, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 16, 17}, 5},
        {"311-", false, 8, {1, 2, 3, 4, 6, 8, 10, 11}, {1, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 16, 17}, 5},
        {"221+", false, 8, {1, 2, 3, 4, 8, 9, 11, 12}, {1, 2, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 17}, 7},
        {"221-", false, 8, {1, 2, 3, 4, 8, 9, 10, 11}, {1, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 17}, 7},
        {"22'1", false, 8, {1, 2, 3, 4, 7, 8, 11, 12}, {1, 2, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 17}, 7},
        {"411", false, 7, {1, 2, 4, 6, 8, 10, 11}, {1, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 16, 17}, 5},
        {"321+", false, 7, {1, 2, 4, 7, 8, 10, 11}, {1, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 17}, 7},
        {"321-", false, 7, {1, 2, 3, 4, 8, 10, 11}, {1, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 17}, 7},
        {"222+", false, 7, {1, 3, 4, 8, 9, 11, 12}, {1, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 17}, 9},
        {"222-", false, 7, {1, 3, 4, 6, 7, 10, 11}, {1, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 17}, 9},
        {"222'", false, 7, {1, 3, 4, 8, 9, 10, 11}, {1, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 17}, 9},
        {"22'2''", false, 7, {1, 4, 7, 8, 9, 10, 11}, {1, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 17}, 9},
        {"421", false, 6, {1, 2, 4, 8, 10, 11}, {1, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 17}, 7},
        {"331+", false, 6, {1, 2, 3, 4, 11, 12}, {1, 2, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 17}, 7},
        {"331-", false, 6, {1, 2, 3, 4, 10, 11}, {1, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 17}, 7},
        {"322+", false, 6, {1, 3, 4, 8, 11, 12}, {1, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 17}, 9},
        {"322-", false, 6, {1, 4, 7, 8, 11, 12}, {1, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 17}, 9},
        {"322'", false, 6, {1, 2, 4, 6, 7, 11}, {1, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 17}, 9},
        {"431", false, 5, {1, 2, 4, 10, 11}, {1, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 17}, 7},
        {"422", false, 5, {1, 4, 8, 11, 12}, {1, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 17}, 9},
        {"422'", false, 5, {1, 4, 8, 10, 11}, {1, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 17}, 9},
        {"332+", false, 5, {1, 3, 4, 11, 12}, {1, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 17}, 9},
        {"332-", false, 5, {1, 3, 4, 10, 11}, {1, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 17}, 9},
        {"441", false, 5, {1, 2, 10, 11}, {1, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 17}, 7},
        {"432", false, 4, {1, 4, 10, 11}, {1, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 17}, 9},
        {"333+", false, 4, {3, 4, 11, 12}, {1, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 17}, 9},
        {"333-", false, 4, {3, 4, 10, 11}, {1, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 17}, 9},
        {"442", false, 3, {1, 10, 11}, {1, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 17}, 9},
        {"433", false, 3, {4, 10, 11}, {1, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 17}, 9},
        {"443", false, 2, {10, 11}, {1, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 17}, 9},
        {"444", false, 1, {11}, {1, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 17}, 9},
    };
    return t;
}

struct RawClass {
    int id;
    const char* name;
    int regularity, ball_edges;
    std::uint64_t aut_order;
    const char* representative;
    int chi;  // torus scale c coincides with chi in every class
};

inline const std::vector<RawClass>& raw_classes() {
    static const std::vector<RawClass> t = {
        {1, "V_{30}^{z}", 30, 180, 240, "K_5", 5},
        {2, "V_{30}^{z,n}", 30, 186, 144, "K_{3,3}", 7},
        {3, "V_{30}^{n}", 30, 180, 24, "111-", 6},
        {4, "V_{28}^{z}", 28, 154, 24, "K_5-1", 5},
        {5, "V_{28}^{n}", 28, 160, 24, "211+", 6},
        {6, "V_{26}^{z}", 26, 134, 16, "K_5-1-1", 5},
        {7, "V_{26}^{n}", 26, 140, 96, "221+", 6},
        {8, "V_{24}^{z}", 24, 114, 16, "K_5-2-1", 5},
        {9, "V_{24}^{n}", 24, 120, 1152, "222+", 4},
        {10, "V_{22}^{z}", 22, 94, 96, "C_{2221}", 4},
        {11, "V_{20}^{z}", 20, 80, 240, "K_5-3", 5},
        {12, "V_{16}^{z}", 16, 52, 96, "K_4+1", 4},
        {13, "V_{14}^{z}", 14, 38, 96, "C_{221}+1", 4},
        {14, "V_{12}^{z}", 12, 24, 288, "C_3+C_3", 3},
        {15, "V_{10}^{z}", 10, 16, 288, "C_3+1+1", 3},
        {16, "V_{8}^{z}", 8, 8, 40320, "1+1+1+1", 2},
    };
    return t;
}

}  // namespace detail

inline const std::vector<ClassRow>& expected_classes();

// All 52 entries in table order (zonotopal rows first).
inline const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = [] {
        const auto& refs = detail::reference_vectors();
        std::vector<CatalogEntry> out;
        out.reserve(detail::raw_entries().size());
        for (const auto& r : detail::raw_entries()) {
            CatalogEntry e;
            e.symbol = r.symbol;
            e.zonotopal = r.zonotopal;
            e.rays = r.rays;
            e.secondary_cone_dim = r.cone_dim;
            for (int id : r.vector_ids) e.expected_voronoi.push_back(refs.at(id - 1));
            e.expected_class = r.class_id;
            const auto& cls = detail::raw_classes().at(r.class_id - 1);
            e.expected_chi = cls.chi;
            e.torus_scale_c = cls.chi;
            out.push_back(std::move(e));
        }
        return out;
    }();
    return entries;
}

inline const std::vector<ClassRow>& expected_classes() {
    static const std::vector<ClassRow> rows = [] {
        std::vector<ClassRow> out;
        for (const auto& r : detail::raw_classes()) {
            ClassRow row;
            row.class_id = r.id;
            row.graph_name = r.name;
            row.regularity = r.regularity;
            row.ball_edges = r.ball_edges;
            row.aut_order = r.aut_order;
            row.representative = r.representative;
            row.chi = r.chi;
            row.torus_c = r.chi;
            for (const auto& e : catalog())
                if (e.expected_class == r.id) row.members.push_back(e.symbol);
            out.push_back(std::move(row));
        }
        return out;
    }();
    return rows;
}

inline const CatalogEntry* find_entry(const std::string& symbol) {
    for (const auto& e : catalog())
        if (e.symbol == symbol) return &e;
    return nullptr;
}

inline const CatalogEntry& catalog_entry(const std::string& symbol) {
    if (const auto* e = find_entry(symbol)) return *e;
    throw std::domain_error("unknown catalog symbol: " + symbol);
}

inline const ClassRow& class_row(int class_id) {
    const auto& rows = expected_classes();
    if (class_id < 1 || class_id > static_cast<int>(rows.size()))
        throw std::domain_error("class id out of range");
    return rows[class_id - 1];
}

// Demo lattices (squares/hexagons and the five 3-dimensional parallelohedra).
// Expected values were derived by independent brute force; demo only.
inline const std::vector<DemoLattice>& demo_lattices() {
    static const std::vector<DemoLattice> demos = [] {
        auto f = [](std::vector<std::vector<std::int64_t>> rows) {
            return QuadraticForm::from_int_rows(rows);
        };
        std::vector<DemoLattice> out;
        out.push_back({"square", f({{1, 0}, {0, 1}}), 2, 2});
        out.push_back({"hexagonal", f({{2, -1}, {-1, 2}}), 3, 3});
        out.push_back({"cubic", f({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), 2, 2});
        out.push_back({"hexagonal-prism", f({{2, -1, 0}, {-1, 2, 0}, {0, 0, 1}}), 3, 3});
        out.push_back({"rhombic-dodecahedron", f({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}), 4, 2});
        out.push_back({"elongated-dodecahedron", f({{3, -1, -1}, {-1, 2, 0}, {-1, 0, 2}}), 4, 2});
        out.push_back({"truncated-octahedron", f({{3, -1, -1}, {-1, 3, -1}, {-1, -1, 3}}), 4, 4});
        return out;
    }();
    return demos;
}

inline const DemoLattice* find_demo(const std::string& name) {
    for (const auto& d : demo_lattices())
        if (d.name == name) return &d;
    return nullptr;
}

inline nlohmann::json catalog_to_json() {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : catalog()) {
        nlohmann::json vecs = nlohmann::json::array();
        for (const auto& v : e.expected_voronoi) vecs.push_back(v);
        arr.push_back({{"symbol", e.symbol},
                       {"zonotopal", e.zonotopal},
                       {"rays", e.rays},
                       {"dim", e.secondary_cone_dim},
                       {"voronoi", vecs},
                       {"chi", e.expected_chi},
                       {"c", e.torus_scale_c}});
    }
    return arr;
}

}  // namespace latchroma
