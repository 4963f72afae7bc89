#include "stammerlab/json_io.hpp"

#include <stdexcept>

namespace stammerlab {

using nlohmann::json;

namespace {

std::vector<int> int_array(const json& j, const char* what) {
    if (!j.is_array()) throw std::invalid_argument(std::string(what) + ": expected an array");
    std::vector<int> out;
    for (const auto& v : j) {
        if (!v.is_number_integer())
            throw std::invalid_argument(std::string(what) + ": expected integers");
        out.push_back(v.get<int>());
    }
    return out;
}

}  // namespace

json to_json(const Partition& p) { return json(p.parts()); }

json to_json(const IncompleteStandardTableau& t) {
    json rows = json::array();
    for (const auto& row : t.rows()) rows.push_back(row);
    return rows;
}

json to_json(const StammeringTableau& t) {
    json steps = json::array();
    for (const auto& p : t.steps) steps.push_back(to_json(p));
    return steps;
}

json to_json(const RookPlacement& r) { return json{{"n", r.n}, {"dots", r.dots}}; }

json to_json(const PartialRookPlacement& r) {
    json dots = json::array();
    for (int c : r.dots) {
        if (c == 0)
            dots.push_back(nullptr);
        else
            dots.push_back(c);
    }
    return json{{"n", r.n}, {"dots", dots}};
}

json to_json(const DyckPath& p) { return json(p.word()); }

json to_json(const ChainOfDyckShapes& c) {
    json words = json::array();
    for (const auto& p : c.paths()) words.push_back(p.word());
    return words;
}

json to_json(const Permutation& s) { return json(s.values()); }

namespace {

json filling_to_json(const DyckPath& shape, const std::vector<ColumnDot>& dots) {
    json pairs = json::array();
    for (const auto& d : dots) pairs.push_back(json::array({d.column, d.index}));
    return json{{"shape", shape.word()}, {"dots", pairs}};
}

std::vector<ColumnDot> dots_from_json(const json& j, const char* what) {
    if (!j.is_array()) throw std::invalid_argument(std::string(what) + ": dots must be an array");
    std::vector<ColumnDot> dots;
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2)
            throw std::invalid_argument(std::string(what) + ": dots are [column, index] pairs");
        dots.push_back({pair[0].get<int>(), pair[1].get<int>()});
    }
    return dots;
}

}  // namespace

json to_json(const LaguerreHistory& h) { return filling_to_json(h.shape(), h.dots()); }

json to_json(const DyckTableau& t) { return filling_to_json(t.shape(), t.dots()); }

json to_json(const TrivariatePoly& p) {
    json terms = json::array();
    for (const auto& [key, c] : p.terms()) {
        json term{{"q_exp", key[0]}, {"a_exp", key[1]}, {"b_exp", key[2]}};
        if (c.fits_slong_p())
            term["coeff"] = c.get_si();
        else
            term["coeff"] = c.get_str();
        terms.push_back(std::move(term));
    }
    return terms;
}

json to_json(const GrowthDiagram& g) {
    json labels = json::array();
    for (int y = 0; y <= g.n; ++y) {
        json row = json::array();
        int xmax = y <= 1 ? 2 * g.n : 2 * (g.n - y + 1);
        for (int x = 0; x <= xmax; ++x) row.push_back(to_json(g.labels[x][y]));
        labels.push_back(std::move(row));
    }
    json dots = json::array();
    for (int y = 0; y < g.n; ++y) {
        json row = json::array();
        for (int x = 0; x < 2 * (g.n - y); ++x) row.push_back(g.dot[x][y] != 0);
        dots.push_back(std::move(row));
    }
    return json{{"n", g.n}, {"labels", labels}, {"dots", dots}};
}

Partition partition_from_json(const json& j) { return Partition(int_array(j, "partition")); }

IncompleteStandardTableau tableau_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("tableau: expected an array of rows");
    std::vector<std::vector<int>> rows;
    for (const auto& row : j) rows.push_back(int_array(row, "tableau row"));
    return IncompleteStandardTableau(std::move(rows));
}

StammeringTableau stammering_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("stammering: expected an array of partitions");
    std::vector<Partition> steps;
    for (const auto& p : j) steps.push_back(partition_from_json(p));
    return make_stammering(std::move(steps));
}

namespace {

std::pair<int, std::vector<int>> placement_from_json(const json& j, bool allow_null) {
    if (!j.is_object() || !j.contains("n") || !j.contains("dots"))
        throw std::invalid_argument("rook placement: expected {\"n\":..,\"dots\":[..]}");
    int n = j.at("n").get<int>();
    std::vector<int> dots;
    for (const auto& v : j.at("dots")) {
        if (v.is_null()) {
            if (!allow_null)
                throw std::invalid_argument("rook placement: null entries need the partial form");
            dots.push_back(0);
        } else {
            dots.push_back(v.get<int>());
        }
    }
    return {n, std::move(dots)};
}

}  // namespace

RookPlacement rook_from_json(const json& j) {
    auto [n, dots] = placement_from_json(j, false);
    RookPlacement r{n, std::move(dots)};
    if (auto report = validate_rook(r); !report)
        throw std::invalid_argument("rook placement: " + report.rule + " (row " +
                                    std::to_string(report.index) + ")");
    return r;
}

PartialRookPlacement partial_rook_from_json(const json& j) {
    auto [n, dots] = placement_from_json(j, true);
    PartialRookPlacement r{n, std::move(dots)};
    if (auto report = validate_partial_rook(r); !report)
        throw std::invalid_argument("partial rook placement: " + report.rule + " (row " +
                                    std::to_string(report.index) + ")");
    return r;
}

DyckPath dyck_path_from_json(const json& j) {
    if (!j.is_string()) throw std::invalid_argument("dyck path: expected a step word string");
    return DyckPath::from_word(j.get<std::string>());
}

ChainOfDyckShapes chain_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("chain: expected an array of step words");
    std::vector<DyckPath> paths;
    for (const auto& w : j) paths.push_back(dyck_path_from_json(w));
    return ChainOfDyckShapes(std::move(paths));
}

Permutation permutation_from_json(const json& j) {
    return Permutation(int_array(j, "permutation"));
}

LaguerreHistory laguerre_from_json(const json& j) {
    if (!j.is_object() || !j.contains("shape") || !j.contains("dots"))
        throw std::invalid_argument("laguerre history: expected {\"shape\":..,\"dots\":[..]}");
    return LaguerreHistory(dyck_path_from_json(j.at("shape")),
                           dots_from_json(j.at("dots"), "laguerre history"));
}

DyckTableau dyck_tableau_from_json(const json& j) {
    if (!j.is_object() || !j.contains("shape") || !j.contains("dots"))
        throw std::invalid_argument("dyck tableau: expected {\"shape\":..,\"dots\":[..]}");
    return DyckTableau(dyck_path_from_json(j.at("shape")),
                       dots_from_json(j.at("dots"), "dyck tableau"));
}

}  // namespace stammerlab
