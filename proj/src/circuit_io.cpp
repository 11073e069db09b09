#include "qclock/circuit_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qclock {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& obj, const std::string& where,
                         std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : obj.items()) {
        bool ok = false;
        for (const char* k : allowed)
            if (key == k) ok = true;
        if (!ok) throw ParseError(where + ": unknown key \"" + key + "\"");
    }
}

double number_at(const json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key)) throw ParseError(where + ": missing \"" + key + "\"");
    if (!obj[key].is_number()) throw ParseError(where + ": \"" + key + "\" must be a number");
    return obj[key].get<double>();
}

int int_at(const json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key)) throw ParseError(where + ": missing \"" + key + "\"");
    if (!obj[key].is_number_integer())
        throw ParseError(where + ": \"" + key + "\" must be an integer");
    return obj[key].get<int>();
}

Schedule parse_schedule(const json& obj, double circuit_t_f, const std::string& where) {
    if (!obj.is_object()) throw ParseError(where + ": schedule must be an object");
    if (!obj.contains("type")) throw ParseError(where + ": schedule missing \"type\"");
    const std::string type = obj["type"].get<std::string>();
    if (type == "cosine") {
        reject_unknown_keys(obj, where, {"type", "p0", "p1"});
        return CosineSwitch{number_at(obj, "p0", where), number_at(obj, "p1", where),
                            circuit_t_f};
    }
    if (type == "sine") {
        reject_unknown_keys(obj, where, {"type", "gamma_max"});
        return SineRamp{number_at(obj, "gamma_max", where), circuit_t_f};
    }
    if (type == "constant") {
        reject_unknown_keys(obj, where, {"type", "value"});
        return Constant{number_at(obj, "value", where)};
    }
    if (type == "piecewise") {
        reject_unknown_keys(obj, where, {"type", "points"});
        if (!obj.contains("points") || !obj["points"].is_array())
            throw ParseError(where + ": piecewise schedule needs a \"points\" array");
        PiecewiseLinear pw;
        for (const auto& p : obj["points"]) {
            if (!p.is_array() || p.size() != 2)
                throw ParseError(where + ": each point must be a [t, value] pair");
            pw.points.emplace_back(p[0].get<double>(), p[1].get<double>());
        }
        return pw;
    }
    throw ParseError(where + ": unknown schedule type \"" + type + "\"");
}

Coupling parse_coupling(const json& obj, const std::string& where) {
    reject_unknown_keys(obj, where, {"a", "b", "j"});
    return {int_at(obj, "a", where), int_at(obj, "b", where), number_at(obj, "j", where)};
}

json schedule_to_json(const Schedule& s) {
    if (const auto* c = std::get_if<CosineSwitch>(&s))
        return {{"type", "cosine"}, {"p0", c->p0}, {"p1", c->p1}};
    if (const auto* r = std::get_if<SineRamp>(&s))
        return {{"type", "sine"}, {"gamma_max", r->gamma_max}};
    if (const auto* k = std::get_if<Constant>(&s))
        return {{"type", "constant"}, {"value", k->value}};
    json points = json::array();
    for (const auto& [t, v] : std::get<PiecewiseLinear>(s).points)
        points.push_back({t, v});
    return {{"type", "piecewise"}, {"points", points}};
}

}  // namespace

Circuit parse_circuit(const std::string& document) {
    json doc;
    try {
        doc = json::parse(document);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("top level: expected an object");
    reject_unknown_keys(doc, "top level",
                        {"cells", "couplings", "nnn", "drivers", "clock_zones", "t_f",
                         "dt", "initial_state"});

    Circuit c;
    c.n_cells = int_at(doc, "cells", "top level");
    c.t_f = number_at(doc, "t_f", "top level");
    if (doc.contains("dt")) c.dt = number_at(doc, "dt", "top level");
    c.output_cell = c.n_cells;

    if (!doc.contains("couplings") || !doc["couplings"].is_array())
        throw ParseError("top level: missing \"couplings\" array");
    for (std::size_t i = 0; i < doc["couplings"].size(); ++i)
        c.couplings.push_back(
            parse_coupling(doc["couplings"][i], "couplings[" + std::to_string(i) + "]"));

    if (doc.contains("nnn")) {
        const json& nnn = doc["nnn"];
        reject_unknown_keys(nnn, "nnn", {"auto", "factor", "pairs"});
        const double factor =
            nnn.contains("factor") ? number_at(nnn, "factor", "nnn") : 1.0 / 32.0;
        if (nnn.contains("auto") && nnn["auto"].get<bool>())
            for (int i = 1; i + 2 <= c.n_cells; ++i)
                c.nnn_couplings.push_back({i, i + 2, factor});
        if (nnn.contains("pairs"))
            for (std::size_t i = 0; i < nnn["pairs"].size(); ++i)
                c.nnn_couplings.push_back(
                    parse_coupling(nnn["pairs"][i], "nnn.pairs[" + std::to_string(i) + "]"));
    }

    if (!doc.contains("drivers") || !doc["drivers"].is_array())
        throw ParseError("top level: missing \"drivers\" array");
    for (std::size_t i = 0; i < doc["drivers"].size(); ++i) {
        const std::string where = "drivers[" + std::to_string(i) + "]";
        const json& d = doc["drivers"][i];
        reject_unknown_keys(d, where, {"cell", "schedule"});
        if (!d.contains("schedule")) throw ParseError(where + ": missing \"schedule\"");
        c.drivers.push_back(
            {int_at(d, "cell", where), parse_schedule(d["schedule"], c.t_f, where)});
    }

    if (!doc.contains("clock_zones") || !doc["clock_zones"].is_array())
        throw ParseError("top level: missing \"clock_zones\" array");
    for (std::size_t i = 0; i < doc["clock_zones"].size(); ++i) {
        const std::string where = "clock_zones[" + std::to_string(i) + "]";
        const json& z = doc["clock_zones"][i];
        reject_unknown_keys(z, where, {"cells", "schedule"});
        if (!z.contains("cells") || !z["cells"].is_array())
            throw ParseError(where + ": missing \"cells\" array");
        if (!z.contains("schedule")) throw ParseError(where + ": missing \"schedule\"");
        ClockZone zone;
        for (const auto& cell : z["cells"]) zone.cells.push_back(cell.get<int>());
        zone.schedule = parse_schedule(z["schedule"], c.t_f, where);
        c.clock_zones.push_back(std::move(zone));
    }

    if (doc.contains("initial_state")) {
        if (!doc["initial_state"].is_string())
            throw ParseError("top level: \"initial_state\" must be a bitstring");
        c.initial_state = doc["initial_state"].get<std::string>();
    }

    validate_circuit(c);
    return c;
}

Circuit load_circuit(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open circuit file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_circuit(buf.str());
}

std::string circuit_to_json(const Circuit& c) {
    json doc;
    doc["cells"] = c.n_cells;
    doc["t_f"] = c.t_f;
    doc["dt"] = c.dt;
    doc["couplings"] = json::array();
    for (const auto& cp : c.couplings)
        doc["couplings"].push_back({{"a", cp.a}, {"b", cp.b}, {"j", cp.j}});
    if (!c.nnn_couplings.empty()) {
        json pairs = json::array();
        for (const auto& cp : c.nnn_couplings)
            pairs.push_back({{"a", cp.a}, {"b", cp.b}, {"j", cp.j}});
        doc["nnn"] = {{"auto", false}, {"pairs", pairs}};
    }
    doc["drivers"] = json::array();
    for (const auto& d : c.drivers)
        doc["drivers"].push_back({{"cell", d.cell}, {"schedule", schedule_to_json(d.schedule)}});
    doc["clock_zones"] = json::array();
    for (const auto& z : c.clock_zones)
        doc["clock_zones"].push_back(
            {{"cells", z.cells}, {"schedule", schedule_to_json(z.schedule)}});
    if (!c.initial_state.empty()) doc["initial_state"] = c.initial_state;
    return doc.dump(2) + "\n";
}

}  // namespace qclock
