#include "deltakit/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "deltakit/errors.hpp"

namespace deltakit {

namespace {

using Json = nlohmann::ordered_json;

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("document", e.what());
    }
}

const Json& field(const Json& obj, const char* name) {
    if (!obj.is_object()) throw ParseError("document", "expected a JSON object");
    auto it = obj.find(name);
    if (it == obj.end()) throw ParseError(name, "missing field");
    return *it;
}

std::vector<std::string> string_array(const Json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where, "expected an array of strings");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_string()) throw ParseError(where + "[" + std::to_string(i) + "]", "expected a string");
        out.push_back(j[i].get<std::string>());
    }
    return out;
}

GroundSet ground_from(const std::vector<std::string>& labels, const char* where) {
    try {
        return GroundSet(labels);
    } catch (const SizeGuardError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(where, e.what());
    }
}

}  // namespace

SetSystem parse_set_system(std::string_view text) {
    const Json doc = parse_json(text);
    const GroundSet ground = ground_from(string_array(field(doc, "ground"), "ground"), "ground");
    const Json& fam = field(doc, "feasible");
    if (!fam.is_array()) throw ParseError("feasible", "expected an array of sets");
    std::vector<ElemSet> sets;
    for (std::size_t i = 0; i < fam.size(); ++i) {
        const std::string where = "feasible[" + std::to_string(i) + "]";
        ElemSet s;
        const auto members = string_array(fam[i], where);
        for (std::size_t k = 0; k < members.size(); ++k) {
            const int idx = ground.find(members[k]);
            const std::string at = where + "[" + std::to_string(k) + "]";
            if (idx < 0) throw ParseError(at, "unknown element '" + members[k] + "'");
            if (s.contains(idx)) throw ParseError(at, "repeated element '" + members[k] + "'");
            s = s.with(idx);
        }
        sets.push_back(s);
    }
    return SetSystem(ground, std::move(sets));
}

std::string serialize(const SetSystem& s) {
    Json doc;
    doc["ground"] = s.ground().labels();
    Json fam = Json::array();
    for (ElemSet f : s.feasible()) {
        Json set = Json::array();
        f.for_each([&](int i) { set.push_back(s.ground().label(i)); });
        fam.push_back(std::move(set));
    }
    doc["feasible"] = std::move(fam);
    return doc.dump();
}

RotationSystem parse_rotation_system(std::string_view text) {
    const Json doc = parse_json(text);
    RotationSystem rs;
    const Json& verts = field(doc, "vertices");
    if (!verts.is_array()) throw ParseError("vertices", "expected an array of cyclic orders");
    for (std::size_t i = 0; i < verts.size(); ++i)
        rs.vertices.push_back(string_array(verts[i], "vertices[" + std::to_string(i) + "]"));
    const Json& edges = field(doc, "edges");
    if (!edges.is_array()) throw ParseError("edges", "expected an array of edge objects");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string where = "edges[" + std::to_string(i) + "]";
        const Json& e = edges[i];
        if (!e.is_object()) throw ParseError(where, "expected an object");
        RotationSystem::Edge edge;
        auto label = e.find("label");
        if (label == e.end() || !label->is_string()) throw ParseError(where + ".label", "expected a string");
        edge.label = label->get<std::string>();
        auto ends = e.find("ends");
        if (ends == e.end()) throw ParseError(where + ".ends", "missing field");
        const auto names = string_array(*ends, where + ".ends");
        if (names.size() != 2) throw ParseError(where + ".ends", "expected exactly two half-edges");
        edge.ends = {names[0], names[1]};
        if (auto tw = e.find("twisted"); tw != e.end()) {
            if (!tw->is_boolean()) throw ParseError(where + ".twisted", "expected a boolean");
            edge.twisted = tw->get<bool>();
        }
        rs.edges.push_back(std::move(edge));
    }
    if (auto iso = doc.find("isolated_vertices"); iso != doc.end()) {
        if (!iso->is_number_integer() || iso->get<long long>() < 0)
            throw ParseError("isolated_vertices", "expected a non-negative integer");
        rs.isolated_vertices = iso->get<int>();
    }
    return rs;
}

std::string serialize(const RotationSystem& rs) {
    Json doc;
    doc["vertices"] = rs.vertices;
    Json edges = Json::array();
    for (const auto& e : rs.edges) {
        Json j;
        j["label"] = e.label;
        j["ends"] = {e.ends[0], e.ends[1]};
        j["twisted"] = e.twisted;
        edges.push_back(std::move(j));
    }
    doc["edges"] = std::move(edges);
    doc["isolated_vertices"] = rs.isolated_vertices;
    return doc.dump();
}

Gf2Matrix parse_matrix(std::string_view text) {
    const Json doc = parse_json(text);
    const GroundSet labels = ground_from(string_array(field(doc, "labels"), "labels"), "labels");
    const auto rows = string_array(field(doc, "rows"), "rows");
    try {
        return Gf2Matrix::from_strings(labels, rows);
    } catch (const DomainError& e) {
        throw ParseError("rows", e.what());
    }
}

std::string serialize(const Gf2Matrix& m) {
    Json doc;
    doc["labels"] = m.labels().labels();
    doc["rows"] = m.row_strings();
    return doc.dump();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("file", "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace deltakit
