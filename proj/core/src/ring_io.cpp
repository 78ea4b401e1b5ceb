#include "freefusion/ring_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "freefusion/errors.hpp"
#include "freefusion/gallery.hpp"

namespace freefusion {

namespace {

using nlohmann::json;

const json& need(const json& doc, const char* field, const std::string& what) {
    const auto it = doc.find(field);
    if (it == doc.end())
        throw input_error(what + ": missing field '" + std::string(field) + "'");
    return *it;
}

std::vector<std::string> string_array(const json& node, const std::string& what) {
    if (!node.is_array()) throw input_error(what + ": expected an array of strings");
    std::vector<std::string> out;
    for (const json& item : node) {
        if (!item.is_string()) throw input_error(what + ": expected an array of strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

std::string pick_name(const json& doc, const std::string& fallback) {
    const auto it = doc.find("name");
    if (it == doc.end()) return fallback;
    if (!it->is_string()) throw input_error("field 'name' must be a string");
    return it->get<std::string>();
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot read file '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw input_error("parse error in '" + path + "': " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write file '" + path + "'");
    out << text;
    if (!out) throw input_error("write failed for '" + path + "'");
}

std::string file_stem(const std::string& path) {
    return std::filesystem::path(path).stem().string();
}

} // namespace

FusionRing parse_ring(const json& doc, const std::string& fallback_name) {
    if (!doc.is_object()) throw input_error("ring file: top level must be an object");
    const std::string name = pick_name(doc, fallback_name);
    const std::string what = "ring '" + name + "'";

    const std::vector<std::string> labels = string_array(need(doc, "labels", what), what);
    const json& unit_node = need(doc, "unit", what);
    if (!unit_node.is_string()) throw input_error(what + ": field 'unit' must be a string");

    const json& dual_node = need(doc, "dual", what);
    if (!dual_node.is_object())
        throw input_error(what + ": field 'dual' must map labels to labels");
    std::map<std::string, std::string> dual;
    for (const auto& [key, value] : dual_node.items()) {
        if (!value.is_string())
            throw input_error(what + ": field 'dual' must map labels to labels");
        dual[key] = value.get<std::string>();
    }

    std::map<std::string, Label> index;
    for (std::size_t i = 0; i < labels.size(); ++i) index[labels[i]] = Label(i);
    auto label_of = [&](const json& node, const char* where) {
        if (!node.is_string())
            throw input_error(what + ": " + where + " entries must name labels");
        const auto it = index.find(node.get<std::string>());
        if (it == index.end())
            throw input_error(what + ": unknown label '" + node.get<std::string>() + "' in " +
                              where);
        return it->second;
    };

    const json& tuples = need(doc, "N", what);
    if (!tuples.is_array()) throw input_error(what + ": field 'N' must be an array");
    std::vector<TensorEntry> tensor;
    for (const json& row : tuples) {
        if (!row.is_array() || row.size() != 4)
            throw input_error(what + ": entries of 'N' must be 4-tuples [a, b, c, n]");
        if (!row[3].is_number_integer())
            throw input_error(what + ": multiplicities must be integers");
        const std::int64_t n = row[3].get<std::int64_t>();
        if (n < 1) throw input_error(what + ": multiplicities must be >= 1");
        tensor.push_back({label_of(row[0], "'N'"), label_of(row[1], "'N'"),
                          label_of(row[2], "'N'"), n});
    }

    std::set<std::pair<Label, Label>> overflow;
    if (const auto it = doc.find("overflow"); it != doc.end()) {
        if (!it->is_array()) throw input_error(what + ": field 'overflow' must be an array");
        for (const json& row : *it) {
            if (!row.is_array() || row.size() != 2)
                throw input_error(what + ": entries of 'overflow' must be pairs [a, b]");
            overflow.insert({label_of(row[0], "'overflow'"), label_of(row[1], "'overflow'")});
        }
    }

    return FusionRing(name, labels, unit_node.get<std::string>(), dual, tensor,
                      std::move(overflow));
}

nlohmann::ordered_json ring_to_json(const FusionRing& ring) {
    nlohmann::ordered_json doc;
    doc["name"] = ring.name();
    nlohmann::ordered_json labels = nlohmann::ordered_json::array();
    for (Label a = 0; a < ring.size(); ++a) labels.push_back(ring.label_name(a));
    doc["labels"] = std::move(labels);
    doc["unit"] = ring.label_name(ring.unit());
    nlohmann::ordered_json dual = nlohmann::ordered_json::object();
    for (Label a = 0; a < ring.size(); ++a)
        dual[ring.label_name(a)] = ring.label_name(ring.dual(a));
    doc["dual"] = std::move(dual);
    nlohmann::ordered_json tuples = nlohmann::ordered_json::array();
    for (const TensorEntry& t : ring.entries())
        tuples.push_back({ring.label_name(t.a), ring.label_name(t.b), ring.label_name(t.c),
                          t.n});
    doc["N"] = std::move(tuples);
    if (ring.truncated()) {
        nlohmann::ordered_json overflow = nlohmann::ordered_json::array();
        for (Label a = 0; a < ring.size(); ++a)
            for (Label b = 0; b < ring.size(); ++b)
                if (ring.fuse_overflows(a, b))
                    overflow.push_back({ring.label_name(a), ring.label_name(b)});
        doc["overflow"] = std::move(overflow);
    }
    return doc;
}

FusionRing load_ring_file(const std::string& path) {
    return parse_ring(read_json_file(path), file_stem(path));
}

void save_ring_file(const FusionRing& ring, const std::string& path) {
    write_text_file(path, ring_to_json(ring).dump(2) + "\n");
}

GroupTable parse_group(const json& doc, const std::string& fallback_name) {
    if (!doc.is_object()) throw input_error("group file: top level must be an object");
    const std::string name = pick_name(doc, fallback_name);
    const std::string what = "group '" + name + "'";

    const std::vector<std::string> elements =
        string_array(need(doc, "elements", what), what);
    std::map<std::string, GElem> index;
    for (std::size_t i = 0; i < elements.size(); ++i) index[elements[i]] = GElem(i);
    auto elem_of = [&](const json& node, const char* where) {
        if (!node.is_string())
            throw input_error(what + ": " + where + " entries must name elements");
        const auto it = index.find(node.get<std::string>());
        if (it == index.end())
            throw input_error(what + ": unknown element '" + node.get<std::string>() +
                              "' in " + where);
        return it->second;
    };

    const std::size_t n = elements.size();
    const json& mult = need(doc, "mult", what);
    if (!mult.is_array()) throw input_error(what + ": field 'mult' must be an array");
    std::vector<std::vector<int>> filled(n, std::vector<int>(n, -1));
    for (const json& row : mult) {
        if (!row.is_array() || row.size() != 3)
            throw input_error(what + ": entries of 'mult' must be triples [a, b, ab]");
        const GElem a = elem_of(row[0], "'mult'");
        const GElem b = elem_of(row[1], "'mult'");
        const GElem c = elem_of(row[2], "'mult'");
        if (filled[a][b] != -1)
            throw input_error(what + ": duplicate product for (" + elements[a] + ", " +
                              elements[b] + ")");
        filled[a][b] = int(c);
    }
    std::vector<std::vector<GElem>> table(n, std::vector<GElem>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (filled[a][b] == -1)
                throw input_error(what + ": product of (" + elements[a] + ", " + elements[b] +
                                  ") is not listed");
            table[a][b] = GElem(filled[a][b]);
        }
    GroupTable out(name, elements, std::move(table));

    if (const auto it = doc.find("inverse"); it != doc.end()) {
        if (!it->is_object())
            throw input_error(what + ": field 'inverse' must map elements to elements");
        for (const auto& [key, value] : it->items()) {
            const GElem a = out.require_element(key);
            const GElem b = elem_of(value, "'inverse'");
            if (out.inverse(a) != b)
                throw input_error(what + ": declared inverse of '" + key +
                                  "' contradicts the table");
        }
    }
    return out;
}

nlohmann::ordered_json group_to_json(const GroupTable& g) {
    nlohmann::ordered_json doc;
    doc["name"] = g.name();
    nlohmann::ordered_json elements = nlohmann::ordered_json::array();
    for (GElem a = 0; a < g.size(); ++a) elements.push_back(g.element_name(a));
    doc["elements"] = std::move(elements);
    nlohmann::ordered_json mult = nlohmann::ordered_json::array();
    for (GElem a = 0; a < g.size(); ++a)
        for (GElem b = 0; b < g.size(); ++b)
            mult.push_back({g.element_name(a), g.element_name(b),
                            g.element_name(g.mul(a, b))});
    doc["mult"] = std::move(mult);
    nlohmann::ordered_json inverse = nlohmann::ordered_json::object();
    for (GElem a = 0; a < g.size(); ++a)
        inverse[g.element_name(a)] = g.element_name(g.inverse(a));
    doc["inverse"] = std::move(inverse);
    return doc;
}

GroupTable load_group_file(const std::string& path) {
    return parse_group(read_json_file(path), file_stem(path));
}

void save_group_file(const GroupTable& g, const std::string& path) {
    write_text_file(path, group_to_json(g).dump(2) + "\n");
}

namespace {

std::optional<std::string> resolve_path(const std::string& spec) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(spec, ec)) return spec;
    const std::string with_ext = spec + ".json";
    if (std::filesystem::is_regular_file(with_ext, ec)) return with_ext;
    return std::nullopt;
}

} // namespace

FusionRing ring_from_spec(const std::string& spec) {
    if (const auto path = resolve_path(spec)) return load_ring_file(*path);
    if (auto ring = builtin_ring(spec)) return std::move(*ring);
    throw input_error("'" + spec +
                      "' is neither a readable file nor a built-in ring name (built-ins: "
                      "trivial, fib, rep_s3, z2, z3, z4, s3, d4, tlj:<n>, tlj-generic:<L>, "
                      "tlj-even:<n>)");
}

GroupTable group_from_spec(const std::string& spec) {
    if (const auto path = resolve_path(spec)) return load_group_file(*path);
    if (auto g = builtin_group(spec)) return std::move(*g);
    throw input_error("'" + spec +
                      "' is neither a readable file nor a built-in group name (built-ins: "
                      "trivial, z2, z3, z4, s3, d4)");
}

} // namespace freefusion
