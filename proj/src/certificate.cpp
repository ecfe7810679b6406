#include "cayfact/certificate.hpp"

#include <algorithm>

#include "cayfact/errors.hpp"

namespace cayfact {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

void require_keys(const json& j, const char* what, const std::vector<std::string>& required,
                  const std::vector<std::string>& optional = {}) {
    if (!j.is_object()) throw schema_error(std::string(what) + " must be a JSON object");
    for (const auto& key : required)
        if (!j.contains(key)) throw schema_error(std::string(what) + " is missing key \"" + key + "\"");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (std::find(required.begin(), required.end(), key) == required.end() &&
            std::find(optional.begin(), optional.end(), key) == optional.end())
            throw schema_error(std::string(what) + " has unknown key \"" + key + "\"");
    }
}

int get_int(const json& j, const char* what) {
    if (!j.is_number_integer()) throw schema_error(std::string(what) + " must be an integer");
    return j.get<int>();
}

std::vector<int> get_int_row(const json& j, const char* what) {
    if (!j.is_array()) throw schema_error(std::string(what) + " must be an array of integers");
    std::vector<int> row;
    for (const auto& v : j) row.push_back(get_int(v, what));
    return row;
}

ordered_json matrix_to_json(const ModMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < m.n; ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < m.n; ++j) row.push_back(m.at(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

ModMatrix matrix_from_json(int p, const json& j, const char* what) {
    if (!j.is_array() || j.empty()) throw schema_error(std::string(what) + " must be a nonempty array of rows");
    const int n = static_cast<int>(j.size());
    ModMatrix m(n, p);
    for (int i = 0; i < n; ++i) {
        const std::vector<int> row = get_int_row(j[static_cast<std::size_t>(i)], what);
        if (static_cast<int>(row.size()) != n) throw schema_error(std::string(what) + " must be square");
        for (int c = 0; c < n; ++c) {
            if (row[static_cast<std::size_t>(c)] < 0 || row[static_cast<std::size_t>(c)] >= p)
                throw schema_error(std::string(what) + " has an entry outside [0, " + std::to_string(p) + ")");
            m.at(i, c) = row[static_cast<std::size_t>(c)];
        }
    }
    return m;
}

}  // namespace

nlohmann::ordered_json group_to_json(const Group& G) {
    ordered_json j;
    if (G.kind() == GroupKind::elementary_product) {
        j["kind"] = "elementary_product";
        ordered_json blocks = ordered_json::array();
        for (const Block& b : G.blocks()) blocks.push_back(ordered_json::array({b.p, b.r}));
        j["blocks"] = std::move(blocks);
    } else {
        if (!Group::is_catalog_name(G.name()))
            throw schema_error("small_table group \"" + G.name() + "\" is not a catalog entry and cannot be serialized");
        j["kind"] = "small_table";
        j["name"] = G.name();
    }
    return j;
}

Group group_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw schema_error("group must be an object with a string \"kind\"");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "elementary_product") {
        require_keys(j, "group", {"kind", "blocks"});
        if (!j["blocks"].is_array() || j["blocks"].empty())
            throw schema_error("group blocks must be a nonempty array of [p, r] pairs");
        std::vector<Block> blocks;
        for (const auto& b : j["blocks"]) {
            const std::vector<int> pr = get_int_row(b, "group block");
            if (pr.size() != 2) throw schema_error("group block must be a [p, r] pair");
            blocks.push_back({pr[0], pr[1]});
        }
        try {
            return Group::elementary(std::move(blocks));
        } catch (const error& e) {
            throw schema_error(std::string("invalid group blocks: ") + e.what());
        }
    }
    if (kind == "small_table") {
        require_keys(j, "group", {"kind", "name"});
        if (!j["name"].is_string()) throw schema_error("group name must be a string");
        const std::string name = j["name"].get<std::string>();
        if (!Group::is_catalog_name(name)) throw schema_error("unknown small_table catalog name \"" + name + "\"");
        return Group::catalog(name);
    }
    throw schema_error("group kind must be \"elementary_product\" or \"small_table\"");
}

nlohmann::ordered_json automorphism_to_json(const Automorphism& a) {
    ordered_json j;
    if (a.kind == Automorphism::Kind::block_linear) {
        ordered_json ms = ordered_json::array();
        for (const ModMatrix& m : a.matrices) ms.push_back(matrix_to_json(m));
        j["matrices"] = std::move(ms);
    } else {
        j["perm"] = a.perm;
    }
    return j;
}

Automorphism automorphism_from_json(const Group& G, const nlohmann::json& j) {
    if (!j.is_object()) throw schema_error("witness must be a JSON object");
    if (j.contains("matrices")) {
        require_keys(j, "witness", {"matrices"});
        if (!j["matrices"].is_array()) throw schema_error("witness matrices must be an array");
        if (G.kind() != GroupKind::elementary_product)
            throw schema_error("matrix witness supplied for a table group");
        if (j["matrices"].size() != static_cast<std::size_t>(G.block_count()))
            throw schema_error("witness matrix count differs from the group's block count");
        std::vector<ModMatrix> ms;
        for (int bi = 0; bi < G.block_count(); ++bi) {
            const Block& b = G.blocks()[static_cast<std::size_t>(bi)];
            ms.push_back(matrix_from_json(b.p, j["matrices"][static_cast<std::size_t>(bi)], "witness matrix"));
            if (ms.back().n != b.r)
                throw schema_error("witness matrix at block " + std::to_string(bi) + " must be " +
                                   std::to_string(b.r) + "x" + std::to_string(b.r));
        }
        return Automorphism::linear(std::move(ms));
    }
    if (j.contains("perm")) {
        require_keys(j, "witness", {"perm"});
        if (!j["perm"].is_array() || j["perm"].size() != G.order())
            throw schema_error("witness perm must be an array of |G| element ids");
        std::vector<Elem> perm;
        for (const auto& v : j["perm"]) {
            const int id = get_int(v, "witness perm entry");
            if (id < 0 || static_cast<std::uint64_t>(id) >= G.order())
                throw schema_error("witness perm entry out of range");
            perm.push_back(static_cast<Elem>(id));
        }
        return Automorphism::permutation_of(std::move(perm));
    }
    throw schema_error("witness must carry either \"matrices\" or \"perm\"");
}

nlohmann::ordered_json field_to_json(const FieldRep& f) {
    ordered_json j;
    j["p"] = f.p;
    j["n"] = f.n;
    j["poly"] = f.poly;
    j["gamma"] = matrix_to_json(f.gamma);
    return j;
}

FieldRep field_from_json(const nlohmann::json& j) {
    require_keys(j, "field_data entry", {"p", "n", "poly", "gamma"});
    const int p = get_int(j["p"], "field p");
    const int n = get_int(j["n"], "field n");
    FieldRep f;
    try {
        f = FieldRep::from_poly(p, n, get_int_row(j["poly"], "field poly"));
    } catch (const error& e) {
        throw schema_error(std::string("invalid field_data entry: ") + e.what());
    }
    if (matrix_from_json(p, j["gamma"], "field gamma") != f.gamma)
        throw schema_error("field gamma does not match the companion matrix of poly");
    return f;
}

nlohmann::ordered_json certificate_to_json(const Certificate& c) {
    ordered_json j;
    j["version"] = "v1";
    j["group"] = group_to_json(c.group);
    j["k"] = c.k;
    ordered_json parts = ordered_json::array();
    for (const ConnectionSet& s : c.parts) parts.push_back(s.elems);
    j["parts"] = std::move(parts);
    if (!c.witnesses.empty()) {
        ordered_json ws = ordered_json::array();
        for (const Automorphism& w : c.witnesses) ws.push_back(automorphism_to_json(w));
        j["witnesses"] = std::move(ws);
    }
    if (!c.field_data.empty()) {
        ordered_json fs = ordered_json::array();
        for (const FieldRep& f : c.field_data) fs.push_back(field_to_json(f));
        j["field_data"] = std::move(fs);
    }
    if (!c.claims.empty()) j["claims"] = c.claims;
    j["provenance"] = c.provenance;
    return j;
}

Certificate certificate_from_json(const nlohmann::json& j) {
    require_keys(j, "certificate", {"version", "group", "k", "parts", "provenance"},
                 {"witnesses", "field_data", "claims"});
    if (!j["version"].is_string() || j["version"].get<std::string>() != "v1")
        throw schema_error("certificate version must be \"v1\"");
    Certificate c;
    c.group = group_from_json(j["group"]);
    c.k = get_int(j["k"], "certificate k");
    if (c.k < 2) throw schema_error("certificate k must be >= 2");
    if (!j["parts"].is_array() || j["parts"].empty()) throw schema_error("certificate parts must be a nonempty array");
    for (const auto& part : j["parts"]) {
        ConnectionSet s;
        for (const int id : get_int_row(part, "certificate part")) {
            if (id < 0 || static_cast<std::uint64_t>(id) >= c.group.order())
                throw schema_error("part element id " + std::to_string(id) + " out of range for " +
                                   c.group.describe());
            s.elems.push_back(static_cast<Elem>(id));
        }
        c.parts.push_back(std::move(s));
    }
    if (j.contains("witnesses")) {
        if (!j["witnesses"].is_array()) throw schema_error("certificate witnesses must be an array");
        for (const auto& w : j["witnesses"]) c.witnesses.push_back(automorphism_from_json(c.group, w));
    }
    if (j.contains("field_data")) {
        if (!j["field_data"].is_array()) throw schema_error("certificate field_data must be an array");
        for (const auto& f : j["field_data"]) c.field_data.push_back(field_from_json(f));
    }
    if (j.contains("claims")) {
        if (!j["claims"].is_array()) throw schema_error("certificate claims must be an array of strings");
        for (const auto& s : j["claims"]) {
            if (!s.is_string()) throw schema_error("certificate claims must be an array of strings");
            c.claims.push_back(s.get<std::string>());
        }
    }
    if (!j["provenance"].is_string()) throw schema_error("certificate provenance must be a string");
    c.provenance = j["provenance"].get<std::string>();
    return c;
}

std::string certificate_to_string(const Certificate& c) { return certificate_to_json(c).dump(2) + "\n"; }

Certificate certificate_from_string(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw schema_error(std::string("certificate is not valid JSON: ") + e.what());
    }
    return certificate_from_json(j);
}

Certificate to_certificate(const Factorization& f, std::string provenance, std::vector<FieldRep> field_data) {
    Certificate c;
    c.group = f.group;
    c.k = f.k;
    c.parts = f.parts;
    c.witnesses = f.witnesses;
    c.field_data = std::move(field_data);
    c.claims = {"partition"};
    if (!c.witnesses.empty()) c.claims.push_back("witness_isomorphism");
    c.provenance = std::move(provenance);
    return c;
}

Factorization to_factorization(const Certificate& c) {
    Factorization f;
    f.group = c.group;
    f.k = c.k;
    f.parts = c.parts;
    f.witnesses = c.witnesses;
    return f;
}

}  // namespace cayfact
