#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cayfact/factorization.hpp"
#include "cayfact/field.hpp"
#include "cayfact/group.hpp"

namespace cayfact {

// A serializable factorization claim. Schema "v1":
//   {
//     "version": "v1",
//     "group": {"kind":"elementary_product","blocks":[[p,r],..]}
//            | {"kind":"small_table","name":"Q8"},
//     "k": <int>,
//     "parts": [[element_id,..],..],
//     "witnesses": [{"matrices":[[[row],..],..]} | {"perm":[..]}, ..],  optional
//     "field_data": [{"p":..,"n":..,"poly":[..],"gamma":[[row],..]}, ..],  optional
//     "claims": [".."],  optional
//     "provenance": ".."
//   }
// Element ids are the flat mixed-radix encodings. Unknown keys are rejected.
// Parsing checks structure and ranges only; whether the parts really form a
// factorization is the verifier's job.
struct Certificate {
    Group group;
    int k = 0;
    std::vector<ConnectionSet> parts;
    std::vector<Automorphism> witnesses;  // empty = none supplied
    std::vector<FieldRep> field_data;     // empty = none supplied
    std::vector<std::string> claims;
    std::string provenance;
};

nlohmann::ordered_json group_to_json(const Group& G);
Group group_from_json(const nlohmann::json& j);

nlohmann::ordered_json automorphism_to_json(const Automorphism& a);
// Needs the group to recover the matrix moduli.
Automorphism automorphism_from_json(const Group& G, const nlohmann::json& j);

nlohmann::ordered_json field_to_json(const FieldRep& f);
FieldRep field_from_json(const nlohmann::json& j);

nlohmann::ordered_json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);

// dump(2) + trailing newline; byte-identical across runs for equal inputs.
std::string certificate_to_string(const Certificate& c);
Certificate certificate_from_string(const std::string& text);

Certificate to_certificate(const Factorization& f, std::string provenance,
                           std::vector<FieldRep> field_data = {});
Factorization to_factorization(const Certificate& c);

}  // namespace cayfact
