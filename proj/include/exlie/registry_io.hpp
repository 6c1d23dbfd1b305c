#pragma once

// JSON serialization of the embedded registries (real forms with their
// Satake data, tabulated parabolic and grading data, related classes and
// Jordan roles) and the content hash stamped on every CLI document.

#include <string>
#include <vector>

#include "json.hpp"

#include "exlie/real_form.hpp"

namespace exlie {

nlohmann::json form_to_json(const RealForm& f);
// Throws kUsage on missing or mistyped fields.
RealForm form_from_json(const nlohmann::json& j);

nlohmann::json forms_to_json(const std::vector<RealForm>& forms);
std::vector<RealForm> forms_from_json(const nlohmann::json& j);

// Everything that `dump-registry` prints: forms plus all tables.
nlohmann::json registry_document(const std::vector<RealForm>& forms);
nlohmann::json registry_document();

// Lower-case hex SHA-256 of the compact, key-sorted registry document.
std::string sha256_hex(const std::string& data);
std::string registry_hash(const std::vector<RealForm>& forms);
std::string registry_hash();

}  // namespace exlie
