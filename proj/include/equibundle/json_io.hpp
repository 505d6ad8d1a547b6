#pragma once

#include "equibundle/classify.hpp"
#include "equibundle/picard.hpp"

#include <json.hpp>

#include <filesystem>

namespace equibundle {

using Json = nlohmann::json;

// Structural error with the JSON path of the offending field.
class SchemaError : public std::runtime_error {
public:
    SchemaError(const std::string& path, const std::string& what)
        : std::runtime_error(path + ": " + what), path_(path) {}
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

// Shape-only validation, no construction. Returns problems, empty if fine.
std::vector<std::string> schema_check_group(const Json& j);
std::vector<std::string> schema_check_fan(const Json& j);
std::vector<std::string> schema_check_rep(const Json& j);
std::vector<std::string> schema_check_object(const Json& j);

std::shared_ptr<const RootDatum> parse_group(const Json& j);
std::shared_ptr<const Fan> parse_fan(const Json& j, std::shared_ptr<const RootDatum> datum);
// Explicit matrices or a constructor spec; enforces the dimension cap.
std::shared_ptr<const Rep> parse_rep(const Json& j, std::shared_ptr<const RootDatum> datum,
                                     std::size_t max_dim);
FiltrationObject parse_object(const Json& j, std::shared_ptr<const RootDatum> datum,
                              std::shared_ptr<const Fan> fan, std::size_t max_dim);

Json rational_json(const Rational& q);
Rational rational_from_json(const Json& j, const std::string& path);

Json object_to_json(const FiltrationObject& obj);
Json validation_report_json(const ValidationReport& r);
Json character_table_json(const CharacterTable& t);
Json kostant_report_json(const KostantReport& r);
Json fan_report_json(const FanReport& r);
Json picard_json(const PicardGroup& g);

Json read_json_file(const std::filesystem::path& path);
// Canonical serialization written through a temp file and renamed into place.
void atomic_write_json(const std::filesystem::path& path, const Json& j);

std::size_t max_dim_from_env();

}  // namespace equibundle
