#pragma once

#include "hedac/types.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hedac {

/// Sectioned key-value configuration file:
///
///   [section]
///   key = value       # trailing comments allowed
///
/// Typed getters record which keys were consumed so the scenario loader can
/// reject unknown keys with their line numbers.
class ConfigFile {
public:
    static ConfigFile parse(const std::string& path);

    [[nodiscard]] bool has_section(const std::string& section) const;
    [[nodiscard]] bool has(const std::string& section, const std::string& key) const;

    [[nodiscard]] std::string get_string(const std::string& section, const std::string& key) const;
    [[nodiscard]] double get_double(const std::string& section, const std::string& key) const;
    [[nodiscard]] long get_int(const std::string& section, const std::string& key) const;
    [[nodiscard]] bool get_bool(const std::string& section, const std::string& key) const;
    [[nodiscard]] Vec3 get_vec3(const std::string& section, const std::string& key) const;
    [[nodiscard]] Eigen::Vector3i get_vec3i(const std::string& section,
                                            const std::string& key) const;
    /// Semicolon-separated triples: "x y z; x y z; ..."
    [[nodiscard]] std::vector<Vec3> get_vec3_list(const std::string& section,
                                                  const std::string& key) const;

    template <typename T>
    [[nodiscard]] T get_or(const std::string& section, const std::string& key, T fallback) const;

    /// Throws ValidationError listing any keys never consumed by a getter.
    void ensure_all_consumed() const;

    [[nodiscard]] const std::string& path() const { return path_; }

private:
    struct Entry {
        std::string value;
        long line = 0;
        mutable bool consumed = false;
    };

    [[nodiscard]] const Entry& entry(const std::string& section, const std::string& key) const;

    std::string path_;
    std::map<std::string, std::map<std::string, Entry>> sections_;
};

template <>
double ConfigFile::get_or(const std::string&, const std::string&, double) const;
template <>
long ConfigFile::get_or(const std::string&, const std::string&, long) const;
template <>
bool ConfigFile::get_or(const std::string&, const std::string&, bool) const;
template <>
std::string ConfigFile::get_or(const std::string&, const std::string&, std::string) const;

} // namespace hedac
