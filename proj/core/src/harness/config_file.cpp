#include "hedac/harness/config_file.hpp"

#include "hedac/error.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace hedac {
namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

[[noreturn]] void bad_field(const std::string& section, const std::string& key,
                            const std::string& expected, const std::string& got) {
    throw ValidationError("config field [" + section + "] " + key + ": expected " + expected +
                          ", got '" + got + "'");
}

} // namespace

ConfigFile ConfigFile::parse(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open config file " + path);

    ConfigFile cfg;
    cfg.path_ = path;
    std::string line, section;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ParseError(path, lineno, "unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section.empty()) throw ParseError(path, lineno, "empty section name");
            cfg.sections_[section];
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError(path, lineno, "expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ParseError(path, lineno, "empty key");
        if (section.empty()) throw ParseError(path, lineno, "key outside any [section]");
        if (!cfg.sections_[section].try_emplace(key, Entry{value, lineno}).second)
            throw ParseError(path, lineno, "duplicate key '" + key + "'");
    }
    return cfg;
}

bool ConfigFile::has_section(const std::string& section) const {
    return sections_.contains(section);
}

bool ConfigFile::has(const std::string& section, const std::string& key) const {
    auto s = sections_.find(section);
    return s != sections_.end() && s->second.contains(key);
}

const ConfigFile::Entry& ConfigFile::entry(const std::string& section,
                                           const std::string& key) const {
    auto s = sections_.find(section);
    if (s == sections_.end())
        throw ValidationError("config section [" + section + "] is missing in " + path_);
    auto k = s->second.find(key);
    if (k == s->second.end())
        throw ValidationError("config field [" + section + "] " + key + " is missing in " + path_);
    k->second.consumed = true;
    return k->second;
}

std::string ConfigFile::get_string(const std::string& section, const std::string& key) const {
    return entry(section, key).value;
}

double ConfigFile::get_double(const std::string& section, const std::string& key) const {
    const Entry& e = entry(section, key);
    try {
        std::size_t pos = 0;
        const double v = std::stod(e.value, &pos);
        if (pos != e.value.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        bad_field(section, key, "a number", e.value);
    }
}

long ConfigFile::get_int(const std::string& section, const std::string& key) const {
    const Entry& e = entry(section, key);
    try {
        std::size_t pos = 0;
        const long v = std::stol(e.value, &pos);
        if (pos != e.value.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        bad_field(section, key, "an integer", e.value);
    }
}

bool ConfigFile::get_bool(const std::string& section, const std::string& key) const {
    const Entry& e = entry(section, key);
    std::string v = e.value;
    std::transform(v.begin(), v.end(), v.begin(), [](unsigned char c) { return std::tolower(c); });
    if (v == "true" || v == "yes" || v == "1" || v == "on") return true;
    if (v == "false" || v == "no" || v == "0" || v == "off") return false;
    bad_field(section, key, "a boolean", e.value);
}

Vec3 ConfigFile::get_vec3(const std::string& section, const std::string& key) const {
    const Entry& e = entry(section, key);
    std::istringstream ls(e.value);
    Vec3 v;
    std::string rest;
    if (!(ls >> v.x() >> v.y() >> v.z()) || (ls >> rest))
        bad_field(section, key, "three numbers", e.value);
    return v;
}

Eigen::Vector3i ConfigFile::get_vec3i(const std::string& section, const std::string& key) const {
    const Entry& e = entry(section, key);
    std::istringstream ls(e.value);
    Eigen::Vector3i v;
    std::string rest;
    if (!(ls >> v.x() >> v.y() >> v.z()) || (ls >> rest))
        bad_field(section, key, "three integers", e.value);
    return v;
}

std::vector<Vec3> ConfigFile::get_vec3_list(const std::string& section,
                                            const std::string& key) const {
    const Entry& e = entry(section, key);
    std::vector<Vec3> out;
    std::istringstream groups(e.value);
    std::string triple;
    while (std::getline(groups, triple, ';')) {
        triple = trim(triple);
        if (triple.empty()) continue;
        std::istringstream ls(triple);
        Vec3 v;
        std::string rest;
        if (!(ls >> v.x() >> v.y() >> v.z()) || (ls >> rest))
            bad_field(section, key, "semicolon-separated coordinate triples", e.value);
        out.push_back(v);
    }
    if (out.empty()) bad_field(section, key, "at least one coordinate triple", e.value);
    return out;
}

template <>
double ConfigFile::get_or(const std::string& section, const std::string& key,
                          double fallback) const {
    return has(section, key) ? get_double(section, key) : fallback;
}

template <>
long ConfigFile::get_or(const std::string& section, const std::string& key, long fallback) const {
    return has(section, key) ? get_int(section, key) : fallback;
}

template <>
bool ConfigFile::get_or(const std::string& section, const std::string& key, bool fallback) const {
    return has(section, key) ? get_bool(section, key) : fallback;
}

template <>
std::string ConfigFile::get_or(const std::string& section, const std::string& key,
                               std::string fallback) const {
    return has(section, key) ? get_string(section, key) : fallback;
}

void ConfigFile::ensure_all_consumed() const {
    std::string unknown;
    for (const auto& [section, keys] : sections_) {
        for (const auto& [key, e] : keys) {
            if (!e.consumed)
                unknown += "\n  [" + section + "] " + key + " (line " + std::to_string(e.line) + ")";
        }
    }
    if (!unknown.empty())
        throw ValidationError("unknown config keys in " + path_ + ":" + unknown);
}

} // namespace hedac
