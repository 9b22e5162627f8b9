#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gsqg {

/// Flat key = value configuration file. '#' starts a comment, lists are
/// comma-separated. Keys mirror the CLI flags; flags override file values.
/// load() also accepts a run manifest (JSON), from which the embedded
/// config table is extracted, so a recorded run can be replayed directly.
class KeyValueConfig {
public:
    static KeyValueConfig load(const std::filesystem::path& path);
    static KeyValueConfig parse(const std::string& text);

    bool has(const std::string& key) const { return values_.count(key) != 0; }
    std::optional<std::string> get(const std::string& key) const;
    double get_double(const std::string& key, double fallback) const;
    std::int64_t get_int(const std::string& key, std::int64_t fallback) const;
    std::string get_string(const std::string& key, const std::string& fallback) const;
    std::vector<double> get_list(const std::string& key,
                                 const std::vector<double>& fallback) const;

    void set(const std::string& key, const std::string& value) { values_[key] = value; }
    void set_double(const std::string& key, double value);
    void set_int(const std::string& key, std::int64_t value);
    void set_list(const std::string& key, const std::vector<double>& values);

    std::string serialize() const;
    const std::map<std::string, std::string>& values() const { return values_; }

private:
    std::map<std::string, std::string> values_;
};

/// Record of one CLI invocation: resolved configuration, seed, tool version,
/// produced files, wall clock and step counts. Identical manifests replay to
/// byte-identical CSV/JSON outputs.
struct RunManifest {
    std::string subcommand;
    std::string version;
    std::uint64_t seed = 0;
    KeyValueConfig config;
    std::vector<std::string> outputs;
    double wall_clock_sec = 0.0;
    std::uint64_t step_count = 0;

    std::string to_json() const;
    static RunManifest from_json(const std::string& text);
    void save(const std::filesystem::path& path) const;
    static RunManifest load(const std::filesystem::path& path);
};

}  // namespace gsqg
