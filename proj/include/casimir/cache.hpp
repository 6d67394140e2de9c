#pragma once

#include <json.hpp>
#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include "casimir/config.hpp"

namespace casimir {

// On-disk result cache: one JSON file mapping keys to {engine, result}.
// Entries written by a different engine version are treated as misses, a
// corrupt file is skipped with a warning instead of failing the command, and
// writes land in a temp file in the same directory followed by a rename.
class CacheStore {
  public:
    explicit CacheStore(std::filesystem::path path) : path_(std::move(path)) {}

    const std::filesystem::path& path() const { return path_; }

    std::optional<nlohmann::ordered_json> get(const std::string& key) const {
        nlohmann::ordered_json all = load();
        auto it = all.find(key);
        if (it == all.end()) return std::nullopt;
        if (!it->is_object() || !it->contains("engine") || !it->contains("result"))
            return std::nullopt;
        if ((*it)["engine"] != kEngineVersion) return std::nullopt;
        return (*it)["result"];
    }

    void put(const std::string& key, const nlohmann::ordered_json& value) const {
        nlohmann::ordered_json all = load();
        all[key] = {{"engine", kEngineVersion}, {"result", value}};
        if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
        std::filesystem::path tmp = path_;
        tmp += ".tmp" + std::to_string(::getpid());
        {
            std::ofstream out(tmp, std::ios::trunc);
            if (!out)
                throw std::runtime_error("cannot open cache temp file " + tmp.string());
            out << all.dump(2) << '\n';
            out.flush();
            if (!out)
                throw std::runtime_error("cannot write cache temp file " + tmp.string());
        }
        std::filesystem::rename(tmp, path_);
    }

  private:
    nlohmann::ordered_json load() const {
        std::ifstream in(path_);
        if (!in) return nlohmann::ordered_json::object();
        nlohmann::ordered_json all = nlohmann::ordered_json::parse(in, nullptr, false);
        if (all.is_discarded() || !all.is_object()) {
            std::cerr << "warning: cache file " << path_.string()
                      << " is corrupt; treating as empty\n";
            return nlohmann::ordered_json::object();
        }
        return all;
    }

    std::filesystem::path path_;
};

}  // namespace casimir
