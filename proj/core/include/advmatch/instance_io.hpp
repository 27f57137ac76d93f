#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "advmatch/instance.hpp"

namespace advmatch {

// Instance files hold one JSON object {"servers": [...], "requests": [...]}.
// Instance-set files hold a JSON array of such objects.

Instance parse_instance(std::string_view json_text);
std::string format_instance(const Instance& instance);

Instance load_instance(const std::filesystem::path& path);
void save_instance(const Instance& instance, const std::filesystem::path& path);

/// Accepts either a single instance object or an array of them.
std::vector<Instance> load_instances(const std::filesystem::path& path);
void save_instances(std::span<const Instance> instances, const std::filesystem::path& path);

}  // namespace advmatch
