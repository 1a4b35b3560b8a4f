/*
Copyright 2026 The flexmv Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "flexmv/model.hpp"

namespace flexmv {

/// Parses an instance document (UTF-8 JSON). Missing `release_us` defaults
/// to 0 and missing `deadline_us` defaults to the period. The result is
/// checked with validate_instance(); any problem raises InstanceError.
Instance parse_instance(std::string_view json_text);

/// Reads and parses an instance file. Unreadable files raise InstanceError.
Instance load_instance(const std::filesystem::path& path);

/// Serializes to the instance document format. Output is deterministic:
/// the same instance always yields the same bytes.
std::string serialize_instance(const Instance& instance);

/// Reads a whole text file; throws InstanceError when it cannot be opened.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace flexmv
