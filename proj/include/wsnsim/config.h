#pragma once

#include <string>
#include <string_view>

#include "wsnsim/model.h"

namespace wsnsim {

// flat `key = value` text, # comments, UTF-8; omitted keys keep their
// defaults; duplicate keys last-wins; validates before returning
SimConfig parse_config(std::string_view text);

// set one config field by key name; throws config_error for unknown keys or
// unparseable values (shared by the file parser and CLI override flags)
void apply_setting(SimConfig& config, std::string_view key,
                   std::string_view value);

// range checks; throws config_error naming the offending key
void validate(const SimConfig& config);

SimConfig load_config_file(const std::string& path);

}  // namespace wsnsim
