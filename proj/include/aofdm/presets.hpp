// aofdm: analog and digital OFDM baseband simulation library
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <string>
#include <vector>

namespace aofdm::scenario {

/// A bundled, ready-to-run scenario reproducing one reference figure.
struct Preset {
    std::string name;
    std::string figure;  // reference figure the dataset corresponds to
    std::string description;
    std::string config_json;
};

const std::vector<Preset>& presets();
const Preset* find_preset(const std::string& name);

/// Fixed-width text table for the `presets` subcommand.
std::string presets_table();

}  // namespace aofdm::scenario
