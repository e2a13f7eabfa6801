// Copyright 2026 The ks18 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ks18/datasets.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ks18 {

std::vector<std::string> fixture_names() {
    std::vector<std::string> names;
    for (const auto &[name, text] : detail::embedded_fixtures()) {
        names.push_back(name);
    }
    return names;
}

std::string embedded_fixture_text(const std::string &name) {
    for (const auto &[n, text] : detail::embedded_fixtures()) {
        if (n == name) {
            return text;
        }
    }
    throw std::invalid_argument("unknown fixture '" + name + "'");
}

std::string fixture_text(const std::string &name) {
    std::string embedded = embedded_fixture_text(name);
    const char *dir = std::getenv("KS_FIXTURES_DIR");
    if (dir == nullptr || *dir == '\0') {
        return embedded;
    }
    const std::filesystem::path path = std::filesystem::path(dir) / name;
    if (!std::filesystem::exists(path)) {
        return embedded;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> dump_fixtures(const std::string &dir) {
    std::filesystem::create_directories(dir);
    std::vector<std::string> written;
    for (const auto &[name, text] : detail::embedded_fixtures()) {
        const auto path = (std::filesystem::path(dir) / name).string();
        std::ofstream out(path, std::ios::binary);
        out << text;
        if (!out) {
            throw std::runtime_error("cannot write " + path);
        }
        written.push_back(path);
    }
    return written;
}

}  // namespace ks18
