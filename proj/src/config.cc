// Copyright 2026 The Bellsim Authors
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

#include "bellsim/config.h"

#include <charconv>
#include <cmath>
#include <set>

#include <nlohmann/json.hpp>

#include "bellsim/errors.h"

namespace bellsim {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json &obj, const std::set<std::string> &allowed, std::string_view where) {
    for (const auto &item : obj.items()) {
        if (!allowed.contains(item.key())) {
            throw ConfigError("unknown key '" + item.key() + "' in " + std::string(where));
        }
    }
}

double require_number(const json &obj, const std::string &key) {
    const json &v = obj.at(key);
    if (!v.is_number()) {
        throw ConfigError("key '" + key + "' must be a number");
    }
    double x = v.get<double>();
    if (!std::isfinite(x)) {
        throw ConfigError("key '" + key + "' must be finite");
    }
    return x;
}

std::uint64_t require_unsigned(const json &obj, const std::string &key) {
    const json &v = obj.at(key);
    if (v.is_number_unsigned()) {
        return v.get<std::uint64_t>();
    }
    if (v.is_number_integer()) {
        throw ConfigError("key '" + key + "' must be >= 0");
    }
    throw ConfigError("key '" + key + "' must be a non-negative integer");
}

void require_present(const json &obj, const std::string &key) {
    if (!obj.contains(key)) {
        throw ConfigError("missing required key '" + key + "'");
    }
}

SourceKind parse_source_kind(const json &v) {
    if (!v.is_string()) {
        throw ConfigError("key 'source' must be a string");
    }
    auto s = v.get<std::string>();
    if (s == "gamma_mixture") {
        return SourceKind::kGammaMixture;
    }
    if (s == "fixed_xi") {
        return SourceKind::kFixedXi;
    }
    if (s == "uniform") {
        return SourceKind::kUniform;
    }
    throw ConfigError("key 'source' must be one of gamma_mixture, fixed_xi, uniform; got '" + s + "'");
}

}  // namespace

std::string_view source_kind_name(SourceKind kind) {
    switch (kind) {
        case SourceKind::kGammaMixture:
            return "gamma_mixture";
        case SourceKind::kFixedXi:
            return "fixed_xi";
        case SourceKind::kUniform:
            return "uniform";
    }
    return "?";
}

SourcePolicy RunConfig::source() const {
    switch (source_kind) {
        case SourceKind::kGammaMixture:
            return GammaMixture{gamma.value_or(1.0), PairedSymmetric{}};
        case SourceKind::kFixedXi:
            return DeltaPair{Angle(xi.value_or(0.0))};
        case SourceKind::kUniform:
            return UniformOnCircle{};
    }
    return UniformOnCircle{};
}

RunConfig parse_config(std::string_view text, bool degrees) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ConfigError(std::string("malformed config document: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ConfigError("malformed config document: top level must be a JSON object");
    }
    reject_unknown_keys(doc, {"theta", "angles", "gamma", "source", "xi", "events", "seed", "chunk_size", "audit"},
                        "config");

    const double to_radians = degrees ? kPi / 180.0 : 1.0;
    RunConfig cfg;

    bool has_theta = doc.contains("theta");
    bool has_angles = doc.contains("angles");
    if (has_theta && has_angles) {
        throw ConfigError("'theta' and 'angles' are mutually exclusive; give exactly one");
    }
    if (!has_theta && !has_angles) {
        throw ConfigError("missing settings: give exactly one of 'theta' or 'angles'");
    }
    if (has_theta) {
        cfg.theta = require_number(doc, "theta") * to_radians;
        cfg.quad = SettingsQuad::from_theta(*cfg.theta);
    } else {
        const json &angles = doc.at("angles");
        if (!angles.is_object()) {
            throw ConfigError("key 'angles' must be an object with a, a_prime, b, b_prime");
        }
        reject_unknown_keys(angles, {"a", "a_prime", "b", "b_prime"}, "angles");
        for (const char *k : {"a", "a_prime", "b", "b_prime"}) {
            if (!angles.contains(k)) {
                throw ConfigError(std::string("missing required key 'angles.") + k + "'");
            }
        }
        cfg.quad = {Angle(require_number(angles, "a") * to_radians),
                    Angle(require_number(angles, "a_prime") * to_radians),
                    Angle(require_number(angles, "b") * to_radians),
                    Angle(require_number(angles, "b_prime") * to_radians)};
    }

    require_present(doc, "source");
    cfg.source_kind = parse_source_kind(doc.at("source"));

    if (doc.contains("gamma")) {
        if (cfg.source_kind != SourceKind::kGammaMixture) {
            throw ConfigError("key 'gamma' is only valid with source gamma_mixture");
        }
        double g = require_number(doc, "gamma");
        if (g < 0.0 || g > 1.0) {
            throw ConfigError("key 'gamma' out of range: must lie in [0, 1]");
        }
        cfg.gamma = g;
    } else if (cfg.source_kind == SourceKind::kGammaMixture) {
        throw ConfigError("missing required key 'gamma' for source gamma_mixture");
    }

    if (doc.contains("xi")) {
        if (cfg.source_kind != SourceKind::kFixedXi) {
            throw ConfigError("key 'xi' is only valid with source fixed_xi");
        }
        cfg.xi = require_number(doc, "xi") * to_radians;
    } else if (cfg.source_kind == SourceKind::kFixedXi) {
        throw ConfigError("missing required key 'xi' for source fixed_xi");
    }

    require_present(doc, "events");
    cfg.events = require_unsigned(doc, "events");
    require_present(doc, "seed");
    cfg.seed = require_unsigned(doc, "seed");

    if (doc.contains("chunk_size")) {
        std::uint64_t c = require_unsigned(doc, "chunk_size");
        if (c < 1) {
            throw ConfigError("key 'chunk_size' out of range: must be >= 1");
        }
        cfg.chunk_size = static_cast<std::size_t>(c);
    }

    if (doc.contains("audit")) {
        const json &audit = doc.at("audit");
        if (!audit.is_object()) {
            throw ConfigError("key 'audit' must be an object");
        }
        reject_unknown_keys(audit, {"z_threshold", "chi2_alpha"}, "audit");
        if (audit.contains("z_threshold")) {
            double z = require_number(audit, "z_threshold");
            if (z <= 0) {
                throw ConfigError("key 'audit.z_threshold' out of range: must be > 0");
            }
            cfg.audit.z_threshold = z;
        }
        if (audit.contains("chi2_alpha")) {
            double a = require_number(audit, "chi2_alpha");
            if (a <= 0 || a >= 1) {
                throw ConfigError("key 'audit.chi2_alpha' out of range: must lie in (0, 1)");
            }
            cfg.audit.chi2_alpha = a;
        }
    }
    return cfg;
}

void apply_seed_override(RunConfig &config, std::optional<std::string_view> env_value) {
    if (!env_value) {
        return;
    }
    std::uint64_t seed = 0;
    const char *first = env_value->data();
    const char *last = first + env_value->size();
    auto [ptr, ec] = std::from_chars(first, last, seed);
    if (env_value->empty() || ec != std::errc{} || ptr != last) {
        throw ConfigError("BELLSIM_SEED must be a non-negative integer, got '" + std::string(*env_value) + "'");
    }
    config.seed = seed;
    config.seed_from_env = true;
}

}  // namespace bellsim
