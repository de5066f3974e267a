#pragma once

#include <stdexcept>
#include <string>

namespace valuesrag {

/// Invalid configuration or malformed input data. CLI exit code 1.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// A pipeline stage was invoked before the artifacts it depends on exist.
/// Carries the name of the stage that must run first. CLI exit code 2.
class PrerequisiteError : public std::runtime_error {
public:
    PrerequisiteError(std::string stage, const std::string& what)
        : std::runtime_error(what), stage_(std::move(stage)) {}
    const std::string& stage() const { return stage_; }

private:
    std::string stage_;
};

/// Backend transport or protocol failure that exhausted its retry/error budget.
/// CLI exit code 3.
class BackendError : public std::runtime_error {
public:
    explicit BackendError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace valuesrag
