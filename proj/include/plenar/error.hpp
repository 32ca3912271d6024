#pragma once

#include <stdexcept>
#include <string>

namespace plenar {

// Base for everything thrown by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Network/HTTP failure that survived the retry budget.
class TransportError : public Error {
public:
  using Error::Error;
};

// Payload or file did not have the expected shape; message names the field.
class SchemaError : public Error {
public:
  using Error::Error;
};

// Bad configuration (files, registries, run config).
class ConfigError : public Error {
public:
  using Error::Error;
};

// Argument outside its documented domain.
class ParamError : public Error {
public:
  using Error::Error;
};

// Metric has no defined value for this input (0 words, <2 clusters, ...).
class UndefinedMetricError : public Error {
public:
  using Error::Error;
};

// Filesystem trouble.
class IoError : public Error {
public:
  using Error::Error;
};

// A CLI subcommand needs an artifact produced by an earlier subcommand.
class DependencyError : public Error {
public:
  DependencyError(const std::string& missing, const std::string& subcommand)
      : Error(missing + " not found; run `plenar " + subcommand + "` first"),
        subcommand_(subcommand) {}
  const std::string& subcommand() const { return subcommand_; }

private:
  std::string subcommand_;
};

}  // namespace plenar
