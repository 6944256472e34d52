// Exception types shared across the pipeline. Each maps to one failure
// contract; callers catch the specific type, the CLI maps them to exit codes.

#pragma once

#include <stdexcept>
#include <string>

namespace avdet {

struct NearZeroNorm : std::runtime_error {
  explicit NearZeroNorm(const std::string& what) : std::runtime_error(what) {}
};

struct IndexOutOfRange : std::runtime_error {
  explicit IndexOutOfRange(const std::string& what) : std::runtime_error(what) {}
};

struct ShapeMismatch : std::runtime_error {
  explicit ShapeMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct PrototypeRejectionExhausted : std::runtime_error {
  explicit PrototypeRejectionExhausted(const std::string& what) : std::runtime_error(what) {}
};

struct NonConvergence : std::runtime_error {
  explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

struct EmptyTrainingSet : std::runtime_error {
  explicit EmptyTrainingSet(const std::string& what) : std::runtime_error(what) {}
};

struct EmptyTable : std::runtime_error {
  explicit EmptyTable(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigInvalid : std::runtime_error {
  explicit ConfigInvalid(const std::string& what) : std::runtime_error(what) {}
};

struct MissingArtifact : std::runtime_error {
  explicit MissingArtifact(const std::string& what) : std::runtime_error(what) {}
};

struct StaleArtifact : std::runtime_error {
  explicit StaleArtifact(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace avdet
