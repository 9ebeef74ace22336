#pragma once

// Input documents: schema checking with JSON-pointer error paths, and model
// construction for the chosen backend.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "duo/corpus.hpp"

namespace duo::cli {

using nlohmann::json;

// A schema or model error located by a JSON pointer into the input document.
class DocumentError : public std::runtime_error {
 public:
  DocumentError(std::string pointer, const std::string& msg)
      : std::runtime_error((pointer.empty() ? std::string("/") : pointer) + ": " + msg), pointer_(std::move(pointer)) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

// The document is well-formed but its structure maps violate a bimonoid axiom.
class AxiomError : public DocumentError {
 public:
  using DocumentError::DocumentError;
};

struct InputDocument {
  std::string backend;          // span | gvec-commutative | gvec-weak
  std::optional<int> n;         // |X| or the rank of the base
  json model;                   // the "model" object
  std::optional<std::size_t> samples;
  std::optional<std::uint64_t> seed;
  std::string name;
};

template <class B>
struct LoadedModel {
  EnginePtr<B> engine;
  Bimonoid<B> b;
  int n = 1;
  std::vector<std::string> basis;
};

using Loaded = std::variant<LoadedModel<SpanBackend>, LoadedModel<GVecBackend>>;

struct LoadOptions {
  std::string backend_override;
  bool weak_models = false;
};

const std::vector<std::string>& backend_names();
const std::vector<std::string>& constructor_names();

InputDocument parse_document(const json& doc);
InputDocument read_document(const std::string& path);

// Builds and validates the bimonoid; throws DocumentError on any input problem.
Loaded load_model(const InputDocument& doc, const LoadOptions& opts);

std::string backend_of(const Loaded& m);

}  // namespace duo::cli
