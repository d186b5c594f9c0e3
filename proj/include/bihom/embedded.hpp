#pragma once

#include <vector>

namespace bihom {

// Data files compiled into the library; name is the file name without extension.
struct EmbeddedFile {
  const char* name;
  const char* text;
};

const std::vector<EmbeddedFile>& embedded_registry();
const std::vector<EmbeddedFile>& embedded_catalog();

}  // namespace bihom
