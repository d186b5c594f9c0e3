#pragma once

#include <cstdint>
#include <string>

#include "bihom/bundle.hpp"
#include "bihom/structures.hpp"

namespace bihom {

inline constexpr const char* kBundleSchema = "bihom-bundle/1";
inline constexpr const char* kReportSchema = "bihom-report/1";
inline constexpr const char* kToolVersion = "0.3.0";

// Throws ParseError(line) on malformed JSON, SchemaError on unknown or missing
// fields, IndexOutOfRange on bad indices, UnknownParameter in coefficients.
AlgebraBundle parse_bundle(const std::string& text);
AlgebraBundle load_bundle(const std::string& path);

// Canonical text: fixed key order, one structure constant per line.
std::string bundle_to_string(const AlgebraBundle& b);
void save_bundle(const AlgebraBundle& b, const std::string& path);

std::uint64_t fnv1a(const std::string& text);
std::string bundle_hash(const AlgebraBundle& b);

// Canonical JSON; byte-stable for identical inputs and seed.
std::string report_to_json(const Report& r, const AlgebraBundle& b);
// Human-readable form; labels and parameter names taken from the bundle.
std::string report_to_text(const Report& r, const AlgebraBundle& b, bool color = false);
std::string verdict_line(const Verdict& v, const AlgebraBundle& b, bool color = false);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace bihom
