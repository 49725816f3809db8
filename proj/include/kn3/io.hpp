#pragma once

#include <string>
#include <string_view>

#include "kn3/circuits.hpp"
#include "kn3/scheme.hpp"

namespace kn3::io {

inline constexpr std::string_view kSetHeader = "# kn3-embedding-set v1";
inline constexpr std::string_view kSchemeHeader = "# kn3-scheme v1";

// `T <i>: v1 v2 ... vN`
std::string format_circuit(const Circuit& c);

std::string write_set(const EmbeddingSet& s);
EmbeddingSet parse_set(std::string_view text);

std::string write_scheme(const EmbeddingScheme& sch);
EmbeddingScheme parse_scheme(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace kn3::io
