#pragma once

#include <string>
#include <string_view>

#include "eedag/dataset.hpp"

namespace eedag {

/// Parses a wide CSV document: first column header must be `time`, remaining
/// headers are series names, cells are decimal floats. Accepts `\n` or `\r\n`.
Dataset parse_dataset(std::string_view text);

/// Serializes a dataset whose series all sample the full grid back to the wide
/// CSV format. Numbers use shortest round-trip formatting, so
/// parse(serialize(parse(doc))) == parse(doc).
std::string serialize_dataset(const Dataset& ds);

Dataset read_dataset_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view content);

}  // namespace eedag
