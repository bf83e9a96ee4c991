#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace mathieu_lattice {

// Shortest decimal representation that round-trips to the same double.
// Locale-independent, byte-stable across runs.
std::string format_double(double value);

// Writes content to path, throwing IoError on failure.
void write_text_file(const std::filesystem::path& path, const std::string& content);

// Binary 16-bit PGM (P5, maxval 65535, most significant byte first).
// samples is row-major with rows*cols entries.
void write_pgm16(const std::filesystem::path& path, std::size_t rows, std::size_t cols,
                 const std::vector<std::uint16_t>& samples);

}  // namespace mathieu_lattice
