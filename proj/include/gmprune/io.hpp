#pragma once

#include "gmprune/types.hpp"

#include <filesystem>

namespace gmprune {

enum class FileFormat { Binary, Csv };

struct CsvOptions {
    // When true, the last CSV column is an integer group label rather than a
    // coordinate. Applies to both load and save.
    bool labels_last_column = false;
};

/// Binary embedding container, little-endian:
///   magic "GMPK" | u32 version=1 | u64 n | u64 d | u8 dtype (1=f64, 2=f32)
///   | u8 has_labels | u8 has_flags | u8 padding=0
///   | n*d scalars row-major | [n u32 labels] | [n u8 flags (0 clean, 1 corrupt)]
/// f32 payloads are up-converted to f64 on load; save always writes f64.
///
/// CSV: comma-separated decimal scalars, '.' decimal point, newline rows,
/// no header. Flags are not representable in CSV.
EmbeddingSet load_embeddings(const std::filesystem::path& path, FileFormat format,
                             const CsvOptions& csv = {});

void save_embeddings(const EmbeddingSet& set, const std::filesystem::path& path,
                     FileFormat format, const CsvOptions& csv = {});

}  // namespace gmprune
