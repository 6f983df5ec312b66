#include "gmprune/io.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

namespace gmprune {

namespace {

constexpr std::array<char, 4> kMagic = {'G', 'M', 'P', 'K'};
constexpr std::uint32_t kVersion = 1;

void put_bytes(std::ostream& out, std::uint64_t value, int nbytes) {
    for (int i = 0; i < nbytes; ++i) {
        const char b = static_cast<char>((value >> (8 * i)) & 0xFF);
        out.put(b);
    }
}

std::uint64_t get_bytes(std::istream& in, int nbytes) {
    std::uint64_t value = 0;
    for (int i = 0; i < nbytes; ++i) {
        const int c = in.get();
        if (c == EOF) {
            throw Error(ErrorCode::MalformedHeader, "unexpected end of file");
        }
        value |= static_cast<std::uint64_t>(static_cast<unsigned char>(c)) << (8 * i);
    }
    return value;
}

void put_f64(std::ostream& out, double v) { put_bytes(out, std::bit_cast<std::uint64_t>(v), 8); }

double get_f64(std::istream& in) { return std::bit_cast<double>(get_bytes(in, 8)); }

float get_f32(std::istream& in) {
    return std::bit_cast<float>(static_cast<std::uint32_t>(get_bytes(in, 4)));
}

EmbeddingSet load_binary(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::IoFailure, "cannot open " + path.string());
    }
    std::array<char, 4> magic{};
    in.read(magic.data(), 4);
    if (in.gcount() != 4 || magic != kMagic) {
        throw Error(ErrorCode::MalformedHeader, "bad magic in " + path.string());
    }
    const auto version = static_cast<std::uint32_t>(get_bytes(in, 4));
    if (version != kVersion) {
        throw Error(ErrorCode::MalformedHeader, "unsupported version " + std::to_string(version));
    }
    const std::uint64_t n = get_bytes(in, 8);
    const std::uint64_t d = get_bytes(in, 8);
    const std::uint64_t dtype = get_bytes(in, 1);
    const std::uint64_t has_labels = get_bytes(in, 1);
    const std::uint64_t has_flags = get_bytes(in, 1);
    const std::uint64_t padding = get_bytes(in, 1);
    if (n < 1 || d < 1 || (dtype != 1 && dtype != 2) || has_labels > 1 || has_flags > 1 ||
        padding != 0) {
        throw Error(ErrorCode::MalformedHeader, "invalid header fields in " + path.string());
    }

    Matrix data(static_cast<Index>(n), static_cast<Index>(d));
    for (Index r = 0; r < data.rows(); ++r) {
        for (Index c = 0; c < data.cols(); ++c) {
            const double v = dtype == 1 ? get_f64(in) : static_cast<double>(get_f32(in));
            if (!std::isfinite(v)) {
                throw Error(ErrorCode::NonFiniteValue,
                            "non-finite value at row " + std::to_string(r));
            }
            data(r, c) = v;
        }
    }

    std::optional<std::vector<std::uint32_t>> labels;
    if (has_labels == 1) {
        labels.emplace(n);
        for (auto& label : *labels) {
            label = static_cast<std::uint32_t>(get_bytes(in, 4));
        }
    }
    std::optional<std::vector<Flag>> flags;
    if (has_flags == 1) {
        flags.emplace(n);
        for (auto& flag : *flags) {
            const std::uint64_t b = get_bytes(in, 1);
            if (b > 1) {
                throw Error(ErrorCode::MalformedHeader, "invalid flag byte");
            }
            flag = static_cast<Flag>(b);
        }
    }
    if (in.peek() != EOF) {
        throw Error(ErrorCode::MalformedHeader, "trailing bytes in " + path.string());
    }
    return EmbeddingSet(std::move(data), std::move(labels), std::move(flags));
}

void save_binary(const EmbeddingSet& set, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error(ErrorCode::IoFailure, "cannot open " + path.string() + " for writing");
    }
    out.write(kMagic.data(), 4);
    put_bytes(out, kVersion, 4);
    put_bytes(out, static_cast<std::uint64_t>(set.n()), 8);
    put_bytes(out, static_cast<std::uint64_t>(set.dim()), 8);
    put_bytes(out, 1, 1);  // dtype f64
    put_bytes(out, set.has_labels() ? 1 : 0, 1);
    put_bytes(out, set.has_flags() ? 1 : 0, 1);
    put_bytes(out, 0, 1);
    for (Index r = 0; r < set.n(); ++r) {
        for (Index c = 0; c < set.dim(); ++c) {
            put_f64(out, set.data()(r, c));
        }
    }
    if (set.has_labels()) {
        for (const std::uint32_t label : set.labels()) {
            put_bytes(out, label, 4);
        }
    }
    if (set.has_flags()) {
        for (const Flag flag : set.flags()) {
            put_bytes(out, static_cast<std::uint64_t>(flag), 1);
        }
    }
    if (!out) {
        throw Error(ErrorCode::IoFailure, "write failed for " + path.string());
    }
}

EmbeddingSet load_csv(const std::filesystem::path& path, const CsvOptions& csv) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::IoFailure, "cannot open " + path.string());
    }
    std::vector<std::vector<double>> rows;
    std::vector<std::uint32_t> labels;
    std::string line;
    Index d = -1;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) {
            fields.push_back(field);
        }
        if (csv.labels_last_column) {
            if (fields.size() < 2) {
                throw Error(ErrorCode::DimensionMismatch,
                            "row " + std::to_string(rows.size()) + " has no label column");
            }
            const std::string& tok = fields.back();
            std::size_t pos = 0;
            unsigned long value = 0;
            try {
                value = std::stoul(tok, &pos);
            } catch (const std::exception&) {
                throw Error(ErrorCode::InvalidLabel, "bad label '" + tok + "'");
            }
            if (pos != tok.size()) {
                throw Error(ErrorCode::InvalidLabel, "bad label '" + tok + "'");
            }
            labels.push_back(static_cast<std::uint32_t>(value));
            fields.pop_back();
        }
        std::vector<double> row;
        row.reserve(fields.size());
        for (const std::string& tok : fields) {
            std::size_t pos = 0;
            double v = 0.0;
            try {
                v = std::stod(tok, &pos);
            } catch (const std::exception&) {
                throw Error(ErrorCode::NonFiniteValue, "unparsable scalar '" + tok + "'");
            }
            if (pos != tok.size()) {
                throw Error(ErrorCode::NonFiniteValue, "unparsable scalar '" + tok + "'");
            }
            if (!std::isfinite(v)) {
                throw Error(ErrorCode::NonFiniteValue,
                            "non-finite value in row " + std::to_string(rows.size()));
            }
            row.push_back(v);
        }
        if (d < 0) {
            d = static_cast<Index>(row.size());
            if (d == 0) {
                throw Error(ErrorCode::MalformedHeader, "first row has no fields");
            }
        } else if (static_cast<Index>(row.size()) != d) {
            throw Error(ErrorCode::DimensionMismatch,
                        "row " + std::to_string(rows.size()) + " has " +
                            std::to_string(row.size()) + " fields, expected " + std::to_string(d));
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) {
        throw Error(ErrorCode::MalformedHeader, "empty CSV " + path.string());
    }
    Matrix data(static_cast<Index>(rows.size()), d);
    for (Index r = 0; r < data.rows(); ++r) {
        for (Index c = 0; c < d; ++c) {
            data(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        }
    }
    std::optional<std::vector<std::uint32_t>> maybe_labels;
    if (csv.labels_last_column) {
        maybe_labels = std::move(labels);
    }
    return EmbeddingSet(std::move(data), std::move(maybe_labels), std::nullopt);
}

void save_csv(const EmbeddingSet& set, const std::filesystem::path& path, const CsvOptions& csv) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) {
        throw Error(ErrorCode::IoFailure, "cannot open " + path.string() + " for writing");
    }
    const bool write_labels = csv.labels_last_column && set.has_labels();
    char buf[64];
    for (Index r = 0; r < set.n(); ++r) {
        for (Index c = 0; c < set.dim(); ++c) {
            // 17 significant digits round-trips any double
            std::snprintf(buf, sizeof(buf), "%.17g", set.data()(r, c));
            if (c > 0) {
                out.put(',');
            }
            out << buf;
        }
        if (write_labels) {
            out << ',' << set.labels()[static_cast<std::size_t>(r)];
        }
        out.put('\n');
    }
    if (!out) {
        throw Error(ErrorCode::IoFailure, "write failed for " + path.string());
    }
}

}  // namespace

EmbeddingSet load_embeddings(const std::filesystem::path& path, FileFormat format,
                             const CsvOptions& csv) {
    return format == FileFormat::Binary ? load_binary(path) : load_csv(path, csv);
}

void save_embeddings(const EmbeddingSet& set, const std::filesystem::path& path,
                     FileFormat format, const CsvOptions& csv) {
    if (format == FileFormat::Binary) {
        save_binary(set, path);
    } else {
        save_csv(set, path, csv);
    }
}

}  // namespace gmprune
