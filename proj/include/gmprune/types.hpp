#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gmprune {

// Row-major so the in-memory layout matches the on-disk layout (row = sample).
using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

enum class Flag : std::uint8_t { Clean = 0, Corrupt = 1 };

enum class ErrorCode {
    MalformedHeader,
    DimensionMismatch,
    NonFiniteValue,
    IoFailure,
    IndexOutOfRange,
    EmptySelection,
    KTooLarge,
    MissingLabels,
    MissingFlags,
    GroupSmallerThanQuota,
    PsiOutOfRange,
    CovNotSpd,
    MajorityCorrupt,
    NonPositiveReference,
    NonPositiveError,
    TooFewPoints,
    InvalidLabel,
    PreconditionViolated,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what + " [" + error_code_name(code) + "]"), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

/// Immutable n x d sample matrix with optional group labels and
/// clean/corrupt provenance flags. Rows are samples.
class EmbeddingSet {
public:
    EmbeddingSet(Matrix data,
                 std::optional<std::vector<std::uint32_t>> labels = std::nullopt,
                 std::optional<std::vector<Flag>> flags = std::nullopt);

    const Matrix& data() const { return data_; }
    Index n() const { return data_.rows(); }
    Index dim() const { return data_.cols(); }

    bool has_labels() const { return labels_.has_value(); }
    bool has_flags() const { return flags_.has_value(); }
    const std::vector<std::uint32_t>& labels() const;
    const std::vector<Flag>& flags() const;

private:
    Matrix data_;
    std::optional<std::vector<std::uint32_t>> labels_;
    std::optional<std::vector<Flag>> flags_;
};

/// New set holding the given rows, in the given order. Duplicate indices are
/// allowed (with-replacement selections). Labels/flags carry through.
EmbeddingSet subset_rows(const EmbeddingSet& set, const std::vector<Index>& indices);

/// Max column range (max - min over each coordinate). Used as the unit for
/// relative tolerances so stopping does not depend on coordinate units.
double data_scale(const EmbeddingSet& set);

}  // namespace gmprune
