#include "gmprune/types.hpp"

#include <cmath>

namespace gmprune {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::MalformedHeader: return "MALFORMED_HEADER";
        case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
        case ErrorCode::NonFiniteValue: return "NON_FINITE_VALUE";
        case ErrorCode::IoFailure: return "IO_FAILURE";
        case ErrorCode::IndexOutOfRange: return "INDEX_OUT_OF_RANGE";
        case ErrorCode::EmptySelection: return "EMPTY_SELECTION";
        case ErrorCode::KTooLarge: return "K_TOO_LARGE";
        case ErrorCode::MissingLabels: return "MISSING_LABELS";
        case ErrorCode::MissingFlags: return "MISSING_FLAGS";
        case ErrorCode::GroupSmallerThanQuota: return "GROUP_SMALLER_THAN_QUOTA";
        case ErrorCode::PsiOutOfRange: return "PSI_OUT_OF_RANGE";
        case ErrorCode::CovNotSpd: return "COV_NOT_SPD";
        case ErrorCode::MajorityCorrupt: return "MAJORITY_CORRUPT";
        case ErrorCode::NonPositiveReference: return "NON_POSITIVE_REFERENCE";
        case ErrorCode::NonPositiveError: return "NON_POSITIVE_ERROR";
        case ErrorCode::TooFewPoints: return "TOO_FEW_POINTS";
        case ErrorCode::InvalidLabel: return "INVALID_LABEL";
        case ErrorCode::PreconditionViolated: return "PRECONDITION_VIOLATED";
    }
    return "UNKNOWN";
}

EmbeddingSet::EmbeddingSet(Matrix data,
                           std::optional<std::vector<std::uint32_t>> labels,
                           std::optional<std::vector<Flag>> flags)
    : data_(std::move(data)), labels_(std::move(labels)), flags_(std::move(flags)) {
    if (data_.rows() < 1 || data_.cols() < 1) {
        throw Error(ErrorCode::DimensionMismatch, "EmbeddingSet requires n >= 1 and d >= 1");
    }
    if (!data_.allFinite()) {
        throw Error(ErrorCode::NonFiniteValue, "EmbeddingSet entries must be finite");
    }
    if (labels_ && static_cast<Index>(labels_->size()) != data_.rows()) {
        throw Error(ErrorCode::DimensionMismatch, "labels length != n");
    }
    if (flags_ && static_cast<Index>(flags_->size()) != data_.rows()) {
        throw Error(ErrorCode::DimensionMismatch, "flags length != n");
    }
}

const std::vector<std::uint32_t>& EmbeddingSet::labels() const {
    if (!labels_) {
        throw Error(ErrorCode::MissingLabels, "set carries no labels");
    }
    return *labels_;
}

const std::vector<Flag>& EmbeddingSet::flags() const {
    if (!flags_) {
        throw Error(ErrorCode::MissingFlags, "set carries no flags");
    }
    return *flags_;
}

EmbeddingSet subset_rows(const EmbeddingSet& set, const std::vector<Index>& indices) {
    if (indices.empty()) {
        throw Error(ErrorCode::EmptySelection, "subset_rows: empty index list");
    }
    for (const Index i : indices) {
        if (i < 0 || i >= set.n()) {
            throw Error(ErrorCode::IndexOutOfRange,
                        "subset_rows: index " + std::to_string(i) + " out of [0, " +
                            std::to_string(set.n()) + ")");
        }
    }
    Matrix out(static_cast<Index>(indices.size()), set.dim());
    for (Index r = 0; r < out.rows(); ++r) {
        out.row(r) = set.data().row(indices[static_cast<std::size_t>(r)]);
    }
    std::optional<std::vector<std::uint32_t>> labels;
    if (set.has_labels()) {
        labels.emplace();
        labels->reserve(indices.size());
        for (const Index i : indices) {
            labels->push_back(set.labels()[static_cast<std::size_t>(i)]);
        }
    }
    std::optional<std::vector<Flag>> flags;
    if (set.has_flags()) {
        flags.emplace();
        flags->reserve(indices.size());
        for (const Index i : indices) {
            flags->push_back(set.flags()[static_cast<std::size_t>(i)]);
        }
    }
    return EmbeddingSet(std::move(out), std::move(labels), std::move(flags));
}

double data_scale(const EmbeddingSet& set) {
    const auto ranges = set.data().colwise().maxCoeff() - set.data().colwise().minCoeff();
    return ranges.maxCoeff();
}

}  // namespace gmprune
