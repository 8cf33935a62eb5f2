#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qlass/common.hpp"

namespace qlass::data {

enum class ColumnKind { numeric, categorical, target };
enum class ColumnRole { feature, identifier, target };

struct ColumnSpec {
    std::string name;
    ColumnKind kind = ColumnKind::numeric;
    ColumnRole role = ColumnRole::feature;
};

// Ordered value -> code map; code = position in `values` (sorted ascending).
struct LabelEncoding {
    std::vector<std::string> values;

    int code_of(const std::string& v) const;
    const std::string& value_of(int code) const { return values.at(code); }
    int num_codes() const { return static_cast<int>(values.size()); }
};

// One loaded column. Numeric and target cells live in `numeric` with NaN
// marking a missing cell; categorical cells stay text until encoded, with
// the empty string marking a missing cell.
struct Column {
    ColumnSpec spec;
    std::vector<double> numeric;
    std::vector<std::string> text;

    bool is_text() const { return spec.kind == ColumnKind::categorical; }
    std::size_t size() const { return is_text() ? text.size() : numeric.size(); }
};

struct NormParams {
    double mean = 0.0;
    double stddev = 1.0;
};

struct Dataset {
    // Raw columns in source order; emptied once features are assembled.
    std::vector<Column> cols;

    // Assembled learning view.
    std::vector<std::string> feature_names;
    Matrix features;                      // n x d
    std::vector<int> labels;              // class indices in [0, K)
    std::vector<std::string> class_names;
    std::map<std::string, LabelEncoding> encoders;
    std::vector<NormParams> norm_params;  // per feature; empty if unnormalized
    std::vector<double> bin_thresholds;   // set when the target was binned

    std::size_t n_rows() const {
        if (!cols.empty()) return cols.front().size();
        return features.rows;
    }
    std::size_t n_features() const { return features.cols; }
    int num_classes() const { return static_cast<int>(class_names.size()); }
};

struct SplitPair {
    Dataset train;
    Dataset test;
    std::uint64_t seed = 0;
    double ratio = 0.0;
    std::vector<int> train_indices;
    std::vector<int> test_indices;
};

// --- primitives -----------------------------------------------------------

// Codes by ascending lexicographic order of the distinct values.
std::pair<std::vector<int>, LabelEncoding> label_encode(
    const std::vector<std::string>& values);

// Equal-frequency binning of a continuous target into k classes.
// Returns (labels, thresholds); label = #thresholds strictly below the value.
std::pair<std::vector<int>, std::vector<double>> bin_target(
    const std::vector<double>& values, int k);

// --- pipeline stages ------------------------------------------------------

// Dialect: comma-separated, UTF-8, first row is the header, '.' decimal
// point, empty cell = missing. Double-quoted fields with "" escapes.
Dataset load_csv(const std::string& path, const std::vector<ColumnSpec>& spec);

// Numeric gaps -> column mean; categorical gaps -> modal value
// (ties -> lexicographically smallest).
Dataset impute_missing(Dataset ds);

// label_encode every categorical column in place; encodings recorded.
Dataset encode_categoricals(Dataset ds);

struct AssembleOptions {
    std::vector<std::string> feature_names;  // empty = every feature-role column
    bool include_identifiers = false;        // treat identifier columns as features
    int bins = 3;                            // classes for a numeric target
};

// Build the features matrix / labels / class_names from raw columns.
// Requires impute_missing and encode_categoricals to have run.
Dataset assemble(Dataset ds, const AssembleOptions& opts);

// z-score each feature column using train statistics (population std).
// Columns with train std < 1e-12 map to all-zero.
Dataset zscore_normalize(const Dataset& train, Dataset apply_to);

// Deterministic shuffled split of an assembled dataset.
SplitPair train_test_split(const Dataset& ds, double ratio, std::uint64_t seed);

// k unit-variance Gaussian clusters with centers >= separation apart,
// balanced class counts, deterministic per seed. Rows come out in
// round-robin class order.
Dataset generate_synthetic(std::size_t n, std::size_t d, int k,
                           double separation, std::uint64_t seed);

// --- assembled-dataset io (CLI artifacts) ----------------------------------

// Feature columns by name plus the label column, full double precision.
void write_assembled_csv(const Dataset& ds, const std::string& label_column,
                         const std::string& path);
Dataset read_assembled_csv(const std::string& path,
                           const std::string& label_column,
                           const std::vector<std::string>& class_names);

}  // namespace qlass::data
