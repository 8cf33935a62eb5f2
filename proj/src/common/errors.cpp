#include "qlass/errors.hpp"

namespace qlass {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::missing_column: return "MissingColumn";
        case ErrorCode::parse_error: return "ParseError";
        case ErrorCode::empty_dataset: return "EmptyDataset";
        case ErrorCode::all_missing_column: return "AllMissingColumn";
        case ErrorCode::degenerate_target: return "DegenerateTarget";
        case ErrorCode::bad_ratio: return "BadRatio";
        case ErrorCode::empty_node: return "EmptyNode";
        case ErrorCode::partition_mismatch: return "PartitionMismatch";
        case ErrorCode::empty_training_set: return "EmptyTrainingSet";
        case ErrorCode::missing_class: return "MissingClass";
        case ErrorCode::empty_buffer: return "EmptyBuffer";
        case ErrorCode::shape_mismatch: return "ShapeMismatch";
        case ErrorCode::invalid_action: return "InvalidAction";
        case ErrorCode::episode_exhausted: return "EpisodeExhausted";
        case ErrorCode::length_mismatch: return "LengthMismatch";
        case ErrorCode::label_out_of_range: return "LabelOutOfRange";
        case ErrorCode::bad_config: return "BadConfig";
        case ErrorCode::missing_artifact: return "MissingArtifact";
        case ErrorCode::io_error: return "IoError";
    }
    return "UnknownError";
}

}  // namespace qlass
