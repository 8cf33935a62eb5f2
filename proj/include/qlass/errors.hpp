#pragma once

#include <stdexcept>
#include <string>

namespace qlass {

enum class ErrorCode {
    // data
    missing_column,
    parse_error,
    empty_dataset,
    all_missing_column,
    degenerate_target,
    bad_ratio,
    // learners
    empty_node,
    partition_mismatch,
    empty_training_set,
    missing_class,
    // rl / environment
    empty_buffer,
    shape_mismatch,
    invalid_action,
    episode_exhausted,
    // metrics
    length_mismatch,
    label_out_of_range,
    // cli / io
    bad_config,
    missing_artifact,
    io_error,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& msg) {
    throw Error(code, msg);
}

}  // namespace qlass
