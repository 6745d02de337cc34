#pragma once

#include <stdexcept>
#include <string>

namespace s2v {

enum class errc {
    file_not_found,
    malformed_header,
    empty_input,
    duplicate_ticker,
    empty_intersection,
    empty_panel,
    empty_vocabulary,
    unknown_token,
    empty_corpus,
    degenerate_sentence,
    too_few_rows,
    class_too_small,
    empty_class,
    single_class,
    feature_mismatch,
    degenerate_input,
    rank_deficient,
    too_few_observations,
    index_out_of_range,
    io_error,
    format_error,
    missing_sector,
    join_empty,
    invalid_config,
    numeric_error,
};

const char* errc_name(errc code);

/// True for errors caused by bad inputs or configuration (CLI exit code 2);
/// false for failures arising during computation (exit code 3).
bool is_input_error(errc code);

class Error : public std::runtime_error {
public:
    Error(errc code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, std::string message) {
    throw Error(code, std::move(message));
}

}  // namespace s2v
