#include "s2v/error.hpp"

namespace s2v {

const char* errc_name(errc code) {
    switch (code) {
        case errc::file_not_found: return "FileNotFound";
        case errc::malformed_header: return "MalformedHeader";
        case errc::empty_input: return "EmptyInput";
        case errc::duplicate_ticker: return "DuplicateTicker";
        case errc::empty_intersection: return "EmptyIntersection";
        case errc::empty_panel: return "EmptyPanel";
        case errc::empty_vocabulary: return "EmptyVocabulary";
        case errc::unknown_token: return "UnknownToken";
        case errc::empty_corpus: return "EmptyCorpus";
        case errc::degenerate_sentence: return "DegenerateSentence";
        case errc::too_few_rows: return "TooFewRows";
        case errc::class_too_small: return "ClassTooSmall";
        case errc::empty_class: return "EmptyClass";
        case errc::single_class: return "SingleClass";
        case errc::feature_mismatch: return "FeatureMismatch";
        case errc::degenerate_input: return "DegenerateInput";
        case errc::rank_deficient: return "RankDeficient";
        case errc::too_few_observations: return "TooFewObservations";
        case errc::index_out_of_range: return "IndexOutOfRange";
        case errc::io_error: return "IoError";
        case errc::format_error: return "FormatError";
        case errc::missing_sector: return "MissingSector";
        case errc::join_empty: return "JoinEmpty";
        case errc::invalid_config: return "InvalidConfig";
        case errc::numeric_error: return "NumericError";
    }
    return "UnknownError";
}

bool is_input_error(errc code) {
    switch (code) {
        case errc::file_not_found:
        case errc::malformed_header:
        case errc::empty_input:
        case errc::duplicate_ticker:
        case errc::empty_intersection:
        case errc::empty_panel:
        case errc::empty_vocabulary:
        case errc::unknown_token:
        case errc::empty_corpus:
        case errc::too_few_rows:
        case errc::class_too_small:
        case errc::empty_class:
        case errc::single_class:
        case errc::feature_mismatch:
        case errc::index_out_of_range:
        case errc::io_error:
        case errc::format_error:
        case errc::missing_sector:
        case errc::join_empty:
        case errc::invalid_config:
            return true;
        case errc::degenerate_sentence:
        case errc::degenerate_input:
        case errc::rank_deficient:
        case errc::too_few_observations:
        case errc::numeric_error:
            return false;
    }
    return false;
}

}  // namespace s2v
