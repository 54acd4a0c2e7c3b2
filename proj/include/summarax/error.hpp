#ifndef SUMMARAX_ERROR_HPP_
#define SUMMARAX_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace summarax {

// Error conditions surfaced by the library. Warning-level conditions
// (dangling references, empty-vocabulary fallbacks) are reported through
// result structs instead of being thrown.
enum class Errc {
    missing_docs_dir,
    empty_corpus,
    encoding_error,
    unpaired_documents,
    invalid_n,
    empty_unit_list,
    non_finite_weight,
    dimension_zero,
    invalid_distribution,
    empty_document,
    length_mismatch,
    invalid_weights,
    invalid_reference_length,
    out_of_range,
    unsupported_format,
    invalid_argument,
    io_error,
};

const char *errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string &message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

} // namespace summarax

#endif // SUMMARAX_ERROR_HPP_
