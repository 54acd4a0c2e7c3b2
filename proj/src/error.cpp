#include "summarax/error.hpp"

namespace summarax {

const char *errc_name(Errc code) {
    switch (code) {
    case Errc::missing_docs_dir:
        return "MissingDocsDir";
    case Errc::empty_corpus:
        return "EmptyCorpus";
    case Errc::encoding_error:
        return "EncodingError";
    case Errc::unpaired_documents:
        return "UnpairedDocuments";
    case Errc::invalid_n:
        return "InvalidN";
    case Errc::empty_unit_list:
        return "EmptyUnitList";
    case Errc::non_finite_weight:
        return "NonFiniteWeight";
    case Errc::dimension_zero:
        return "DimensionZero";
    case Errc::invalid_distribution:
        return "InvalidDistribution";
    case Errc::empty_document:
        return "EmptyDocument";
    case Errc::length_mismatch:
        return "LengthMismatch";
    case Errc::invalid_weights:
        return "InvalidWeights";
    case Errc::invalid_reference_length:
        return "InvalidReferenceLength";
    case Errc::out_of_range:
        return "OutOfRange";
    case Errc::unsupported_format:
        return "UnsupportedFormat";
    case Errc::invalid_argument:
        return "InvalidArgument";
    case Errc::io_error:
        return "IoError";
    }
    return "UnknownError";
}

} // namespace summarax
