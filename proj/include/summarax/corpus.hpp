#ifndef SUMMARAX_CORPUS_HPP_
#define SUMMARAX_CORPUS_HPP_

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace summarax {

// Document ids are filename stems: non-empty, no path separators, unique
// within a corpus.
using DocumentId = std::string;

struct Document {
    DocumentId id;
    std::string text; // UTF-8, newlines normalized to '\n'
};

struct Corpus {
    std::vector<Document> documents;            // sorted by id
    std::map<DocumentId, std::string> references;
    std::vector<std::string> warnings;          // dangling references, skipped files

    const Document *find(const DocumentId &id) const;
};

// Loads <root>/docs/*.txt and, when present, <root>/refs/*.txt, pairing by
// filename stem. Documents come back sorted by id regardless of filesystem
// enumeration order. Throws MissingDocsDir, EmptyCorpus or EncodingError;
// dangling references are recorded as warnings, not errors.
Corpus load_corpus(const std::filesystem::path &root);

// Identity when every document has a reference; otherwise throws
// UnpairedDocuments naming the unpaired ids.
const Corpus &require_paired(const Corpus &corpus);

std::string read_text_file(const std::filesystem::path &path);

} // namespace summarax

#endif // SUMMARAX_CORPUS_HPP_
