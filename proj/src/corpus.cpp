#include "summarax/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "summarax/error.hpp"
#include "summarax/textpipe.hpp"

namespace summarax {

namespace fs = std::filesystem;

namespace {

bool is_blank(const std::string &text) {
    return std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); });
}

// Sorted list of regular *.txt files under dir.
std::vector<fs::path> list_txt_files(const fs::path &dir) {
    std::vector<fs::path> files;
    for (const auto &entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".txt")
            files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    return files;
}

} // namespace

std::string read_text_file(const fs::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(Errc::io_error, "cannot open file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const Document *Corpus::find(const DocumentId &id) const {
    auto it = std::lower_bound(documents.begin(), documents.end(), id,
                               [](const Document &d, const DocumentId &key) { return d.id < key; });
    if (it != documents.end() && it->id == id)
        return &*it;
    return nullptr;
}

Corpus load_corpus(const fs::path &root) {
    const fs::path docs_dir = root / "docs";
    if (!fs::is_directory(docs_dir))
        throw Error(Errc::missing_docs_dir, "no docs/ directory under " + root.string());

    Corpus corpus;
    for (const fs::path &path : list_txt_files(docs_dir)) {
        const std::string id = path.stem().string();
        if (id.empty()) {
            corpus.warnings.push_back("skipped document with empty stem: " + path.string());
            continue;
        }
        std::string text = read_text_file(path);
        if (!valid_utf8(text))
            throw Error(Errc::encoding_error, "not valid UTF-8: " + path.string());
        text = normalize_newlines(std::move(text));
        if (is_blank(text)) {
            corpus.warnings.push_back("skipped blank document: " + path.string());
            continue;
        }
        corpus.documents.push_back({id, std::move(text)});
    }
    if (corpus.documents.empty())
        throw Error(Errc::empty_corpus, "no readable documents in " + docs_dir.string());
    // list_txt_files already sorts by path, which matches id order for stems.
    std::sort(corpus.documents.begin(), corpus.documents.end(),
              [](const Document &a, const Document &b) { return a.id < b.id; });

    const fs::path refs_dir = root / "refs";
    if (fs::is_directory(refs_dir)) {
        for (const fs::path &path : list_txt_files(refs_dir)) {
            const std::string id = path.stem().string();
            std::string text = read_text_file(path);
            if (!valid_utf8(text))
                throw Error(Errc::encoding_error, "not valid UTF-8: " + path.string());
            text = normalize_newlines(std::move(text));
            if (corpus.find(id) == nullptr) {
                corpus.warnings.push_back("DanglingReference: " + id);
                continue;
            }
            if (is_blank(text)) {
                corpus.warnings.push_back("skipped blank reference: " + path.string());
                continue;
            }
            corpus.references.emplace(id, std::move(text));
        }
    }
    return corpus;
}

const Corpus &require_paired(const Corpus &corpus) {
    std::vector<DocumentId> unpaired;
    for (const Document &doc : corpus.documents) {
        if (corpus.references.find(doc.id) == corpus.references.end())
            unpaired.push_back(doc.id);
    }
    if (!unpaired.empty()) {
        std::string joined;
        for (std::size_t i = 0; i < unpaired.size(); ++i) {
            if (i > 0)
                joined += ", ";
            joined += unpaired[i];
        }
        throw Error(Errc::unpaired_documents, "documents without references: " + joined);
    }
    return corpus;
}

} // namespace summarax
