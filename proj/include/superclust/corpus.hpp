#pragma once

#include <optional>
#include <string>
#include <vector>

namespace superclust {

/// One embedded paragraph: opaque id, taxonomy label in 1..T, embedding.
struct DocumentRecord {
    std::string id;
    int label = 0;
    std::vector<double> vector;
};

/// Label id -> name map with consecutive ids 1..T.
struct Taxonomy {
    std::vector<std::string> names; // names[i] is the name of label i+1

    int count() const { return static_cast<int>(names.size()); }
    const std::string& name(int label) const { return names.at(static_cast<std::size_t>(label - 1)); }
};

struct Corpus {
    std::vector<DocumentRecord> records;
    std::size_t dimension = 0;
    Taxonomy taxonomy;
    std::vector<std::string> warnings; // non-fatal validation notes

    std::size_t size() const { return records.size(); }

    std::vector<int> labels() const {
        std::vector<int> out;
        out.reserve(records.size());
        for (const auto& r : records) out.push_back(r.label);
        return out;
    }
};

enum class CorpusFormat { csv, jsonl };

/// Picks csv or jsonl from the file extension (".jsonl"/".ndjson" -> jsonl).
CorpusFormat corpus_format_from_path(const std::string& path);

Taxonomy load_taxonomy(const std::string& path);
void save_taxonomy(const Taxonomy& taxonomy, const std::string& path);

/// Loads and validates a corpus. Record order equals file order; node index i
/// is the 0-based file position. Without an explicit taxonomy, one is
/// synthesized from the labels present (names "label-1".."label-T").
Corpus load_corpus(const std::string& path, CorpusFormat format,
                   std::optional<Taxonomy> taxonomy = std::nullopt);
void save_corpus(const Corpus& corpus, const std::string& path, CorpusFormat format);

/// Reads per-node taxonomy labels. Accepts a full corpus file (csv or jsonl)
/// or a two-column CSV "id,label" / "node_index,label".
std::vector<int> load_labels(const std::string& path);
void save_labels(const std::vector<int>& labels, const std::string& path);

} // namespace superclust
