#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace valuesrag {

/// Integer answer scale. The midpoint (min+max)/2 is handled as an exact
/// rational everywhere (compare 2*code against min+max), never as a float.
struct ResponseScale {
    int min = 0;
    int max = 0;
    std::set<int> missing_codes;

    bool is_missing(int code) const { return missing_codes.count(code) > 0; }
    bool in_range(int code) const { return code >= min && code <= max; }
    void validate() const;
};

enum class QuestionKind { values, demographic };

std::string_view to_string(QuestionKind kind);
QuestionKind question_kind_from_string(std::string_view text);

struct Question {
    std::string id;
    std::string topic;
    std::string text;
    QuestionKind kind = QuestionKind::values;
    /// Ordered scales participate in binarized scoring; pure categorical
    /// questions (ordinal=false) are excluded and tallied.
    bool ordinal = true;
    ResponseScale scale;
    std::vector<std::pair<int, std::string>> options;  // (code, label), strictly increasing

    const std::string* option_label(int code) const;
    bool has_option(int code) const { return option_label(code) != nullptr; }
    void validate() const;
};

struct Respondent {
    std::string id;
    std::string dataset;
    std::map<std::string, int> answers;  // question id -> raw code
};

enum class CorpusRole { retrieval, test };

std::string_view to_string(CorpusRole role);
CorpusRole corpus_role_from_string(std::string_view text);

struct Corpus {
    std::string name;
    std::string region;
    CorpusRole role = CorpusRole::retrieval;
    std::string config_fingerprint;  // fingerprint of the run that produced the file
    std::vector<Question> questions;
    std::vector<Respondent> respondents;

    const Question* find_question(std::string_view id) const;
    const Question& question(std::string_view id) const;  // throws on unknown id
    std::vector<std::string> values_question_ids() const;
    std::vector<std::string> demographic_question_ids() const;
    /// Topic labels of values questions, in order of first appearance.
    /// This is the canonical topic order used for prompt composition.
    std::vector<std::string> topics_in_order() const;
    void validate() const;
};

struct TopicSplit {
    std::set<std::string> train_qids;
    std::set<std::string> validation_qids;
    std::uint64_t seed = 0;
    double fraction = 0.0;

    bool is_validation(std::string_view qid) const { return validation_qids.count(std::string(qid)) > 0; }
    bool is_train(std::string_view qid) const { return train_qids.count(std::string(qid)) > 0; }
};

struct RowDiagnostic {
    std::size_t row = 0;  // 1-based data row number (excluding the header)
    std::string message;
};

struct IngestResult {
    Corpus corpus;
    std::vector<RowDiagnostic> rejected_rows;
};

/// Reads a delimiter-separated respondent table plus a JSON manifest that
/// declares per-column question metadata. Rows with malformed ids or answer
/// codes are skipped and reported in rejected_rows; structural problems
/// (missing file, column/manifest mismatch, duplicate ids) throw.
IngestResult ingest_corpus(const std::filesystem::path& table_path,
                           const std::filesystem::path& manifest_path);

/// Canonical on-disk corpus form: a versioned JSONL file. Serialization is
/// byte-deterministic, and load(save(c)) == c.
std::string corpus_to_canonical(const Corpus& corpus);
Corpus corpus_from_canonical(std::string_view text);
void save_corpus(const Corpus& corpus, const std::filesystem::path& path);
Corpus load_corpus(const std::filesystem::path& path);

/// Topic-stratified train/validation split of the values questions.
/// Per-topic validation counts follow largest-remainder allocation so the
/// total equals round(fraction * N) exactly; ties and within-topic selection
/// are resolved by seeded draws.
TopicSplit stratified_split(const Corpus& corpus, double fraction, std::uint64_t seed);

void save_split(const TopicSplit& split, const std::string& corpus_name,
                const std::string& config_fingerprint, const std::filesystem::path& path);
TopicSplit load_split(const std::filesystem::path& path, std::string* config_fingerprint = nullptr);

/// (question text, selected option label) pairs for the given question ids,
/// preserving qid order. Answers carrying a declared missing code are omitted.
std::vector<std::pair<std::string, std::string>> qa_pairs(const Corpus& corpus,
                                                          const Respondent& respondent,
                                                          const std::vector<std::string>& qids);

}  // namespace valuesrag
