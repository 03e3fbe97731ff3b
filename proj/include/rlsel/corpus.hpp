#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "rlsel/errors.hpp"
#include "rlsel/rng.hpp"

namespace rlsel {

struct Token {
    int id = 0;
    std::string surface;

    bool operator==(const Token&) const = default;
};

struct Sentence {
    std::vector<Token> tokens;

    std::size_t size() const { return tokens.size(); }
    bool empty() const { return tokens.empty(); }
    bool operator==(const Sentence&) const = default;
};

struct ParallelExample {
    std::int64_t id = 0;
    Sentence source;
    Sentence target;
    // Ground-truth noise label for synthetic data. Used for reporting only;
    // it must never feed into any feature.
    bool is_corrupted = false;
};

class Vocabulary {
public:
    static constexpr int kUnk = 0;
    static constexpr int kBos = 1;
    static constexpr int kEos = 2;
    static constexpr int kReserved = 3;

    Vocabulary();

    // Returns the id of the surface, or kUnk if absent.
    int lookup(const std::string& surface) const;
    bool contains(const std::string& surface) const;
    // Returns the existing id or assigns the next free one.
    int add(const std::string& surface);
    const std::string& surface(int id) const;
    std::size_t size() const { return surfaces_.size(); }

    bool operator==(const Vocabulary&) const = default;

private:
    std::vector<std::string> surfaces_;
    std::unordered_map<std::string, int> ids_;
};

struct Corpus {
    std::vector<ParallelExample> examples;
    Vocabulary source_vocab;
    Vocabulary target_vocab;

    std::size_t size() const { return examples.size(); }
};

// Whitespace tokenization against a vocabulary. Unknown surfaces map to UNK
// unless allow_new is set, in which case the vocabulary is extended.
Sentence tokenize(const std::string& text, Vocabulary& vocab, bool allow_new);

std::string surface_text(const Sentence& s);

// Corpus-wide n-gram counts for one sentence side (order 1..4).
class NGramTable {
public:
    explicit NGramTable(int order);

    void add(const Sentence& s);

    int order() const { return order_; }
    std::uint64_t total() const { return total_; }
    // Relative frequency of a stored n-gram key; 0.0 if absent. Throws
    // EmptyInputError when the table holds no n-grams at all.
    double frequency(std::uint64_t key) const;
    std::uint64_t count(std::uint64_t key) const;
    const std::unordered_map<std::uint64_t, std::uint64_t>& counts() const { return counts_; }

    // Token ids packed 16 bits each; ids must stay below 2^16.
    static std::uint64_t pack_key(std::span<const Token> gram);

private:
    int order_;
    std::unordered_map<std::uint64_t, std::uint64_t> counts_;
    std::uint64_t total_ = 0;
};

NGramTable build_ngram_table(const std::vector<Sentence>& sentences, int order);

// Per-position relative frequencies of the sentence's n-grams, in order.
// Length is max(len - n + 1, 0); n-grams missing from the table score 0.
std::vector<double> ngram_vector(const Sentence& s, const NGramTable& table);

enum class TagScheme { kPos, kNer };

class Tagger {
public:
    virtual ~Tagger() = default;
    // Must return exactly one tag per token.
    virtual std::vector<std::string> tag(const Sentence& s) const = 0;
};

// Per-word tag distribution over a corpus side.
class TagTable {
public:
    explicit TagTable(TagScheme scheme) : scheme_(scheme) {}

    void add(const Sentence& s, const Tagger& tagger);

    TagScheme scheme() const { return scheme_; }
    // Fraction of the word's occurrences carrying this tag; 0.0 for words
    // never seen during the build.
    double value(int word_id, const std::string& tag) const;
    std::uint64_t word_total(int word_id) const;
    const std::unordered_map<int, std::unordered_map<std::string, std::uint64_t>>& counts() const {
        return counts_;
    }

private:
    TagScheme scheme_;
    std::unordered_map<int, std::unordered_map<std::string, std::uint64_t>> counts_;
    std::unordered_map<int, std::uint64_t> totals_;
};

TagTable build_tag_table(const std::vector<Sentence>& sentences, const Tagger& tagger,
                         TagScheme scheme);

// One tagging value per token position.
std::vector<double> tag_vector(const Sentence& s, const TagTable& table, const Tagger& tagger);

struct SyntheticConfig {
    int size = 5000;
    int vocab_size = 60;   // content words per side, excluding reserved ids
    int min_len = 1;
    int max_len = 12;
    double noise_rate = 0.3;
    std::uint64_t seed = 1;
};

// Deterministic toy parallel corpus: the target is a token-wise substitution
// cipher of the source, reversed. With probability noise_rate the target is
// corrupted (spurious random suffix, or token shuffle) and flagged.
Corpus generate_synthetic_corpus(const SyntheticConfig& config);

void save_corpus(const Corpus& corpus, const std::string& path);
Corpus load_corpus(const std::string& path);
// Loads against existing vocabularies (extending them), so token ids stay
// consistent across corpus splits that share a vocabulary file.
Corpus load_corpus(const std::string& path, Vocabulary source_vocab, Vocabulary target_vocab);

void save_vocab(const Vocabulary& vocab, const std::string& path);
Vocabulary load_vocab(const std::string& path);

}  // namespace rlsel
