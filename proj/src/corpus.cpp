#include "rlsel/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace rlsel {

Vocabulary::Vocabulary() {
    add("<unk>");
    add("<bos>");
    add("<eos>");
}

int Vocabulary::lookup(const std::string& surface) const {
    auto it = ids_.find(surface);
    return it == ids_.end() ? kUnk : it->second;
}

bool Vocabulary::contains(const std::string& surface) const {
    return ids_.find(surface) != ids_.end();
}

int Vocabulary::add(const std::string& surface) {
    auto it = ids_.find(surface);
    if (it != ids_.end()) {
        return it->second;
    }
    const int id = static_cast<int>(surfaces_.size());
    surfaces_.push_back(surface);
    ids_.emplace(surface, id);
    return id;
}

const std::string& Vocabulary::surface(int id) const {
    if (id < 0 || id >= static_cast<int>(surfaces_.size())) {
        throw InvalidInputError("vocabulary id out of range: " + std::to_string(id));
    }
    return surfaces_[static_cast<std::size_t>(id)];
}

Sentence tokenize(const std::string& text, Vocabulary& vocab, bool allow_new) {
    Sentence out;
    std::istringstream stream(text);
    std::string word;
    while (stream >> word) {
        int id;
        if (allow_new) {
            id = vocab.add(word);
        } else {
            id = vocab.lookup(word);
        }
        out.tokens.push_back(Token{id, vocab.surface(id)});
    }
    if (out.empty()) {
        throw EmptyInputError("cannot tokenize empty text");
    }
    return out;
}

std::string surface_text(const Sentence& s) {
    std::string out;
    for (std::size_t i = 0; i < s.tokens.size(); ++i) {
        if (i > 0) out += ' ';
        out += s.tokens[i].surface;
    }
    return out;
}

NGramTable::NGramTable(int order) : order_(order) {
    if (order < 1 || order > 4) {
        throw InvalidOrderError("n-gram order must be in 1..4, got " + std::to_string(order));
    }
}

std::uint64_t NGramTable::pack_key(std::span<const Token> gram) {
    std::uint64_t key = 0;
    for (const Token& t : gram) {
        if (t.id < 0 || t.id > 0xffff) {
            throw InvalidInputError("token id out of range for n-gram key");
        }
        key = (key << 16) | static_cast<std::uint64_t>(t.id);
    }
    return key;
}

void NGramTable::add(const Sentence& s) {
    const std::size_t n = static_cast<std::size_t>(order_);
    if (s.size() < n) {
        return;
    }
    for (std::size_t i = 0; i + n <= s.size(); ++i) {
        const std::uint64_t key = pack_key(std::span<const Token>(s.tokens).subspan(i, n));
        ++counts_[key];
        ++total_;
    }
}

double NGramTable::frequency(std::uint64_t key) const {
    if (total_ == 0) {
        throw EmptyInputError("n-gram table is empty; frequency undefined");
    }
    auto it = counts_.find(key);
    if (it == counts_.end()) {
        return 0.0;
    }
    return static_cast<double>(it->second) / static_cast<double>(total_);
}

std::uint64_t NGramTable::count(std::uint64_t key) const {
    auto it = counts_.find(key);
    return it == counts_.end() ? 0 : it->second;
}

NGramTable build_ngram_table(const std::vector<Sentence>& sentences, int order) {
    NGramTable table(order);
    for (const Sentence& s : sentences) {
        table.add(s);
    }
    return table;
}

std::vector<double> ngram_vector(const Sentence& s, const NGramTable& table) {
    const std::size_t n = static_cast<std::size_t>(table.order());
    std::vector<double> out;
    if (s.size() < n) {
        return out;
    }
    out.reserve(s.size() - n + 1);
    const double total = static_cast<double>(table.total());
    for (std::size_t i = 0; i + n <= s.size(); ++i) {
        const std::uint64_t key = NGramTable::pack_key(std::span<const Token>(s.tokens).subspan(i, n));
        const std::uint64_t count = table.count(key);
        out.push_back(count == 0 ? 0.0 : static_cast<double>(count) / total);
    }
    return out;
}

void TagTable::add(const Sentence& s, const Tagger& tagger) {
    const std::vector<std::string> tags = tagger.tag(s);
    if (tags.size() != s.size()) {
        throw TaggerContractViolation("tagger returned " + std::to_string(tags.size()) +
                                      " tags for " + std::to_string(s.size()) + " tokens");
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
        ++counts_[s.tokens[i].id][tags[i]];
        ++totals_[s.tokens[i].id];
    }
}

double TagTable::value(int word_id, const std::string& tag) const {
    auto word_it = counts_.find(word_id);
    if (word_it == counts_.end()) {
        return 0.0;
    }
    auto tag_it = word_it->second.find(tag);
    if (tag_it == word_it->second.end()) {
        return 0.0;
    }
    return static_cast<double>(tag_it->second) / static_cast<double>(totals_.at(word_id));
}

std::uint64_t TagTable::word_total(int word_id) const {
    auto it = totals_.find(word_id);
    return it == totals_.end() ? 0 : it->second;
}

TagTable build_tag_table(const std::vector<Sentence>& sentences, const Tagger& tagger,
                         TagScheme scheme) {
    TagTable table(scheme);
    for (const Sentence& s : sentences) {
        table.add(s, tagger);
    }
    return table;
}

std::vector<double> tag_vector(const Sentence& s, const TagTable& table, const Tagger& tagger) {
    const std::vector<std::string> tags = tagger.tag(s);
    if (tags.size() != s.size()) {
        throw TaggerContractViolation("tagger returned " + std::to_string(tags.size()) +
                                      " tags for " + std::to_string(s.size()) + " tokens");
    }
    std::vector<double> out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        out.push_back(table.value(s.tokens[i].id, tags[i]));
    }
    return out;
}

namespace {

Token make_token(const Vocabulary& vocab, int id) {
    return Token{id, vocab.surface(id)};
}

}  // namespace

Corpus generate_synthetic_corpus(const SyntheticConfig& config) {
    if (config.size < 1) {
        throw ConfigError("corpus size must be >= 1");
    }
    if (config.vocab_size < 1) {
        throw ConfigError("vocab size must be >= 1");
    }
    if (config.min_len < 1 || config.max_len < config.min_len) {
        throw ConfigError("need 1 <= min_len <= max_len");
    }
    if (config.noise_rate < 0.0 || config.noise_rate >= 1.0) {
        throw ConfigError("noise rate must be in [0, 1)");
    }

    Corpus corpus;
    for (int i = 0; i < config.vocab_size; ++i) {
        corpus.source_vocab.add("s" + std::to_string(i));
        corpus.target_vocab.add("t" + std::to_string(i));
    }

    Rng rng(config.seed);

    // Substitution cipher over content ids.
    std::vector<int> cipher(static_cast<std::size_t>(config.vocab_size));
    for (int i = 0; i < config.vocab_size; ++i) cipher[static_cast<std::size_t>(i)] = i;
    shuffle(cipher, rng);

    corpus.examples.reserve(static_cast<std::size_t>(config.size));
    for (int i = 0; i < config.size; ++i) {
        ParallelExample ex;
        ex.id = i;

        const auto len = uniform_int(rng, config.min_len, config.max_len);
        for (std::int64_t j = 0; j < len; ++j) {
            const int content = static_cast<int>(uniform_int(rng, 0, config.vocab_size - 1));
            ex.source.tokens.push_back(make_token(corpus.source_vocab, Vocabulary::kReserved + content));
        }

        for (auto it = ex.source.tokens.rbegin(); it != ex.source.tokens.rend(); ++it) {
            const int content = it->id - Vocabulary::kReserved;
            const int mapped = Vocabulary::kReserved + cipher[static_cast<std::size_t>(content)];
            ex.target.tokens.push_back(make_token(corpus.target_vocab, mapped));
        }

        if (uniform_real(rng) < config.noise_rate) {
            ex.is_corrupted = true;
            const bool use_suffix = ex.target.size() == 1 || uniform_int(rng, 0, 1) == 0;
            if (use_suffix) {
                const auto extra = uniform_int(rng, 1, 4);
                for (std::int64_t j = 0; j < extra; ++j) {
                    const int content = static_cast<int>(uniform_int(rng, 0, config.vocab_size - 1));
                    ex.target.tokens.push_back(
                        make_token(corpus.target_vocab, Vocabulary::kReserved + content));
                }
            } else {
                const Sentence original = ex.target;
                shuffle(ex.target.tokens, rng);
                if (ex.target == original) {
                    // A no-op shuffle would mislabel the example; force a change.
                    std::rotate(ex.target.tokens.begin(), ex.target.tokens.begin() + 1,
                                ex.target.tokens.end());
                }
            }
        }
        corpus.examples.push_back(std::move(ex));
    }
    return corpus;
}

void save_corpus(const Corpus& corpus, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot open for writing: " + path);
    }
    for (const ParallelExample& ex : corpus.examples) {
        out << ex.id << '\t' << surface_text(ex.source) << '\t' << surface_text(ex.target) << '\t'
            << (ex.is_corrupted ? '1' : '0') << '\n';
    }
}

namespace {

Corpus load_corpus_impl(const std::string& path, Vocabulary source_vocab, Vocabulary target_vocab) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open for reading: " + path);
    }
    Corpus corpus;
    corpus.source_vocab = std::move(source_vocab);
    corpus.target_vocab = std::move(target_vocab);

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::vector<std::string> cols;
        std::size_t start = 0;
        while (true) {
            const std::size_t pos = line.find('\t', start);
            if (pos == std::string::npos) {
                cols.push_back(line.substr(start));
                break;
            }
            cols.push_back(line.substr(start, pos - start));
            start = pos + 1;
        }
        if (cols.size() != 4) {
            throw ParseError("line " + std::to_string(line_no) + ": expected 4 columns, got " +
                             std::to_string(cols.size()));
        }
        ParallelExample ex;
        try {
            ex.id = std::stoll(cols[0]);
        } catch (const std::exception&) {
            throw ParseError("line " + std::to_string(line_no) + ": bad example id '" + cols[0] + "'");
        }
        try {
            ex.source = tokenize(cols[1], corpus.source_vocab, true);
            ex.target = tokenize(cols[2], corpus.target_vocab, true);
        } catch (const EmptyInputError&) {
            throw ParseError("line " + std::to_string(line_no) + ": empty sentence column");
        }
        if (cols[3] == "0") {
            ex.is_corrupted = false;
        } else if (cols[3] == "1") {
            ex.is_corrupted = true;
        } else {
            throw ParseError("line " + std::to_string(line_no) + ": corrupted flag must be 0 or 1");
        }
        corpus.examples.push_back(std::move(ex));
    }
    if (corpus.examples.empty()) {
        throw ParseError("no examples in " + path);
    }
    return corpus;
}

}  // namespace

Corpus load_corpus(const std::string& path) {
    return load_corpus_impl(path, Vocabulary(), Vocabulary());
}

Corpus load_corpus(const std::string& path, Vocabulary source_vocab, Vocabulary target_vocab) {
    return load_corpus_impl(path, std::move(source_vocab), std::move(target_vocab));
}

void save_vocab(const Vocabulary& vocab, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot open for writing: " + path);
    }
    for (std::size_t id = 0; id < vocab.size(); ++id) {
        out << vocab.surface(static_cast<int>(id)) << '\n';
    }
}

Vocabulary load_vocab(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open for reading: " + path);
    }
    Vocabulary vocab;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            throw ParseError("line " + std::to_string(line_no) + ": empty vocabulary entry");
        }
        if (line_no <= Vocabulary::kReserved) {
            if (line != vocab.surface(static_cast<int>(line_no) - 1)) {
                throw ParseError("line " + std::to_string(line_no) + ": reserved entry mismatch");
            }
            continue;
        }
        vocab.add(line);
    }
    return vocab;
}

}  // namespace rlsel
