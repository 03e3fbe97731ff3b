#pragma once

#include "rlsel/corpus.hpp"

namespace rlsel {

// Deterministic lexicon-plus-position tagger for synthetic corpora.
//
// POS mode assigns one of {N, V, A, O} from the token id, shifted to the
// next class on every third position, so frequent words carry a mixed tag
// distribution. NER mode marks a fixed id slice plus sentence-initial even
// ids as ENT.
class RuleTagger final : public Tagger {
public:
    explicit RuleTagger(TagScheme scheme) : scheme_(scheme) {}

    std::vector<std::string> tag(const Sentence& s) const override;

    TagScheme scheme() const { return scheme_; }

private:
    TagScheme scheme_;
};

}  // namespace rlsel
