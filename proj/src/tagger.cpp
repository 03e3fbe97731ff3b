#include "rlsel/tagger.hpp"

#include <array>

namespace rlsel {

namespace {
constexpr std::array<const char*, 4> kPosTags = {"N", "V", "A", "O"};
}

std::vector<std::string> RuleTagger::tag(const Sentence& s) const {
    std::vector<std::string> tags;
    tags.reserve(s.size());
    for (std::size_t pos = 0; pos < s.size(); ++pos) {
        const int id = s.tokens[pos].id;
        if (scheme_ == TagScheme::kPos) {
            std::size_t kind = static_cast<std::size_t>(id) % kPosTags.size();
            if (pos % 3 == 2) {
                kind = (kind + 1) % kPosTags.size();
            }
            tags.emplace_back(kPosTags[kind]);
        } else {
            const bool entity = (id % 5 == 3) || (pos == 0 && id % 2 == 0);
            tags.emplace_back(entity ? "ENT" : "NONE");
        }
    }
    return tags;
}

}  // namespace rlsel
