#include "ogroup/frontend/corpus.hpp"

#include "ogroup/frontend/spec.hpp"

namespace ogroup::frontend {

namespace detail {
extern const char *const corpus_source;
}

std::string_view corpus_text() { return detail::corpus_source; }

std::vector<CorpusEntry> load_corpus(const Limits &limits) {
  Environment env = elaborate(parse_spec(corpus_text()), limits);
  std::vector<CorpusEntry> out;
  for (const auto &[name, g] : env.groups())
    if (!name.starts_with('_'))
      out.push_back({name, g});
  return out;
}

} // namespace ogroup::frontend
