#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ogroup/group.hpp"
#include "ogroup/limits.hpp"

namespace ogroup::frontend {

struct CorpusEntry {
  std::string name;
  Group group;
};

/// The bundled corpus spec files, concatenated in file-name order.
std::string_view corpus_text();

/// Every corpus group in definition order, skipping helper names that start
/// with an underscore.
std::vector<CorpusEntry> load_corpus(const Limits &limits = {});

} // namespace ogroup::frontend
