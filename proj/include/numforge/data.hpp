#pragma once

#include <string>
#include <vector>

namespace numforge::data {

// Bundled English word list for surface vocabulary (one word per entry,
// lowercase, no spaces). Replaceable at the CLI via --words.
const std::vector<std::string>& builtin_words();

// Sentence templates with their event semantics, as a JSON array.
const char* sentence_templates_json();

// Bundled generation vocabularies, JSON keyed by category.
const char* vocab_history_json();
const char* vocab_football_json();

// Symmetric comparative/antonym pairs, one per line "word|antonym".
const char* antonym_table();

}  // namespace numforge::data
