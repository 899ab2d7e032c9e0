#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "numforge/date.hpp"
#include "numforge/decimal.hpp"

namespace numforge {

using ordered_json = nlohmann::ordered_json;

// Gold answer in the reading-comprehension interchange shape: exactly one of
// number / spans / date is populated; the others keep their empty defaults.
struct Answer {
  enum class Kind { Number, Spans, Date };

  Kind kind = Kind::Number;
  std::string number;                     // canonical decimal string
  std::vector<std::string> spans;         // verbatim text spans
  std::string date_day, date_month, date_year;  // all-string, any may be ""

  static Answer make_number(const Decimal& d) {
    Answer a;
    a.kind = Kind::Number;
    a.number = d.str();
    return a;
  }
  static Answer make_number(std::int64_t v) { return make_number(Decimal::integer(v)); }
  static Answer make_span(std::string s) {
    Answer a;
    a.kind = Kind::Spans;
    a.spans = {std::move(s)};
    return a;
  }
  static Answer make_spans(std::vector<std::string> s) {
    Answer a;
    a.kind = Kind::Spans;
    a.spans = std::move(s);
    return a;
  }
  static Answer make_date(const DateValue& d) {
    Answer a;
    a.kind = Kind::Date;
    a.date_day = std::to_string(d.day);
    a.date_month = month_name(d.month);
    a.date_year = std::to_string(d.year);
    return a;
  }

  bool operator==(const Answer& o) const = default;

  ordered_json to_json() const;
  static Answer from_json(const ordered_json& j);
};

struct QAPair {
  std::string question;
  std::string query_id;
  Answer answer;
  std::string skill;  // optional generator tag; not serialized in DROP JSON

  bool operator==(const QAPair& o) const = default;
};

struct PassageEntry {
  std::string passage;
  std::vector<QAPair> qa_pairs;

  bool operator==(const PassageEntry& o) const = default;
};

// Top-level interchange document: passage_id -> entry, insertion-ordered.
class DropDataset {
 public:
  void add(std::string passage_id, PassageEntry entry);
  const PassageEntry* find(const std::string& passage_id) const;
  PassageEntry* find(const std::string& passage_id);

  const std::vector<std::pair<std::string, PassageEntry>>& entries() const { return entries_; }
  std::size_t passage_count() const { return entries_.size(); }
  std::size_t qa_count() const;

  ordered_json to_json() const;
  static DropDataset from_json(const ordered_json& j);

  std::string dumps(int indent = -1) const;
  static DropDataset loads(const std::string& text);

 private:
  std::vector<std::pair<std::string, PassageEntry>> entries_;
  std::map<std::string, std::size_t> index_;
};

}  // namespace numforge
