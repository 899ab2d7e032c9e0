#include "numforge/answer.hpp"

#include <stdexcept>

namespace numforge {

ordered_json Answer::to_json() const {
  ordered_json date;
  date["day"] = date_day;
  date["month"] = date_month;
  date["year"] = date_year;
  ordered_json j;
  j["number"] = number;
  j["spans"] = spans;
  j["date"] = std::move(date);
  return j;
}

Answer Answer::from_json(const ordered_json& j) {
  Answer a;
  a.number = j.value("number", std::string{});
  if (j.contains("spans")) a.spans = j.at("spans").get<std::vector<std::string>>();
  if (j.contains("date")) {
    const auto& d = j.at("date");
    a.date_day = d.value("day", std::string{});
    a.date_month = d.value("month", std::string{});
    a.date_year = d.value("year", std::string{});
  }
  if (!a.number.empty()) {
    a.kind = Kind::Number;
  } else if (!a.spans.empty()) {
    a.kind = Kind::Spans;
  } else if (!a.date_day.empty() || !a.date_month.empty() || !a.date_year.empty()) {
    a.kind = Kind::Date;
  } else {
    a.kind = Kind::Spans;  // fully empty answers behave as an empty span set
  }
  return a;
}

void DropDataset::add(std::string passage_id, PassageEntry entry) {
  if (index_.count(passage_id)) throw std::invalid_argument("duplicate passage_id: " + passage_id);
  index_[passage_id] = entries_.size();
  entries_.emplace_back(std::move(passage_id), std::move(entry));
}

const PassageEntry* DropDataset::find(const std::string& passage_id) const {
  auto it = index_.find(passage_id);
  return it == index_.end() ? nullptr : &entries_[it->second].second;
}

PassageEntry* DropDataset::find(const std::string& passage_id) {
  auto it = index_.find(passage_id);
  return it == index_.end() ? nullptr : &entries_[it->second].second;
}

std::size_t DropDataset::qa_count() const {
  std::size_t n = 0;
  for (const auto& [id, entry] : entries_) n += entry.qa_pairs.size();
  return n;
}

ordered_json DropDataset::to_json() const {
  ordered_json j = ordered_json::object();
  for (const auto& [id, entry] : entries_) {
    ordered_json qa = ordered_json::array();
    for (const QAPair& pair : entry.qa_pairs) {
      ordered_json p;
      p["question"] = pair.question;
      p["query_id"] = pair.query_id;
      p["answer"] = pair.answer.to_json();
      qa.push_back(std::move(p));
    }
    ordered_json e;
    e["passage"] = entry.passage;
    e["qa_pairs"] = std::move(qa);
    j[id] = std::move(e);
  }
  return j;
}

DropDataset DropDataset::from_json(const ordered_json& j) {
  DropDataset ds;
  for (const auto& [id, e] : j.items()) {
    PassageEntry entry;
    entry.passage = e.value("passage", std::string{});
    if (e.contains("qa_pairs")) {
      for (const auto& p : e.at("qa_pairs")) {
        QAPair pair;
        pair.question = p.value("question", std::string{});
        pair.query_id = p.value("query_id", std::string{});
        if (p.contains("answer")) pair.answer = Answer::from_json(p.at("answer"));
        entry.qa_pairs.push_back(std::move(pair));
      }
    }
    ds.add(id, std::move(entry));
  }
  return ds;
}

std::string DropDataset::dumps(int indent) const { return to_json().dump(indent); }

DropDataset DropDataset::loads(const std::string& text) {
  return from_json(ordered_json::parse(text));
}

}  // namespace numforge
