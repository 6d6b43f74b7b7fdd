#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "polygraph/dates.hpp"

namespace polygraph {

class CorpusError : public std::runtime_error {
 public:
  explicit CorpusError(const std::string& what) : std::runtime_error(what) {}
};

enum class DocType { tweet, press_release, perspective, news, wikipedia, background };

inline std::string_view to_string(DocType t) {
  switch (t) {
    case DocType::tweet: return "tweet";
    case DocType::press_release: return "press_release";
    case DocType::perspective: return "perspective";
    case DocType::news: return "news";
    case DocType::wikipedia: return "wikipedia";
    case DocType::background: return "background";
  }
  return "?";
}

inline DocType doc_type_from_string(std::string_view s) {
  if (s == "tweet") return DocType::tweet;
  if (s == "press_release") return DocType::press_release;
  if (s == "perspective") return DocType::perspective;
  if (s == "news") return DocType::news;
  if (s == "wikipedia") return DocType::wikipedia;
  if (s == "background") return DocType::background;
  throw CorpusError("unknown doc_type: '" + std::string(s) + "'");
}

// One text unit. Sentences are pre-tokenized; referenced_entities carries the
// per-sentence canonical entity ids produced by the wikification preprocessing
// (entity mentions appear in the token stream as their canonical id).
// adjectives holds per-sentence token indices tagged as adjectives.
struct Document {
  std::string id;
  DocType doc_type = DocType::tweet;
  std::optional<std::string> author_id;
  std::optional<std::string> issue_id;
  std::optional<int> event_index;
  std::optional<Date> date;
  std::vector<std::vector<std::string>> sentences;
  std::vector<std::vector<std::string>> referenced_entities;
  std::vector<std::vector<int>> adjectives;
  std::optional<std::string> headline;
};

enum class EntityKind { author, referenced };

struct EntityRecord {
  std::string id;
  std::string name;
  EntityKind kind = EntityKind::referenced;
};

struct IssueRecord {
  std::string id;
  std::string name;
  std::string background_doc;
  std::set<std::string> gold_hashtags;  // lowercase
};

struct EventRecord {
  std::string issue_id;
  int index = 0;
  Date start_date;
  Date end_date;
  std::vector<std::string> news_doc_ids;
};

namespace detail {
inline std::string lower(std::string s) {
  for (char& c : s)
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  return s;
}
}  // namespace detail

// Immutable after load; all downstream modules hold const references.
class Corpus {
 public:
  const std::vector<Document>& documents() const { return documents_; }
  const std::vector<EntityRecord>& entities() const { return entities_; }
  const std::vector<IssueRecord>& issues() const { return issues_; }
  const std::vector<EventRecord>& events() const { return events_; }

  const Document* find_document(const std::string& id) const {
    auto it = doc_index_.find(id);
    return it == doc_index_.end() ? nullptr : &documents_[it->second];
  }
  const Document& document(const std::string& id) const {
    const Document* d = find_document(id);
    if (!d) throw CorpusError("unknown document id: '" + id + "'");
    return *d;
  }

  const EntityRecord* find_entity(const std::string& id) const {
    auto it = entity_index_.find(id);
    return it == entity_index_.end() ? nullptr : &entities_[it->second];
  }
  const IssueRecord* find_issue(const std::string& id) const {
    auto it = issue_index_.find(id);
    return it == issue_index_.end() ? nullptr : &issues_[it->second];
  }
  const EventRecord* find_event(const std::string& issue_id, int index) const {
    auto it = event_index_.find(issue_id + "\x1f" + std::to_string(index));
    return it == event_index_.end() ? nullptr : &events_[it->second];
  }

  std::vector<const EventRecord*> events_of_issue(const std::string& issue_id) const {
    std::vector<const EventRecord*> out;
    for (const auto& e : events_)
      if (e.issue_id == issue_id) out.push_back(&e);
    return out;
  }

  // Author entity ids, sorted.
  std::vector<std::string> author_ids() const {
    std::vector<std::string> out;
    for (const auto& e : entities_)
      if (e.kind == EntityKind::author) out.push_back(e.id);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<const Document*> docs_by_author(const std::string& author_id) const {
    return lookup(by_author_, author_id);
  }
  std::vector<const Document*> docs_by_author_type(const std::string& author_id,
                                                   DocType t) const {
    return lookup(by_author_type_,
                  author_id + "\x1f" + std::string(to_string(t)));
  }
  std::vector<const Document*> docs_by_issue_type(const std::string& issue_id,
                                                  DocType t) const {
    return lookup(by_issue_type_, issue_id + "\x1f" + std::string(to_string(t)));
  }

  // Daily news-article counts per issue, driven by document dates.
  std::map<std::string, std::map<Date, double>> news_daily_counts() const {
    std::map<std::string, std::map<Date, double>> out;
    for (const auto& d : documents_) {
      if (d.doc_type != DocType::news || !d.issue_id || !d.date) continue;
      out[*d.issue_id][*d.date] += 1.0;
    }
    return out;
  }

  // Construction is reserved for the loader and test fixtures.
  static Corpus from_parts(std::vector<Document> docs,
                           std::vector<EntityRecord> entities,
                           std::vector<IssueRecord> issues,
                           std::vector<EventRecord> events) {
    Corpus c;
    c.documents_ = std::move(docs);
    c.entities_ = std::move(entities);
    c.issues_ = std::move(issues);
    c.events_ = std::move(events);
    c.finalize();
    return c;
  }

 private:
  void finalize();
  void validate() const;

  static std::vector<const Document*> lookup(
      const std::unordered_map<std::string, std::vector<std::size_t>>& m,
      const std::string& key) {
    std::vector<const Document*> out;
    auto it = m.find(key);
    if (it == m.end()) return out;
    return {};  // replaced below; kept for clarity
  }

  std::vector<Document> documents_;
  std::vector<EntityRecord> entities_;
  std::vector<IssueRecord> issues_;
  std::vector<EventRecord> events_;

  std::unordered_map<std::string, std::size_t> doc_index_;
  std::unordered_map<std::string, std::size_t> entity_index_;
  std::unordered_map<std::string, std::size_t> issue_index_;
  std::unordered_map<std::string, std::size_t> event_index_;
  std::unordered_map<std::string, std::vector<std::size_t>> by_author_;
  std::unordered_map<std::string, std::vector<std::size_t>> by_author_type_;
  std::unordered_map<std::string, std::vector<std::size_t>> by_issue_type_;
};

}  // namespace polygraph
