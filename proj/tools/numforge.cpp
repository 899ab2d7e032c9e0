// numforge: deterministic generators, augmentators, tokenization and
// scoring for synthetic numerical-reasoning datasets.
#include <cstdlib>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "numforge/augment.hpp"
#include "numforge/io.hpp"
#include "numforge/metrics.hpp"
#include "numforge/ndgen.hpp"
#include "numforge/tdgen.hpp"
#include "numforge/textproc.hpp"

namespace {

using numforge::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ordered_json load_config(const std::string& path) {
  if (path.empty()) return ordered_json::object();
  try {
    ordered_json j = ordered_json::parse(numforge::io::read_text_file(path));
    if (!j.is_object()) throw UsageError("config must be a JSON object: " + path);
    return j;
  } catch (const ordered_json::parse_error& e) {
    throw UsageError("malformed config " + path + ": " + e.what());
  }
}

// Flags beat config file entries; config entries beat defaults.
template <typename T>
void from_config(const CLI::Option* opt, const ordered_json& cfg,
                 const char* key, T& out) {
  if (opt != nullptr && opt->count() > 0) return;
  auto it = cfg.find(key);
  if (it == cfg.end()) return;
  try {
    out = it->template get<T>();
  } catch (const ordered_json::exception&) {
    throw UsageError(std::string("config field has wrong type: ") + key);
  }
}

std::uint64_t resolve_seed(const CLI::Option* opt, std::uint64_t flag_value,
                           const ordered_json& cfg, bool required) {
  if (opt->count() > 0) return flag_value;
  if (auto it = cfg.find("seed"); it != cfg.end()) {
    if (!it->is_number_unsigned() && !it->is_number_integer())
      throw UsageError("config field has wrong type: seed");
    return it->get<std::uint64_t>();
  }
  if (const char* env = std::getenv("NUMFORGE_SEED")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0')
      throw UsageError(std::string("NUMFORGE_SEED is not a number: ") + env);
    return v;
  }
  if (required)
    throw UsageError("a seed is required (--seed, config, or NUMFORGE_SEED)");
  return 0;
}

// Output target; "-" streams to stdout without the atomic rename.
class OutSink {
 public:
  explicit OutSink(const std::string& path) {
    if (path != "-") file_ = std::make_unique<numforge::io::AtomicWriter>(path);
  }
  std::ostream& stream() { return file_ ? file_->stream() : std::cout; }
  void commit() {
    if (file_)
      file_->commit();
    else
      std::cout.flush();
  }

 private:
  std::unique_ptr<numforge::io::AtomicWriter> file_;
};

class InSource {
 public:
  explicit InSource(const std::string& path) {
    if (path != "-") {
      file_.open(path, std::ios::binary);
      if (!file_) throw std::runtime_error("cannot open: " + path);
    }
  }
  std::istream& stream() { return file_.is_open() ? file_ : std::cin; }

 private:
  std::ifstream file_;
};

using RenderFn = std::function<std::string(std::size_t)>;

// Renders records index-by-index. Workers own disjoint fixed-size index
// chunks and their buffers are written in chunk order, so the byte stream
// is identical for every job count.
void write_records(std::ostream& os, std::size_t count, unsigned jobs,
                   const std::function<RenderFn(unsigned)>& make_render) {
  if (jobs <= 1) {
    RenderFn render = make_render(0);
    for (std::size_t i = 0; i < count; ++i) os << render(i);
    return;
  }
  constexpr std::size_t kChunk = 1024;
  std::vector<RenderFn> renders;
  renders.reserve(jobs);
  for (unsigned j = 0; j < jobs; ++j) renders.push_back(make_render(j));

  std::vector<std::string> parts(jobs);
  std::vector<std::exception_ptr> errors(jobs);
  for (std::size_t base = 0; base < count; base += kChunk * jobs) {
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (unsigned j = 0; j < jobs; ++j) {
      parts[j].clear();
      errors[j] = nullptr;
      threads.emplace_back([&, j] {
        try {
          std::size_t lo = base + j * kChunk;
          std::size_t hi = std::min(lo + kChunk, count);
          std::string buf;
          for (std::size_t i = lo; i < hi; ++i) buf += renders[j](i);
          parts[j] = std::move(buf);
        } catch (...) {
          errors[j] = std::current_exception();
        }
      });
    }
    for (auto& t : threads) t.join();
    for (unsigned j = 0; j < jobs; ++j)
      if (errors[j]) std::rethrow_exception(errors[j]);
    for (unsigned j = 0; j < jobs; ++j) os << parts[j];
  }
}

std::vector<std::string> load_word_file(const std::string& path) {
  std::string text = numforge::io::read_text_file(path);
  std::vector<std::string> words;
  std::string cur;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) words.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) words.push_back(cur);
  if (words.empty()) throw std::runtime_error("word file is empty: " + path);
  return words;
}

// ---------------------------------------------------------------- gen-nd

struct GenNdOpts {
  std::string config;
  std::uint64_t seed = 0;
  std::size_t count = 10;
  std::string split = "train";
  std::string kind;
  std::string out = "-";
  std::string format = "jsonl";
  std::string words_path;
  double dev_fraction = 0.1;
  std::int64_t pool_max = 20000;
  unsigned jobs = 1;
  CLI::Option* seed_opt = nullptr;
  CLI::Option* count_opt = nullptr;
  CLI::Option* split_opt = nullptr;
  CLI::Option* kind_opt = nullptr;
  CLI::Option* out_opt = nullptr;
  CLI::Option* format_opt = nullptr;
  CLI::Option* words_opt = nullptr;
  CLI::Option* devf_opt = nullptr;
  CLI::Option* pool_opt = nullptr;
  CLI::Option* jobs_opt = nullptr;
};

void run_gen_nd(GenNdOpts& o) {
  namespace nd = numforge::nd;
  ordered_json cfg = load_config(o.config);
  from_config(o.count_opt, cfg, "count", o.count);
  from_config(o.split_opt, cfg, "split", o.split);
  from_config(o.kind_opt, cfg, "kind", o.kind);
  from_config(o.out_opt, cfg, "out", o.out);
  from_config(o.format_opt, cfg, "format", o.format);
  from_config(o.words_opt, cfg, "words", o.words_path);
  from_config(o.devf_opt, cfg, "dev_fraction", o.dev_fraction);
  from_config(o.pool_opt, cfg, "pool_max", o.pool_max);
  from_config(o.jobs_opt, cfg, "jobs", o.jobs);
  std::uint64_t seed = resolve_seed(o.seed_opt, o.seed, cfg, true);

  if (o.count == 0) throw UsageError("--count must be positive");
  if (!(o.dev_fraction >= 0.0 && o.dev_fraction < 1.0))
    throw UsageError("--dev-fraction must lie in [0, 1)");
  if (o.pool_max < 1) throw UsageError("--pool-max must be positive");
  auto split = nd::split_from_name(o.split);
  if (!split) throw UsageError("unknown split: " + o.split);
  std::optional<nd::Kind> kind;
  if (!o.kind.empty()) {
    kind = nd::kind_from_name(o.kind);
    if (!kind) throw UsageError("unknown kind: " + o.kind);
  }

  nd::NdConfig ncfg;
  ncfg.seed = seed;
  ncfg.dev_fraction = o.dev_fraction;
  ncfg.pool_max = o.pool_max;
  if (!o.words_path.empty()) ncfg.words = load_word_file(o.words_path);

  if (o.format == "drop") {
    nd::NdGenerator gen(ncfg);
    numforge::DropDataset ds;
    for (std::size_t i = 0; i < o.count; ++i) {
      nd::NdExample ex = gen.generate(i, *split, kind);
      std::string id = "nd-" + std::to_string(i);
      numforge::QAPair qa;
      qa.question = ex.surface;
      qa.query_id = id;
      qa.answer = ex.answer;
      qa.skill = nd::kind_name(ex.kind);
      numforge::PassageEntry entry;
      entry.passage = "";
      entry.qa_pairs = {std::move(qa)};
      ds.add(id, std::move(entry));
    }
    OutSink sink(o.out);
    sink.stream() << ds.dumps() << "\n";
    sink.commit();
    return;
  }
  if (o.format != "jsonl") throw UsageError("unknown format: " + o.format);

  OutSink sink(o.out);
  write_records(sink.stream(), o.count, o.jobs, [&](unsigned) {
    auto gen = std::make_shared<nd::NdGenerator>(ncfg);
    return RenderFn([gen, split, kind](std::size_t i) {
      return nd::nd_to_json(gen->generate(i, *split, kind)).dump() + "\n";
    });
  });
  sink.commit();
}

// ---------------------------------------------------------------- gen-td

struct GenTdOpts {
  std::string config;
  std::uint64_t seed = 0;
  std::size_t count = 10;
  std::string out = "-";
  std::string format = "jsonl";
  std::string vocab = "history";
  double reuse_p = 0.7;
  std::int64_t num_lo = 2;
  std::int64_t num_hi = 10000;
  int quota = 8;
  int min_sentences = 3;
  int max_sentences = 6;
  unsigned jobs = 1;
  CLI::Option* seed_opt = nullptr;
  CLI::Option* count_opt = nullptr;
  CLI::Option* out_opt = nullptr;
  CLI::Option* format_opt = nullptr;
  CLI::Option* vocab_opt = nullptr;
  CLI::Option* reuse_opt = nullptr;
  CLI::Option* lo_opt = nullptr;
  CLI::Option* hi_opt = nullptr;
  CLI::Option* quota_opt = nullptr;
  CLI::Option* mins_opt = nullptr;
  CLI::Option* maxs_opt = nullptr;
  CLI::Option* jobs_opt = nullptr;
};

numforge::td::Vocabulary resolve_vocab(const std::string& name_or_path) {
  namespace td = numforge::td;
  if (name_or_path == "history" || name_or_path == "nfl")
    return td::builtin_vocabulary(name_or_path);
  ordered_json j = ordered_json::parse(numforge::io::read_text_file(name_or_path));
  td::Vocabulary v = td::Vocabulary::from_json(j);
  v.validate();
  return v;
}

void run_gen_td(GenTdOpts& o) {
  namespace td = numforge::td;
  ordered_json cfg = load_config(o.config);
  from_config(o.count_opt, cfg, "count", o.count);
  from_config(o.out_opt, cfg, "out", o.out);
  from_config(o.format_opt, cfg, "format", o.format);
  from_config(o.vocab_opt, cfg, "vocab", o.vocab);
  from_config(o.reuse_opt, cfg, "reuse_p", o.reuse_p);
  from_config(o.lo_opt, cfg, "num_lo", o.num_lo);
  from_config(o.hi_opt, cfg, "num_hi", o.num_hi);
  from_config(o.quota_opt, cfg, "quota", o.quota);
  from_config(o.mins_opt, cfg, "min_sentences", o.min_sentences);
  from_config(o.maxs_opt, cfg, "max_sentences", o.max_sentences);
  from_config(o.jobs_opt, cfg, "jobs", o.jobs);
  std::uint64_t seed = resolve_seed(o.seed_opt, o.seed, cfg, true);

  if (o.count == 0) throw UsageError("--count must be positive");
  if (!(o.reuse_p >= 0.0 && o.reuse_p <= 1.0))
    throw UsageError("--reuse-p must lie in [0, 1]");
  if (o.num_lo < 0 || o.num_hi < o.num_lo)
    throw UsageError("number range is empty");
  if (o.quota < 0) throw UsageError("--quota must be non-negative");
  if (o.min_sentences < 1 || o.max_sentences < o.min_sentences)
    throw UsageError("sentence range is empty");

  td::TdConfig tcfg;
  tcfg.seed = seed;
  tcfg.vocab = resolve_vocab(o.vocab);
  tcfg.reuse_p = o.reuse_p;
  tcfg.num_lo = o.num_lo;
  tcfg.num_hi = o.num_hi;
  tcfg.question_quota = o.quota;
  tcfg.min_sentences = o.min_sentences;
  tcfg.max_sentences = o.max_sentences;

  if (o.format == "drop") {
    td::TdGenerator gen(tcfg);
    numforge::DropDataset ds;
    for (std::size_t i = 0; i < o.count; ++i) {
      td::TdPassage p = gen.generate(i);
      std::string id = "td-" + std::to_string(i);
      numforge::PassageEntry entry;
      entry.passage = p.passage_text();
      for (std::size_t q = 0; q < p.qa_pairs.size(); ++q) {
        numforge::QAPair qa = p.qa_pairs[q];
        qa.query_id = id + "-q" + std::to_string(q);
        entry.qa_pairs.push_back(std::move(qa));
      }
      ds.add(id, std::move(entry));
    }
    OutSink sink(o.out);
    sink.stream() << ds.dumps() << "\n";
    sink.commit();
    return;
  }
  if (o.format != "jsonl") throw UsageError("unknown format: " + o.format);

  OutSink sink(o.out);
  write_records(sink.stream(), o.count, o.jobs, [&](unsigned) {
    auto gen = std::make_shared<td::TdGenerator>(tcfg);
    return RenderFn([gen](std::size_t i) {
      td::TdPassage p = gen->generate(i);
      std::string buf;
      for (std::size_t q = 0; q < p.qa_pairs.size(); ++q)
        buf += td::td_record_json(p, q).dump() + "\n";
      return buf;
    });
  });
  sink.commit();
}

// ---------------------------------------------------------------- augment

struct AugmentOpts {
  std::string config;
  std::uint64_t seed = 0;
  std::string in;
  std::string out;
  std::string stats;
  std::vector<std::string> names;
  std::int64_t patch_number = 63;
  std::string range_mode = "add";
  std::int64_t range_addend = 1000;
  std::int64_t range_factor = 2;
  std::string antonyms_path;
  CLI::Option* seed_opt = nullptr;
  CLI::Option* in_opt = nullptr;
  CLI::Option* out_opt = nullptr;
  CLI::Option* stats_opt = nullptr;
  CLI::Option* names_opt = nullptr;
  CLI::Option* patch_opt = nullptr;
  CLI::Option* rmode_opt = nullptr;
  CLI::Option* radd_opt = nullptr;
  CLI::Option* rfac_opt = nullptr;
  CLI::Option* ant_opt = nullptr;
};

void run_augment(AugmentOpts& o) {
  namespace aug = numforge::aug;
  ordered_json cfg = load_config(o.config);
  from_config(o.in_opt, cfg, "in", o.in);
  from_config(o.out_opt, cfg, "out", o.out);
  from_config(o.stats_opt, cfg, "stats", o.stats);
  from_config(o.names_opt, cfg, "augmentators", o.names);
  from_config(o.patch_opt, cfg, "patch_number", o.patch_number);
  from_config(o.rmode_opt, cfg, "range_mode", o.range_mode);
  from_config(o.radd_opt, cfg, "range_addend", o.range_addend);
  from_config(o.rfac_opt, cfg, "range_factor", o.range_factor);
  from_config(o.ant_opt, cfg, "antonyms", o.antonyms_path);
  std::uint64_t seed = resolve_seed(o.seed_opt, o.seed, cfg, false);

  if (o.in.empty()) throw UsageError("--in is required");
  if (o.out.empty()) throw UsageError("--out is required");

  aug::AugmentConfig acfg;
  acfg.seed = seed;
  acfg.patch_number = o.patch_number;
  if (o.range_mode == "add")
    acfg.range_mode = aug::RangeMode::Add;
  else if (o.range_mode == "multiply")
    acfg.range_mode = aug::RangeMode::Multiply;
  else
    throw UsageError("--range-mode must be add or multiply");
  acfg.range_addend = o.range_addend;
  acfg.range_factor = o.range_factor;
  if (!o.antonyms_path.empty())
    acfg.lexicon.load_lines(numforge::io::read_text_file(o.antonyms_path));

  std::vector<std::string> names =
      o.names.empty() ? aug::default_augmentator_names() : o.names;
  for (const std::string& n : names) {
    // validate early so unknown names are a usage error, not a data error
    try {
      numforge::QAPair probe;
      probe.question = "";
      probe.query_id = "probe";
      aug::apply_augmentator(n, "", probe, acfg);
    } catch (const aug::UnknownAugmentator& e) {
      throw UsageError(e.what());
    }
  }

  numforge::DropDataset dataset;
  try {
    dataset = numforge::DropDataset::loads(numforge::io::read_text_file(o.in));
  } catch (const std::exception& e) {
    throw std::runtime_error("malformed dataset " + o.in + ": " + e.what());
  }

  auto [augmented, stats] = aug::augment_dataset(dataset, names, acfg);

  OutSink sink(o.out);
  sink.stream() << augmented.dumps() << "\n";
  sink.commit();

  if (!o.stats.empty()) {
    ordered_json sj = ordered_json::object();
    for (const auto& [name, count] : stats) sj[name] = count;
    numforge::io::write_text_file_atomic(o.stats, sj.dump(2) + "\n");
  }
}

// ------------------------------------------------------- token pipelines

std::vector<numforge::textproc::Token> line_tokens(const std::string& line) {
  namespace tp = numforge::textproc;
  std::size_t first = line.find_first_not_of(" \t\r");
  if (first != std::string::npos && line[first] == '{') {
    ordered_json j = ordered_json::parse(line);
    return tp::tokens_from_rendered(
        j.at("tokens").get<std::vector<std::string>>());
  }
  return tp::whitespace_tokenize(line);
}

bool blank_line(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

struct TokenizeOpts {
  std::string in = "-";
  std::string out = "-";
};

void run_tokenize(TokenizeOpts& o) {
  namespace tp = numforge::textproc;
  InSource src(o.in);
  OutSink sink(o.out);
  std::string line;
  while (std::getline(src.stream(), line)) {
    if (blank_line(line)) continue;
    auto toks = tp::digit_tokenize(line_tokens(line));
    ordered_json j;
    j["tokens"] = tp::tokens_to_rendered(toks);
    sink.stream() << j.dump() << "\n";
  }
  sink.commit();
}

struct ShiftOpts {
  std::string config;
  std::uint64_t seed = 0;
  std::string in = "-";
  std::string out = "-";
  int max_len = 512;
  CLI::Option* seed_opt = nullptr;
  CLI::Option* maxlen_opt = nullptr;
};

void run_shift(ShiftOpts& o) {
  namespace tp = numforge::textproc;
  ordered_json cfg = load_config(o.config);
  from_config(o.maxlen_opt, cfg, "max_len", o.max_len);
  std::uint64_t seed = resolve_seed(o.seed_opt, o.seed, cfg, true);

  InSource src(o.in);
  OutSink sink(o.out);
  std::string line;
  std::size_t index = 0;
  while (std::getline(src.stream(), line)) {
    if (blank_line(line)) continue;
    auto toks = line_tokens(line);
    numforge::Rng rng = numforge::derived_rng(seed, "shift", index);
    tp::ShiftResult sr;
    try {
      sr = tp::random_shift(static_cast<int>(toks.size()), rng, o.max_len);
    } catch (const tp::LengthExceeded& e) {
      throw std::runtime_error("record " + std::to_string(index) + ": " + e.what());
    }
    ordered_json j;
    j["tokens"] = tp::tokens_to_rendered(toks);
    j["offset"] = sr.offset;
    j["position_ids"] = sr.position_ids;
    sink.stream() << j.dump() << "\n";
    ++index;
  }
  sink.commit();
}

struct MaskOpts {
  std::string config;
  std::uint64_t seed = 0;
  std::string in = "-";
  std::string out = "-";
  double mask_p = 0.15;
  int max_masks = 65;
  int max_len = 512;
  bool filter = false;
  bool no_digit_tokenize = false;
  CLI::Option* seed_opt = nullptr;
  CLI::Option* p_opt = nullptr;
  CLI::Option* mm_opt = nullptr;
  CLI::Option* ml_opt = nullptr;
};

void run_mask(MaskOpts& o) {
  namespace tp = numforge::textproc;
  ordered_json cfg = load_config(o.config);
  from_config(o.p_opt, cfg, "mask_p", o.mask_p);
  from_config(o.mm_opt, cfg, "max_masks", o.max_masks);
  from_config(o.ml_opt, cfg, "max_len", o.max_len);
  std::uint64_t seed = resolve_seed(o.seed_opt, o.seed, cfg, true);
  if (!(o.mask_p >= 0.0 && o.mask_p <= 1.0))
    throw UsageError("--mask-p must lie in [0, 1]");

  tp::MlmConfig mcfg;
  mcfg.mask_p = o.mask_p;
  mcfg.max_masks = o.max_masks;
  mcfg.max_len = o.max_len;

  InSource src(o.in);
  OutSink sink(o.out);
  std::string line;
  std::size_t index = 0;
  while (std::getline(src.stream(), line)) {
    if (blank_line(line)) continue;
    std::size_t record = index++;
    auto toks = line_tokens(line);
    if (o.filter && !tp::mlm_filter_paragraph(tp::detokenize(toks))) continue;
    if (!o.no_digit_tokenize) toks = tp::digit_tokenize(toks);
    if (static_cast<int>(toks.size()) > o.max_len)
      throw std::runtime_error("record " + std::to_string(record) +
                               " exceeds max length " + std::to_string(o.max_len));
    numforge::Rng rng = numforge::derived_rng(seed, "mask", record);
    tp::MaskedSample sample = tp::mlm_mask(toks, rng, mcfg);
    sink.stream() << sample.to_json().dump() << "\n";
  }
  sink.commit();
}

// ------------------------------------------------------------------ eval

struct EvalOpts {
  std::string gold;
  std::string pred;
  std::string out;
  std::string group_by = "all";
};

void run_eval(EvalOpts& o) {
  namespace mt = numforge::metrics;
  mt::GroupBy gb;
  if (o.group_by == "all")
    gb = mt::GroupBy::All;
  else if (o.group_by == "type")
    gb = mt::GroupBy::AnswerType;
  else if (o.group_by == "augmentator")
    gb = mt::GroupBy::Augmentator;
  else if (o.group_by == "none")
    gb = mt::GroupBy::None;
  else
    throw UsageError("--group-by must be all, type, augmentator, or none");

  numforge::DropDataset gold;
  try {
    gold = numforge::DropDataset::loads(numforge::io::read_text_file(o.gold));
  } catch (const std::exception& e) {
    throw std::runtime_error("malformed dataset " + o.gold + ": " + e.what());
  }
  InSource pred_src(o.pred);
  std::map<std::string, numforge::Answer> predictions;
  try {
    predictions = mt::read_predictions(pred_src.stream());
  } catch (const std::exception& e) {
    throw std::runtime_error("malformed predictions " + o.pred + ": " + e.what());
  }

  mt::EvalReport report = mt::evaluate(gold, predictions, gb);
  std::cout << report.table();
  if (!o.out.empty())
    numforge::io::write_text_file_atomic(o.out, report.to_json().dump(2) + "\n");
}

// ----------------------------------------------------------------- stats

struct StatsOpts {
  std::string in;
  std::string out;
  std::string format = "auto";
};

bool looks_like_drop(const std::string& first_line) {
  try {
    ordered_json j = ordered_json::parse(first_line);
    if (!j.is_object() || j.empty()) return false;
    for (const auto& [key, value] : j.items()) {
      (void)key;
      if (!value.is_object() || !value.contains("qa_pairs")) return false;
    }
    return true;
  } catch (const ordered_json::parse_error&) {
    // spans multiple lines: single JSONL records never do
    return true;
  }
}

void run_stats(StatsOpts& o) {
  if (o.in.empty()) throw UsageError("--in is required");
  std::string text = numforge::io::read_text_file(o.in);
  std::istringstream in(text);
  std::string first_line;
  while (std::getline(in, first_line) && blank_line(first_line)) {
  }

  bool drop = o.format == "drop" ||
              (o.format == "auto" && !first_line.empty() && looks_like_drop(first_line));
  ordered_json out;
  if (drop) {
    numforge::DropDataset ds;
    try {
      ds = numforge::DropDataset::loads(text);
    } catch (const std::exception& e) {
      throw std::runtime_error("malformed dataset " + o.in + ": " + e.what());
    }
    std::map<std::string, std::size_t> types, augmentators;
    for (const auto& [pid, entry] : ds.entries())
      for (const numforge::QAPair& qa : entry.qa_pairs) {
        ++types[numforge::metrics::answer_type_name(qa.answer)];
        std::size_t colon = qa.query_id.find(':');
        if (colon != std::string::npos)
          ++augmentators[qa.query_id.substr(colon + 1)];
      }
    out["format"] = "drop";
    out["passages"] = ds.passage_count();
    out["qa_pairs"] = ds.qa_count();
    ordered_json tj = ordered_json::object();
    for (const auto& [k, v] : types) tj[k] = v;
    out["answer_types"] = tj;
    if (!augmentators.empty()) {
      ordered_json aj = ordered_json::object();
      for (const auto& [k, v] : augmentators) aj[k] = v;
      out["augmentators"] = aj;
    }
  } else {
    std::istringstream lines(text);
    std::string line;
    std::size_t records = 0;
    std::map<std::string, std::size_t> by_kind, by_split, by_skill;
    while (std::getline(lines, line)) {
      if (blank_line(line)) continue;
      ordered_json j;
      try {
        j = ordered_json::parse(line);
      } catch (const ordered_json::parse_error& e) {
        throw std::runtime_error("malformed record " + std::to_string(records) +
                                 " in " + o.in + ": " + e.what());
      }
      ++records;
      if (j.contains("kind")) ++by_kind[j["kind"].get<std::string>()];
      if (j.contains("split")) ++by_split[j["split"].get<std::string>()];
      if (j.contains("skill")) ++by_skill[j["skill"].get<std::string>()];
    }
    out["format"] = "jsonl";
    out["records"] = records;
    auto emit = [&](const char* key, const std::map<std::string, std::size_t>& m) {
      if (m.empty()) return;
      ordered_json mj = ordered_json::object();
      for (const auto& [k, v] : m) mj[k] = v;
      out[key] = mj;
    };
    emit("by_kind", by_kind);
    emit("by_split", by_split);
    emit("by_skill", by_skill);
  }

  if (o.out.empty()) {
    std::cout << out.dump(2) << "\n";
  } else {
    numforge::io::write_text_file_atomic(o.out, out.dump(2) + "\n");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"deterministic generators and scoring for synthetic numerical reasoning data"};
  app.require_subcommand(1);

  GenNdOpts nd;
  CLI::App* nd_cmd = app.add_subcommand("gen-nd", "generate numerical expression examples");
  nd.seed_opt = nd_cmd->add_option("--seed", nd.seed, "generation seed");
  nd.count_opt = nd_cmd->add_option("--count", nd.count, "number of examples");
  nd.split_opt = nd_cmd->add_option("--split", nd.split, "train or dev");
  nd.kind_opt = nd_cmd->add_option("--kind", nd.kind, "template kind (default: cycle through all)");
  nd.out_opt = nd_cmd->add_option("--out", nd.out, "output path or -");
  nd.format_opt = nd_cmd->add_option("--format", nd.format, "jsonl or drop");
  nd.words_opt = nd_cmd->add_option("--words", nd.words_path, "replacement word list file");
  nd.devf_opt = nd_cmd->add_option("--dev-fraction", nd.dev_fraction, "dev share of the number pool");
  nd.pool_opt = nd_cmd->add_option("--pool-max", nd.pool_max, "largest pool integer");
  nd.jobs_opt = nd_cmd->add_option("--jobs", nd.jobs, "worker threads (output is identical for any value)");
  nd_cmd->add_option("--config", nd.config, "JSON config file");

  GenTdOpts td;
  CLI::App* td_cmd = app.add_subcommand("gen-td", "generate textual passages with questions");
  td.seed_opt = td_cmd->add_option("--seed", td.seed, "generation seed");
  td.count_opt = td_cmd->add_option("--count", td.count, "number of passages");
  td.out_opt = td_cmd->add_option("--out", td.out, "output path or -");
  td.format_opt = td_cmd->add_option("--format", td.format, "jsonl or drop");
  td.vocab_opt = td_cmd->add_option("--vocab", td.vocab, "history, nfl, or a vocabulary JSON file");
  td.reuse_opt = td_cmd->add_option("--reuse-p", td.reuse_p, "probability of reusing a sampled value");
  td.lo_opt = td_cmd->add_option("--num-lo", td.num_lo, "smallest sentence amount");
  td.hi_opt = td_cmd->add_option("--num-hi", td.num_hi, "largest sentence amount");
  td.quota_opt = td_cmd->add_option("--quota", td.quota, "questions per passage");
  td.mins_opt = td_cmd->add_option("--min-sentences", td.min_sentences, "minimum sentences");
  td.maxs_opt = td_cmd->add_option("--max-sentences", td.max_sentences, "maximum sentences");
  td.jobs_opt = td_cmd->add_option("--jobs", td.jobs, "worker threads (output is identical for any value)");
  td_cmd->add_option("--config", td.config, "JSON config file");

  AugmentOpts au;
  CLI::App* au_cmd = app.add_subcommand("augment", "derive challenge examples from a dataset");
  au.seed_opt = au_cmd->add_option("--seed", au.seed, "seed for order-sensitive augmentators");
  au.in_opt = au_cmd->add_option("--in", au.in, "input dataset (DROP JSON)");
  au.out_opt = au_cmd->add_option("--out", au.out, "output dataset (DROP JSON)");
  au.stats_opt = au_cmd->add_option("--stats", au.stats, "write per-augmentator counts here");
  au.names_opt = au_cmd->add_option("--augmentators", au.names, "comma-separated names; + composes")->delimiter(',');
  au.patch_opt = au_cmd->add_option("--patch-number", au.patch_number, "number used by patch-start/patch-end");
  au.rmode_opt = au_cmd->add_option("--range-mode", au.range_mode, "add or multiply");
  au.radd_opt = au_cmd->add_option("--range-addend", au.range_addend, "constant added by range");
  au.rfac_opt = au_cmd->add_option("--range-factor", au.range_factor, "factor multiplied by range");
  au.ant_opt = au_cmd->add_option("--antonyms", au.antonyms_path, "extra antonym pairs, one word|antonym per line");
  au_cmd->add_option("--config", au.config, "JSON config file");

  TokenizeOpts tk;
  CLI::App* tk_cmd = app.add_subcommand("tokenize", "apply digit tokenization to text or token records");
  tk_cmd->add_option("--in", tk.in, "text lines or {\"tokens\": [...]} JSONL; - for stdin");
  tk_cmd->add_option("--out", tk.out, "output path or -");

  ShiftOpts sh;
  CLI::App* sh_cmd = app.add_subcommand("shift", "assign shifted position ids to token records");
  sh.seed_opt = sh_cmd->add_option("--seed", sh.seed, "shift seed");
  sh_cmd->add_option("--in", sh.in, "text lines or token JSONL; - for stdin");
  sh_cmd->add_option("--out", sh.out, "output path or -");
  sh.maxlen_opt = sh_cmd->add_option("--max-len", sh.max_len, "position window size");
  sh_cmd->add_option("--config", sh.config, "JSON config file");

  MaskOpts mk;
  CLI::App* mk_cmd = app.add_subcommand("mask", "apply masked-language-model masking to token records");
  mk.seed_opt = mk_cmd->add_option("--seed", mk.seed, "masking seed");
  mk_cmd->add_option("--in", mk.in, "text lines or token JSONL; - for stdin");
  mk_cmd->add_option("--out", mk.out, "output path or -");
  mk.p_opt = mk_cmd->add_option("--mask-p", mk.mask_p, "per-token masking probability");
  mk.mm_opt = mk_cmd->add_option("--max-masks", mk.max_masks, "cap on masked positions");
  mk.ml_opt = mk_cmd->add_option("--max-len", mk.max_len, "maximum record length");
  mk_cmd->add_flag("--filter", mk.filter, "drop paragraphs with fewer than 15 numbers");
  mk_cmd->add_flag("--no-digit-tokenize", mk.no_digit_tokenize, "mask the tokens as given");
  mk_cmd->add_option("--config", mk.config, "JSON config file");

  EvalOpts ev;
  CLI::App* ev_cmd = app.add_subcommand("eval", "score predictions against a gold dataset");
  ev_cmd->add_option("--gold", ev.gold, "gold dataset (DROP JSON)")->required();
  ev_cmd->add_option("--pred", ev.pred, "predictions JSONL {query_id, answer}")->required();
  ev_cmd->add_option("--out", ev.out, "write the JSON report here");
  ev_cmd->add_option("--group-by", ev.group_by, "all, type, augmentator, or none");

  StatsOpts st;
  CLI::App* st_cmd = app.add_subcommand("stats", "summarize a dataset file");
  st_cmd->add_option("--in", st.in, "JSONL or DROP JSON input")->required();
  st_cmd->add_option("--out", st.out, "output path (default stdout)");
  st_cmd->add_option("--format", st.format, "auto, jsonl, or drop");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (nd_cmd->parsed()) run_gen_nd(nd);
    if (td_cmd->parsed()) run_gen_td(td);
    if (au_cmd->parsed()) run_augment(au);
    if (tk_cmd->parsed()) run_tokenize(tk);
    if (sh_cmd->parsed()) run_shift(sh);
    if (mk_cmd->parsed()) run_mask(mk);
    if (ev_cmd->parsed()) run_eval(ev);
    if (st_cmd->parsed()) run_stats(st);
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
