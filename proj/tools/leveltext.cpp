// leveltext: corpus building, simplification benchmark and reward service.

#include <algorithm>
#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "leveltext/backend_config.hpp"
#include "leveltext/bench.hpp"
#include "leveltext/corpus_pipeline.hpp"
#include "leveltext/errors.hpp"
#include "leveltext/parallel.hpp"
#include "leveltext/reward_engine.hpp"
#include "leveltext/reward_server.hpp"
#include "leveltext/utf8.hpp"

namespace fs = std::filesystem;
using namespace leveltext;

namespace {

struct Common {
  std::string data_dir;
  std::string lexicon_dir;
  std::string backend_config;
  std::string languages = "en,ja,ko,zh";
  std::uint64_t seed = kDefaultSeed;
  unsigned jobs = 1;
};

std::vector<Language> parse_languages(std::string list) {
  std::replace(list.begin(), list.end(), ',', ' ');
  std::vector<Language> out;
  for (const auto& part : utf8::split_whitespace(list)) {
    Language l = parse_language(part);
    if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
  }
  if (out.empty()) throw Error("no languages given");
  return out;
}

std::shared_ptr<const ResourceBundle> load_bundle(const Common& c) {
  fs::path data = c.data_dir.empty() ? default_data_dir() : fs::path(c.data_dir);
  std::optional<fs::path> lex;
  if (!c.lexicon_dir.empty()) lex = fs::path(c.lexicon_dir);
  return std::make_shared<const ResourceBundle>(
      ResourceBundle::load(data, parse_languages(c.languages), lex));
}

BackendSuite load_suite(const Common& c, std::shared_ptr<const ResourceBundle> bundle) {
  auto config = c.backend_config.empty() ? BackendConfig::mock()
                                         : BackendConfig::load(c.backend_config);
  config.apply_env_overrides();
  return build_suite(config, std::move(bundle));
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error("cannot open " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::ofstream open_out(const fs::path& p) {
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out) throw Error("cannot write " + p.string());
  return out;
}

std::ifstream open_in(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error("cannot open " + p.string());
  return in;
}

// Files with the extension under dir (sorted), or the path itself.
std::vector<fs::path> list_inputs(const fs::path& p, const std::string& ext) {
  if (fs::is_regular_file(p)) return {p};
  if (!fs::is_directory(p)) throw Error("no such input: " + p.string());
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(p)) {
    if (e.is_regular_file() && e.path().extension() == ext) out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <class T>
std::vector<T> concat(std::vector<std::vector<T>> parts) {
  std::vector<T> out;
  for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(out));
  return out;
}

void add_common(CLI::App* cmd, Common& c, bool backends) {
  cmd->add_option("--data-dir", c.data_dir, "Resource directory (default: built-in data/)");
  cmd->add_option("--lexicon-dir", c.lexicon_dir, "Directory with vocab_<lang>.tsv overrides");
  cmd->add_option("--language", c.languages, "Comma-separated language codes")
      ->capture_default_str();
  if (backends) {
    cmd->add_option("--backend-config", c.backend_config, "Backend config JSON (default: mocks)");
    cmd->add_option("--jobs", c.jobs, "Parallel workers")->capture_default_str();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Level-aware text simplification toolkit"};
  app.require_subcommand(1);
  Common c;

  // build-corpus
  auto* build = app.add_subcommand("build-corpus", "Chunk Wikipedia articles or PGV documents");
  std::string source = "wikipedia";
  std::string input;
  std::string out;
  add_common(build, c, true);
  build->add_option("--source", source, "wikipedia | pgv")->capture_default_str();
  build->add_option("--input", input, "File or directory; with several languages, <dir>/<lang>/")
      ->required();
  build->add_option("--out", out, "Chunk JSONL")->required();

  // expand-levels
  auto* expand = app.add_subcommand("expand-levels", "Replicate chunks across target levels");
  std::string in;
  std::string levels;
  expand->add_option("--in", in, "Chunk JSONL")->required();
  expand->add_option("--out", out, "Leveled chunk JSONL")->required();
  expand->add_option("--levels", levels, "Keep only these labels (comma-separated)");

  // sample-split
  auto* split = app.add_subcommand("sample-split", "Seeded per-language train/test split");
  std::string train_out, test_out;
  std::optional<std::size_t> test_count;
  std::optional<double> test_fraction;
  split->add_option("--in", in, "Chunk JSONL")->required();
  split->add_option("--train-out", train_out, "Train JSONL");
  split->add_option("--test-out", test_out, "Test JSONL")->required();
  auto* count_opt = split->add_option("--test-count", test_count, "Test items per language");
  auto* frac_opt = split->add_option("--test-fraction", test_fraction, "Test fraction");
  count_opt->excludes(frac_opt);
  split->add_option("--seed", c.seed, "RNG seed")->capture_default_str();

  // simplify
  auto* simplify = app.add_subcommand("simplify", "Generate simplifications for leveled chunks");
  std::string system = kReferenceSystem;
  add_common(simplify, c, true);
  simplify->add_option("--in", in, "Leveled chunk JSONL")->required();
  simplify->add_option("--out", out, "Generation JSONL")->required();
  simplify->add_option("--system", system, "'reference' or a name for the policy backend")
      ->capture_default_str();
  simplify->add_option("--seed", c.seed, "Sampling seed")->capture_default_str();
  double temperature = 0.0;
  simplify->add_option("--temperature", temperature, "Sampling temperature")->capture_default_str();

  // evaluate
  auto* evaluate_cmd = app.add_subcommand("evaluate", "Score generations on all metrics");
  bool strict = true;
  add_common(evaluate_cmd, c, true);
  evaluate_cmd->add_option("--in", in, "Generation JSONL")->required();
  evaluate_cmd->add_option("--out", out, "Record JSONL")->required();
  evaluate_cmd->add_flag("--strict,!--lenient", strict, "Fail on any metric error (default)");

  // aggregate
  auto* aggregate_cmd = app.add_subcommand("aggregate", "Total/Easy means and stds");
  std::vector<std::string> ins;
  aggregate_cmd->add_option("--in", ins, "Record JSONL files")->required();
  aggregate_cmd->add_option("--out", out, "Aggregate CSV")->required();

  // report
  auto* report_cmd = app.add_subcommand("report", "Per-metric CSVs and level-share plots");
  std::string out_dir;
  bool no_plots = false;
  report_cmd->add_option("--in", ins, "Record JSONL files")->required();
  report_cmd->add_option("--out-dir", out_dir, "Output directory")->required();
  report_cmd->add_flag("--no-plots", no_plots, "CSV only");

  // score-group
  auto* score = app.add_subcommand("score-group", "Score one rollout group from JSON");
  add_common(score, c, true);
  score->add_option("--in", in, "Request JSON ('-' for stdin)")->required();
  score->add_option("--out", out, "Response JSON (default stdout)");

  // serve-rewards
  auto* serve = app.add_subcommand("serve-rewards", "HTTP reward service");
  std::string host = "127.0.0.1";
  int port = 8080;
  add_common(serve, c, true);
  serve->add_option("--host", host)->capture_default_str();
  serve->add_option("--port", port)->capture_default_str();

  // demo-best-of-n
  auto* demo = app.add_subcommand("demo-best-of-n", "Rerank n policy samples by reward");
  std::string text, level, lang_code = "en";
  std::size_t n = 8;
  double demo_temperature = 1.0;
  add_common(demo, c, true);
  demo->add_option("--text", text, "Original text");
  demo->add_option("--text-file", in, "Read the original from a file");
  demo->add_option("--level", level, "Target level label")->required();
  demo->add_option("-n", n, "Candidates")->capture_default_str();
  demo->add_option("--temperature", demo_temperature)->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (build->parsed()) {
      auto bundle = load_bundle(c);
      auto suite = load_suite(c, bundle);
      auto langs = parse_languages(c.languages);
      auto src = parse_source(source);
      std::vector<CorpusChunk> chunks;
      for (Language lang : langs) {
        fs::path dir = input;
        if (fs::is_directory(dir / std::string(language_code(lang)))) {
          dir /= std::string(language_code(lang));
        } else if (langs.size() > 1) {
          throw Error("with several languages, --input needs a subdirectory per language");
        }
        const auto& res = bundle->at(lang);
        auto files = list_inputs(dir, src == CorpusSource::wikipedia ? ".txt" : ".json");
        std::vector<std::vector<CorpusChunk>> per_file(files.size());
        parallel_for(files.size(), c.jobs, [&](std::size_t i) {
          if (src == CorpusSource::wikipedia) {
            per_file[i] = chunk_wikipedia(read_file(files[i]), files[i].stem().string(), lang,
                                          *suite.tokenizer, res.reference_headings);
          } else {
            auto doc = pgv_document_from_json(nlohmann::json::parse(read_file(files[i])));
            if (auto ch = preprocess_pgv(doc, lang, *suite.tokenizer)) per_file[i] = {*ch};
          }
        });
        auto got = concat(std::move(per_file));
        std::cerr << language_code(lang) << ": " << files.size() << " inputs -> " << got.size()
                  << " chunks\n";
        std::move(got.begin(), got.end(), std::back_inserter(chunks));
      }
      auto f = open_out(out);
      write_chunks_jsonl(f, chunks);
    } else if (expand->parsed()) {
      auto f = open_in(in);
      auto chunks = read_chunks_jsonl(f);
      std::vector<std::string> keep;
      if (!levels.empty()) {
        std::replace(levels.begin(), levels.end(), ',', ' ');
        keep = utf8::split_whitespace(levels);
      }
      std::vector<CorpusChunk> out_chunks;
      for (Language lang : kAllLanguages) {
        std::vector<CorpusChunk> subset;
        for (const auto& ch : chunks) {
          if (ch.language == lang) subset.push_back(ch);
        }
        const auto& scale = LevelScale::for_language(lang);
        for (auto& ch : expand_levels(subset, scale)) {
          bool ok = keep.empty();
          for (const auto& k : keep) {
            try {
              ok = ok || scale.label(scale.ordinal(k)) == *ch.target_level;
            } catch (const UnknownLevelError&) {
            }
          }
          if (ok) out_chunks.push_back(std::move(ch));
        }
      }
      auto o = open_out(out);
      write_chunks_jsonl(o, out_chunks);
    } else if (split->parsed()) {
      auto f = open_in(in);
      auto chunks = read_chunks_jsonl(f);
      SplitSpec spec;
      spec.test_count = test_count;
      spec.test_fraction = test_fraction;
      spec.seed = c.seed;
      auto s = sample_and_split(chunks, spec);
      auto t = open_out(test_out);
      write_chunks_jsonl(t, s.test);
      if (!train_out.empty()) {
        auto tr = open_out(train_out);
        write_chunks_jsonl(tr, s.train);
      }
      std::cerr << "train " << s.train.size() << ", test " << s.test.size() << "\n";
    } else if (simplify->parsed()) {
      auto bundle = load_bundle(c);
      auto f = open_in(in);
      auto chunks = read_chunks_jsonl(f);
      SimplifyOptions opt;
      opt.temperature = temperature;
      opt.seed = c.seed;
      opt.jobs = c.jobs;
      std::vector<Generation> gens;
      if (system == kReferenceSystem) {
        gens = run_simplification(chunks, system, nullptr, *bundle, opt);
      } else {
        auto suite = load_suite(c, bundle);
        gens = run_simplification(chunks, system, suite.policy.get(), *bundle, opt);
      }
      auto failed = std::count_if(gens.begin(), gens.end(), [](const auto& g) { return g.failed; });
      if (failed) std::cerr << failed << " generations failed\n";
      auto o = open_out(out);
      write_generations_jsonl(o, gens);
    } else if (evaluate_cmd->parsed()) {
      auto bundle = load_bundle(c);
      auto suite = load_suite(c, bundle);
      auto f = open_in(in);
      auto gens = read_generations_jsonl(f);
      EvalOptions opt;
      opt.strict = strict;
      opt.jobs = c.jobs;
      auto records = evaluate(gens, *bundle, suite, opt);
      auto o = open_out(out);
      write_records_jsonl(o, records);
    } else if (aggregate_cmd->parsed() || report_cmd->parsed()) {
      std::vector<EvalRecord> records;
      for (const auto& p : ins) {
        auto f = open_in(p);
        auto part = read_records_jsonl(f);
        std::move(part.begin(), part.end(), std::back_inserter(records));
      }
      auto rows = aggregate(records);
      if (aggregate_cmd->parsed()) {
        auto o = open_out(out);
        o << aggregate_csv(rows);
      } else {
        for (const auto& p : report(rows, records, out_dir, !no_plots)) {
          std::cerr << "wrote " << p.string() << "\n";
        }
      }
    } else if (score->parsed()) {
      auto bundle = load_bundle(c);
      auto engine = RewardEngine(bundle, load_suite(c, bundle));
      nlohmann::json req = in == "-" ? nlohmann::json::parse(std::cin)
                                     : nlohmann::json::parse(read_file(in));
      EngineConfig defaults;
      defaults.jobs = c.jobs;
      auto parsed = parse_score_group_request(req, defaults);
      auto res = score_group_response(engine.score_group(parsed.group, parsed.config)).dump(2);
      if (out.empty()) {
        std::cout << res << "\n";
      } else {
        auto o = open_out(out);
        o << res << "\n";
      }
    } else if (serve->parsed()) {
      auto bundle = load_bundle(c);
      auto engine = std::make_shared<const RewardEngine>(bundle, load_suite(c, bundle));
      EngineConfig defaults;
      defaults.jobs = c.jobs;
      RewardServer server(engine, defaults);
      int bound = server.bind(host, port);
      std::cerr << "listening on " << host << ":" << bound << "\n";
      server.listen();
    } else if (demo->parsed()) {
      auto bundle = load_bundle(c);
      RewardEngine engine(bundle, load_suite(c, bundle));
      if (!in.empty()) text = read_file(in);
      if (text.empty()) throw Error("give --text or --text-file");
      Language lang = parse_languages(c.languages).front();
      int target = LevelScale::for_language(lang).ordinal(level);
      EngineConfig cfg;
      cfg.jobs = c.jobs;
      auto best = engine.demo_best_of_n(text, lang, target, n, cfg, demo_temperature);
      nlohmann::json j;
      j["best_index"] = best.best_index;
      j["best"] = best.best();
      j["candidates"] = nlohmann::json::array();
      for (std::size_t i = 0; i < best.candidates.size(); ++i) {
        nlohmann::json b;
        to_json(b, best.breakdowns[i]);
        j["candidates"].push_back({{"text", best.candidates[i]}, {"reward", b}});
      }
      std::cout << j.dump(2) << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "leveltext: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
