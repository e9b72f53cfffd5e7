#include "leveltext/bench.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "leveltext/errors.hpp"
#include "leveltext/parallel.hpp"
#include "leveltext/prompts.hpp"
#include "leveltext/semantic_preservation.hpp"
#include "leveltext/text_analysis.hpp"
#include "leveltext/utf8.hpp"
#include "leveltext/vocab_coverage.hpp"

namespace leveltext {

namespace {

template <class T, class F>
std::vector<T> read_jsonl(std::istream& in, const char* what, F&& parse) {
  std::vector<T> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (utf8::trim(line).empty()) continue;
    try {
      out.push_back(parse(nlohmann::json::parse(line)));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(what, lineno, e.what());
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(what, lineno, e.what());
    }
  }
  return out;
}

std::optional<double> opt_number(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  return j[key].get<double>();
}

}  // namespace

// --- generations -----------------------------------------------------------

nlohmann::json to_json(const Generation& g) {
  nlohmann::json j = {{"chunk_id", g.chunk_id},
                      {"language", std::string(language_code(g.language))},
                      {"target_level", g.target_level},
                      {"system", g.system},
                      {"original", g.original},
                      {"candidate", g.candidate},
                      {"failed", g.failed}};
  if (!g.error.empty()) j["error"] = g.error;
  return j;
}

Generation generation_from_json(const nlohmann::json& j) {
  Generation g;
  try {
    g.chunk_id = j.at("chunk_id").get<std::string>();
    g.language = parse_language(j.at("language").get<std::string>());
    g.target_level = j.at("target_level").get<std::string>();
    g.system = j.at("system").get<std::string>();
    g.original = j.at("original").get<std::string>();
    g.candidate = j.value("candidate", std::string());
    g.failed = j.value("failed", false);
    g.error = j.value("error", std::string());
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed generation record: ") + e.what());
  }
  return g;
}

void write_generations_jsonl(std::ostream& out, const std::vector<Generation>& gens) {
  for (const auto& g : gens) out << to_json(g).dump() << '\n';
}

std::vector<Generation> read_generations_jsonl(std::istream& in) {
  return read_jsonl<Generation>(in, "generations", generation_from_json);
}

std::vector<Generation> run_simplification(const std::vector<CorpusChunk>& chunks,
                                           const std::string& system,
                                           const ChatModelClient* policy,
                                           const ResourceBundle& resources,
                                           const SimplifyOptions& options) {
  bool passthrough = system == kReferenceSystem;
  if (!passthrough && !policy) throw PreconditionError("system '" + system + "' needs a policy");
  std::vector<Generation> out(chunks.size());
  parallel_for(chunks.size(), options.jobs, [&](std::size_t i) {
    const auto& c = chunks[i];
    if (!c.target_level) throw PreconditionError("chunk " + c.id + " has no target level");
    const auto& scale = resources.at(c.language).lexicon.scale();
    int target = scale.ordinal(*c.target_level);
    Generation g;
    g.chunk_id = c.id;
    g.language = c.language;
    g.target_level = scale.label(target);
    g.system = system;
    g.original = c.text;
    if (passthrough) {
      g.candidate = c.text;
    } else {
      try {
        auto prompt = render_simplify_prompt(c.language, target, c.text);
        g.candidate = utf8::trim(policy->complete(prompt, options.temperature, options.seed));
        if (g.candidate.empty()) {
          g.failed = true;
          g.error = "empty completion";
        }
      } catch (const Error& e) {
        g.failed = true;
        g.error = e.what();
      }
    }
    out[i] = std::move(g);
  });
  return out;
}

// --- evaluation ------------------------------------------------------------

bool EvalRecord::has_flag(std::string_view f) const {
  return std::find(flags.begin(), flags.end(), f) != flags.end();
}

nlohmann::json to_json(const EvalRecord& r) {
  auto num = [](const std::optional<double>& v) -> nlohmann::json {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
  };
  nlohmann::json j = {{"chunk_id", r.chunk_id},
                      {"language", std::string(language_code(r.language))},
                      {"target_level", r.target_level},
                      {"system", r.system},
                      {"coverage", num(r.coverage)},
                      {"semantic", num(r.semantic)},
                      {"coherence", num(r.coherence)},
                      {"level_shares", r.level_shares},
                      {"flags", r.flags}};
  if (!r.diagnostics.empty()) j["diagnostics"] = r.diagnostics;
  return j;
}

EvalRecord eval_record_from_json(const nlohmann::json& j) {
  EvalRecord r;
  try {
    r.chunk_id = j.at("chunk_id").get<std::string>();
    r.language = parse_language(j.at("language").get<std::string>());
    r.target_level = j.at("target_level").get<std::string>();
    r.system = j.at("system").get<std::string>();
    r.coverage = opt_number(j, "coverage");
    r.semantic = opt_number(j, "semantic");
    r.coherence = opt_number(j, "coherence");
    r.level_shares = j.value("level_shares", std::vector<double>{});
    r.flags = j.value("flags", std::vector<std::string>{});
    r.diagnostics = j.value("diagnostics", std::string());
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed evaluation record: ") + e.what());
  }
  return r;
}

void write_records_jsonl(std::ostream& out, const std::vector<EvalRecord>& records) {
  for (const auto& r : records) out << to_json(r).dump() << '\n';
}

std::vector<EvalRecord> read_records_jsonl(std::istream& in) {
  return read_jsonl<EvalRecord>(in, "records", eval_record_from_json);
}

namespace {

EvalRecord evaluate_one(const Generation& g, const ResourceBundle& resources,
                        const BackendSuite& suite, const EvalOptions& options) {
  EvalRecord r;
  r.chunk_id = g.chunk_id;
  r.language = g.language;
  r.target_level = g.target_level;
  r.system = g.system;
  auto fail = [&](const char* flag, const std::string& why) {
    r.flags.push_back(flag);
    if (!r.diagnostics.empty()) r.diagnostics += "; ";
    r.diagnostics += why;
    if (options.strict) {
      throw Error("record " + g.chunk_id + " (" + g.system + "): " + why);
    }
  };
  if (g.failed) {
    // Excluded from every aggregate; not a metric failure, so strict mode
    // still proceeds.
    r.flags.push_back(record_flags::generation_failed);
    r.diagnostics = g.error;
    return r;
  }
  const auto& res = resources.at(g.language);
  int target = res.lexicon.scale().ordinal(g.target_level);

  auto analyzed = analyze(g.candidate, res, *suite.morph);
  auto cov = coverage_score(analyzed, target);
  r.coverage = cov.score;
  if (cov.degenerate) r.flags.push_back(record_flags::coverage_degenerate);
  r.level_shares = level_shares(analyzed, res.lexicon.scale().size());

  if (g.system == kReferenceSystem) return r;

  try {
    auto sem = semantic_reward_detail(g.original, g.candidate, g.language, *suite.morph,
                                      *suite.similarity, *suite.entailment, options.max_span);
    if (sem.nli_failed) {
      fail(record_flags::nli_pair_failed, "entailment failed: " + sem.diagnostics().dump());
    } else {
      r.semantic = sem.reward;
    }
  } catch (const Error& e) {
    if (options.strict && r.has_flag(record_flags::nli_pair_failed)) throw;
    fail(record_flags::semantic_failed, std::string("semantic: ") + e.what());
  }

  const auto& ja = *suite.judges.front();
  const auto& jb = suite.judges.size() > 1 ? *suite.judges[1] : ja;
  try {
    r.coherence = eval_coherence(g.original, g.candidate, g.language, ja, jb, options.judge);
  } catch (const Error& e) {
    fail(record_flags::coherence_failed, std::string("coherence: ") + e.what());
  }
  return r;
}

}  // namespace

std::vector<EvalRecord> evaluate(const std::vector<Generation>& generations,
                                 const ResourceBundle& resources, const BackendSuite& suite,
                                 const EvalOptions& options) {
  if (suite.judges.empty()) throw PreconditionError("evaluation needs at least one judge");
  std::vector<EvalRecord> out(generations.size());
  parallel_for(generations.size(), options.jobs, [&](std::size_t i) {
    out[i] = evaluate_one(generations[i], resources, suite, options);
  });
  return out;
}

// --- aggregation -----------------------------------------------------------

namespace {

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;
};

MeanStd mean_std(const std::vector<double>& xs) {
  MeanStd m;
  if (xs.empty()) return m;
  double sum = 0.0;
  for (double x : xs) sum += x;
  m.mean = sum / double(xs.size());
  double ss = 0.0;
  for (double x : xs) ss += (x - m.mean) * (x - m.mean);
  m.std = std::sqrt(ss / double(xs.size()));
  return m;
}

const std::optional<double>& metric_of(const EvalRecord& r, const std::string& metric) {
  if (metric == "coverage") return r.coverage;
  if (metric == "semantic") return r.semantic;
  return r.coherence;
}

}  // namespace

std::vector<AggregateRow> aggregate(const std::vector<EvalRecord>& records) {
  std::map<std::pair<Language, std::string>, std::vector<const EvalRecord*>> groups;
  for (const auto& r : records) groups[{r.language, r.system}].push_back(&r);

  std::vector<AggregateRow> rows;
  for (const auto& [key, recs] : groups) {
    const auto& scale = LevelScale::for_language(key.first);
    bool reference = key.second == kReferenceSystem;
    for (const auto& metric : kMetrics) {
      if (reference && metric != "coverage") continue;
      std::vector<double> total, easy;
      std::size_t failed = 0;
      for (const auto* r : recs) {
        const auto& v = metric_of(*r, metric);
        if (!v) {
          ++failed;
          continue;
        }
        total.push_back(*v);
        if (scale.ordinal(r->target_level) < 2) easy.push_back(*v);
      }
      AggregateRow row;
      row.language = key.first;
      row.system = key.second;
      row.metric = metric;
      auto t = mean_std(total);
      row.total_mean = t.mean;
      row.total_std = t.std;
      row.total_n = total.size();
      if (!easy.empty()) {
        auto e = mean_std(easy);
        row.easy_mean = e.mean;
        row.easy_std = e.std;
      }
      row.easy_n = easy.size();
      row.failed = failed;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

namespace {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        out.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        out.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.emplace_back();
    } else {
      out.back() += c;
    }
  }
  return out;
}

const char* kCsvHeader =
    "language,system,metric,total_mean,total_std,total_n,easy_mean,easy_std,easy_n,failed";

}  // namespace

std::string aggregate_csv(const std::vector<AggregateRow>& rows) {
  std::ostringstream out;
  out << kCsvHeader << '\n';
  for (const auto& r : rows) {
    out << language_code(r.language) << ',' << csv_field(r.system) << ',' << r.metric << ','
        << fmt17(r.total_mean) << ',' << fmt17(r.total_std) << ',' << r.total_n << ','
        << (r.easy_mean ? fmt17(*r.easy_mean) : "") << ','
        << (r.easy_std ? fmt17(*r.easy_std) : "") << ',' << r.easy_n << ',' << r.failed << '\n';
  }
  return out.str();
}

std::vector<AggregateRow> parse_aggregate_csv(std::string_view csv) {
  std::vector<AggregateRow> rows;
  std::istringstream in{std::string(csv)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (lineno == 1) {
      if (line != kCsvHeader) throw ParseError("aggregate csv", 1, "unexpected header");
      continue;
    }
    if (line.empty()) continue;
    auto f = split_csv_line(line);
    if (f.size() != 10) throw ParseError("aggregate csv", lineno, "expected 10 fields");
    try {
      AggregateRow r;
      r.language = parse_language(f[0]);
      r.system = f[1];
      r.metric = f[2];
      r.total_mean = std::stod(f[3]);
      r.total_std = std::stod(f[4]);
      r.total_n = std::stoul(f[5]);
      if (!f[6].empty()) r.easy_mean = std::stod(f[6]);
      if (!f[7].empty()) r.easy_std = std::stod(f[7]);
      r.easy_n = std::stoul(f[8]);
      r.failed = std::stoul(f[9]);
      rows.push_back(std::move(r));
    } catch (const std::logic_error& e) {
      throw ParseError("aggregate csv", lineno, e.what());
    }
  }
  return rows;
}

// --- plots -----------------------------------------------------------------

std::vector<ShareBar> level_share_bars(const std::vector<EvalRecord>& records, Language lang) {
  const auto& scale = LevelScale::for_language(lang);
  std::map<std::pair<std::string, int>, ShareBar> bars;
  for (const auto& r : records) {
    if (r.language != lang || r.level_shares.empty()) continue;
    if (r.level_shares.size() != scale.size() + 1) {
      throw Error("record " + r.chunk_id + " has level shares for a different scale");
    }
    double sum = 0.0;
    for (double s : r.level_shares) sum += s;
    if (sum == 0.0) continue;  // no content lemmas
    int ord = scale.ordinal(r.target_level);
    auto& bar = bars[{r.system, ord}];
    if (bar.shares.empty()) {
      bar.system = r.system;
      bar.target_level = scale.label(ord);
      bar.shares.assign(scale.size() + 1, 0.0);
    }
    for (std::size_t i = 0; i < r.level_shares.size(); ++i) bar.shares[i] += r.level_shares[i];
    ++bar.records;
  }
  std::vector<ShareBar> out;
  for (auto& [key, bar] : bars) {
    for (auto& s : bar.shares) s /= double(bar.records);
    out.push_back(std::move(bar));
  }
  return out;
}

namespace {

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Light-to-dark blues for easy-to-hard levels, gray for unknown words.
std::string level_color(std::size_t i, std::size_t levels) {
  if (i == levels) return "#9e9e9e";
  int shade = 225 - static_cast<int>(170 * i / std::max<std::size_t>(1, levels - 1));
  char buf[16];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", shade / 3, shade / 2 + 40, 235);
  return buf;
}

}  // namespace

std::string render_share_svg(const std::vector<ShareBar>& bars, const LevelScale& scale,
                             Language lang) {
  const double bar_w = 18, gap = 6, group_gap = 20, plot_h = 240, top = 40, left = 50;
  std::vector<std::string> systems;
  for (const auto& b : bars) {
    if (std::find(systems.begin(), systems.end(), b.system) == systems.end()) {
      systems.push_back(b.system);
    }
  }
  double group_w = double(systems.size()) * (bar_w + gap) + group_gap;
  double width = left + double(scale.size()) * group_w + 160;
  double height = top + plot_h + 60;
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\">\n";
  svg << "<text x=\"" << left << "\" y=\"20\" font-family=\"sans-serif\" font-size=\"14\">"
      << xml_escape(language_name(lang)) << ": content words by lexicon level</text>\n";
  svg << "<line x1=\"" << left << "\" y1=\"" << top + plot_h << "\" x2=\""
      << left + double(scale.size()) * group_w << "\" y2=\"" << top + plot_h
      << "\" stroke=\"black\"/>\n";
  for (std::size_t t = 0; t < scale.size(); ++t) {
    double gx = left + double(t) * group_w;
    svg << "<text x=\"" << gx << "\" y=\"" << top + plot_h + 18
        << "\" font-family=\"sans-serif\" font-size=\"11\">" << xml_escape(scale.label(int(t)))
        << "</text>\n";
    for (std::size_t si = 0; si < systems.size(); ++si) {
      auto it = std::find_if(bars.begin(), bars.end(), [&](const ShareBar& b) {
        return b.system == systems[si] && b.target_level == scale.label(int(t));
      });
      if (it == bars.end()) continue;
      double x = gx + double(si) * (bar_w + gap);
      double y = top + plot_h;
      for (std::size_t i = 0; i < it->shares.size(); ++i) {
        double h = it->shares[i] * plot_h;
        y -= h;
        svg << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << bar_w << "\" height=\""
            << h << "\" fill=\"" << level_color(i, scale.size()) << "\" data-system=\""
            << xml_escape(it->system) << "\" data-target=\"" << xml_escape(it->target_level)
            << "\" data-level=\""
            << (i == scale.size() ? std::string("UNKNOWN") : xml_escape(scale.label(int(i))))
            << "\" data-share=\"" << fmt17(it->shares[i]) << "\"/>\n";
      }
    }
  }
  // Legend: systems in bar order, then the level colors.
  double lx = left + double(scale.size()) * group_w + 10;
  double ly = top;
  for (std::size_t si = 0; si < systems.size(); ++si, ly += 16) {
    svg << "<text x=\"" << lx << "\" y=\"" << ly << "\" font-family=\"sans-serif\" font-size=\"11\">"
        << si + 1 << ". " << xml_escape(systems[si]) << "</text>\n";
  }
  ly += 8;
  for (std::size_t i = 0; i <= scale.size(); ++i, ly += 16) {
    svg << "<rect x=\"" << lx << "\" y=\"" << ly - 10 << "\" width=\"10\" height=\"10\" fill=\""
        << level_color(i, scale.size()) << "\"/>";
    svg << "<text x=\"" << lx + 14 << "\" y=\"" << ly
        << "\" font-family=\"sans-serif\" font-size=\"11\">"
        << (i == scale.size() ? std::string("unknown") : xml_escape(scale.label(int(i))))
        << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

std::vector<std::filesystem::path> report(const std::vector<AggregateRow>& rows,
                                          const std::vector<EvalRecord>& records,
                                          const std::filesystem::path& out_dir, bool plots) {
  if (rows.empty()) throw PreconditionError("nothing to report");
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw Error("cannot create " + out_dir.string() + ": " + ec.message());
  std::vector<std::filesystem::path> written;
  auto write = [&](const std::filesystem::path& p, const std::string& content) {
    std::ofstream f(p, std::ios::binary);
    if (!f || !(f << content) || !f.flush()) throw Error("cannot write " + p.string());
    written.push_back(p);
  };
  for (const auto& metric : kMetrics) {
    std::vector<AggregateRow> subset;
    for (const auto& r : rows) {
      if (r.metric == metric) subset.push_back(r);
    }
    write(out_dir / ("aggregate_" + metric + ".csv"), aggregate_csv(subset));
  }
  if (plots && !records.empty()) {
    for (Language lang : kAllLanguages) {
      auto bars = level_share_bars(records, lang);
      if (bars.empty()) continue;
      write(out_dir / ("coverage_levels_" + std::string(language_code(lang)) + ".svg"),
            render_share_svg(bars, LevelScale::for_language(lang), lang));
    }
  }
  return written;
}

}  // namespace leveltext
