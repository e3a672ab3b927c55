// Copyright 2026 The digits-toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <atomic>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "digits/audio.hpp"
#include "digits/constrained.hpp"
#include "digits/curation.hpp"
#include "digits/errors.hpp"
#include "digits/eval.hpp"
#include "digits/grammar.hpp"
#include "digits/netspec.hpp"
#include "digits/textnorm.hpp"

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw digits::Error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int thread_cap() {
  if (const char* env = std::getenv("DIGITS_TOOLKIT_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

std::string format_rtf_line(const digits::RtfReport& report) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "RTF %.6g T %g D %g", report.rtf(),
                report.transcribe_seconds, report.audio_seconds);
  std::string line = buf;
  if (report.at_or_above_realtime()) line += " AT_OR_ABOVE_REALTIME";
  return line;
}

digits::ParsePolicy make_policy(int expected_length) {
  digits::ParsePolicy policy;
  if (expected_length > 0) policy.expected_length = expected_length;
  return policy;
}

// ---- subcommand bodies ----

int run_verbalize(const std::string& digits_arg, bool vocab) {
  if (vocab) {
    for (digits::Token t : digits::vocab_table_order()) {
      std::cout << digits::surface(t) << '\n';
    }
    return 0;
  }
  if (!digits::is_valid_digit_string(digits_arg)) {
    throw digits::Error("expected 1-5 decimal digits, got \"" + digits_arg +
                        "\"");
  }
  for (const digits::TokenSeq& seq : digits::verbalizations(digits_arg)) {
    std::cout << digits::to_text(seq) << '\n';
  }
  return 0;
}

int run_parse(const std::string& text, int expected_length) {
  digits::TokenSeq tokens = digits::tokenize(text);
  for (const std::string& d :
       digits::parse(tokens, make_policy(expected_length))) {
    std::cout << d << '\n';
  }
  return 0;
}

struct ScoreInputs {
  std::vector<digits::ScoredUtterance> utterances;
};

ScoreInputs load_score_inputs(const std::vector<std::string>& files) {
  ScoreInputs inputs;
  if (files.size() == 1) {
    inputs.utterances = digits::parse_scoring_lines(read_file(files[0]));
    return inputs;
  }
  // Two-file form: utt_id<TAB>reference plus utt_id<TAB>hypothesis, joined
  // on utt_id. A reference with no hypothesis line scores as blank output.
  std::map<std::string, digits::WordList> hyps;
  std::istringstream hin(read_file(files[1]));
  std::string line;
  while (std::getline(hin, line)) {
    if (line.empty()) continue;
    std::size_t tab = line.find('\t');
    std::string id = tab == std::string::npos ? line : line.substr(0, tab);
    std::string text = tab == std::string::npos ? "" : line.substr(tab + 1);
    hyps[id] = digits::normalize_words(text);
  }
  std::istringstream rin(read_file(files[0]));
  while (std::getline(rin, line)) {
    if (line.empty()) continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) {
      throw digits::Error("reference line needs utt_id<TAB>text: \"" + line +
                          "\"");
    }
    digits::ScoredUtterance utt;
    utt.utt_id = line.substr(0, tab);
    utt.ref = digits::normalize_words(line.substr(tab + 1));
    auto it = hyps.find(utt.utt_id);
    if (it != hyps.end()) utt.hyp = it->second;
    inputs.utterances.push_back(std::move(utt));
  }
  return inputs;
}

int run_score(const std::vector<std::string>& files, bool no_buckets,
              bool as_json) {
  ScoreInputs inputs = load_score_inputs(files);
  std::vector<digits::WerReport> reports;
  std::vector<digits::CategorizedRecord> records;
  for (const digits::ScoredUtterance& utt : inputs.utterances) {
    reports.push_back(digits::wer(digits::align(utt.ref, utt.hyp)));
    if (!no_buckets) {
      digits::CategorizedRecord record;
      record.hyp = utt.hyp;
      for (const std::string& word : utt.ref) {
        auto token = digits::token_from_surface(word);
        if (!token) {
          throw digits::UnparseableReference(
              "reference word \"" + word + "\" in " + utt.utt_id +
              " is out of vocabulary (use --no-buckets for plain WER)");
        }
        record.ref.push_back(*token);
      }
      records.push_back(std::move(record));
    }
  }
  digits::WerReport total = digits::corpus_wer(reports);
  std::array<digits::ErrorBucket, 3> buckets{};
  if (!no_buckets) buckets = digits::categorize_errors(records);

  if (as_json) {
    json out;
    out["wer"] = total.wer();
    out["wer_percent"] = total.percent();
    out["substitutions"] = total.substitutions;
    out["deletions"] = total.deletions;
    out["insertions"] = total.insertions;
    out["ref_words"] = total.ref_words;
    out["utterances"] = inputs.utterances.size();
    if (!no_buckets) {
      json jb = json::array();
      for (const digits::ErrorBucket& b : buckets) {
        jb.push_back({{"category", digits::bucket_name(b.category)},
                      {"exact_match", b.exact_match},
                      {"substitution_error", b.substitution_error},
                      {"blank_output", b.blank_output},
                      {"other", b.other}});
      }
      out["buckets"] = jb;
    }
    std::cout << out.dump(2) << '\n';
    return 0;
  }
  std::cout << digits::format_wer_line(total) << '\n';
  if (!no_buckets) {
    for (const digits::ErrorBucket& b : buckets) {
      std::cout << digits::format_bucket_line(b) << '\n';
    }
  }
  return 0;
}

int run_rtf(const std::vector<std::string>& args, const std::string& timing,
            bool as_json) {
  if (!timing.empty()) {
    std::vector<digits::TimingRecord> records =
        digits::parse_timing_lines(read_file(timing));
    double total_t = 0.0, total_d = 0.0;
    json per_utt = json::array();
    for (const digits::TimingRecord& r : records) {
      digits::RtfReport report =
          digits::rtf(r.transcribe_seconds, r.audio_seconds);
      total_t += r.transcribe_seconds;
      total_d += r.audio_seconds;
      if (as_json) {
        per_utt.push_back({{"utt_id", r.utt_id}, {"rtf", report.rtf()}});
      } else {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.6g", report.rtf());
        std::cout << r.utt_id << '\t' << buf << '\n';
      }
    }
    digits::RtfReport overall = digits::rtf(total_t, total_d);
    if (as_json) {
      json out{{"rtf", overall.rtf()},
               {"transcribe_seconds", total_t},
               {"audio_seconds", total_d},
               {"utterances", per_utt}};
      std::cout << out.dump(2) << '\n';
    } else {
      std::cout << format_rtf_line(overall) << '\n';
    }
    return 0;
  }
  if (args.size() != 2) {
    throw digits::Error("rtf needs <transcribe-seconds> <audio-seconds> or "
                        "--timing FILE");
  }
  digits::RtfReport report =
      digits::rtf(std::stod(args[0]), std::stod(args[1]));
  if (as_json) {
    json out{{"rtf", report.rtf()},
             {"transcribe_seconds", report.transcribe_seconds},
             {"audio_seconds", report.audio_seconds},
             {"at_or_above_realtime", report.at_or_above_realtime()}};
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << format_rtf_line(report) << '\n';
  }
  return 0;
}

int run_snap(int max_distance, int expected_length, bool as_json) {
  digits::ParsePolicy policy = make_policy(expected_length);
  std::string line;
  while (std::getline(std::cin, line)) {
    if (line.empty()) continue;
    std::size_t tab = line.find('\t');
    std::string id = tab == std::string::npos ? line : line.substr(0, tab);
    std::string text = tab == std::string::npos ? "" : line.substr(tab + 1);
    digits::ConstrainedResult result = digits::constrained_transcript(
        digits::normalize_words(text), max_distance, policy);
    std::string top = result.digit_candidates.empty()
                          ? std::string()
                          : result.digit_candidates.front();
    if (as_json) {
      json dropped = json::array();
      for (const digits::DroppedWord& d : result.dropped) {
        dropped.push_back({{"word", d.word}, {"reason", d.reason}});
      }
      json out{{"utt_id", id},
               {"digits", top},
               {"candidates", result.digit_candidates},
               {"snapped", digits::to_text(result.snapped)},
               {"total_distance", result.total_distance},
               {"dropped", dropped}};
      std::cout << out.dump() << '\n';
    } else {
      std::cout << id << '\t' << top << '\t' << result.total_distance << '\n';
    }
  }
  return 0;
}

int run_netspec(const std::string& name, const std::string& from_file,
                bool params) {
  digits::NetworkSpec spec;
  if (!from_file.empty()) {
    spec = digits::parse_config(read_file(from_file));
  } else if (!name.empty()) {
    spec = digits::build_network(name);
  } else {
    throw digits::Error("netspec needs a network name or --from FILE");
  }
  if (params) {
    std::cout << "network " << spec.name << " params "
              << digits::param_count(spec) << '\n';
    std::cout << "# convention: " << digits::param_count_convention() << '\n';
  } else {
    std::cout << digits::emit_config(spec);
  }
  return 0;
}

int run_split(const std::string& data_dir, const std::string& out_dir,
              double ratio, std::uint64_t seed, bool per_speaker) {
  digits::Manifest manifest = digits::read_data_dir(data_dir);
  // Re-anchor wav paths so the split metadata still points at the audio.
  for (digits::ManifestEntry& e : manifest.entries) {
    std::filesystem::path p(e.wav_path);
    if (p.is_relative()) {
      e.wav_path = (std::filesystem::path(data_dir) / p).lexically_normal()
                       .string();
    }
  }
  auto [train, test] =
      per_speaker ? digits::split_train_test_by_speaker(manifest, ratio, seed)
                  : digits::split_train_test(manifest, ratio, seed);
  digits::write_manifest(train, std::filesystem::path(out_dir) / "train");
  digits::write_manifest(test, std::filesystem::path(out_dir) / "test");
  std::cout << "train " << train.entries.size() << " test "
            << test.entries.size() << '\n';
  return 0;
}

struct CurateJob {
  std::string wav_path;
  std::string stamps_path;
  digits::AudioBuffer audio;
  std::vector<digits::ClipSpec> clips;
};

int run_curate(const std::vector<std::string>& pair_args,
               const std::string& out_dir, double max_gap,
               double boundary_pad, double lead, double trail, double ratio,
               std::uint64_t seed) {
  if (pair_args.empty() || pair_args.size() % 2 != 0) {
    throw digits::Error(
        "curate needs alternating <audio.wav> <stamps.json> arguments");
  }
  std::vector<CurateJob> jobs;
  for (std::size_t i = 0; i < pair_args.size(); i += 2) {
    jobs.push_back({pair_args[i], pair_args[i + 1], {}, {}});
  }

  // Documents are independent; read and segment them in parallel.
  const int workers =
      std::min<int>(thread_cap(), static_cast<int>(jobs.size()));
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::vector<std::string> failures(jobs.size());
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < jobs.size();
         i = next.fetch_add(1)) {
      try {
        CurateJob& job = jobs[i];
        job.audio = digits::read_wav(job.wav_path);
        digits::TranscriptDoc doc = digits::load_word_stamps(
            read_file(job.stamps_path), job.wav_path);
        job.clips = digits::extract_number_runs(doc, max_gap);
      } catch (const std::exception& e) {
        failures[i] = e.what();
      }
    }
  };
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  for (const std::string& f : failures) {
    if (!f.empty()) throw digits::Error(f);
  }

  std::map<std::string, digits::AudioBuffer> store;
  std::vector<digits::ClipSpec> clips;
  for (CurateJob& job : jobs) {
    store[job.wav_path] = std::move(job.audio);
    clips.insert(clips.end(), job.clips.begin(), job.clips.end());
  }

  digits::EmitOptions options;
  options.boundary_pad = boundary_pad;
  options.lead = lead;
  options.trail = trail;
  digits::Manifest manifest =
      digits::emit_corpus(clips, store, out_dir, options);

  if (ratio > 0.0) {
    auto [train, test] = digits::split_train_test(manifest, ratio, seed);
    for (digits::Manifest* m : {&train, &test}) {
      for (digits::ManifestEntry& e : m->entries) e.wav_path = "../" + e.wav_path;
    }
    digits::write_manifest(train, std::filesystem::path(out_dir) / "train");
    digits::write_manifest(test, std::filesystem::path(out_dir) / "test");
    std::cout << "clips " << manifest.entries.size() << " train "
              << train.entries.size() << " test " << test.entries.size()
              << '\n';
  } else {
    std::cout << "clips " << manifest.entries.size() << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spoken multi-digit curation, grammar, and scoring toolkit"};
  app.require_subcommand(1);
  std::function<int()> action;

  // verbalize
  std::string verbalize_digits;
  bool export_vocab = false;
  auto* verbalize =
      app.add_subcommand("verbalize", "enumerate readings of a digit string");
  verbalize->add_option("digits", verbalize_digits, "1-5 decimal digits");
  verbalize->add_flag("--vocab", export_vocab,
                      "print the 33-token vocabulary and exit");
  verbalize->callback([&] {
    action = [&] { return run_verbalize(verbalize_digits, export_vocab); };
  });

  // parse
  std::string parse_text;
  int parse_expected = 0;
  auto* parse_cmd =
      app.add_subcommand("parse", "map a spoken-number phrase to digits");
  parse_cmd->add_option("text", parse_text, "e.g. \"six fifty three\"")
      ->required();
  parse_cmd->add_option("--expected-length", parse_expected,
                        "keep only candidates of this length (1-5)");
  parse_cmd->callback([&] {
    action = [&] { return run_parse(parse_text, parse_expected); };
  });

  // score
  std::vector<std::string> score_files;
  bool score_no_buckets = false, score_json = false;
  auto* score = app.add_subcommand(
      "score", "word error rate and error categories from TSV records");
  score
      ->add_option("files", score_files,
                   "combined utt<TAB>ref<TAB>hyp file, or refs.tsv hyps.tsv")
      ->expected(1, 2)
      ->required();
  score->add_flag("--no-buckets", score_no_buckets,
                  "skip the per-category breakdown");
  score->add_flag("--json", score_json, "machine-readable summary");
  score->callback([&] {
    action = [&] {
      return run_score(score_files, score_no_buckets, score_json);
    };
  });

  // rtf
  std::vector<std::string> rtf_args;
  std::string rtf_timing;
  bool rtf_json = false;
  auto* rtf_cmd =
      app.add_subcommand("rtf", "real-time factor from timings");
  rtf_cmd->add_option("seconds", rtf_args,
                      "<transcribe-seconds> <audio-seconds>")
      ->expected(0, 2);
  rtf_cmd->add_option("--timing", rtf_timing,
                      "utt<TAB>transcribe<TAB>audio TSV file");
  rtf_cmd->add_flag("--json", rtf_json, "machine-readable summary");
  rtf_cmd->callback([&] {
    action = [&] { return run_rtf(rtf_args, rtf_timing, rtf_json); };
  });

  // snap
  int snap_distance = 1, snap_expected = 0;
  bool snap_json = false;
  auto* snap = app.add_subcommand(
      "snap", "constrain hypothesis lines on stdin to the vocabulary");
  snap->add_option("--max-distance", snap_distance,
                   "largest edit distance to accept");
  snap->add_option("--expected-length", snap_expected,
                   "keep only digit candidates of this length");
  snap->add_flag("--json", snap_json, "JSON lines output");
  snap->callback([&] {
    action = [&] { return run_snap(snap_distance, snap_expected, snap_json); };
  });

  // netspec
  std::string netspec_name, netspec_from;
  bool netspec_params = false;
  auto* netspec =
      app.add_subcommand("netspec", "emit a network descriptor config");
  netspec->add_option("name", netspec_name, "dense or light");
  netspec->add_option("--from", netspec_from,
                      "re-emit an existing config file");
  netspec->add_flag("--params", netspec_params,
                    "print the parameter-count estimate instead");
  netspec->callback([&] {
    action = [&] {
      return run_netspec(netspec_name, netspec_from, netspec_params);
    };
  });

  // split
  std::string split_dir, split_out;
  double split_ratio = 0.9;
  std::uint64_t split_seed = 0;
  bool split_per_speaker = false;
  auto* split =
      app.add_subcommand("split", "partition a data directory into train/test");
  split->add_option("datadir", split_dir, "directory with wav.scp/text/utt2spk")
      ->required();
  split->add_option("--out", split_out, "output directory")->required();
  split->add_option("--ratio", split_ratio, "train fraction (default 0.9)");
  split->add_option("--seed", split_seed, "shuffle seed");
  split->add_flag("--per-speaker", split_per_speaker,
                  "apply the ratio within each speaker group");
  split->callback([&] {
    action = [&] {
      return run_split(split_dir, split_out, split_ratio, split_seed,
                       split_per_speaker);
    };
  });

  // curate
  std::vector<std::string> curate_pairs;
  std::string curate_out;
  double curate_max_gap = -1.0, curate_pad = 0.0, curate_lead = 1.0,
         curate_trail = 1.0, curate_ratio = 0.0;
  std::uint64_t curate_seed = 0;
  auto* curate = app.add_subcommand(
      "curate", "cut digit runs from audio + timestamp documents");
  curate->add_option("pairs", curate_pairs,
                     "alternating <audio.wav> <stamps.json>");
  curate->add_option("--out", curate_out, "output data directory")->required();
  curate->add_option("--max-gap", curate_max_gap,
                     "largest inter-word gap to merge, seconds (<0 = "
                     "unbounded)");
  curate->add_option("--boundary-pad", curate_pad,
                     "widen each clip by this many seconds per side");
  curate->add_option("--lead", curate_lead, "leading silence, seconds");
  curate->add_option("--trail", curate_trail, "trailing silence, seconds");
  curate->add_option("--ratio", curate_ratio,
                     "also split train/test at this fraction");
  curate->add_option("--seed", curate_seed, "split shuffle seed");
  curate->callback([&] {
    action = [&] {
      double gap = curate_max_gap < 0.0
                       ? std::numeric_limits<double>::infinity()
                       : curate_max_gap;
      return run_curate(curate_pairs, curate_out, gap, curate_pad,
                        curate_lead, curate_trail, curate_ratio, curate_seed);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return action ? action() : 2;
  } catch (const digits::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << '\n';
    return 1;
  }
}
