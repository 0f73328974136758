// cli.cc --- train / tag / eval / cv / inspect subcommands.

#include "hmmtag/cli.h"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "hmmtag/corpus.h"
#include "hmmtag/decoder.h"
#include "hmmtag/error.h"
#include "hmmtag/eval.h"
#include "hmmtag/model.h"
#include "hmmtag/report.h"

namespace hmmtag {

namespace {

// Raised for flag combinations CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised with a ready-made diagnostic and exit code.
struct Failure {
  int code;
  std::string message;
};

struct LookupFlags {
  std::optional<std::string> smoothing;
  std::optional<double> k;
  std::optional<std::string> scope;
  std::optional<std::string> unknown;

  void Register(CLI::App *cmd, bool allow_plain_k) {
    cmd->add_option("--smoothing", smoothing, "none | add-k")
        ->check(CLI::IsMember({"none", "add-k", "add_k"}));
    cmd->add_option(allow_plain_k ? "--smoothing-k,--k" : "--smoothing-k", k,
                    "add-k constant (> 0)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--smooth", scope, "what add-k applies to")
        ->check(CLI::IsMember({"both", "transitions", "emissions"}));
    cmd->add_option("--unknown", unknown, "fail | uniform | open-class")
        ->check(CLI::IsMember({"fail", "uniform", "open-class", "open_class"}));
  }

  void Validate() const {
    if ((k || scope) && smoothing && ParseSmoothingKind(*smoothing) == SmoothingKind::kNone) {
      throw UsageError("--k/--smooth need --smoothing add-k");
    }
  }

  ModelOptions Apply(ModelOptions options) const {
    if (smoothing) options.smoothing.kind = ParseSmoothingKind(*smoothing);
    if (k) options.smoothing.k = *k;
    if (scope) {
      options.smoothing.transitions = *scope != "emissions";
      options.smoothing.emissions = *scope != "transitions";
    }
    if (unknown) options.unknown = ParseUnknownPolicy(*unknown);
    return options;
  }
};

struct TagSetFlags {
  std::string file;
  bool sinhala = false;
  bool strict = false;

  void Register(CLI::App *cmd) {
    auto *f = cmd->add_option("--tagset", file, "tag-set definition file");
    auto *s = cmd->add_flag("--sinhala", sinhala, "start from the 26-tag Sinhala set");
    f->excludes(s);
    cmd->add_flag("--strict", strict, "reject tags outside the tag set");
  }

  void Validate() const {
    if (strict && file.empty() && !sinhala) {
      throw UsageError("--strict needs --tagset or --sinhala");
    }
  }

  TagSet Load() const {
    TagSetMode mode = strict ? TagSetMode::kStrict : TagSetMode::kOpen;
    if (sinhala) {
      TagSet ts = DefaultSinhalaTagSet();
      ts.set_mode(mode);
      return ts;
    }
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw Failure{kExitData, file + ": cannot open tag-set file"};
      try {
        return TagSet::FromStream(in, mode);
      } catch (const Error &e) {
        throw Failure{kExitData, file + ": " + e.what()};
      }
    }
    return TagSet(mode);
  }
};

Corpus ReadCorpus(const std::string &path, TagSet &ts, bool fail_fast) {
  std::ifstream in(path);
  if (!in) throw Failure{kExitData, path + ": cannot open corpus"};
  ParseOptions opts;
  if (fail_fast) opts.policy = ErrorPolicy::kFailFast;
  try {
    return ParseTaggedCorpus(in, ts, opts);
  } catch (const CorpusError &e) {
    std::ostringstream msg;
    for (size_t i = 0; i < e.diagnostics().size(); ++i) {
      const auto &d = e.diagnostics()[i];
      if (i) msg << '\n';
      msg << path << ":" << d.line << ": token " << d.token << ": "
          << ErrorCodeName(d.code) << ": " << d.message;
    }
    throw Failure{kExitData, msg.str()};
  } catch (const Error &e) {
    throw Failure{kExitData, path + ": " + e.what()};
  }
}

HmmModel ReadModel(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kExitData, path + ": cannot open model"};
  try {
    return LoadModel(in);
  } catch (const Error &e) {
    throw Failure{kExitData, path + ": " + e.what()};
  }
}

bool ColorEnabled() {
  const char *v = std::getenv("HMMTAG_COLOR");
  return v && std::string_view(v) == "1";
}

std::string JoinTokens(const Sentence &s) {
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ' ';
    out += s.tokens[i];
  }
  return out;
}

}  // namespace

int RunCli(const std::vector<std::string> &args, std::istream &in,
           std::ostream &out, std::ostream &err) {
  CLI::App app{"HMM part-of-speech tagger", "hmmtag"};
  app.require_subcommand(1);

  // train
  auto *train = app.add_subcommand("train", "train a model from a tagged corpus");
  std::string train_corpus, train_model;
  int order = 3;
  bool eos = false, fail_fast = false;
  LookupFlags train_lookup;
  TagSetFlags train_tags;
  train->add_option("--corpus", train_corpus, "tagged corpus")->required();
  train->add_option("--model", train_model, "output model file")->required();
  train->add_option("--order", order, "tag n-gram order")->check(CLI::IsMember({2, 3}));
  train->add_flag("--eos", eos, "model an end-of-sentence transition");
  train->add_flag("--fail-fast", fail_fast, "stop at the first corpus error");
  train_lookup.Register(train, true);
  train_tags.Register(train);

  // tag
  auto *tag = app.add_subcommand("tag", "tag raw text, one sentence per line");
  std::string tag_model, tag_input;
  bool open_emissions = false;
  LookupFlags tag_lookup;
  tag->add_option("--model", tag_model, "model file")->required();
  tag->add_option("--input", tag_input, "raw text file (default stdin)");
  tag->add_flag("--open-emissions", open_emissions,
                "consider every tag for known words under emission smoothing");
  tag_lookup.Register(tag, true);

  // eval
  auto *eval = app.add_subcommand("eval", "evaluate a model on a tagged corpus");
  std::string eval_model, eval_test;
  bool include_punct = false, eval_json = false, abort_on_failure = false,
       strict_tags = false;
  LookupFlags eval_lookup;
  eval->add_option("--model", eval_model, "model file")->required();
  eval->add_option("--test", eval_test, "tagged test corpus")->required();
  eval->add_flag("--include-punct", include_punct, "score punctuation tokens too");
  eval->add_flag("--json", eval_json, "machine-readable report");
  eval->add_flag("--abort-on-failure", abort_on_failure,
                 "stop at the first sentence that cannot be decoded");
  eval->add_flag("--strict-tags", strict_tags, "reject gold tags unknown to the model");
  eval->add_flag("--open-emissions", open_emissions,
                 "consider every tag for known words under emission smoothing");
  eval_lookup.Register(eval, true);

  // cv
  auto *cv = app.add_subcommand("cv", "k-fold cross-validation");
  std::string cv_corpus;
  int folds = 10;
  uint64_t seed = 42;
  int cv_order = 3;
  bool cv_eos = false, cv_json = false, cv_include_punct = false;
  LookupFlags cv_lookup;
  TagSetFlags cv_tags;
  cv->add_option("--corpus", cv_corpus, "tagged corpus")->required();
  cv->add_option("--k", folds, "number of folds")->check(CLI::Range(2, 1000000));
  cv->add_option("--seed", seed, "shuffle seed");
  cv->add_option("--order", cv_order, "tag n-gram order")->check(CLI::IsMember({2, 3}));
  cv->add_flag("--eos", cv_eos, "model an end-of-sentence transition");
  cv->add_flag("--json", cv_json, "machine-readable report");
  cv->add_flag("--include-punct", cv_include_punct, "score punctuation tokens too");
  cv->add_flag("--open-emissions", open_emissions,
               "consider every tag for known words under emission smoothing");
  cv_lookup.Register(cv, false);
  cv_tags.Register(cv);

  // inspect
  auto *inspect = app.add_subcommand("inspect", "summarize a model file");
  std::string inspect_model;
  bool inspect_json = false;
  inspect->add_option("--model", inspect_model, "model file")->required();
  inspect->add_flag("--json", inspect_json, "machine-readable output");

  std::vector<std::string> argv_store{"hmmtag"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char *> argv;
  for (auto &a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    try {
      if (train->parsed()) {
        train_lookup.Validate();
        train_tags.Validate();
        if (train_lookup.k && !train_lookup.smoothing) {
          throw UsageError("--k needs --smoothing add-k");
        }
        TrainConfig config;
        config.order = order;
        config.model_eos = eos;
        config.options = train_lookup.Apply({});
        TagSet ts = train_tags.Load();
        Corpus corpus = ReadCorpus(train_corpus, ts, fail_fast);
        if (corpus.empty()) {
          throw Failure{kExitData, train_corpus + ": corpus has no sentences"};
        }
        HmmModel model = Train(corpus, ts, config);
        std::ofstream mout(train_model, std::ios::binary);
        if (!mout) throw Failure{kExitData, train_model + ": cannot write model"};
        SaveModel(model, mout);
        auto stats = corpus.Stats();
        err << "trained order-" << order << " model on " << stats.sentence_count
            << " sentences, " << stats.token_count << " tokens -> "
            << train_model << "\n";
        return kExitOk;
      }

      if (tag->parsed()) {
        tag_lookup.Validate();
        HmmModel model = ReadModel(tag_model);
        model = model.WithOptions(tag_lookup.Apply(model.options()));
        std::string text;
        if (tag_input.empty() || tag_input == "-") {
          std::ostringstream buf;
          buf << in.rdbuf();
          text = buf.str();
        } else {
          std::ifstream fin(tag_input, std::ios::binary);
          if (!fin) throw Failure{kExitData, tag_input + ": cannot open input"};
          std::ostringstream buf;
          buf << fin.rdbuf();
          text = buf.str();
        }
        DecodeOptions dopts;
        dopts.open_emissions = open_emissions;
        auto sentences = TokenizeRaw(text);
        for (size_t i = 0; i < sentences.size(); ++i) {
          TagPath path;
          try {
            path = Decode(model, sentences[i], dopts);
          } catch (const Error &e) {
            out.flush();
            std::string hint = e.code() == ErrorCode::kNoPath
                                   ? " (try --smoothing add-k)"
                                   : "";
            throw Failure{kExitDecode, std::string(e.what()) + hint +
                                           " in sentence " + std::to_string(i + 1) +
                                           ": " + JoinTokens(sentences[i])};
          }
          out << RenderTagged(sentences[i], path.tags, model.tagset()) << '\n';
        }
        return kExitOk;
      }

      if (eval->parsed()) {
        eval_lookup.Validate();
        HmmModel model = ReadModel(eval_model);
        model = model.WithOptions(eval_lookup.Apply(model.options()));
        TagSet ts = model.tagset();
        ts.set_mode(strict_tags ? TagSetMode::kStrict : TagSetMode::kOpen);
        Corpus test = ReadCorpus(eval_test, ts, false);
        if (test.empty()) {
          throw Failure{kExitData, eval_test + ": corpus has no sentences"};
        }
        EvalOptions opts;
        opts.exclude_punctuation = !include_punct;
        opts.on_failure = abort_on_failure ? FailurePolicy::kAbort : FailurePolicy::kSkip;
        opts.decode.open_emissions = open_emissions;
        EvalReport report;
        try {
          report = Evaluate(model, test, ts, opts);
        } catch (const Error &e) {
          throw Failure{kExitDecode, eval_test + ": " + e.what()};
        }
        if (report.total == 0) {
          err << "warning: no token could be evaluated\n";
        }
        if (eval_json) {
          out << ToJson(report).dump(2) << '\n';
        } else {
          out << RenderText(report, ColorEnabled());
        }
        return kExitOk;
      }

      if (cv->parsed()) {
        cv_lookup.Validate();
        cv_tags.Validate();
        if (cv_lookup.k && !cv_lookup.smoothing) {
          throw UsageError("--smoothing-k needs --smoothing add-k");
        }
        TrainConfig config;
        config.order = cv_order;
        config.model_eos = cv_eos;
        config.options = cv_lookup.Apply({});
        TagSet ts = cv_tags.Load();
        Corpus corpus = ReadCorpus(cv_corpus, ts, false);
        EvalOptions opts;
        opts.exclude_punctuation = !cv_include_punct;
        opts.decode.open_emissions = open_emissions;
        CvReport report;
        try {
          report = CrossValidate(corpus, ts, folds, seed, config, opts);
        } catch (const Error &e) {
          throw Failure{kExitData, cv_corpus + ": " + e.what()};
        }
        if (cv_json) {
          out << ToJson(report).dump(2) << '\n';
        } else {
          out << RenderText(report, ColorEnabled());
        }
        return kExitOk;
      }

      if (inspect->parsed()) {
        HmmModel model = ReadModel(inspect_model);
        const auto &counts = model.counts();
        uint64_t tokens = 0;
        for (TagId t : model.tags()) tokens += counts.TagCount(t);
        uint64_t sentences = counts.ContextTotal(
            TagTuple::Starts(static_cast<size_t>(model.order() - 1)));
        uint64_t emissions = 0;
        for (const auto &[t, c] : counts.emission_totals()) emissions += c;
        const auto &sm = model.options().smoothing;
        if (inspect_json) {
          nlohmann::json j;
          j["format_version"] = model.format_version();
          j["order"] = model.order();
          j["model_eos"] = counts.model_eos();
          j["sentences"] = sentences;
          j["tokens"] = tokens;
          j["vocabulary_size"] = model.VocabularySize();
          j["smoothing"] = {{"kind", SmoothingKindName(sm.kind)},
                            {"k", sm.k},
                            {"transitions", sm.transitions},
                            {"emissions", sm.emissions}};
          j["unknown"] = UnknownPolicyName(model.options().unknown);
          nlohmann::json tags = nlohmann::json::array();
          for (const auto &t : model.tagset().tags()) {
            tags.push_back({{"symbol", t.symbol},
                            {"open_class", t.open_class},
                            {"count", counts.TagCount(t.index)}});
          }
          j["tags"] = std::move(tags);
          nlohmann::json ngrams = nlohmann::json::object();
          for (int len = 1; len <= model.order(); ++len) {
            ngrams[std::to_string(len)] = counts.Ngrams(static_cast<size_t>(len)).size();
          }
          j["distinct_ngrams"] = std::move(ngrams);
          j["emission_events"] = emissions;
          j["distinct_emissions"] = counts.emissions().size();
          out << j.dump(2) << '\n';
        } else {
          out << "format: HMMTAG " << model.format_version() << "\n"
              << "order: " << model.order() << (counts.model_eos() ? " (with </s>)" : "")
              << "\n"
              << "sentences: " << sentences << "\n"
              << "tokens: " << tokens << "\n"
              << "vocabulary: " << model.VocabularySize() << "\n"
              << "smoothing: " << SmoothingKindName(sm.kind);
          if (sm.kind == SmoothingKind::kAddK) {
            out << " k=" << sm.k << (sm.transitions ? " transitions" : "")
                << (sm.emissions ? " emissions" : "");
          }
          out << "\n"
              << "unknown words: " << UnknownPolicyName(model.options().unknown) << "\n"
              << "tags: " << model.tagset().size() << "\n";
          for (const auto &t : model.tagset().tags()) {
            out << "  " << t.symbol << '\t' << (t.open_class ? "open" : "closed")
                << '\t' << counts.TagCount(t.index) << "\n";
          }
          out << "distinct n-grams:";
          for (int len = 1; len <= model.order(); ++len) {
            out << " " << len << "=" << counts.Ngrams(static_cast<size_t>(len)).size();
          }
          out << "\n"
              << "emission events: " << emissions << " (" << counts.emissions().size()
              << " distinct)\n";
        }
        return kExitOk;
      }
    } catch (const UsageError &e) {
      err << "usage error: " << e.what() << "\n";
      return kExitUsage;
    } catch (const Error &e) {
      // Anything left over is a data problem (bad option values are
      // rejected by CLI11 before we get here).
      throw Failure{e.code() == ErrorCode::kUnknownWord || e.code() == ErrorCode::kNoPath
                        ? kExitDecode
                        : kExitData,
                    e.what()};
    }
  } catch (const Failure &f) {
    err << "error: " << f.message << "\n";
    return f.code;
  }
  return kExitUsage;
}

}  // namespace hmmtag
