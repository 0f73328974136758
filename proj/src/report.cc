// report.cc --- report rendering.

#include "hmmtag/report.h"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace hmmtag {

namespace {

std::string Pct(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f%%", v);
  return buf;
}

// Display width of a UTF-8 string, one column per code point.
size_t Width(std::string_view s) {
  return static_cast<size_t>(std::count_if(s.begin(), s.end(), [](char c) {
    return (static_cast<unsigned char>(c) & 0xc0) != 0x80;
  }));
}

std::string PadLeft(const std::string &s, size_t width) {
  size_t w = Width(s);
  return w >= width ? s : std::string(width - w, ' ') + s;
}

std::string PadRight(const std::string &s, size_t width) {
  size_t w = Width(s);
  return w >= width ? s : s + std::string(width - w, ' ');
}

void RenderSummary(std::ostringstream &os, const EvalReport &r) {
  os << "accuracy: " << Pct(r.accuracy_pct) << " (" << r.correct << "/"
     << r.total << ")\n";
  if (auto known = r.KnownWordAccuracyPct()) {
    os << "known-word accuracy: " << Pct(*known) << " (" << r.known_correct
       << "/" << r.known_total << ")\n";
  }
  if (auto unknown = r.UnknownWordAccuracyPct()) {
    os << "unknown-word accuracy: " << Pct(*unknown) << " ("
       << r.unknown_correct << "/" << r.unknown_total << ")\n";
  }
  if (r.has_vocabulary_split) {
    os << "unknown words: " << r.unknown_word_count << "\n";
  }
  if (r.skipped_sentences) {
    os << "skipped sentences: " << r.skipped_sentences << " ("
       << r.skipped_tokens << " tokens)\n";
  }
}

void RenderMatrix(std::ostringstream &os, const ConfusionMatrix &m,
                  bool color) {
  const auto &labels = m.labels();
  if (labels.empty()) return;
  size_t label_w = 6, cell_w = 3;
  for (const auto &l : labels) {
    label_w = std::max(label_w, Width(l));
    cell_w = std::max(cell_w, Width(l));
  }
  for (size_t i = 0; i < labels.size(); ++i) {
    for (size_t j = 0; j < labels.size(); ++j) {
      cell_w = std::max(cell_w, std::to_string(m.cell(i, j)).size());
    }
  }
  os << "confusion matrix (rows: actual, columns: predicted)\n";
  os << PadRight("", label_w);
  for (const auto &l : labels) os << ' ' << PadLeft(l, cell_w);
  os << '\n';
  for (size_t i = 0; i < labels.size(); ++i) {
    os << PadRight(labels[i], label_w);
    for (size_t j = 0; j < labels.size(); ++j) {
      uint64_t v = m.cell(i, j);
      std::string text = PadLeft(std::to_string(v), cell_w);
      const char *on = nullptr;
      if (color && v > 0) on = i == j ? "\x1b[32m" : "\x1b[31m";
      os << ' ';
      if (on) os << on;
      os << text;
      if (on) os << "\x1b[0m";
    }
    os << '\n';
  }
}

void RenderPerTag(std::ostringstream &os, const EvalReport &r) {
  os << "per tag (correct/actual):\n";
  for (const auto &label : r.matrix.labels()) {
    const auto &s = r.per_tag.at(label);
    if (s.actual_total == 0) continue;
    os << "  " << PadRight(label, 8) << ' ' << s.correct << "/"
       << s.actual_total << '\n';
  }
}

nlohmann::json OptionalPct(std::optional<double> v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

std::string RenderText(const EvalReport &report, bool color) {
  std::ostringstream os;
  RenderSummary(os, report);
  RenderMatrix(os, report.matrix, color);
  RenderPerTag(os, report);
  return os.str();
}

std::string RenderText(const CvReport &cv, bool color) {
  std::ostringstream os;
  os << "cross-validation: k=" << cv.k << " seed=" << cv.seed << "\n";
  for (size_t f = 0; f < cv.fold_reports.size(); ++f) {
    const auto &r = cv.fold_reports[f];
    os << "fold " << f + 1 << ": " << cv.folds[f].size() << " sentences, "
       << "accuracy " << (r.total ? Pct(r.accuracy_pct) : "n/a") << " ("
       << r.correct << "/" << r.total << ")";
    if (r.skipped_sentences) os << ", skipped " << r.skipped_sentences;
    os << '\n';
  }
  os << "macro accuracy: " << Pct(cv.macro_accuracy_pct) << "\n";
  os << "aggregate (micro):\n";
  os << RenderText(cv.aggregate, color);
  return os.str();
}

nlohmann::json ToJson(const EvalReport &report) {
  nlohmann::json j;
  j["accuracy_pct"] = report.accuracy_pct;
  j["correct"] = report.correct;
  j["total"] = report.total;
  nlohmann::json rows = nlohmann::json::array();
  const auto &labels = report.matrix.labels();
  for (size_t i = 0; i < labels.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (size_t c = 0; c < labels.size(); ++c) row.push_back(report.matrix.cell(i, c));
    rows.push_back(std::move(row));
  }
  j["matrix"] = {{"labels", labels}, {"rows", std::move(rows)}};
  nlohmann::json per_tag = nlohmann::json::object();
  for (const auto &[label, s] : report.per_tag) {
    per_tag[label] = {{"correct", s.correct},
                      {"actual_total", s.actual_total},
                      {"predicted_total", s.predicted_total}};
  }
  j["per_tag"] = std::move(per_tag);
  j["known_word_accuracy_pct"] = OptionalPct(report.KnownWordAccuracyPct());
  j["unknown_word_accuracy_pct"] = OptionalPct(report.UnknownWordAccuracyPct());
  j["unknown_word_count"] = report.unknown_word_count;
  j["skipped_sentences"] = report.skipped_sentences;
  j["skipped_tokens"] = report.skipped_tokens;
  j["folds"] = nlohmann::json::array();
  return j;
}

nlohmann::json ToJson(const CvReport &cv) {
  nlohmann::json j = ToJson(cv.aggregate);
  j["k"] = cv.k;
  j["seed"] = cv.seed;
  j["macro_accuracy_pct"] = cv.macro_accuracy_pct;
  nlohmann::json folds = nlohmann::json::array();
  for (size_t f = 0; f < cv.fold_reports.size(); ++f) {
    nlohmann::json fold = ToJson(cv.fold_reports[f]);
    fold.erase("folds");
    fold["fold"] = f + 1;
    fold["test_sentences"] = cv.folds[f];
    folds.push_back(std::move(fold));
  }
  j["folds"] = std::move(folds);
  return j;
}

}  // namespace hmmtag
