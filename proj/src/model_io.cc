// model_io.cc --- versioned, line-oriented model file.
//
//   HMMTAG 1
//   order 3
//   ## CONFIG          (optional)
//   ## TAGSET          symbol open|closed
//   ## TAG_NGRAMS      t1 t2 [t3] count
//   ## EMISSIONS       tag<TAB>surface<TAB>count
//   ## END
//   checksum <16 lowercase hex digits, FNV-1a 64 of every preceding byte>

#include <charconv>
#include <cstdio>
#include <sstream>

#include "hmmtag/error.h"
#include "hmmtag/model.h"
#include "strings.h"

namespace hmmtag {

namespace {

constexpr std::string_view kMagic = "HMMTAG";

std::string EscapeSurface(std::string_view surface) {
  std::string out;
  out.reserve(surface.size());
  for (char c : surface) {
    if (c == '\\') {
      out += "\\\\";
    } else if (c == ' ') {
      out += "\\s";
    } else if (c == '\t' || c == '\n' || c == '\r') {
      throw Error(ErrorCode::kIoFailure,
                  "surface contains a tab or line break and cannot be saved");
    } else {
      out += c;
    }
  }
  return out;
}

[[noreturn]] void Corrupt(size_t line_no, const std::string &what) {
  throw Error(ErrorCode::kCorruptModel,
              "corrupt model at line " + std::to_string(line_no) + ": " + what);
}

std::string UnescapeSurface(std::string_view text, size_t line_no) {
  std::string out;
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '\\') {
      out += text[i];
      continue;
    }
    if (++i == text.size()) Corrupt(line_no, "dangling escape");
    if (text[i] == '\\') {
      out += '\\';
    } else if (text[i] == 's') {
      out += ' ';
    } else {
      Corrupt(line_no, "bad escape");
    }
  }
  if (out.empty()) Corrupt(line_no, "empty surface");
  return out;
}

uint64_t ParseCount(std::string_view text, size_t line_no) {
  uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) {
    Corrupt(line_no, "bad count '" + std::string(text) + "'");
  }
  return value;
}

std::string FormatDouble(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string Hex64(uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

struct Line {
  size_t number;
  std::string_view text;
};

}  // namespace

uint64_t Fnv1a64(std::string_view bytes) {
  uint64_t hash = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  return hash;
}

std::string SaveModelToString(const HmmModel &model) {
  const auto &counts = model.counts();
  const auto &ts = model.tagset();
  const auto &opts = model.options();
  std::string out;
  out += std::string(kMagic) + " " + std::to_string(HmmModel::kFormatVersion) +
         "\n";
  out += "order " + std::to_string(counts.order()) + "\n";

  out += "## CONFIG\n";
  out += "smoothing " + std::string(SmoothingKindName(opts.smoothing.kind)) +
         " " + FormatDouble(opts.smoothing.k) + "\n";
  out += std::string("smooth_transitions ") +
         (opts.smoothing.transitions ? "1" : "0") + "\n";
  out += std::string("smooth_emissions ") +
         (opts.smoothing.emissions ? "1" : "0") + "\n";
  out += "unknown " + std::string(UnknownPolicyName(opts.unknown)) + "\n";

  out += "## TAGSET\n";
  for (const auto &tag : ts.tags()) {
    out += tag.symbol + (tag.open_class ? " open\n" : " closed\n");
  }

  out += "## TAG_NGRAMS\n";
  for (const auto &[ngram, count] : counts.Ngrams(counts.order())) {
    for (TagId id : ngram.ids()) {
      out += ts.Symbol(id);
      out += ' ';
    }
    out += std::to_string(count) + "\n";
  }

  // std::map order: tag index, then byte-wise surface.
  out += "## EMISSIONS\n";
  for (const auto &[key, count] : counts.emissions()) {
    out += ts.Symbol(key.first);
    out += '\t';
    out += EscapeSurface(key.second);
    out += '\t';
    out += std::to_string(count) + "\n";
  }

  out += "## END\n";
  out += "checksum " + Hex64(Fnv1a64(out)) + "\n";
  return out;
}

void SaveModel(const HmmModel &model, std::ostream &out) {
  std::string text = SaveModelToString(model);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.flush();
  if (!out) throw Error(ErrorCode::kIoFailure, "failed to write model");
}

HmmModel LoadModelFromString(std::string_view text) {
  std::vector<Line> lines;
  {
    size_t start = 0, number = 0;
    while (start < text.size()) {
      size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      lines.push_back({++number, text.substr(start, end - start)});
      start = end + 1;
    }
  }

  if (lines.empty() || !lines[0].text.starts_with(kMagic)) {
    throw Error(ErrorCode::kCorruptModel, "not an hmmtag model file");
  }
  {
    auto header = internal::SplitWhitespace(lines[0].text);
    if (header.size() != 2 || header[0] != kMagic) Corrupt(1, "bad header");
    int version = 0;
    auto [ptr, ec] = std::from_chars(
        header[1].data(), header[1].data() + header[1].size(), version);
    if (ec != std::errc() || ptr != header[1].data() + header[1].size()) {
      Corrupt(1, "bad version");
    }
    if (version != HmmModel::kFormatVersion) {
      throw Error(ErrorCode::kUnsupportedVersion,
                  "unsupported model format version " + std::to_string(version));
    }
  }

  // Integrity: the final line is the checksum over everything before it.
  if (text.empty() || text.back() != '\n' || lines.size() < 3) {
    throw Error(ErrorCode::kCorruptModel, "truncated model file");
  }
  const Line &last = lines.back();
  if (!last.text.starts_with("checksum ")) {
    throw Error(ErrorCode::kCorruptModel, "truncated model file (no checksum)");
  }
  size_t body_size = static_cast<size_t>(last.text.data() - text.data());
  if (last.text.substr(9) != Hex64(Fnv1a64(text.substr(0, body_size)))) {
    throw Error(ErrorCode::kCorruptModel, "model checksum mismatch");
  }
  if (lines[lines.size() - 2].text != "## END") Corrupt(last.number, "no END");

  int order = 0;
  {
    auto f = internal::SplitWhitespace(lines[1].text);
    if (f.size() != 2 || f[0] != "order" || (f[1] != "2" && f[1] != "3")) {
      Corrupt(2, "expected 'order 2|3'");
    }
    order = f[1][0] - '0';
  }

  // Collect sections.
  std::vector<std::pair<std::string_view, std::vector<Line>>> sections;
  for (size_t i = 2; i + 2 < lines.size(); ++i) {
    const Line &l = lines[i];
    if (l.text.starts_with("## ")) {
      sections.push_back({l.text.substr(3), {}});
    } else if (sections.empty()) {
      Corrupt(l.number, "content outside a section");
    } else {
      sections.back().second.push_back(l);
    }
  }
  size_t next = 0;
  auto take = [&](std::string_view name, bool optional) -> const std::vector<Line> * {
    if (next < sections.size() && sections[next].first == name) {
      return &sections[next++].second;
    }
    if (!optional) {
      throw Error(ErrorCode::kCorruptModel,
                  "corrupt model: missing section " + std::string(name));
    }
    return nullptr;
  };

  ModelOptions options;
  if (const auto *config = take("CONFIG", true)) {
    for (const Line &l : *config) {
      auto f = internal::SplitWhitespace(l.text);
      try {
        if (f.size() == 3 && f[0] == "smoothing") {
          options.smoothing.kind = ParseSmoothingKind(f[1]);
          double k = 0;
          auto [ptr, ec] = std::from_chars(f[2].data(), f[2].data() + f[2].size(), k);
          if (ec != std::errc() || ptr != f[2].data() + f[2].size()) {
            Corrupt(l.number, "bad k");
          }
          options.smoothing.k = k;
        } else if (f.size() == 2 && f[0] == "smooth_transitions") {
          options.smoothing.transitions = f[1] == "1";
        } else if (f.size() == 2 && f[0] == "smooth_emissions") {
          options.smoothing.emissions = f[1] == "1";
        } else if (f.size() == 2 && f[0] == "unknown") {
          options.unknown = ParseUnknownPolicy(f[1]);
        } else {
          Corrupt(l.number, "bad config line");
        }
      } catch (const Error &e) {
        if (e.code() == ErrorCode::kCorruptModel) throw;
        Corrupt(l.number, e.what());
      }
    }
  }

  TagSet ts(TagSetMode::kOpen);
  for (const Line &l : *take("TAGSET", false)) {
    auto f = internal::SplitWhitespace(l.text);
    if (f.size() != 2 || (f[1] != "open" && f[1] != "closed")) {
      Corrupt(l.number, "expected 'symbol open|closed'");
    }
    if (TagSet::IsReservedSymbol(f[0])) {
      Corrupt(l.number, "boundary symbol in tag set");
    }
    try {
      ts.Add(f[0], f[1] == "open");
    } catch (const Error &e) {
      Corrupt(l.number, e.what());
    }
  }

  auto resolve = [&](std::string_view symbol, size_t line_no) -> TagId {
    if (symbol == kStartSymbol) return kStartTag;
    if (symbol == kEndSymbol) return kEndTag;
    auto id = ts.Find(symbol);
    if (!id) Corrupt(line_no, "tag '" + std::string(symbol) + "' not in tag set");
    return *id;
  };

  std::vector<std::pair<TagTuple, uint64_t>> ngrams;
  bool eos = false;
  for (const Line &l : *take("TAG_NGRAMS", false)) {
    auto f = internal::SplitWhitespace(l.text);
    if (f.size() != static_cast<size_t>(order) + 1) {
      Corrupt(l.number, "n-gram arity does not match order");
    }
    std::vector<TagId> ids;
    for (int i = 0; i < order; ++i) ids.push_back(resolve(f[static_cast<size_t>(i)], l.number));
    for (int i = 0; i < order; ++i) {
      // "<s>" only as left padding, "</s>" only as the final element.
      bool last_pos = i == order - 1;
      if (ids[static_cast<size_t>(i)] == kStartTag &&
          (last_pos || (i > 0 && ids[static_cast<size_t>(i - 1)] != kStartTag))) {
        Corrupt(l.number, "misplaced <s>");
      }
      if (ids[static_cast<size_t>(i)] == kEndTag && !last_pos) {
        Corrupt(l.number, "misplaced </s>");
      }
    }
    if (ids.back() == kEndTag) eos = true;
    ngrams.push_back({TagTuple(ids), ParseCount(f.back(), l.number)});
  }

  CountsTable counts(order, eos);
  for (const auto &[ngram, count] : ngrams) counts.AddNgram(ngram, count);

  for (const Line &l : *take("EMISSIONS", false)) {
    auto f = internal::Split(l.text, '\t');
    if (f.size() != 3) Corrupt(l.number, "expected tag<TAB>surface<TAB>count");
    TagId tag = resolve(f[0], l.number);
    if (tag < 0) Corrupt(l.number, "boundary symbol cannot emit");
    counts.AddEmission(tag, UnescapeSurface(f[1], l.number),
                       ParseCount(f[2], l.number));
  }
  if (next != sections.size()) {
    throw Error(ErrorCode::kCorruptModel,
                "corrupt model: unexpected section " +
                    std::string(sections[next].first));
  }

  try {
    return HmmModel(std::move(counts), std::move(ts), options);
  } catch (const Error &e) {
    throw Error(ErrorCode::kCorruptModel, std::string("corrupt model: ") + e.what());
  }
}

HmmModel LoadModel(std::istream &in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIoFailure, "failed to read model");
  return LoadModelFromString(buf.str());
}

}  // namespace hmmtag
