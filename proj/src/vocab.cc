// Copyright 2026 The semtok Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "semtok/vocab.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "semtok/error.h"

namespace semtok {

ModelParseError::ModelParseError(std::size_t line, const std::string& message,
                                 const std::string& source)
    : Error((source.empty() ? std::string() : source + ": ") +
            (line == 0 ? std::string() : "line " + std::to_string(line) + ": ") + message),
      line_(line),
      message_(message) {}

namespace {

constexpr std::string_view kHeaderTag = "#semtok";
constexpr std::string_view kFormatVersion = "1";
constexpr std::string_view kFractionTag = "#f";

std::string format_fixed6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

char kind_code(TokenKind kind) { return kind == TokenKind::kContinuation ? 'C' : 'I'; }

char segment_code(Segment segment) {
  switch (segment) {
    case Segment::kSpecial:
      return 'S';
    case Segment::kSemantic:
      return 'M';
    case Segment::kResidual:
      return 'R';
  }
  return 'R';
}

std::optional<Segment> parse_segment(std::string_view s) {
  if (s == "S") return Segment::kSpecial;
  if (s == "M") return Segment::kSemantic;
  if (s == "R") return Segment::kResidual;
  return std::nullopt;
}

std::optional<double> parse_double(std::string_view s) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(value))
    return std::nullopt;
  return value;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

// Reason a token string cannot be stored, or empty when it is fine.
std::string token_problem(std::string_view token) {
  if (token.empty()) return "empty token";
  if (token.find_first_of("\t\n\r") != std::string_view::npos)
    return "token contains TAB or newline";
  if (token == kContinuationMarker) return "continuation token without payload";
  return {};
}

}  // namespace

std::vector<std::string> default_special_tokens() {
  return {"[PAD]", std::string(kUnkToken), "[CLS]", "[SEP]", "[MASK]"};
}

bool is_continuation(std::string_view token) {
  return token.size() > kContinuationMarker.size() &&
         token.substr(0, kContinuationMarker.size()) == kContinuationMarker;
}

std::string_view token_payload(std::string_view token) {
  return is_continuation(token) ? token.substr(kContinuationMarker.size()) : token;
}

double round_score(double score) {
  const double r = std::round(score * 1e6) / 1e6;
  return r == 0.0 ? 0.0 : r;  // no negative zero
}

Vocabulary Vocabulary::build(std::vector<TokenSpec> tokens) {
  Vocabulary v;
  v.entries_.reserve(tokens.size());
  bool seen_regular = false;
  for (auto& spec : tokens) {
    if (auto problem = token_problem(spec.token); !problem.empty())
      throw std::invalid_argument(problem + ": '" + spec.token + "'");
    const auto id = static_cast<std::int32_t>(v.entries_.size());
    if (!v.index_.emplace(spec.token, id).second)
      throw std::invalid_argument("duplicate token: " + spec.token);

    VocabEntry e;
    e.kind = is_continuation(spec.token) ? TokenKind::kContinuation : TokenKind::kInitial;
    e.segment = spec.segment;
    e.id = id;
    if (spec.segment == Segment::kSpecial) {
      if (seen_regular)
        throw std::invalid_argument("special token after regular tokens: " + spec.token);
      if (e.kind == TokenKind::kContinuation)
        throw std::invalid_argument("special token with continuation marker: " +
                                    spec.token);
      if (spec.score != 0.0)
        throw std::invalid_argument("special token with nonzero score: " + spec.token);
      e.score = 0.0;
      ++v.num_specials_;
      if (spec.token == kUnkToken) v.unk_id_ = id;
    } else {
      seen_regular = true;
      if (!std::isfinite(spec.score) || round_score(spec.score) > 0.0)
        throw std::invalid_argument("score must be <= 0 for token: " + spec.token);
      e.score = round_score(spec.score);
      if (spec.segment == Segment::kSemantic) ++v.num_semantic_;
      const std::string_view payload = token_payload(spec.token);
      auto& index = e.kind == TokenKind::kContinuation ? v.continuation_ : v.initial_;
      index.emplace(std::string(payload), id);
      v.max_payload_bytes_ = std::max(v.max_payload_bytes_, payload.size());
    }
    e.token = std::move(spec.token);
    v.entries_.push_back(std::move(e));
  }
  return v;
}

Vocabulary Vocabulary::build(std::span<const std::string> specials,
                             std::vector<TokenSpec> tokens) {
  std::vector<TokenSpec> all;
  all.reserve(specials.size() + tokens.size());
  for (const auto& s : specials) all.push_back({s, Segment::kSpecial, 0.0});
  for (auto& t : tokens) all.push_back(std::move(t));
  return build(std::move(all));
}

std::optional<std::int32_t> Vocabulary::lookup(std::string_view token) const {
  return find(index_, token);
}

const VocabEntry& Vocabulary::at(std::int32_t id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= entries_.size())
    throw std::out_of_range("token id out of range: " + std::to_string(id));
  return entries_[static_cast<std::size_t>(id)];
}

double Vocabulary::semantic_fraction() const {
  const std::size_t regular = size() - num_specials_;
  return regular == 0 ? 0.0
                      : static_cast<double>(num_semantic_) / static_cast<double>(regular);
}

void serialize_model(const Vocabulary& vocab, std::ostream& os) {
  os << kHeaderTag << '\t' << kFormatVersion << '\n';
  os << kFractionTag << '\t' << format_fixed6(vocab.semantic_fraction()) << '\n';
  for (const auto& e : vocab.entries()) {
    os << e.token << '\t' << format_fixed6(e.score) << '\t' << kind_code(e.kind) << '\t'
       << segment_code(e.segment) << '\n';
  }
}

std::string serialize_model(const Vocabulary& vocab) {
  std::ostringstream os;
  serialize_model(vocab, os);
  return os.str();
}

Vocabulary deserialize_model(std::string_view bytes) {
  std::vector<std::string_view> lines;
  for (std::size_t start = 0; start < bytes.size();) {
    const std::size_t nl = bytes.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back(bytes.substr(start));
      break;
    }
    lines.push_back(bytes.substr(start, nl - start));
    start = nl + 1;
  }

  if (lines.empty()) throw ModelParseError(1, "missing header");
  {
    const auto header = split_tabs(lines[0]);
    if (header.size() != 2 || header[0] != kHeaderTag)
      throw ModelParseError(1, "malformed header");
    if (header[1] != kFormatVersion)
      throw ModelParseError(1, "unsupported format version '" + std::string(header[1]) + "'");
  }
  if (lines.size() < 2) throw ModelParseError(2, "missing semantic fraction line");
  double declared_f = 0.0;
  {
    const auto fields = split_tabs(lines[1]);
    std::optional<double> f;
    if (fields.size() == 2 && fields[0] == kFractionTag) f = parse_double(fields[1]);
    if (!f || *f < 0.0 || *f > 1.0)
      throw ModelParseError(2, "malformed semantic fraction line");
    declared_f = *f;
  }

  std::vector<TokenSpec> specs;
  std::unordered_set<std::string_view> seen;
  bool seen_regular = false;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    const auto fields = split_tabs(lines[i]);
    if (fields.size() != 4)
      throw ModelParseError(line_no, "expected 4 TAB-separated fields, got " +
                                         std::to_string(fields.size()));
    const std::string_view token = fields[0];
    if (auto problem = token_problem(token); !problem.empty())
      throw ModelParseError(line_no, problem);
    if (!seen.insert(token).second)
      throw ModelParseError(line_no, "duplicate token '" + std::string(token) + "'");

    const auto score = parse_double(fields[1]);
    if (!score) throw ModelParseError(line_no, "bad score '" + std::string(fields[1]) + "'");

    const bool continuation = is_continuation(token);
    if (fields[2] != "I" && fields[2] != "C")
      throw ModelParseError(line_no, "bad kind '" + std::string(fields[2]) + "'");
    if ((fields[2] == "C") != continuation)
      throw ModelParseError(line_no, "kind does not match continuation marker");

    const auto segment = parse_segment(fields[3]);
    if (!segment) throw ModelParseError(line_no, "bad segment '" + std::string(fields[3]) + "'");
    if (*segment == Segment::kSpecial) {
      if (seen_regular) throw ModelParseError(line_no, "special token after regular tokens");
      if (continuation) throw ModelParseError(line_no, "special token with continuation marker");
      if (*score != 0.0) throw ModelParseError(line_no, "bad score: special tokens score 0");
    } else {
      seen_regular = true;
      if (round_score(*score) > 0.0)
        throw ModelParseError(line_no, "bad score: must be <= 0");
    }
    specs.push_back({std::string(token), *segment, *score});
  }

  Vocabulary vocab;
  try {
    vocab = Vocabulary::build(std::move(specs));
  } catch (const std::invalid_argument& e) {
    throw ModelParseError(0, e.what());
  }
  if (std::abs(vocab.semantic_fraction() - declared_f) > 5e-7)
    throw ModelParseError(2, "declared semantic fraction " + format_fixed6(declared_f) +
                                 " does not match token segments (" +
                                 format_fixed6(vocab.semantic_fraction()) + ")");
  return vocab;
}

Vocabulary deserialize_model(std::istream& is) {
  std::string bytes{std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()};
  return deserialize_model(bytes);
}

std::string export_bert_vocab(const Vocabulary& vocab) {
  std::string out;
  for (const auto& e : vocab.entries()) {
    out += e.token;
    out += '\n';
  }
  return out;
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path.string(), "cannot open for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  out.flush();
  if (!out) throw IoError(path.string(), "write failure");
}

}  // namespace

void save_model(const Vocabulary& vocab, const std::filesystem::path& path) {
  write_file(path, serialize_model(vocab));
}

Vocabulary load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path.string(), "cannot open model file");
  std::string bytes{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (in.bad()) throw IoError(path.string(), "read failure");
  try {
    return deserialize_model(bytes);
  } catch (const ModelParseError& e) {
    throw ModelParseError(e.line(), e.message(), path.string());
  }
}

void save_bert_vocab(const Vocabulary& vocab, const std::filesystem::path& path) {
  write_file(path, export_bert_vocab(vocab));
}

}  // namespace semtok
