#include "bnp/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

namespace bnp {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t'; }

bool has_space(std::string_view s) {
  return std::any_of(s.begin(), s.end(),
                     [](char c) { return is_space(c) || c == '\n' || c == '\r'; });
}

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

struct Piece {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Piece> split_pieces(std::string_view line) {
  std::vector<Piece> pieces;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t begin = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > begin) pieces.push_back({line.substr(begin, i - begin), begin + 1});
  }
  return pieces;
}

void check_writable(const Sentence& s) {
  validate(s);
  if (s.tokens.empty())
    throw std::invalid_argument("cannot write a sentence with no tokens");
  for (const auto& t : s.tokens)
    if (has_space(t.word))
      throw std::invalid_argument("word contains whitespace: '" + t.word + "'");
}

}  // namespace

std::vector<std::string> Sentence::tags() const {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(t.tag);
  return out;
}

std::size_t Corpus::token_count() const {
  std::size_t n = 0;
  for (const auto& s : sentences) n += s.tokens.size();
  return n;
}

std::size_t Corpus::np_count() const {
  std::size_t n = 0;
  for (const auto& s : sentences) n += s.nps.size();
  return n;
}

ParseError::ParseError(std::string source, std::size_t line, std::size_t column,
                       const std::string& what)
    : std::runtime_error([&] {
        std::ostringstream msg;
        msg << source << ':' << line;
        if (column > 0) msg << ':' << column;
        msg << ": " << what;
        return msg.str();
      }()),
      source_(std::move(source)),
      line_(line),
      column_(column) {}

void validate(const Sentence& sentence) {
  for (const auto& t : sentence.tokens) {
    if (t.word.empty()) throw std::invalid_argument("empty word");
    if (t.tag.empty()) throw std::invalid_argument("empty tag for word '" + t.word + "'");
    if (has_space(t.tag) || t.tag.find('/') != std::string::npos)
      throw std::invalid_argument("tag contains whitespace or '/': '" + t.tag + "'");
  }
  std::size_t prev_end = 0;
  for (const auto& span : sentence.nps) {
    if (span.start >= span.end) throw std::invalid_argument("empty or inverted span");
    if (span.end > sentence.tokens.size())
      throw std::invalid_argument("span extends past end of sentence");
    if (span.start < prev_end)
      throw std::invalid_argument("spans overlap or are not sorted");
    prev_end = span.end;
  }
}

Token parse_token(std::string_view text) {
  auto slash = text.rfind('/');
  if (slash == std::string_view::npos)
    throw std::invalid_argument("token '" + std::string(text) + "' has no '/'");
  if (slash == 0)
    throw std::invalid_argument("token '" + std::string(text) + "' has an empty word");
  if (slash + 1 == text.size())
    throw std::invalid_argument("token '" + std::string(text) + "' has an empty tag");
  return Token{std::string(text.substr(0, slash)), std::string(text.substr(slash + 1))};
}

Corpus read_bracketed(std::istream& in, std::string source,
                      BracketedReadOptions options) {
  Corpus corpus;
  corpus.source = source;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip_cr(std::move(raw));
    const auto pieces = split_pieces(line);
    if (pieces.empty()) continue;

    Sentence sentence;
    std::optional<std::size_t> open;
    std::size_t open_column = 0;
    for (const auto& piece : pieces) {
      if (piece.text == "[") {
        if (options.ignore_brackets) continue;
        if (open) throw ParseError(source, line_no, piece.column, "nested '['");
        open = sentence.tokens.size();
        open_column = piece.column;
      } else if (piece.text == "]") {
        if (options.ignore_brackets) continue;
        if (!open) throw ParseError(source, line_no, piece.column, "unbalanced ']'");
        if (*open == sentence.tokens.size())
          throw ParseError(source, line_no, piece.column, "empty bracket");
        sentence.nps.push_back({*open, sentence.tokens.size()});
        open.reset();
      } else {
        try {
          sentence.tokens.push_back(parse_token(piece.text));
        } catch (const std::invalid_argument& e) {
          throw ParseError(source, line_no, piece.column, e.what());
        }
      }
    }
    if (open) throw ParseError(source, line_no, open_column, "unclosed '['");
    if (sentence.tokens.empty())
      throw ParseError(source, line_no, 0, "line has brackets but no tokens");
    try {
      validate(sentence);
    } catch (const std::invalid_argument& e) {
      throw ParseError(source, line_no, 0, e.what());
    }
    corpus.sentences.push_back(std::move(sentence));
  }
  if (in.bad()) throw IoError(source + ": read failure");
  return corpus;
}

void write_bracketed(const Corpus& corpus, std::ostream& out) {
  for (const auto& s : corpus.sentences) {
    check_writable(s);
    std::size_t next_span = 0;
    for (std::size_t i = 0; i < s.tokens.size(); ++i) {
      if (i > 0) out << ' ';
      if (next_span < s.nps.size() && s.nps[next_span].start == i) out << "[ ";
      out << s.tokens[i].word << '/' << s.tokens[i].tag;
      if (next_span < s.nps.size() && s.nps[next_span].end == i + 1) {
        out << " ]";
        ++next_span;
      }
    }
    out << '\n';
  }
  if (!out) throw IoError("write failure");
}

Corpus read_iob2(std::istream& in, std::string source) {
  Corpus corpus;
  corpus.source = source;
  Sentence current;
  std::optional<std::size_t> open;

  auto close_open = [&] {
    if (open) {
      current.nps.push_back({*open, current.tokens.size()});
      open.reset();
    }
  };
  auto flush = [&] {
    close_open();
    if (!current.tokens.empty()) corpus.sentences.push_back(std::move(current));
    current = Sentence{};
  };

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip_cr(std::move(raw));
    if (std::all_of(line.begin(), line.end(), is_space)) {
      flush();
      continue;
    }
    std::vector<std::string_view> fields;
    std::string_view rest(line);
    for (;;) {
      auto tab = rest.find('\t');
      fields.push_back(rest.substr(0, tab));
      if (tab == std::string_view::npos) break;
      rest.remove_prefix(tab + 1);
    }
    if (fields.size() != 3)
      throw ParseError(source, line_no, 0, "expected word<TAB>tag<TAB>label");
    Token token{std::string(fields[0]), std::string(fields[1])};
    if (token.word.empty() || token.tag.empty())
      throw ParseError(source, line_no, 0, "empty word or tag");
    if (has_space(token.word)) throw ParseError(source, line_no, 0, "word contains whitespace");
    if (has_space(token.tag) || token.tag.find('/') != std::string::npos)
      throw ParseError(source, line_no, 0, "tag contains whitespace or '/'");

    const std::string_view label = fields[2];
    if (label == "B") {
      close_open();
      open = current.tokens.size();
    } else if (label == "I") {
      if (!open) throw ParseError(source, line_no, 0, "I label without preceding B or I");
    } else if (label == "O") {
      close_open();
    } else {
      throw ParseError(source, line_no, 0, "unknown label '" + std::string(label) + "'");
    }
    current.tokens.push_back(std::move(token));
  }
  flush();
  if (in.bad()) throw IoError(source + ": read failure");
  return corpus;
}

void write_iob2(const Corpus& corpus, std::ostream& out) {
  for (const auto& s : corpus.sentences) {
    check_writable(s);
    for (const auto& t : s.tokens)
      if (t.word.find('\t') != std::string::npos)
        throw std::invalid_argument("word contains a tab");
    std::size_t next_span = 0;
    for (std::size_t i = 0; i < s.tokens.size(); ++i) {
      while (next_span < s.nps.size() && s.nps[next_span].end <= i) ++next_span;
      char label = 'O';
      if (next_span < s.nps.size() && s.nps[next_span].start <= i)
        label = s.nps[next_span].start == i ? 'B' : 'I';
      out << s.tokens[i].word << '\t' << s.tokens[i].tag << '\t' << label << '\n';
    }
    out << '\n';
  }
  if (!out) throw IoError("write failure");
}

Format parse_format(std::string_view name) {
  if (name == "bracketed") return Format::bracketed;
  if (name == "iob2") return Format::iob2;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

Corpus read_corpus_file(const std::string& path, Format format,
                        BracketedReadOptions options) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return format == Format::bracketed ? read_bracketed(in, path, options)
                                     : read_iob2(in, path);
}

void write_corpus_file(const Corpus& corpus, const std::string& path, Format format) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  if (format == Format::bracketed)
    write_bracketed(corpus, out);
  else
    write_iob2(corpus, out);
  out.flush();
  if (!out) throw IoError("write failure on '" + path + "'");
}

std::vector<Corpus> split_folds(const Corpus& corpus, std::size_t k, std::uint64_t seed) {
  if (k < 2) throw std::invalid_argument("fold count must be at least 2");
  if (corpus.sentences.size() < k)
    throw std::invalid_argument("corpus has fewer sentences than folds");

  std::vector<std::size_t> order(corpus.sentences.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<std::vector<std::size_t>> members(k);
  for (std::size_t p = 0; p < order.size(); ++p) members[p % k].push_back(order[p]);

  std::vector<Corpus> folds(k);
  for (std::size_t f = 0; f < k; ++f) {
    std::sort(members[f].begin(), members[f].end());
    folds[f].source = corpus.source + "#fold" + std::to_string(f);
    folds[f].sentences.reserve(members[f].size());
    for (auto idx : members[f]) folds[f].sentences.push_back(corpus.sentences[idx]);
  }
  return folds;
}

Corpus concat(const std::vector<const Corpus*>& parts, std::string source) {
  Corpus out;
  out.source = std::move(source);
  for (const Corpus* part : parts)
    out.sentences.insert(out.sentences.end(), part->sentences.begin(),
                         part->sentences.end());
  return out;
}

}  // namespace bnp
