#pragma once

// Tagged, bracket-annotated sentences and the two on-disk formats.
//
// Bracketed format: one sentence per line, `word/TAG` tokens separated by
// spaces, base NPs delimited by standalone `[` and `]` tokens. The last '/'
// of a token separates word from tag.
//
// IOB2 format: one `word<TAB>tag<TAB>{B|I|O}` line per token, blank line
// between sentences.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bnp {

struct Token {
  std::string word;
  std::string tag;

  bool operator==(const Token&) const = default;
};

// Half-open token interval [start, end).
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - start; }
  bool overlaps(const Span& other) const {
    return start < other.end && other.start < end;
  }

  bool operator==(const Span&) const = default;
  auto operator<=>(const Span&) const = default;
};

struct Sentence {
  std::vector<Token> tokens;
  std::vector<Span> nps;  // sorted by start, pairwise disjoint

  std::vector<std::string> tags() const;

  bool operator==(const Sentence&) const = default;
};

struct Corpus {
  std::vector<Sentence> sentences;
  std::string source;

  std::size_t token_count() const;
  std::size_t np_count() const;
};

// Malformed input. Line and column are 1-based; column 0 means "whole line".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string source, std::size_t line, std::size_t column,
             const std::string& what);

  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::string source_;
  std::size_t line_;
  std::size_t column_;
};

// A file could not be opened, read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two corpora that should describe the same text do not.
class AlignmentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Throws std::invalid_argument describing the first violated invariant
// (empty word/tag, bad tag characters, span out of range, overlap, order).
void validate(const Sentence& sentence);

// Splits `word/TAG` at the last '/'. Throws std::invalid_argument.
Token parse_token(std::string_view text);

struct BracketedReadOptions {
  // Drop `[`/`]` markers instead of building spans from them.
  bool ignore_brackets = false;
};

Corpus read_bracketed(std::istream& in, std::string source = "<stream>",
                      BracketedReadOptions options = {});
void write_bracketed(const Corpus& corpus, std::ostream& out);

Corpus read_iob2(std::istream& in, std::string source = "<stream>");
void write_iob2(const Corpus& corpus, std::ostream& out);

// File helpers; throw IoError naming the path on I/O failure.
enum class Format { bracketed, iob2 };
Format parse_format(std::string_view name);
Corpus read_corpus_file(const std::string& path, Format format,
                        BracketedReadOptions options = {});
void write_corpus_file(const Corpus& corpus, const std::string& path,
                       Format format);

// Seeded shuffle of sentence indices, then round-robin assignment to k
// folds. Each fold keeps its sentences in original corpus order.
std::vector<Corpus> split_folds(const Corpus& corpus, std::size_t k,
                                std::uint64_t seed);

// Concatenates corpora in order.
Corpus concat(const std::vector<const Corpus*>& parts, std::string source);

}  // namespace bnp
