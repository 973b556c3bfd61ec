#include "bnp/grammar.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace bnp {

namespace {

template <typename T>
bool parse_number(std::string_view text, T& value) {
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  return ec == std::errc{} && ptr == end;
}

}  // namespace

std::string Rule::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < tags.size(); ++i) {
    if (i > 0) out += ' ';
    out += tags[i];
  }
  return out;
}

Rule parse_rule(std::string_view text) {
  Rule rule;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && text[i] == ' ') ++i;
    std::size_t begin = i;
    while (i < text.size() && text[i] != ' ') ++i;
    if (i > begin) rule.tags.emplace_back(text.substr(begin, i - begin));
  }
  if (rule.tags.empty()) throw std::invalid_argument("empty rule");
  for (const auto& t : rule.tags)
    if (t.find_first_of("\t\r\n/") != std::string::npos)
      throw std::invalid_argument("invalid tag '" + t + "'");
  return rule;
}

std::size_t Grammar::singleton_count() const {
  std::size_t n = 0;
  for (const auto& [rule, stats] : rules)
    if (stats.frequency == 1) ++n;
  return n;
}

Grammar extract_grammar(const Corpus& training) {
  Grammar grammar;
  for (const auto& sentence : training.sentences) {
    for (const auto& span : sentence.nps) {
      Rule rule;
      rule.tags.reserve(span.size());
      for (std::size_t i = span.start; i < span.end; ++i)
        rule.tags.push_back(sentence.tokens[i].tag);
      ++grammar.rules[std::move(rule)].frequency;
    }
  }
  return grammar;
}

Grammar filter_rules(const Grammar& grammar, const std::function<bool(const Rule&)>& keep) {
  Grammar out;
  for (const auto& [rule, stats] : grammar.rules)
    if (keep(rule)) out.rules.emplace_hint(out.rules.end(), rule, stats);
  return out;
}

Grammar drop_singletons(const Grammar& grammar) {
  Grammar out;
  for (const auto& [rule, stats] : grammar.rules)
    if (stats.frequency >= 2) out.rules.emplace_hint(out.rules.end(), rule, stats);
  return out;
}

void save_grammar(const Grammar& grammar, std::ostream& out) {
  for (const auto& [rule, stats] : grammar.rules) {
    out << rule.to_string();
    if (stats.frequency > 0) out << "\tfreq=" << stats.frequency;
    if (stats.benefit) out << "\tbenefit=" << *stats.benefit;
    out << '\n';
  }
  if (!out) throw IoError("write failure");
}

Grammar load_grammar(std::istream& in, std::string source) {
  Grammar grammar;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (line.find_first_not_of(" \t") == std::string::npos) continue;

    std::vector<std::string_view> fields;
    std::string_view rest(line);
    for (;;) {
      auto tab = rest.find('\t');
      fields.push_back(rest.substr(0, tab));
      if (tab == std::string_view::npos) break;
      rest.remove_prefix(tab + 1);
    }

    Rule rule;
    try {
      rule = parse_rule(fields[0]);
    } catch (const std::invalid_argument& e) {
      throw ParseError(source, line_no, 0, e.what());
    }
    RuleStats stats;
    bool seen_freq = false;
    for (std::size_t f = 1; f < fields.size(); ++f) {
      const auto field = fields[f];
      if (field.starts_with("freq=") && !seen_freq) {
        if (!parse_number(field.substr(5), stats.frequency))
          throw ParseError(source, line_no, 0, "bad frequency '" + std::string(field) + "'");
        seen_freq = true;
      } else if (field.starts_with("benefit=") && !stats.benefit) {
        long value = 0;
        if (!parse_number(field.substr(8), value))
          throw ParseError(source, line_no, 0, "bad benefit '" + std::string(field) + "'");
        stats.benefit = value;
      } else {
        throw ParseError(source, line_no, 0, "unexpected field '" + std::string(field) + "'");
      }
    }
    if (!grammar.rules.emplace(std::move(rule), stats).second)
      throw ParseError(source, line_no, 0, "duplicate rule");
  }
  if (in.bad()) throw IoError(source + ": read failure");
  return grammar;
}

Grammar load_grammar_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return load_grammar(in, path);
}

void save_grammar_file(const Grammar& grammar, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  save_grammar(grammar, out);
  out.flush();
  if (!out) throw IoError("write failure on '" + path + "'");
}

RuleTrie::RuleTrie() : nodes_(1) {}

RuleTrie::RuleTrie(const Grammar& grammar) : nodes_(1) {
  rules_.reserve(grammar.size());
  for (const auto& [rule, stats] : grammar.rules) {
    std::uint32_t node = 0;
    for (const auto& tag : rule.tags) {
      auto it = nodes_[node].children.find(tag);
      if (it == nodes_[node].children.end()) {
        const auto child = static_cast<std::uint32_t>(nodes_.size());
        nodes_[node].children.emplace(tag, child);
        nodes_.emplace_back();
        node = child;
      } else {
        node = it->second;
      }
    }
    nodes_[node].rule = static_cast<RuleId>(rules_.size());
    rules_.push_back(rule);
    max_length_ = std::max(max_length_, rule.size());
  }
}

std::optional<RuleTrie::Match> RuleTrie::longest_match(std::span<const std::string> tags,
                                                       std::size_t pos,
                                                       std::size_t* visits) const {
  std::optional<Match> best;
  std::uint32_t node = 0;
  for (std::size_t i = pos; i < tags.size(); ++i) {
    const auto& children = nodes_[node].children;
    auto it = children.find(std::string_view(tags[i]));
    if (it == children.end()) break;
    if (visits) ++*visits;
    node = it->second;
    if (nodes_[node].rule) best = Match{i - pos + 1, *nodes_[node].rule};
  }
  return best;
}

std::optional<RuleId> RuleTrie::find(std::span<const std::string> tags) const {
  if (tags.empty()) return std::nullopt;
  std::uint32_t node = 0;
  for (const auto& tag : tags) {
    auto it = nodes_[node].children.find(std::string_view(tag));
    if (it == nodes_[node].children.end()) return std::nullopt;
    node = it->second;
  }
  return nodes_[node].rule;
}

std::size_t RuleTrie::terminal_count() const {
  std::size_t n = 0;
  for (const auto& node : nodes_)
    if (node.rule) ++n;
  return n;
}

std::vector<Rule> RuleTrie::enumerate_paths() const {
  std::vector<Rule> out;
  std::vector<std::string> path;
  std::function<void(std::uint32_t)> walk = [&](std::uint32_t node) {
    if (nodes_[node].rule) out.push_back(Rule{path});
    for (const auto& [tag, child] : nodes_[node].children) {
      path.push_back(tag);
      walk(child);
      path.pop_back();
    }
  };
  walk(0);
  return out;
}

}  // namespace bnp
