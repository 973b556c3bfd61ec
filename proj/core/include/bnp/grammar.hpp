#pragma once

// Base NP grammar: literal POS-tag sequences extracted from annotated NPs,
// compiled into a prefix trie for longest-match lookup.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bnp/corpus.hpp"

namespace bnp {

struct Rule {
  std::vector<std::string> tags;  // nonempty

  std::size_t size() const { return tags.size(); }
  std::string to_string() const;  // space-joined tags

  bool operator==(const Rule&) const = default;
  auto operator<=>(const Rule&) const = default;
};

Rule parse_rule(std::string_view text);  // space-separated tags

struct RuleStats {
  std::size_t frequency = 0;      // 0 when unknown (hand-written rule)
  std::optional<long> benefit;    // set once scored on a pruning corpus

  bool operator==(const RuleStats&) const = default;
};

struct Grammar {
  std::map<Rule, RuleStats> rules;

  std::size_t size() const { return rules.size(); }
  bool empty() const { return rules.empty(); }
  bool contains(const Rule& r) const { return rules.contains(r); }
  std::size_t singleton_count() const;

  bool operator==(const Grammar&) const = default;
};

// One rule per distinct tag sequence among the reference NPs, with the
// number of NPs that produced it.
Grammar extract_grammar(const Corpus& training);

// Rules with frequency >= 2.
Grammar drop_singletons(const Grammar& grammar);

// Keeps the rules of `grammar` for which `keep` holds; stats are copied.
Grammar filter_rules(const Grammar& grammar,
                     const std::function<bool(const Rule&)>& keep);

// Line format: `TAG TAG ...[<TAB>freq=N][<TAB>benefit=M]`, `#` comments.
void save_grammar(const Grammar& grammar, std::ostream& out);
Grammar load_grammar(std::istream& in, std::string source = "<stream>");
Grammar load_grammar_file(const std::string& path);
void save_grammar_file(const Grammar& grammar, const std::string& path);

using RuleId = std::uint32_t;

// Prefix trie over tag symbols. Terminal nodes carry the id of the rule
// spelled by the root-to-node path. Immutable after construction.
class RuleTrie {
 public:
  RuleTrie();
  explicit RuleTrie(const Grammar& grammar);

  struct Match {
    std::size_t length;
    RuleId rule;
  };

  // Longest rule equal to tags[pos, pos+len). `visits`, when given, is
  // incremented once per trie edge followed.
  std::optional<Match> longest_match(std::span<const std::string> tags,
                                     std::size_t pos,
                                     std::size_t* visits = nullptr) const;

  std::optional<RuleId> find(std::span<const std::string> tags) const;
  bool contains(std::span<const std::string> tags) const { return find(tags).has_value(); }

  const Rule& rule(RuleId id) const { return rules_[id]; }
  std::size_t rule_count() const { return rules_.size(); }
  std::size_t terminal_count() const;
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t max_rule_length() const { return max_length_; }

  // Rules spelled by every root-to-terminal path, in depth-first order.
  std::vector<Rule> enumerate_paths() const;

 private:
  struct StringHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const {
      return std::hash<std::string_view>{}(s);
    }
  };
  struct Node {
    std::unordered_map<std::string, std::uint32_t, StringHash, std::equal_to<>> children;
    std::optional<RuleId> rule;
  };

  std::vector<Node> nodes_;
  std::vector<Rule> rules_;
  std::size_t max_length_ = 0;
};

inline RuleTrie compile_trie(const Grammar& grammar) { return RuleTrie(grammar); }

}  // namespace bnp

template <>
struct std::hash<bnp::Rule> {
  std::size_t operator()(const bnp::Rule& r) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (const auto& t : r.tags)
      h = (h ^ std::hash<std::string>{}(t)) * 0x100000001b3ULL;
    return h;
  }
};
