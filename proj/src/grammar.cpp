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

#include "digits/grammar.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <tuple>

#include "digits/errors.hpp"
#include "digits/textnorm.hpp"

namespace digits {

namespace {

constexpr Token kZeroWords[3] = {Token::kZero, Token::kOh, Token::kO};

int value_of(std::string_view digits_str) {
  int v = 0;
  for (char c : digits_str) v = v * 10 + (c - '0');
  return v;
}

// Readings of one contiguous group of 1-3 digits. Multi-digit groups
// require a nonzero leading digit; digit-wise readings come from finer
// partitions instead, which keeps the enumeration duplicate-free.
void group_readings(std::string_view g, std::vector<TokenSeq>& out) {
  out.clear();
  switch (g.size()) {
    case 1: {
      int d = g[0] - '0';
      if (d == 0) {
        for (Token z : kZeroWords) out.push_back({z});
      } else {
        out.push_back({unit_token(d)});
      }
      break;
    }
    case 2: {
      if (g[0] == '0') return;
      int v = value_of(g);
      if (v == 10) {
        out.push_back({Token::kTen});
      } else if (v < 20) {
        out.push_back({teen_token(v)});
      } else if (v % 10 == 0) {
        out.push_back({tens_token(v)});
      } else {
        out.push_back({tens_token(v / 10 * 10), unit_token(v % 10)});
      }
      break;
    }
    case 3: {
      if (g[0] == '0') return;
      int head = g[0] - '0';
      int rest = value_of(g) % 100;
      std::vector<TokenSeq> rests;
      if (rest == 0) {
        rests.push_back({});
      } else if (rest < 10) {
        rests.push_back({unit_token(rest)});
      } else {
        group_readings(g.substr(1), rests);
      }
      for (const TokenSeq& r : rests) {
        TokenSeq seq{unit_token(head), Token::kHundred};
        seq.insert(seq.end(), r.begin(), r.end());
        out.push_back(seq);
        if (!r.empty()) {
          TokenSeq with_and{unit_token(head), Token::kHundred, Token::kAnd};
          with_and.insert(with_and.end(), r.begin(), r.end());
          out.push_back(with_and);
        }
      }
      break;
    }
    default:
      assert(false && "group length must be 1..3");
  }
}

void collect_partition_readings(std::string_view d, std::size_t pos,
                                TokenSeq& prefix, std::set<TokenSeq>& out) {
  if (pos == d.size()) {
    out.insert(prefix);
    return;
  }
  std::vector<TokenSeq> readings;
  for (std::size_t len = 1; len <= 3 && pos + len <= d.size(); ++len) {
    group_readings(d.substr(pos, len), readings);
    for (const TokenSeq& r : readings) {
      std::size_t old = prefix.size();
      prefix.insert(prefix.end(), r.begin(), r.end());
      collect_partition_readings(d, pos + len, prefix, out);
      prefix.resize(old);
    }
  }
}

bool contains_hundred(const TokenSeq& seq) {
  return std::find(seq.begin(), seq.end(), Token::kHundred) != seq.end();
}

// "<head> thousand [and] <tail>" readings for 4- and 5-digit strings.
void collect_thousand_readings(std::string_view d, std::set<TokenSeq>& out) {
  if (d.size() != 4 && d.size() != 5) return;
  std::string_view head_digits = d.substr(0, d.size() - 3);
  std::string_view tail_digits = d.substr(d.size() - 3);
  int head_value = value_of(head_digits);
  if (head_value < 1) return;

  // The head reads by value, so a leading zero in a 5-digit string is
  // silent: "05012" still reads "five thousand ...".
  std::vector<TokenSeq> heads;
  if (head_value < 10) {
    heads.push_back({unit_token(head_value)});
  } else {
    std::string h = std::to_string(head_value);
    group_readings(h, heads);
  }

  std::vector<TokenSeq> tails;
  int tail_value = value_of(tail_digits);
  if (tail_value == 0) {
    tails.push_back({});
  } else if (tail_value < 10) {
    tails.push_back({unit_token(tail_value)});
  } else if (tail_value < 100) {
    group_readings(tail_digits.substr(1), tails);
  } else {
    group_readings(tail_digits, tails);
  }

  for (const TokenSeq& head : heads) {
    for (const TokenSeq& tail : tails) {
      TokenSeq seq = head;
      seq.push_back(Token::kThousand);
      seq.insert(seq.end(), tail.begin(), tail.end());
      out.insert(seq);
      if (!tail.empty() && !contains_hundred(tail)) {
        TokenSeq with_and = head;
        with_and.push_back(Token::kThousand);
        with_and.push_back(Token::kAnd);
        with_and.insert(with_and.end(), tail.begin(), tail.end());
        out.insert(with_and);
      }
    }
  }
}

// -------- parsing --------

struct GroupMatch {
  std::size_t next;    // first unconsumed token position
  std::string digits;  // 1-3 chars, what the group denotes
};

// All group readings that start at position i, inverted.
void group_matches(const TokenSeq& t, std::size_t i,
                   std::vector<GroupMatch>& out) {
  out.clear();
  const std::size_t n = t.size();
  Token w = t[i];
  if (is_zero_word(w)) out.push_back({i + 1, "0"});
  if (is_teen(w)) out.push_back({i + 1, std::to_string(teen_value(w))});
  if (w == Token::kTen) out.push_back({i + 1, "10"});
  if (is_tens(w)) {
    out.push_back({i + 1, std::to_string(tens_value(w))});
    if (i + 1 < n && is_unit(t[i + 1])) {
      out.push_back({i + 2, std::to_string(tens_value(w) + unit_value(t[i + 1]))});
    }
  }
  if (is_unit(w)) {
    std::string h = std::to_string(unit_value(w));
    out.push_back({i + 1, h});
    if (i + 1 < n && t[i + 1] == Token::kHundred) {
      out.push_back({i + 2, h + "00"});
      for (int with_and = 0; with_and <= 1; ++with_and) {
        std::size_t r = i + 2 + with_and;
        if (with_and && (i + 2 >= n || t[i + 2] != Token::kAnd)) continue;
        if (r >= n) continue;
        Token rest = t[r];
        if (is_unit(rest)) out.push_back({r + 1, h + "0" + std::to_string(unit_value(rest))});
        if (rest == Token::kTen) out.push_back({r + 1, h + "10"});
        if (is_teen(rest)) out.push_back({r + 1, h + std::to_string(teen_value(rest))});
        if (is_tens(rest)) {
          out.push_back({r + 1, h + std::to_string(tens_value(rest))});
          if (r + 1 < n && is_unit(t[r + 1])) {
            out.push_back(
                {r + 2, h + std::to_string(tens_value(rest) + unit_value(t[r + 1]))});
          }
        }
      }
    }
  }
}

using CandidateMap = std::map<std::string, int>;  // digits -> min group count

void add_candidate(CandidateMap& cands, const std::string& digits_str,
                   int groups) {
  auto [it, inserted] = cands.emplace(digits_str, groups);
  if (!inserted && groups < it->second) it->second = groups;
}

// Dynamic program over token positions: every segmentation of the sequence
// into valid groups, tracking the fewest groups per resulting digit string.
void parse_partitions(const TokenSeq& t, CandidateMap& cands) {
  const std::size_t n = t.size();
  // suffix[i]: digit-string suffixes parseable from t[i..), with min groups.
  std::vector<CandidateMap> suffix(n + 1);
  suffix[n].emplace("", 0);
  std::vector<GroupMatch> matches;
  for (std::size_t i = n; i-- > 0;) {
    group_matches(t, i, matches);
    for (const GroupMatch& m : matches) {
      for (const auto& [suf, groups] : suffix[m.next]) {
        if (m.digits.size() + suf.size() > kMaxDigits) continue;
        add_candidate(suffix[i], m.digits + suf, groups + 1);
      }
    }
  }
  for (const auto& [digits_str, groups] : suffix[0]) {
    if (!digits_str.empty()) add_candidate(cands, digits_str, groups);
  }
}

void parse_thousand_form(const TokenSeq& t, CandidateMap& cands) {
  const std::size_t n = t.size();
  std::vector<GroupMatch> matches;
  for (std::size_t k = 0; k < n; ++k) {
    if (t[k] != Token::kThousand) continue;

    // Head: a 1- or 2-digit value read as a single group. A unit head also
    // stands for the value with a silent leading zero ("05...").
    std::vector<std::string> heads;
    if (k == 1) {
      Token w = t[0];
      if (is_unit(w)) {
        heads.push_back(std::to_string(unit_value(w)));
        heads.push_back("0" + std::to_string(unit_value(w)));
      } else if (w == Token::kTen) {
        heads.push_back("10");
      } else if (is_teen(w)) {
        heads.push_back(std::to_string(teen_value(w)));
      } else if (is_tens(w)) {
        heads.push_back(std::to_string(tens_value(w)));
      }
    } else if (k == 2 && is_tens(t[0]) && is_unit(t[1])) {
      heads.push_back(std::to_string(tens_value(t[0]) + unit_value(t[1])));
    }
    if (heads.empty()) continue;

    // Tail: empty, or one group covering the rest; "and" right after
    // "thousand" only when the tail is nonempty and hundred-free.
    std::vector<std::pair<std::string, int>> tails;  // (3 digits, groups)
    std::size_t r0 = k + 1;
    if (r0 == n) {
      tails.emplace_back("000", 0);
    } else {
      for (int lead_and = 0; lead_and <= 1; ++lead_and) {
        std::size_t r = r0 + lead_and;
        if (lead_and && t[r0] != Token::kAnd) continue;
        if (r >= n) continue;
        group_matches(t, r, matches);
        for (const GroupMatch& m : matches) {
          if (m.next != n) continue;
          if (m.digits == "0") continue;  // a zero tail is not read
          if (lead_and && m.digits.size() == 3) continue;
          tails.emplace_back(std::string(3 - m.digits.size(), '0') + m.digits,
                             1);
        }
      }
    }

    for (const std::string& head : heads) {
      for (const auto& [tail, tail_groups] : tails) {
        std::string digits_str = head + tail;
        if (digits_str.size() <= kMaxDigits) {
          add_candidate(cands, digits_str, 1 + tail_groups);
        }
      }
    }
  }
}

}  // namespace

bool is_valid_digit_string(std::string_view d) {
  if (d.empty() || d.size() > kMaxDigits) return false;
  return std::all_of(d.begin(), d.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

TokenSeq tokenize(std::string_view text) {
  std::vector<std::string> pieces = normalize_words(text);
  if (pieces.empty()) throw OutOfVocabulary(std::string(text), 0);
  TokenSeq out;
  out.reserve(pieces.size());
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    std::optional<Token> t = token_from_surface(pieces[i]);
    if (!t) throw OutOfVocabulary(pieces[i], i);
    out.push_back(*t);
  }
  return out;
}

std::vector<TokenSeq> verbalizations(std::string_view d) {
  assert(is_valid_digit_string(d));
  std::set<TokenSeq> out;
  TokenSeq prefix;
  collect_partition_readings(d, 0, prefix, out);
  collect_thousand_readings(d, out);
  return {out.begin(), out.end()};
}

std::vector<std::string> parse(const TokenSeq& tokens,
                               const ParsePolicy& policy) {
  if (tokens.empty()) return {};
  if (!policy.allow_and &&
      std::find(tokens.begin(), tokens.end(), Token::kAnd) != tokens.end()) {
    return {};
  }
  CandidateMap cands;
  parse_partitions(tokens, cands);
  parse_thousand_form(tokens, cands);

  std::vector<std::tuple<int, std::size_t, std::string>> ranked;
  for (const auto& [digits_str, groups] : cands) {
    if (policy.expected_length &&
        digits_str.size() != static_cast<std::size_t>(*policy.expected_length)) {
      continue;
    }
    ranked.emplace_back(groups, digits_str.size(), digits_str);
  }
  std::sort(ranked.begin(), ranked.end());
  std::vector<std::string> out;
  out.reserve(ranked.size());
  for (auto& [groups, len, digits_str] : ranked) out.push_back(std::move(digits_str));
  return out;
}

TokenSeq canonical_verbalization(std::string_view d, VerbalStyle style) {
  assert(is_valid_digit_string(d));
  if (style == VerbalStyle::kDigitByDigit) {
    TokenSeq out;
    out.reserve(d.size());
    for (char c : d) {
      out.push_back(c == '0' ? Token::kZero : unit_token(c - '0'));
    }
    return out;
  }
  // Compact: fewest tokens among and-free readings; ties go to the reading
  // whose tokens come earliest in rule order (units before teens before
  // tens, zero before oh before o), i.e. the lexicographically smallest.
  std::vector<TokenSeq> all = verbalizations(d);
  const TokenSeq* best = nullptr;
  for (const TokenSeq& v : all) {
    if (std::find(v.begin(), v.end(), Token::kAnd) != v.end()) continue;
    if (!best || v.size() < best->size() ||
        (v.size() == best->size() && v < *best)) {
      best = &v;
    }
  }
  assert(best != nullptr);  // digit-by-digit reading is always and-free
  return *best;
}

}  // namespace digits
