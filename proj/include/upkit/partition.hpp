/*
 * Copyright 2026 The upkit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "upkit/error.hpp"

namespace upkit {

using Part = std::int64_t;

// Ascending list of distinct integers; used for supports and subsets.
using IntSet = std::vector<Part>;

inline bool set_contains(const IntSet& s, Part x) {
  return std::binary_search(s.begin(), s.end(), x);
}

inline IntSet set_union(const IntSet& a, const IntSet& b) {
  IntSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline IntSet set_minus(const IntSet& a, const IntSet& b) {
  IntSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline IntSet set_intersect(const IntSet& a, const IntSet& b) {
  IntSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline bool set_subset(const IntSet& a, const IntSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline IntSet make_set(std::vector<Part> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline std::string set_str(const IntSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

// A partition, stored weakly decreasing. The empty partition is valid.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<Part> parts) : parts_(std::move(parts)) {
    for (Part p : parts_)
      if (p <= 0) throw Error(Errc::ParseError, "partition parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
  }

  Partition(std::initializer_list<Part> parts) : Partition(std::vector<Part>(parts)) {}

  // Builds from a multiplicity map c -> m(c); zero multiplicities are skipped.
  static Partition from_multiplicities(const std::map<Part, Part>& mult) {
    std::vector<Part> v;
    for (auto it = mult.rbegin(); it != mult.rend(); ++it)
      for (Part k = 0; k < it->second; ++k) v.push_back(it->first);
    return Partition(std::move(v));
  }

  // Accepts "5,3,1", "7^4,5^3" and the empty string.
  static Partition parse(std::string_view text) {
    std::vector<Part> v;
    std::size_t pos = 0;
    auto trim = [](std::string_view t) {
      while (!t.empty() && (t.front() == ' ' || t.front() == '(')) t.remove_prefix(1);
      while (!t.empty() && (t.back() == ' ' || t.back() == ')')) t.remove_suffix(1);
      return t;
    };
    text = trim(text);
    if (text.empty()) return Partition();
    auto number = [](std::string_view t) {
      Part x = 0;
      auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), x);
      if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
        throw Error(Errc::ParseError, "bad integer '" + std::string(t) + "'");
      return x;
    };
    while (pos <= text.size()) {
      std::size_t next = text.find(',', pos);
      if (next == std::string_view::npos) next = text.size();
      std::string_view tok = trim(text.substr(pos, next - pos));
      std::size_t caret = tok.find('^');
      if (caret == std::string_view::npos) {
        v.push_back(number(tok));
      } else {
        Part c = number(tok.substr(0, caret));
        Part m = number(tok.substr(caret + 1));
        if (m < 0) throw Error(Errc::ParseError, "negative exponent");
        for (Part k = 0; k < m; ++k) v.push_back(c);
      }
      pos = next + 1;
    }
    return Partition(std::move(v));
  }

  const std::vector<Part>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  // 1-based access as in λ = (λ_1 ≥ λ_2 ≥ ...); out-of-range gives 0.
  Part at(std::size_t i) const { return (i >= 1 && i <= parts_.size()) ? parts_[i - 1] : 0; }

  Part total() const {
    Part t = 0;
    for (Part p : parts_) t += p;
    return t;
  }

  Part multiplicity(Part c) const {
    auto lo = std::lower_bound(parts_.begin(), parts_.end(), c, std::greater<>());
    auto hi = std::upper_bound(parts_.begin(), parts_.end(), c, std::greater<>());
    return hi - lo;
  }

  IntSet support() const {
    IntSet s(parts_.begin(), parts_.end());
    return make_set(std::move(s));
  }

  std::map<Part, Part> multiplicities() const {
    std::map<Part, Part> m;
    for (Part p : parts_) ++m[p];
    return m;
  }

  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(parts_[i]);
    }
    return out;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<Part> parts_;
};

inline Partition union_of(const Partition& a, const Partition& b) {
  std::vector<Part> v = a.parts();
  v.insert(v.end(), b.parts().begin(), b.parts().end());
  return Partition(std::move(v));
}

inline Partition difference(const Partition& a, const Partition& b) {
  auto m = a.multiplicities();
  for (auto [c, k] : b.multiplicities()) {
    if (m[c] < k)
      throw Error(Errc::NotContained, "(" + b.str() + ") not contained in (" + a.str() + ")");
    m[c] -= k;
  }
  return Partition::from_multiplicities(m);
}

inline Partition transpose(const Partition& a) {
  std::vector<Part> t;
  if (a.empty()) return Partition();
  for (Part j = 1; j <= a.at(1); ++j) {
    Part cnt = 0;
    for (Part p : a.parts())
      if (p >= j) ++cnt;
    t.push_back(cnt);
  }
  return Partition(std::move(t));
}

// a ≤ b in dominance order (equal totals assumed).
inline bool dominated_by(const Partition& a, const Partition& b) {
  Part sa = 0, sb = 0;
  std::size_t len = std::max(a.length(), b.length());
  for (std::size_t i = 1; i <= len; ++i) {
    sa += a.at(i);
    sb += b.at(i);
    if (sa > sb) return false;
  }
  return a.total() == b.total();
}

// λ^{mf}: each part of odd multiplicity, once.
inline Partition multiplicity_free_part(const Partition& a) {
  std::vector<Part> v;
  for (auto [c, k] : a.multiplicities())
    if (k % 2 == 1) v.push_back(c);
  return Partition(std::move(v));
}

// All partitions of n, largest-first (reverse lexicographic).
inline void for_each_partition(Part n, const std::function<void(const Partition&)>& fn) {
  std::vector<Part> cur;
  std::function<void(Part, Part)> rec = [&](Part rest, Part maxp) {
    if (rest == 0) {
      fn(Partition(cur));
      return;
    }
    for (Part p = std::min(rest, maxp); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
}

struct GroupType {
  int s = 1;
  Part N = 1;

  // Rank n_G = floor((N - s)/2).
  Part rank() const { return s == 1 ? (N - 1) / 2 : N / 2; }
  char dual_letter() const { return s == 1 ? 'B' : 'C'; }
  GroupType dual() const { return GroupType{-s, N - s}; }

  static GroupType make(int s, Part N) {
    if (s != 1 && s != -1) throw Error(Errc::ParityViolation, "sign must be +1 or -1");
    if (N < 0) throw Error(Errc::WrongTotal, "N must be non-negative");
    if ((s == 1) != (N % 2 == 1))
      throw Error(Errc::ParityViolation, "N=" + std::to_string(N) + " has wrong parity for s=" +
                                             std::to_string(s));
    return GroupType{s, N};
  }

  friend bool operator==(const GroupType&, const GroupType&) = default;
};

// Good parity for s: odd when s = +1, even when s = -1.
inline bool good_parity(Part c, int s) { return (c % 2 != 0) == (s == 1); }

// λ ∈ P^s: every part of odd multiplicity has good parity.
inline bool in_Ps(const Partition& a, int s) {
  for (auto [c, k] : a.multiplicities())
    if (k % 2 == 1 && !good_parity(c, s)) return false;
  return true;
}

// λ ∈ P^s_0: every part has good parity.
inline bool in_Ps0(const Partition& a, int s) {
  for (Part c : a.parts())
    if (!good_parity(c, s)) return false;
  return true;
}

class ClassPartition {
 public:
  ClassPartition() = default;

  const Partition& lambda() const { return lambda_; }
  const GroupType& gt() const { return gt_; }
  int s() const { return gt_.s; }
  const Partition& gp() const { return gp_; }
  const Partition& bp() const { return bp_; }
  const IntSet& S() const { return S_; }
  const IntSet& S0() const { return S0_; }

  friend bool operator==(const ClassPartition& a, const ClassPartition& b) {
    return a.lambda_ == b.lambda_ && a.gt_ == b.gt_;
  }

  friend ClassPartition classify(const Partition& lambda, const GroupType& gt);

 private:
  Partition lambda_, gp_, bp_;
  GroupType gt_;
  IntSet S_, S0_;
};

inline ClassPartition classify(const Partition& lambda, const GroupType& gt) {
  if (lambda.total() != gt.N)
    throw Error(Errc::WrongTotal, "|(" + lambda.str() + ")| = " + std::to_string(lambda.total()) +
                                      " but N = " + std::to_string(gt.N));
  if (!in_Ps(lambda, gt.s))
    throw Error(Errc::ParityViolation, "(" + lambda.str() + ") is not in P^" +
                                           std::string(gt.s == 1 ? "+1" : "-1"));
  ClassPartition cp;
  cp.lambda_ = lambda;
  cp.gt_ = gt;
  std::vector<Part> gp, bp;
  for (auto [c, k] : lambda.multiplicities()) {
    if (good_parity(c, gt.s)) {
      for (Part i = 0; i < k; ++i) gp.push_back(c);
    } else {
      for (Part i = 0; i < k / 2; ++i) bp.push_back(c);
    }
  }
  cp.gp_ = Partition(gp);
  cp.bp_ = Partition(bp);
  cp.S_ = cp.gp_.support();
  cp.S0_ = multiplicity_free_part(lambda).support();
  return cp;
}

inline ClassPartition classify(const Partition& lambda, int s) {
  return classify(lambda, GroupType::make(s, lambda.total()));
}

constexpr Part kDefaultMaxN = 60;

inline std::vector<ClassPartition> enumerate_classes(const GroupType& gt,
                                                     Part bound = kDefaultMaxN) {
  if (gt.N > bound)
    throw Error(Errc::BoundExceeded,
                "N=" + std::to_string(gt.N) + " exceeds bound " + std::to_string(bound));
  std::vector<ClassPartition> out;
  for_each_partition(gt.N, [&](const Partition& p) {
    if (in_Ps(p, gt.s)) out.push_back(classify(p, gt));
  });
  return out;
}

}  // namespace upkit
