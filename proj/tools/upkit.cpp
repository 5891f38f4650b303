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
#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "upkit/json_io.hpp"
#include "upkit/upkit.hpp"

namespace {

using namespace upkit;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitVerify = 4;

// Errors raised while validating flags, before any computation.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Query {
  std::string dual;
  std::optional<Part> N;
  std::string partition;
  std::string eps;
  int z = 1;
  std::string J;
  std::string suite = "all";
  Part maxN = 8;
  unsigned jobs = 1;
  bool pretty = false;
};

Part max_n_cap() {
  if (const char* env = std::getenv("UPKIT_MAX_N")) {
    try {
      return std::stoll(env);
    } catch (const std::exception&) {
      throw UsageError("UPKIT_MAX_N is not an integer");
    }
  }
  return kDefaultMaxN;
}

void check_cap(Part n, const char* what) {
  if (n > max_n_cap())
    throw UsageError(std::string(what) + "=" + std::to_string(n) + " exceeds the cap " +
                     std::to_string(max_n_cap()) + " (UPKIT_MAX_N)");
}

int sign_of(const std::string& dual) {
  if (dual == "B" || dual == "b") return 1;
  if (dual == "C" || dual == "c") return -1;
  throw UsageError("--dual must be B or C");
}

// Validates --dual/--partition/--N and returns the class.
ClassPartition query_class(const Query& q) {
  const int s = sign_of(q.dual);
  try {
    Partition lam = Partition::parse(q.partition);
    check_cap(lam.total(), "|partition|");
    if (q.N && *q.N != lam.total())
      throw Error(Errc::WrongTotal, "partition total " + std::to_string(lam.total()) + " != --N " +
                                        std::to_string(*q.N));
    auto gt = GroupType::make(s, lam.total());
    validate_sign(q.z, gt);
    return classify(lam, gt);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

CharFn query_eps(const ClassPartition& cp, const std::string& text) {
  try {
    return parse_charfn(cp, text);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

IntSet query_set(const std::string& text) {
  if (text.empty() || text == "{}" || text == "()") return {};
  try {
    std::string inner = text;
    if (inner.front() == '{' || inner.front() == '(') inner = inner.substr(1, inner.size() - 2);
    return make_set(Partition::parse(inner).parts());
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

void emit(const Json& j, bool pretty) { std::cout << (pretty ? j.dump(2) : j.dump()) << "\n"; }

Json class_json(const ClassPartition& cp) {
  return Json{{"dual", std::string(1, cp.gt().dual_letter())}, {"N", cp.gt().N}, {"partition", to_json(cp.lambda())}};
}

int cmd_classes(const Query& q) {
  const int s = sign_of(q.dual);
  if (!q.N) throw UsageError("--N is required");
  check_cap(*q.N, "N");
  GroupType gt;
  try {
    gt = GroupType::make(s, *q.N);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  for (const auto& cp : enumerate_classes(gt, max_n_cap())) {
    auto pd = piece_data(cp);
    Json j = class_json(cp);
    j["special"] = pd.I.empty();
    j["I"] = to_json(pd.I);
    j["J"] = to_json(pd.J);
    emit(j, q.pretty);
  }
  return kExitOk;
}

int cmd_class_info(const Query& q) {
  auto cp = query_class(q);
  auto pd = piece_data(cp);
  Json j = class_json(cp);
  j["rank"] = cp.gt().rank();
  j["gp"] = to_json(cp.gp());
  j["bp"] = to_json(cp.bp());
  j["S"] = to_json(cp.S());
  j["S0"] = to_json(cp.S0());
  j["blocks"] = to_json(pd.blocks);
  j["A0_size"] = char_group(cp).size();
  Json dag = Json::array();
  for (const auto& e : canonical_subgroup(cp)) dag.push_back(to_json(e));
  j["A_dagger"] = dag;
  j["I"] = to_json(pd.I);
  j["J"] = to_json(pd.J);
  j["special"] = pd.I.empty();
  Json spc = Json::array();
  for (const auto& m : special_piece(cp)) spc.push_back(to_json(m.mu.lambda()));
  j["Spc"] = spc;
  j["d"] = to_json(bvls_dual(cp).lambda());
  emit(j, q.pretty);
  return kExitOk;
}

int cmd_weak_packet(const Query& q) {
  auto cp = query_class(q);
  std::uint64_t total = 0;
  std::size_t count = 0;
  for (const auto& r : weak_packet(cp, q.z)) {
    emit(Json{{"J", to_json(r.J)},
              {"mu", to_json(r.mu.lambda())},
              {"table", to_json(r.table)},
              {"phi", to_json(r.phi)},
              {"lpacket_size", r.lpacket_size}},
         q.pretty);
    total += r.lpacket_size;
    ++count;
  }
  emit(Json{{"packets", count}, {"total", total}}, q.pretty);
  return kExitOk;
}

int cmd_membership(const Query& q) {
  auto cp = query_class(q);
  if (q.eps.empty()) throw UsageError("membership requires --eps");
  CharFn e = query_eps(cp, q.eps);
  std::size_t count = 0;
  for (const auto& h : packets_containing(cp, e, q.z)) {
    emit(Json{{"J", to_json(h.J)}, {"table", to_json(h.table)}}, q.pretty);
    ++count;
  }
  emit(Json{{"eps", to_json(e)}, {"sign", sign_string(cp, e)}, {"packets", count}}, q.pretty);
  return kExitOk;
}

int cmd_springer(const Query& q) {
  auto cp = query_class(q);
  CharFn e = q.eps.empty() ? CharFn{} : query_eps(cp, q.eps);
  auto sd = springer_index_data(cp, e);
  auto [D, tau] = delta_tau(cp.gt());
  Json j = class_json(cp);
  j["eps"] = to_json(e);
  j["sign"] = sign_string(cp, e);
  j["defect"] = defect(sd, 0);
  j["springer_type"] = is_springer_type(sd);
  Bipartition b = springer_bipartition(sd);
  j["bipartition"] = to_json(b);
  j["Delta"] = D;
  j["tau"] = tau;
  Json tabs = Json::array();
  for (const auto& t : green_tableaux(sd, D, tau)) tabs.push_back(to_json(sd, t));
  j["tableaux"] = tabs;
  Json ps = Json::array();
  for (const auto& x : p_set(sd, D, tau)) ps.push_back(to_json(x));
  j["p_set"] = ps;
  j["weakly_spherical"] = weakly_spherical(sd);
  emit(j, q.pretty);
  return kExitOk;
}

int cmd_sphericity(const Query& q) {
  auto cp = query_class(q);
  std::vector<CharFn> chars;
  if (q.eps.empty()) chars = char_group(cp);
  else chars.push_back(query_eps(cp, q.eps));
  ClassPartition gp = classify(cp.gp(), GroupType::make(cp.s(), cp.gp().total()));
  for (const CharFn& e : chars) {
    auto sd = springer_index_data(gp, e);
    const bool sp = is_springer_type(sd);
    emit(Json{{"eps", to_json(e)},
              {"sign", sign_string(cp, e)},
              {"springer_type", sp},
              {"weakly_spherical", sp && weakly_spherical_general(cp, e)},
              {"canonical", in_canonical_subgroup(cp, e)}},
         q.pretty);
  }
  return kExitOk;
}

int cmd_verify(const Query& q) {
  check_cap(q.maxN, "maxN");
  if (q.suite != "all" && std::find(suite_names().begin(), suite_names().end(), q.suite) == suite_names().end())
    throw UsageError("unknown suite '" + q.suite + "'");
  bool ok = true;
  for (const auto& r : run_suite(q.suite, q.maxN, q.jobs)) {
    emit(to_json(r), q.pretty);
    ok = ok && r.pass();
  }
  return ok ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"upkit: unipotent packet combinatorics"};
  app.require_subcommand(1);
  Query q;

  auto add_common = [&](CLI::App* sub, bool needs_partition) {
    sub->add_option("--dual", q.dual, "dual group type: B (s=+1) or C (s=-1)")->required();
    sub->add_option("--N", q.N, "N = |lambda|");
    if (needs_partition) sub->add_option("--partition", q.partition, "decreasing parts, e.g. 5,3,1 or 7^4,5")->required();
    sub->add_flag("--pretty", q.pretty, "indented JSON");
  };

  auto* classes = app.add_subcommand("classes", "list the classes P^s(N)");
  add_common(classes, false);
  auto* info = app.add_subcommand("class-info", "component group, blocks, special piece and dual of a class");
  add_common(info, true);
  auto* wp = app.add_subcommand("weak-packet", "L-packets of the weak Arthur packet");
  add_common(wp, true);
  wp->add_option("--z", q.z, "central sign z")->check(CLI::IsMember({1, -1}));
  auto* mem = app.add_subcommand("membership", "near-tempered packets containing pi(lambda, eps)");
  add_common(mem, true);
  mem->add_option("--eps", q.eps, "character: sign string such as --+ or a set such as {1,3}");
  mem->add_option("--z", q.z, "central sign z")->check(CLI::IsMember({1, -1}));
  auto* spr = app.add_subcommand("springer", "Springer bipartition, tableaux and P-set of (lambda, eps)");
  add_common(spr, true);
  spr->add_option("--eps", q.eps, "character (default trivial)");
  auto* sph = app.add_subcommand("sphericity", "weak sphericity of each eps (or of --eps)");
  add_common(sph, true);
  sph->add_option("--eps", q.eps, "character");
  auto* ver = app.add_subcommand("verify", "run property suites");
  ver->add_option("--suite", q.suite, "suite name or all");
  ver->add_option("--maxN", q.maxN, "bound on N");
  ver->add_option("--jobs", q.jobs, "worker threads")->check(CLI::PositiveNumber);
  ver->add_flag("--pretty", q.pretty, "indented JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*classes) return cmd_classes(q);
    if (*info) return cmd_class_info(q);
    if (*wp) return cmd_weak_packet(q);
    if (*mem) return cmd_membership(q);
    if (*spr) return cmd_springer(q);
    if (*sph) return cmd_sphericity(q);
    if (*ver) return cmd_verify(q);
  } catch (const UsageError& e) {
    std::cerr << Json{{"error", "usage"}, {"message", e.what()}}.dump() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << Json{{"error", errc_name(e.code())}, {"message", e.what()}}.dump() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}
