// Copyright 2026 The zsum Authors
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

// zsum: command-line front end for the zero-sum invariant library.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zsum/bounds.hpp"
#include "zsum/constructions.hpp"
#include "zsum/errors.hpp"
#include "zsum/families.hpp"
#include "zsum/formulas.hpp"
#include "zsum/homomorphism.hpp"
#include "zsum/invariants.hpp"
#include "zsum/zerosum.hpp"

namespace {

using namespace zsum;

constexpr int kExitOk = 0;
constexpr int kExitOther = 1;
constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;
constexpr int kExitVerify = 4;

struct Global {
  std::uint64_t budget_nodes = 0;
  double budget_seconds = 0;
  std::int64_t max_size = 16;
  std::int64_t max_atom_order = 64;
  int workers = 1;
  std::string format = "table";
  bool verify_mode = false;
  std::string cache_dir;
  bool no_timing = false;

  EngineConfig engine_config() const {
    EngineConfig c;
    c.workers = workers;
    c.budget_nodes = budget_nodes;
    c.budget_seconds = budget_seconds;
    c.max_search_order = max_size;
    c.max_atom_order = max_atom_order;
    c.cache_dir = cache_dir;
    c.record_timing = !no_timing;
    return c;
  }
  bool json() const { return format == "json"; }
};

std::string witness_text(const IndexedMultiset& s) {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (const auto& g : s.canonical()) {
    if (!first) os << ',';
    first = false;
    if (g.residues.size() == 1) {
      os << g.residues[0];
    } else {
      os << '(';
      for (std::size_t i = 0; i < g.residues.size(); ++i) os << (i ? "," : "") << g.residues[i];
      os << ')';
    }
  }
  os << ']';
  return os.str();
}

// Re-derives a result from its witness with both UFIM algorithms.
bool witness_reproduces(const InvariantResult& r) {
  if (!r.witness) return true;
  const auto& w = *r.witness;
  ZeroSumOptions strict;
  strict.verify = true;
  switch (r.invariant) {
    case Invariant::kK1:
    case Invariant::kK1Star:
      return (w.empty() || (!w.contains_identity() && is_zero_sum(w) && is_ufim(w, strict))) &&
             cross_number(w) == r.value;
    case Invariant::kN1:
      return (w.empty() || (!w.contains_identity() && is_zero_sum(w) && is_ufim(w, strict))) &&
             Rational(static_cast<std::int64_t>(w.size())) == r.value;
    case Invariant::kD:
      return (w.empty() || is_minimal_zero_sum(w)) && Rational(static_cast<std::int64_t>(w.size())) == r.value;
    case Invariant::kBigK:
      return (w.empty() || is_minimal_zero_sum(w)) && cross_number(w) == r.value;
    case Invariant::kLittleK:
    case Invariant::kLittleKStar:
      return !w.contains_identity() && is_zero_sum_free(w) && cross_number(w) == r.value;
    default:
      return true;
  }
}

int cmd_invariant(const Global& g, const std::vector<std::string>& groups, const std::vector<std::string>& names,
                  bool witness) {
  InvariantEngine engine(g.engine_config());
  int code = kExitOk;
  for (const auto& spec : groups) {
    auto group = FiniteAbelianGroup::parse(spec);
    for (const auto& name : names) {
      auto inv = parse_invariant(name);
      auto r = engine.compute(group, inv);
      if (g.json()) {
        std::cout << report_json(r) << '\n';
      } else {
        std::cout << name << '(' << group.key() << ") " << (r.complete ? "= " : ">= ") << r.value.to_short_string()
                  << "  [" << provenance_name(r.provenance) << (r.complete ? "" : ", incomplete") << "]\n";
        if (witness && r.witness) std::cout << "  witness " << witness_text(*r.witness) << '\n';
        if (!is_formula(inv)) {
          std::cout << "  nodes " << r.stats.nodes;
          for (const auto& [reason, n] : r.stats.prunes) std::cout << "  prune." << reason << ' ' << n;
          if (!g.no_timing) std::cout << "  millis " << r.millis;
          std::cout << '\n';
        }
      }
      if (!r.complete) code = std::max(code, kExitBudget);
      if (g.verify_mode && !witness_reproduces(r)) {
        std::cerr << "verification failed for " << name << '(' << group.key() << ")\n";
        code = kExitVerify;
      }
    }
  }
  return code;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      auto v = std::stoll(text);
      return {v, v};
    }
    return {std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw InvalidArgument("bad range '" + text + "', expected a..b");
  }
}

void print_family(const FamilyReport& report, bool json) {
  if (json) {
    std::cout << family_report_json(report) << '\n';
    return;
  }
  std::cout << "theorem " << report.theorem << '\n';
  for (const auto& i : report.instances) {
    std::cout << std::left << std::setw(8) << status_name(i.status) << std::setw(24) << i.params << i.relation;
    if (i.status != InstanceStatus::kSkipped) std::cout << "  lhs " << i.lhs << "  rhs " << i.rhs;
    if (!i.note.empty()) std::cout << "  (" << i.note << ')';
    std::cout << '\n';
  }
  std::cout << "summary pass " << report.count(InstanceStatus::kPass) << " fail "
            << report.count(InstanceStatus::kFail) << " skipped " << report.count(InstanceStatus::kSkipped) << '\n';
}

Homomorphism parse_hom(const FiniteAbelianGroup& source, const std::string& spec) {
  auto colon = spec.find(':');
  std::string kind = spec.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  try {
    if (kind == "proj") return Homomorphism::projection(source, std::stoi(arg));
    if (kind == "mul") return Homomorphism::multiplication(source, std::stoll(arg));
    if (kind == "drop") {
      std::vector<std::int64_t> primes;
      std::stringstream ss(arg);
      for (std::string tok; std::getline(ss, tok, ',');) primes.push_back(std::stoll(tok));
      return Homomorphism::drop_primes(source, primes);
    }
    if (kind == "id") return Homomorphism::identity(source);
    if (!spec.empty() && spec.front() == '{') {
      auto doc = nlohmann::json::parse(spec);
      auto target = FiniteAbelianGroup::parse(doc.at("target").get<std::string>());
      std::vector<GroupElement> images;
      for (const auto& im : doc.at("images")) images.push_back(target.element(im.get<std::vector<std::int64_t>>()));
      return make_hom(source, target, images);
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("bad homomorphism JSON: ") + e.what());
  } catch (const std::logic_error&) {
    throw InvalidArgument("bad homomorphism spec '" + spec + "'");
  }
  throw InvalidArgument("bad homomorphism spec '" + spec + "' (proj:<j>, mul:<k>, drop:<p,..>, id or JSON)");
}

IndexedMultiset read_multiset(const FiniteAbelianGroup& group, const std::string& source) {
  std::string text = source;
  if (text.empty() || text.front() != '[') {
    std::ifstream in(source);
    if (!in) throw InvalidArgument("cannot read multiset file '" + source + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    auto doc = nlohmann::json::parse(text);
    std::vector<std::vector<std::int64_t>> residues;
    for (const auto& e : doc) {
      residues.push_back(e.is_array() ? e.get<std::vector<std::int64_t>>() : std::vector<std::int64_t>{e.get<std::int64_t>()});
    }
    return IndexedMultiset::from_residues(group, residues);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("bad multiset: ") + e.what());
  }
}

std::string labels_text(const IndexedMultiset& s, const IndexSubset& sub) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < sub.labels.size(); ++i) os << (i ? "," : "") << sub.labels[i];
  os << "} " << witness_text(s.sub(sub));
  return os.str();
}

nlohmann::json subset_json(const IndexedMultiset& s, const IndexSubset& sub) {
  nlohmann::json elems = nlohmann::json::array();
  for (auto l : sub.labels) elems.push_back(s.at(l).residues);
  return {{"labels", sub.labels}, {"elements", elems}};
}

int cmd_decompose(const Global& g, const std::string& group_spec, const std::string& multiset,
                  const std::string& hom) {
  auto group = FiniteAbelianGroup::parse(group_spec);
  auto s = read_multiset(group, multiset);
  auto phi = parse_hom(group, hom);
  DecomposeOptions opts;
  opts.zero_sum.verify = g.verify_mode;
  if (g.budget_nodes) opts.budget_nodes = g.budget_nodes;
  auto d = construction4_decompose(s, phi, opts);

  InvariantEngine engine(g.engine_config());
  auto kernel = phi.kernel_structure();
  auto quotient = phi.quotient_structure();
  PartInvariants parts;
  parts.k1_kernel = engine.value(kernel, Invariant::kK1);
  parts.n1_kernel = engine.value(kernel, Invariant::kN1).num();
  parts.k1_quotient = engine.value(quotient, Invariant::kK1);
  parts.big_k_quotient = engine.value(quotient, Invariant::kBigK);
  auto checks = phiunique_consequences(s, phi, d, parts);
  bool ok = std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });

  if (g.json()) {
    nlohmann::json packing = nlohmann::json::array();
    for (const auto& b : d.packing) packing.push_back(subset_json(s, b));
    nlohmann::json items = nlohmann::json::array();
    for (const auto& c : checks) {
      items.push_back({{"item", c.item},
                       {"statement", c.statement},
                       {"lhs", c.lhs.to_string()},
                       {"rhs", c.rhs.to_string()},
                       {"applicable", c.applicable},
                       {"pass", c.pass}});
    }
    nlohmann::json doc = {{"group_key", group.key()},
                          {"kernel", kernel.key()},
                          {"quotient", quotient.key()},
                          {"T", subset_json(s, d.kernel_part)},
                          {"packing", packing},
                          {"t", d.t()},
                          {"remainder", subset_json(s, d.remainder)},
                          {"consequences", items}};
    std::cout << doc.dump() << '\n';
  } else {
    std::cout << "kernel " << kernel.key() << "  quotient " << quotient.key() << '\n';
    std::cout << "T   " << labels_text(s, d.kernel_part) << '\n';
    std::cout << "t   " << d.t() << '\n';
    for (std::size_t i = 0; i < d.packing.size(); ++i) {
      std::cout << "S_" << i + 1 << " " << labels_text(s, d.packing[i]) << '\n';
    }
    std::cout << "S'' " << labels_text(s, d.remainder) << '\n';
    for (const auto& c : checks) {
      std::cout << (c.applicable ? (c.pass ? "pass  " : "FAIL  ") : "n/a   ") << c.item << "  " << c.statement
                << "  lhs " << c.lhs.to_short_string() << "  rhs " << c.rhs.to_short_string() << '\n';
    }
  }
  return ok ? kExitOk : kExitVerify;
}

int cmd_catalog(const Global& g, std::int64_t max_order) {
  InvariantEngine engine(g.engine_config());
  const std::vector<Invariant> cols{Invariant::kD,        Invariant::kDStar,       Invariant::kN1,
                                    Invariant::kN1Star,   Invariant::kBigK,        Invariant::kBigKStar,
                                    Invariant::kLittleK,  Invariant::kLittleKStar, Invariant::kK1,
                                    Invariant::kK1Star};
  int code = kExitOk;
  if (!g.json()) {
    std::cout << std::left << std::setw(10) << "group";
    for (auto c : cols) std::cout << std::setw(9) << invariant_name(c);
    std::cout << "gap\n";
  }
  for (std::int64_t n = 2; n <= max_order; ++n) {
    for (const auto& group : all_groups_of_order(n)) {
      std::vector<std::string> cells;
      std::optional<Rational> k1;
      for (auto c : cols) {
        try {
          auto r = engine.compute(group, c);
          std::cerr << invariant_name(c) << '(' << group.key() << ") " << provenance_name(r.provenance) << '\n';
          if (g.json()) std::cout << report_json(r) << '\n';
          if (!r.complete) {
            code = std::max(code, kExitBudget);
            cells.push_back(">=" + r.value.to_short_string());
            continue;
          }
          cells.push_back(r.value.to_short_string());
          if (c == Invariant::kK1) k1 = r.value;
        } catch (const ResourceLimitError&) {
          cells.push_back("-");
        }
      }
      if (!g.json()) {
        std::cout << std::left << std::setw(10) << group.key();
        for (const auto& cell : cells) std::cout << std::setw(9) << cell;
        std::cout << (k1 ? (*k1 - k1_star(group)).to_short_string() : "-") << '\n';
      }
    }
  }
  return code;
}

int cmd_constraint(const Global& g, int r, const std::string& c, const std::string& group_spec) {
  auto res = mainthm2_constraint(r, Rational::parse(c), FiniteAbelianGroup::parse(group_spec));
  if (g.json()) {
    nlohmann::json doc = {{"lhs", res.lhs.to_string()},
                          {"rhs", res.rhs.to_string()},
                          {"rhs_approx", res.rhs.approx()},
                          {"holds", res.holds},
                          {"strict", res.strict}};
    std::cout << doc.dump() << '\n';
  } else {
    std::cout << "lhs " << res.lhs.to_short_string() << " ~ " << std::setprecision(6) << res.lhs.to_double() << '\n'
              << "rhs " << res.rhs.to_string() << " ~ " << res.rhs.approx() << '\n'
              << "holds " << (res.holds ? "true" : "false") << "  strict " << (res.strict ? "true" : "false")
              << '\n';
  }
  return kExitOk;
}

int cmd_cache(const Global& g, bool clear) {
  if (g.cache_dir.empty()) throw InvalidArgument("no cache directory (set --cache-dir or ZSUM_CACHE_DIR)");
  std::filesystem::path dir(g.cache_dir);
  if (!std::filesystem::exists(dir)) return kExitOk;
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    auto name = e.path().filename().string();
    if (e.is_regular_file() && (name.rfind("atoms-v", 0) == 0 || name.rfind("result-v", 0) == 0)) {
      files.push_back(e.path());
    }
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    if (clear) {
      std::filesystem::remove(f);
    } else {
      std::cout << f.filename().string() << ' ' << std::filesystem::file_size(f) << '\n';
    }
  }
  if (clear) std::cout << "removed " << files.size() << " files\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zero-sum invariants of finite abelian groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  if (const char* env = std::getenv("ZSUM_CACHE_DIR")) g.cache_dir = env;
  app.add_option("--budget-nodes", g.budget_nodes, "node cap per search (0: none)");
  app.add_option("--budget-seconds", g.budget_seconds, "time cap per search (0: none)");
  app.add_option("--max-size", g.max_size, "largest |G| for the K1 and N1 searches")->check(CLI::PositiveNumber);
  app.add_option("--max-atom-order", g.max_atom_order, "largest |G| for atom enumeration")
      ->check(CLI::PositiveNumber);
  app.add_option("--workers", g.workers, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"table", "json"}));
  app.add_flag("--verify-mode", g.verify_mode, "cross-check UFIM verdicts with both algorithms");
  app.add_option("--cache-dir", g.cache_dir, "cache directory (default $ZSUM_CACHE_DIR)");
  app.add_flag("--no-timing", g.no_timing, "report millis as 0");

  auto* inv = app.add_subcommand("invariant", "compute invariants");
  std::vector<std::string> groups, names;
  bool witness = false;
  inv->add_option("-g,--group", groups, "group spec, e.g. 4,2 or 2^2,3")->required();
  inv->add_option("-i,--invariant", names, "D N1 K k K1 Dstar N1star Kstar kstar K1star")->required();
  inv->add_flag("--witness", witness, "print the witness");

  auto* ver = app.add_subcommand("verify", "check a theorem family on a parameter grid");
  std::string theorem, orders;
  FamilyGrid grid;
  std::vector<std::string> pq;
  ver->add_option("--theorem", theorem, "theorem id")->required();
  ver->add_option("--p", grid.p)->delimiter(',');
  ver->add_option("--q", grid.q)->delimiter(',');
  ver->add_option("--m", grid.m)->delimiter(',');
  ver->add_option("--n", grid.n)->delimiter(',');
  ver->add_option("--r", grid.r)->delimiter(',');
  ver->add_option("--pq", pq, "prime pair p,q (repeatable)");
  ver->add_option("--groups", grid.groups, "group specs (repeatable)");
  ver->add_option("--orders", orders, "order range a..b");

  auto* dec = app.add_subcommand("decompose", "kernel/packing decomposition of a UFIM");
  std::string dec_group, dec_multiset, dec_hom;
  dec->add_option("-g,--group", dec_group)->required();
  dec->add_option("--multiset", dec_multiset, "file or inline JSON list of residue vectors")->required();
  dec->add_option("--hom", dec_hom, "proj:<j>, mul:<k>, drop:<p,..>, id or JSON")->required();

  auto* cat = app.add_subcommand("catalog", "sweep all groups up to an order");
  std::int64_t max_order = 9;
  cat->add_option("max_order", max_order, "largest group order")->required();

  auto* con = app.add_subcommand("constraint", "evaluate the large-p1 constraint for C_r + G");
  int con_r = 2;
  std::string con_c = "1", con_group;
  con->add_option("--r", con_r)->required();
  con->add_option("--c", con_c);
  con->add_option("-g,--group", con_group)->required();

  auto* cache = app.add_subcommand("cache", "list or clear cache files");
  bool clear = false;
  cache->add_flag("--clear", clear);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitParse;
  }

  try {
    if (*inv) return cmd_invariant(g, groups, names, witness);
    if (*ver) {
      if (!orders.empty()) std::tie(grid.min_order, grid.max_order) = parse_range(orders);
      for (const auto& s : pq) {
        auto comma = s.find(',');
        if (comma == std::string::npos) throw InvalidArgument("--pq expects p,q");
        grid.pq.emplace_back(std::stoll(s.substr(0, comma)), std::stoll(s.substr(comma + 1)));
      }
      InvariantEngine engine(g.engine_config());
      auto report = verify_family(engine, theorem, grid);
      print_family(report, g.json());
      return report.ok() ? kExitOk : kExitVerify;
    }
    if (*dec) return cmd_decompose(g, dec_group, dec_multiset, dec_hom);
    if (*cat) return cmd_catalog(g, max_order);
    if (*con) return cmd_constraint(g, con_r, con_c, con_group);
    if (*cache) return cmd_cache(g, clear);
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: bad number: " << e.what() << '\n';
    return kExitParse;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const NotApplicableError& e) {
    std::cerr << "not applicable: " << e.what() << '\n';
    return kExitParse;
  } catch (const ResourceLimitError& e) {
    std::cerr << "budget exhausted: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitOther;
  }
  return kExitOther;
}
