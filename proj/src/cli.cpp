#include "towercalc/cli.hpp"

#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "towercalc/chain_io.hpp"
#include "towercalc/chains.hpp"
#include "towercalc/disklinks.hpp"
#include "towercalc/hilton.hpp"
#include "towercalc/lie.hpp"
#include "towercalc/tower.hpp"

namespace towercalc::cli {

using nlohmann::json;

int max_degree_from_env() {
  const char* raw = std::getenv("TOWER_CALC_MAX_DEGREE");
  if (!raw || !*raw) return kDefaultMaxDegree;
  try {
    std::size_t used = 0;
    const int v = std::stoi(raw, &used);
    if (used == std::string(raw).size() && v >= 1) return v;
  } catch (const std::logic_error&) {
  }
  throw Error(ErrorCode::OutOfRange, "TOWER_CALC_MAX_DEGREE: expected a positive integer");
}

namespace {

// Text rendering. Every key and value of the structured result is printed,
// so both formats carry the same numbers.

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool is_scalar_array(const json& v) {
  if (!v.is_array()) return false;
  for (const auto& x : v)
    if (x.is_structured()) return false;
  return true;
}

void render_text(const json& v, std::ostream& os, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto render_value = [&](const std::string& head, const json& x) {
    if (!x.is_structured()) {
      os << pad << head << ": " << scalar_text(x) << "\n";
    } else if (is_scalar_array(x)) {
      os << pad << head << ":";
      for (const auto& e : x) os << " " << scalar_text(e);
      os << "\n";
    } else {
      os << pad << head << ":\n";
      render_text(x, os, indent + 2);
    }
  };
  if (v.is_object()) {
    for (const auto& [key, x] : v.items()) render_value(key, x);
  } else if (v.is_array()) {
    for (const auto& x : v) render_value("-", x);
  } else {
    os << pad << scalar_text(v) << "\n";
  }
}

void emit(const json& result, bool structured, std::ostream& out) {
  if (structured) {
    out << result.dump(2) << "\n";
    return;
  }
  if (result.is_object() && result.size() == 1 && result.contains("value")) {
    out << scalar_text(result["value"]) << "\n";
    return;
  }
  render_text(result, out, 0);
}

json table_json(const hilton::GradedRankTable& t) {
  json ranks = json::object();
  for (const auto& [q, r] : t.entries()) ranks[std::to_string(q)] = io::to_json(r);
  return json{{"q_min", t.q_min()}, {"q_max", t.q_max()}, {"ranks", ranks}};
}

std::vector<int> parse_int_list(const std::string& s, const std::string& field) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::ParseError, field + ": '" + item + "' is not an integer");
    }
  }
  if (out.empty()) throw Error(ErrorCode::ParseError, field + ": empty list");
  return out;
}

// "0:1,2:1" → {0: 1, 2: 1}
std::map<int, BigInt> parse_betti(const std::string& s) {
  std::map<int, BigInt> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos)
      throw Error(ErrorCode::ParseError, "betti: entry '" + item + "' is not degree:rank");
    const int d = parse_int_list(item.substr(0, colon), "betti").at(0);
    const std::string rank = item.substr(colon + 1);
    if (rank.empty() || rank.find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrorCode::ParseError, "betti: rank '" + rank + "' is not a nonnegative integer");
    out[d] = BigInt(rank);
  }
  return out;
}

int cap_degree(int requested, int cap, json& result) {
  if (requested <= cap) return requested;
  result["q_max_capped_from"] = requested;
  return cap;
}

json connectivity_json(std::int64_t v) {
  json r{{"value", v}};
  if (tower::below_empty_convention(v))
    r["note"] = "at or below the empty-space connectivity convention";
  return r;
}

json group_json(const HomologyGroup& g) { return to_string(g); }

json homology_json(const HomologySummary& h) {
  json out = json::object();
  for (const auto& [d, g] : h.groups) out[std::to_string(d)] = group_json(g);
  return out;
}

std::string codim_name(tower::CodimVerdict v) {
  switch (v) {
    case tower::CodimVerdict::Certified: return "CERTIFIED";
    case tower::CodimVerdict::NotCertified: return "NOT_CERTIFIED";
    case tower::CodimVerdict::NotApplicable: return "NOT_APPLICABLE";
  }
  return "UNKNOWN";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants of unlinked-embedding towers", "towercalc"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "text | structured")
      ->check(CLI::IsMember({"text", "structured"}));

  // Each subcommand stores a job producing a structured result; it runs
  // after parsing succeeds so usage errors never reach the modules.
  std::function<json()> job;
  // Set by jobs whose verdict is itself a domain failure.
  std::optional<ErrorCode> failure;

  // homology
  std::string complex_path;
  auto* homology_cmd = app.add_subcommand("homology", "Integral homology of a chain complex file");
  homology_cmd->add_option("--complex", complex_path, "chain-complex JSON file")->required();
  homology_cmd->callback([&] {
    job = [&] { return json{{"homology", homology_json(homology(io::load_complex(complex_path)))}}; };
  });

  // cone
  std::string map_path;
  auto* cone_cmd = app.add_subcommand("cone", "Mapping cone of a chain map file");
  cone_cmd->add_option("--map", map_path, "chain-map JSON file")->required();
  cone_cmd->callback([&] {
    job = [&] {
      const auto cone = mapping_cone(io::load_map(map_path));
      return json{{"cone", io::to_json(cone)}, {"homology", homology_json(homology(cone))}};
    };
  });

  // desusp-check / normal-invariant
  std::string p_path, boundary_path, section_path, alpha_path;
  int n_ni = 0;
  auto* desusp_cmd = app.add_subcommand("desusp-check", "Compare H_{k-1}(P^xi) with H_k(P, dP)");
  desusp_cmd->add_option("--p", p_path, "complex file for P")->required();
  desusp_cmd->add_option("--boundary", boundary_path, "map file dP -> P")->required();
  desusp_cmd->add_option("--section", section_path, "map file K -> dP")->required();
  desusp_cmd->callback([&] {
    job = [&] {
      const auto rep = verify_desuspension(io::load_complex(p_path), io::load_map(boundary_path),
                                           io::load_map(section_path));
      json r{{"verdict", to_string(rep.verdict)}};
      if (rep.verdict == DesuspensionVerdict::InvalidSectioning) {
        r["reason"] = rep.reason;
        failure = ErrorCode::InvalidSectioning;
        return r;
      }
      r["composite_quasi_iso"] = rep.composite_quasi_iso;
      json rows = json::array();
      for (const auto& row : rep.rows)
        rows.push_back(json{{"degree", row.degree},
                            {"thom", group_json(row.cone)},
                            {"relative", group_json(row.relative)},
                            {"match", row.match}});
      r["rows"] = rows;
      return r;
    };
  });

  auto* ni_cmd = app.add_subcommand("normal-invariant", "Check that S^{n-1} -> P^xi hits a fundamental class");
  ni_cmd->add_option("--alpha", alpha_path, "map file S^{n-1} -> cone(section)")->required();
  ni_cmd->add_option("--p", p_path, "complex file for P")->required();
  ni_cmd->add_option("--boundary", boundary_path, "map file dP -> P")->required();
  ni_cmd->add_option("--section", section_path, "map file K -> dP")->required();
  ni_cmd->add_option("--n", n_ni, "dimension n")->required()->check(CLI::PositiveNumber);
  ni_cmd->callback([&] {
    job = [&] {
      const auto rep = check_normal_invariant(io::load_map(alpha_path), io::load_complex(p_path),
                                              io::load_map(boundary_path),
                                              io::load_map(section_path), n_ni);
      return json{{"verdict", to_string(rep.verdict)}, {"image", io::to_json(rep.image)}};
    };
  });

  // lyndon / witt
  int g = 0, len = 0;
  bool brackets = false;
  auto* lyndon_cmd = app.add_subcommand("lyndon", "Lyndon words of a given length");
  lyndon_cmd->add_option("--g", g, "alphabet size")->required()->check(CLI::NonNegativeNumber);
  lyndon_cmd->add_option("--len", len, "word length")->required()->check(CLI::PositiveNumber);
  lyndon_cmd->add_flag("--brackets", brackets, "also print standard bracketings");
  lyndon_cmd->callback([&] {
    job = [&] {
      const auto words = lie::lyndon_words_of_length(g, len);
      json list = json::array(), br = json::array();
      for (const auto& w : words) {
        list.push_back(w.str());
        br.push_back(w.bracketing());
      }
      json r{{"g", g}, {"len", len}, {"count", words.size()}, {"words", list}};
      if (brackets) r["brackets"] = br;
      return r;
    };
  });

  auto* witt_cmd = app.add_subcommand("witt", "Rank of the length-len part of the free Lie algebra");
  witt_cmd->add_option("--g", g, "alphabet size")->required()->check(CLI::PositiveNumber);
  witt_cmd->add_option("--len", len, "word length")->required()->check(CLI::PositiveNumber);
  witt_cmd->callback([&] { job = [&] { return json{{"value", io::to_json(lie::witt_rank(g, len))}}; }; });

  // pi-wedge
  std::string dims;
  int q_max = 0, loop_t = 0;
  auto* wedge_cmd = app.add_subcommand("pi-wedge", "Rational homotopy ranks of a wedge of spheres");
  wedge_cmd->add_option("--dims", dims, "comma-separated sphere dimensions, e.g. 3,3")->required();
  wedge_cmd->add_option("--q-max", q_max, "largest degree")->required()->check(CLI::PositiveNumber);
  wedge_cmd->add_option("--loop-t", loop_t, "also report Omega of the t-fold product")
      ->check(CLI::PositiveNumber);
  wedge_cmd->callback([&] {
    job = [&] {
      json r = json::object();
      const int q = cap_degree(q_max, max_degree_from_env(), r);
      const hilton::SphereWedge w(parse_int_list(dims, "dims"));
      r["wedge"] = table_json(hilton::wedge_pi_ranks(w, q));
      if (loop_t > 0) r["looped"] = table_json(hilton::looped_product_ranks(w, loop_t, q));
      return r;
    };
  });

  // tower
  std::int64_t n = 0, k = 0, j = 0, conn = 0;
  std::string query;
  auto* tower_cmd = app.add_subcommand("tower", "Connectivity and convergence formulas");
  tower_cmd->add_option("--n", n, "ambient dimension")->required();
  tower_cmd->add_option("--k", k, "CW dimension bound")->required();
  tower_cmd->add_option("--j", j, "tower stage");
  tower_cmd->add_option("--conn", conn, "connectivity of dP -> P (codim)");
  tower_cmd->add_option("query", query, "phi | stage | converge | obstruction-degree | codim")
      ->required()
      ->check(CLI::IsMember({"phi", "stage", "converge", "obstruction-degree", "codim"}));
  tower_cmd->callback([&] {
    if (query != "codim" && tower_cmd->count("--j") == 0)
      throw CLI::RequiredError("--j");
    if (query == "codim" && tower_cmd->count("--conn") == 0)
      throw CLI::RequiredError("--conn");
    job = [&]() -> json {
      if (query == "phi") return connectivity_json(tower::phi_connectivity(n, k, j));
      if (query == "stage") return connectivity_json(tower::stage_map_connectivity(n, k, j));
      if (query == "converge") return json{{"value", tower::convergence_check(n, k, j)}};
      if (query == "obstruction-degree") return json{{"value", tower::obstruction_degree(n, j)}};
      const auto v = tower::codim_check(conn, k, n);
      if (v == tower::CodimVerdict::NotApplicable) {
        failure = ErrorCode::NotApplicable;
      }
      return json{{"value", codim_name(v)}};
    };
  });

  // layer / obstruction
  std::string betti;
  std::int64_t points = 0;
  std::optional<int> layer_q_min, layer_q_max;
  auto* layer_cmd = app.add_subcommand("layer", "Unequivariant rank profile of a tower layer");
  layer_cmd->add_option("--n", n, "ambient dimension")->required();
  layer_cmd->add_option("--j", j, "tower stage")->required();
  auto* layer_betti = layer_cmd->add_option("--betti", betti, "Betti numbers, e.g. 0:1,2:1");
  auto* layer_t = layer_cmd->add_option("--t", points, "P is t points times a disk");
  layer_betti->excludes(layer_t);
  layer_cmd->add_option("--k", k, "dimension bound for --betti");
  layer_cmd->add_option("--q-min", layer_q_min, "lowest degree");
  layer_cmd->add_option("--q-max", layer_q_max, "highest degree");

  auto make_betti = [&](CLI::App* cmd) {
    std::map<int, BigInt> b = parse_betti(betti);
    int bound = b.empty() ? 0 : b.rbegin()->first;
    if (cmd->count("--k")) bound = static_cast<int>(k);
    return tower::BettiVector(std::move(b), bound);
  };

  layer_cmd->callback([&] {
    if (layer_cmd->count("--betti") + layer_cmd->count("--t") == 0)
      throw CLI::RequiredError("--betti or --t");
    job = [&] {
      json r = json::object();
      const auto b = layer_cmd->count("--t") ? tower::BettiVector::points(points) : make_betti(layer_cmd);
      std::optional<std::pair<int, int>> range;
      if (layer_q_min || layer_q_max) {
        const auto dflt = tower::layer_profile(b, n, j).table;
        int hi = layer_q_max.value_or(dflt.q_max());
        const int lo = layer_q_min.value_or(dflt.q_min());
        hi = cap_degree(hi, max_degree_from_env(), r);
        range = std::pair{lo, hi};
      }
      const auto prof = tower::layer_profile(b, n, j, range);
      r["top_degree"] = prof.top_degree;
      r["bound"] = prof.upper_bound ? "UPPER_BOUND" : "EXACT";
      r["layer"] = table_json(prof.table);
      return r;
    };
  });

  auto* obstruction_cmd = app.add_subcommand("obstruction", "Degree and rank of the obstruction group");
  obstruction_cmd->add_option("--n", n, "ambient dimension")->required();
  obstruction_cmd->add_option("--j", j, "tower stage")->required();
  obstruction_cmd->add_option("--betti", betti, "Betti numbers, e.g. 0:1,2:1")->required();
  obstruction_cmd->add_option("--k", k, "dimension bound");
  obstruction_cmd->callback([&] {
    job = [&] {
      const auto b = make_betti(obstruction_cmd);
      return json{{"degree", tower::obstruction_degree(n, j)},
                  {"rank", io::to_json(tower::obstruction_group_rank(b, n, j))}};
    };
  });

  // compare
  auto* compare_cmd = app.add_subcommand("compare", "Connectivities of the comparison maps");
  compare_cmd->add_option("--n", n, "ambient dimension")->required();
  compare_cmd->add_option("--k", k, "CW dimension bound")->required();
  compare_cmd->add_option("--j", j, "tower stage")->required();
  compare_cmd->callback([&] {
    job = [&] {
      const auto c = tower::comparison_connectivities(n, k, j);
      json r{{"pt", c.pt}, {"decompression", c.decompression}, {"a", c.a}};
      if (c.b_raw) {
        r["b_raw"] = *c.b_raw;
        r["b"] = *c.b;
        r["e"] = *c.e;
      }
      return r;
    };
  });

  // disk-links
  std::int64_t t = 0, m = 0;
  auto* disk_cmd = app.add_subcommand("disk-links", "Invariants of embeddings of D^n x T in D^n");
  disk_cmd->add_option("--n", n, "ambient dimension")->required();
  disk_cmd->add_option("--t", t, "|T|")->required();
  disk_cmd->add_option("--m", m, "degree index for ses");
  disk_cmd->add_option("query", query, "pi0 | pi1 | ses")
      ->required()
      ->check(CLI::IsMember({"pi0", "pi1", "ses"}));
  disk_cmd->callback([&] {
    if (query == "ses" && disk_cmd->count("--m") == 0) throw CLI::RequiredError("--m");
    job = [&]() -> json {
      if (n < 3) throw Error(ErrorCode::OutOfRange, "n: must be >= 3");
      if (query == "pi0") return json{{"value", io::to_json(disklinks::pi0_cardinality(t))}};
      if (query == "pi1") {
        const auto grp = disklinks::pi1_description(t);
        return json{{"group", grp.str()}, {"order", io::to_json(grp.order())}};
      }
      const auto rep = disklinks::ses_rank_report(n, t, m);
      json r{{"m", rep.m},
             {"rank_b", io::to_json(rep.rank_b)},
             {"rank_c", io::to_json(rep.rank_c)},
             {"upper_odd", io::to_json(rep.upper_odd)},
             {"upper_even", io::to_json(rep.upper_even)},
             {"euler_relation", io::to_json(rep.euler_relation)},
             {"exact", rep.exact()}};
      if (rep.exact()) {
        r["exact_odd"] = io::to_json(*rep.exact_odd);
        r["exact_even"] = io::to_json(*rep.exact_even);
      }
      return r;
    };
  });

  std::vector<const char*> argv{"towercalc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  }

  const bool structured = format == "structured";
  try {
    json result = job();
    emit(result, structured, out);
    if (failure) {
      err << error_name(*failure) << "\n";
      return kDomainError;
    }
    return kOk;
  } catch (const Error& e) {
    const std::string name(error_name(e.code()));
    if (structured)
      out << json{{"error", name}, {"message", e.what()}}.dump(2) << "\n";
    else
      out << name << ": " << e.what() << "\n";
    err << name << ": " << e.what() << "\n";
    return kDomainError;
  }
}

}  // namespace towercalc::cli
