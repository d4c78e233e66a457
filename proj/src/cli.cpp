#include "ils/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "ils/constructions.hpp"
#include "ils/decide.hpp"
#include "ils/json_io.hpp"
#include "ils/necessary.hpp"
#include "ils/oracle.hpp"
#include "ils/outline.hpp"
#include "ils/solver.hpp"

namespace ils {

namespace {

using nlohmann::json;

json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw JsonError("option \"--in\": cannot open file \"" + path + "\"");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw JsonError("option \"--in\": invalid JSON in \"" + path + "\": " + e.what());
  }
}

long long env_budget(long long fallback) {
  const char* s = std::getenv("ILS_NODE_BUDGET");
  if (!s || !*s) return fallback;
  std::string v(s);
  if (v.size() > 18 || v.find_first_not_of("0123456789") != std::string::npos || v == "0")
    throw JsonError("environment \"ILS_NODE_BUDGET\": expected a positive integer, got \"" +
                    v + "\"");
  return std::stoll(v);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw JsonError("option \"--out\": cannot write file \"" + out_path + "\"");
  f << text;
}

std::string grid_text(const Grid& g) {
  const int n = static_cast<int>(g.size());
  const size_t width = std::to_string(n).size();
  std::ostringstream os;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j) os << ' ';
      std::string cell = g[i][j] == kEmpty ? "." : std::to_string(g[i][j]);
      os << std::string(width - std::min(width, cell.size()), ' ') << cell;
    }
    os << '\n';
  }
  return os.str();
}

std::string set_text(const std::vector<int>& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

std::string certificate_text(const ExistenceVerdict& v) {
  if (v.violation) {
    const Violation& w = *v.violation;
    return "certificate A=" + set_text(w.A) + " B=" + set_text(w.B) + " C=" + set_text(w.C) +
           " D=" + set_text(w.D) + " lhs=" + std::to_string(w.lhs) +
           " rhs=" + std::to_string(w.rhs);
  }
  return v.citation;
}

Parts sorted_parts(const std::string& csv, const std::string& flag) {
  Parts parts = parse_parts(csv, flag);
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return parts;
}

int sum_of(const Parts& parts) { return std::accumulate(parts.begin(), parts.end(), 0); }

int do_construct(const std::string& parts_csv, int order, const std::string& out,
                 const std::string& format) {
  Parts parts = sorted_parts(parts_csv, "--parts");
  long long budget = env_budget(10'000'000);
  ExistenceVerdict v = decide(parts, order, 7, budget);
  if (v.status == ExistenceVerdict::Status::Exists) {
    const Grid& w = *v.witness;
    emit(format == "grid" ? grid_text(w) : canonical_dump(square_to_json(w)), out);
    return 0;
  }
  std::cout << canonical_dump(verdict_to_json(v, parts, order));
  const char* head =
      v.status == ExistenceVerdict::Status::NotExists ? "infeasible: " : "unresolved: ";
  std::cerr << head << "ILS(" << order << "; " << parts_csv << ") — " << certificate_text(v)
            << "\n";
  return 2;
}

int do_verify(const std::string& in, const std::string& parts_csv) {
  json j = read_json_file(in);
  Grid g = square_from_json(j);
  Parts parts = parse_parts(parts_csv, "--parts");
  if (sum_of(parts) > static_cast<int>(g.size()))
    throw JsonError("option \"--parts\": total exceeds the square's order");
  IlsReport rep = verify_ils(g, parts);
  json out;
  out["ok"] = rep.ok;
  if (!rep.ok) {
    out["failed_block"] = rep.failed_block;
    out["detail"] = rep.detail;
  }
  std::cout << canonical_dump(out);
  if (!rep.ok) std::cerr << "verification failed: " << rep.detail << "\n";
  return rep.ok ? 0 : 1;
}

int do_decide(const std::string& parts_csv, int order, int oracle_bound, long long budget) {
  Parts parts = sorted_parts(parts_csv, "--parts");
  if (budget < 0) budget = env_budget(10'000'000);
  ExistenceVerdict v = decide(parts, order, oracle_bound, budget);
  std::cout << canonical_dump(verdict_to_json(v, parts, order));
  return 0;
}

int do_reduce(const std::string& in, const std::string& p_csv, const std::string& q_csv,
              const std::string& r_csv) {
  json j = read_json_file(in);
  Grid g = square_from_json(j);
  const int n = static_cast<int>(g.size());
  Parts p = parse_parts(p_csv, "--p");
  Parts q = q_csv.empty() ? p : parse_parts(q_csv, "--q");
  Parts r = r_csv.empty() ? p : parse_parts(r_csv, "--r");
  const struct {
    const char* flag;
    const Parts* parts;
  } axes[] = {{"--p", &p}, {"--q", &q}, {"--r", &r}};
  for (const auto& ax : axes)
    if (sum_of(*ax.parts) != n)
      throw JsonError("option \"" + std::string(ax.flag) + "\": parts sum to " +
                      std::to_string(sum_of(*ax.parts)) + " but the square has order " +
                      std::to_string(n));
  if (auto issue = validate_latin(g))
    throw JsonError("field \"grid\": not latin: " + issue->what);
  Outline o = reduce_modulo(g, p, q, r);
  std::cout << canonical_dump(outline_to_json(o));
  return 0;
}

int do_lift(const std::string& in) {
  json j = read_json_file(in);
  Outline o = outline_from_json(j);
  auto errs = validate_outline(o);
  if (!errs.empty())
    throw JsonError("field \"counts\": not a valid outline: " + errs.front());
  Grid g = lift(o);
  std::cout << canonical_dump(square_to_json(g));
  return 0;
}

int do_search(const std::string& parts_csv, int order, long long budget) {
  Parts parts = sorted_parts(parts_csv, "--parts");
  if (budget < 0) budget = env_budget(1'000'000'000);
  OracleResult r = brute_force_ils(parts, order, budget);
  std::cout << canonical_dump(oracle_to_json(r));
  return 0;
}

int do_check(const std::string& parts_csv, int order) {
  Parts parts = sorted_parts(parts_csv, "--parts");
  if (sum_of(parts) > order)
    throw JsonError("option \"--parts\": total exceeds --order");
  auto viol = scan_necessary(parts, order);
  json out;
  out["ok"] = !viol.has_value();
  if (viol) out["certificate"] = violation_to_json(*viol);
  std::cout << canonical_dump(out);
  if (viol) {
    ExistenceVerdict v;
    v.violation = viol;
    std::cerr << "violation: " << certificate_text(v) << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"latin squares with disjoint diagonal subsquares: construct, verify, decide"};
  app.require_subcommand(1);

  std::string c_parts, c_out, c_format = "json";
  int c_order = 0;
  auto* sc_construct =
      app.add_subcommand("construct", "build a witness square or report a certificate");
  sc_construct->add_option("--parts", c_parts, "comma-separated subsquare orders")->required();
  sc_construct->add_option("--order", c_order, "order of the square")
      ->required()
      ->check(CLI::PositiveNumber);
  sc_construct->add_option("--out", c_out, "write the witness to this file instead of stdout");
  sc_construct->add_option("--format", c_format, "witness format")
      ->check(CLI::IsMember({"json", "grid"}));

  std::string v_in, v_parts;
  auto* sc_verify = app.add_subcommand("verify", "check a square file against subsquare parts");
  sc_verify->add_option("--in", v_in, "square JSON file")->required();
  sc_verify->add_option("--parts", v_parts, "comma-separated subsquare orders")->required();

  std::string d_parts;
  int d_order = 0, d_oracle_bound = 7;
  long long d_budget = -1;
  auto* sc_decide = app.add_subcommand("decide", "existence verdict with witness or certificate");
  sc_decide->add_option("--parts", d_parts, "comma-separated subsquare orders")->required();
  sc_decide->add_option("--order", d_order, "order of the square")
      ->required()
      ->check(CLI::PositiveNumber);
  sc_decide->add_option("--oracle-bound", d_oracle_bound,
                        "largest order handed to the exhaustive search (default 7)");
  sc_decide->add_option("--budget", d_budget, "search node budget (default ILS_NODE_BUDGET)");

  std::string r_in, r_p, r_q, r_r;
  auto* sc_reduce = app.add_subcommand("reduce", "amalgamate a square into an outline");
  sc_reduce->add_option("--in", r_in, "square JSON file")->required();
  sc_reduce->add_option("--p", r_p, "row partition")->required();
  sc_reduce->add_option("--q", r_q, "column partition (default: --p)");
  sc_reduce->add_option("--r", r_r, "symbol partition (default: --p)");

  std::string l_in;
  auto* sc_lift = app.add_subcommand("lift", "realize an outline file as a latin square");
  sc_lift->add_option("--in", l_in, "outline JSON file")->required();

  std::string s_parts;
  int s_order = 0;
  long long s_budget = -1;
  auto* sc_search = app.add_subcommand("search", "run the exhaustive backtracking oracle");
  sc_search->add_option("--parts", s_parts, "comma-separated subsquare orders")->required();
  sc_search->add_option("--order", s_order, "order of the square")
      ->required()
      ->check(CLI::PositiveNumber);
  sc_search->add_option("--budget", s_budget, "search node budget (default ILS_NODE_BUDGET)");

  std::string k_parts;
  int k_order = 0;
  auto* sc_check = app.add_subcommand("check", "scan the necessary condition for a violation");
  sc_check->add_option("--parts", k_parts, "comma-separated subsquare orders")->required();
  sc_check->add_option("--order", k_order, "order of the square")
      ->required()
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 64;
  }

  try {
    if (sc_construct->parsed()) return do_construct(c_parts, c_order, c_out, c_format);
    if (sc_verify->parsed()) return do_verify(v_in, v_parts);
    if (sc_decide->parsed()) return do_decide(d_parts, d_order, d_oracle_bound, d_budget);
    if (sc_reduce->parsed()) return do_reduce(r_in, r_p, r_q, r_r);
    if (sc_lift->parsed()) return do_lift(l_in);
    if (sc_search->parsed()) return do_search(s_parts, s_order, s_budget);
    if (sc_check->parsed()) return do_check(k_parts, k_order);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 64;
  } catch (const Infeasible& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 2;
  } catch (const Exhausted& e) {
    std::cerr << "unresolved: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace ils
