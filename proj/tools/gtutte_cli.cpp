// gtutte: command-line front end for the gtutte library.
//
//   gtutte [--format text|json|csv] [--max-n N] [--seed S] [--unsafe] <command> ...
//
// Exit status: 0 success, 1 a verification or span check failed, 2 usage.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "gtutte/ginv.hpp"
#include "gtutte/io.hpp"
#include "gtutte/linbases.hpp"
#include "gtutte/matroid.hpp"
#include "gtutte/tutte.hpp"
#include "gtutte/verify.hpp"

using namespace gtutte;

namespace {

constexpr int kPermutationLimit = 9;
constexpr int kSubsetLimit = 20;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string format = "text";
  int max_n = -1;
  std::uint64_t seed = 20240601;
  bool unsafe = false;
};

struct Matroid {
  std::string text;
  std::unique_ptr<RankOracle> oracle;
  std::optional<BitSeq> seq;  // set for freedom and uniform descriptors
};

BitSeq parse_bits(const std::string& token) {
  try {
    return BitSeq::parse(token);
  } catch (const std::exception&) {
    throw UsageError("invalid bit sequence '" + token + "'");
  }
}

int parse_count(const std::string& token) {
  std::size_t used = 0;
  int v = -1;
  try {
    v = std::stoi(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size() || v < 0) throw UsageError("invalid count '" + token + "'");
  return v;
}

Matroid parse_matroid(const std::string& desc) {
  const auto colon = desc.find(':');
  if (colon == std::string::npos) throw UsageError("malformed matroid descriptor '" + desc + "'");
  const std::string kind = desc.substr(0, colon);
  const std::string arg = desc.substr(colon + 1);
  Matroid m;
  m.text = desc;
  if (kind == "freedom") {
    m.seq = parse_bits(arg);
    if (m.seq->size() > kMaxGroundSet) throw UsageError("sequence longer than " + std::to_string(kMaxGroundSet));
    m.oracle = std::make_unique<FreedomMatroid>(*m.seq);
  } else if (kind == "uniform") {
    const auto comma = arg.find(',');
    if (comma == std::string::npos) throw UsageError("expected uniform:<r>,<n>, got '" + desc + "'");
    const int r = parse_count(arg.substr(0, comma));
    const int n = parse_count(arg.substr(comma + 1));
    if (r > n || n > kMaxGroundSet) throw UsageError("invalid uniform parameters '" + arg + "'");
    m.seq = BitSeq::block(1, r) + BitSeq::block(0, n - r);
    m.oracle = std::make_unique<FreedomMatroid>(*m.seq);
  } else if (kind == "bases") {
    try {
      m.oracle = std::make_unique<BasisListMatroid>(matroid_from_json(Json::parse(read_file(arg))));
    } catch (const std::exception& e) {
      throw UsageError("cannot load '" + arg + "': " + e.what());
    }
  } else {
    throw UsageError("unknown matroid kind '" + kind + "'");
  }
  return m;
}

void guard(const Globals& g, int n, int limit, const std::string& what) {
  if (g.max_n >= 0 && g.max_n < limit) limit = g.max_n;
  if (n > limit && !g.unsafe) {
    throw UsageError(what + " is limited to n <= " + std::to_string(limit) + " (n = " + std::to_string(n) +
                     "); pass --unsafe to override");
  }
}

void print_json(Json j) {
  j["schema_version"] = 1;
  std::cout << j.dump(2) << "\n";
}

std::string poly_csv(const BiPoly& p) {
  std::string out = "x_exp,y_exp,coefficient\n";
  for (const auto& [m, c] : p.terms()) {
    out += std::to_string(m.x_exp) + "," + std::to_string(m.y_exp) + "," + to_string(c) + "\n";
  }
  return out;
}

int cmd_tutte(const Globals& g, const std::string& desc) {
  const Matroid m = parse_matroid(desc);
  const int n = m.oracle->size();
  struct RouteResult {
    Route route;
    BiPoly poly;
  };
  std::vector<RouteResult> results;
  if (m.seq) {
    results.push_back({Route::DescentTree, tutte_freedom(*m.seq).poly});
    const IrreducibleKind kind = classify_irreducible(*m.seq);
    if (kind.join_form) {
      const auto [a, b, c, d] = *kind.join_form;
      results.push_back({Route::DirectSum, tutte_direct_sum_form(a, b, c, d).poly});
    }
    if (kind.meet_form && m.seq->weight() > 0) {
      const auto [a, b, c, d] = *kind.meet_form;
      results.push_back({Route::MeetIrreducible, tutte_meet_irr(a, b, c, d).poly});
    }
    if (n <= kSubsetLimit || g.unsafe) results.push_back({Route::Oracle, tutte_oracle(*m.oracle).poly});
  } else {
    guard(g, n, kSubsetLimit, "the corank-nullity sum");
    results.push_back({Route::Oracle, tutte_oracle(*m.oracle).poly});
  }
  const BiPoly& t = results.front().poly;
  bool agree = true;
  for (const auto& r : results) agree = agree && r.poly == t;

  if (g.format == "json") {
    Json routes = Json::array();
    for (const auto& r : results) routes.push_back({{"route", route_name(r.route)}, {"agrees", r.poly == t}});
    print_json({{"matroid", m.text}, {"n", n}, {"r", m.oracle->rank()}, {"tutte", to_json(t)},
                {"text", to_text(t)}, {"routes", routes}, {"agree", agree}});
  } else if (g.format == "csv") {
    std::cout << poly_csv(t);
  } else {
    std::cout << to_text(t) << "\n";
    if (results.size() > 1) {
      std::string names;
      for (const auto& r : results) names += (names.empty() ? "" : ", ") + route_name(r.route);
      std::cout << "routes: " << names << (agree ? " (agree)" : " (DISAGREE)") << "\n";
    }
  }
  return agree ? 0 : 1;
}

int cmd_ginv(const Globals& g, const std::string& desc) {
  const Matroid m = parse_matroid(desc);
  guard(g, m.oracle->size(), kPermutationLimit, "the permutation sweep");
  const GInv v = g_invariant(*m.oracle);
  if (g.format == "json") {
    print_json(to_json(v));
  } else if (g.format == "csv") {
    std::cout << "sequence,coefficient\n";
    for (const auto& [s, c] : v.coeffs) std::cout << s.str() << "," << to_string(c) << "\n";
  } else {
    std::string line;
    for (const auto& [s, c] : v.coeffs) line += (line.empty() ? "" : ", ") + ("[" + s.str() + "]: " + to_string(c));
    std::cout << line << "\n";
  }
  return 0;
}

int cmd_sp(const Globals& g, const std::string& arg) {
  GInv v;
  std::string symbol = arg;
  if (symbol.size() >= 2 && symbol.front() == '[' && symbol.back() == ']') symbol = symbol.substr(1, symbol.size() - 2);
  if (!symbol.empty() && symbol.find_first_not_of("01") == std::string::npos) {
    v = GInv::symbol(BitSeq::parse(symbol));
  } else if (std::filesystem::exists(arg)) {
    try {
      v = ginv_from_json(Json::parse(read_file(arg)));
    } catch (const std::exception& e) {
      throw UsageError("cannot load '" + arg + "': " + e.what());
    }
  } else {
    throw UsageError("expected a symbol like [0101] or a G-invariant JSON file, got '" + arg + "'");
  }
  const BiPoly p = sp(v);
  if (g.format == "json") {
    print_json({{"n", v.n}, {"r", v.r}, {"sp", to_json(p)}, {"text", to_text(p)}, {"integral", p.is_integral()}});
  } else if (g.format == "csv") {
    std::cout << poly_csv(p);
  } else {
    std::cout << to_text(p) << "\n" << "integral: " << (p.is_integral() ? "yes" : "no") << "\n";
  }
  return 0;
}

BasisKind parse_kind(const std::string& kind) {
  if (kind == "join") return BasisKind::Join;
  if (kind == "meet") return BasisKind::Meet;
  throw UsageError("basis kind must be join or meet, got '" + kind + "'");
}

void check_nr(int n, int r) {
  if (n < 0 || r < 0 || r > n || n > BitSeq::kMaxLength) {
    throw UsageError("need 0 <= r <= n, got n = " + std::to_string(n) + ", r = " + std::to_string(r));
  }
}

int cmd_basis(const Globals& g, int n, int r, const std::string& kind_text, bool descending) {
  check_nr(n, r);
  std::vector<BitSeq> seqs = basis_sequences(n, r, parse_kind(kind_text));
  if (descending) std::reverse(seqs.begin(), seqs.end());
  if (g.format == "json") {
    Json items = Json::array();
    for (const auto& s : seqs) items.push_back({{"sequence", s.str()}, {"tutte", to_json(tutte_freedom(s).poly)}});
    print_json({{"n", n}, {"r", r}, {"kind", kind_text}, {"basis", items}});
  } else if (g.format == "csv") {
    std::cout << "sequence,tutte\n";
    for (const auto& s : seqs) std::cout << s.str() << ",\"" << to_text(tutte_freedom(s).poly) << "\"\n";
  } else {
    for (const auto& s : seqs) std::cout << s.str() << "  " << to_text(tutte_freedom(s).poly) << "\n";
  }
  return 0;
}

int cmd_express(const Globals& g, const std::string& input, std::optional<int> n_opt, std::optional<int> r_opt,
                const std::string& kind_text) {
  const BasisKind kind = parse_kind(kind_text);
  BiPoly p;
  int n = 0;
  int r = 0;
  if (input.rfind("freedom:", 0) == 0 || input.rfind("uniform:", 0) == 0 || input.rfind("bases:", 0) == 0) {
    const Matroid m = parse_matroid(input);
    n = m.oracle->size();
    r = m.oracle->rank();
    if (m.seq) {
      p = tutte_freedom(*m.seq).poly;
    } else {
      guard(g, n, kSubsetLimit, "the corank-nullity sum");
      p = tutte_oracle(*m.oracle).poly;
    }
  } else {
    if (!n_opt || !r_opt) throw UsageError("a polynomial needs --n and --r");
    n = *n_opt;
    r = *r_opt;
    std::string text = input;
    if (std::filesystem::exists(input)) text = read_file(input);
    try {
      const std::string trimmed = text.substr(0, text.find_last_not_of(" \n\r\t") + 1);
      p = !trimmed.empty() && trimmed.front() == '[' ? bipoly_from_json(Json::parse(trimmed)) : parse_bipoly(trimmed);
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
  }
  check_nr(n, r);
  const Expression e = express_in_basis(p, kind, n, r);
  bool integral = true;
  if (e.coords) {
    for (const auto& [s, c] : *e.coords) integral = integral && is_integer(c);
  }
  if (g.format == "json") {
    Json j = {{"n", n}, {"r", r}, {"kind", kind_text}, {"in_span", e.in_span()}};
    if (e.coords) {
      Json coords = Json::object();
      for (const auto& [s, c] : *e.coords) coords[s.str()] = to_string(c);
      j["coords"] = coords;
      j["integral"] = integral;
    } else {
      j["residual"] = to_json(e.residual);
    }
    print_json(j);
  } else if (g.format == "csv") {
    if (e.coords) {
      std::cout << "sequence,coefficient\n";
      for (const auto& [s, c] : *e.coords) std::cout << s.str() << "," << to_string(c) << "\n";
    } else {
      std::cout << "residual\n" << poly_csv(e.residual);
    }
  } else if (e.coords) {
    for (const auto& [s, c] : *e.coords) std::cout << s.str() << ": " << to_string(c) << "\n";
    std::cout << "exact: yes, integral: " << (integral ? "yes" : "no") << "\n";
  } else {
    std::cout << "not in span\nresidual: " << to_text(e.residual) << "\n";
  }
  return e.in_span() ? 0 : 1;
}

std::string aligned(const LabeledMatrix& m) {
  std::vector<std::vector<std::string>> cells;
  cells.push_back({""});
  for (const auto& c : m.col_labels) cells.back().push_back(c);
  for (std::size_t i = 0; i < m.matrix.rows(); ++i) {
    cells.push_back({m.row_labels[i]});
    for (std::size_t j = 0; j < m.matrix.cols(); ++j) cells.back().push_back(to_string(m.matrix(i, j)));
  }
  std::vector<std::size_t> width(cells.front().size(), 0);
  for (const auto& row : cells) {
    for (std::size_t j = 0; j < row.size(); ++j) width[j] = std::max(width[j], row[j].size());
  }
  std::string out;
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t j = 0; j < row.size(); ++j) {
      line += (j == 0 ? "" : "  ") + std::string(width[j] - row[j].size(), ' ') + row[j];
    }
    out += line + "\n";
  }
  return out;
}

int cmd_gamma(const Globals& g, int n, int r) {
  check_nr(n, r);
  if (r < 1 || r >= n) throw UsageError("gamma needs 1 <= r <= n - 1");
  const LabeledMatrix m = gamma_matrix(n, r);
  if (g.format == "json") {
    Json j = to_json(m);
    j["n"] = n;
    j["r"] = r;
    j["rank"] = rank(m.matrix);
    print_json(j);
  } else if (g.format == "csv") {
    std::cout << to_csv(m);
  } else {
    std::cout << aligned(m);
  }
  return 0;
}

std::string corners(const Interval2& iv) {
  return "T(F(" + iv.top().str() + ")) - T(F(" + iv.right().str() + ")) - T(F(" + iv.left().str() + ")) + T(F(" +
         iv.bottom().str() + "))";
}

std::string shown(const BitSeq& s) { return s.empty() ? "-" : s.str(); }

int cmd_relations(const Globals& g, int n, int r) {
  check_nr(n, r);
  if (r < 1 || r >= n) throw UsageError("relations needs 1 <= r <= n - 1");
  const std::vector<Relation> rels = relation_generators(n, r);
  std::vector<RatVector> vecs;
  bool all_hold = true;
  Json items = Json::array();
  for (const auto& rel : rels) {
    const bool holds = rel.lhs() == rel.rhs();
    all_hold = all_hold && holds;
    vecs.push_back(rel.vector());
    const Interval2& iv = rel.diamond;
    if (g.format == "json") {
      items.push_back({{"tau", to_string(rel.tau)},
                       {"upper", {rel.upper_bottom.str(), rel.upper_top.str()}},
                       {"diamond", {iv.bottom().str(), iv.left().str(), iv.right().str(), iv.top().str()}},
                       {"factors", {iv.prefix.str(), iv.middle.str(), iv.suffix.str()}},
                       {"holds", holds}});
    } else if (g.format == "csv") {
      if (items.empty()) {
        std::cout << "tau,upper_top,upper_bottom,top,right,left,bottom,holds\n";
        items.push_back(0);
      }
      std::cout << to_string(rel.tau) << "," << rel.upper_top.str() << "," << rel.upper_bottom.str() << ","
                << iv.top().str() << "," << iv.right().str() << "," << iv.left().str() << "," << iv.bottom().str()
                << "," << (holds ? "true" : "false") << "\n";
    } else {
      std::cout << to_string(rel.tau) << " * [T(F(" << rel.upper_top.str() << ")) - T(F(" << rel.upper_bottom.str()
                << "))] = " << corners(iv) << "   [" << shown(iv.prefix) << " | " << shown(iv.middle) << " | "
                << shown(iv.suffix) << "]" << (holds ? "" : "   FAILS") << "\n";
    }
  }
  const std::size_t total = enumerate(n, r).size();
  const std::size_t want = total - static_cast<std::size_t>(r) * (n - r) - 1;
  const std::size_t got = vecs.empty() ? 0 : rank(RatMatrix::from_columns(vecs, total));
  const bool ok = all_hold && got == want;
  if (g.format == "json") {
    print_json({{"n", n}, {"r", r}, {"relations", items},
                {"span_dimension", got}, {"expected_dimension", want}, {"ok", ok}});
  } else if (g.format == "text") {
    std::cout << "span dimension: " << got << " (expected " << want << ")\n";
  }
  return ok ? 0 : 1;
}

int cmd_verify(const Globals& g, const std::string& suite, int samples, const std::string& data_dir) {
  if (suite != "all") {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end()) {
      throw UsageError("unknown suite '" + suite + "'");
    }
  }
  SuiteOptions opts;
  opts.max_n = g.max_n;
  opts.seed = g.seed;
  opts.samples = samples;
  opts.data_dir = data_dir;
  const Report rep = run_suite(suite, opts);
  if (g.format == "json") {
    std::cout << to_json(rep).dump(2) << "\n";
  } else if (g.format == "csv") {
    std::cout << "check,pass,detail\n";
    for (const auto& c : rep.checks) {
      std::cout << "\"" << c.name << "\"," << (c.pass ? "true" : "false") << ",\"" << c.detail << "\"\n";
    }
  } else {
    for (const auto& c : rep.checks) {
      std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
    }
    std::cout << rep.suite << ": " << rep.checks.size() - rep.failures() << "/" << rep.checks.size() << " passed\n";
  }
  return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tutte polynomials, G-invariants and freedom matroids"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--max-n", g.max_n, "Upper bound on n for sweeps and verification suites");
  app.add_option("--seed", g.seed, "Seed for random matroid suites");
  app.add_flag("--unsafe", g.unsafe, "Lift the size guards");

  std::string desc;
  auto* tutte = app.add_subcommand("tutte", "Tutte polynomial of a matroid");
  tutte->add_option("matroid", desc, "freedom:<bits> | uniform:<r>,<n> | bases:<file.json>")->required();

  auto* ginv = app.add_subcommand("ginv", "G-invariant of a matroid");
  ginv->add_option("matroid", desc, "Matroid descriptor")->required();

  std::string sp_arg;
  auto* spc = app.add_subcommand("sp", "Tutte specialization of a symbol or G-invariant file");
  spc->add_option("input", sp_arg, "[bits] or a G-invariant JSON file")->required();

  int n = 0;
  int r = 0;
  std::string kind = "meet";
  bool descending = false;
  auto* basis = app.add_subcommand("basis", "Irreducible basis of the Tutte span");
  basis->add_option("n", n)->required();
  basis->add_option("r", r)->required();
  basis->add_option("--kind", kind, "join or meet");
  basis->add_flag("--descending", descending, "List in descending canonical order");

  std::string input;
  std::optional<int> en;
  std::optional<int> er;
  auto* express = app.add_subcommand("express", "Coordinates of a polynomial in an irreducible basis");
  express->add_option("input", input, "Matroid descriptor, polynomial text, or file")->required();
  express->add_option("--n", en);
  express->add_option("--r", er);
  express->add_option("--kind", kind, "join or meet");

  auto* gamma = app.add_subcommand("gamma", "Coefficient matrix of the join-irreducible basis");
  gamma->add_option("n", n)->required();
  gamma->add_option("r", r)->required();

  auto* relations = app.add_subcommand("relations", "Generating relations among freedom Tutte polynomials");
  relations->add_option("n", n)->required();
  relations->add_option("r", r)->required();

  std::string suite;
  int samples = -1;
  std::string data_dir;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "Suite name or all")->required();
  verify->add_option("--samples", samples, "Random sample count");
  verify->add_option("--data-dir", data_dir, "Directory with golden files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*tutte) return cmd_tutte(g, desc);
    if (*ginv) return cmd_ginv(g, desc);
    if (*spc) return cmd_sp(g, sp_arg);
    if (*basis) return cmd_basis(g, n, r, kind, descending);
    if (*express) return cmd_express(g, input, en, er, kind);
    if (*gamma) return cmd_gamma(g, n, r);
    if (*relations) return cmd_relations(g, n, r);
    if (*verify) return cmd_verify(g, suite, samples, data_dir);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
