// annuli: analyze curve files, run the catalog, query the delta oracle.
#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "annuli/io.hpp"

using namespace annuli;

namespace {

constexpr int kEmbedding = 0, kError = 1, kInvalid = 2, kNotEmbedding = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Err::ParseError, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Err::ParseError, "cannot write " + path);
  out << text;
}

// "3", "-4..4"
std::pair<long, long> parse_range(const std::string& s) {
  auto pos = s.find("..");
  try {
    size_t used = 0;
    if (pos == std::string::npos) {
      long v = std::stol(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return {v, v};
    }
    std::string a = s.substr(0, pos), b = s.substr(pos + 2);
    long lo = std::stol(a, &used);
    if (used != a.size()) throw std::invalid_argument(s);
    long hi = std::stol(b, &used);
    if (used != b.size()) throw std::invalid_argument(s);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw Error(Err::ExcludedParams, "bad range \"" + s + "\" (use N or A..B)");
  }
}

struct CatalogArgs {
  std::string series;
  std::map<std::string, std::string> rawRanges;
  int jobs = 1;
  std::string json, out;
};

std::map<std::string, std::pair<long, long>> ranges_of(const CatalogArgs& a) {
  std::map<std::string, std::pair<long, long>> r;
  for (const auto& [k, v] : a.rawRanges)
    if (!v.empty()) r[k] = parse_range(v);
  return r;
}

// ids for the selection; explicit ranges keep excluded points so they can be reported
std::vector<SeriesId> select_ids(const CatalogArgs& a) {
  auto ranges = ranges_of(a);
  if (a.series.empty()) {
    if (!ranges.empty()) throw Error(Err::ExcludedParams, "parameter ranges need --series");
    return default_grid();
  }
  std::vector<SeriesId> ids;
  for (char letter : a.series) {
    if (letter == ',') continue;
    const FamilyInfo& f = family(letter);
    std::map<std::string, std::pair<long, long>> mine;
    for (const auto& pr : f.params)
      if (ranges.count(pr.name)) mine[pr.name] = ranges[pr.name];
    if (a.series.size() == 1)
      mine = ranges;  // unknown names are reported by series_grid
    for (auto& id : series_grid(letter, mine, !ranges.empty())) ids.push_back(std::move(id));
  }
  return ids;
}

int cmd_analyze(const std::string& file, const std::string& jsonOut) {
  Curve c = parse_curve_file(read_file(file));
  Verdict v;
  Json rep = analysis_report(c, &v);
  std::string text = rep.dump(2) + "\n";
  if (jsonOut.empty()) {
    std::cout << text;
  } else {
    write_file(jsonOut, text);
    std::cout << "verdict: " << (v.embedding ? "Embedding" : "NotEmbedding");
    if (!v.reason.empty()) std::cout << " (" << v.reason << ")";
    std::cout << "\n";
    if (v.ledger) {
      std::cout << "ledger: " << v.ledger->summary() << (v.ledger->balanced ? " balanced" : " unbalanced") << "\n";
      for (const auto& pa : v.ledger->finite)
        std::cout << "singularity: " << pa.label << " mu=" << pa.mu << " at " << poly_str(pa.factor) << "\n";
    }
    if (v.inj.witness && v.inj.witness->verified) std::cout << "witness: v-factor " << poly_str(v.inj.witness->vFactor, "v") << "\n";
  }
  return v.embedding ? kEmbedding : kNotEmbedding;
}

int cmd_list(const CatalogArgs& a) {
  Json all = Json::array();
  std::ostringstream os;
  for (const auto& f : families()) {
    if (!a.series.empty() && a.series.find(f.letter) == std::string::npos) continue;
    Json fj;
    fj["series"] = std::string(1, f.letter);
    fj["formula"] = f.formula;
    fj["constraints"] = f.constraints;
    Json params = Json::array();
    os << f.letter << ": " << f.formula << "\n";
    if (!f.constraints.empty()) os << "   constraints: " << f.constraints << "\n";
    if (!f.params.empty()) {
      os << "   default grid:";
      for (const auto& p : f.params) {
        os << " " << p.name << "=" << p.lo << ".." << p.hi;
        params.push_back({{"name", p.name}, {"lo", p.lo}, {"hi", p.hi}});
      }
      os << "\n";
    }
    fj["params"] = params;
    Json ids = Json::array();
    os << "   ids:";
    for (const auto& id : series_grid(f.letter, {}, false)) {
      ids.push_back(id.str());
      os << " " << id.str();
    }
    os << "\n";
    fj["ids"] = ids;
    all.push_back(fj);
  }
  if (!a.json.empty()) write_file(a.json, all.dump(2) + "\n");
  std::cout << os.str();
  return kEmbedding;
}

std::string file_name(const SeriesId& id) {
  std::string s(1, id.letter);
  for (const auto& p : family(id.letter).params) s += "_" + p.name + std::to_string(id[p.name]);
  return s + ".json";
}

int cmd_gen(const CatalogArgs& a) {
  if (a.series.empty()) throw Error(Err::ExcludedParams, "gen needs --series");
  int made = 0, skipped = 0;
  auto ids = select_ids(a);
  for (const auto& id : ids) {
    Curve c;
    try {
      c = gen_series(id);
    } catch (const Error& e) {
      if (e.code() != Err::ExcludedParams) throw;
      std::cerr << "skipped " << e.what() << "\n";
      ++skipped;
      continue;
    }
    std::string text = emit_curve_file(c);
    if (a.out.empty()) {
      if (ids.size() > 1) std::cout << "// " << id.str() << "\n";
      std::cout << text;
    } else {
      std::filesystem::create_directories(a.out);
      std::string path = (std::filesystem::path(a.out) / file_name(id)).string();
      write_file(path, text);
      std::cout << id.str() << " -> " << path << "\n";
    }
    ++made;
  }
  return made == 0 && skipped > 0 ? kInvalid : kEmbedding;
}

int cmd_verify(const CatalogArgs& a) {
  auto ids = select_ids(a);
  auto results = check_all(ids, a.jobs);
  int pass = 0, fail = 0, skip = 0, err = 0, nonEmb = 0;
  Json all = Json::array();
  for (const auto& r : results) {
    all.push_back(r.report());
    if (r.skipped) {
      ++skip;
      std::cout << "SKIP " << r.skipReason << "\n";
      continue;
    }
    if (r.error) ++err;
    if (!r.error && !r.embedding) ++nonEmb;
    if (r.pass) {
      ++pass;
      std::cout << "PASS " << r.id.str() << "  " << r.ledger;
      for (const auto& l : r.labels) std::cout << " " << l;
      std::cout << "\n";
    } else {
      ++fail;
      std::cout << "FAIL " << r.id.str();
      for (const auto& f : r.failures) std::cout << "\n     " << f;
      std::cout << "\n";
    }
  }
  std::cout << "summary: " << results.size() << " instances, " << pass << " passed, " << fail << " failed, " << skip
            << " skipped\n";
  if (!a.json.empty()) write_file(a.json, all.dump(2) + "\n");
  if (err > 0) return kError;
  if (nonEmb > 0 || fail > 0) return kNotEmbedding;
  if (pass == 0 && skip > 0) return kInvalid;
  return kEmbedding;
}

int cmd_oracle(const std::string& file, const std::string& point) {
  Curve c = parse_curve_file(read_file(file));
  QPoly f = parse_factor(point, c.field());
  Profile pr = exponent_profile(c);
  TruncationPolicy tp = TruncationPolicy::for_profile(pr);
  // a conductor near 2 delta_max is typical; the bound doubles when it is not reached
  int start = int(std::max<long>(16, two_delta_max(pr) + 8));
  auto results = on_branches(f, [&](const CtxPtr<Scalar>& ctx) {
    Res s = Res::gen(ctx);
    for (int N = start;; N *= 2) {
      try {
        return delta_semigroup_oracle<Res>(taylor_at(c.x, s, N), taylor_at(c.y, s, N), N);
      } catch (const Error& e) {
        if (e.code() != Err::BoundTooSmall || N >= tp.cap) throw;
      }
    }
  });
  auto pts = analyze_point(c, f, true, tp);
  for (const auto& b : results) {
    std::cout << "point " << poly_str(b.modulus) << ": delta " << b.value;
    for (const auto& pa : pts)
      if (pa.factor == b.modulus) std::cout << " (mu from pairs " << pa.mu << ", " << pa.label << ")";
    std::cout << "\n";
  }
  return kEmbedding;
}

int code_for(const Error& e) {
  switch (e.code()) {
    case Err::ExcludedParams: return kInvalid;
    default: return kError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certify algebraic embeddings of C* into C^2"};
  app.require_subcommand(1);

  std::string file, jsonOut;
  auto* analyze = app.add_subcommand("analyze", "full report for a curve file");
  analyze->add_option("file", file, "curve file")->required();
  analyze->add_option("--json", jsonOut, "write the JSON report here instead of stdout");

  CatalogArgs ca;
  auto* catalog = app.add_subcommand("catalog", "catalog series");
  catalog->require_subcommand(1);
  auto add_selectors = [&](CLI::App* sub, bool withRanges) {
    sub->add_option("--series", ca.series, "series letters, e.g. b or a,c");
    if (withRanges)
      for (const char* p : {"m", "n", "k", "l", "p"})
        sub->add_option(std::string("--") + p, ca.rawRanges[p], "value or range A..B");
    sub->add_option("--json", ca.json, "write a JSON report");
  };
  auto* list = catalog->add_subcommand("list", "series, constraints and default grids");
  add_selectors(list, false);
  auto* gen = catalog->add_subcommand("gen", "write curve files");
  add_selectors(gen, true);
  gen->add_option("--out", ca.out, "directory for the files (default: stdout)");
  auto* verify = catalog->add_subcommand("verify", "certify a grid");
  add_selectors(verify, true);
  verify->add_option("--jobs", ca.jobs, "worker threads")->check(CLI::Range(1, 256));

  std::string point;
  auto* oracle = app.add_subcommand("oracle", "debugging oracles");
  oracle->require_subcommand(1);
  auto* delta = oracle->add_subcommand("delta", "value-semigroup delta at a point");
  delta->add_option("file", file, "curve file")->required();
  delta->add_option("--point", point, "factor in t, or a value a for t - a")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kInvalid;
  }

  const char* ctx = "annuli";
  try {
    if (*analyze) return cmd_analyze(file, jsonOut);
    if (*list) return cmd_list(ca);
    if (*gen) return cmd_gen(ca);
    if (*verify) return cmd_verify(ca);
    if (*delta) return cmd_oracle(file, point);
  } catch (const Error& e) {
    std::cerr << ctx << ": " << e.what() << "\n";
    return code_for(e);
  } catch (const std::exception& e) {
    std::cerr << ctx << ": " << e.what() << "\n";
    return kError;
  }
  return kError;
}
