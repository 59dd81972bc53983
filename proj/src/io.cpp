#include "annuli/io.hpp"

#include <atomic>
#include <cctype>
#include <chrono>
#include <sstream>
#include <thread>

namespace annuli {

namespace {

[[noreturn]] void parse_fail(const std::string& msg) { throw Error(Err::ParseError, msg); }

std::pair<long, long> line_col(const std::string& text, size_t byte) {
  long line = 1, col = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

mpq_class parse_rational(const std::string& s, const std::string& where) {
  static const std::string allowed = "0123456789-+/";
  if (s.empty() || s.find_first_not_of(allowed) != std::string::npos) parse_fail(where + ": bad rational \"" + s + "\"");
  std::string t = s[0] == '+' ? s.substr(1) : s;
  mpq_class q;
  if (q.set_str(t, 10) != 0) parse_fail(where + ": bad rational \"" + s + "\"");
  if (q.get_den() == 0) parse_fail(where + ": zero denominator");
  q.canonicalize();
  return q;
}

Laurent parse_component(const Json& arr, long d, const std::string& name) {
  if (!arr.is_array()) parse_fail(name + ": expected an array of [exponent, rational, surd] entries");
  Laurent f;
  std::map<long, bool> seen;
  for (size_t i = 0; i < arr.size(); ++i) {
    std::string where = name + "[" + std::to_string(i) + "]";
    const Json& e = arr[i];
    if (!e.is_array() || e.size() < 2 || e.size() > 3) parse_fail(where + ": expected [exponent, \"a\", \"b\"]");
    if (!e[0].is_number_integer()) parse_fail(where + ": exponent must be an integer");
    long k = e[0].get<long>();
    if (seen.count(k)) parse_fail(where + ": duplicate exponent " + std::to_string(k));
    seen[k] = true;
    auto part = [&](size_t j) -> mpq_class {
      if (j >= e.size()) return 0;
      if (e[j].is_string()) return parse_rational(e[j].get<std::string>(), where);
      if (e[j].is_number_integer()) return mpq_class(e[j].get<long>());
      parse_fail(where + ": coefficients must be exact strings");
    };
    mpq_class a = part(1), b = part(2);
    if (d == 1 && sgn(b) != 0) throw Error(Err::FieldMismatch, where + ": surd part over Q (d = 1)");
    if (sgn(a) == 0 && sgn(b) == 0) throw Error(Err::ZeroCoefficient, where + ": zero coefficient at t^" + std::to_string(k));
    f.set(int(k), d == 1 ? Scalar(a) : Scalar(a, b, d));
  }
  return f;
}

void emit_component(std::ostringstream& os, const Laurent& f, long d) {
  os << "[";
  bool first = true;
  for (const auto& [k, c] : f.terms()) {
    os << (first ? "\n    " : ",\n    ");
    first = false;
    std::string b = d == 1 ? "0" : c.b_str();
    os << "[" << k << ", " << Json(c.a_str()).dump() << ", " << Json(b).dump() << "]";
  }
  os << (first ? "]" : "\n  ]");
}

}  // namespace

Curve parse_curve_file(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [l, c] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string msg = e.what();
    size_t at = msg.find("column");
    at = at == std::string::npos ? std::string::npos : msg.find(": ", at);
    if (at != std::string::npos) msg = msg.substr(at + 2);
    parse_fail("line " + std::to_string(l) + ", column " + std::to_string(c) + ": " + msg);
  }
  if (!j.is_object()) parse_fail("top level must be an object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (it.key() != "field" && it.key() != "x" && it.key() != "y") parse_fail("unknown key \"" + it.key() + "\"");
  long d = 1;
  if (j.contains("field")) {
    const Json& f = j["field"];
    if (!f.is_object() || !f.contains("d") || !f["d"].is_number_integer()) parse_fail("field: expected {\"d\": integer}");
    d = f["d"].get<long>();
    if (d == 0 || !is_squarefree(d)) throw Error(Err::FieldMismatch, "field: d = " + std::to_string(d) + " is not squarefree");
  }
  if (!j.contains("x") || !j.contains("y")) parse_fail("both \"x\" and \"y\" are required");
  return {parse_component(j["x"], d, "x"), parse_component(j["y"], d, "y")};
}

std::string emit_curve_file(const Curve& c) {
  long d = c.field();
  std::ostringstream os;
  os << "{\n  \"field\": {\"d\": " << d << "},\n  \"x\": ";
  emit_component(os, c.x, d);
  os << ",\n  \"y\": ";
  emit_component(os, c.y, d);
  os << "\n}\n";
  return os.str();
}

QPoly parse_factor(const std::string& text, long d) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) parse_fail("empty factor");
  size_t i = 0;
  bool sawT = false;
  QPoly out;
  auto number = [&]() -> mpq_class {
    size_t j = i;
    while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/')) ++j;
    mpq_class q = parse_rational(s.substr(i, j - i), "factor");
    i = j;
    return q;
  };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i > 0) {
      parse_fail("factor: expected + or - at position " + std::to_string(i + 1));
    }
    Scalar coef(sign);
    bool any = false;
    while (i < s.size() && s[i] != '+' && s[i] != '-') {
      if (std::isdigit(static_cast<unsigned char>(s[i]))) {
        coef = coef * Scalar(number());
      } else if (s.compare(i, 5, "sqrt(") == 0) {
        size_t close = s.find(')', i);
        if (close == std::string::npos) parse_fail("factor: unclosed sqrt(");
        mpq_class r = parse_rational(s.substr(i + 5, close - i - 5), "factor");
        if (r.get_den() != 1 || r.get_num() != d) throw Error(Err::FieldMismatch, "factor: sqrt outside the curve field");
        coef = coef * Scalar::sqrt_of(d);
        i = close + 1;
      } else if (s[i] == 't') {
        ++i;
        int e = 1;
        if (i < s.size() && s[i] == '^') {
          ++i;
          size_t j = i;
          while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
          if (j == i) parse_fail("factor: missing exponent");
          e = std::stoi(s.substr(i, j - i));
          i = j;
        }
        out += QPoly::monomial(coef, e);
        coef = Scalar(0);
        sawT = true;
        any = true;
        if (i < s.size() && s[i] == '*') parse_fail("factor: write the coefficient before t");
        continue;
      } else if (s[i] == '*') {
        ++i;
        continue;
      } else {
        parse_fail(std::string("factor: unexpected '") + s[i] + "'");
      }
      any = true;
    }
    if (!any) parse_fail("factor: empty term");
    if (!coef.is_zero()) out += QPoly::constant(coef);
  }
  if (!sawT) out = QPoly::x() - out;  // bare value a: the factor t - a
  if (out.deg() < 1) parse_fail("factor must have positive degree");
  return monic(out);
}

// ---- reports ----

Json scalar_json(const Scalar& s) { return s.str(); }

namespace {

Json branch_json(const PuiseuxBranch& b) {
  Json j;
  j["base"] = b.baseX ? "x" : "y";
  j["e"] = b.e;
  j["lead"] = b.lead;
  Json pairs = Json::array();
  for (auto [m, n] : b.pairs) pairs.push_back({m, n});
  j["char_pairs"] = pairs;
  j["char_exponents"] = b.charExps;
  j["essential_zeros"] = b.essentialZeros;
  j["essential_coefficients"] = b.essentialCoeffs;
  j["truncation"] = b.truncation;
  return j;
}

Json point_json(const PointAnalysis& pa) {
  Json j;
  j["factor"] = poly_str(pa.factor);
  j["degree"] = pa.degree;
  j["label"] = pa.label;
  j["mu"] = pa.mu;
  j["two_delta"] = pa.mu;
  j["nu"] = pa.nu;
  j["ext_nu"] = pa.extNu;
  j["x_order"] = pa.xOrder;
  j["y_order"] = pa.yOrder;
  j["branch"] = branch_json(pa.branch);
  return j;
}

Json place_json(const PlaceData& pd, bool tangent) {
  Json j;
  j["branch"] = branch_json(pd.branch);
  j["branch_sum"] = pd.sigma;
  j["nu"] = pd.nu;
  if (!tangent) {
    j["index"] = pd.index;
    j["two_delta"] = pd.twoDelta;
  }
  return j;
}

Json profile_json(const Profile& pr) {
  Json j;
  j["p"] = pr.p();
  j["q"] = pr.q();
  j["r"] = pr.r();
  j["s"] = pr.s();
  j["p_prime"] = pr.pp();
  j["r_prime"] = pr.rp();
  return j;
}

std::string prim_name(const Primitivity& p) {
  switch (p.kind) {
    case Primitivity::Primitive: return "Primitive";
    case Primitivity::PowerCover: return "PowerCover";
    case Primitivity::Suspect: return "Suspect";
  }
  return "?";
}

}  // namespace

Json verdict_report(const Curve& c, const Verdict& v) {
  Json j;
  j["input"] = {{"field", c.field()}, {"x", c.x.str()}, {"y", c.y.str()}};
  j["primitivity"] = {{"kind", prim_name(v.prim)}, {"degree", v.prim.degree}};
  if (v.nf) {
    const Normalized& nf = *v.nf;
    Json moves = Json::array();
    for (const auto& m : nf.log) moves.push_back(m.str());
    j["normal_form"] = {{"x", nf.curve.x.str()}, {"y", nf.curve.y.str()}, {"moves", moves}};
    j["profile"] = profile_json(nf.profile);
    j["type"] = nf.type ? Json(type_name(*nf.type)) : Json(nullptr);
    Json alt = Json::array();
    for (auto t : nf.alternates) alt.push_back(type_name(t));
    j["alternate_types"] = alt;
    j["handsome"] = nf.handsome;
    j["sigma"] = nf.type ? Json(dim_curv(nf.profile, *nf.type)) : Json(nullptr);
  }
  if (v.ledger) {
    const Ledger& L = *v.ledger;
    Json pts = Json::array();
    for (const auto& pa : L.finite) pts.push_back(point_json(pa));
    j["singularities"] = pts;
    Json places;
    places["infinity"] = place_json(L.inf, L.tangent);
    places["zero"] = place_json(L.zero, L.tangent);
    if (L.tan) {
      const Tangency& T = *L.tan;
      Json pairs = Json::array();
      for (auto [w, vv] : T.commonPairs) pairs.push_back({w, vv});
      places["tangency"] = {{"intersection", T.I},        {"o_max", T.oMax},
                            {"coinciding_terms", T.u},    {"nu_tan", T.nuTan},
                            {"two_minus_index_sum", T.twoMinusIndexSum},
                            {"printed_X", T.printedX},    {"printed_third", T.printedThird},
                            {"leading_equal", T.leadingEqual}, {"common_pairs", pairs}};
    }
    j["places"] = places;
    Json led;
    led["summary"] = L.summary();
    led["two_delta_max"] = L.twoDeltaMax;
    led["finite_sum"] = L.finiteSum;
    led["two_delta_inf"] = L.twoDeltaInf;
    led["tangent"] = L.tangent;
    if (!L.tangent) led["index_sum"] = L.indexSum;
    led["balanced"] = L.balanced;
    led["E"] = L.E;
    led["reserve"] = L.reserve;
    j["ledger"] = led;
    j["regularity"] = {{"nu_inf", L.nuInf},
                       {"ext_nu_total", L.extNuTotal},
                       {"sigma", L.sigma},
                       {"margin", L.margin},
                       {"ok", L.regularityOK}};
  }
  if (v.prim.kind != Primitivity::PowerCover && !(v.nf && v.nf->shape == ShapeClass::NonProper)) {
    Json inj;
    inj["injective"] = v.inj.injective;
    inj["positive_dimensional"] = v.inj.positiveDimensional;
    inj["resultant_degree"] = v.inj.resultantDegree;
    inj["diagonal_ok"] = v.inj.diagonalOK;
    if (v.inj.witness) {
      const Witness& w = *v.inj.witness;
      Json uf = Json::array();
      for (const auto& f : w.uFactor) uf.push_back(poly_str(f, "u"));
      Json wj;
      wj["v_factor"] = poly_str(w.vFactor, "v");
      wj["u_factor"] = uf;
      if (w.u) wj["u"] = w.u->str();
      if (w.v) wj["v"] = w.v->str();
      wj["verified"] = w.verified;
      inj["witness"] = wj;
    }
    j["injectivity"] = inj;
  }
  j["verdict"] = v.embedding ? "Embedding" : "NotEmbedding";
  if (!v.reason.empty()) j["reason"] = v.reason;
  if (v.nf && v.ledger) {
    Json au = Json::array();
    for (const auto& a : estimates_audit(*v.nf, *v.ledger))
      au.push_back({{"name", a.name}, {"lhs", a.lhs}, {"rhs", a.rhs}, {"pass", a.pass}});
    j["audits"] = au;
  }
  return j;
}

Json analysis_report(const Curve& c, Verdict* out) {
  Verdict v = embedding_verdict(c);
  Json j = verdict_report(c, v);
  if (out) *out = std::move(v);
  return j;
}

// ---- catalog verification ----

InstanceCheck check_instance(const SeriesId& id) {
  InstanceCheck r;
  r.id = id;
  auto t0 = std::chrono::steady_clock::now();
  Curve c;
  try {
    c = gen_series(id);
  } catch (const Error& e) {
    if (e.code() != Err::ExcludedParams) throw;
    r.skipped = true;
    r.skipReason = e.what();
    return r;
  }
  auto fail = [&](const std::string& why) { r.failures.push_back(why); };
  Verdict v = embedding_verdict(c);
  r.embedding = v.embedding;
  if (v.prim.kind != Primitivity::Primitive) fail("not primitive");
  if (!v.embedding) fail("verdict NotEmbedding (" + v.reason + ")");
  if (!v.inj.diagonalOK) fail("singular parameters missing from the diagonal of the double-point system");
  if (!v.ledger) {
    fail("no type row fits the normal form");
  } else {
    const Ledger& L = *v.ledger;
    r.ledger = L.summary();
    r.twoDeltaMax = L.twoDeltaMax;
    for (const auto& pa : L.finite) r.labels.push_back(pa.label);
    if (!L.balanced) fail("ledger unbalanced: " + L.summary());
    if (!L.regularityOK) fail("regularity margin " + std::to_string(L.margin));
    for (const auto& a : estimates_audit(*v.nf, L))
      if (!a.pass) fail("audit " + a.name + ": " + a.lhs + " vs " + a.rhs);
  }
  r.found = analyze_singularities(c, true, TruncationPolicy::for_profile(exponent_profile(c)));
  MatchResult m = match_expected(r.found, expected_invariants(id));
  if (!m.ok) fail("expected singularities: " + m.detail);
  r.pass = r.failures.empty();
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

Json InstanceCheck::report() const {
  Json j;
  j["id"] = id.str();
  if (skipped) {
    j["status"] = "skipped";
    j["reason"] = skipReason;
    return j;
  }
  j["status"] = error ? "error" : pass ? "pass" : "fail";
  j["embedding"] = embedding;
  j["ledger"] = ledger;
  j["two_delta_max"] = twoDeltaMax;
  Json pts = Json::array();
  for (const auto& pa : found) pts.push_back({{"factor", poly_str(pa.factor)}, {"degree", pa.degree}, {"label", pa.label}, {"mu", pa.mu}});
  j["singularities"] = pts;
  if (!failures.empty()) j["failures"] = failures;
  return j;
}

std::vector<InstanceCheck> check_all(const std::vector<SeriesId>& ids, int jobs) {
  std::vector<InstanceCheck> out(ids.size());
  std::atomic<size_t> next{0};
  auto work = [&]() {
    for (size_t i; (i = next.fetch_add(1)) < ids.size();) {
      try {
        out[i] = check_instance(ids[i]);
      } catch (const std::exception& e) {
        out[i].id = ids[i];
        out[i].error = true;
        out[i].failures.push_back(std::string("error: ") + e.what());
      }
    }
  };
  int n = std::max(1, std::min<int>(jobs, int(ids.size())));
  if (n == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int k = 0; k < n; ++k) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  return out;
}

}  // namespace annuli
