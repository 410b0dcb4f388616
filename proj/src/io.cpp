#include "lexcut/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace lexcut {

namespace {

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<int64_t>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw SchemaError(where + ": expected an integer or a \"p/q\" string");
}

Json rational_to_json(const Rational& q) {
  if (is_integer(q) && q.get_num().fits_slong_p())
    return Json(static_cast<int64_t>(q.get_num().get_si()));
  return Json(to_string(q));
}

Int int_from_json(const Json& j, const std::string& where) {
  Rational q = rational_from_json(j, where);
  if (!is_integer(q)) throw SchemaError(where + ": expected an integer");
  return q.get_num();
}

QVector qvector_from_json(const Json& j, size_t n, const std::string& where) {
  if (!j.is_array() || j.size() != n)
    throw SchemaError(where + ": expected an array of length " + std::to_string(n));
  QVector out(n);
  for (size_t i = 0; i < n; ++i)
    out[i] = rational_from_json(j[i], where + "[" + std::to_string(i) + "]");
  return out;
}

ZVector zvector_from_json(const Json& j, size_t n, const std::string& where) {
  if (!j.is_array() || j.size() != n)
    throw SchemaError(where + ": expected an array of length " + std::to_string(n));
  ZVector out(n);
  for (size_t i = 0; i < n; ++i)
    out[i] = int_from_json(j[i], where + "[" + std::to_string(i) + "]");
  return out;
}

Json qvector_to_json(const QVector& v) {
  Json arr = Json::array();
  for (const Rational& q : v) arr.push_back(rational_to_json(q));
  return arr;
}

Json zvector_to_json(const ZVector& v) {
  Json arr = Json::array();
  for (const Int& z : v) arr.push_back(rational_to_json(Rational(z)));
  return arr;
}

Json inequality_to_json(const LinearInequality& h) {
  return Json{{"coeffs", qvector_to_json(h.coeffs)}, {"rhs", rational_to_json(h.rhs)}};
}

LinearInequality inequality_from_json(const Json& j, size_t n, const std::string& where) {
  if (!j.is_object() || !j.contains("coeffs") || !j.contains("rhs"))
    throw SchemaError(where + ": expected {coeffs, rhs}");
  return {qvector_from_json(j["coeffs"], n, where + ".coeffs"),
          rational_from_json(j["rhs"], where + ".rhs")};
}

}  // namespace

Instance parse_instance(const Json& doc) {
  if (!doc.is_object()) throw SchemaError("instance: expected a JSON object");
  if (!doc.contains("n")) throw SchemaError("instance.n: missing");
  if (!doc["n"].is_number_integer() || doc["n"].get<int64_t>() < 1)
    throw SchemaError("instance.n: expected a positive integer");
  size_t n = doc["n"].get<size_t>();

  if (!doc.contains("objective")) throw SchemaError("instance.objective: missing");
  ZVector objective = zvector_from_json(doc["objective"], n, "instance.objective");
  if (is_zero(objective)) throw SchemaError("instance.objective: must be nonzero");

  std::optional<LatticeBasis> basis;
  if (doc.contains("basis") && !doc["basis"].is_null()) {
    const Json& b = doc["basis"];
    if (!b.is_array() || b.size() != n) throw SchemaError("instance.basis: expected n rows");
    std::vector<ZVector> rows;
    for (size_t i = 0; i < n; ++i)
      rows.push_back(zvector_from_json(b[i], n, "instance.basis[" + std::to_string(i) + "]"));
    IntMatrix m = IntMatrix::from_rows(rows);
    if (!is_unimodular(m)) throw SchemaError("instance.basis: basis not unimodular");
    LatticeBasis lb(m);
    if (lb.row(0) != gcd_normalize(objective).first)
      throw SchemaError("instance.basis: first row must equal the normalized objective");
    basis = lb;
  }

  if (!doc.contains("set") || !doc["set"].is_object())
    throw SchemaError("instance.set: expected an object with one set kind");
  const Json& set = doc["set"];

  Instance inst{n, std::move(objective), std::move(basis), PointCloud{{}, n}};
  if (set.contains("polytope")) {
    const Json& p = set["polytope"];
    if (!p.contains("A") || !p.contains("b") || !p["A"].is_array() || !p["b"].is_array())
      throw SchemaError("instance.set.polytope: expected {A, b}");
    if (p["A"].size() != p["b"].size())
      throw SchemaError("instance.set.polytope: A and b row counts differ");
    Polytope poly{{}, n};
    for (size_t i = 0; i < p["A"].size(); ++i) {
      std::string where = "instance.set.polytope.A[" + std::to_string(i) + "]";
      poly.rows.push_back(LinearInequality{
          qvector_from_json(p["A"][i], n, where),
          rational_from_json(p["b"][i], "instance.set.polytope.b[" + std::to_string(i) + "]")});
    }
    if (!polytope_bounded(poly)) throw SchemaError("instance.set.polytope: polytope is unbounded");
    inst.set = std::move(poly);
  } else if (set.contains("pointcloud")) {
    const Json& p = set["pointcloud"];
    if (!p.contains("points") || !p["points"].is_array())
      throw SchemaError("instance.set.pointcloud: expected {points}");
    PointCloud cloud{{}, n};
    for (size_t i = 0; i < p["points"].size(); ++i)
      cloud.points.push_back(qvector_from_json(
          p["points"][i], n, "instance.set.pointcloud.points[" + std::to_string(i) + "]"));
    inst.set = std::move(cloud);
  } else if (set.contains("ball_box")) {
    const Json& p = set["ball_box"];
    for (const char* key : {"center", "radius_sq", "lower", "upper"})
      if (!p.contains(key))
        throw SchemaError(std::string("instance.set.ball_box.") + key + ": missing");
    BallBox bb{qvector_from_json(p["center"], n, "instance.set.ball_box.center"),
               rational_from_json(p["radius_sq"], "instance.set.ball_box.radius_sq"),
               qvector_from_json(p["lower"], n, "instance.set.ball_box.lower"),
               qvector_from_json(p["upper"], n, "instance.set.ball_box.upper"),
               {}};
    if (bb.radius_sq <= 0) throw SchemaError("instance.set.ball_box.radius_sq: must be positive");
    for (size_t i = 0; i < n; ++i)
      if (bb.lower[i] > bb.upper[i])
        throw SchemaError("instance.set.ball_box: lower bound exceeds upper bound");
    inst.set = std::move(bb);
  } else {
    throw SchemaError("instance.set: expected one of polytope | pointcloud | ball_box");
  }
  return inst;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open instance file: " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("JSON parse error: ") + e.what());
  }
  return parse_instance(doc);
}

Json instance_to_json(const Instance& inst) {
  Json doc;
  doc["n"] = inst.n;
  doc["objective"] = zvector_to_json(inst.objective);
  if (inst.basis) {
    Json rows = Json::array();
    for (size_t i = 0; i < inst.n; ++i) rows.push_back(zvector_to_json(inst.basis->row(i)));
    doc["basis"] = rows;
  }
  Json set;
  if (const auto* p = std::get_if<Polytope>(&inst.set)) {
    Json a = Json::array(), b = Json::array();
    for (const LinearInequality& row : p->rows) {
      a.push_back(qvector_to_json(row.coeffs));
      b.push_back(rational_to_json(row.rhs));
    }
    set["polytope"] = Json{{"A", a}, {"b", b}};
  } else if (const auto* pc = std::get_if<PointCloud>(&inst.set)) {
    Json pts = Json::array();
    for (const QVector& pt : pc->points) pts.push_back(qvector_to_json(pt));
    set["pointcloud"] = Json{{"points", pts}};
  } else {
    const auto& bb = std::get<BallBox>(inst.set);
    set["ball_box"] = Json{{"center", qvector_to_json(bb.center)},
                           {"radius_sq", rational_to_json(bb.radius_sq)},
                           {"lower", qvector_to_json(bb.lower)},
                           {"upper", qvector_to_json(bb.upper)}};
  }
  doc["set"] = set;
  return doc;
}

Json trace_to_json(const SolveOutcome& o) {
  Json doc;
  doc["algorithm"] = o.algorithm;
  size_t n = o.objective.size();
  doc["n"] = n;
  doc["objective"] = zvector_to_json(o.objective);
  if (o.basis) {
    Json rows = Json::array();
    for (size_t i = 0; i < n; ++i) rows.push_back(zvector_to_json(o.basis->row(i)));
    doc["basis"] = rows;
  }
  doc["translation"] = zvector_to_json(o.translation);
  doc["ell"] = zvector_to_json(o.ell);
  doc["ell_star"] = qvector_to_json(o.ell_star);
  doc["eps"] = rational_to_json(o.eps);
  doc["delta_int"] = rational_to_json(o.delta_int);

  Json outcome;
  if (o.feasible) {
    outcome["status"] = "optimal";
    outcome["point"] = qvector_to_json(o.point);
    outcome["value"] = rational_to_json(o.value);
  } else {
    outcome["status"] = "infeasible";
  }
  doc["outcome"] = outcome;

  Json iters = Json::array();
  for (const CutIteration& it : o.cut_trace) {
    Json j;
    switch (it.status) {
      case IterStatus::Cut: j["status"] = "cut"; break;
      case IterStatus::Optimal: j["status"] = "optimal"; break;
      case IterStatus::Infeasible: j["status"] = "infeasible"; break;
    }
    if (it.status != IterStatus::Infeasible) {
      j["xbar"] = qvector_to_json(it.xbar);
      j["xbar_up"] = qvector_to_json(it.xbar_up);
    }
    if (it.status == IterStatus::Cut) {
      j["k"] = *it.k;
      j["d"] = qvector_to_json(it.cut->d);
      j["cut"] = inequality_to_json(it.cut->ineq);
    }
    iters.push_back(j);
  }
  for (const EnumIteration& it : o.enum_trace) {
    Json j;
    j["alpha"] = zvector_to_json(it.alpha);
    j["i_star"] = it.i_star;
    j["sstar_empty"] = it.sstar_empty;
    if (it.xbar) j["xbar"] = qvector_to_json(*it.xbar);
    if (it.xbar_up) j["xbar_up"] = qvector_to_json(*it.xbar_up);
    iters.push_back(j);
  }
  doc["iterations"] = iters;

  doc["stats"] = Json{{"oracle_calls", o.stats.oracle_calls},
                      {"lp_solves", o.stats.lp_solves},
                      {"kelley_cuts", o.stats.kelley_cuts},
                      {"cuts", o.stats.cuts},
                      {"line2_execs", o.stats.line2_execs}};
  return doc;
}

SolveOutcome trace_from_json(const Json& doc) {
  SolveOutcome o;
  o.algorithm = doc.at("algorithm").get<std::string>();
  size_t n = doc.at("n").get<size_t>();
  o.objective = zvector_from_json(doc.at("objective"), n, "trace.objective");
  if (doc.contains("basis")) {
    std::vector<ZVector> rows;
    for (size_t i = 0; i < n; ++i)
      rows.push_back(zvector_from_json(doc["basis"][i], n, "trace.basis"));
    o.basis = LatticeBasis(IntMatrix::from_rows(rows));
  }
  o.translation = zvector_from_json(doc.at("translation"), n, "trace.translation");
  o.ell = zvector_from_json(doc.at("ell"), n, "trace.ell");
  o.ell_star = qvector_from_json(doc.at("ell_star"), n, "trace.ell_star");
  o.eps = rational_from_json(doc.at("eps"), "trace.eps");
  o.delta_int = rational_from_json(doc.at("delta_int"), "trace.delta_int");

  const Json& outcome = doc.at("outcome");
  o.feasible = outcome.at("status").get<std::string>() == "optimal";
  if (o.feasible) {
    o.point = qvector_from_json(outcome.at("point"), n, "trace.outcome.point");
    o.value = rational_from_json(outcome.at("value"), "trace.outcome.value");
  }

  for (const Json& j : doc.at("iterations")) {
    if (o.algorithm == "cut") {
      CutIteration it;
      std::string st = j.at("status").get<std::string>();
      it.status = st == "cut"       ? IterStatus::Cut
                  : st == "optimal" ? IterStatus::Optimal
                                    : IterStatus::Infeasible;
      if (it.status != IterStatus::Infeasible) {
        it.xbar = qvector_from_json(j.at("xbar"), n, "trace.iteration.xbar");
        it.xbar_up = qvector_from_json(j.at("xbar_up"), n, "trace.iteration.xbar_up");
      }
      if (it.status == IterStatus::Cut) {
        it.k = j.at("k").get<size_t>();
        LexCut cut;
        cut.k = *it.k;
        const Json& d = j.at("d");
        cut.d.resize(d.size());
        for (size_t i = 0; i < d.size(); ++i)
          cut.d[i] = rational_from_json(d[i], "trace.iteration.d");
        cut.ineq = inequality_from_json(j.at("cut"), n, "trace.iteration.cut");
        it.cut = cut;
      }
      o.cut_trace.push_back(std::move(it));
    } else {
      EnumIteration it;
      it.alpha = zvector_from_json(j.at("alpha"), n, "trace.iteration.alpha");
      it.i_star = j.at("i_star").get<size_t>();
      it.sstar_empty = j.at("sstar_empty").get<bool>();
      if (j.contains("xbar")) it.xbar = qvector_from_json(j.at("xbar"), n, "trace.iteration.xbar");
      if (j.contains("xbar_up"))
        it.xbar_up = qvector_from_json(j.at("xbar_up"), n, "trace.iteration.xbar_up");
      o.enum_trace.push_back(std::move(it));
    }
  }

  const Json& st = doc.at("stats");
  o.stats.oracle_calls = st.at("oracle_calls").get<long>();
  o.stats.lp_solves = st.at("lp_solves").get<long>();
  o.stats.kelley_cuts = st.at("kelley_cuts").get<long>();
  o.stats.cuts = st.at("cuts").get<long>();
  o.stats.line2_execs = st.at("line2_execs").get<long>();
  return o;
}

LinearInequality parse_inequality(const std::string& text, size_t n) {
  auto pos = text.find(">=");
  if (pos == std::string::npos) throw SchemaError("inequality must contain '>='");
  std::string lhs = text.substr(0, pos);
  std::string rhs_text = text.substr(pos + 2);
  auto strip = [](std::string s) {
    std::string out;
    for (char c : s)
      if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
  };
  lhs = strip(lhs);
  rhs_text = strip(rhs_text);
  if (rhs_text.empty()) throw SchemaError("inequality is missing a right-hand side");
  Rational rhs = parse_rational(rhs_text);

  QVector coeffs(n, Rational(0));
  size_t i = 0;
  bool any_term = false;
  while (i < lhs.size()) {
    int sign = 1;
    while (i < lhs.size() && (lhs[i] == '+' || lhs[i] == '-')) {
      if (lhs[i] == '-') sign = -sign;
      ++i;
    }
    if (i >= lhs.size()) break;
    std::string num;
    while (i < lhs.size() && (std::isdigit(static_cast<unsigned char>(lhs[i])) || lhs[i] == '/'))
      num += lhs[i++];
    if (i < lhs.size() && lhs[i] == '*') ++i;
    if (i < lhs.size() && lhs[i] == 'x') {
      ++i;
      std::string idx;
      while (i < lhs.size() && std::isdigit(static_cast<unsigned char>(lhs[i]))) idx += lhs[i++];
      if (idx.empty()) throw SchemaError("variable must be written as x<index>");
      size_t var = std::stoul(idx);
      if (var < 1 || var > n)
        throw SchemaError("variable index x" + idx + " outside 1..n");
      Rational coef = num.empty() ? Rational(1) : parse_rational(num);
      coeffs[var - 1] += Rational(sign) * coef;
      any_term = true;
    } else if (!num.empty()) {
      rhs -= Rational(sign) * parse_rational(num);  // constant term moves right
      any_term = true;
    } else {
      throw SchemaError("cannot parse inequality near position " + std::to_string(i));
    }
  }
  if (!any_term) throw SchemaError("inequality has an empty left-hand side");
  return {coeffs, rhs};
}

std::string format_inequality(const LinearInequality& h) {
  std::string out;
  for (size_t i = 0; i < h.coeffs.size(); ++i) {
    if (h.coeffs[i] == 0) continue;
    if (!out.empty()) out += " + ";
    out += to_string(h.coeffs[i]) + " x" + std::to_string(i + 1);
  }
  if (out.empty()) out = "0";
  return out + " >= " + to_string(h.rhs);
}

std::string format_point(const QVector& x) {
  std::string out = "(";
  for (size_t i = 0; i < x.size(); ++i) {
    if (i) out += ",";
    out += to_string(x[i]);
  }
  return out + ")";
}

ZVector parse_int_csv(const std::string& text) {
  ZVector out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw SchemaError("empty entry in integer list");
    try {
      out.emplace_back(tok);
    } catch (const std::invalid_argument&) {
      throw SchemaError("invalid integer literal: '" + tok + "'");
    }
  }
  if (out.empty()) throw SchemaError("empty integer list");
  return out;
}

LatticeBasis parse_basis_arg(const std::string& text, size_t n) {
  if (text == "identity") return LatticeBasis::identity(n);
  std::vector<ZVector> rows;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) rows.push_back(parse_int_csv(row));
  IntMatrix m = IntMatrix::from_rows(rows);
  if (m.n != n) throw SchemaError("basis has wrong dimension");
  if (!is_unimodular(m)) throw SchemaError("basis not unimodular");
  return LatticeBasis(m);
}

}  // namespace lexcut
