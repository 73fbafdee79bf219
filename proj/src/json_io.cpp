#include "growthopt/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace growthopt {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

nlohmann::json bound_to_json(double v) {
  if (v == std::numeric_limits<double>::infinity()) return "inf";
  if (v == -std::numeric_limits<double>::infinity()) return "-inf";
  return v;
}

double bound_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    throw std::invalid_argument("bad bound string: " + s);
  }
  return j.get<double>();
}

nlohmann::json vec_to_json(const Vec& v) { return nlohmann::json(v); }

Vec vec_from_json(const nlohmann::json& j) { return j.get<Vec>(); }

nlohmann::json matrix_to_json(const Matrix& A) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < A.rows; ++i) {
    nlohmann::json r = nlohmann::json::array();
    for (std::size_t j = 0; j < A.cols; ++j) r.push_back(A(i, j));
    rows.push_back(std::move(r));
  }
  return rows;
}

Matrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) return Matrix();
  std::size_t rows = j.size();
  std::size_t cols = j.at(0).size();
  Matrix A(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto& r = j.at(i);
    if (r.size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) A(i, c) = r.at(c).get<double>();
  }
  return A;
}

}  // namespace

nlohmann::json set_to_json(const FeasibleSet& set) {
  nlohmann::json j;
  switch (set.kind) {
    case SetKind::full_space:
      j["kind"] = "full";
      j["dim"] = set.dim;
      break;
    case SetKind::ball:
      j["kind"] = "ball";
      j["center"] = vec_to_json(set.center);
      j["radius"] = set.radius;
      break;
    case SetKind::box: {
      j["kind"] = "box";
      nlohmann::json lo = nlohmann::json::array(), hi = nlohmann::json::array();
      for (double v : set.lower) lo.push_back(bound_to_json(v));
      for (double v : set.upper) hi.push_back(bound_to_json(v));
      j["lower"] = std::move(lo);
      j["upper"] = std::move(hi);
      break;
    }
    case SetKind::simplex:
      j["kind"] = "simplex";
      j["dim"] = set.dim;
      break;
  }
  return j;
}

FeasibleSet set_from_json(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "full") return FeasibleSet::full(j.at("dim").get<std::size_t>());
  if (kind == "ball")
    return FeasibleSet::make_ball(vec_from_json(j.at("center")), j.at("radius").get<double>());
  if (kind == "box") {
    Vec lo, hi;
    for (const auto& e : j.at("lower")) lo.push_back(bound_from_json(e));
    for (const auto& e : j.at("upper")) hi.push_back(bound_from_json(e));
    return FeasibleSet::make_box(std::move(lo), std::move(hi));
  }
  if (kind == "simplex") return FeasibleSet::make_simplex(j.at("dim").get<std::size_t>());
  throw std::invalid_argument("unknown set kind: " + kind);
}

namespace {

nlohmann::json opt_to_json(const OptSet& opt) {
  nlohmann::json j;
  switch (opt.kind) {
    case OptSet::Kind::none:
      return nlohmann::json();
    case OptSet::Kind::point:
      j["kind"] = "point";
      j["point"] = vec_to_json(opt.point);
      break;
    case OptSet::Kind::box:
      j["kind"] = "box";
      j["lower"] = vec_to_json(opt.lower);
      j["upper"] = vec_to_json(opt.upper);
      break;
    case OptSet::Kind::counterexample_ray:
      j["kind"] = "counterexample_ray";
      break;
  }
  return j;
}

OptSet opt_from_json(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "point") return OptSet::at_point(vec_from_json(j.at("point")));
  if (kind == "box")
    return OptSet::in_box(vec_from_json(j.at("lower")), vec_from_json(j.at("upper")));
  if (kind == "counterexample_ray") return OptSet::ray();
  throw std::invalid_argument("unknown opt kind: " + kind);
}

}  // namespace

nlohmann::json problem_to_json(const ProblemInstance& p) {
  if (p.kind != "piecewise_linear" && p.kind != "least_squares" && p.kind != "logistic" &&
      p.kind != "counterexample")
    throw std::invalid_argument("instance kind is not serializable: " + p.kind);
  nlohmann::json j;
  j["kind"] = p.kind;
  if (!p.A.empty()) {
    j["A"] = matrix_to_json(p.A);
    j["b"] = vec_to_json(p.b);
  }
  j["set"] = set_to_json(p.set);
  j["f_slb"] = p.f_slb;
  if (p.kind == "least_squares") {
    j["lambda"] = p.lambda;
    j["p_norm"] = p.p_norm;
    j["r"] = p.r_exp;
  }
  if (p.smoothing_kind) j["smoothing"] = nlohmann::json{{"kind", *p.smoothing_kind}};

  nlohmann::json meta = nlohmann::json::object();
  if (p.metadata.f_star) meta["f_star"] = *p.metadata.f_star;
  if (p.metadata.lipschitz_M) meta["lipschitz_M"] = *p.metadata.lipschitz_M;
  if (p.metadata.lipschitz_L) meta["lipschitz_L"] = *p.metadata.lipschitz_L;
  if (p.metadata.growth_G) meta["growth_G"] = *p.metadata.growth_G;
  nlohmann::json opt = opt_to_json(p.metadata.opt);
  if (!opt.is_null()) meta["opt"] = std::move(opt);
  if (!meta.empty()) j["metadata"] = std::move(meta);
  return j;
}

ProblemInstance problem_from_json(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  std::optional<std::string> smoothing;
  if (j.contains("smoothing")) smoothing = j.at("smoothing").at("kind").get<std::string>();

  ProblemInstance p;
  if (kind == "piecewise_linear") {
    Matrix A = matrix_from_json(j.at("A"));
    Vec b = vec_from_json(j.at("b"));
    FeasibleSet set = j.contains("set") ? set_from_json(j.at("set")) : FeasibleSet::full(A.cols);
    if (smoothing == std::optional<std::string>("adjoint_entropy")) {
      p = make_softmax_box(A, b, set);
    } else {
      p = make_piecewise_linear(A, b, set);
      p.smoothing_kind = smoothing;
    }
  } else if (kind == "least_squares") {
    p = make_least_squares(matrix_from_json(j.at("A")), vec_from_json(j.at("b")),
                           j.value("lambda", 0.0), j.value("p_norm", 2),
                           j.value("r", 2.0));
    if (j.contains("set")) {
      p.set = set_from_json(j.at("set"));
      FeasibleSet s = p.set;
      p.projector = [s](const Vec& x) { return s.project(x); };
    }
  } else if (kind == "logistic") {
    Matrix A = matrix_from_json(j.at("A"));
    FeasibleSet set = j.contains("set") ? set_from_json(j.at("set")) : FeasibleSet::full(A.cols);
    p = make_logistic(A, vec_from_json(j.at("b")), set);
  } else if (kind == "counterexample") {
    p = make_counterexample_problem();
  } else {
    throw std::invalid_argument("unknown problem kind: " + kind);
  }

  if (j.contains("f_slb")) p.f_slb = j.at("f_slb").get<double>();

  if (j.contains("metadata")) {
    const auto& meta = j.at("metadata");
    if (meta.contains("f_star")) attach_f_star(p, meta.at("f_star").get<double>());
    if (meta.contains("lipschitz_M")) p.metadata.lipschitz_M = meta.at("lipschitz_M").get<double>();
    if (meta.contains("lipschitz_L")) p.metadata.lipschitz_L = meta.at("lipschitz_L").get<double>();
    if (meta.contains("growth_G")) p.metadata.growth_G = meta.at("growth_G").get<double>();
    if (meta.contains("opt")) p.metadata.opt = opt_from_json(meta.at("opt"));
  }
  return p;
}

ProblemInstance load_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open problem file: " + path);
  nlohmann::json j;
  in >> j;
  return problem_from_json(j);
}

void save_problem_file(const ProblemInstance& p, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write problem file: " + path);
  out << problem_to_json(p).dump(2) << "\n";
}

nlohmann::json report_to_json(const BoundReport& r) {
  nlohmann::json j;
  j["theorem"] = r.theorem;
  j["inputs"] = nlohmann::json(r.inputs);
  j["theoretical"] = r.theoretical;
  j["observed"] = r.observed;
  j["satisfied"] = r.satisfied;
  return j;
}

nlohmann::json certificate_to_json(const GrowthCertificate& c) {
  nlohmann::json j;
  j["g_lower"] = c.g_lower;
  j["sample_count"] = c.sample_count;
  j["witness"] = vec_to_json(c.witness);
  return j;
}

ExperimentConfig config_from_json(const nlohmann::json& j) {
  for (const char* key : {"problem", "algorithm", "eps_prime", "budget"})
    if (!j.contains(key))
      throw std::invalid_argument(std::string("config missing required field: ") + key);
  ExperimentConfig c;
  c.problem = j.at("problem");
  c.algorithm = j.at("algorithm").get<std::string>();
  c.eps_prime = j.at("eps_prime").get<double>();
  c.budget = j.at("budget").get<std::int64_t>();
  if (j.contains("x0")) c.x0 = j.at("x0");
  c.seed = j.value("seed", 0ULL);
  return c;
}

namespace {

const char* stream_name(Stream s) {
  switch (s) {
    case Stream::a:
      return "a";
    case Stream::b:
      return "b";
    case Stream::single:
      return "single";
  }
  return "single";
}

}  // namespace

void write_trace_csv(const SolverRun& run, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write trace file: " + path);
  out << "outer,inner,stream,iterate_count,f,f_best,restart\n";
  for (const TraceRecord& t : run.trace) {
    out << t.outer << ',' << t.inner << ',' << stream_name(t.stream) << ',' << t.iterate_count
        << ',' << format_double(t.f) << ',' << format_double(t.f_best) << ',' << t.restart
        << '\n';
  }
}

std::vector<CsvTraceRow> read_trace_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open trace file: " + path);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty trace file: " + path);
  if (line != "outer,inner,stream,iterate_count,f,f_best,restart")
    throw std::runtime_error("unexpected trace header in " + path);
  std::vector<CsvTraceRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string field;
    CsvTraceRow r;
    std::getline(ss, field, ',');
    r.outer = std::stoll(field);
    std::getline(ss, field, ',');
    r.inner = std::stoll(field);
    std::getline(ss, r.stream, ',');
    std::getline(ss, field, ',');
    r.iterate_count = std::stoll(field);
    std::getline(ss, field, ',');
    r.f = std::stod(field);
    std::getline(ss, field, ',');
    r.f_best = std::stod(field);
    std::getline(ss, field, ',');
    r.restart = std::stoi(field);
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace growthopt
